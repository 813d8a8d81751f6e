"""Session-oriented HTTP service for interactive dispute editing.

Each session holds one document, a monotonically increasing revision and an
append-only edit log; replaying the log over the initial document always
reproduces the current state. Edits use optimistic concurrency: a client
sends the revision it saw, and a stale revision is rejected without any
state change. Solve and explain results carry the revision they were
computed at and match the command-line output byte for byte.
"""

import json
import logging
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .core import Semantics
from .errors import (
    DisputeKitError,
    RevisionConflict,
    SchemaError,
    UnknownSession,
)
from .explain import (
    DisputeNode,
    apply_edits,
    compute_standings,
    dispute_tree,
    reduce_framework,
    render_dispute_tree,
    render_status_report,
    status_report,
    what_if,
)
from .formats import (
    Document,
    ProblemTask,
    TaskKind,
    delta_to_obj,
    document_from_obj,
    document_of,
    edit_from_obj,
    edit_to_obj,
    run_task,
    serialize_document,
    standing_to_obj,
)
from .variants import AudienceOrder

log = logging.getLogger("disputekit.service")

_STATUS_OF_CODE = {
    "unknown_session": 404,
    "revision_conflict": 409,
    "incompatible_task": 400,
    "unknown_argument": 404,
}


class Session:
    """Single dispute under edit; a per-session lock serializes writers."""

    def __init__(self, session_id: str, document: Document):
        self.id = session_id
        self.initial = document
        self.document = document
        self.revision = 0
        self.edit_log: list[dict] = []
        self.lock = threading.Lock()

    def snapshot(self) -> tuple[Document, int]:
        with self.lock:
            return self.document, self.revision


class SessionStore:
    def __init__(self, journal_dir: str | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._journal_dir = Path(journal_dir) if journal_dir else None
        if self._journal_dir:
            self._journal_dir.mkdir(parents=True, exist_ok=True)

    def create(self, document: Document) -> Session:
        session = Session(uuid.uuid4().hex, document)
        with self._lock:
            self._sessions[session.id] = session
        self._journal(session, {"document": json.loads(serialize_document(document))})
        return session

    def get(self, session_id: str) -> Session:
        with self._lock:
            session = self._sessions.get(session_id)
        if session is None:
            raise UnknownSession(session_id)
        return session

    def apply(self, session_id: str, expected_revision: int, edits, semantics: Semantics):
        session = self.get(session_id)
        with session.lock:
            if session.revision != expected_revision:
                raise RevisionConflict(expected_revision, session.revision)
            doc = session.document
            delta = what_if(doc.framework, edits, semantics, doc.audience)
            framework, audience = apply_edits(doc.framework, edits, doc.audience)
            session.document = document_of(framework, audience)
            session.revision += 1
            entry = {
                "ts": datetime.now(timezone.utc).isoformat(),
                "revision": session.revision,
                "edits": [edit_to_obj(e) for e in edits],
            }
            session.edit_log.append(entry)
            self._journal(session, entry)
            return session.revision, delta

    def replayed_document(self, session_id: str) -> Document:
        """Rebuild the current document from the initial one plus the log."""
        session = self.get(session_id)
        with session.lock:
            document = session.initial
            entries = list(session.edit_log)
        for entry in entries:
            edits = [edit_from_obj(o) for o in entry["edits"]]
            framework, audience = apply_edits(document.framework, edits, document.audience)
            document = document_of(framework, audience)
        return document

    def _journal(self, session: Session, entry: dict) -> None:
        if not self._journal_dir:
            return
        path = self._journal_dir / f"{session.id}.jsonl"
        with path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(entry, ensure_ascii=False) + "\n")


def _tree_to_obj(node: DisputeNode) -> dict:
    return {
        "argument": node.argument,
        "role": node.role.value,
        "countered": node.countered,
        "children": [_tree_to_obj(c) for c in node.children],
    }


def _report_to_obj(report) -> dict:
    return {
        "semantics": report.semantics.value,
        "extension_count": report.extension_count,
        "notes": list(report.notes),
        "entries": [
            {
                "id": e.id,
                "label": e.label,
                "status": e.status.value,
                "credulous": e.credulous,
                "skeptical": e.skeptical,
                "defeaters": list(e.defeaters),
                "defenders": {a: list(ds) for a, ds in sorted(e.defenders.items())},
                **({"condition": e.condition} if e.condition is not None else {}),
                **({"external": e.external} if e.external is not None else {}),
            }
            for e in report.entries
        ],
    }


def _parse_semantics(obj, default: str = "GR") -> Semantics:
    raw = obj if obj is not None else default
    try:
        return Semantics(raw)
    except ValueError:
        raise SchemaError("$.semantics", f"unknown semantics {raw!r}")


def _parse_audience(obj) -> AudienceOrder | None:
    if obj is None:
        return None
    if not isinstance(obj, list) or not all(isinstance(v, str) for v in obj):
        raise SchemaError("$.audience", "must be a list of value names")
    return AudienceOrder(obj)


def create_app(journal_dir: str | None = None) -> FastAPI:
    """Build the HTTP application; state lives in the returned app instance."""
    app = FastAPI(title="disputekit session service")
    store = SessionStore(journal_dir)
    app.state.store = store

    @app.exception_handler(DisputeKitError)
    async def on_error(request: Request, exc: DisputeKitError):
        status = _STATUS_OF_CODE.get(exc.code, 422)
        return JSONResponse(
            status_code=status, content={"code": exc.code, "detail": str(exc)}
        )

    @app.post("/sessions", status_code=201)
    async def create_session(body: dict):
        raw = body.get("document")
        if raw is None:
            raise SchemaError("$.document", "missing document")
        document = document_from_obj(raw)
        session = store.create(document)
        return {"session_id": session.id, "revision": session.revision}

    @app.get("/sessions/{session_id}")
    async def get_session(session_id: str):
        document, revision = store.get(session_id).snapshot()
        return {
            "session_id": session_id,
            "revision": revision,
            "document": json.loads(serialize_document(document)),
        }

    @app.post("/sessions/{session_id}/edits")
    async def post_edits(session_id: str, body: dict):
        expected = body.get("expected_revision")
        if not isinstance(expected, int):
            raise SchemaError("$.expected_revision", "must be an integer")
        raw_edits = body.get("edits")
        if not isinstance(raw_edits, list):
            raise SchemaError("$.edits", "must be a list of edit objects")
        edits = [edit_from_obj(o, f"$.edits[{i}]") for i, o in enumerate(raw_edits)]
        semantics = _parse_semantics(body.get("semantics"))
        revision, delta = store.apply(session_id, expected, edits, semantics)
        return {"revision": revision, "delta": delta_to_obj(delta)}

    @app.post("/sessions/{session_id}/solve")
    async def solve(session_id: str, body: dict):
        document, revision = store.get(session_id).snapshot()
        semantics = _parse_semantics(body.get("semantics"))
        task_name = body.get("task", "SE")
        try:
            task_kind = TaskKind(task_name)
        except ValueError:
            raise SchemaError("$.task", f"unknown task {task_name!r}")
        audience = _parse_audience(body.get("audience"))
        require_backing = bool(body.get("require_backing", False))
        problem = ProblemTask(task_kind, semantics, body.get("argument"))
        output = run_task(document, problem, audience, require_backing)
        standings = compute_standings(
            document.framework, semantics, audience or document.audience, require_backing
        )
        return {
            "revision": revision,
            "output": output,
            "standings": {a: standing_to_obj(s) for a, s in sorted(standings.items())},
        }

    @app.get("/sessions/{session_id}/explain/{argument}")
    async def explain_argument(session_id: str, argument: str, verbosity: int = 1):
        document, revision = store.get(session_id).snapshot()
        f = reduce_framework(document.framework, document.audience)
        tree = dispute_tree(f, argument)
        return {
            "revision": revision,
            "argument": argument,
            "proponent_wins": tree.proponent_wins,
            "tree": _tree_to_obj(tree.root),
            "output": render_dispute_tree(tree, f, verbosity),
        }

    @app.get("/sessions/{session_id}/report")
    async def report(session_id: str, semantics: str = "GR", verbosity: int = 1):
        document, revision = store.get(session_id).snapshot()
        sem = _parse_semantics(semantics)
        rep = status_report(document.framework, sem, document.audience)
        return {
            "revision": revision,
            "report": _report_to_obj(rep),
            "output": render_status_report(rep, verbosity),
        }

    @app.post("/sessions/{session_id}/whatif")
    async def whatif(session_id: str, body: dict):
        document, revision = store.get(session_id).snapshot()
        raw_edits = body.get("edits")
        if not isinstance(raw_edits, list):
            raise SchemaError("$.edits", "must be a list of edit objects")
        edits = [edit_from_obj(o, f"$.edits[{i}]") for i, o in enumerate(raw_edits)]
        semantics = _parse_semantics(body.get("semantics"))
        audience = _parse_audience(body.get("audience"))
        delta = what_if(
            document.framework, edits, semantics, audience or document.audience
        )
        return {"revision": revision, "delta": delta_to_obj(delta)}

    return app
