"""Exception types raised across the workbench."""


class DisputeKitError(Exception):
    """Base class for all workbench errors."""

    code = "error"


class InvalidArgumentId(DisputeKitError):
    code = "invalid_argument_id"

    def __init__(self, arg_id: str, reason: str):
        self.arg_id = arg_id
        self.reason = reason
        super().__init__(f"invalid argument id {arg_id!r}: {reason}")


class DuplicateArgumentId(DisputeKitError):
    code = "duplicate_argument_id"

    def __init__(self, arg_id: str):
        self.arg_id = arg_id
        super().__init__(f"duplicate argument id {arg_id!r}")


class UnknownArgument(DisputeKitError):
    code = "unknown_argument"

    def __init__(self, arg_id: str):
        self.arg_id = arg_id
        super().__init__(f"unknown argument {arg_id!r}")


class UnknownArgumentInAttack(DisputeKitError):
    code = "unknown_argument_in_attack"

    def __init__(self, pair: tuple[str, str]):
        self.pair = pair
        super().__init__(f"attack {pair!r} references an undeclared argument")


class TooLarge(DisputeKitError):
    """Brute-force enumeration refused: the framework exceeds the subset-scan bound."""

    code = "too_large"

    def __init__(self, n: int, bound: int):
        self.n = n
        self.bound = bound
        super().__init__(f"{n} arguments exceed the exhaustive-enumeration bound of {bound}")


class CyclicSupport(DisputeKitError):
    code = "cyclic_support"

    def __init__(self, path: list[str]):
        self.path = path
        super().__init__("support relation is cyclic: " + " => ".join(path))


class SupportAttackOverlap(DisputeKitError):
    code = "support_attack_overlap"

    def __init__(self, pair: tuple[str, str]):
        self.pair = pair
        super().__init__(f"pair {pair!r} is declared both as attack and as support")


class UnrankedValue(DisputeKitError):
    code = "unranked_value"

    def __init__(self, name: str):
        self.name = name
        super().__init__(f"value {name!r} is not ranked by the audience order")


class BadAudienceOrder(DisputeKitError):
    code = "bad_audience_order"

    def __init__(self, reason: str):
        super().__init__(f"invalid audience order: {reason}")


class IncompleteValueMapping(DisputeKitError):
    code = "incomplete_value_mapping"

    def __init__(self, missing):
        self.missing = sorted(missing)
        super().__init__("arguments without a value: " + ", ".join(self.missing))


class ConditionSyntaxError(DisputeKitError):
    """Acceptance-condition text failed to parse."""

    code = "condition_syntax"

    def __init__(self, position: int, expected: str):
        self.position = position
        self.expected = expected
        super().__init__(f"syntax error at position {position}: expected {expected}")


class UndeclaredArgument(DisputeKitError):
    code = "undeclared_argument"

    def __init__(self, arg_id: str):
        self.arg_id = arg_id
        super().__init__(f"condition references undeclared argument {arg_id!r}")


class MissingAssignment(DisputeKitError):
    code = "missing_assignment"

    def __init__(self, arg_id: str):
        self.arg_id = arg_id
        super().__init__(f"no truth value assigned for {arg_id!r}")


class MissingCondition(DisputeKitError):
    code = "missing_condition"

    def __init__(self, arg_id: str):
        self.arg_id = arg_id
        super().__init__(f"argument {arg_id!r} is neither external nor given a condition")


class ConflictingExternal(DisputeKitError):
    code = "conflicting_external"

    def __init__(self, arg_id: str):
        self.arg_id = arg_id
        super().__init__(f"external argument {arg_id!r} carries a conflicting acceptance condition")


class InvalidCase(DisputeKitError):
    """Case file cannot be flattened; carries the blocking violations."""

    code = "invalid_case"

    def __init__(self, violations):
        self.violations = list(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"case file is invalid: {detail}")


class EditConflict(DisputeKitError):
    code = "edit_conflict"


class RevisionConflict(DisputeKitError):
    code = "revision_conflict"

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"revision conflict: expected {expected}, session is at {actual}")


class UnknownSession(DisputeKitError):
    code = "unknown_session"

    def __init__(self, session_id: str):
        self.session_id = session_id
        super().__init__(f"unknown session {session_id!r}")


class IncompatibleTask(DisputeKitError):
    code = "incompatible_task"


class SchemaError(DisputeKitError):
    """Extended-JSON document violates the schema."""

    code = "schema_error"

    def __init__(self, path: str, reason: str):
        self.path = path
        self.reason = reason
        super().__init__(f"schema error at {path}: {reason}")


class FormatError(DisputeKitError):
    code = "format_error"


class MissingSeparator(FormatError):
    code = "missing_separator"

    def __init__(self):
        super().__init__("TGF input has no '#' separator line")


class BadLine(FormatError):
    code = "bad_line"

    def __init__(self, line_no: int, text: str):
        self.line_no = line_no
        self.text = text
        super().__init__(f"cannot parse line {line_no}: {text!r}")


class ApxSyntaxError(FormatError):
    code = "apx_syntax"

    def __init__(self, position: int, detail: str):
        self.position = position
        self.detail = detail
        super().__init__(f"APX syntax error at position {position}: {detail}")
