"""Bundled demonstration disputes used by tests, docs and the demo UI.

Four small legal scenarios, one per framework kind: a road-accident
liability dispute (plain attack graph), a software-contract breach
(attacks plus supports), a bank-refund claim (value-annotated arguments
judged by an audience ranking) and a self-defense criminal case
(acceptance conditions with externally proven facts).
"""

from .adf import DialecticalFramework, parse_condition
from .core import Argument, ArgumentationFramework, new_framework
from .structured import CaseFile, ToulminArgument
from .variants import AudienceOrder, BipolarFramework, ValuedFramework

_TRAFFIC_LABELS = {
    "P1": "the driver is responsible for the accident",
    "D1": "the pedestrian is responsible for the accident",
    "D2": "the pedestrian ignored the red light",
    "P2": "the pedestrian is a child, traffic rules cannot be held against them",
    "D3": "the pedestrian stepped out without warning",
    "P3": "the driver still had time to brake",
    "D4": "the driver reacted as well as anyone could",
    "P4": "the driver was not paying attention",
    "P5": "the driver was over the speed limit",
}

_TRAFFIC_ATTACKS_PRINTED = (
    ("D2", "P1"),
    ("P2", "D2"),
    ("D3", "P1"),
    ("P3", "D3"),
    ("D4", "P3"),
    ("D4", "P4"),
    ("P4", "D4"),
    ("P5", "D1"),
)


def traffic() -> ArgumentationFramework:
    """Road-accident dispute, including the mutual attack between the two main claims."""
    attacks = _TRAFFIC_ATTACKS_PRINTED + (("P1", "D1"), ("D1", "P1"))
    return new_framework(
        [Argument(i, label) for i, label in _TRAFFIC_LABELS.items()], attacks
    )


def traffic_printed() -> ArgumentationFramework:
    """Variant without the main-claim cycle, as the flat attack list has it."""
    return new_framework(
        [Argument(i, label) for i, label in _TRAFFIC_LABELS.items()],
        _TRAFFIC_ATTACKS_PRINTED,
    )


def traffic_case_file() -> CaseFile:
    """The road-accident dispute recast as structured arguments whose
    rebuttals mirror the attack relation."""
    f = traffic()
    party = {i: ("pedestrian" if i.startswith("P") else "driver") for i in f.arguments}
    args = [
        ToulminArgument(
            id=arg_id,
            claim=_TRAFFIC_LABELS[arg_id],
            premises=("police report of the accident",),
            warrant="road users are liable for the consequences of breaking traffic rules",
            backing="traffic code on right of way and due care",
            rebuttals=tuple(sorted(f.attackers_of(arg_id))),
        )
        for arg_id in f.sorted_ids()
    ]
    return CaseFile.of(args, party)


_COPYRIGHT_LABELS = {
    "H1": "the blog post infringed the book's copyright",
    "B1": "quoting the excerpts was lawful use",
    "B2": "the post credited the book and its author",
    "B3": "the excerpts were short and used for commentary",
    "H2": "the excerpts gave away the core of the book",
    "H3": "the post competed with sales of the book",
    "B4": "the post had no commercial purpose",
    "H4": "book sales dropped after the post, causing losses",
    "H5": "the blog carries paid ads, so the post earned money",
}


def copyright_infringement() -> ArgumentationFramework:
    """Copyright dispute between a publisher (H*) and a blogger (B*)."""
    attacks = (
        ("B1", "H1"),
        ("H1", "B1"),
        ("B2", "H1"),
        ("B3", "H1"),
        ("H2", "B3"),
        ("H3", "B1"),
        ("B4", "H3"),
        ("H4", "B4"),
        ("H5", "B4"),
    )
    return new_framework(
        [Argument(i, label) for i, label in _COPYRIGHT_LABELS.items()], attacks
    )


_CONTRACT_LABELS = {
    "C1": "the client may reduce the payment for incomplete delivery",
    "F1": "the work met the agreement, full payment is owed",
    "C2": "the delivered software misses agreed criteria",
    "F2": "the software is up to industry standards",
    "F3": "the contract left the acceptance criteria vague",
    "C3": "the contractor hid behind the vague terms to underdeliver",
    "F4": "the contract names no penalty for non-conformities",
    "C4": "blocking bugs keep the software from working",
    "C5": "the client paid a third party to repair the software",
}


def contract_breach() -> BipolarFramework:
    """Software-contract dispute between client (C*) and freelancer (F*)."""
    attacks = (
        ("F1", "C1"),
        ("C1", "F1"),
        ("F3", "C2"),
        ("C3", "F1"),
        ("F4", "C1"),
        ("C4", "F1"),
    )
    supports = (
        ("C2", "C1"),
        ("F2", "F1"),
        ("C3", "F3"),
        ("F4", "C2"),
        ("C4", "C1"),
        ("C5", "C4"),
    )
    base = new_framework(
        [Argument(i, label) for i, label in _CONTRACT_LABELS.items()], attacks
    )
    return BipolarFramework(base, supports)


_BANK_LABELS = {
    "C1": "the customer is owed a full refund",
    "B1": "the bank owes no refund",
    "C2": "the bank failed to keep the account safe",
    "B2": "the bank repeatedly warned about phishing",
    "C3": "the bank's security checks were too weak",
    "B3": "the payment passed proper authentication",
    "C4": "the bank missed clear signs of a suspicious payment",
    "B4": "the customer was careless with the credentials",
    "C5": "the account was taken over by an attacker",
}

_BANK_VALUES = {
    "C1": "customer-protection",
    "C2": "customer-protection",
    "C5": "customer-protection",
    "B2": "compliance",
    "B1": "fairness",
    "B3": "fairness",
    "C3": "system-security",
    "C4": "system-security",
    "B4": "due-diligence",
}


def bank_refund() -> ValuedFramework:
    """Unauthorized-payment refund dispute; each argument promotes a value."""
    attacks = (
        ("C1", "B1"),
        ("B1", "C1"),
        ("C2", "B1"),
        ("B2", "C2"),
        ("C3", "B1"),
        ("B3", "C1"),
        ("C4", "B3"),
        ("B4", "C1"),
        ("C5", "B4"),
        ("B4", "C5"),
    )
    base = new_framework(
        [Argument(i, label) for i, label in _BANK_LABELS.items()], attacks
    )
    return ValuedFramework(base, _BANK_VALUES)


def bank_audience() -> AudienceOrder:
    """The court ranking used in the refund case, most important value first."""
    return AudienceOrder(
        [
            "customer-protection",
            "compliance",
            "fairness",
            "system-security",
            "due-diligence",
        ]
    )


_SELF_DEFENSE_LABELS = {
    "B1": "the accused is liable for the assault",
    "A1": "the accused acted in lawful self-defense",
    "A2": "the complainant threatened the accused with a weapon",
    "A3": "the accused faced an immediate attack",
    "B2": "the accused used force beyond the threat",
    "B3": "the complainant was retreating when struck",
    "B4": "the complainant's injuries far exceed the accused's",
}

_SELF_DEFENSE_CONDITIONS = {
    "B1": "(B2 & !A3) & !A1",
    "A1": "(A3 & !B2) | (A3 & !B1)",
    "A3": "A2 & !B3",
    "B2": "B3 | B4",
}

_SELF_DEFENSE_EXTERNALS = {"A2": True, "B3": True, "B4": True}


def self_defense() -> DialecticalFramework:
    """Assault case: acceptance conditions over the parties' claims, with
    three facts settled by external evidence."""
    ids = frozenset(_SELF_DEFENSE_LABELS)
    conditions = {
        arg_id: parse_condition(text, ids)
        for arg_id, text in _SELF_DEFENSE_CONDITIONS.items()
    }
    return DialecticalFramework(
        [Argument(i, label) for i, label in _SELF_DEFENSE_LABELS.items()],
        conditions,
        _SELF_DEFENSE_EXTERNALS,
    )
