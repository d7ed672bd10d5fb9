"""Command-line front end.

Ring expressions follow the grammar

    EXPR := TERM ("x" TERM)*
    TERM := "Z/" INT | "GF(" INT "^" INT ")" | "M" INT "(" EXPR ")" | "@" NAME

with whitespace allowed between tokens and "x" the left-associative direct
product.  An expression of "-" reads a serialized ring from stdin instead.

Exit codes: 0 success, 1 usage or input error, 2 equivalence cross-check
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .catalog import get_ring, survey_set
from .classifier import (
    DESCRIPTIONS,
    NON_EQUIVALENT,
    S2NC_CLASS,
    ZNC_CLASS,
    CharacterizationId,
    CharacterizationReport,
    cross_check,
)
from .decomposer import Kind, find_decomposition
from .rings import (
    DEFAULT_ORDER_CAP,
    OrderCapExceededError,
    RingError,
    RingTable,
    characteristic,
    make_gf,
    make_matrix_ring,
    make_product,
    make_zn,
    ring_from_json,
)


@dataclass(frozen=True)
class Zn:
    n: int


@dataclass(frozen=True)
class GF:
    p: int
    k: int


@dataclass(frozen=True)
class Mat:
    k: int
    inner: "RingExpr"


@dataclass(frozen=True)
class Prod:
    left: "RingExpr"
    right: "RingExpr"


@dataclass(frozen=True)
class Named:
    name: str


RingExpr = Zn | GF | Mat | Prod | Named

_NAME_CHARS = set(
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_.-"
)


class RingExprError(ValueError):
    """Parse failure, carrying the byte offset and the expected tokens."""

    def __init__(self, offset: int, expected: tuple[str, ...]):
        self.offset = offset
        self.expected = expected
        super().__init__(
            f"parse error at offset {offset}: expected {' or '.join(expected)}"
        )


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def fail(self, *expected: str):
        raise RingExprError(self.pos, expected)

    def literal(self, token: str) -> bool:
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        self.skip_ws()
        if not self.literal(token):
            self.fail(token)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.fail("integer")
        return int(self.text[start : self.pos])

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _NAME_CHARS:
            self.pos += 1
        if self.pos == start:
            self.fail("name")
        return self.text[start : self.pos]

    def term(self) -> RingExpr:
        self.skip_ws()
        if self.literal("Z/"):
            return Zn(self.integer())
        if self.literal("GF("):
            p = self.integer()
            self.expect("^")
            k = self.integer()
            self.expect(")")
            return GF(p, k)
        if self.literal("M"):
            k = self.integer()
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Mat(k, inner)
        if self.literal("@"):
            return Named(self.name())
        self.fail("Z/", "GF(", "M", "@")

    def expr(self) -> RingExpr:
        node = self.term()
        while True:
            save = self.pos
            self.skip_ws()
            if self.pos < len(self.text) and self.text[self.pos] == "x":
                self.pos += 1
                node = Prod(node, self.term())
            else:
                self.pos = save
                return node


def parse_ring_expr(text: str) -> RingExpr:
    parser = _Parser(text)
    node = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.fail("x", "end of input")
    return node


def format_ring_expr(expr: RingExpr) -> str:
    if isinstance(expr, Zn):
        return f"Z/{expr.n}"
    if isinstance(expr, GF):
        return f"GF({expr.p}^{expr.k})"
    if isinstance(expr, Mat):
        return f"M{expr.k}({format_ring_expr(expr.inner)})"
    if isinstance(expr, Prod):
        return f"{format_ring_expr(expr.left)} x {format_ring_expr(expr.right)}"
    if isinstance(expr, Named):
        return f"@{expr.name}"
    raise TypeError(f"not a ring expression: {expr!r}")


def build_ring(expr: RingExpr, order_cap: int = DEFAULT_ORDER_CAP) -> RingTable:
    if isinstance(expr, Zn):
        if expr.n > order_cap:
            raise OrderCapExceededError(
                f"order {expr.n} exceeds cap {order_cap}"
            )
        return make_zn(expr.n)
    if isinstance(expr, GF):
        return make_gf(expr.p, expr.k, order_cap=order_cap)
    if isinstance(expr, Mat):
        return make_matrix_ring(build_ring(expr.inner, order_cap), expr.k, order_cap)
    if isinstance(expr, Prod):
        return make_product(
            build_ring(expr.left, order_cap),
            build_ring(expr.right, order_cap),
            order_cap,
        )
    if isinstance(expr, Named):
        ring = get_ring(expr.name).ring
        if ring.order > order_cap:
            raise OrderCapExceededError(
                f"order {ring.order} exceeds cap {order_cap}"
            )
        return ring
    raise TypeError(f"not a ring expression: {expr!r}")


_SHAPE_TOKENS = {
    "e": Kind.IDEMPOTENT,
    "t": Kind.TRIPOTENT,
    "p5": Kind.FIVE_POTENT,
    "v": Kind.INVOLUTION,
}


def parse_shape(text: str) -> tuple[Kind, ...]:
    """Comma list over {e, t, p5, v}; empty means "is it nilpotent"."""
    text = text.strip()
    if not text:
        return ()
    kinds = []
    for token in text.split(","):
        token = token.strip()
        if token not in _SHAPE_TOKENS:
            known = ", ".join(sorted(_SHAPE_TOKENS))
            raise ValueError(f"unknown shape kind {token!r}; known: {known}")
        kinds.append(_SHAPE_TOKENS[token])
    return tuple(kinds)


def _resolve_ring(expr_text: str, order_cap: int) -> RingTable:
    if expr_text.strip() == "-":
        ring = ring_from_json(json.load(sys.stdin))
        if ring.order > order_cap:
            raise OrderCapExceededError(
                f"order {ring.order} exceeds cap {order_cap}"
            )
        return ring
    return build_ring(parse_ring_expr(expr_text), order_cap)


_ID_ORDER = list(CharacterizationId)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def render_report(report: CharacterizationReport, ring: RingTable) -> str:
    lines = [
        f"ring: {report.ring}  (order {ring.order}, characteristic {characteristic(ring)})",
        f"strongly 2-nil-clean: {_yes(report.predicates[CharacterizationId.S2NC_A3].holds)}"
        f"   Zhou nil-clean: {_yes(report.predicates[CharacterizationId.ZNC_A5].holds)}",
        "",
        f"{'predicate':<16} {'holds':<6} {'witness':<8} meaning",
    ]
    def block(ids):
        for cid in _ID_ORDER:
            if cid not in ids:
                continue
            res = report.predicates[cid]
            witness = "-" if res.witness is None else str(res.witness)
            lines.append(
                f"{cid.value:<16} {_yes(res.holds):<6} {witness:<8} {DESCRIPTIONS[cid]}"
            )
    lines.append("equivalent forms of strongly 2-nil-clean:")
    block(S2NC_CLASS)
    lines.append("equivalent forms of Zhou nil-clean:")
    block(ZNC_CLASS)
    lines.append("strictly weaker forms (never members of the classes above):")
    block(NON_EQUIVALENT)
    lines.append("")
    s2nc_note = (
        "consistent"
        if report.s2nc_consistent
        else "INCONSISTENT (disagreeing: "
        + ", ".join(cid.value for cid in report.s2nc_disagreeing)
        + ")"
    )
    znc_note = (
        "consistent"
        if report.znc_consistent
        else "INCONSISTENT (disagreeing: "
        + ", ".join(cid.value for cid in report.znc_disagreeing)
        + ")"
    )
    lines.append(f"equivalences: S2NC {s2nc_note}; ZNC {znc_note}")
    lines.append(
        f"separations: S2NC-SQ-4E exceeds its class: {_yes(report.sq_4e_exceeds_s2nc)};"
        f" ZNC-SQ-5P exceeds its class: {_yes(report.sq_5p_exceeds_znc)}"
    )
    return "\n".join(lines)


def _cmd_classify(args) -> int:
    ring = _resolve_ring(args.expr, args.max_order_cap)
    report = cross_check(ring)
    if args.json:
        print(json.dumps(report.to_json(), indent=2))
    else:
        print(render_report(report, ring))
    return 0 if report.consistent else 2


def _cmd_decompose(args) -> int:
    ring = _resolve_ring(args.expr, args.max_order_cap)
    if not (0 <= args.element < ring.order):
        raise ValueError(
            f"element index {args.element} out of range for order {ring.order}"
        )
    shape = parse_shape(args.shape)
    witness = find_decomposition(ring, args.element, shape)
    if args.json:
        payload = {
            "ring": ring.label,
            "target": args.element,
            "shape": [kind.value for kind in shape],
            "witness": None
            if witness is None
            else {
                "parts": list(witness.parts),
                "kinds": [kind.value for kind in witness.kinds],
                "nilpotent": witness.nilpotent,
            },
        }
        print(json.dumps(payload, indent=2))
    elif witness is None:
        print("none")
    else:
        pieces = [
            f"{part} ({kind.value})"
            for part, kind in zip(witness.parts, witness.kinds)
        ]
        pieces.append(f"{witness.nilpotent} (nilpotent)")
        print(f"{args.element} = " + " + ".join(pieces))
    return 0


def _cmd_survey(args) -> int:
    if args.max_order > args.max_order_cap:
        raise ValueError(
            f"max_order {args.max_order} exceeds order cap {args.max_order_cap}"
        )
    entries = survey_set(args.max_order)
    reports = [(entry, cross_check(entry.ring)) for entry in entries]
    mismatches = []
    for entry, report in reports:
        for cid_value, expected in entry.expected.items():
            actual = report.predicates[CharacterizationId(cid_value)].holds
            if actual != expected:
                mismatches.append((entry.name, cid_value, expected, actual))
    if args.json:
        print(json.dumps([report.to_json() for _, report in reports], indent=2))
    else:
        print(_survey_table(reports))
    all_consistent = all(report.consistent for _, report in reports)
    for name, cid_value, expected, actual in mismatches:
        print(
            f"expected-outcome mismatch: {name} {cid_value}: "
            f"expected {expected}, computed {actual}",
            file=sys.stderr,
        )
    return 0 if all_consistent and not mismatches else 2


def _survey_table(reports) -> str:
    lines = ["columns: " + " ".join(cid.value for cid in _ID_ORDER), ""]
    width = max(len(entry.name) for entry, _ in reports) + 2
    header = f"{'ring':<{width}} {'order':>5}  flags{' ' * 13} verdict"
    lines.append(header)
    for entry, report in reports:
        flags = "".join(
            "T" if report.predicates[cid].holds else "f" for cid in _ID_ORDER
        )
        if report.consistent:
            verdict = "consistent"
        else:
            disagreeing = ", ".join(
                cid.value
                for cid in report.s2nc_disagreeing + report.znc_disagreeing
            )
            verdict = f"INCONSISTENT ({disagreeing})"
        lines.append(
            f"{entry.name:<{width}} {entry.ring.order:>5}  {flags}  {verdict}"
        )
    separated = [
        entry.name
        for entry, report in reports
        if report.sq_4e_exceeds_s2nc or report.sq_5p_exceeds_znc
    ]
    if separated:
        lines.append("")
        lines.append(
            "strictly-weaker-form separations exhibited on: " + ", ".join(separated)
        )
    return "\n".join(lines)


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilclean",
        description="Classify finite rings and decompose their elements "
        "into idempotents/tripotents/involutions plus a commuting nilpotent.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--json", action="store_true", help="emit machine-readable JSON"
        )
        p.add_argument(
            "--max-order-cap",
            type=int,
            default=DEFAULT_ORDER_CAP,
            metavar="N",
            help=f"largest ring order to build (default {DEFAULT_ORDER_CAP})",
        )

    p_classify = sub.add_parser(
        "classify", help="evaluate all characterization predicates on a ring"
    )
    p_classify.add_argument("expr", help='ring expression, or "-" for JSON on stdin')
    common(p_classify)

    p_decompose = sub.add_parser(
        "decompose", help="search for a commuting decomposition of one element"
    )
    p_decompose.add_argument("expr", help='ring expression, or "-" for JSON on stdin')
    p_decompose.add_argument("element", type=int, help="element index")
    p_decompose.add_argument(
        "--shape",
        required=True,
        help="comma list over e,t,p5,v (nilpotent slot implicit), e.g. e,e",
    )
    common(p_decompose)

    p_survey = sub.add_parser(
        "survey", help="cross-check every ring of the survey corpus"
    )
    p_survey.add_argument("max_order", type=int)
    common(p_survey)
    return parser


def main(argv=None) -> int:
    parser = build_arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "decompose":
            return _cmd_decompose(args)
        return _cmd_survey(args)
    except (RingError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
