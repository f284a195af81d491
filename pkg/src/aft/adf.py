"""Abstract dialectical frameworks: statements with acceptance conditions.

Grammar (UTF-8, ``%`` comments, whitespace free):

    decl    := "s(" name ")." | "ac(" name "," formula ")."
    formula := "true" | "false" | name | "neg(" formula ")"
             | "and(" formula "," formula ")" | "or(" formula "," formula ")"

Every statement must carry exactly one acceptance condition, and conditions
may only mention declared statements. Conditions are kept as formula trees so
frameworks print back to their source form.

The induced pair-space operator evaluates every condition in strong Kleene
three-valued logic: the lower revision collects statements whose condition is
true, the upper revision those whose condition is not false. The usual
semantics names map onto the fixpoint families as: grounded is the
Kripke-Kleene fixpoint, complete the consistent fixpoints of the operator,
two-valued models the supported fixpoints, stable the stable models, and
well-founded the well-founded fixpoint.

Attack networks in the style of abstract argumentation are expressible
directly (no separate frontend): give each argument the conjunction of the
negations of its attackers; see ``attack_network``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .approx import Approximator, ApproxPair
from .errors import MissingCondition, ParseError, UndeclaredStatement
from .fixpoints import fixpoints_of, semantics_report
from .lattice import LatticeOperator, PowersetLattice
from .lp import LogicProgram, _Parser, _tokenize


class Truth(Enum):
    FALSE = 0.0
    UNKNOWN = 0.5
    TRUE = 1.0

    @property
    def label(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class Const:
    value: bool

    def to_text(self) -> str:
        return "true" if self.value else "false"


@dataclass(frozen=True)
class Var:
    name: str

    def to_text(self) -> str:
        return self.name


@dataclass(frozen=True)
class Not:
    child: "Formula"

    def to_text(self) -> str:
        return f"neg({self.child.to_text()})"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"

    def to_text(self) -> str:
        return f"and({self.left.to_text()}, {self.right.to_text()})"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"

    def to_text(self) -> str:
        return f"or({self.left.to_text()}, {self.right.to_text()})"


Formula = Const | Var | Not | And | Or

_KEYWORDS = {"true", "false", "neg", "and", "or"}


def _support(f: Formula, lower: frozenset, upper: frozenset) -> tuple[bool, bool]:
    """Independent truth-support and falsity-support of a formula at a pair.

    A variable is truth-supported when in the lower bound and falsity-
    supported when outside the upper bound; connectives combine the bits in
    the obvious way. On consistent pairs at most one bit is set and the
    reading is exactly strong Kleene; keeping the bits independent makes the
    evaluation well-behaved on inconsistent pairs too, where a variable can
    be supported both ways. Both bits only ever grow with precision.
    """
    if isinstance(f, Const):
        return (f.value, not f.value)
    if isinstance(f, Var):
        return (f.name in lower, f.name not in upper)
    if isinstance(f, Not):
        t, fa = _support(f.child, lower, upper)
        return (fa, t)
    if isinstance(f, And):
        lt, lf = _support(f.left, lower, upper)
        rt, rf = _support(f.right, lower, upper)
        return (lt and rt, lf or rf)
    if isinstance(f, Or):
        lt, lf = _support(f.left, lower, upper)
        rt, rf = _support(f.right, lower, upper)
        return (lt or rt, lf and rf)
    raise TypeError(f"not a formula: {f!r}")


def _eval3_raw(f: Formula, lower: frozenset, upper: frozenset) -> Truth:
    t, fa = _support(f, lower, upper)
    if t:
        return Truth.TRUE
    if fa:
        return Truth.FALSE
    return Truth.UNKNOWN


def eval3(formula: Formula, p: ApproxPair) -> Truth:
    """Strong Kleene evaluation against a pair: a variable is true when in
    the lower bound, false when outside the upper bound, unknown otherwise.
    On exact pairs this collapses to classical two-valued evaluation."""
    return _eval3_raw(formula, p.lower, p.upper)


def _formula_vars(f: Formula) -> set[str]:
    if isinstance(f, Var):
        return {f.name}
    if isinstance(f, Not):
        return _formula_vars(f.child)
    if isinstance(f, (And, Or)):
        return _formula_vars(f.left) | _formula_vars(f.right)
    return set()


class Adf:
    """Finite set of statements, each with one acceptance condition."""

    def __init__(self, statements: Iterable[str], conditions: Mapping[str, Formula]):
        self.statements = frozenset(statements)
        self.conditions = dict(conditions)
        for s in self.conditions:
            if s not in self.statements:
                raise UndeclaredStatement(s)
        for s in self.statements:
            if s not in self.conditions:
                raise MissingCondition(s)
        for s, cond in self.conditions.items():
            undeclared = _formula_vars(cond) - self.statements
            if undeclared:
                raise UndeclaredStatement(sorted(undeclared)[0])

    def to_text(self) -> str:
        names = sorted(self.statements)
        lines = [f"s({n})." for n in names]
        lines += [f"ac({n}, {self.conditions[n].to_text()})." for n in names]
        return "\n".join(lines)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Adf):
            return NotImplemented
        return self.statements == other.statements and self.conditions == other.conditions

    def __repr__(self) -> str:
        return f"<Adf over {sorted(self.statements)}>"


def _parse_formula(p: _Parser) -> Formula:
    kind, value, line, col = p.take("name", "a formula")
    if value == "true":
        return Const(True)
    if value == "false":
        return Const(False)
    if value in ("neg", "and", "or"):
        p.take("lparen", "'('")
        first = _parse_formula(p)
        if value == "neg":
            p.take("rparen", "')'")
            return Not(first)
        p.take("comma", "','")
        second = _parse_formula(p)
        p.take("rparen", "')'")
        return And(first, second) if value == "and" else Or(first, second)
    return Var(value)


def _statement_name(p: _Parser) -> str:
    kind, value, line, col = p.take("name", "a statement name")
    if value in _KEYWORDS:
        raise ParseError(f"{value!r} is reserved and cannot name a statement", line, col)
    return value


def parse_adf(text: str) -> Adf:
    """Parse framework text; declarations may come in any order."""
    p = _Parser(_tokenize(text))
    statements: set[str] = set()
    conditions: dict[str, Formula] = {}
    while p.peek()[0] != "eof":
        kind, value, line, col = p.take("name", "'s' or 'ac'")
        if value == "s":
            p.take("lparen", "'('")
            statements.add(_statement_name(p))
            p.take("rparen", "')'")
        elif value == "ac":
            p.take("lparen", "'('")
            name = _statement_name(p)
            p.take("comma", "','")
            if name in conditions:
                raise ParseError(f"duplicate condition for {name!r}", line, col)
            conditions[name] = _parse_formula(p)
            p.take("rparen", "')'")
        else:
            raise ParseError("expected 's' or 'ac'", line, col)
        p.take("dot", "'.'")
    return Adf(statements, conditions)


def adf_lattice(adf: Adf) -> PowersetLattice:
    return PowersetLattice(adf.statements)


def classical_operator(adf: Adf, lattice: PowersetLattice | None = None) -> LatticeOperator:
    """Two-valued revision: the statements whose condition holds classically."""
    lat = lattice if lattice is not None else adf_lattice(adf)
    conds = sorted(adf.conditions.items())

    def step(x):
        return frozenset(s for s, cond in conds if _eval3_raw(cond, x, x) is Truth.TRUE)

    return LatticeOperator(lat, step, name="adf")


def adf_approximator(adf: Adf, lattice: PowersetLattice | None = None) -> Approximator:
    """Revision operator of a framework, total on all pairs: the lower step
    collects statements whose condition is truth-supported, the upper step
    those whose condition is not falsity-supported."""
    lat = lattice if lattice is not None else adf_lattice(adf)
    conds = sorted(adf.conditions.items())

    def step(lower, upper):
        lo, hi = [], []
        for s, cond in conds:
            t, fa = _support(cond, lower, upper)
            if t:
                lo.append(s)
            if not fa:
                hi.append(s)
        return (frozenset(lo), frozenset(hi))

    return Approximator(lat, step, operator=classical_operator(adf, lat), name="adf")


@dataclass
class AdfReport:
    """Framework semantics under their usual names."""

    grounded: ApproxPair
    complete: frozenset
    two_valued: frozenset
    stable: frozenset
    well_founded: ApproxPair
    traces: dict


def adf_semantics(adf: Adf) -> AdfReport:
    a = adf_approximator(adf)
    rep = semantics_report(a)
    complete = frozenset(p for p in fixpoints_of(a) if p.consistent)
    return AdfReport(
        grounded=rep.kripke_kleene,
        complete=complete,
        two_valued=rep.supported,
        stable=rep.stable,
        well_founded=rep.well_founded,
        traces=rep.traces,
    )


def _conjunction(parts: list[Formula]) -> Formula:
    if not parts:
        return Const(True)
    out = parts[0]
    for part in parts[1:]:
        out = And(out, part)
    return out


def _disjunction(parts: list[Formula]) -> Formula:
    if not parts:
        return Const(False)
    out = parts[0]
    for part in parts[1:]:
        out = Or(out, part)
    return out


def program_to_adf(program: LogicProgram) -> Adf:
    """Encode a normal program: one statement per atom, whose condition is
    the disjunction over its rules of the conjunction of body literals.
    An atom without rules gets the condition false."""
    conditions = {}
    for atom in program.atoms:
        bodies = [
            _conjunction(
                [Var(b) for b in sorted(r.pos)] + [Not(Var(b)) for b in sorted(r.neg)]
            )
            for r in program.rules
            if r.head == atom
        ]
        conditions[atom] = _disjunction(bodies)
    return Adf(program.atoms, conditions)


def attack_network(arguments: Iterable[str], attacks: Iterable[tuple[str, str]]) -> Adf:
    """Encode an attack graph: each argument's condition is the conjunction
    of the negations of its attackers; unattacked arguments get true."""
    args = frozenset(arguments)
    attackers: dict[str, list[str]] = {a: [] for a in args}
    for source, target in attacks:
        attackers[target].append(source)
    conditions = {
        a: _conjunction([Not(Var(b)) for b in sorted(attackers[a])]) for a in args
    }
    return Adf(args, conditions)
