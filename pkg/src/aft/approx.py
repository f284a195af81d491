"""Approximating pairs over a lattice, the precision order, and operators on them.

A pair (x, y) stands for the interval of elements between x and y: it
approximates every z with x <= z <= y. Pairs are compared by precision:
(x, y) is below (u, v) when x <= u and v <= y, so more precise pairs denote
smaller intervals. An approximator is a precision-monotone map on pairs; it
stands in for a (possibly non-monotone) operator on the base lattice.

Inconsistent pairs (lower not below upper) are representable and most
operators here are evaluated on them by the same formulas; only the
``ultimate`` construction rejects them, since it has no meaning on an empty
interval.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .errors import (
    DoesNotApproximateO,
    ForeignElement,
    InconsistentPair,
    LatticeMismatch,
    NotPrecisionMonotone,
)
from .lattice import Element, FiniteLattice, LatticeOperator, LawCheck

RawPair = tuple[Element, Element]


@dataclass(frozen=True, eq=False)
class ApproxPair:
    """An element of the pair space over a fixed lattice."""

    lattice: FiniteLattice
    lower: Element
    upper: Element

    def __post_init__(self):
        self.lattice.check_element(self.lower)
        self.lattice.check_element(self.upper)

    @property
    def consistent(self) -> bool:
        return self.lattice.leq(self.lower, self.upper)

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    def swap(self) -> "ApproxPair":
        return ApproxPair(self.lattice, self.upper, self.lower)

    def raw(self) -> RawPair:
        return (self.lower, self.upper)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ApproxPair):
            return NotImplemented
        return (
            self.lower == other.lower
            and self.upper == other.upper
            and (self.lattice is other.lattice or self.lattice == other.lattice)
        )

    def __hash__(self) -> int:
        return hash((self.lower, self.upper))

    def __repr__(self) -> str:
        return f"({self.lower!r}, {self.upper!r})"


def _same_lattice(p: ApproxPair, q: ApproxPair) -> FiniteLattice:
    if p.lattice is q.lattice or p.lattice == q.lattice:
        return p.lattice
    raise LatticeMismatch(f"pairs {p!r} and {q!r} live over different lattices")


def precision_leq(p: ApproxPair, q: ApproxPair) -> bool:
    """True when q is at least as precise as p."""
    lat = _same_lattice(p, q)
    return lat.leq(p.lower, q.lower) and lat.leq(q.upper, p.upper)


def approximates(p: ApproxPair, z: Element) -> bool:
    """True when z lies in the interval denoted by p."""
    lat = p.lattice
    lat.check_element(z)
    return lat.leq(p.lower, z) and lat.leq(z, p.upper)


class Approximator:
    """A map on approximating pairs over a fixed lattice.

    ``mapping`` takes and returns raw (lower, upper) tuples, or is an
    extensional table of them. Applications are memoized. When
    ``consistent_only`` is set the operator refuses inconsistent arguments.
    The approximated base operator, when known, is attached as ``operator``.
    """

    def __init__(
        self,
        lattice: FiniteLattice,
        mapping: Callable[[Element, Element], RawPair] | Mapping[RawPair, RawPair],
        *,
        operator: LatticeOperator | None = None,
        name: str = "A",
        consistent_only: bool = False,
    ):
        self.lattice = lattice
        self.operator = operator
        self.name = name
        self.consistent_only = consistent_only
        if isinstance(mapping, Mapping):
            table = dict(mapping)
            self._fn = lambda lo, hi: table[(lo, hi)]
        else:
            self._fn = mapping
        self._memo: dict[RawPair, RawPair] = {}

    def apply(self, lower: Element, upper: Element) -> RawPair:
        key = (lower, upper)
        memo = self._memo
        if key in memo:
            return memo[key]
        if self.consistent_only and not self.lattice.leq(lower, upper):
            raise InconsistentPair(key)
        out_lo, out_hi = self._fn(lower, upper)
        if not self.lattice.has(out_lo):
            raise ForeignElement(out_lo)
        if not self.lattice.has(out_hi):
            raise ForeignElement(out_hi)
        out = (out_lo, out_hi)
        memo[key] = out
        return out

    def __call__(self, p: ApproxPair) -> ApproxPair:
        if not (p.lattice is self.lattice or p.lattice == self.lattice):
            raise LatticeMismatch(f"pair {p!r} is not over this approximator's lattice")
        lo, hi = self.apply(p.lower, p.upper)
        return ApproxPair(self.lattice, lo, hi)

    def pair(self, lower: Element, upper: Element) -> ApproxPair:
        return ApproxPair(self.lattice, lower, upper)

    def least_precise(self) -> ApproxPair:
        return ApproxPair(self.lattice, self.lattice.bottom, self.lattice.top)

    def domain(self) -> Iterator[RawPair]:
        """All pairs this operator is defined on, as raw tuples."""
        if self.consistent_only:
            return self.lattice.consistent_pairs()
        return itertools.product(self.lattice.elements, repeat=2)

    def _domain_cover_successors(self, lower: Element, upper: Element) -> Iterator[RawPair]:
        """Precision-order covers of (lower, upper) that stay in the domain."""
        lat = self.lattice
        for lo in lat.up_covers(lower):
            if not self.consistent_only or lat.leq(lo, upper):
                yield (lo, upper)
        for hi in lat.down_covers(upper):
            if not self.consistent_only or lat.leq(lower, hi):
                yield (lower, hi)

    def __repr__(self) -> str:
        return f"<Approximator {self.name} on {self.lattice!r}>"


def is_precision_monotone(a: Approximator) -> LawCheck:
    """Exhaustive precision-monotonicity check.

    Comparing along precision covers suffices: any comparison decomposes into
    a chain of covers and the pointwise comparisons compose transitively. A
    failing witness is such a covering pair of pairs.
    """
    lat = a.lattice
    for lo, hi in a.domain():
        out = a.apply(lo, hi)
        for nlo, nhi in a._domain_cover_successors(lo, hi):
            nout = a.apply(nlo, nhi)
            if not (lat.leq(out[0], nout[0]) and lat.leq(nout[1], out[1])):
                return LawCheck(False, ((lo, hi), (nlo, nhi)))
    return LawCheck(True)


def brackets_operator(a: Approximator, operator: LatticeOperator | None = None) -> LawCheck:
    """Weak bracketing: on every exact pair the approximator's output
    interval contains the operator's value."""
    op = operator if operator is not None else a.operator
    if op is None:
        raise ValueError("no base operator attached or given")
    lat = a.lattice
    for x in lat.elements:
        out_lo, out_hi = a.apply(x, x)
        ox = op(x)
        if not (lat.leq(out_lo, ox) and lat.leq(ox, out_hi)):
            return LawCheck(False, (x,))
    return LawCheck(True)


def verify_approximator(a: Approximator, operator: LatticeOperator | None = None) -> Approximator:
    """Exhaustively validate an approximator, returning it on success.

    Checks precision-monotonicity and, when a base operator is attached or
    given, that every exact pair brackets the operator's value. Raises
    NotPrecisionMonotone or DoesNotApproximateO with a witness otherwise.
    """
    mono = is_precision_monotone(a)
    if not mono:
        raise NotPrecisionMonotone(mono.witness)
    op = operator if operator is not None else a.operator
    if op is not None:
        bracket = brackets_operator(a, op)
        if not bracket:
            raise DoesNotApproximateO(bracket.witness[0])
    return a


def is_exact_approximator(a: Approximator, operator: LatticeOperator | None = None) -> LawCheck:
    """Stricter bracketing: on every exact pair the approximator returns
    exactly the operator's value, doubled."""
    op = operator if operator is not None else a.operator
    if op is None:
        raise ValueError("no base operator attached or given")
    for x in a.lattice.elements:
        ox = op(x)
        if a.apply(x, x) != (ox, ox):
            return LawCheck(False, (x,))
    return LawCheck(True)


def ultimate(lattice: FiniteLattice, op: LatticeOperator, name: str | None = None) -> Approximator:
    """The most precise approximator of an operator.

    On a consistent pair it meets and joins the operator's image over the
    denoted interval. Inconsistent pairs denote no interval and are rejected.
    """

    def step(lower: Element, upper: Element) -> RawPair:
        images = [op(z) for z in lattice.interval(lower, upper)]
        return (lattice.glb(images), lattice.lub(images))

    return Approximator(
        lattice,
        step,
        operator=op,
        name=name or f"ultimate({op.name})",
        consistent_only=True,
    )


def dual(a: Approximator) -> Approximator:
    """The approximator induced by inverting the truth order: swap the
    argument pair, apply, swap the result.

    An involution: dual(dual(a)) agrees with a pointwise. For operators that
    reject inconsistent pairs the dual is only usable on exact pairs.
    """

    def step(lower: Element, upper: Element) -> RawPair:
        out_lo, out_hi = a.apply(upper, lower)
        return (out_hi, out_lo)

    return Approximator(
        a.lattice,
        step,
        operator=a.operator,
        name=f"dual({a.name})",
        consistent_only=a.consistent_only,
    )


def is_symmetric(a: Approximator) -> LawCheck:
    """Exhaustive self-duality check: a(x, y) must equal a(y, x) swapped.

    Equivalent to pointwise equality of the operator with its dual. Pairs
    whose swap falls outside the domain are skipped, so for a
    consistency-restricted operator only exact pairs are examined.
    """
    lat = a.lattice
    for lo, hi in a.domain():
        if a.consistent_only and not lat.leq(hi, lo):
            continue
        out = a.apply(lo, hi)
        swapped = a.apply(hi, lo)
        if out != (swapped[1], swapped[0]):
            return LawCheck(False, ((lo, hi),))
    return LawCheck(True)
