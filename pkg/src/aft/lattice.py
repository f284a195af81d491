"""Finite complete lattices and least fixpoints of monotone operators.

Lattices are given extensionally (element set plus order relation) or as the
powerset of a finite universe. Everything is desk scale by design: laws are
checked exhaustively, and fixpoints are computed by plain Kleene iteration
from the bottom element.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Iterator, Mapping

from .errors import (
    DivergenceGuard,
    ForeignElement,
    NonMonotoneOperator,
    NotALattice,
    NotAPartialOrder,
)

Element = Hashable

# Exhaustive monotonicity re-checks are quadratic in the lattice; above this
# size they are skipped unless explicitly requested.
VALIDATION_LIMIT = 4096


@dataclass(frozen=True)
class LawCheck:
    """Outcome of an exhaustive law check: the law holds, or a witness."""

    holds: bool
    witness: tuple | None = None

    def __bool__(self) -> bool:
        return self.holds


class FiniteLattice:
    """Finite complete lattice, validated eagerly at construction.

    ``leq`` must be the full order relation (reflexive pairs included).
    Construction checks the partial-order laws and the existence of all
    binary meets/joins plus global bounds; on a finite poset that is
    equivalent to completeness. Instances are immutable and shareable.
    """

    def __init__(self, elements: Iterable[Element], leq: Iterable[tuple[Element, Element]]):
        elems = frozenset(elements)
        if not elems:
            raise NotALattice("elements", "empty carrier")
        relation = set()
        for a, b in leq:
            if a not in elems:
                raise ForeignElement(a)
            if b not in elems:
                raise ForeignElement(b)
            relation.add((a, b))

        ups: dict[Element, set[Element]] = {a: set() for a in elems}
        downs: dict[Element, set[Element]] = {a: set() for a in elems}
        for a, b in relation:
            ups[a].add(b)
            downs[b].add(a)

        for a in elems:
            if a not in ups[a]:
                raise NotAPartialOrder("reflexivity", (a,))
        for a, b in relation:
            if a != b and (b, a) in relation:
                raise NotAPartialOrder("antisymmetry", (a, b))
        for a in elems:
            for b in ups[a]:
                if not ups[b] <= ups[a]:
                    c = next(iter(ups[b] - ups[a]))
                    raise NotAPartialOrder("transitivity", (a, b, c))

        self._elements = elems
        self._ups = {a: frozenset(s) for a, s in ups.items()}
        self._downs = {a: frozenset(s) for a, s in downs.items()}

        self._join: dict[tuple[Element, Element], Element] = {}
        self._meet: dict[tuple[Element, Element], Element] = {}
        for a, b in itertools.combinations_with_replacement(elems, 2):
            j = self._bound_of(self._ups[a] & self._ups[b], self._ups, "lub", (a, b))
            m = self._bound_of(self._downs[a] & self._downs[b], self._downs, "glb", (a, b))
            self._join[(a, b)] = self._join[(b, a)] = j
            self._meet[(a, b)] = self._meet[(b, a)] = m

        # binary bounds plus finiteness give the global ones by folding
        it = iter(elems)
        first = next(it)
        bottom = top = first
        for x in it:
            bottom = self._meet[(bottom, x)]
            top = self._join[(top, x)]
        self.bottom = bottom
        self.top = top

    @staticmethod
    def _bound_of(candidates, opposite, kind, witness):
        for c in candidates:
            if candidates <= opposite[c]:
                return c
        raise NotALattice(kind, witness)

    @classmethod
    def from_covers(cls, elements: Iterable[Element], covers: Iterable[tuple[Element, Element]]) -> "FiniteLattice":
        """Build a lattice from strict covering pairs, closing the order
        reflexively and transitively first."""
        elems = list(elements)
        ups = {a: {a} for a in elems}
        for a, b in covers:
            ups.setdefault(a, {a}).add(b)
        changed = True
        while changed:
            changed = False
            for a in elems:
                grown = set().union(*(ups[b] for b in ups[a]))
                if not grown <= ups[a]:
                    ups[a] |= grown
                    changed = True
        return cls(elems, [(a, b) for a in elems for b in ups[a]])

    # -- order interface ---------------------------------------------------

    @property
    def elements(self) -> frozenset:
        return self._elements

    @property
    def size(self) -> int:
        return len(self._elements)

    def has(self, x: Element) -> bool:
        return x in self._elements

    def check_element(self, x: Element) -> Element:
        if not self.has(x):
            raise ForeignElement(x)
        return x

    def leq(self, a: Element, b: Element) -> bool:
        return b in self._ups[a]

    def lt(self, a: Element, b: Element) -> bool:
        return a != b and self.leq(a, b)

    def lub(self, xs: Iterable[Element]) -> Element:
        """Least upper bound; the empty join is the bottom element."""
        out = None
        for x in xs:
            self.check_element(x)
            out = x if out is None else self._join[(out, x)]
        return self.bottom if out is None else out

    def glb(self, xs: Iterable[Element]) -> Element:
        """Greatest lower bound; the empty meet is the top element."""
        out = None
        for x in xs:
            self.check_element(x)
            out = x if out is None else self._meet[(out, x)]
        return self.top if out is None else out

    def interval(self, x: Element, y: Element) -> frozenset:
        """All elements z with x <= z <= y (empty when x is not below y)."""
        self.check_element(x)
        self.check_element(y)
        return self._ups[x] & self._downs[y]

    def up_covers(self, x: Element) -> frozenset:
        return self._cover_map[x]

    def down_covers(self, x: Element) -> frozenset:
        return self._cocover_map[x]

    @cached_property
    def _cover_map(self) -> dict:
        out = {}
        for x in self._elements:
            strict = self._ups[x] - {x}
            out[x] = frozenset(y for y in strict if not any(self.lt(w, y) for w in strict))
        return out

    @cached_property
    def _cocover_map(self) -> dict:
        out = {}
        for x in self._elements:
            strict = self._downs[x] - {x}
            out[x] = frozenset(y for y in strict if not any(self.lt(y, w) for w in strict))
        return out

    def consistent_pairs(self) -> Iterator[tuple[Element, Element]]:
        """All pairs (x, y) with x <= y."""
        for x in self._elements:
            for y in self._ups[x]:
                yield (x, y)

    def inverted(self) -> "FiniteLattice":
        """The same carrier with the order turned upside down."""
        return FiniteLattice(self._elements, [(b, a) for (a, b) in self._extension])

    # -- identity ----------------------------------------------------------

    @cached_property
    def _extension(self) -> frozenset:
        return frozenset((a, b) for a in self._elements for b in self._ups[a])

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.elements == other.elements and self._extension == other._extension

    def __hash__(self) -> int:
        return hash((self.elements, self._extension))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} with {len(self.elements)} elements>"


class PowersetLattice(FiniteLattice):
    """Lattice of all subsets of a finite universe, ordered by inclusion.

    Meets, joins and order tests are plain set operations, so nothing is
    materialized until something genuinely enumerates the elements (scans,
    exhaustive law checks).
    """

    def __init__(self, universe: Iterable):
        self.universe = frozenset(universe)
        self.bottom = frozenset()
        self.top = self.universe

    @cached_property
    def _all_subsets(self) -> frozenset:
        members = [frozenset()]
        for a in sorted(self.universe):
            members += [m | {a} for m in members]
        return frozenset(members)

    @property
    def elements(self) -> frozenset:
        return self._all_subsets

    @property
    def size(self) -> int:
        return 2 ** len(self.universe)

    def has(self, x) -> bool:
        return isinstance(x, frozenset) and x <= self.universe

    def leq(self, a, b) -> bool:
        return a <= b

    def lt(self, a, b) -> bool:
        return a < b

    def lub(self, xs) -> frozenset:
        out = frozenset()
        for x in xs:
            self.check_element(x)
            out |= x
        return out

    def glb(self, xs) -> frozenset:
        out = None
        for x in xs:
            self.check_element(x)
            out = x if out is None else out & x
        return self.universe if out is None else out

    def interval(self, x, y) -> frozenset:
        self.check_element(x)
        self.check_element(y)
        if not x <= y:
            return frozenset()
        extra = [frozenset()]
        for a in sorted(y - x):
            extra += [m | {a} for m in extra]
        return frozenset(x | m for m in extra)

    def up_covers(self, x) -> frozenset:
        return frozenset(x | {a} for a in self.universe - x)

    def down_covers(self, x) -> frozenset:
        return frozenset(x - {a} for a in x)

    def consistent_pairs(self):
        for x in self.elements:
            for y in self.interval(x, self.universe):
                yield (x, y)

    def inverted(self) -> FiniteLattice:
        return FiniteLattice(self.elements, [(b, a) for (a, b) in self._extension])

    @cached_property
    def _extension(self) -> frozenset:
        return frozenset((a, b) for a in self.elements for b in self.interval(a, self.universe))


def verify_lattice(elements: Iterable[Element], leq: Iterable[tuple[Element, Element]]) -> FiniteLattice:
    """Validate a candidate order, returning the lattice or raising the
    diagnostic (NotAPartialOrder / NotALattice) naming the violated law."""
    return FiniteLattice(elements, leq)


class LatticeOperator:
    """Total map from lattice elements to lattice elements.

    The mapping may be a callable or an extensional table. Applications are
    memoized; exhaustive law checks revisit elements many times.
    """

    def __init__(self, lattice: FiniteLattice, mapping: Callable[[Element], Element] | Mapping, name: str = "O"):
        self.lattice = lattice
        self.name = name
        if isinstance(mapping, Mapping):
            table = dict(mapping)
            self._fn = table.__getitem__
        else:
            self._fn = mapping
        self._memo: dict[Element, Element] = {}

    def __call__(self, x: Element) -> Element:
        memo = self._memo
        if x in memo:
            return memo[x]
        y = self._fn(x)
        if not self.lattice.has(y):
            raise ForeignElement(y)
        memo[x] = y
        return y

    def __repr__(self) -> str:
        return f"<LatticeOperator {self.name} on {self.lattice!r}>"


def is_monotone(op: LatticeOperator) -> LawCheck:
    """Exhaustive monotonicity check.

    It suffices to compare along covering pairs: any x <= y decomposes into
    a chain of covers, and the pointwise comparisons compose transitively.
    A failing witness is such a covering pair.
    """
    lat = op.lattice
    for x in lat.elements:
        ox = op(x)
        for y in lat.up_covers(x):
            if not lat.leq(ox, op(y)):
                return LawCheck(False, (x, y))
    return LawCheck(True)


def lfp(op: LatticeOperator, *, validate: bool | None = None) -> Element:
    """Least fixpoint of a monotone operator by Kleene iteration from bottom.

    ``validate`` defaults to an exhaustive monotonicity check on lattices of
    at most VALIDATION_LIMIT elements. The iteration is bounded by the number
    of lattice elements; exceeding the bound means the operator is broken.
    """
    lat = op.lattice
    if validate is None:
        validate = lat.size <= VALIDATION_LIMIT
    if validate:
        check = is_monotone(op)
        if not check:
            raise NonMonotoneOperator(check.witness)
    bound = lat.size
    x = lat.bottom
    for _ in range(bound):
        nx = op(x)
        if nx == x:
            return x
        x = nx
    if op(x) == x:
        return x
    raise DivergenceGuard(f"lfp of {op.name}", bound)
