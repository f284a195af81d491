"""The fixpoint families of an approximator.

For a precision-monotone operator on pairs this module computes the
Kripke-Kleene fixpoint (the precision-least fixpoint, by iteration from the
least precise pair), the supported fixpoints (exact fixpoints), the partial
stable fixpoints (fixpoints of the stable operator, found by exhaustive scan
over consistent pairs), the stable models (lowers of the exact ones), and the
well-founded fixpoint (the precision-least fixpoint of the stable operator).

Iteration traces are first-class outputs: each construction returns the full
precision-increasing sequence it walked, which the command line can replay.

Exhaustive scans double as their own oracles and are the intended algorithms
here; nothing is optimized past desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .approx import Approximator, ApproxPair
from .errors import DivergenceGuard, NonMonotoneProjection, StableRevisionUndefined
from .lattice import Element, LatticeOperator, is_monotone


def _iterate_to_fixpoint(a: Approximator, start, what: str):
    lat = a.lattice
    cur = start
    trace = [ApproxPair(lat, *cur)]
    bound = lat.size * lat.size + 1
    for _ in range(bound):
        nxt = a.apply(*cur)
        if nxt == cur:
            return trace[-1], trace
        cur = nxt
        trace.append(ApproxPair(lat, *cur))
    raise DivergenceGuard(what, bound)


def kripke_kleene(a: Approximator) -> tuple[ApproxPair, list[ApproxPair]]:
    """The precision-least fixpoint of the approximator, with its trace.

    Iterates from (bottom, top); for a precision-monotone operator the trace
    is precision-increasing and stabilizes within the number of pairs.
    """
    lat = a.lattice
    return _iterate_to_fixpoint(a, (lat.bottom, lat.top), f"Kripke-Kleene iteration of {a.name}")


def fixpoints_of(a: Approximator) -> frozenset[ApproxPair]:
    """Every pair the approximator leaves fixed, by exhaustive scan."""
    lat = a.lattice
    return frozenset(
        ApproxPair(lat, lo, hi) for lo, hi in a.domain() if a.apply(lo, hi) == (lo, hi)
    )


def supported_fixpoints(a: Approximator) -> frozenset[Element]:
    """Elements whose exact pair is fixed; for an exactly-bracketing
    approximator these are precisely the fixpoints of the base operator."""
    return frozenset(x for x in a.lattice.elements if a.apply(x, x) == (x, x))


def _lower_revision(a: Approximator, upper: Element):
    """Least fixpoint of z -> a(z, upper).lower, iterated from bottom.

    For a consistency-restricted operator the iteration is confined to the
    elements below ``upper``; None signals that it escaped, i.e. the revision
    is undefined there.
    """
    lat = a.lattice
    z = lat.bottom
    bound = lat.size + 1
    for _ in range(bound):
        nz = a.apply(z, upper)[0]
        if nz == z:
            return z
        if a.consistent_only and not lat.leq(nz, upper):
            return None
        z = nz
    raise DivergenceGuard(f"lower revision of {a.name}", bound)


def _upper_revision(a: Approximator, lower: Element):
    """Least fixpoint of z -> a(lower, z).upper.

    Iterated from bottom for total operators; a consistency-restricted
    operator is iterated inside [lower, top] instead, starting at ``lower``,
    with None signalling escape below ``lower``.
    """
    lat = a.lattice
    z = lower if a.consistent_only else lat.bottom
    bound = lat.size + 1
    for _ in range(bound):
        nz = a.apply(lower, z)[1]
        if nz == z:
            return z
        if a.consistent_only and not lat.leq(lower, nz):
            return None
        z = nz
    raise DivergenceGuard(f"upper revision of {a.name}", bound)


def _stable_raw(a: Approximator, lower: Element, upper: Element):
    lo = _lower_revision(a, upper)
    if lo is None:
        return None
    hi = _upper_revision(a, lower)
    if hi is None:
        return None
    return (lo, hi)


def stable_operator(a: Approximator, p: ApproxPair, *, validate: bool = False) -> ApproxPair:
    """One application of the stable operator: the pair of inner least
    fixpoints of the approximator's two projections at p.

    Precision-monotonicity of the approximator already makes both projections
    monotone, so ``validate`` (an exhaustive re-check of that consequence) is
    off by default.
    """
    lat = a.lattice
    if validate and not a.consistent_only:
        low_proj = LatticeOperator(lat, lambda z: a.apply(z, p.upper)[0], name="lower projection")
        check = is_monotone(low_proj)
        if not check:
            raise NonMonotoneProjection("lower", check.witness)
        up_proj = LatticeOperator(lat, lambda z: a.apply(p.lower, z)[1], name="upper projection")
        check = is_monotone(up_proj)
        if not check:
            raise NonMonotoneProjection("upper", check.witness)
    out = _stable_raw(a, p.lower, p.upper)
    if out is None:
        raise StableRevisionUndefined(p.raw(), "an inner iteration left the consistent region")
    return ApproxPair(lat, *out)


def partial_stable_fixpoints(a: Approximator) -> frozenset[ApproxPair]:
    """All consistent pairs the stable operator leaves fixed.

    Pairs whose stable revision is undefined (possible only for
    consistency-restricted approximators) are simply not fixpoints.
    """
    lat = a.lattice
    found = []
    for lo, hi in lat.consistent_pairs():
        if _stable_raw(a, lo, hi) == (lo, hi):
            found.append(ApproxPair(lat, lo, hi))
    return frozenset(found)


def stable_models(a: Approximator) -> frozenset[Element]:
    """Lowers of the exact partial stable fixpoints; scans exact pairs only."""
    return frozenset(x for x in a.lattice.elements if _stable_raw(a, x, x) == (x, x))


def well_founded(a: Approximator) -> tuple[ApproxPair, list[ApproxPair]]:
    """The precision-least fixpoint of the stable operator, with its trace,
    by iterating the stable operator from (bottom, top)."""
    lat = a.lattice
    cur = (lat.bottom, lat.top)
    trace = [ApproxPair(lat, *cur)]
    bound = lat.size * lat.size + 1
    for _ in range(bound):
        nxt = _stable_raw(a, *cur)
        if nxt is None:
            raise StableRevisionUndefined(cur, "well-founded iteration left the consistent region")
        if nxt == cur:
            return trace[-1], trace
        cur = nxt
        trace.append(ApproxPair(lat, *cur))
    raise DivergenceGuard(f"well-founded iteration of {a.name}", bound)


@dataclass
class SemanticsReport:
    """Every fixpoint family of one approximator, plus iteration traces."""

    kripke_kleene: ApproxPair
    well_founded: ApproxPair
    supported: frozenset
    partial_stable: frozenset
    stable: frozenset
    traces: dict = field(default_factory=dict)


def semantics_report(a: Approximator) -> SemanticsReport:
    kk, kk_trace = kripke_kleene(a)
    wf, wf_trace = well_founded(a)
    partial = partial_stable_fixpoints(a)
    return SemanticsReport(
        kripke_kleene=kk,
        well_founded=wf,
        supported=supported_fixpoints(a),
        partial_stable=partial,
        stable=frozenset(p.lower for p in partial if p.exact),
        traces={"kripke_kleene": kk_trace, "well_founded": wf_trace},
    )
