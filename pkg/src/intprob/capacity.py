"""Monotone capacities, Choquet integration, and capacity interval measures.

A capacity generalizes a probability measure: it is any set function
with ``nu({}) = 0``, ``nu(Omega) = 1`` that is monotone under set
inclusion — additivity is not required.  Capacities here are explicit
tables with one exact rational per subset of a small space, so every
Choquet integral is a finite exact sum over the integrand's level grid.

Two interval measures are derived from a capacity ``nu`` and an
uncertainty degree ``r``:

* ``capacity_interval``:  ``[nu(H), nu(H) + ∫ nu(H_ind ∩ {r >= t}) dt]``
  intersected with [0, 1];
* ``capacity_interval_prime``:  ``[nu(H), ∫ nu(H ∪ (H_ind ∩ {r >= t})) dt]``,
  which absorbs the graded indecisive part into the capacity's argument.

For super-additive ``nu`` the first is always contained in the second.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .errors import ConstraintError, PreconditionError
from .measure import (
    ONE,
    ZERO,
    Interval,
    ProbabilityMeasure,
    RandomVariable,
    RationalLike,
    UncertaintyDegree,
    as_rational,
    uncertainty_variable,
)
from .space import Event, Space, indecisive_set, iter_bits

__all__ = [
    "Capacity",
    "capacity_from_table",
    "belief_from_mass",
    "distort",
    "power_distortion",
    "PiecewiseLinear",
    "choquet",
    "capacity_interval",
    "capacity_interval_prime",
    "AdditivityProfile",
    "is_superadditive",
]

logger = logging.getLogger(__name__)

#: Largest universe for which an explicit subset table is accepted
#: (2^20 entries, about one million rationals).
TABLE_LIMIT = 20

#: Largest universe for which the disjoint-pair additivity sweep runs
#: (3^12 pairs).
SWEEP_LIMIT = 12


@dataclass(frozen=True, eq=False)
class Capacity:
    """A monotone set function as an explicit subset table.

    ``table[mask]`` is the value on the event with that bitmask.  Use
    :func:`capacity_from_table`, :func:`belief_from_mass`, or
    :func:`distort` to build validated instances.  Equality is object
    identity, which lets expensive per-capacity analyses be cached.
    """

    space: Space
    table: tuple[Fraction, ...]

    def __call__(self, event: Event) -> Fraction:
        if event.space != self.space:
            raise PreconditionError("event and capacity live on different spaces")
        return self.table[event.mask]

    def of_mask(self, mask: int) -> Fraction:
        return self.table[mask]

    def is_additive(self) -> bool:
        """True when the table is a probability measure's subset sums."""
        singles = [self.table[1 << i] for i in range(self.space.omega_size)]
        return all(
            self.table[mask] == sum((singles[i] for i in iter_bits(mask)), ZERO)
            for mask in range(len(self.table))
        )


def _check_table_size(space: Space, what: str) -> None:
    if space.omega_size > TABLE_LIMIT:
        raise PreconditionError(
            f"{what} handles at most {TABLE_LIMIT} eventualities, "
            f"got {space.omega_size}"
        )


def capacity_from_table(space: Space, table: Sequence[RationalLike]) -> Capacity:
    """Validate and wrap an explicit subset table.

    Checks the boundary values and monotonicity over every single-element
    extension (which implies monotonicity for all nested pairs).  A
    violation is rejected with the offending pair as witness.
    """
    _check_table_size(space, "capacity_from_table")
    n_events = 1 << space.omega_size
    values = tuple(as_rational(v) for v in table)
    if len(values) != n_events:
        raise ConstraintError(
            f"capacity table must have {n_events} entries, got {len(values)}"
        )
    if values[0] != 0:
        raise ConstraintError(f"capacity of the empty set must be 0, got {values[0]}")
    if values[n_events - 1] != 1:
        raise ConstraintError(
            f"capacity of the universe must be 1, got {values[n_events - 1]}"
        )
    full = n_events - 1
    for mask in range(n_events):
        v = values[mask]
        rest = full & ~mask
        for x in iter_bits(rest):
            ext = mask | (1 << x)
            if values[ext] < v:
                raise ConstraintError(
                    "capacity not monotone",
                    witness=(Event(space, mask), Event(space, ext)),
                )
    return Capacity(space, values)


def belief_from_mass(
    space: Space, m: Mapping[Event, RationalLike]
) -> Capacity:
    """Belief function of a mass assignment: ``nu(A) = sum of m(B) for B <= A``.

    ``m`` must assign nonnegative mass summing to 1 to events of
    ``space``, with no mass on the empty event.  The result is monotone
    and super-additive by construction.
    """
    _check_table_size(space, "belief_from_mass")
    focal: list[tuple[int, Fraction]] = []
    total = ZERO
    for event, raw in m.items():
        if not isinstance(event, Event) or event.space != space:
            raise ConstraintError("mass assignment keys must be events of the space")
        w = as_rational(raw)
        if w < 0:
            raise ConstraintError(f"negative mass {w}", witness=(event, w))
        if event.mask == 0 and w != 0:
            raise ConstraintError("the empty event cannot carry mass", witness=w)
        total += w
        if w > 0:
            focal.append((event.mask, w))
    if total != 1:
        raise ConstraintError(f"masses must sum to exactly 1, got {total}")
    n_events = 1 << space.omega_size
    table = tuple(
        sum((w for b, w in focal if b & ~mask == 0), ZERO)
        for mask in range(n_events)
    )
    return Capacity(space, table)


def power_distortion(exponent: int) -> Callable[[Fraction], Fraction]:
    """The map ``t -> t**exponent`` (convex for exponent >= 1)."""
    if not isinstance(exponent, int) or exponent < 1:
        raise ConstraintError(f"exponent must be a positive integer, got {exponent!r}")
    return lambda t: t**exponent


@dataclass(frozen=True)
class PiecewiseLinear:
    """A piecewise-linear map on [0, 1] through exact rational points.

    ``points`` must start at x = 0, end at x = 1, have strictly
    increasing x and nondecreasing y.  Evaluation interpolates exactly.
    """

    points: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        pts = tuple((as_rational(x), as_rational(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if len(pts) < 2 or pts[0][0] != 0 or pts[-1][0] != 1:
            raise ConstraintError("breakpoints must run from x=0 to x=1")
        for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise ConstraintError(
                    "breakpoint x-values must strictly increase", witness=(x0, x1)
                )
            if y1 < y0:
                raise ConstraintError(
                    "breakpoint y-values must not decrease", witness=(y0, y1)
                )

    def __call__(self, t: Fraction) -> Fraction:
        if not (ZERO <= t <= ONE):
            raise ConstraintError(f"argument {t} outside [0, 1]", witness=t)
        for (x0, y0), (x1, y1) in zip(self.points, self.points[1:]):
            if t <= x1:
                return y0 + (y1 - y0) * (t - x0) / (x1 - x0)
        raise AssertionError("unreachable: t <= 1 is always inside a segment")


def distort(
    p: ProbabilityMeasure, g: Callable[[Fraction], Fraction]
) -> Capacity:
    """The distorted capacity ``nu(A) = g(P(A))``.

    ``g`` must fix 0 and 1 and be nondecreasing; this is verified on
    every probability value the measure actually attains (which is all
    the table ever evaluates), and a violation is rejected with the
    witnessing argument pair.  ``g`` must return exact rationals.
    """
    _check_table_size(p.space, "distort")
    n_events = 1 << p.space.omega_size
    probs = [ZERO] * n_events
    for mask in range(1, n_events):
        low = mask & -mask
        probs[mask] = probs[mask ^ low] + p.values[low.bit_length() - 1]

    def apply(t: Fraction) -> Fraction:
        out = g(t)
        if not isinstance(out, (Fraction, int)) or isinstance(out, bool):
            raise ConstraintError(
                f"distortion must return exact rationals, got {out!r}", witness=out
            )
        return Fraction(out)

    attained = sorted({ZERO, ONE, *probs})
    images = {t: apply(t) for t in attained}
    if images[ZERO] != 0 or images[ONE] != 1:
        raise ConstraintError(
            f"distortion must map 0 to 0 and 1 to 1, got g(0)={images[ZERO]}, "
            f"g(1)={images[ONE]}"
        )
    for t0, t1 in zip(attained, attained[1:]):
        if images[t1] < images[t0]:
            raise ConstraintError(
                "distortion is not monotone", witness=((t0, images[t0]), (t1, images[t1]))
            )
    table = tuple(images[prob] for prob in probs)
    return Capacity(p.space, table)


def _grid_integral(
    nu: Capacity,
    values: Sequence[Fraction],
    support_mask: int,
    transform: Callable[[int], int],
) -> Fraction:
    """Exact ``∫_0^1 nu(transform({i in support : values[i] >= t})) dt``.

    The integrand is a step function of ``t``: it changes only at the
    distinct positive values attained on the support.  The integral is
    the sum of stratum widths times the capacity on each stratum, plus
    the top stratum ``(1 - t_max) * nu(transform({}))``.
    """
    levels = sorted({values[i] for i in iter_bits(support_mask) if values[i] > 0})
    total = ZERO
    prev = ZERO
    for t in levels:
        mask_ge = 0
        for i in iter_bits(support_mask):
            if values[i] >= t:
                mask_ge |= 1 << i
        total += (t - prev) * nu.table[transform(mask_ge)]
        prev = t
    total += (ONE - prev) * nu.table[transform(0)]
    return total


def choquet(nu: Capacity, g: RandomVariable) -> Fraction:
    """Choquet integral ``∫_0^1 nu({g >= t}) dt`` for ``0 <= g <= 1``.

    Computed exactly on the level grid of ``g``.  For an additive
    capacity this is the ordinary expectation; for an indicator it is
    the capacity of the indicated event.
    """
    if g.space != nu.space:
        raise PreconditionError("capacity and integrand live on different spaces")
    for v in g.values:
        if not (ZERO <= v <= ONE):
            raise ConstraintError(f"integrand value {v} outside [0, 1]", witness=v)
    return _grid_integral(nu, g.values, nu.space.full_mask, lambda s: s)


def capacity_interval(
    nu: Capacity, r: UncertaintyDegree, h: Event
) -> Interval:
    """``[nu(H), nu(H) + ∫ nu(H_ind ∩ {r >= t}) dt]`` clamped to [0, 1].

    For an additive capacity this coincides with the measure-based
    interval.  The clamp is part of the definition; if it fires (which
    needs a capacity inflating disjoint unions enough that the raw sum
    exceeds 1) the event is logged.
    """
    if r.space != nu.space or h.space != nu.space:
        raise PreconditionError("arguments live on different spaces")
    lo = nu.table[h.mask]
    raw_hi = lo + choquet(nu, uncertainty_variable(h.space, h, r))
    if raw_hi > 1:
        logger.info(
            "capacity interval right endpoint %s clamped to 1 for %r", raw_hi, h
        )
        return Interval(lo, ONE)
    return Interval(lo, raw_hi)


def capacity_interval_prime(
    nu: Capacity, r: UncertaintyDegree, h: Event
) -> Interval:
    """``[nu(H), ∫ nu(H ∪ (H_ind ∩ {r >= t})) dt]``.

    Strata of ``t`` where the graded indecisive part is exhausted
    contribute ``nu(H)`` (the transform of the empty level set), so the
    right endpoint is always at least ``nu(H)``.  Super-additivity is
    not demanded here — the map is defined for any capacity — but only
    super-additive capacities guarantee that ``capacity_interval`` is
    contained in this interval.
    """
    if r.space != nu.space or h.space != nu.space:
        raise PreconditionError("arguments live on different spaces")
    lo = nu.table[h.mask]
    ind_mask = indecisive_set(h.space, h).mask
    hi = _grid_integral(nu, r.values, ind_mask, lambda s: h.mask | s)
    if hi > 1:
        # Unreachable for a monotone capacity: every stratum value
        # nu(H ∪ ...) is at most 1 and the stratum widths sum to 1.
        # Kept as a recorded safeguard so any future relaxation of the
        # capacity invariants cannot silently produce invalid intervals.
        logger.warning(
            "capacity interval (prime) right endpoint %s clamped to 1 for %r", hi, h
        )
        hi = ONE
    return Interval(lo, hi)


@dataclass(frozen=True)
class AdditivityProfile:
    """Result of the disjoint-pair sweep over a capacity.

    ``superadditive`` / ``subadditive`` state whether
    ``nu(A) + nu(B) <= nu(A | B)`` (resp. ``>=``) holds for every pair
    of disjoint nonempty events; each failed direction carries one
    witnessing pair.  An additive capacity satisfies both.
    """

    superadditive: bool
    superadditive_witness: tuple[Event, Event] | None
    subadditive: bool
    subadditive_witness: tuple[Event, Event] | None


@lru_cache(maxsize=None)
def is_superadditive(nu: Capacity) -> AdditivityProfile:
    """Classify a capacity by sweeping all disjoint pairs of events.

    The sweep touches 3^|Omega| pairs and is limited to universes of at
    most 12 eventualities.  Results are cached per capacity object.
    """
    size = nu.space.omega_size
    if size > SWEEP_LIMIT:
        raise PreconditionError(
            f"additivity sweep handles at most {SWEEP_LIMIT} eventualities, got {size}"
        )
    table = nu.table
    full = (1 << size) - 1
    super_w: tuple[Event, Event] | None = None
    sub_w: tuple[Event, Event] | None = None
    for a in range(1, full + 1):
        comp = full & ~a
        b = comp
        while b:
            if b < a:
                lhs = table[a] + table[b]
                rhs = table[a | b]
                if lhs > rhs and super_w is None:
                    super_w = (Event(nu.space, a), Event(nu.space, b))
                if lhs < rhs and sub_w is None:
                    sub_w = (Event(nu.space, a), Event(nu.space, b))
                if super_w is not None and sub_w is not None:
                    return AdditivityProfile(False, super_w, False, sub_w)
            b = (b - 1) & comp
    return AdditivityProfile(super_w is None, super_w, sub_w is None, sub_w)
