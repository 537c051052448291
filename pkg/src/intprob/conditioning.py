"""Conditional interval measures and capacity-based conditioning rules.

Four conditioning notions appear here, all exact:

* ``conditional_interval`` — the interval measure of ``A`` given ``H``
  under a probability measure and uncertainty degree.  At ``r = 1`` it
  collapses to ordinary conditional probabilities given the event
  "everything except the weak complement of H".
* ``ds_conditional`` — the Dempster–Shafer update of a capacity, which
  renormalizes after transferring the complement's weight.
* ``ds_conditional_weak`` — the same rule with the ordinary complement
  replaced by the weak complement; for an additive capacity it lands
  exactly on the left endpoint of ``conditional_interval`` at ``r = 1``.
* ``capacity_conditional`` / ``capacity_conditional_prime`` — graded
  capacity conditionals built from two level-grid functionals.  These
  generalize the first notion to capacities, but the construction is
  tentative (a partial definition, not a settled theory), so results
  carry flags instead of being bare intervals.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from .capacity import SWEEP_LIMIT, Capacity, _grid_integral, is_superadditive
from .errors import PreconditionError
from .measure import (
    ONE,
    ZERO,
    Interval,
    ProbabilityMeasure,
    UncertaintyDegree,
)
from .space import Event, indecisive_set, weak_complement

__all__ = [
    "conditional_interval",
    "ds_conditional",
    "ds_conditional_weak",
    "effective_weight",
    "uncertainty_weight",
    "ConditionalOutcome",
    "capacity_conditional",
    "capacity_conditional_prime",
]

logger = logging.getLogger(__name__)


def conditional_interval(
    p: ProbabilityMeasure,
    r: UncertaintyDegree,
    a: Event,
    h: Event,
    *,
    allow_null_conditioning: bool = False,
) -> Interval:
    """The interval measure of ``a`` conditioned on ``h``.

    With ``d = P(H) + E[r * 1_{H_ind}]`` the endpoints are::

        lo = (P(A ∩ H) + E[r * 1_{A ∩ H_ind}]) / d
        hi = E[(1_A + r * 1_{A_ind}) * (1_H + r * 1_{H_ind})] / d

    Both factors in the ``hi`` integrand are at most 1 pointwise, so
    ``lo <= hi <= 1`` always holds.  At ``r = 1`` this equals the pair
    of ordinary conditional probabilities
    ``[P(A | (H_w^c)^c), P((A_w^c)^c | (H_w^c)^c)]``.

    By default conditioning requires ``P(H) > 0``.  Passing
    ``allow_null_conditioning=True`` relaxes this to the weaker
    requirement that the denominator ``d`` is positive, which can hold
    with ``P(H) = 0`` when the indecisive part carries graded mass.
    """
    space = h.space
    if p.space != space or r.space != space or a.space != space:
        raise PreconditionError("arguments live on different spaces")
    h_ind = indecisive_set(space, h).mask
    a_ind = indecisive_set(space, a).mask
    denom = ZERO
    lo_num = ZERO
    hi_num = ZERO
    for i, mass in enumerate(p.values):
        if not mass:
            continue
        bit = 1 << i
        h_weight = (
            ONE if bit & h.mask else (r.values[i] if bit & h_ind else ZERO)
        )
        if not h_weight:
            continue
        a_weight = (
            ONE if bit & a.mask else (r.values[i] if bit & a_ind else ZERO)
        )
        denom += mass * h_weight
        hi_num += mass * a_weight * h_weight
        if bit & a.mask:
            if bit & h.mask:
                lo_num += mass
            elif bit & h_ind:
                lo_num += mass * r.values[i]
    if not allow_null_conditioning:
        if p(h) == 0:
            raise PreconditionError(
                "conditioning event has probability zero", witness=h
            )
    elif denom == 0:
        raise PreconditionError(
            "conditioning denominator is zero even with graded uncertainty",
            witness=h,
        )
    return Interval(lo_num / denom, hi_num / denom)


def ds_conditional(nu: Capacity, a: Event, h: Event) -> Fraction:
    """Dempster–Shafer conditional ``(nu((A∩H) ∪ H^c) - nu(H^c)) / (1 - nu(H^c))``.

    Requires ``nu(H^c) != 1``.  For an additive capacity this is the
    ordinary Bayes ratio ``P(A ∩ H) / P(H)``; for non-additive
    capacities it genuinely differs from Bayesian updating.
    """
    space = nu.space
    if a.space != space or h.space != space:
        raise PreconditionError("arguments live on different spaces")
    hc = space.full_mask & ~h.mask
    base = nu.table[hc]
    if base == 1:
        raise PreconditionError(
            "Dempster-Shafer conditioning undefined: complement has capacity 1",
            witness=h,
        )
    return (nu.table[(a.mask & h.mask) | hc] - base) / (ONE - base)


def ds_conditional_weak(nu: Capacity, a: Event, h: Event) -> Fraction:
    """Dempster–Shafer conditioning with the weak complement.

    ``(nu(A ∪ H_w^c) - nu(H_w^c)) / (1 - nu(H_w^c))``, defined whenever
    ``nu(H_w^c) != 1``.  When ``nu`` is the additive capacity of a
    measure ``P`` this equals the left endpoint of
    ``conditional_interval(P, 1, A, H)``.
    """
    space = nu.space
    if a.space != space or h.space != space:
        raise PreconditionError("arguments live on different spaces")
    wc = weak_complement(space, h).mask
    base = nu.table[wc]
    if base == 1:
        raise PreconditionError(
            "weak Dempster-Shafer conditioning undefined: "
            "weak complement has capacity 1",
            witness=h,
        )
    return (nu.table[a.mask | wc] - base) / (ONE - base)


def effective_weight(
    nu: Capacity, r: UncertaintyDegree, h: Event, b: Event
) -> Fraction:
    """The level-grid functional ``I(B) = ∫ nu(B ∩ (H ∪ (H_ind ∩ {r >= t}))) dt``.

    Weights ``B`` through the conditioning core ``H`` plus the part of
    the indecisive fringe still active at grade ``t``.  Monotone in
    ``B``; ``I(Omega)`` is at least ``nu(H)``.
    """
    space = nu.space
    if r.space != space or h.space != space or b.space != space:
        raise PreconditionError("arguments live on different spaces")
    ind_mask = indecisive_set(space, h).mask
    return _grid_integral(
        nu, r.values, ind_mask, lambda s: b.mask & (h.mask | s)
    )


def uncertainty_weight(
    nu: Capacity, r: UncertaintyDegree, h: Event, b: Event
) -> Fraction:
    """The level-grid functional ``J(B) = ∫ nu(B ∩ (H ∪ H_ind) ∩ {r >= t}) dt``.

    Unlike :func:`effective_weight`, the grade cut applies to the whole
    argument, so ``J(B) <= I(B)`` for every monotone capacity.
    """
    space = nu.space
    if r.space != space or h.space != space or b.space != space:
        raise PreconditionError("arguments live on different spaces")
    ind_mask = indecisive_set(space, h).mask
    support = b.mask & (h.mask | ind_mask)
    return _grid_integral(nu, r.values, support, lambda s: s)


@dataclass(frozen=True)
class ConditionalOutcome:
    """A graded capacity conditional together with its qualifier flags.

    ``interval`` is the (possibly clamped) result.  ``clamped`` records
    whether the raw right endpoint exceeded 1.  ``superadditive`` is the
    sweep verdict on the capacity, or ``None`` when the universe is too
    large to sweep.  ``tentative`` is always true: this construction is
    a partial definition whose outputs should be treated as provisional.
    """

    interval: Interval
    clamped: bool
    superadditive: bool | None
    tentative: bool = True


def _conditional_flags(nu: Capacity, h: Event) -> tuple[Fraction, bool | None]:
    if nu.table[h.mask] == 0:
        raise PreconditionError(
            "graded conditioning requires nu(H) > 0", witness=h
        )
    if nu.space.omega_size <= SWEEP_LIMIT:
        profile = is_superadditive(nu)
        if not profile.superadditive:
            # The outcome's `superadditive` flag is the API for this;
            # the log line is trace-level detail, not a user warning.
            logger.debug(
                "graded conditional evaluated on a non-super-additive capacity; "
                "containment guarantees do not apply (witness pair %r)",
                profile.superadditive_witness,
            )
        return nu.table[h.mask], profile.superadditive
    return nu.table[h.mask], None


def capacity_conditional(
    nu: Capacity, r: UncertaintyDegree, a: Event, h: Event
) -> ConditionalOutcome:
    """Graded conditional ``[I(A)/I(Omega), (I(A) + J(A_ind))/I(Omega)]``.

    ``I`` and ``J`` are :func:`effective_weight` and
    :func:`uncertainty_weight` for the pair ``(nu, r, h)``.  Requires
    ``nu(H) > 0`` (which makes ``I(Omega) >= nu(H)`` positive).  A
    non-super-additive capacity is accepted but flagged, since the
    containment properties of this construction are only guaranteed in
    the super-additive case.  The raw right endpoint can exceed 1; it
    is clamped and the clamp recorded on the outcome.
    """
    _, super_flag = _conditional_flags(nu, h)
    space = nu.space
    total = effective_weight(nu, r, h, space.universe)
    weight_a = effective_weight(nu, r, h, a)
    lo = weight_a / total
    a_ind = indecisive_set(space, a)
    raw_hi = (weight_a + uncertainty_weight(nu, r, h, a_ind)) / total
    clamped = raw_hi > 1
    if clamped:
        logger.info(
            "graded conditional right endpoint %s clamped to 1 for %r given %r",
            raw_hi,
            a,
            h,
        )
    return ConditionalOutcome(
        interval=Interval(lo, ONE if clamped else raw_hi),
        clamped=clamped,
        superadditive=super_flag,
    )


def capacity_conditional_prime(
    nu: Capacity, r: UncertaintyDegree, a: Event, h: Event
) -> ConditionalOutcome:
    """Widened graded conditional ``[I(A)/I(Omega), I(A ∪ A_ind)/I(Omega)]``.

    The right endpoint evaluates ``I`` on the complement of the weak
    complement of ``A`` (that is, ``A ∪ A_ind``), so it never exceeds
    ``I(Omega)`` and no clamp can fire; the recorded-clamp path is kept
    for symmetry with :func:`capacity_conditional`.
    """
    _, super_flag = _conditional_flags(nu, h)
    space = nu.space
    total = effective_weight(nu, r, h, space.universe)
    lo = effective_weight(nu, r, h, a) / total
    widened = Event(space, a.mask | indecisive_set(space, a).mask)
    hi = effective_weight(nu, r, h, widened) / total
    clamped = hi > 1
    if clamped:
        logger.warning(
            "widened graded conditional right endpoint %s clamped to 1 "
            "for %r given %r",
            hi,
            a,
            h,
        )
        hi = ONE
    return ConditionalOutcome(
        interval=Interval(lo, hi),
        clamped=clamped,
        superadditive=super_flag,
    )
