"""Exact probability measures, interval measures, and axiom validation.

Everything here is exact rational arithmetic (:class:`fractions.Fraction`);
no floating point enters any computation, so every identity the test
suite asserts is an equality of rationals, not an approximation.

The central object is the *interval measure* built from a probability
measure ``P`` and an uncertainty degree ``r``:

    Q_r(H) = [P(H), P(H) + E[r * 1_{H_ind}]]

whose width collects the mass of the indecisive part of ``H``, graded
by ``r``.  ``validate_imprecise`` checks the two axioms that make a map
``H -> [lo, hi]`` an imprecise probability in this setting: the left
endpoints form a probability measure, and widths shrink as events grow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .errors import ConstraintError, PreconditionError
from .space import Event, Space, indecisive_set, iter_bits

__all__ = [
    "Rational",
    "as_rational",
    "Interval",
    "ProbabilityMeasure",
    "RandomVariable",
    "UncertaintyDegree",
    "uncertainty_variable",
    "expectation",
    "interval_measure",
    "marginal_mass",
    "ValidationReport",
    "validate_imprecise",
]

#: Exact rational numbers.  The stdlib type already stores lowest terms
#: with a positive denominator and arbitrary-precision integers, which
#: is exactly the contract needed here.
Rational = Fraction

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` (Fraction, int, or a string like ``"3/4"``) exactly.

    Floats are rejected: binary floats silently misrepresent decimal
    inputs, and this package promises exact results.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ConstraintError(f"not a rational: {value!r}", witness=value)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConstraintError(f"cannot parse rational {value!r}", witness=value) from exc
    raise ConstraintError(
        f"not an exact rational: {value!r} (floats are rejected)", witness=value
    )


@dataclass(frozen=True)
class Interval:
    """A closed subinterval of [0, 1] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo = as_rational(self.lo)
        hi = as_rational(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not (ZERO <= lo <= hi <= ONE):
            raise ConstraintError(
                f"invalid interval [{lo}, {hi}]: need 0 <= lo <= hi <= 1",
                witness=(lo, hi),
            )

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def encloses(self, other: Interval) -> bool:
        """True when ``other`` is contained in ``self``."""
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"

    def __repr__(self) -> str:
        return f"Interval({self.lo}, {self.hi})"


def _coerce_values(
    space: Space, values: Iterable[RationalLike], what: str
) -> tuple[Fraction, ...]:
    out = tuple(as_rational(v) for v in values)
    if len(out) != space.omega_size:
        raise ConstraintError(
            f"{what} needs one value per eventuality "
            f"({space.omega_size}), got {len(out)}"
        )
    return out


def _values_from_map(
    space: Space, mapping: Mapping[str, RationalLike], default: Fraction, what: str
) -> tuple[Fraction, ...]:
    values = [default] * space.omega_size
    for name, raw in mapping.items():
        values[space.parse_eventuality(name)] = as_rational(raw)
    return tuple(values)


@dataclass(frozen=True)
class ProbabilityMeasure:
    """A probability measure given by one exact mass per eventuality.

    Masses must be nonnegative and sum to exactly 1; no silent
    renormalization is ever performed.
    """

    space: Space
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = _coerce_values(self.space, self.values, "a probability measure")
        object.__setattr__(self, "values", values)
        for v in values:
            if v < 0:
                raise ConstraintError(f"negative mass {v}", witness=v)
        total = sum(values)
        if total != 1:
            raise ConstraintError(
                f"masses must sum to exactly 1, got {total}", witness=total
            )

    @classmethod
    def uniform(cls, space: Space) -> ProbabilityMeasure:
        share = Fraction(1, space.omega_size)
        return cls(space, (share,) * space.omega_size)

    @classmethod
    def from_map(
        cls, space: Space, mapping: Mapping[str, RationalLike]
    ) -> ProbabilityMeasure:
        """Build from an eventuality-name map; omitted entries get mass 0."""
        return cls(space, _values_from_map(space, mapping, ZERO, "mass"))

    def __call__(self, event: Event) -> Fraction:
        """P(event)."""
        if event.space != self.space:
            raise PreconditionError("event and measure live on different spaces")
        return sum((self.values[i] for i in iter_bits(event.mask)), ZERO)


@dataclass(frozen=True)
class RandomVariable:
    """A rational-valued variable given pointwise on a space."""

    space: Space
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", _coerce_values(self.space, self.values, "a random variable")
        )

    @classmethod
    def constant(cls, space: Space, value: RationalLike) -> RandomVariable:
        return cls(space, (as_rational(value),) * space.omega_size)

    @classmethod
    def indicator(cls, event: Event) -> RandomVariable:
        values = tuple(
            ONE if i in event else ZERO for i in range(event.space.omega_size)
        )
        return cls(event.space, values)

    @classmethod
    def from_map(
        cls,
        space: Space,
        mapping: Mapping[str, RationalLike],
        default: RationalLike = 0,
    ) -> RandomVariable:
        return cls(
            space, _values_from_map(space, mapping, as_rational(default), "variable")
        )

    def sublevel(self, t: RationalLike) -> Event:
        """The event {self <= t}."""
        bound = as_rational(t)
        mask = 0
        for i, v in enumerate(self.values):
            if v <= bound:
                mask |= 1 << i
        return Event(self.space, mask)

    def attained(self) -> tuple[Fraction, ...]:
        """Distinct attained values, ascending."""
        return tuple(sorted(set(self.values)))


@dataclass(frozen=True)
class UncertaintyDegree:
    """A degree map ``r``: one rational in [0, 1] per eventuality."""

    space: Space
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        values = _coerce_values(self.space, self.values, "an uncertainty degree")
        object.__setattr__(self, "values", values)
        for v in values:
            if not (ZERO <= v <= ONE):
                raise ConstraintError(
                    f"uncertainty degree {v} outside [0, 1]", witness=v
                )

    @classmethod
    def constant(cls, space: Space, value: RationalLike) -> UncertaintyDegree:
        return cls(space, (as_rational(value),) * space.omega_size)

    @classmethod
    def ones(cls, space: Space) -> UncertaintyDegree:
        return cls.constant(space, 1)

    @classmethod
    def from_map(
        cls,
        space: Space,
        mapping: Mapping[str, RationalLike],
        default: RationalLike = 1,
    ) -> UncertaintyDegree:
        """Build from an eventuality-name map; omitted entries default to 1."""
        return cls(
            space, _values_from_map(space, mapping, as_rational(default), "degree")
        )


def uncertainty_variable(
    space: Space, h: Event, r: UncertaintyDegree
) -> RandomVariable:
    """The variable ``r * 1_{H_ind}``: the degree on ``h``'s indecisive set.

    Identically zero when the indecisive set is empty (and, trivially,
    when ``r`` is identically zero).
    """
    if h.space != space or r.space != space:
        raise PreconditionError("event/degree do not belong to the given space")
    ind_mask = indecisive_set(space, h).mask
    values = tuple(
        r.values[i] if (ind_mask >> i) & 1 else ZERO for i in range(space.omega_size)
    )
    return RandomVariable(space, values)


def expectation(p: ProbabilityMeasure, v: RandomVariable) -> Fraction:
    """Exact expectation of ``v`` under ``p``."""
    if p.space != v.space:
        raise PreconditionError("measure and variable live on different spaces")
    return sum((m * x for m, x in zip(p.values, v.values)), ZERO)


def interval_measure(
    p: ProbabilityMeasure, r: UncertaintyDegree, h: Event
) -> Interval:
    """The interval measure ``Q_r(H) = [P(H), P(H) + E[r * 1_{H_ind}]]``.

    The right endpoint never exceeds 1, since ``H_ind`` lies in the
    complement of ``H`` and ``r <= 1``.  With ``r`` identically 1 the
    right endpoint equals ``1 - P(H_w^c)``, the probability left once
    the weak complement is excluded.
    """
    if p.space != h.space or r.space != h.space:
        raise PreconditionError("arguments live on different spaces")
    lo = p(h)
    hi = lo + expectation(p, uncertainty_variable(h.space, h, r))
    return Interval(lo, hi)


def marginal_mass(p: ProbabilityMeasure, bits: str) -> Fraction:
    """Mass of the bit pattern: ``f(bits) = sum over labels of P(label, bits)``."""
    space = p.space
    if len(bits) != space.n or any(c not in "01" for c in bits):
        raise ConstraintError(
            f"bit sequence must be {space.n} characters of 0/1, got {bits!r}",
            witness=bits,
        )
    value = int(bits, 2)
    block = 1 << space.n
    return sum(
        (p.values[e_idx * block + value] for e_idx in range(len(space.e_labels))),
        ZERO,
    )


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the imprecise-probability axiom sweep.

    ``mode`` records how the sweep was performed:

    * ``"exhaustive-pairs"`` (|Omega| <= 12): every disjoint pair is
      checked for left-endpoint additivity and every nested pair for
      width anti-monotonicity; the witness lists are complete.
    * ``"lattice-edges"`` (12 < |Omega| <= 16): only single-element
      extensions ``S -> S + {x}`` are checked.  This is equivalent:
      edge additivity plus ``lo({}) = 0`` forces ``lo(S)`` to equal the
      sum of its singletons (induction on |S|), which is finite
      additivity; and width anti-monotonicity along edges extends to
      any nested pair by walking a chain of single-element insertions.
      Witness lists then contain violating edges rather than all pairs.
    """

    boundary_ok: bool
    additive: bool
    additivity_witnesses: tuple[tuple[Event, Event], ...]
    widths_antimonotone: bool
    width_witnesses: tuple[tuple[Event, Event], ...]
    mode: str
    boundary_detail: str | None = field(default=None)

    @property
    def passed(self) -> bool:
        return self.boundary_ok and self.additive and self.widths_antimonotone


_EXHAUSTIVE_LIMIT = 12
_EDGE_LIMIT = 16


def validate_imprecise(q: Mapping[Event, Interval]) -> ValidationReport:
    """Check the two imprecise-probability axioms on a complete event map.

    ``q`` must assign an :class:`Interval` to *every* event of one
    space with at most 16 eventualities.  The report states whether

    a. ``H -> lo(q(H))`` is finitely additive with ``lo(q({})) = 0``
       and ``lo(q(Omega)) = 1``, and
    b. ``H1 <= H2`` implies ``width(q(H2)) <= width(q(H1))``,

    listing the violating pairs for each failed axiom (all of them in
    exhaustive mode, all violating lattice edges above 12 eventualities
    — see :class:`ValidationReport`).
    """
    if not q:
        raise ConstraintError("empty interval map")
    space = next(iter(q)).space
    size = space.omega_size
    if size > _EDGE_LIMIT:
        raise PreconditionError(
            f"validate_imprecise handles at most {_EDGE_LIMIT} eventualities, got {size}"
        )
    n_events = 1 << size
    if len(q) != n_events:
        raise ConstraintError(
            f"interval map must cover all {n_events} events, got {len(q)}"
        )

    lo = [ZERO] * n_events
    width = [ZERO] * n_events
    for event, interval in q.items():
        if event.space != space:
            raise ConstraintError("interval map mixes spaces")
        lo[event.mask] = interval.lo
        width[event.mask] = interval.width

    full = n_events - 1
    boundary_ok = lo[0] == 0 and lo[full] == 1
    detail = None
    if not boundary_ok:
        detail = f"lo({{}}) = {lo[0]}, lo(Omega) = {lo[full]}"

    additivity_bad: list[tuple[Event, Event]] = []
    width_bad: list[tuple[Event, Event]] = []

    if size <= _EXHAUSTIVE_LIMIT:
        mode = "exhaustive-pairs"
        for a in range(1, n_events):
            comp = full & ~a
            b = comp
            while b:
                if b < a and lo[a | b] != lo[a] + lo[b]:
                    additivity_bad.append((Event(space, a), Event(space, b)))
                b = (b - 1) & comp
        for sup in range(n_events):
            w_sup = width[sup]
            sub = sup
            while True:
                if width[sub] < w_sup:
                    width_bad.append((Event(space, sub), Event(space, sup)))
                if sub == 0:
                    break
                sub = (sub - 1) & sup
    else:
        mode = "lattice-edges"
        for s in range(n_events):
            lo_s = lo[s]
            w_s = width[s]
            rest = full & ~s
            for x in iter_bits(rest):
                ext = s | (1 << x)
                if lo[ext] != lo_s + lo[1 << x]:
                    additivity_bad.append((Event(space, s), Event(space, ext)))
                if width[ext] > w_s:
                    width_bad.append((Event(space, s), Event(space, ext)))

    return ValidationReport(
        boundary_ok=boundary_ok,
        additive=not additivity_bad,
        additivity_witnesses=tuple(additivity_bad),
        widths_antimonotone=not width_bad,
        width_witnesses=tuple(width_bad),
        mode=mode,
        boundary_detail=detail,
    )
