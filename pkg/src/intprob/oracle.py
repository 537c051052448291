"""Independent brute-force re-derivations of every kernel quantity.

These functions exist only to be compared against the kernel in tests.
They deliberately share no helpers with the kernel modules: sets are
sorted index lists or Python sets (never bitmasks), incompatibility
classes are rebuilt by literally pairing bit tuples with their
complements, and integrals are accumulated in reverse level order.
Agreement between two code paths this different is what makes the
equality tests evidence rather than tautology.

All functions return plain values (tuples of rationals, lists of
indices) so the comparisons in tests read the kernel's objects on one
side and these raw values on the other.  Arguments are the kernel's own
objects; only their raw fields (``space``, ``mask``, ``values``,
``table``) are read, and internally constructed events are plain
namespaces with the same two fields.  Universes are capped at 12
eventualities.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iter_product
from types import SimpleNamespace
from typing import Callable, Mapping, Sequence

from .errors import PreconditionError

ORACLE_LIMIT = 12

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _guard(size: int) -> None:
    if size > ORACLE_LIMIT:
        raise PreconditionError(
            f"oracle handles at most {ORACLE_LIMIT} eventualities, got {size}"
        )


def _indices(event) -> list[int]:
    """Member indices of an event, read off its raw mask."""
    size = event.space.omega_size
    return [i for i in range(size) if (event.mask >> i) & 1]


def _table_key(indices) -> int:
    """Translate an index set into a capacity-table key."""
    key = 0
    for i in indices:
        key += 2**i
    return key


def _probe(space, indices) -> SimpleNamespace:
    """A minimal event stand-in for internal oracle recursion."""
    return SimpleNamespace(space=space, mask=_table_key(indices))


def oracle_eventualities(space) -> list[tuple[int, tuple[int, ...]]]:
    """All (label index, bit tuple) pairs in canonical index order."""
    _guard(space.omega_size)
    out = []
    for e_idx in range(len(space.e_labels)):
        for bits in iter_product((0, 1), repeat=space.n):
            out.append((e_idx, bits))
    return out


def oracle_z_classes(space) -> list[list[int]]:
    """Incompatibility classes as sorted index lists, in canonical order."""
    points = oracle_eventualities(space)
    classes = []
    for bits in iter_product((0, 1), repeat=space.n):
        if bits[0] != 0:
            continue
        partner = tuple(1 - b for b in bits)
        members = [
            idx
            for idx, (_, pattern) in enumerate(points)
            if pattern == bits or pattern == partner
        ]
        classes.append(sorted(members))
    return classes


def oracle_indecisive(space, h) -> list[int]:
    h_set = set(_indices(h))
    out: list[int] = []
    for cls in oracle_z_classes(space):
        if not any(i in h_set for i in cls):
            out.extend(cls)
    return sorted(out)


def oracle_weak_complement(space, h) -> list[int]:
    h_set = set(_indices(h))
    ind = set(oracle_indecisive(space, h))
    return [i for i in range(space.omega_size) if i not in h_set and i not in ind]


def oracle_uncertainty_values(space, h, r) -> list[Fraction]:
    """Pointwise values of the degree restricted to the indecisive set."""
    ind = set(oracle_indecisive(space, h))
    return [r.values[i] if i in ind else _ZERO for i in range(space.omega_size)]


def oracle_expectation(p, values: Sequence[Fraction]) -> Fraction:
    total = _ZERO
    for i in range(p.space.omega_size):
        total = total + p.values[i] * values[i]
    return total


def oracle_marginal(p, bits: str) -> Fraction:
    _guard(p.space.omega_size)
    points = oracle_eventualities(p.space)
    pattern = tuple(int(c) for c in bits)
    total = _ZERO
    for idx, (_, pat) in enumerate(points):
        if pat == pattern:
            total = total + p.values[idx]
    return total


def oracle_interval(p, r, h) -> tuple[Fraction, Fraction]:
    """[P(H), P(H) + E[r on H_ind]] by literal term-by-term summation."""
    _guard(p.space.omega_size)
    lo = _ZERO
    for i in _indices(h):
        lo = lo + p.values[i]
    hi = lo
    for i in oracle_indecisive(p.space, h):
        hi = hi + p.values[i] * r.values[i]
    return lo, hi


def oracle_choquet(nu, g) -> Fraction:
    """Choquet integral accumulated from the top level downward."""
    _guard(nu.space.omega_size)
    levels = sorted({v for v in g.values if v > 0}, reverse=True)
    total = _ZERO
    for pos, level in enumerate(levels):
        below = levels[pos + 1] if pos + 1 < len(levels) else _ZERO
        level_set = [i for i, v in enumerate(g.values) if v >= level]
        total = total + (level - below) * nu.table[_table_key(level_set)]
    return total


def _oracle_strata(
    r_values: Sequence[Fraction], support: Sequence[int]
) -> list[tuple[Fraction, list[int]]]:
    """(stratum width, active index list) rows covering (0, 1]."""
    levels = sorted({r_values[i] for i in support if r_values[i] > 0})
    rows = []
    prev = _ZERO
    for level in levels:
        active = [i for i in support if r_values[i] >= level]
        rows.append((level - prev, active))
        prev = level
    rows.append((_ONE - prev, []))
    return rows


def oracle_capacity_interval(nu, r, h) -> tuple[Fraction, Fraction]:
    _guard(nu.space.omega_size)
    lo = nu.table[_table_key(_indices(h))]
    ind = oracle_indecisive(nu.space, h)
    integral = _ZERO
    for width, active in _oracle_strata(r.values, ind):
        integral = integral + width * nu.table[_table_key(active)]
    hi = lo + integral
    if hi > 1:
        hi = _ONE
    return lo, hi


def oracle_capacity_interval_prime(nu, r, h) -> tuple[Fraction, Fraction]:
    _guard(nu.space.omega_size)
    h_idx = _indices(h)
    lo = nu.table[_table_key(h_idx)]
    ind = oracle_indecisive(nu.space, h)
    hi = _ZERO
    for width, active in _oracle_strata(r.values, ind):
        union = sorted(set(h_idx) | set(active))
        hi = hi + width * nu.table[_table_key(union)]
    return lo, hi


def oracle_conditional_interval(p, r, a, h) -> tuple[Fraction, Fraction]:
    _guard(p.space.omega_size)
    h_set = set(_indices(h))
    a_set = set(_indices(a))
    h_ind = set(oracle_indecisive(p.space, h))
    a_ind = set(oracle_indecisive(p.space, a))
    denom = _ZERO
    lo_num = _ZERO
    hi_num = _ZERO
    for i in range(p.space.omega_size):
        m = p.values[i]
        h_term = _ONE if i in h_set else (r.values[i] if i in h_ind else _ZERO)
        a_term = _ONE if i in a_set else (r.values[i] if i in a_ind else _ZERO)
        denom = denom + m * h_term
        hi_num = hi_num + m * a_term * h_term
        if i in a_set and i in h_set:
            lo_num = lo_num + m
        if i in a_set and i in h_ind:
            lo_num = lo_num + m * r.values[i]
    return lo_num / denom, hi_num / denom


def oracle_ds(nu, a, h) -> Fraction:
    _guard(nu.space.omega_size)
    h_set = set(_indices(h))
    a_set = set(_indices(a))
    hc = [i for i in range(nu.space.omega_size) if i not in h_set]
    base = nu.table[_table_key(hc)]
    top = nu.table[_table_key(sorted((a_set & h_set) | set(hc)))]
    return (top - base) / (_ONE - base)


def oracle_ds_weak(nu, a, h) -> Fraction:
    _guard(nu.space.omega_size)
    wc = oracle_weak_complement(nu.space, h)
    a_set = set(_indices(a))
    base = nu.table[_table_key(wc)]
    top = nu.table[_table_key(sorted(a_set | set(wc)))]
    return (top - base) / (_ONE - base)


def oracle_effective_weight(nu, r, h, b) -> Fraction:
    """I(B): strata of the core-plus-active-fringe, intersected with B."""
    _guard(nu.space.omega_size)
    h_set = set(_indices(h))
    b_set = set(_indices(b))
    ind = oracle_indecisive(nu.space, h)
    total = _ZERO
    for width, active in _oracle_strata(r.values, ind):
        argument = sorted(b_set & (h_set | set(active)))
        total = total + width * nu.table[_table_key(argument)]
    return total


def oracle_uncertainty_weight(nu, r, h, b) -> Fraction:
    """J(B): the grade cut applied to all of B ∩ (H ∪ H_ind)."""
    _guard(nu.space.omega_size)
    h_set = set(_indices(h))
    b_set = set(_indices(b))
    ind = set(oracle_indecisive(nu.space, h))
    support = sorted(b_set & (h_set | ind))
    total = _ZERO
    for width, active in _oracle_strata(r.values, support):
        total = total + width * nu.table[_table_key(active)]
    return total


def oracle_capacity_conditional(nu, r, a, h) -> tuple[Fraction, Fraction]:
    space = nu.space
    everything = _probe(space, range(space.omega_size))
    total = oracle_effective_weight(nu, r, h, everything)
    ia = oracle_effective_weight(nu, r, h, a)
    a_ind = _probe(space, oracle_indecisive(space, a))
    j = oracle_uncertainty_weight(nu, r, h, a_ind)
    lo = ia / total
    hi = (ia + j) / total
    if hi > 1:
        hi = _ONE
    return lo, hi


def oracle_capacity_conditional_prime(nu, r, a, h) -> tuple[Fraction, Fraction]:
    space = nu.space
    everything = _probe(space, range(space.omega_size))
    total = oracle_effective_weight(nu, r, h, everything)
    ia = oracle_effective_weight(nu, r, h, a)
    widened = _probe(
        space, sorted(set(_indices(a)) | set(oracle_indecisive(space, a)))
    )
    hi = oracle_effective_weight(nu, r, h, widened) / total
    return ia / total, hi


def oracle_cdf(
    p, r, x
) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
    """Breakpoints and per-region (lo, hi) pairs, recomputed literally."""
    _guard(p.space.omega_size)
    breakpoints = sorted(set(x.values))
    segments = [oracle_interval(p, r, _probe(p.space, []))]
    for t in breakpoints:
        members = [i for i, v in enumerate(x.values) if v <= t]
        segments.append(oracle_interval(p, r, _probe(p.space, members)))
    return breakpoints, segments


def oracle_dominates(p, r, x, y) -> tuple[bool, Fraction | None]:
    _guard(p.space.omega_size)
    grid = sorted(set(x.values) | set(y.values))
    grid = [grid[0] - 1] + grid
    for t in grid:
        below_x = _probe(p.space, [i for i, v in enumerate(x.values) if v <= t])
        below_y = _probe(p.space, [i for i, v in enumerate(y.values) if v <= t])
        f_lo, f_hi = oracle_interval(p, r, below_x)
        g_lo, g_hi = oracle_interval(p, r, below_y)
        if f_lo > g_lo or (g_hi - g_lo) > (f_hi - f_lo):
            return False, t
    return True, None


def oracle_belief_table(space, m: Mapping) -> list[Fraction]:
    """Subset sums of a mass assignment, one entry per table key."""
    _guard(space.omega_size)
    focal = [(set(_indices(event)), Fraction(w)) for event, w in m.items()]
    table = []
    for key in range(2 ** space.omega_size):
        subset = {i for i in range(space.omega_size) if (key >> i) & 1}
        value = _ZERO
        for members, weight in focal:
            if members <= subset:
                value = value + weight
        table.append(value)
    return table


def oracle_distort_table(p, g: Callable[[Fraction], Fraction]) -> list[Fraction]:
    _guard(p.space.omega_size)
    table = []
    for key in range(2 ** p.space.omega_size):
        prob = _ZERO
        for i in range(p.space.omega_size):
            if (key >> i) & 1:
                prob = prob + p.values[i]
        table.append(Fraction(g(prob)))
    return table


def _oracle_flat_points(ps) -> list[tuple[int, tuple[int, ...], int, tuple[int, ...]]]:
    """Flat eventualities as (left label, left bits, right label, right bits)."""
    out = []
    for el in range(len(ps.left.e_labels)):
        for er in range(len(ps.right.e_labels)):
            for bl in iter_product((0, 1), repeat=ps.left.n):
                for br in iter_product((0, 1), repeat=ps.right.n):
                    out.append((el, bl, er, br))
    return out


def _bits_value(bits: tuple[int, ...]) -> int:
    value = 0
    for b in bits:
        value = value * 2 + b
    return value


def _flat_masses(ps, p_left, p_right) -> list[Fraction]:
    masses = []
    for el, bl, er, br in _oracle_flat_points(ps):
        ml = p_left.values[el * 2**ps.left.n + _bits_value(bl)]
        mr = p_right.values[er * 2**ps.right.n + _bits_value(br)]
        masses.append(ml * mr)
    return masses


def oracle_product_interval(ps, p_left, p_right, h) -> tuple[Fraction, Fraction]:
    """Product interval via literal pairing of factor classes."""
    flat_size = ps.flat.omega_size
    _guard(flat_size)
    points = _oracle_flat_points(ps)
    masses = _flat_masses(ps, p_left, p_right)
    h_set = set(_indices(h))
    lo = _ZERO
    for i in h_set:
        lo = lo + masses[i]
    hi = lo
    for rep_l in iter_product((0, 1), repeat=ps.left.n):
        if rep_l[0] != 0:
            continue
        pair_l = (rep_l, tuple(1 - b for b in rep_l))
        for rep_r in iter_product((0, 1), repeat=ps.right.n):
            if rep_r[0] != 0:
                continue
            pair_r = (rep_r, tuple(1 - b for b in rep_r))
            members = [
                idx
                for idx, (el, bl, er, br) in enumerate(points)
                if bl in pair_l and br in pair_r
            ]
            if not any(i in h_set for i in members):
                for i in members:
                    hi = hi + masses[i]
    return lo, hi


def oracle_native_interval(ps, p_left, p_right, h) -> tuple[Fraction, Fraction]:
    """Native flat interval via the flat space's own classes."""
    flat_size = ps.flat.omega_size
    _guard(flat_size)
    flat_p = SimpleNamespace(
        space=ps.flat, values=_flat_masses(ps, p_left, p_right)
    )
    ones = SimpleNamespace(values=[_ONE] * flat_size)
    return oracle_interval(flat_p, ones, h)
