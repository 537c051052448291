"""Product spaces E x {0,1}^n, their incompatibility partition, and events.

The universe handled by this package is a finite product space: every
eventuality pairs a label from a finite set ``E`` with a length-``n``
binary sequence.  Two eventualities are *incompatible* when their binary
sequences differ in every position, so the bit patterns split into
2^(n-1) complementary pairs and the universe splits into 2^(n-1)
*incompatibility classes* (``z_classes``), each of the form
``E x {bits, ~bits}``.

For an event ``H`` the classes that ``H`` does not meet form its
*indecisive set* ``H_ind``; what remains of the complement is the *weak
complement* ``H_w^c``.  Every event therefore induces the disjoint
decomposition ``Omega = H | H_w^c | H_ind``.

Canonical index convention
--------------------------
Eventuality ``(label_i, bits)`` lives at index ``i * 2**n + value``
where ``value`` reads the bit sequence most-significant-bit first.
Events are bitsets over these indices.  The textual form of an
eventuality is ``"label,bits"`` (e.g. ``"x0,10"``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import ConstraintError, PreconditionError

__all__ = [
    "Space",
    "Event",
    "build_space",
    "indecisive_set",
    "weak_complement",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Space:
    """The finite universe ``E x {0,1}^n`` with its canonical partition.

    Parameters
    ----------
    n:
        Number of binary factors; must be at least 1.
    e_labels:
        The labels of ``E``, in order.  Must be nonempty and distinct.
    """

    n: int
    e_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 1:
            raise ConstraintError(f"n must be a positive integer, got {self.n!r}")
        labels = tuple(self.e_labels)
        object.__setattr__(self, "e_labels", labels)
        if not labels:
            raise ConstraintError("e_labels must be nonempty")
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ConstraintError(f"labels must be nonempty strings, got {label!r}")
        if len(set(labels)) != len(labels):
            raise ConstraintError("labels must be distinct", witness=labels)

    @property
    def omega_size(self) -> int:
        """Number of eventualities, ``|E| * 2**n``."""
        return len(self.e_labels) * (1 << self.n)

    @property
    def full_mask(self) -> int:
        return (1 << self.omega_size) - 1

    @cached_property
    def z_classes(self) -> tuple[Event, ...]:
        """The 2^(n-1) incompatibility classes, as events.

        Class ``j`` (0-based) collects, for every label, the two
        eventualities whose bit patterns are the complementary pair
        whose representative (the pattern starting with bit 0) has
        numeric value ``j``.  Classes are ordered by representative.
        """
        block = 1 << self.n
        full_bits = block - 1
        classes = []
        for rep in range(1 << (self.n - 1)):
            partner = rep ^ full_bits
            mask = 0
            for e_idx in range(len(self.e_labels)):
                base = e_idx * block
                mask |= (1 << (base + rep)) | (1 << (base + partner))
            classes.append(Event(self, mask))
        return tuple(classes)

    @cached_property
    def universe(self) -> Event:
        return Event(self, self.full_mask)

    @property
    def empty(self) -> Event:
        return Event(self, 0)

    def index_of(self, label: str, bits: str) -> int:
        """Canonical index of the eventuality ``(label, bits)``."""
        try:
            e_idx = self.e_labels.index(label)
        except ValueError:
            raise ConstraintError(f"unknown label {label!r}", witness=label) from None
        if len(bits) != self.n or any(c not in "01" for c in bits):
            raise ConstraintError(
                f"bit sequence must be {self.n} characters of 0/1, got {bits!r}",
                witness=bits,
            )
        return e_idx * (1 << self.n) + int(bits, 2)

    def eventuality_name(self, index: int) -> str:
        """Textual form ``"label,bits"`` of the eventuality at ``index``."""
        if not 0 <= index < self.omega_size:
            raise ConstraintError(f"index {index} outside universe", witness=index)
        e_idx, value = divmod(index, 1 << self.n)
        return f"{self.e_labels[e_idx]},{value:0{self.n}b}"

    def parse_eventuality(self, text: str) -> int:
        """Parse ``"label,bits"``; the label may itself contain commas."""
        label, sep, bits = text.rpartition(",")
        if not sep:
            raise ConstraintError(
                f"eventuality must look like 'label,bits', got {text!r}", witness=text
            )
        return self.index_of(label, bits)

    def event(self, names: Iterable[str]) -> Event:
        """Build an event from an iterable of ``"label,bits"`` strings."""
        mask = 0
        for name in names:
            mask |= 1 << self.parse_eventuality(name)
        return Event(self, mask)

    def events(self) -> Iterator[Event]:
        """All 2^|Omega| events, in ascending mask order.  Exponential."""
        for mask in range(1 << self.omega_size):
            yield Event(self, mask)

    def eventualities(self) -> tuple[str, ...]:
        """All eventuality names in canonical index order."""
        return tuple(self.eventuality_name(i) for i in range(self.omega_size))


@dataclass(frozen=True)
class Event:
    """A subset of a space's eventualities, stored as a bitset."""

    space: Space
    mask: int

    def __post_init__(self) -> None:
        if not 0 <= self.mask <= self.space.full_mask:
            raise ConstraintError(
                f"event mask {self.mask:#x} has bits outside the universe",
                witness=self.mask,
            )

    def _check_same_space(self, other: Event) -> None:
        if self.space != other.space:
            raise PreconditionError("events belong to different spaces")

    def __or__(self, other: Event) -> Event:
        self._check_same_space(other)
        return Event(self.space, self.mask | other.mask)

    def __and__(self, other: Event) -> Event:
        self._check_same_space(other)
        return Event(self.space, self.mask & other.mask)

    def __sub__(self, other: Event) -> Event:
        self._check_same_space(other)
        return Event(self.space, self.mask & ~other.mask)

    def complement(self) -> Event:
        return Event(self.space, self.space.full_mask & ~self.mask)

    def __contains__(self, index: int) -> bool:
        return bool((self.mask >> index) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __le__(self, other: Event) -> bool:
        self._check_same_space(other)
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: Event) -> bool:
        self._check_same_space(other)
        return self.mask & other.mask == 0

    def members(self) -> tuple[str, ...]:
        """Member eventuality names in canonical order."""
        return tuple(self.space.eventuality_name(i) for i in self)

    def render(self) -> str:
        """Display form ``{x0,00, x0,11}`` used by the CLI."""
        return "{" + ", ".join(self.members()) + "}"

    def __repr__(self) -> str:
        return f"Event({self.render()})"

    def indecisive(self) -> Event:
        return indecisive_set(self.space, self)

    def weak_complement(self) -> Event:
        return weak_complement(self.space, self)


def build_space(n: int, e_labels: Iterable[str]) -> Space:
    """Construct a validated :class:`Space`.

    Rejects ``n = 0`` (and any non-positive ``n``), empty label lists,
    and duplicate labels.
    """
    return Space(n, tuple(e_labels))


def indecisive_set(space: Space, h: Event) -> Event:
    """Union of the incompatibility classes that ``h`` does not meet.

    Always a union of whole classes and disjoint from ``h``.  The
    degenerate cases need no special handling: every class meets the
    universe (so ``Omega_ind`` is empty) and none meets the empty event
    (so ``{}_ind`` is the whole universe).
    """
    if h.space != space:
        raise PreconditionError("event does not belong to the given space")
    mask = 0
    for z in space.z_classes:
        if z.mask & h.mask == 0:
            mask |= z.mask
    return Event(space, mask)


def weak_complement(space: Space, h: Event) -> Event:
    """The complement of ``h`` with the indecisive part removed.

    Together with ``h`` and ``indecisive_set(space, h)`` this
    partitions the universe.
    """
    ind = indecisive_set(space, h)
    return Event(space, space.full_mask & ~h.mask & ~ind.mask)
