"""Restrictions of a covering to the subdisk left after cutting along curves.

Cutting the base disk along the fundamental-system curves indexed by
``i_1 < ... < i_k`` leaves a covering with the same sheets and ``n - k``
branch points.  The surviving monodromies depend on which end of the cut arc
serves as the new base point:

- start base point: entries below ``i_1`` are unchanged; an entry between
  ``i_l`` and ``i_{l+1}`` is conjugated by the removed entries below it,
  nearest first; entries above ``i_k`` are conjugated by all removed entries,
  nearest first.
- end base point: symmetric, conjugating by the removed entries above,
  nearest first.

All sheets are kept, so trivial sheets show up as singleton components and
component signatures can be compared sheet by sheet.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ComponentSignature,
    MonodromySequence,
    Permutation,
    Transposition,
    components,
    total_monodromy,
)

START = "start"
END = "end"


@dataclass(frozen=True)
class RestrictionSpec:
    """Which curves to cut along (sorted, 1-based) and which base point to use."""

    indices: tuple[int, ...]
    base: str

    def __post_init__(self) -> None:
        if not self.indices:
            raise ValueError("a restriction must remove at least one curve")
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError(f"indices must be sorted and distinct: {self.indices!r}")
        if self.indices[0] < 1:
            raise ValueError("curve indices start at 1")
        if self.base not in (START, END):
            raise ValueError(f"base point must be {START!r} or {END!r}")

    def validate_for(self, seq: MonodromySequence) -> None:
        if self.indices[-1] > seq.length:
            raise ValueError(
                f"index {self.indices[-1]} out of range for {seq.length} branch points"
            )


def restrict(seq: MonodromySequence, spec: RestrictionSpec) -> MonodromySequence:
    """The monodromy sequence of the covering restricted to the cut disk."""
    spec.validate_for(seq)
    removed = spec.indices
    entries: list[Transposition] = []
    for j in range(1, seq.length + 1):
        if j in removed:
            continue
        t = seq.entries[j - 1]
        if spec.base == START:
            conjugators = [i for i in removed if i < j]
            for i in reversed(conjugators):  # nearest removed curve first
                t = t.image_under(seq.entries[i - 1])
        else:
            conjugators = [i for i in removed if i > j]
            for i in conjugators:  # nearest removed curve first
                t = t.image_under(seq.entries[i - 1])
        entries.append(t)
    return MonodromySequence(seq.degree, tuple(entries))


def restricted_total_monodromy(seq: MonodromySequence, spec: RestrictionSpec) -> Permutation:
    """Boundary monodromy of the cut disk, computed without restricting.

    Start base point: the total monodromy followed by the removed entries in
    descending index order.  End base point: the removed entries in descending
    order followed by the total monodromy.
    """
    spec.validate_for(seq)
    product = Permutation.identity(seq.degree)
    for i in reversed(spec.indices):
        product = product * seq.entries[i - 1].as_permutation(seq.degree)
    omega = total_monodromy(seq)
    return omega * product if spec.base == START else product * omega


def restriction_signature(seq: MonodromySequence, spec: RestrictionSpec) -> ComponentSignature:
    """Component signature of the restricted covering."""
    return components(restrict(seq, spec))
