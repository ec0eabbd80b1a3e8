"""Combinatorial encodings of simple branched coverings of the disk.

A simple branched covering of the disk with ``d`` sheets and ``n`` branch
points is determined, up to equivalence, by the sequence of transpositions
that a fundamental system of curves reads off, one transposition per branch
point.  This module provides that sequence type together with its classical
invariants (total boundary monodromy, cycle type, components, Euler
characteristic, boundary count, genus), the equivalence test for connected
coverings, and the canonical sequence representing each equivalence class.

Conventions used throughout the package:

- sheets and branch points are numbered from 1;
- permutations compose left to right: ``(k)(s * t) == ((k)s)t``;
- transpositions are stored with the smaller sheet first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


class NotRealizable(ValueError):
    """No connected covering exists with the requested invariants."""


class DisconnectedCoveringError(ValueError):
    """Raised by operations that are only defined for connected coverings."""


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of the sheets ``{1, ..., d}`` stored as a tuple of images.

    ``images[k - 1]`` is the image of sheet ``k``.  Composition is left to
    right, matching the right-action style used for everything else:

    >>> s = Transposition(1, 2).as_permutation(3)
    >>> t = Transposition(2, 3).as_permutation(3)
    >>> (s * t)(1)
    3
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images!r}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(1, degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, sheet: int) -> int:
        return self.images[sheet - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            raise ValueError("cannot compose permutations of different degrees")
        return Permutation(tuple(other.images[v - 1] for v in self.images))

    def inverse(self) -> "Permutation":
        images = [0] * self.degree
        for k, v in enumerate(self.images, start=1):
            images[v - 1] = k
        return Permutation(tuple(images))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> tuple[tuple[int, ...], ...]:
        """Disjoint cycles, each starting at its least sheet, ordered by that sheet."""
        out: list[tuple[int, ...]] = []
        seen = [False] * self.degree
        for start in range(1, self.degree + 1):
            if seen[start - 1]:
                continue
            cycle = [start]
            seen[start - 1] = True
            k = self(start)
            while k != start:
                cycle.append(k)
                seen[k - 1] = True
                k = self(k)
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return tuple(out)

    def cycle_type(self) -> "CycleType":
        parts = sorted((len(c) for c in self.cycles()), reverse=True)
        return CycleType(tuple(parts), self.degree)

    def orbit_count(self) -> int:
        """Number of cycles, fixed points included."""
        return self.degree - sum(len(c) - 1 for c in self.cycles())


@dataclass(frozen=True, order=True)
class Transposition:
    """An unordered swap of two distinct sheets, stored with ``a < b``."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"degenerate transposition ({self.a} {self.b})")
        if self.a > self.b:
            a, b = self.a, self.b
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)
        if self.a < 1:
            raise ValueError(f"sheet indices start at 1: ({self.a} {self.b})")

    @property
    def sheets(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __call__(self, sheet: int) -> int:
        if sheet == self.a:
            return self.b
        if sheet == self.b:
            return self.a
        return sheet

    def image_under(self, other: "Transposition") -> "Transposition":
        """The conjugate transposition, swapping the images of the sheets.

        Transpositions are involutions, so conjugating on either side gives
        the same result: the swap of ``other(a)`` and ``other(b)``.
        """
        return Transposition(other(self.a), other(self.b))

    def is_disjoint_from(self, other: "Transposition") -> bool:
        return self.a != other.a and self.a != other.b and self.b != other.a and self.b != other.b

    def shares_one_sheet_with(self, other: "Transposition") -> bool:
        return len({self.a, self.b} & {other.a, other.b}) == 1

    def as_permutation(self, degree: int) -> Permutation:
        if self.b > degree:
            raise ValueError(f"({self.a} {self.b}) does not act on {degree} sheets")
        images = list(range(1, degree + 1))
        images[self.a - 1], images[self.b - 1] = self.b, self.a
        return Permutation(tuple(images))


@dataclass(frozen=True)
class CycleType:
    """Nontrivial cycle lengths of a permutation, sorted descending.

    Fixed points are omitted; the ambient degree is carried separately so
    that cycle types of coverings with different sheet counts never compare
    equal by accident.
    """

    parts: tuple[int, ...]
    degree: int

    def __post_init__(self) -> None:
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"cycle lengths must be sorted descending: {self.parts!r}")
        if any(p < 2 for p in self.parts):
            raise ValueError(f"nontrivial cycles have length >= 2: {self.parts!r}")
        if sum(self.parts) > self.degree:
            raise ValueError(f"cycle lengths {self.parts!r} exceed degree {self.degree}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    @property
    def partial_sums(self) -> tuple[int, ...]:
        out, total = [], 0
        for p in self.parts:
            total += p
            out.append(total)
        return tuple(out)


@dataclass(frozen=True, order=True)
class MonodromySequence:
    """The monodromy data of a simple branched covering of the disk.

    ``degree`` counts the sheets; ``entries`` lists, in order, the
    transposition read off around each branch point.  Instances are immutable
    and hashable, so they can serve as dictionary keys during orbit
    enumeration.
    """

    degree: int
    entries: tuple[Transposition, ...]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be at least 1, got {self.degree}")
        for t in self.entries:
            if t.b > self.degree:
                raise ValueError(f"entry ({t.a} {t.b}) exceeds degree {self.degree}")

    @classmethod
    def from_pairs(cls, degree: int, pairs: Iterable[tuple[int, int]]) -> "MonodromySequence":
        return cls(degree, tuple(Transposition(a, b) for a, b in pairs))

    @property
    def length(self) -> int:
        return len(self.entries)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(t.sheets for t in self.entries)

    def renumber_sheets(self, relabel: Permutation) -> "MonodromySequence":
        """Apply a sheet renumbering to every entry simultaneously."""
        if relabel.degree != self.degree:
            raise ValueError("relabelling permutation degree mismatch")
        return MonodromySequence(
            self.degree,
            tuple(Transposition(relabel(t.a), relabel(t.b)) for t in self.entries),
        )

    def is_connected(self) -> bool:
        return len(components(self).blocks) == 1


@dataclass(frozen=True)
class ComponentSignature:
    """The partition of the sheets into components, with branch counts.

    Each block is a pair ``(sheets, branch_points)`` where ``sheets`` is the
    sorted tuple of sheet numbers of one component of the covering surface
    and ``branch_points`` counts the entries supported inside it.  Blocks are
    ordered by their least sheet.
    """

    blocks: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)

    def sheet_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sheets for sheets, _ in self.blocks)

    def singleton_sheets(self) -> tuple[int, ...]:
        return tuple(sheets[0] for sheets, _ in self.blocks if len(sheets) == 1)


@dataclass(frozen=True)
class ComponentInvariants:
    sheets: tuple[int, ...]
    euler: int
    boundary: int
    genus: int


@dataclass(frozen=True)
class SurfaceInvariants:
    """Topological invariants of the covering surface.

    ``euler`` is the Euler characteristic ``d - n``; ``boundary`` counts the
    boundary circles, one per cycle (fixed points included) of the total
    monodromy; ``per_component`` refines both over the components.
    """

    euler: int
    boundary: int
    per_component: tuple[ComponentInvariants, ...]


def total_monodromy(seq: MonodromySequence) -> Permutation:
    """The monodromy of the boundary of the disk: the left-to-right product of
    all entries.

    >>> total_monodromy(MonodromySequence.from_pairs(3, [(1, 2), (2, 3)])).images
    (3, 1, 2)
    """
    # Build the product incrementally.  Post-composing by (a b) swaps the
    # entries at the current preimages of a and b, so one pass is O(n + d).
    d = seq.degree
    images = list(range(1, d + 1))
    pos = list(range(d))  # pos[v - 1] = index k with images[k] == v
    for t in seq.entries:
        pa, pb = pos[t.a - 1], pos[t.b - 1]
        images[pa], images[pb] = t.b, t.a
        pos[t.a - 1], pos[t.b - 1] = pb, pa
    return Permutation(tuple(images))


def omega_class(seq: MonodromySequence) -> CycleType:
    """Cycle type of the total monodromy: the classifying invariant for
    connected coverings of fixed degree and branch count."""
    return total_monodromy(seq).cycle_type()


def components(seq: MonodromySequence) -> ComponentSignature:
    """Partition the sheets into orbits of the subgroup generated by the
    entries, counting the branch points supported in each block."""
    parent = list(range(seq.degree + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for t in seq.entries:
        ra, rb = find(t.a), find(t.b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    blocks: dict[int, list[int]] = {}
    for sheet in range(1, seq.degree + 1):
        blocks.setdefault(find(sheet), []).append(sheet)
    counts = dict.fromkeys(blocks, 0)
    for t in seq.entries:
        counts[find(t.a)] += 1
    return ComponentSignature(
        tuple((tuple(sheets), counts[root]) for root, sheets in sorted(blocks.items()))
    )


def surface_invariants(seq: MonodromySequence) -> SurfaceInvariants:
    """Euler characteristic, boundary count and genus of the covering surface,
    globally and per component."""
    omega = total_monodromy(seq)
    sig = components(seq)
    per_component = []
    for sheets, branch_count in sig.blocks:
        block = set(sheets)
        # The total monodromy preserves each component, so its cycles within
        # the block count that component's boundary circles.
        boundary = 0
        seen: set[int] = set()
        for s in sheets:
            if s in seen:
                continue
            k = s
            while k not in seen:
                seen.add(k)
                k = omega(k)
                assert k in block, "total monodromy must preserve components"
            boundary += 1
        euler = len(sheets) - branch_count
        genus2 = 2 - boundary - euler
        assert genus2 >= 0 and genus2 % 2 == 0, "component genus must be a nonnegative integer"
        per_component.append(ComponentInvariants(sheets, euler, boundary, genus2 // 2))
    return SurfaceInvariants(
        euler=seq.degree - seq.length,
        boundary=omega.orbit_count(),
        per_component=tuple(per_component),
    )


def _require_connected(seq: MonodromySequence, what: str) -> None:
    if not seq.is_connected():
        raise DisconnectedCoveringError(f"{what} is only defined for connected coverings")


def is_equivalent(seq: MonodromySequence, other: MonodromySequence) -> bool:
    """Whether two connected coverings are equivalent: same degree, same
    number of branch points and the same total-monodromy cycle type."""
    _require_connected(seq, "equivalence")
    _require_connected(other, "equivalence")
    return (
        seq.degree == other.degree
        and seq.length == other.length
        and omega_class(seq) == omega_class(other)
    )


def is_disk(seq: MonodromySequence) -> bool:
    """Whether a connected covering surface is a disk, i.e. the degree exceeds
    the branch count by exactly one."""
    _require_connected(seq, "the disk test")
    return seq.degree == seq.length + 1


def disk_covering(branch_points: int) -> MonodromySequence:
    """The canonical disk-over-disk covering with ``n`` branch points:
    the chain (1 2), (2 3), ..., (n n+1) on n + 1 sheets."""
    if branch_points < 0:
        raise ValueError("branch point count must be nonnegative")
    return MonodromySequence.from_pairs(
        branch_points + 1, [(i, i + 1) for i in range(1, branch_points + 1)]
    )


def canonical_target(degree: int, length: int, omega: CycleType | Iterable[int]) -> MonodromySequence:
    """The canonical connected sequence with the given degree, length and
    total-monodromy cycle type.

    The sequence consists of chains realising each cycle, separated by pairs
    of equal transpositions, followed by a ladder of pairs climbing to the
    last sheet and a run of repeated pairs on the top two sheets.  Raises
    :class:`NotRealizable` when no connected covering has these invariants
    (pair count negative, parity mismatch, or no entries to connect more
    than one sheet).
    """
    if degree < 1 or length < 0:
        raise ValueError("degree must be positive and length nonnegative")
    if not isinstance(omega, CycleType):
        omega = CycleType(tuple(sorted(omega, reverse=True)), degree)
    elif omega.degree != degree:
        raise ValueError(f"cycle type degree {omega.degree} != covering degree {degree}")

    parts = omega.parts
    m = len(parts) if parts else 1
    l_last = omega.partial_sums[-1] if parts else 1
    if (length - m + l_last) % 2 != 0:
        raise NotRealizable(
            f"parity mismatch: no product of {length} transpositions has cycle type {parts}"
        )
    tail_pairs = (length - m + l_last) // 2 - degree + 1
    if tail_pairs < 0:
        raise NotRealizable(
            f"too few branch points to connect {degree} sheets with cycle type {parts}"
        )
    if degree == 1 and length > 0:
        raise NotRealizable("a single sheet admits no transpositions")

    pairs: list[tuple[int, int]] = []
    prev = 0
    for idx, c in enumerate(parts):
        pairs.extend((k, k + 1) for k in range(prev + 1, prev + c))
        prev += c
        if idx < m - 1:
            pairs.extend([(prev, prev + 1)] * 2)
    for k in range(l_last, degree):
        pairs.extend([(k, k + 1)] * 2)
    pairs.extend([(degree - 1, degree)] * (2 * tail_pairs))
    assert len(pairs) == length, "canonical construction must produce the requested length"
    return MonodromySequence.from_pairs(degree, pairs)


def conjugating_permutation(source: Permutation, target: Permutation) -> Permutation:
    """A permutation ``r`` with ``r.inverse() * source * r == target``.

    Built by matching the cycles of the two permutations, longest first and
    ties broken by least sheet, so the choice is deterministic.  Raises
    ``ValueError`` when the cycle types differ.
    """
    if source.cycle_type() != target.cycle_type():
        raise ValueError("permutations with different cycle types are not conjugate")

    def ordered_cycles(p: Permutation) -> list[tuple[int, ...]]:
        return sorted(p.cycles(include_fixed=True), key=lambda c: (-len(c), c[0]))

    images = [0] * source.degree
    for src, dst in zip(ordered_cycles(source), ordered_cycles(target)):
        for a, b in zip(src, dst):
            images[a - 1] = b
    return Permutation(tuple(images))
