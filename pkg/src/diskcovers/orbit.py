"""Orbit enumeration for the braid action on monodromy sequences.

The orbit of a sequence is finite: there are at most ``(d(d-1)/2)^n``
sequences altogether, and the stabilizer of a sequence is exactly its group
of liftable braids, so the orbit size equals that subgroup's index in the
braid group.  A breadth-first spanning tree provides coset representative
words, and the classical Schreier construction turns it into a generating set
for the stabilizer.

``classify_all`` is the brute-force classification oracle: it partitions all
sequences of a given size into classes under the action together with
simultaneous sheet renumbering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import CycleType, MonodromySequence, Transposition, omega_class
from .hurwitz import BraidWord, act


class CapExceeded(RuntimeError):
    """An enumeration grew past the caller's cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap


def enumeration_bound(degree: int, length: int) -> int:
    """Total number of length-``n`` transposition sequences on ``d`` sheets:
    the a priori bound on every orbit size and stabilizer index."""
    return (degree * (degree - 1) // 2) ** length


@dataclass
class OrbitTable:
    """A breadth-first orbit with its spanning tree.

    ``elements`` lists the orbit in discovery order starting at ``root``;
    ``tree`` maps each non-root element to ``(parent, letter)`` where acting
    on the parent by the single-letter word reaches the element.
    """

    root: MonodromySequence
    elements: tuple[MonodromySequence, ...]
    tree: dict[MonodromySequence, tuple[MonodromySequence, int]] = field(repr=False)
    cap: int

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, seq: MonodromySequence) -> bool:
        return seq in self.tree or seq == self.root

    def word_to(self, element: MonodromySequence) -> BraidWord:
        """The spanning-tree word transporting the root to ``element``."""
        letters: list[int] = []
        current = element
        while current != self.root:
            current, letter = self.tree[current]
            letters.append(letter)
        return BraidWord(self.root.length, tuple(reversed(letters)))


def hurwitz_orbit(seq: MonodromySequence, cap: int | None = None) -> OrbitTable:
    """Breadth-first closure of a sequence under the braid action.

    Generators are tried in ascending index order, the inverse right after
    the forward letter, so the spanning tree is deterministic.  Raises
    :class:`CapExceeded` if more than ``cap`` elements appear (default: the
    a priori bound).
    """
    if cap is None:
        cap = enumeration_bound(seq.degree, seq.length)
    if cap < 1:
        raise ValueError("cap must be at least 1")
    letters = [s * i for i in range(1, seq.length) for s in (1, -1)]
    elements = [seq]
    tree: dict[MonodromySequence, tuple[MonodromySequence, int]] = {}
    seen = {seq}
    cursor = 0
    while cursor < len(elements):
        current = elements[cursor]
        cursor += 1
        for e in letters:
            image = act(current, BraidWord(seq.length, (e,)))
            if image in seen:
                continue
            if len(seen) >= cap:
                raise CapExceeded(f"orbit exceeds cap {cap}", cap)
            seen.add(image)
            tree[image] = (current, e)
            elements.append(image)
    return OrbitTable(root=seq, elements=tuple(elements), tree=tree, cap=cap)


def stabilizer_index(seq: MonodromySequence, cap: int | None = None) -> int:
    """Index of the liftable-braid subgroup in the braid group: the orbit size."""
    return len(hurwitz_orbit(seq, cap))


def _dedup_key(word: BraidWord) -> tuple:
    """Identify a word with its inverse, preferring the fewer-negatives form."""
    inv = word.inverse()
    mine = (sum(1 for e in word.letters if e < 0), word.letters)
    theirs = (sum(1 for e in inv.letters if e < 0), inv.letters)
    return min(mine, theirs)


def schreier_generators(seq: MonodromySequence, cap: int | None = None) -> list[BraidWord]:
    """Generators of the liftable-braid group from the orbit spanning tree.

    For each orbit element ``u`` with tree word ``t_u`` and each generator
    ``g``, the word ``t_u g t_{(u)g}^-1`` fixes the root, and together these
    words generate its stabilizer.  Words are freely reduced, trivial ones
    dropped, and the set deduplicated up to inversion.
    """
    table = hurwitz_orbit(seq, cap)
    n = seq.length
    letters = [s * i for i in range(1, n) for s in (1, -1)]
    words: dict[tuple, BraidWord] = {}
    tree_words = {element: table.word_to(element) for element in table.elements}
    for element in table.elements:
        for e in letters:
            image = act(element, BraidWord(n, (e,)))
            candidate = (
                tree_words[element] * BraidWord(n, (e,)) * tree_words[image].inverse()
            ).reduced()
            if not candidate.letters:
                continue
            words.setdefault(_dedup_key(candidate), candidate)
    return [words[key] for key in words]


@dataclass(frozen=True)
class OrbitClass:
    """One class of sequences under the action plus sheet renumbering."""

    representative: MonodromySequence
    count: int
    omega: CycleType
    connected: bool


def all_sequences(degree: int, length: int) -> list[MonodromySequence]:
    """Every length-``n`` transposition sequence on ``d`` sheets, in
    lexicographic order."""
    swaps = [
        Transposition(a, b)
        for a in range(1, degree + 1)
        for b in range(a + 1, degree + 1)
    ]
    return [
        MonodromySequence(degree, entries)
        for entries in itertools.product(swaps, repeat=length)
    ]


def classify_all(degree: int, length: int, cap: int | None = None) -> list[OrbitClass]:
    """Partition all sequences of the given size into classes under the braid
    action combined with simultaneous sheet renumbering.

    Renumbering is generated by the adjacent sheet swaps, so the classes are
    exactly the equivalence classes of coverings.  Classes are reported with
    their least member as representative, sorted by representative.
    """
    if cap is None:
        cap = 10**6
    total = enumeration_bound(degree, length)
    if total > cap:
        raise CapExceeded(f"{total} sequences exceed cap {cap}", cap)
    sequences = all_sequences(degree, length)
    ids = {seq: i for i, seq in enumerate(sequences)}
    parent = list(range(len(sequences)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    relabels = [
        Transposition(k, k + 1).as_permutation(degree) for k in range(1, degree)
    ]
    for seq, i in ids.items():
        for g in range(1, length):
            union(i, ids[act(seq, BraidWord(length, (g,)))])
        for relabel in relabels:
            union(i, ids[seq.renumber_sheets(relabel)])

    members: dict[int, list[MonodromySequence]] = {}
    for seq, i in ids.items():
        members.setdefault(find(i), []).append(seq)
    classes = []
    for group in members.values():
        representative = min(group)
        classes.append(
            OrbitClass(
                representative=representative,
                count=len(group),
                omega=omega_class(representative),
                connected=representative.is_connected(),
            )
        )
    return sorted(classes, key=lambda c: c.representative)
