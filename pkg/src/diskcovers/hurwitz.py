"""Braid words, their action on monodromy sequences, and canonical forms.

The braid group on ``n`` strands acts on length-``n`` monodromy sequences on
the right: the generator ``x_i`` replaces the pair at positions ``i, i + 1``
by ``(t_{i+1}, t_{i+1} t_i t_{i+1})`` and its inverse by
``(t_i t_{i+1} t_i, t_i)``.  Words act letter by letter, left to right, so
``act(seq, u * v) == act(act(seq, u), v)``.

The classical elementary move ``O_i`` on edge-ordered graphs coincides with
the action of the inverse generator; :func:`canonicalize` produces a
replayable certificate (sheet renumbering plus a move word) taking any
connected sequence to its canonical form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .core import (
    CycleType,
    DisconnectedCoveringError,
    MonodromySequence,
    Permutation,
    canonical_target,
    conjugating_permutation,
    omega_class,
    total_monodromy,
)

FORWARD = "forward"
INVERSE = "inverse"

#: A sequence of elementary moves: pairs (position, FORWARD | INVERSE).
MoveWord = tuple[tuple[int, str], ...]


@dataclass(frozen=True)
class BraidWord:
    """A word in the standard braid generators on a fixed number of strands.

    Letters are nonzero integers: ``+i`` is the generator ``x_i``, ``-i`` its
    inverse.  Only free reduction is ever performed; braid-relation rewriting
    is out of scope.
    """

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.strands < 0:
            raise ValueError("strand count must be nonnegative")
        for e in self.letters:
            if e == 0 or abs(e) > self.strands - 1:
                raise ValueError(f"letter {e} is not a generator index on {self.strands} strands")

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def __pow__(self, exponent: int) -> "BraidWord":
        if exponent >= 0:
            return BraidWord(self.strands, self.letters * exponent)
        return self.inverse() ** (-exponent)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-e for e in reversed(self.letters)))

    def reduced(self) -> "BraidWord":
        """Freely reduce, cancelling adjacent letters ``e, -e``."""
        stack: list[int] = []
        for e in self.letters:
            if stack and stack[-1] == -e:
                stack.pop()
            else:
                stack.append(e)
        return BraidWord(self.strands, tuple(stack))


def act(seq: MonodromySequence, word: BraidWord) -> MonodromySequence:
    """Apply a braid word to a monodromy sequence, letters left to right.

    The product of the entries is preserved; only the sequence changes.
    """
    if word.strands != seq.length:
        raise ValueError(f"braid on {word.strands} strands cannot act on {seq.length} entries")
    entries = list(seq.entries)
    for e in word.letters:
        i = abs(e) - 1
        t, u = entries[i], entries[i + 1]
        if e > 0:
            entries[i], entries[i + 1] = u, t.image_under(u)
        else:
            entries[i], entries[i + 1] = u.image_under(t), t
    return MonodromySequence(seq.degree, tuple(entries))


def elementary_move(seq: MonodromySequence, position: int, direction: str = FORWARD) -> MonodromySequence:
    """The elementary move ``O_i`` on the edge-ordered graph, or its inverse.

    Forward: adjacent equal or disjoint entries swap; entries sharing exactly
    one sheet, say (a b), (b c), become (a c), (a b).  The forward move agrees
    with ``act`` by the inverse generator.
    """
    if direction not in (FORWARD, INVERSE):
        raise ValueError(f"unknown move direction {direction!r}")
    if not 1 <= position <= seq.length - 1:
        raise ValueError(f"move position {position} out of range for {seq.length} entries")
    entries = list(seq.entries)
    t, u = entries[position - 1], entries[position]
    if t == u or t.is_disjoint_from(u):
        entries[position - 1], entries[position] = u, t
    elif direction == FORWARD:
        # t = (a b), u = (b c) with b the shared sheet: result (a c), (a b).
        entries[position - 1], entries[position] = u.image_under(t), t
    else:
        # t = (a c), u = (a b) with a the shared sheet: result (a b), (b c).
        entries[position - 1], entries[position] = u, t.image_under(u)
    return MonodromySequence(seq.degree, tuple(entries))


def apply_moves(seq: MonodromySequence, moves: MoveWord) -> MonodromySequence:
    for position, direction in moves:
        seq = elementary_move(seq, position, direction)
    return seq


@dataclass(frozen=True)
class CanonicalizationResult:
    """A replayable certificate reducing a sequence to canonical form.

    Renumbering the input's sheets by ``relabel`` and then applying ``moves``
    yields ``canonical``, which equals the canonical target for the input's
    degree, length and cycle type.
    """

    relabel: Permutation
    moves: MoveWord
    canonical: MonodromySequence


def replay_certificate(seq: MonodromySequence, result: CanonicalizationResult) -> MonodromySequence:
    """Re-run a certificate against its input; the caller compares the outcome
    with ``result.canonical``."""
    return apply_moves(seq.renumber_sheets(result.relabel), result.moves)


@lru_cache(maxsize=None)
def _words_from_target(degree: int, length: int, parts: tuple[int, ...]) -> dict[MonodromySequence, tuple[int, ...]]:
    """Breadth-first transport words from the canonical target to every
    sequence with the same entry product.

    Every connected sequence whose product equals the canonical representative
    permutation appears as a key; the value transports the target to it.
    """
    target = canonical_target(degree, length, CycleType(parts, degree))
    letters = [s * i for i in range(1, length) for s in (1, -1)]
    words: dict[MonodromySequence, tuple[int, ...]] = {target: ()}
    queue: deque[MonodromySequence] = deque([target])
    while queue:
        current = queue.popleft()
        word = words[current]
        for e in letters:
            image = act(current, BraidWord(length, (e,)))
            if image not in words:
                words[image] = word + (e,)
                queue.append(image)
    return words


def canonicalize(seq: MonodromySequence) -> CanonicalizationResult:
    """Certificate taking a connected sequence to its canonical form.

    The sheets are renumbered so that the entry product becomes the canonical
    representative of its cycle type; a breadth-first search through the
    action orbit then supplies the move word.  Any strategy would do, since
    the certificate is checked by replay.
    """
    if not seq.is_connected():
        raise DisconnectedCoveringError("canonicalization is only defined for connected coverings")
    omega = omega_class(seq)
    target = canonical_target(seq.degree, seq.length, omega)
    relabel = conjugating_permutation(total_monodromy(seq), total_monodromy(target))
    relabelled = seq.renumber_sheets(relabel)
    reach = _words_from_target(seq.degree, seq.length, omega.parts)
    from_target = reach[relabelled]
    # Invert the transport word; the inverse generator realises the forward move.
    moves = tuple(
        (abs(e), FORWARD if e > 0 else INVERSE) for e in reversed(from_target)
    )
    return CanonicalizationResult(relabel=relabel, moves=moves, canonical=target)
