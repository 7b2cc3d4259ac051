"""Dyck paths as step words, with the pointwise-height order and covering moves.

A Dyck path of semilength n is a word over {u, d} of length 2n whose height
profile (partial sums of +1 for u, -1 for d) stays nonnegative and ends at 0.
Paths of equal semilength are ordered by pointwise comparison of height
profiles; b covers a exactly when b is obtained from a by turning one valley
factor du into a peak ud.
"""

from __future__ import annotations

from collections import Counter
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InvalidWordError, ResourceLimitError

DEFAULT_MAX_SEMILENGTH = 14

# Canonical word order puts u before d, so u^n d^n (the maximum path) sorts first.
_CANONICAL = str.maketrans("ud", "ab")


def canonical_key(word: str) -> str:
    return word.translate(_CANONICAL)


def _check_word(word: str) -> None:
    height = 0
    for i, step in enumerate(word):
        if step == "u":
            height += 1
        elif step == "d":
            height -= 1
            if height < 0:
                raise InvalidWordError("path drops below the axis", i)
        else:
            raise InvalidWordError(f"invalid step {step!r}, expected 'u' or 'd'", i)
    if height != 0:
        raise InvalidWordError(f"unbalanced word, final height {height}", len(word))


@total_ordering
class DyckPath:
    """An immutable Dyck path, hashable and ordered by the canonical word order."""

    __slots__ = ("word", "_heights")

    def __init__(self, word: str):
        _check_word(word)
        self.word = word
        self._heights = None

    @classmethod
    def _from_valid(cls, word: str) -> DyckPath:
        # Fast path for words produced by operations that preserve validity.
        path = object.__new__(cls)
        path.word = word
        path._heights = None
        return path

    @property
    def semilength(self) -> int:
        return len(self.word) // 2

    @property
    def heights(self) -> tuple[int, ...]:
        """Height profile of length 2n + 1, starting and ending at 0."""
        if self._heights is None:
            heights = [0]
            h = 0
            for step in self.word:
                h += 1 if step == "u" else -1
                heights.append(h)
            self._heights = tuple(heights)
        return self._heights

    def is_below(self, other: DyckPath) -> bool:
        """Pointwise comparison of height profiles (non-strict)."""
        if len(self.word) != len(other.word):
            raise ValueError("paths have different semilengths")
        return all(a <= b for a, b in zip(self.heights, other.heights))

    def valley_positions(self) -> tuple[int, ...]:
        """Indices i with word[i:i+2] == 'du'."""
        word = self.word
        return tuple(i for i in range(len(word) - 1) if word[i] == "d" and word[i + 1] == "u")

    def valley_abscissae(self) -> tuple[int, ...]:
        """x-coordinates of valley bottoms (the vertex after the d step)."""
        return tuple(i + 1 for i in self.valley_positions())

    def upper_covers(self) -> tuple[DyckPath, ...]:
        """Paths covering this one: each valley du flipped to a peak ud."""
        word = self.word
        return tuple(
            DyckPath._from_valid(word[:i] + "ud" + word[i + 2:])
            for i in self.valley_positions()
        )

    def occurrences(self, factor: str) -> tuple[int, ...]:
        """All start positions of factor as a contiguous subword, overlaps included."""
        if not factor:
            raise ValueError("factor must be nonempty")
        positions = []
        start = self.word.find(factor)
        while start != -1:
            positions.append(start)
            start = self.word.find(factor, start + 1)
        return tuple(positions)

    def count_factor(self, factor: str) -> int:
        return len(self.occurrences(factor))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DyckPath) and self.word == other.word

    def __lt__(self, other: DyckPath) -> bool:
        if not isinstance(other, DyckPath):
            return NotImplemented
        return canonical_key(self.word) < canonical_key(other.word)

    def __hash__(self) -> int:
        return hash(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    def __repr__(self) -> str:
        return f"DyckPath({self.word!r})"


def iter_words(n: int) -> Iterator[str]:
    """Yield all Dyck words of semilength n in canonical order (u before d)."""
    if n == 0:
        yield ""
        return
    length = 2 * n
    buf = [""] * length

    def rec(pos: int, ups: int) -> Iterator[str]:
        if pos == length:
            yield "".join(buf)
            return
        height = 2 * ups - pos
        if ups < n:
            buf[pos] = "u"
            yield from rec(pos + 1, ups + 1)
        if height > 0:
            buf[pos] = "d"
            yield from rec(pos + 1, ups)

    yield from rec(0, 0)


def generate_paths(n: int, max_semilength: int = DEFAULT_MAX_SEMILENGTH) -> list[DyckPath]:
    """All Dyck paths of semilength n in canonical order.

    Raises ResourceLimitError when n exceeds max_semilength; the default cap
    keeps accidental huge enumerations out (the path count grows as 4^n).
    """
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if n > max_semilength:
        raise ResourceLimitError(
            f"semilength {n} exceeds the configured maximum {max_semilength}"
        )
    return [DyckPath._from_valid(w) for w in iter_words(n)]


def _intervals_disjoint(a: tuple[int, int], b: tuple[int, int]) -> bool:
    return a[1] <= b[0] or b[1] <= a[0]


def count_disjoint_placements(path: DyckPath | str, factors: Iterable[str]) -> int:
    """Count unordered sets of pairwise disjoint factor occurrences in path.

    factors is a multiset of subwords; a placement assigns each of them a
    start position in the path so that the occupied index intervals are
    pairwise disjoint (touching endpoints are fine).  Placements differing
    only by swapping positions between equal factors are counted once.
    """
    word = path.word if isinstance(path, DyckPath) else path
    wanted = sorted(Counter(factors).items())
    if not wanted:
        return 1

    groups = []
    for factor, mult in wanted:
        if not factor:
            raise ValueError("factor must be nonempty")
        positions = []
        start = word.find(factor)
        while start != -1:
            positions.append(start)
            start = word.find(factor, start + 1)
        if len(positions) < mult:
            return 0
        groups.append((len(factor), positions, mult))

    def rec(group_index: int, taken: tuple[tuple[int, int], ...]) -> int:
        if group_index == len(groups):
            return 1
        size, positions, mult = groups[group_index]
        total = 0
        for combo in combinations(positions, mult):
            intervals = [(p, p + size) for p in combo]
            ok = all(
                _intervals_disjoint(intervals[i], intervals[j])
                for i in range(len(intervals))
                for j in range(i + 1, len(intervals))
            ) and all(
                _intervals_disjoint(iv, old) for iv in intervals for old in taken
            )
            if ok:
                total += rec(group_index + 1, taken + tuple(intervals))
        return total

    return rec(0, ())
