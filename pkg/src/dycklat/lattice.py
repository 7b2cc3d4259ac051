"""Hasse diagrams of Dyck lattices and exhaustive saturated-chain counting."""

from __future__ import annotations

from functools import lru_cache

from .errors import ResourceLimitError
from .paths import DEFAULT_MAX_SEMILENGTH, DyckPath, iter_words


def _cover_words(word: str) -> list[str]:
    return [
        word[:i] + "ud" + word[i + 2:]
        for i in range(len(word) - 1)
        if word[i] == "d" and word[i + 1] == "u"
    ]


def _check_cap(n: int, max_semilength: int) -> None:
    if n < 0:
        raise ValueError("semilength must be nonnegative")
    if n > max_semilength:
        raise ResourceLimitError(
            f"semilength {n} exceeds the configured maximum {max_semilength}"
        )


class HasseDiagram:
    """Covering digraph of the Dyck lattice of a fixed semilength.

    Nodes are all paths in canonical order; edges point from the covered
    path to the covering one (one valley flipped to a peak).
    """

    __slots__ = ("n", "paths", "edges", "_index")

    def __init__(self, n: int, paths: list[DyckPath], edges: list[tuple[int, int]]):
        self.n = n
        self.paths = tuple(paths)
        self.edges = tuple(edges)
        self._index = {p.word: i for i, p in enumerate(self.paths)}

    @classmethod
    def build(cls, n: int, max_semilength: int = DEFAULT_MAX_SEMILENGTH) -> HasseDiagram:
        _check_cap(n, max_semilength)
        words = list(iter_words(n))
        index = {w: i for i, w in enumerate(words)}
        edges = [
            (i, index[c])
            for i, w in enumerate(words)
            for c in _cover_words(w)
        ]
        return cls(n, [DyckPath._from_valid(w) for w in words], edges)

    def index_of(self, path: DyckPath) -> int:
        return self._index[path.word]

    def upper_neighbors(self) -> list[list[int]]:
        up: list[list[int]] = [[] for _ in self.paths]
        for i, j in self.edges:
            up[i].append(j)
        return up

    def to_dot(self) -> str:
        lines = [f"digraph dyck_lattice_{self.n} {{", "  rankdir=BT;"]
        for i, path in enumerate(self.paths):
            lines.append(f'  {i} [label="{path.word}"];')
        for i, j in self.edges:
            lines.append(f"  {i} -> {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_edge_list(self) -> str:
        lines = [f"# n={self.n} nodes={len(self.paths)}"]
        lines.extend(f"{i} {j}" for i, j in self.edges)
        return "\n".join(lines)


def count_saturated_chains(
    n: int, h: int, max_semilength: int = DEFAULT_MAX_SEMILENGTH
) -> int:
    """Number of saturated chains of length h in the Dyck lattice of semilength n.

    Chains are strictly increasing sequences of h covering steps; a chain of
    length 0 is a single path.  Counted by h rounds of propagation along the
    covering edges, so the work is h times the edge count.
    """
    if h < 0:
        raise ValueError("chain length must be nonnegative")
    _check_cap(n, max_semilength)
    words = list(iter_words(n))
    index = {w: i for i, w in enumerate(words)}
    up = [[index[c] for c in _cover_words(w)] for w in words]
    counts = [1] * len(words)
    for _ in range(h):
        fresh = [0] * len(words)
        for i, value in enumerate(counts):
            if value:
                for j in up[i]:
                    fresh[j] += value
        counts = fresh
        if not any(counts):
            break
    return sum(counts)


@lru_cache(maxsize=None)
def _chains_from_word(word: str, h: int) -> int:
    if h == 0:
        return 1
    return sum(_chains_from_word(c, h - 1) for c in _cover_words(word))


def count_chains_from(path: DyckPath, h: int) -> int:
    """Saturated chains of length exactly h whose minimum is the given path."""
    if h < 0:
        raise ValueError("chain length must be nonnegative")
    return _chains_from_word(path.word, h)


def total_valleys(n: int, max_semilength: int = DEFAULT_MAX_SEMILENGTH) -> int:
    """Total number of valleys over all paths of semilength n (= Hasse edge count)."""
    _check_cap(n, max_semilength)
    return sum(
        1
        for w in iter_words(n)
        for i in range(len(w) - 1)
        if w[i] == "d" and w[i + 1] == "u"
    )


def valley_abscissae_sum(n: int, max_semilength: int = DEFAULT_MAX_SEMILENGTH) -> int:
    """Sum of valley x-coordinates over all paths of semilength n."""
    _check_cap(n, max_semilength)
    total = 0
    for w in iter_words(n):
        for i in range(len(w) - 1):
            if w[i] == "d" and w[i + 1] == "u":
                total += i + 1
    return total
