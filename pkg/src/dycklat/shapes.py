"""Skew shapes delimited by a pair of lattice-path border words.

A shape is a pair (lower, upper) of equally long step words with the same
number of u steps, drawn from a common start point.  The upper border must
stay strictly above the lower one at every interior point and meet it at
both ends; this forces lower to run d...u and upper to run u...d, and makes
the enclosed region connected.  The area is the number of unit cells between
the two borders, which equals half the sum of the height differences.

The standard fillings of a shape are counted by walking from the lower
border to the upper one, one valley flip at a time, while staying weakly
below the upper border.  Each walk order corresponds to one filling.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import ResourceLimitError
from .paths import canonical_key

DEFAULT_MAX_AREA = 6


def _profile(word: str) -> tuple[int, ...]:
    heights = [0]
    h = 0
    for step in word:
        if step not in "ud":
            raise ValueError(f"invalid step {step!r} in border word")
        h += 1 if step == "u" else -1
        heights.append(h)
    return tuple(heights)


def _mirror(word: str) -> str:
    swap = {"u": "d", "d": "u"}
    return "".join(swap[c] for c in reversed(word))


class SkewShape:
    """A skew shape given by its lower and upper border words."""

    __slots__ = ("lower", "upper", "area", "_tableaux")

    def __init__(self, lower: str, upper: str):
        if len(lower) != len(upper):
            raise ValueError("border words must have equal length")
        if len(lower) < 2:
            raise ValueError("border words must have length at least 2")
        low = _profile(lower)
        up = _profile(upper)
        if lower.count("u") != upper.count("u"):
            raise ValueError("border words must have equal u counts")
        if up[-1] != low[-1]:
            raise ValueError("borders must end at a common point")
        for p in range(1, len(lower)):
            if up[p] <= low[p]:
                raise ValueError(
                    f"upper border must stay strictly above the lower one (interior point {p})"
                )
        self.lower = lower
        self.upper = upper
        self.area = sum(a - b for a, b in zip(up, low)) // 2
        self._tableaux: int | None = None

    @property
    def border(self) -> str:
        """The lower border word, the key the placement formula matches on."""
        return self.lower

    def mirrored(self) -> SkewShape:
        """The shape reflected left to right (u and d steps swap)."""
        return SkewShape(_mirror(self.lower), _mirror(self.upper))

    def tableau_count(self, max_area: int = DEFAULT_MAX_AREA) -> int:
        """Number of flip walks from the lower border to the upper one.

        Each walk repeatedly replaces a du factor by ud without exceeding the
        upper profile.  The count equals the number of standard fillings of
        the shape by 1..area.
        """
        if self.area > max_area:
            raise ResourceLimitError(
                f"area {self.area} exceeds the configured maximum {max_area}"
            )
        if self._tableaux is None:
            upper = self.upper
            upper_profile = _profile(upper)
            memo: dict[str, int] = {upper: 1}

            def walks(word: str) -> int:
                cached = memo.get(word)
                if cached is not None:
                    return cached
                total = 0
                h = 0
                for i in range(len(word) - 1):
                    h += 1 if word[i] == "u" else -1
                    if (
                        word[i] == "d"
                        and word[i + 1] == "u"
                        and h + 2 <= upper_profile[i + 1]
                    ):
                        total += walks(word[:i] + "ud" + word[i + 2:])
                memo[word] = total
                return total

            self._tableaux = walks(self.lower)
        return self._tableaux

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.lower == other.lower
            and self.upper == other.upper
        )

    def __hash__(self) -> int:
        return hash((self.lower, self.upper))

    def __str__(self) -> str:
        return f"{self.lower}/{self.upper}"

    def __repr__(self) -> str:
        return f"SkewShape({self.lower!r}, {self.upper!r})"


@lru_cache(maxsize=None)
def _enumerate(area: int) -> tuple[SkewShape, ...]:
    # Interior strictness forces a gap of at least one cell per interior
    # point, so a border of length L encloses area >= L - 1 and the search
    # can stop at words of length area + 1.
    found = []
    for length in range(2, area + 2):
        for mid_low in product("ud", repeat=length - 2):
            lower = "d" + "".join(mid_low) + "u"
            low = _profile(lower)
            ups = lower.count("u")
            for mid_up in product("ud", repeat=length - 2):
                upper = "u" + "".join(mid_up) + "d"
                if upper.count("u") != ups:
                    continue
                up = _profile(upper)
                if up[-1] != low[-1]:
                    continue
                if any(up[p] <= low[p] for p in range(1, length)):
                    continue
                if sum(a - b for a, b in zip(up, low)) // 2 == area:
                    found.append(SkewShape(lower, upper))
    found.sort(key=lambda s: (canonical_key(s.lower), canonical_key(s.upper)))
    return tuple(found)


def enumerate_shapes(area: int, max_area: int = DEFAULT_MAX_AREA) -> tuple[SkewShape, ...]:
    """All skew shapes of the given area, sorted by canonical border order."""
    if area < 1:
        raise ValueError("area must be at least 1")
    if area > max_area:
        raise ResourceLimitError(
            f"area {area} exceeds the configured maximum {max_area}"
        )
    return _enumerate(area)


@lru_cache(maxsize=None)
def _border_index(area: int) -> dict[str, tuple[SkewShape, ...]]:
    grouped: dict[str, list[SkewShape]] = {}
    for shape in _enumerate(area):
        grouped.setdefault(shape.lower, []).append(shape)
    return {border: tuple(shapes) for border, shapes in grouped.items()}


def shapes_with_border(
    area: int, border: str, max_area: int = DEFAULT_MAX_AREA
) -> tuple[SkewShape, ...]:
    """Shapes of the given area whose lower border equals the given word."""
    if area < 1:
        raise ValueError("area must be at least 1")
    if area > max_area:
        raise ResourceLimitError(
            f"area {area} exceeds the configured maximum {max_area}"
        )
    return _border_index(area).get(border, ())
