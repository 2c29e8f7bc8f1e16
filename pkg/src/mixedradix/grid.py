"""Edge-decorated rectangles: one integer in every interpolating basis.

A rectangle R(l1, l2) carries base-p digits on horizontal edges and base-q
digits on vertical edges.  When every unit cell satisfies
``psi(p, q, south, east) == (west, north)``, the digits along any monotone
path from (0, 0) to (l1, l2) are the decomposition of a single integer in
the mixed radix basis read off the path (right step = p, up step = q).

Arrays drop the half-integer edge midpoints: ``alpha_h[i][j]`` is the
horizontal edge {(i,j),(i+1,j)}, ``alpha_v[i][j]`` the vertical edge
{(i,j),(i,j+1)}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .core import (
    DigitString,
    MixedRadixBasis,
    PreconditionError,
    UnsupportedPairError,
    psi,
    psi_inverse,
    psi_ne,
)


@dataclass(frozen=True)
class BasisWord:
    """Word over {P, Q}: P contributes radix p, Q contributes radix q."""

    letters: str
    p: int
    q: int

    def __post_init__(self):
        if set(self.letters) - {"P", "Q"}:
            raise PreconditionError(f"word must use letters P/Q only: {self.letters!r}")

    @property
    def l1(self) -> int:
        return self.letters.count("P")

    @property
    def l2(self) -> int:
        return self.letters.count("Q")

    def basis(self) -> MixedRadixBasis:
        return MixedRadixBasis(self.p if c == "P" else self.q for c in self.letters)


def word_se(l1: int, l2: int, p: int, q: int) -> BasisWord:
    """Extremal word hugging the South then East boundary."""
    return BasisWord("P" * l1 + "Q" * l2, p, q)


def word_nw(l1: int, l2: int, p: int, q: int) -> BasisWord:
    """Extremal word hugging the West then North boundary."""
    return BasisWord("Q" * l2 + "P" * l1, p, q)


def path_from_word(w: BasisWord) -> list[tuple[int, int]]:
    """Vertices of the lattice path of ``w`` from (0,0) to (l1,l2)."""
    x = y = 0
    vertices = [(0, 0)]
    for c in w.letters:
        if c == "P":
            x += 1
        else:
            y += 1
        vertices.append((x, y))
    return vertices


def word_from_path(vertices: list[tuple[int, int]], p: int, q: int) -> BasisWord:
    letters = []
    for (x0, y0), (x1, y1) in zip(vertices, vertices[1:]):
        if (x1 - x0, y1 - y0) == (1, 0):
            letters.append("P")
        elif (x1 - x0, y1 - y0) == (0, 1):
            letters.append("Q")
        else:
            raise PreconditionError(f"non-unit increment {(x1 - x0, y1 - y0)}")
    return BasisWord("".join(letters), p, q)


@dataclass(frozen=True)
class RectDecoration:
    """Compatible edge labels of R(l1, l2); immutable once built."""

    l1: int
    l2: int
    p: int
    q: int
    alpha_h: tuple[tuple[int, ...], ...]  # [i][j], i < l1, j <= l2
    alpha_v: tuple[tuple[int, ...], ...]  # [i][j], i <= l1, j < l2

    def check_compatibility(self) -> None:
        """Assert the psi rule at every unit cell."""
        for i in range(self.l1):
            for j in range(self.l2):
                got = psi(self.p, self.q, self.alpha_h[i][j], self.alpha_v[i + 1][j])
                want = (self.alpha_v[i][j], self.alpha_h[i][j + 1])
                if got != want:
                    raise AssertionError(f"cell ({i}, {j}) incompatible: {got} != {want}")

    @property
    def south(self) -> tuple[int, ...]:
        return tuple(self.alpha_h[i][0] for i in range(self.l1))

    @property
    def north(self) -> tuple[int, ...]:
        return tuple(self.alpha_h[i][self.l2] for i in range(self.l1))

    @property
    def west(self) -> tuple[int, ...]:
        return tuple(self.alpha_v[0])

    @property
    def east(self) -> tuple[int, ...]:
        return tuple(self.alpha_v[self.l1])

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "q": self.q,
                "l1": self.l1,
                "l2": self.l2,
                "alpha_h": [list(col) for col in self.alpha_h],
                "alpha_v": [list(col) for col in self.alpha_v],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "RectDecoration":
        o = json.loads(text)
        return cls(
            o["l1"],
            o["l2"],
            o["p"],
            o["q"],
            tuple(tuple(col) for col in o["alpha_h"]),
            tuple(tuple(col) for col in o["alpha_v"]),
        )


def _check_digits(digits, radix, what):
    for a in digits:
        if not (0 <= a < radix):
            raise PreconditionError(f"{what} digit {a} out of range for radix {radix}")


def fill_from_south_east(
    l1: int,
    l2: int,
    p: int,
    q: int,
    south: tuple[int, ...],
    east: tuple[int, ...],
    schedule: str = "columns",
) -> RectDecoration:
    """Propagate a South/East boundary to the full rectangle.

    Each cell applies psi once: (west, north) = psi(south, east).  The
    ``wavefront`` schedule visits anti-diagonals instead of columns; cell
    (i, j) only needs (i+1, j) and (i, j-1), so both orders give identical
    output.
    """
    south, east = tuple(south), tuple(east)
    if len(south) != l1 or len(east) != l2:
        raise PreconditionError(f"boundary lengths ({len(south)}, {len(east)}) != ({l1}, {l2})")
    _check_digits(south, p, "south")
    _check_digits(east, q, "east")
    alpha_h = [[0] * (l2 + 1) for _ in range(l1)]
    alpha_v = [[0] * l2 for _ in range(l1 + 1)]
    for i in range(l1):
        alpha_h[i][0] = south[i]
    for j in range(l2):
        alpha_v[l1][j] = east[j]

    def fill_cell(i, j):
        alpha_v[i][j], alpha_h[i][j + 1] = psi(p, q, alpha_h[i][j], alpha_v[i + 1][j])

    if schedule == "columns":
        for i in range(l1 - 1, -1, -1):
            for j in range(l2):
                fill_cell(i, j)
    elif schedule == "wavefront":
        # anti-diagonal d = (l1 - 1 - i) + j, increasing
        for d in range(l1 + l2 - 1):
            for j in range(max(0, d - l1 + 1), min(l2, d + 1)):
                fill_cell(l1 - 1 - (d - j), j)
    else:
        raise PreconditionError(f"unknown schedule {schedule!r}")
    return RectDecoration(
        l1, l2, p, q, tuple(tuple(c) for c in alpha_h), tuple(tuple(c) for c in alpha_v)
    )


def fill_from_north_west(
    l1: int, l2: int, p: int, q: int, north: tuple[int, ...], west: tuple[int, ...]
) -> RectDecoration:
    """Inverse-direction fill: (south, east) = psi_inverse(west, north)."""
    north, west = tuple(north), tuple(west)
    if len(north) != l1 or len(west) != l2:
        raise PreconditionError(f"boundary lengths ({len(north)}, {len(west)}) != ({l1}, {l2})")
    _check_digits(north, p, "north")
    _check_digits(west, q, "west")
    alpha_h = [[0] * (l2 + 1) for _ in range(l1)]
    alpha_v = [[0] * l2 for _ in range(l1 + 1)]
    for i in range(l1):
        alpha_h[i][l2] = north[i]
    for j in range(l2):
        alpha_v[0][j] = west[j]
    for i in range(l1):
        for j in range(l2 - 1, -1, -1):
            alpha_h[i][j], alpha_v[i + 1][j] = psi_inverse(
                p, q, alpha_v[i][j], alpha_h[i][j + 1]
            )
    return RectDecoration(
        l1, l2, p, q, tuple(tuple(c) for c in alpha_h), tuple(tuple(c) for c in alpha_v)
    )


def fill_from_south_west(
    l1: int, l2: int, p: int, q: int, south: tuple[int, ...], west: tuple[int, ...]
) -> RectDecoration:
    """Fill from the South-West corner; needs gcd(p, q) = 1.

    Each cell solves the two congruences of its unit square:
    (north, east) = psi_ne(west, south).
    """
    if gcd(p, q) != 1:
        raise UnsupportedPairError(f"fill_from_south_west needs gcd(p, q) = 1, got ({p}, {q})")
    south, west = tuple(south), tuple(west)
    if len(south) != l1 or len(west) != l2:
        raise PreconditionError(f"boundary lengths ({len(south)}, {len(west)}) != ({l1}, {l2})")
    _check_digits(south, p, "south")
    _check_digits(west, q, "west")
    alpha_h = [[0] * (l2 + 1) for _ in range(l1)]
    alpha_v = [[0] * l2 for _ in range(l1 + 1)]
    for i in range(l1):
        alpha_h[i][0] = south[i]
    for j in range(l2):
        alpha_v[0][j] = west[j]
    for i in range(l1):
        for j in range(l2):
            alpha_h[i][j + 1], alpha_v[i + 1][j] = psi_ne(
                p, q, alpha_v[i][j], alpha_h[i][j]
            )
    return RectDecoration(
        l1, l2, p, q, tuple(tuple(c) for c in alpha_h), tuple(tuple(c) for c in alpha_v)
    )


def read_along_path(dec: RectDecoration, w: BasisWord) -> DigitString:
    """Digits of the encoded integer in the basis of ``w``."""
    if (w.l1, w.l2, w.p, w.q) != (dec.l1, dec.l2, dec.p, dec.q):
        raise PreconditionError(
            f"word ({w.l1}, {w.l2}, {w.p}, {w.q}) does not match "
            f"decoration ({dec.l1}, {dec.l2}, {dec.p}, {dec.q})"
        )
    x = y = 0
    digits = []
    for c in w.letters:
        if c == "P":
            digits.append(dec.alpha_h[x][y])
            x += 1
        else:
            digits.append(dec.alpha_v[x][y])
            y += 1
    return DigitString(w.basis(), tuple(digits))


def decoration_of_integer(n: int, p: int, q: int, l1: int, l2: int) -> RectDecoration:
    """Decoration encoding ``n < p**l1 * q**l2``.

    Decomposes n in the South-East extremal basis (p repeated l1 times then
    q repeated l2 times) and propagates.
    """
    from .core import decompose

    word = word_se(l1, l2, p, q)
    d = decompose(n, word.basis())  # raises on overflow
    return fill_from_south_east(l1, l2, p, q, d.digits[:l1], d.digits[l1:])


def integer_of_decoration(dec: RectDecoration) -> int:
    from .core import recompose

    return recompose(read_along_path(dec, word_se(dec.l1, dec.l2, dec.p, dec.q)))


def render_grid(dec: RectDecoration, style: str = "ascii") -> str:
    """ASCII layout mirrors the rectangle (top row first); json emits arrays."""
    if style == "json":
        return dec.to_json()
    if style != "ascii":
        raise PreconditionError(f"unknown style {style!r}")
    wh = max((len(str(a)) for col in dec.alpha_h for a in col), default=1)
    wv = max((len(str(a)) for col in dec.alpha_v for a in col), default=1)
    w = max(wh, wv)
    pad = " " * (w + 1)
    lines = []
    for j in range(dec.l2, -1, -1):
        # horizontal digits sit between the vertical grid lines
        lines.append(
            pad[: (w + 1) // 2]
            + " ".join(str(dec.alpha_h[i][j]).rjust(w) for i in range(dec.l1))
        )
        if j > 0:
            lines.append(
                " ".join(str(dec.alpha_v[i][j - 1]).rjust(w) for i in range(dec.l1 + 1))
            )
    return "\n".join(lines)
