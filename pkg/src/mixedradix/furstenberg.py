"""Quadrant decorations of reals in [0,1) and the times-p/times-q dynamics.

A real x in [0,1) has one expansion per infinite word over {P, Q}: the floor
recursion a_i = floor(b_{i+1} x_i), x_{i+1} = frac(b_{i+1} x_i).  All these
expansions fit together on the quadrant of negative coordinates: horizontal
edges carry base-p digits, vertical edges base-q digits, and every unit cell
satisfies the same rewrite rule as the finite rectangles,
``beta_S + p*beta_E == beta_W + q*beta_N``.

Rationals k/r with gcd(r, pq) = 1 admit a third dimension of radix r: one
extra digit per vertex (the orbit numerator of x under multiplication by p
and q mod r) and an all-zero second layer.  Every elementary cube of that
stack is consistent along both braid routes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Sequence

from .core import PreconditionError, psi


def _unit(x) -> Fraction:
    x = Fraction(x)
    if not (0 <= x < 1):
        raise PreconditionError(f"x = {x} outside [0, 1)")
    return x


def expand_with_radices(x, radices: Sequence[int]) -> tuple[int, ...]:
    """Digits of x along an explicit radix sequence, by the floor recursion."""
    x = _unit(x)
    digits = []
    for b in radices:
        if b < 2:
            raise PreconditionError(f"radix {b} < 2")
        y = b * x
        a = floor(y)
        digits.append(a)
        x = y - a
    return tuple(digits)


def expand_real(x, word: str, p: int, q: int, depth: int) -> tuple[int, ...]:
    """First ``depth`` digits of x along ``word`` (cycled if shorter).

    P positions contribute radix p, Q positions radix q.
    """
    if depth < 0:
        raise PreconditionError(f"depth must be >= 0, got {depth}")
    if not word or set(word) - {"P", "Q"}:
        raise PreconditionError(f"word must be a nonempty string over P/Q: {word!r}")
    radices = [p if word[i % len(word)] == "P" else q for i in range(depth)]
    return expand_with_radices(x, radices)


@dataclass(frozen=True)
class QuadrantWindow:
    """Finite window of a quadrant decoration.

    The origin is the top-right corner; index (i, j) stands for the lattice
    point (-i, -j), so depth grows with the index.  ``beta_h[i][j]`` is the
    horizontal edge from (-i-1, -j) to (-i, -j) (i < depth_m, j <= depth_n),
    ``beta_v[i][j]`` the vertical edge from (-i, -j-1) to (-i, -j)
    (i <= depth_m, j < depth_n).
    """

    p: int
    q: int
    depth_m: int
    depth_n: int
    beta_h: tuple[tuple[int, ...], ...]
    beta_v: tuple[tuple[int, ...], ...]

    def check_compatibility(self) -> None:
        """Assert beta_S + p*beta_E == beta_W + q*beta_N at every cell."""
        for i in range(self.depth_m):
            for j in range(self.depth_n):
                got = psi(self.p, self.q, self.beta_h[i][j + 1], self.beta_v[i][j])
                want = (self.beta_v[i + 1][j], self.beta_h[i][j])
                if got != want:
                    raise AssertionError(f"cell ({i}, {j}) incompatible: {got} != {want}")

    @property
    def top_row(self) -> tuple[int, ...]:
        """Base-p digits of x, nearest-to-origin first."""
        return tuple(self.beta_h[i][0] for i in range(self.depth_m))

    @property
    def right_column(self) -> tuple[int, ...]:
        """Base-q digits of x, nearest-to-origin first."""
        return tuple(self.beta_v[0][j] for j in range(self.depth_n))

    def to_json_obj(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "depth_m": self.depth_m,
            "depth_n": self.depth_n,
            "beta_h": [list(row) for row in self.beta_h],
            "beta_v": [list(row) for row in self.beta_v],
        }

    @classmethod
    def from_json_obj(cls, o: dict) -> "QuadrantWindow":
        return cls(
            o["p"],
            o["q"],
            o["depth_m"],
            o["depth_n"],
            tuple(tuple(row) for row in o["beta_h"]),
            tuple(tuple(row) for row in o["beta_v"]),
        )


def quadrant(x, p: int, q: int, m: int, n: int) -> QuadrantWindow:
    """Depth-(m, n) window of the quadrant decoration of x.

    Seeds the right column and bottom row from the single expansion along
    Q^n P^m, propagates (S, E) -> (W, N) cell by cell, then cross-checks the
    top row and right column against the pure base-p / base-q expansions.
    """
    x = _unit(x)
    if m < 0 or n < 0:
        raise PreconditionError(f"window depths must be >= 0, got ({m}, {n})")
    seed = expand_with_radices(x, [q] * n + [p] * m)
    beta_h = [[0] * (n + 1) for _ in range(m)]
    beta_v = [[0] * n for _ in range(m + 1)]
    for j in range(n):
        beta_v[0][j] = seed[j]
    for i in range(m):
        beta_h[i][n] = seed[n + i]
    for i in range(m):
        for j in range(n - 1, -1, -1):
            beta_v[i + 1][j], beta_h[i][j] = psi(p, q, beta_h[i][j + 1], beta_v[i][j])
    w = QuadrantWindow(
        p, q, m, n, tuple(tuple(r) for r in beta_h), tuple(tuple(r) for r in beta_v)
    )
    if w.top_row != expand_with_radices(x, [p] * m):
        raise AssertionError("top row disagrees with the base-p expansion")
    if w.right_column != expand_with_radices(x, [q] * n):
        raise AssertionError("right column disagrees with the base-q expansion")
    return w


def T_map(x, p: int) -> Fraction:
    """p*x mod 1, exactly."""
    x = _unit(x)
    return (p * x) % 1


def shift(w: QuadrantWindow, axis: str) -> QuadrantWindow:
    """Translate the window one unit along the given axis, dropping depth.

    The horizontal shift realises x -> T_p(x), the vertical one x -> T_q(x):
    the shifted window equals the window of the image point on the overlap.
    """
    if axis == "horizontal":
        if w.depth_m < 2:
            raise PreconditionError(f"horizontal depth {w.depth_m} < 2")
        return QuadrantWindow(
            w.p,
            w.q,
            w.depth_m - 1,
            w.depth_n,
            w.beta_h[1:],
            w.beta_v[1:],
        )
    if axis == "vertical":
        if w.depth_n < 2:
            raise PreconditionError(f"vertical depth {w.depth_n} < 2")
        return QuadrantWindow(
            w.p,
            w.q,
            w.depth_m,
            w.depth_n - 1,
            tuple(row[1:] for row in w.beta_h),
            tuple(row[1:] for row in w.beta_v),
        )
    raise PreconditionError(f"unknown axis {axis!r}")


@dataclass(frozen=True)
class OrbitTable:
    """Cyclic orbit of k under multiplication by p mod r."""

    r: int
    p: int
    numerators: tuple[int, ...]


def orbit(k: int, r: int, p: int) -> OrbitTable:
    """Full cycle k, pk, p^2 k, ... mod r, stopping when it returns to k."""
    if r < 1:
        raise PreconditionError(f"modulus r must be >= 1, got {r}")
    if gcd(r, p) != 1:
        raise PreconditionError(f"gcd(r, p) = {gcd(r, p)} != 1 for ({r}, {p})")
    k %= r
    if gcd(k, r) != 1 and r > 1:
        raise PreconditionError(f"gcd(k, r) = {gcd(k, r)} != 1 for ({k}, {r})")
    nums = [k]
    cur = k * p % r
    while cur != k:
        nums.append(cur)
        cur = cur * p % r
    return OrbitTable(r, p, tuple(nums))


@dataclass(frozen=True)
class LayerStack:
    """Two stacked quadrant windows joined by radix-r transversal digits.

    ``transversal[i][j]`` (i <= depth_m, j <= depth_n) is the radix-r edge
    at lattice point (-i, -j); for x = k/r it carries the numerator of
    T_p^i T_q^j (k/r) and ``layer2`` is identically zero.
    """

    p: int
    q: int
    r: int
    depth_m: int
    depth_n: int
    layer1: QuadrantWindow
    layer2: QuadrantWindow
    transversal: tuple[tuple[int, ...], ...]


def _cube_routes(p: int, q: int, r: int, s2: int, e2: int, t_ne: int):
    """Edges of one elementary cube from its (S2, E2, t_NE) inputs, both routes.

    Route A rewrites slots (1,2), (2,3), (1,2) of the cube value in the radix
    word (p, q, r); route B rewrites (2,3), (1,2), (2,3).  Each step is one
    face of the cube.  Returns two dicts of the computed edges; agreement of
    the shared keys is the braid relation made local.
    """
    # route A: layer-2 face, then north face, then west face
    w2, n2 = psi(p, q, s2, e2)
    t_nw, n1 = psi(p, r, n2, t_ne)
    t_sw_a, w1_a = psi(q, r, w2, t_nw)
    a = {"W2": w2, "N2": n2, "t_NW": t_nw, "N1": n1, "t_SW": t_sw_a, "W1": w1_a}
    # route B: east face, then south face, then layer-1 face
    t_se, e1 = psi(q, r, e2, t_ne)
    t_sw_b, s1 = psi(p, r, s2, t_se)
    w1_b, n1_b = psi(p, q, s1, e1)
    b = {"t_SE": t_se, "E1": e1, "t_SW": t_sw_b, "S1": s1, "W1": w1_b, "N1": n1_b}
    return a, b


def layer_fill(k: int, r: int, p: int, q: int, m: int, n: int) -> LayerStack:
    """Three-base stack for x = k/r: quadrant layer, zero layer, orbit digits.

    Every elementary cube is rebuilt from its three input edges along both
    braid routes; the routes must agree with each other and with the stored
    arrays, so the stack is self-checking.
    """
    if r < 1:
        raise PreconditionError(f"denominator r must be >= 1, got {r}")
    if gcd(r, p * q) != 1:
        raise PreconditionError(f"gcd(r, pq) = {gcd(r, p * q)} != 1 for r = {r}")
    k %= r
    if r > 1 and gcd(k, r) != 1:
        raise PreconditionError(f"gcd(k, r) = {gcd(k, r)} != 1 for ({k}, {r})")
    x = Fraction(k, r)
    layer1 = quadrant(x, p, q, m, n)
    layer2 = quadrant(Fraction(0), p, q, m, n)
    trans = tuple(
        tuple(k * pow(p, i, r) * pow(q, j, r) % r for j in range(n + 1))
        for i in range(m + 1)
    )
    if r == 1:  # degenerate radix: no third digit, nothing to cross-check
        return LayerStack(p, q, r, m, n, layer1, layer2, trans)
    for i in range(m):
        for j in range(n):
            a, b = _cube_routes(p, q, r, 0, 0, trans[i][j])
            if a["t_SW"] != b["t_SW"] or a["W1"] != b["W1"] or a["N1"] != b["N1"]:
                raise AssertionError(f"cube ({i}, {j}): routes disagree")
            expected = {
                "W2": 0,
                "N2": 0,
                "t_NW": trans[i + 1][j],
                "t_SE": trans[i][j + 1],
                "t_SW": trans[i + 1][j + 1],
                "N1": layer1.beta_h[i][j],
                "S1": layer1.beta_h[i][j + 1],
                "E1": layer1.beta_v[i][j],
                "W1": layer1.beta_v[i + 1][j],
            }
            for route in (a, b):
                for key, val in route.items():
                    if expected[key] != val:
                        raise AssertionError(
                            f"cube ({i}, {j}): edge {key} = {val}, expected {expected[key]}"
                        )
    return LayerStack(p, q, r, m, n, layer1, layer2, trans)


def rudolph_array(w: QuadrantWindow) -> list[list[int]]:
    """Per-cell value beta_S + p*beta_E, an integer < pq.

    Both diagonals of the defining relation must agree on every face; the
    entries along the main diagonal are the base-(pq) digits of x.
    """
    out = []
    for i in range(w.depth_m):
        row = []
        for j in range(w.depth_n):
            val = w.beta_h[i][j + 1] + w.p * w.beta_v[i][j]
            alt = w.beta_v[i + 1][j] + w.q * w.beta_h[i][j]
            if val != alt:
                raise AssertionError(f"face ({i}, {j}): {val} != {alt}")
            row.append(val)
        out.append(row)
    return out


def rudolph_diagonal(w: QuadrantWindow) -> tuple[int, ...]:
    ups = rudolph_array(w)
    return tuple(ups[t][t] for t in range(min(w.depth_m, w.depth_n)))


@dataclass
class UniformityReport:
    exact_cell_uniform: bool
    cube_uniform: bool | None
    trials: int
    freq_west: list[int]
    freq_north: list[int]
    chi2_west: float
    chi2_north: float


def _chi2(counts: list[int], total: int) -> float:
    e = total / len(counts)
    return sum((c - e) ** 2 / e for c in counts)


def uniformity_check(
    p: int,
    q: int,
    trials: int,
    seed: int = 0,
    r: int | None = None,
) -> UniformityReport:
    """Uniformity transport through one cell, exactly and empirically.

    Exact part: the cell rewrite is a bijection of {0..p-1} x {0..q-1}, so
    pushing the uniform (S, E) distribution forward gives every (W, N)
    exactly once; with ``r`` set, the same exhaustive count runs over the
    p*q*r cube outputs.  Statistical part: ``trials`` uniform (S, E) seeds,
    chi-square of the output digit frequencies.
    """
    if trials < 1:
        raise PreconditionError(f"trials must be >= 1, got {trials}")
    seen = set()
    for u in range(p):
        for v in range(q):
            seen.add(psi(p, q, u, v))
    exact = len(seen) == p * q

    cube: bool | None = None
    if r is not None:
        outs = set()
        for s2 in range(p):
            for e2 in range(q):
                for t in range(r):
                    a, b = _cube_routes(p, q, r, s2, e2, t)
                    if (a["t_SW"], a["W1"], a["N1"]) != (b["t_SW"], b["W1"], b["N1"]):
                        break
                    outs.add((a["t_SW"], a["W1"], a["N1"]))
        cube = len(outs) == p * q * r

    rng = random.Random(seed)
    fw = [0] * q
    fn = [0] * p
    for _ in range(trials):
        u, v = rng.randrange(p), rng.randrange(q)
        w, n2 = psi(p, q, u, v)
        fw[w] += 1
        fn[n2] += 1
    return UniformityReport(
        exact, cube, trials, fw, fn, _chi2(fw, trials), _chi2(fn, trials)
    )


def face_weight(p: int, q: int, u_s: int, u_n: int, u_w: int, u_e: int) -> int:
    """Indicator of cell compatibility: 1 iff u_S + p*u_E == u_W + q*u_N."""
    for d, b, name in ((u_s, p, "u_s"), (u_n, p, "u_n")):
        if not (0 <= d < b):
            raise PreconditionError(f"{name} = {d} out of range for radix {b}")
    for d, b, name in ((u_w, q, "u_w"), (u_e, q, "u_e")):
        if not (0 <= d < b):
            raise PreconditionError(f"{name} = {d} out of range for radix {b}")
    return int(u_s + p * u_e == u_w + q * u_n)


def base_digits(x, b: int, depth: int) -> tuple[int, ...]:
    """First ``depth`` base-b digits of x by long division; oracle helper."""
    return expand_with_radices(_unit(x), [b] * depth)
