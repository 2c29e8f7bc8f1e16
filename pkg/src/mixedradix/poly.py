"""Newton bases for polynomials: the shear map, Horner evaluation and the
simultaneous-derivatives triangle fill.

Everything is exact: coefficients and nodes are ``fractions.Fraction``.
The role of the digit rewrite is played by the unimodular shear
``phi(a, b): (u, v) -> (u + (b - a) v, v)``, which converts a degree-1
remainder between the node bases (a, b) and (b, a).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import PreconditionError

Rat = Fraction


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def phi(a, b, u, v) -> tuple[Fraction, Fraction]:
    """Shear (u, v) -> (u + (b - a) v, v)."""
    a, b, u, v = map(_frac, (a, b, u, v))
    return u + (b - a) * v, v


def phi_inverse(a, b, u2, v2) -> tuple[Fraction, Fraction]:
    return phi(b, a, u2, v2)


@dataclass(frozen=True)
class ExactPoly:
    """Polynomial with little-endian rational coefficients, trimmed."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "ExactPoly":
        return ExactPoly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __add__(self, other: "ExactPoly") -> "ExactPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExactPoly(
            tuple(x + y for x, y in zip(a, b)) + a[len(b):]
        )

    def __mul__(self, other: "ExactPoly") -> "ExactPoly":
        if not self.coeffs or not other.coeffs:
            return ExactPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(out)


@dataclass(frozen=True)
class PolyBasis:
    """Sequence of nodes a_1..a_K; repeated nodes are allowed."""

    nodes: tuple[Fraction, ...]

    def __init__(self, nodes: Iterable):
        object.__setattr__(self, "nodes", tuple(_frac(a) for a in nodes))

    def __len__(self) -> int:
        return len(self.nodes)

    def transposed(self, k: int) -> "PolyBasis":
        if not (1 <= k < len(self.nodes)):
            raise PreconditionError(f"transposition index {k} out of range 1..{len(self.nodes) - 1}")
        ns = list(self.nodes)
        ns[k - 1], ns[k] = ns[k], ns[k - 1]
        return PolyBasis(ns)


@dataclass(frozen=True)
class NewtonCoeffs:
    """Coefficients c_n of P = sum c_n * prod_{k<=n} (X - a_k)."""

    basis: PolyBasis
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(_frac(c) for c in self.coeffs)
        if len(coeffs) != len(self.basis):
            raise PreconditionError(
                f"{len(coeffs)} coefficients for a basis of {len(self.basis)} nodes"
            )
        object.__setattr__(self, "coeffs", coeffs)


def horner_eval(coeffs_at_a: Sequence, a, b) -> Fraction:
    """P(b) from the coefficients of P in powers of (X - a).

    Backward recursion u_{k-1} = (b - a) u_k + c_{k-1}; exactly deg(P)
    multiplications.
    """
    a, b = _frac(a), _frac(b)
    cs = [_frac(c) for c in coeffs_at_a]
    if not cs:
        return Fraction(0)
    acc = cs[-1]
    for c in reversed(cs[:-1]):
        acc = (b - a) * acc + c
    return acc


def to_newton(p: ExactPoly, basis: PolyBasis) -> NewtonCoeffs:
    """Exact coefficients of ``p`` on ``basis`` by repeated synthetic division.

    Dividing by (X - a_1) leaves remainder c_0 = P(a_1); the quotient is
    processed with the next node, which handles repeated nodes uniformly.
    """
    if len(basis) < p.degree + 1:
        raise PreconditionError(
            f"basis of {len(basis)} nodes too short for degree {p.degree}"
        )
    work = list(p.coeffs)
    out = []
    for a in basis.nodes:
        if not work:
            out.append(Fraction(0))
            continue
        # synthetic division of `work` by (X - a): quotient in place, remainder out
        acc = work[-1]
        quot = []
        for c in reversed(work[:-1]):
            quot.append(acc)
            acc = c + a * acc
        out.append(acc)
        work = quot[::-1]
    return NewtonCoeffs(basis, tuple(out))


def from_newton(c: NewtonCoeffs) -> ExactPoly:
    """Expand sum c_n * prod_{k<=n} (X - a_k) back to the monomial basis."""
    acc = ExactPoly(())
    for coeff, node in zip(reversed(c.coeffs), reversed(c.basis.nodes)):
        acc = ExactPoly((coeff,)) + ExactPoly((-node, 1)) * acc
    return acc


def transpose_newton(c: NewtonCoeffs, k: int) -> NewtonCoeffs:
    """Swap nodes k and k+1 (1-based); only coefficients k-1 and k change."""
    basis = c.basis.transposed(k)  # validates k
    a, b = c.basis.nodes[k - 1], c.basis.nodes[k]
    cs = list(c.coeffs)
    cs[k - 1], cs[k] = phi(a, b, cs[k - 1], cs[k])
    return NewtonCoeffs(basis, tuple(cs))


def taylor_coeffs(p: ExactPoly, y, k: int) -> tuple[Fraction, ...]:
    """First k Taylor coefficients of p at y: (P(y), P'(y)/1!, P''(y)/2!, ...).

    Triangle fill over the shear phi(0, y); the cells above the main
    anti-diagonal hold zeros and are skipped, so the work is at most
    k * deg(p) shear applications.
    """
    if k < 1:
        raise PreconditionError(f"need k >= 1, got {k}")
    y = _frac(y)
    d = p.degree
    if d < 0:
        return (Fraction(0),) * k
    u = [Fraction(0)] * k
    u[0] = p.coeffs[d]
    for m in range(d - 1, -1, -1):
        v = p.coeffs[m]
        for i in range(min(d - m + 1, k)):
            u[i], v = v + u[i] * y, u[i]
    return tuple(u)


def derivatives(p: ExactPoly, y, k: int) -> tuple[Fraction, ...]:
    """(P(y), P'(y), ..., P^{(k-1)}(y)): Taylor coefficients times i!."""
    out = []
    fact = 1
    for i, c in enumerate(taylor_coeffs(p, y, k)):
        if i > 0:
            fact *= i
        out.append(c * fact)
    return tuple(out)


@dataclass(frozen=True)
class PolyGrid:
    """Rational edge labels on R(l1, l2) for the shear phi(x, y)."""

    l1: int
    l2: int
    x: Fraction
    y: Fraction
    alpha_h: tuple[tuple[Fraction, ...], ...]
    alpha_v: tuple[tuple[Fraction, ...], ...]

    def check_compatibility(self) -> None:
        for i in range(self.l1):
            for j in range(self.l2):
                got = phi(self.x, self.y, self.alpha_h[i][j], self.alpha_v[i + 1][j])
                want = (self.alpha_v[i][j], self.alpha_h[i][j + 1])
                if got != want:
                    raise AssertionError(f"cell ({i}, {j}) incompatible")


def fill_poly_grid(p: ExactPoly, x, y, l1: int, l2: int) -> PolyGrid:
    """Decoration of ``p`` interpolating between the node bases x and y.

    South boundary carries the coefficients of p in powers of (X - x), the
    East boundary zeros; the fill is the same column sweep as the integer
    rectangle with the shear in place of the digit rewrite.
    """
    if l1 < p.degree + 1:
        raise PreconditionError(f"l1 = {l1} too small for degree {p.degree}")
    x, y = _frac(x), _frac(y)
    south = list(taylor_coeffs(p, x, l1)) if p.degree >= 0 else [Fraction(0)] * l1
    alpha_h = [[Fraction(0)] * (l2 + 1) for _ in range(l1)]
    alpha_v = [[Fraction(0)] * l2 for _ in range(l1 + 1)]
    for i in range(l1):
        alpha_h[i][0] = south[i]
    for i in range(l1 - 1, -1, -1):
        for j in range(l2):
            alpha_v[i][j], alpha_h[i][j + 1] = phi(
                x, y, alpha_h[i][j], alpha_v[i + 1][j]
            )
    return PolyGrid(
        l1, l2, x, y, tuple(tuple(c) for c in alpha_h), tuple(tuple(c) for c in alpha_v)
    )


def read_poly_grid(g: PolyGrid, word: str) -> NewtonCoeffs:
    """Newton coefficients along a path word over {P, Q} (P node = x, Q node = y).

    Prefix words are allowed: the remaining edges carry zeros whenever the
    word already covers the degree of the encoded polynomial.
    """
    if word.count("P") > g.l1 or word.count("Q") > g.l2:
        raise PreconditionError(
            f"word {word!r} does not fit rectangle ({g.l1}, {g.l2})"
        )
    xi = yi = 0
    coeffs = []
    nodes = []
    for c in word:
        if c == "P":
            coeffs.append(g.alpha_h[xi][yi])
            nodes.append(g.x)
            xi += 1
        else:
            coeffs.append(g.alpha_v[xi][yi])
            nodes.append(g.y)
            yi += 1
    return NewtonCoeffs(PolyBasis(nodes), tuple(coeffs))
