"""Mixed radix bases, digit strings and the elementary two-digit rewrite.

A mixed radix basis is a finite sequence of radices ``b_1, ..., b_K`` (each
at least 2) with place values ``pi_0 = 1, pi_i = b_1 * ... * b_i``.  A digit
string is the unique little-endian sequence ``a_0, ..., a_{K-1}`` with
``0 <= a_i < b_{i+1}`` representing ``n = sum a_i * pi_i``.

Transposing two adjacent radices only touches the two digits at that
position; the rewrite is the map ``psi`` below.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Sequence

import json


class PreconditionError(ValueError):
    """An argument violates the documented domain of an operation."""


class OverflowBasisError(PreconditionError):
    """The value does not fit in the (finite) basis."""


class UnsupportedPairError(PreconditionError):
    """Radix pair outside the operation's domain (e.g. gcd(p, q) != 1)."""


def psi(p: int, q: int, u: int, v: int) -> tuple[int, int]:
    """Rewrite the digit pair (u, v) of the basis (p, q) into the basis (q, p).

    Returns the unique (v2, u2) with ``u + p*v == v2 + q*u2``,
    ``0 <= v2 < q`` and ``0 <= u2 < p``.
    """
    if p < 2 or q < 2:
        raise PreconditionError(f"radices must be >= 2, got ({p}, {q})")
    if not (0 <= u < p and 0 <= v < q):
        raise PreconditionError(f"digits ({u}, {v}) out of range for radices ({p}, {q})")
    u2, v2 = divmod(u + p * v, q)
    return v2, u2


def psi_inverse(p: int, q: int, v2: int, u2: int) -> tuple[int, int]:
    """Inverse of :func:`psi`; equals ``psi(q, p, v2, u2)``."""
    return psi(q, p, v2, u2)


def psi_ne(p: int, q: int, u_w: int, u_s: int) -> tuple[int, int]:
    """Diagonal rewrite for coprime radices, driven by the CRT.

    Given the west digit ``u_w < q`` and south digit ``u_s < p`` of a unit
    cell, returns ``(u_n, u_e)`` where ``n`` is the unique element of
    ``{0..pq-1}`` with ``n = u_w + q*u_n = u_s + p*u_e``.
    """
    if p < 2 or q < 2:
        raise PreconditionError(f"radices must be >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise UnsupportedPairError(f"psi_ne needs gcd(p, q) = 1, got ({p}, {q})")
    if not (0 <= u_w < q and 0 <= u_s < p):
        raise PreconditionError(f"digits ({u_w}, {u_s}) out of range for radices ({p}, {q})")
    # n = u_w mod q, n = u_s mod p
    n = (u_w + q * ((u_s - u_w) * pow(q, -1, p) % p)) % (p * q)
    return (n - u_w) // q, (n - u_s) // p


@dataclass(frozen=True)
class MixedRadixBasis:
    """Finite sequence of radices with cached place values."""

    radices: tuple[int, ...]
    products: tuple[int, ...] = field(init=False, repr=False)

    def __init__(self, radices: Iterable[int]):
        radices = tuple(int(b) for b in radices)
        for b in radices:
            if b < 2:
                raise PreconditionError(f"radix {b} < 2")
        products = [1]
        for b in radices:
            products.append(products[-1] * b)
        object.__setattr__(self, "radices", radices)
        object.__setattr__(self, "products", tuple(products))

    def __len__(self) -> int:
        return len(self.radices)

    @property
    def capacity(self) -> int:
        """pi_K: one more than the largest representable integer."""
        return self.products[-1]

    def transposed(self, k: int) -> "MixedRadixBasis":
        """Basis with radices k and k+1 swapped (k is 1-based)."""
        self._check_step(k)
        r = list(self.radices)
        r[k - 1], r[k] = r[k], r[k - 1]
        return MixedRadixBasis(r)

    def _check_step(self, k: int) -> None:
        if not (1 <= k < len(self.radices)):
            raise PreconditionError(
                f"transposition index {k} out of range 1..{len(self.radices) - 1}"
            )


@dataclass(frozen=True)
class TranspositionStep:
    """Swap of radices k and k+1; 1-based, touches digits a_{k-1} and a_k."""

    position: int

    def __post_init__(self):
        if self.position < 1:
            raise PreconditionError(f"transposition index must be >= 1, got {self.position}")


@dataclass(frozen=True)
class DigitString:
    """Little-endian digits bound to a basis (a_0 least significant)."""

    basis: MixedRadixBasis
    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(a) for a in self.digits)
        if len(digits) != len(self.basis):
            raise PreconditionError(
                f"{len(digits)} digits for a basis of length {len(self.basis)}"
            )
        for i, (a, b) in enumerate(zip(digits, self.basis.radices)):
            if not (0 <= a < b):
                raise PreconditionError(f"digit a_{i} = {a} out of range for radix {b}")
        object.__setattr__(self, "digits", digits)

    def to_json(self) -> str:
        return json.dumps({"radices": list(self.basis.radices), "digits": list(self.digits)})

    @classmethod
    def from_json(cls, text: str) -> "DigitString":
        obj = json.loads(text)
        return cls(MixedRadixBasis(obj["radices"]), tuple(obj["digits"]))

    def human(self) -> str:
        """Big-endian rendering: ``a_{K-1}:...:a_0 (basis b1,...,bK)``."""
        digits = ":".join(str(a) for a in reversed(self.digits))
        basis = ",".join(str(b) for b in self.basis.radices)
        return f"{digits} (basis {basis})"


def decompose(n: int, basis: MixedRadixBasis) -> DigitString:
    """Digits of ``n`` in ``basis``, by successive Euclidean divisions."""
    if n < 0:
        raise PreconditionError(f"n must be non-negative, got {n}")
    if n >= basis.capacity:
        raise OverflowBasisError(f"n = {n} does not fit: capacity pi_K = {basis.capacity}")
    digits = []
    for b in basis.radices:
        n, a = divmod(n, b)
        digits.append(a)
    return DigitString(basis, tuple(digits))


def recompose(d: DigitString) -> int:
    """Value ``sum a_i * pi_i`` of a digit string."""
    return sum(a * pi for a, pi in zip(d.digits, d.basis.products))


def transpose_digits(d: DigitString, step: TranspositionStep | int) -> DigitString:
    """Digits of the same value in the basis with radices k, k+1 swapped.

    Only digits a_{k-1} and a_k change, through psi applied with the two
    swapped radices.
    """
    k = step.position if isinstance(step, TranspositionStep) else int(step)
    d.basis._check_step(k)
    p, q = d.basis.radices[k - 1], d.basis.radices[k]
    new_digits = list(d.digits)
    new_digits[k - 1], new_digits[k] = psi(p, q, d.digits[k - 1], d.digits[k])
    return DigitString(d.basis.transposed(k), tuple(new_digits))


def apply_permutation(
    d: DigitString, steps: Sequence[TranspositionStep | int]
) -> DigitString:
    """Apply a sequence of adjacent transpositions, left to right."""
    for idx, step in enumerate(steps):
        try:
            d = transpose_digits(d, step)
        except PreconditionError as exc:
            raise PreconditionError(f"step {idx} invalid: {exc}") from exc
    return d
