"""Set-theoretic Yang-Baxter checks for the digit rewrite and the shear.

For three radices the two triple compositions
``i1(psi_{p2,p3}) o i2(psi_{p1,p3}) o i1(psi_{p1,p2})`` and
``i2(psi_{p1,p2}) o i1(psi_{p1,p3}) o i2(psi_{p2,p3})`` both map the digits
of n in (p1, p2, p3) to its digits in (p3, p2, p1); agreement on every
input tuple is the braid relation.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .core import (
    DigitString,
    MixedRadixBasis,
    PreconditionError,
    apply_permutation,
    decompose,
    psi,
    recompose,
)
from .poly import phi

DEFAULT_ENUM_BUDGET = 200_000


class BudgetError(PreconditionError):
    """Requested enumeration exceeds the configured budget."""


@dataclass
class TaggedTuple:
    """Tuple whose slots remember which finite digit set they live in."""

    values: tuple[int, ...]
    sizes: tuple[int, ...]  # size of the set currently held by each slot

    def __post_init__(self):
        if len(self.values) != len(self.sizes):
            raise PreconditionError("values/sizes length mismatch")
        for x, s in zip(self.values, self.sizes):
            if not (0 <= x < s):
                raise PreconditionError(f"slot value {x} not in {{0..{s - 1}}}")


def iota_apply_psi(i: int, t: TaggedTuple) -> TaggedTuple:
    """Apply the digit rewrite to slots i, i+1 (1-based), swapping their sets."""
    if not (1 <= i < len(t.values)):
        raise PreconditionError(f"slot index {i} out of range")
    p, q = t.sizes[i - 1], t.sizes[i]
    v2, u2 = psi(p, q, t.values[i - 1], t.values[i])
    values = t.values[: i - 1] + (v2, u2) + t.values[i + 1:]
    sizes = t.sizes[: i - 1] + (q, p) + t.sizes[i + 1:]
    return TaggedTuple(values, sizes)


def iota_apply(f, i: int, t: tuple) -> tuple:
    """Generic slot application for an untyped two-slot map (phi case)."""
    if not (1 <= i < len(t)):
        raise PreconditionError(f"slot index {i} out of range")
    a, b = f(t[i - 1], t[i])
    return t[: i - 1] + (a, b) + t[i + 1:]


@dataclass
class Report:
    holds: bool
    checked: int = 0
    counterexample: tuple | None = None
    detail: str = ""


def _yb_routes_psi(p1: int, p2: int, p3: int, triple: tuple[int, int, int]):
    t = TaggedTuple(triple, (p1, p2, p3))
    lhs = iota_apply_psi(1, iota_apply_psi(2, iota_apply_psi(1, t)))
    rhs = iota_apply_psi(2, iota_apply_psi(1, iota_apply_psi(2, t)))
    return lhs, rhs


def yb_check_psi(p1: int, p2: int, p3: int, budget: int = DEFAULT_ENUM_BUDGET) -> Report:
    """Exhaustively compare the two composite maps on all p1*p2*p3 triples."""
    if min(p1, p2, p3) < 2:
        raise PreconditionError("radices must be >= 2")
    if p1 * p2 * p3 > budget:
        raise BudgetError(f"{p1 * p2 * p3} triples exceed budget {budget}")
    # tables folded into plain loops: this check is the hot path of the suite
    checked = 0
    for a in range(p1):
        for b in range(p2):
            n01 = a + p1 * b
            x1, y1 = n01 % p2, n01 // p2  # first move of the left route
            for c in range(p3):
                checked += 1
                # left route: slots (1,2), (2,3), (1,2)
                n12 = y1 + p1 * c
                y2, z2 = n12 % p3, n12 // p3
                n01b = x1 + p2 * y2
                x3, y3 = n01b % p3, n01b // p3
                left = (x3, y3, z2)
                # right route: slots (2,3), (1,2), (2,3)
                n12r = b + p2 * c
                br, cr = n12r % p3, n12r // p3
                n01r = a + p1 * br
                ar, br2 = n01r % p3, n01r // p3
                n12r2 = br2 + p1 * cr
                cr2, dr = n12r2 % p2, n12r2 // p2
                right = (ar, cr2, dr)
                if left != right:
                    return Report(False, checked, (a, b, c))
    return Report(True, checked)


def yb_check_phi(a1, a2, a3, samples: int = 100, seed: int = 0) -> Report:
    """Shear Yang-Baxter: exact 3x3 matrix identity plus pointwise sampling.

    Each slot application is an elementary shear, so the equation is the
    braid relation between upper-triangular matrices:
    M12(a3-a2) M23(a3-a1) M12(a2-a1) = M23(a2-a1) M12(a3-a1) M23(a3-a2),
    an identity in SL3 since (a3-a1) = (a2-a1) + (a3-a2).
    """
    a1, a2, a3 = Fraction(a1), Fraction(a2), Fraction(a3)

    def shear(i, j, val):
        m = [[Fraction(int(r == c)) for c in range(3)] for r in range(3)]
        m[i][j] = val
        return m

    def matmul(x, y):
        return [
            [sum(x[r][t] * y[t][c] for t in range(3)) for c in range(3)]
            for r in range(3)
        ]

    def m12(val):
        return shear(0, 1, val)

    def m23(val):
        return shear(1, 2, val)

    lhs = matmul(matmul(m12(a3 - a2), m23(a3 - a1)), m12(a2 - a1))
    rhs = matmul(matmul(m23(a2 - a1), m12(a3 - a1)), m23(a3 - a2))
    if lhs != rhs:
        return Report(False, 0, detail="matrix identity failed")

    rng = random.Random(seed)
    for i in range(samples):
        t = tuple(Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(3))
        left = iota_apply(lambda u, v: phi(a2, a3, u, v), 1,
               iota_apply(lambda u, v: phi(a1, a3, u, v), 2,
               iota_apply(lambda u, v: phi(a1, a2, u, v), 1, t)))
        right = iota_apply(lambda u, v: phi(a1, a2, u, v), 2,
                iota_apply(lambda u, v: phi(a1, a3, u, v), 1,
                iota_apply(lambda u, v: phi(a2, a3, u, v), 2, t)))
        if left != right:
            return Report(False, i + 1, t, detail="pointwise mismatch")
    return Report(True, samples)


def braid_transform_consistency(n: int, radices: tuple[int, int, int]) -> Report:
    """Both braid words map the digits of n to its reversed-basis digits."""
    p1, p2, p3 = radices
    d = decompose(n, MixedRadixBasis(radices))
    route1 = apply_permutation(d, [1, 2, 1])
    route2 = apply_permutation(d, [2, 1, 2])
    expected = decompose(n, MixedRadixBasis((p3, p2, p1)))
    ok = route1.digits == route2.digits == expected.digits
    counter = None if ok else (route1.digits, route2.digits, expected.digits)
    return Report(ok, 1, counter)


def _multiset_words(items: tuple[int, ...]):
    """Distinct permutations of a multiset, lexicographic."""
    counts = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)
    word: list[int] = []

    def rec():
        if len(word) == len(items):
            yield tuple(word)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                word.append(k)
                yield from rec()
                word.pop()
                counts[k] += 1

    yield from rec()


def _steps_to(reference: tuple[int, ...], target: tuple[int, ...]) -> list[int]:
    """Adjacent transpositions (1-based) carrying reference onto target."""
    cur = list(reference)
    steps = []
    for idx in range(len(target)):
        j = cur.index(target[idx], idx)
        while j > idx:
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            steps.append(j)  # 1-based position of the left element
            j -= 1
    if cur != list(target):
        raise PreconditionError("reference and target are not rearrangements")
    return steps


def hypercube_consistency(
    n: int,
    radices: tuple[int, ...],
    multiplicities: tuple[int, ...],
    budget: int = 100_000,
    sample: int = 200,
    seed: int = 0,
) -> Report:
    """All bases with the given radix multiset agree on the digits of n.

    Every word is reached from the sorted reference word by a chain of
    adjacent transpositions; the chained digits must match a direct
    decomposition and recompose to n.
    """
    if len(radices) != len(multiplicities):
        raise PreconditionError("radices/multiplicities length mismatch")
    flat = tuple(
        itertools.chain.from_iterable([p] * l for p, l in zip(radices, multiplicities))
    )
    total = 1
    for p, l in zip(radices, multiplicities):
        total *= p ** l
    if not (0 <= n < total):
        raise PreconditionError(f"n = {n} out of range for capacity {total}")

    from math import factorial

    count = factorial(len(flat))
    for l in multiplicities:
        count //= factorial(l)
    reference = tuple(sorted(flat))
    ref_digits = decompose(n, MixedRadixBasis(reference))

    if count <= budget:
        words = _multiset_words(flat)
    else:
        rng = random.Random(seed)
        pool = list(flat)
        words = (tuple(rng.sample(pool, len(pool))) for _ in range(sample))

    checked = 0
    for word in words:
        checked += 1
        via_chain = apply_permutation(ref_digits, _steps_to(reference, word))
        direct = decompose(n, MixedRadixBasis(word))
        if via_chain.digits != direct.digits or recompose(direct) != n:
            return Report(False, checked, word)
    return Report(True, checked)
