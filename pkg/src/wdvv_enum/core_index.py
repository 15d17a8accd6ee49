"""Index arithmetic for homology classes of plane blowups.

A relative class is written [d, alpha, beta]: degree d, a multi-index alpha of
multiplicities at the r real blowup points, and a multi-index beta of
multiplicities at the s conjugate pairs.  Its double is the absolute class
(d, alpha, beta, beta).  The module provides the gradings attached to these
classes (Maslov index, Chern number, interior point count), canonicalization
up to permutation of blowup points, the partial order that makes the open
recursion well founded, and guarded binomial/multinomial coefficients that
vanish on negative or non-integral indices.

All arithmetic is exact.  Multi-indices are plain tuples whose entries are
integers or exact rationals (half-integers occur in the closed aggregates).
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple, Optional, Sequence

try:
    from gmpy2 import mpq as RAT
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    from fractions import Fraction as RAT

Entry = object  # int or exact rational
MultiIndex = Sequence[Entry]


def is_integral(x) -> bool:
    """True if the exact number x is an integer."""
    if isinstance(x, int):
        return True
    return x.denominator == 1


def as_int(x) -> int:
    """Convert an exact number known to be integral to a plain int."""
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise ValueError(f"expected an integer, got {x!r}")
    return int(x.numerator)


def maslov_index(d, alpha: MultiIndex, beta: MultiIndex) -> int:
    """Maslov index mu([d, alpha, beta]) = 3d - |alpha| - 2|beta|."""
    return as_int(3 * d - sum(alpha) - 2 * sum(beta))


def chern_number(d, a: MultiIndex, b: MultiIndex = (), c: MultiIndex = ()):
    """First Chern number of the absolute class: 3d - |a| - |b| - |c|."""
    return 3 * d - sum(a) - sum(b) - sum(c)


def interior_points(d, alpha: MultiIndex, beta: MultiIndex, k: int) -> Optional[int]:
    """Interior point count l = (mu - k - 1) / 2, or None.

    None signals graded vanishing: the invariant is zero whenever l is
    negative or not an integer.
    """
    mu = maslov_index(d, alpha, beta)
    num = mu - k - 1
    if num < 0 or num % 2 != 0:
        return None
    return num // 2


def double(d, alpha: MultiIndex, beta: MultiIndex):
    """The absolute class (d, alpha, beta, beta) doubling [d, alpha, beta]."""
    return (d, tuple(alpha), tuple(beta), tuple(beta))


def self_intersection(d, a: MultiIndex, b: MultiIndex = (), c: MultiIndex = ()):
    """Self-intersection of an absolute class.

    The intersection form is diagonal: the line class squares to +1 and each
    exceptional class to -1.
    """
    return d * d - sum(x * x for x in a) - sum(x * x for x in b) - sum(
        x * x for x in c
    )


class CanonicalKey(NamedTuple):
    """A relative class with boundary-point count, up to point relabelling.

    Invariants are symmetric under permuting the real blowup points and under
    permuting the conjugate pairs, and unaffected by blowup points the class
    does not touch.  The canonical form therefore keeps only the nonzero
    alpha and beta entries, each sorted in descending order.
    """

    d: int
    alpha: tuple
    beta: tuple
    k: int


def _canonical_entries(entries: MultiIndex) -> tuple:
    return tuple(sorted((x for x in entries if x != 0), reverse=True))


def canonical_key(d, alpha: MultiIndex, beta: MultiIndex, k: int) -> CanonicalKey:
    """Canonicalize: sort alpha and beta descending and drop zero entries."""
    return CanonicalKey(d, _canonical_entries(alpha), _canonical_entries(beta), k)


def _padded(entries: tuple, n: int) -> tuple:
    return tuple(entries) + (0,) * (n - len(entries))


def key_less(a: CanonicalKey, b: CanonicalKey) -> bool:
    """Strict partial order on keys making the recursion well founded.

    a < b iff the degree drops; or the degree agrees and alpha, beta drop
    componentwise (after padding to a common length) with at least one strict
    inequality; or the class agrees and k drops.
    """
    if a.d != b.d:
        return a.d < b.d
    ra = max(len(a.alpha), len(b.alpha))
    sa = max(len(a.beta), len(b.beta))
    aa, ba = _padded(a.alpha, ra), _padded(b.alpha, ra)
    ab, bb = _padded(a.beta, sa), _padded(b.beta, sa)
    if all(x <= y for x, y in zip(aa, ba)) and all(
        x <= y for x, y in zip(ab, bb)
    ):
        if aa != ba or ab != bb:
            return True
        return a.k < b.k
    return False


def guarded_binomial(n, k) -> int:
    """Binomial coefficient, zero on negative or non-integral arguments."""
    if not (is_integral(n) and is_integral(k)):
        return 0
    n, k = as_int(n), as_int(k)
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def guarded_multinomial(n, parts: Sequence) -> int:
    """Multinomial n! / (p_1! ... p_t! (n - sum p)!), guarded.

    Returns 0 whenever n or any part is negative or non-integral, or the
    parts sum to more than n.
    """
    if not is_integral(n):
        return 0
    n = as_int(n)
    if n < 0:
        return 0
    total = 1
    remaining = n
    for p in parts:
        if not is_integral(p):
            return 0
        p = as_int(p)
        if p < 0 or p > remaining:
            return 0
        total *= comb(remaining, p)
        remaining -= p
    return total


def eps_ratio_split(mu1: int, mu2: int) -> int:
    """Sign relating the orientation factors of a two-disc splitting.

    The orientation factor of a class is 1 for even Maslov index and the
    imaginary unit for odd; the ratio eps(mu1) eps(mu2) / eps(mu1 + mu2)
    is -1 exactly when both Maslov indices are odd, else +1.
    """
    return -1 if (mu1 % 2 == 1 and mu2 % 2 == 1) else 1


def eps_sign_degree_bump(mu: int) -> int:
    """Sign eps(mu) eps(3) / eps(mu + 3): -1 iff mu is odd.

    This is the orientation prefactor appearing when a relation for the
    degree-(d+1) class is used to isolate a degree-d invariant (the line
    class has Maslov index 3).
    """
    return -1 if mu % 2 == 1 else 1
