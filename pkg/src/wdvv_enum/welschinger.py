"""Conversion between open Gromov-Witten values and Welschinger counts.

The open invariant Gamma of a relative class theta with l interior point
constraints determines the signed count W of real rational curves in the
doubled class through l conjugate point pairs and k real points:

    Gamma = (-1)^{s_p(theta)} 2^{1-l} W.

The sign s_p comes from a Pin structure on the real locus L (a projective
plane blown up at the real points) through the associated quadratic function
t_p on H_1(L; Z/2):

    s_p(theta) = (mu(theta) - double(theta) . double(theta) - 2) / 2
                 + t_p(boundary of theta) + 1   (mod 2).

The boundary class of [d, alpha, beta] in H_1(L; Z/2) is d [dH] + sum_i
alpha_i [dF_i]; the classes at conjugate pairs double to closed divisors and
contribute no boundary.  The Pin structure is fixed by t_p = 1 on each
generator [dH], [dF_i]; t_p extends to sums by the quadratic identity

    t_p(x + y) = t_p(x) + t_p(y) + x . y + w_1(x) w_1(y)   (mod 2),

with the intersection pairing diagonal (each generator squares to 1, cross
pairings 0) and w_1 = 1 on every generator.  On a sum of m distinct
generators this evaluates to the period-four pattern 0, 1, 1, 0.
"""

from __future__ import annotations

from typing import NamedTuple

from .core_index import (
    RAT,
    as_int,
    double,
    interior_points,
    is_integral,
    maslov_index,
    self_intersection,
)


class ParityError(ArithmeticError):
    """The sign formula received a class with inconsistent gradings."""


class BoundaryClassMod2(NamedTuple):
    """A class in H_1(L; Z/2) in the generator basis [dH], [dF_1], ..."""

    h: int
    f: tuple


def boundary_class_mod2(d, alpha, beta=()) -> BoundaryClassMod2:
    """Boundary of [d, alpha, beta] in H_1(L; Z/2).

    beta is accepted (and ignored) so a full relative class can be passed:
    the conjugate-pair classes have no boundary on L.
    """
    return BoundaryClassMod2(as_int(d) % 2, tuple(as_int(a) % 2 for a in alpha))


def t_p(x: BoundaryClassMod2) -> int:
    """The quadratic function of the fixed Pin structure, mod 2.

    Evaluated by adding the generators present in x one at a time with the
    quadratic identity; each step adds t_p(generator) = 1, the pairing of the
    new generator with the partial sum (0: the pairing is diagonal and each
    generator enters at most once), and w_1(partial) w_1(generator).
    """
    total = 0
    w1_partial = 0
    for bit in (x.h,) + x.f:
        if bit:
            total = (total + 1 + w1_partial) % 2
            w1_partial = (w1_partial + 1) % 2
    return total


def s_p(d, alpha, beta=()) -> int:
    """The Pin-structure sign exponent of the class [d, alpha, beta]."""
    mu = maslov_index(d, alpha, beta)
    square = self_intersection(*double(d, alpha, beta))
    num = mu - square - 2
    if num % 2 != 0:
        raise ParityError(
            f"mu - square is odd for [{d}, {alpha}, {beta}]; "
            "the class is not the double of a relative class"
        )
    return (num // 2 + t_p(boundary_class_mod2(d, alpha, beta)) + 1) % 2


def welschinger_from_gamma(d, alpha, beta, k, gamma) -> int:
    """The Welschinger count W with Gamma = (-1)^{s_p} 2^{1-l} W.

    Raises ValueError if the interior point count l is undefined for a
    nonzero Gamma, or if W fails to be an integer (either signals an
    inconsistent input pair).
    """
    if not gamma:
        return 0
    l = interior_points(d, alpha, beta, k)
    if l is None:
        raise ValueError(
            f"nonzero Gamma for [{d}, {alpha}, {beta}], k={k} "
            "with undefined interior point count"
        )
    w = RAT(gamma) * RAT(2, 1) ** (l - 1) * (-1) ** s_p(d, alpha, beta)
    if not is_integral(w):
        raise ValueError(
            f"non-integer Welschinger count {w} for [{d}, {alpha}, {beta}], k={k}"
        )
    return as_int(w)


def gamma_from_welschinger(d, alpha, beta, k, w):
    """The open invariant Gamma with Gamma = (-1)^{s_p} 2^{1-l} W."""
    if not w:
        return RAT(0)
    l = interior_points(d, alpha, beta, k)
    if l is None:
        raise ValueError(
            f"nonzero Welschinger count for [{d}, {alpha}, {beta}], k={k} "
            "with undefined interior point count"
        )
    return RAT(w) * RAT(2, 1) ** (1 - l) * (-1) ** s_p(d, alpha, beta)
