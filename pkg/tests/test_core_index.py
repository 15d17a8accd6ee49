"""Index arithmetic: gradings, canonicalization, order, guarded coefficients."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from wdvv_enum.core_index import (
    RAT,
    CanonicalKey,
    canonical_key,
    chern_number,
    double,
    eps_ratio_split,
    eps_sign_degree_bump,
    guarded_binomial,
    guarded_multinomial,
    interior_points,
    is_integral,
    key_less,
    maslov_index,
    self_intersection,
)

entries = st.lists(st.integers(min_value=-1, max_value=6), max_size=5)
keys = st.builds(
    canonical_key,
    st.integers(min_value=0, max_value=8),
    entries,
    st.lists(st.integers(min_value=0, max_value=4), max_size=4),
    st.integers(min_value=0, max_value=10),
)


def test_maslov_and_chern():
    assert maslov_index(1, (), ()) == 3
    assert maslov_index(6, (2,) * 8, ()) == 2
    assert maslov_index(2, (1,), (1,)) == 3
    # Doubling halves nothing: mu equals the Chern number of the double.
    assert maslov_index(5, (2, 1), (2,)) == chern_number(*double(5, (2, 1), (2,)))


def test_interior_points():
    assert interior_points(1, (), (), 2) == 0
    assert interior_points(6, (2,) * 5, (), 7) == 0
    assert interior_points(6, (2,) * 5, (), 1) == 3
    assert interior_points(6, (2,) * 5, (), 2) is None  # parity
    assert interior_points(0, (), (), 5) is None  # negative


def test_self_intersection():
    assert self_intersection(1, ()) == 1
    assert self_intersection(*double(1, (1, 1), ())) == -1
    assert self_intersection(*double(0, (-1,), ())) == -1


def test_canonical_key_sorts_and_drops_zeros():
    assert canonical_key(3, (0, 2, 1), (0,), 1) == CanonicalKey(3, (2, 1), (), 1)
    assert canonical_key(3, (2, 1), (), 1) == canonical_key(3, (1, 0, 2), (0, 0), 1)


@given(st.integers(0, 6), entries, entries, st.integers(0, 5))
def test_canonicalization_idempotent(d, alpha, beta, k):
    key = canonical_key(d, alpha, beta, k)
    assert canonical_key(*key) == key


@given(st.integers(0, 6), entries, entries, st.integers(0, 5),
       st.randoms(use_true_random=False))
def test_canonicalization_permutation_invariant(d, alpha, beta, k, rng):
    shuffled_a, shuffled_b = list(alpha), list(beta)
    rng.shuffle(shuffled_a)
    rng.shuffle(shuffled_b)
    assert canonical_key(d, alpha, beta, k) == canonical_key(
        d, shuffled_a, shuffled_b, k
    )


@given(keys)
def test_key_less_irreflexive(a):
    assert not key_less(a, a)


@given(keys, keys)
def test_key_less_antisymmetric(a, b):
    assert not (key_less(a, b) and key_less(b, a))


@given(keys, keys, keys)
@settings(max_examples=300)
def test_key_less_transitive(a, b, c):
    if key_less(a, b) and key_less(b, c):
        assert key_less(a, c)


def test_key_less_tiers():
    low = canonical_key(2, (2, 2), (), 5)
    high = canonical_key(3, (), (), 0)
    assert key_less(low, high)  # degree dominates
    assert key_less(canonical_key(3, (1,), (), 0), canonical_key(3, (2,), (), 0))
    assert key_less(canonical_key(3, (2,), (), 0), canonical_key(3, (2,), (), 1))
    # incomparable multi-indices
    assert not key_less(canonical_key(3, (2,), (1,), 0),
                        canonical_key(3, (1,), (2,), 0))
    assert not key_less(canonical_key(3, (1,), (2,), 0),
                        canonical_key(3, (2,), (1,), 0))


def test_guarded_binomial():
    assert guarded_binomial(5, 2) == 10
    assert guarded_binomial(-1, 0) == 0
    assert guarded_binomial(3, 5) == 0
    assert guarded_binomial(RAT(7, 2), 1) == 0
    assert guarded_binomial(RAT(4, 1), RAT(2, 1)) == 6


@given(st.integers(0, 12), st.integers(-2, 12), st.integers(-2, 12))
def test_guarded_multinomial_matches_factorials(n, p, q):
    got = guarded_multinomial(n, (p, q))
    if p < 0 or q < 0 or p + q > n:
        assert got == 0
    else:
        assert got == math.factorial(n) // (
            math.factorial(p) * math.factorial(q) * math.factorial(n - p - q)
        )


def test_guarded_multinomial_non_integral():
    assert guarded_multinomial(RAT(5, 2), (1, 1)) == 0
    assert guarded_multinomial(4, (RAT(1, 2), 1)) == 0


def test_eps_signs():
    assert eps_ratio_split(3, 3) == -1
    assert eps_ratio_split(3, 2) == 1
    assert eps_ratio_split(2, 2) == 1
    assert eps_sign_degree_bump(2) == 1
    assert eps_sign_degree_bump(3) == -1


@given(st.integers(0, 20), st.integers(0, 20))
def test_eps_ratio_consistent_with_degree_bump(mu1, mu2):
    # Splitting off a Maslov-3 factor is the degree-raising special case.
    assert eps_ratio_split(mu1, 3) == eps_sign_degree_bump(mu1)
    assert eps_ratio_split(mu1, mu2) == eps_ratio_split(mu2, mu1)


def test_is_integral():
    assert is_integral(3)
    assert is_integral(RAT(4, 2))
    assert not is_integral(RAT(3, 2))
