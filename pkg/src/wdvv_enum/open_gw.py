"""Open Gromov-Witten invariants Gamma_{[d, alpha, beta], k} of plane blowups.

A key is a relative class [d, alpha, beta] (degree d, multiplicities alpha at
the real blowup points and beta at the conjugate pairs) together with a count
k of boundary point constraints; the interior point count
l = (mu - k - 1) / 2 is determined by the Maslov index mu = 3d - |alpha| -
2|beta|.  The engine evaluates Gamma by a memoized recursion:

1. graded and geometric vanishing filters, and the d = 0, 1 classification;
2. five families of initial values;
3. seven relations extracted from the open WDVV equations, selected by the
   (l, k) case analysis of the recursion theorem.

Each relation equates a target invariant with two kinds of sums:

* splitting sums over ordered decompositions of the class into two relative
  classes (the index set written ``split`` below), weighted by guarded
  multinomials in the boundary/interior point counts and an orientation sign
  that is -1 exactly when both factors have odd Maslov index;
* mixed sums over decompositions into a doubled absolute class and a relative
  class (the index set written ``mixed``), pairing a closed aggregate with an
  open invariant; their orientation ratio is always +1.

The relations named OGW4/OGW5 are difference relations evaluated on the
degree-raised class [d+1, alpha, beta]: the target appears there split
against the line class, so isolating it expresses Gamma_{[d,alpha,beta],k}
through invariants that are strictly smaller in the recursion order (degree,
then componentwise multiplicities, then k).

Splitting sums are enumerated in grouped form: equal multi-index entries are
distributed by value with a multinomial weight counting index orderings,
which keeps the relation evaluation polynomial in the number of repeated
entries.  The plain tuple streams :meth:`OpenEngine.enumerate_split` and
:meth:`OpenEngine.enumerate_mixed` expose the raw index sets for testing.
"""

from __future__ import annotations

import itertools
import sys
from math import comb
from typing import Dict, Iterator, List, NamedTuple, Optional, Tuple

from .cache_store import MemoStore
from .closed_gw import ClosedEngine
from .core_index import (
    RAT,
    CanonicalKey,
    canonical_key,
    eps_ratio_split,
    eps_sign_degree_bump,
    guarded_multinomial,
    interior_points,
    key_less,
    maslov_index,
)


class RecursionCycleError(Exception):
    """The recursion revisited a key it is still evaluating (a bug)."""


class NoApplicableRelationError(Exception):
    """No relation applies to a key that passed the screens (a bug)."""


class SplitTuple(NamedTuple):
    """One admissible two-disc decomposition of a target key."""

    left: Tuple[int, tuple, tuple, int, int]   # (d', alpha', beta', k', l')
    right: Tuple[int, tuple, tuple, int, int]  # (d'', alpha'', beta'', k'', l'')


class MixedTuple(NamedTuple):
    """One admissible sphere-disc decomposition of a target key."""

    closed: Tuple[int, tuple, tuple, int]      # (d_F, alpha_F, beta_F, l_F)
    open: Tuple[int, tuple, tuple, int, int]   # (d_U, alpha_U, beta_U, k, l_U)


_INITIAL_VALUES: Dict[CanonicalKey, int] = {
    CanonicalKey(0, (-1,), (), 0): 2,
    CanonicalKey(1, (), (), 2): 2,
    CanonicalKey(1, (), (), 0): 1,
    CanonicalKey(1, (1,), (), 1): 2,
    CanonicalKey(1, (), (1,), 0): 2,
}

# Nonzero degree 0 and 1 keys (the d = 0, 1 classification).
_LOW_DEGREE_KEYS = frozenset(_INITIAL_VALUES) | {CanonicalKey(1, (1, 1), (), 0)}


def _group(entries) -> List[Tuple[int, int]]:
    return [(v, len(list(g))) for v, g in itertools.groupby(sorted(entries))]


def _distributions(count: int, choices: range) -> Iterator[Tuple[int, list]]:
    """Assign `count` identical entries to the given choices.

    Yields (ways, [(choice, how_many), ...]) with ways the number of index
    orderings realizing the assignment.
    """
    if len(choices) == 0:
        return
    def rec(idx: int, remaining: int):
        u = choices[idx]
        if idx == len(choices) - 1:
            yield 1, [(u, remaining)]
            return
        for n in range(remaining + 1):
            ways = comb(remaining, n)
            for sub_ways, sub in rec(idx + 1, remaining - n):
                yield ways * sub_ways, [(u, n)] + sub
    yield from rec(0, count)


def _grouped_splits(groups, lo_hi) -> Iterator[Tuple[int, list, list, int]]:
    """Distribute grouped entries between the two sides of a splitting.

    lo_hi(v) gives the inclusive range of the left part of an entry of value
    v.  Yields (weight, left_entries, right_entries, left_sum).
    """
    def rec(idx: int):
        if idx == len(groups):
            yield 1, [], [], 0
            return
        v, n = groups[idx]
        lo, hi = lo_hi(v)
        for ways, assignment in _distributions(n, range(lo, hi + 1)):
            left = [u for u, c in assignment for _ in range(c)]
            s = sum(left)
            right = [v - u for u in left]
            for ways2, l2, r2, s2 in rec(idx + 1):
                yield ways * ways2, left + l2, right + r2, s + s2
    yield from rec(0)


class OpenEngine:
    """Memoized evaluator of the open invariants and their relations."""

    def __init__(self, store: Optional[MemoStore] = None,
                 closed: Optional[ClosedEngine] = None,
                 check_order: bool = False) -> None:
        self.store = store if store is not None else MemoStore()
        self.closed = closed if closed is not None else ClosedEngine(self.store)
        self.check_order = check_order
        self.relation_used: Dict[CanonicalKey, str] = {}
        self._in_progress: List[CanonicalKey] = []
        self.max_depth = 0
        if sys.getrecursionlimit() < 100000:
            sys.setrecursionlimit(100000)

    # -- screens ----------------------------------------------------------

    def initial_value(self, d: int, alpha=(), beta=(), k: int = 0):
        """The value of one of the five seed families, or None."""
        value = _INITIAL_VALUES.get(canonical_key(d, alpha, beta, k))
        return None if value is None else RAT(value)

    def vanishes_a_priori(self, d: int, alpha=(), beta=(), k: int = 0) -> bool:
        """True if the invariant is zero by grading, by the support
        constraints from positivity of intersections, or by the degree 0, 1
        classification."""
        key = canonical_key(d, alpha, beta, k)
        d, alpha, beta, k = key
        if interior_points(d, alpha, beta, k) is None:
            return True
        if d < 0:
            return True
        if d <= 1:
            return key not in _LOW_DEGREE_KEYS
        if any(a < 0 or a > d for a in alpha):
            return True
        if any(b < 0 or 2 * b > d for b in beta):
            return True
        return False

    # -- driver -----------------------------------------------------------

    def gamma(self, d: int, alpha=(), beta=(), k: int = 0):
        """Gamma_{[d, alpha, beta], k} as an exact rational."""
        return self.gamma_key(canonical_key(d, alpha, beta, k))

    def gamma_key(self, key: CanonicalKey):
        cached = self.store.open.get(key)
        if cached is not None:
            return cached
        if self.check_order and self._in_progress:
            top = self._in_progress[-1]
            if not (key_less(key, top) or key in _LOW_DEGREE_KEYS
                    or self.vanishes_a_priori(*key)):
                raise AssertionError(
                    f"recursion order violation: {key} under {top}"
                )
        if self.vanishes_a_priori(*key):
            return self.store.put_open(key, RAT(0))
        seed = _INITIAL_VALUES.get(key)
        if seed is not None:
            return self.store.put_open(key, RAT(seed))
        if key in self._in_progress:
            raise RecursionCycleError(f"cycle at {key}")
        self._in_progress.append(key)
        self.max_depth = max(self.max_depth, len(self._in_progress))
        try:
            relation = self.select_relation(key)
            value = self.eval_relation(relation, key)
        finally:
            self._in_progress.pop()
        self.relation_used[key] = relation
        return self.store.put_open(key, value)

    def select_relation(self, key: CanonicalKey) -> str:
        """The relation used for a key that passed the screens."""
        d, alpha, beta, k = key
        l = interior_points(d, alpha, beta, k)
        if l is None:
            raise NoApplicableRelationError(f"graded-vanishing key {key}")
        if l >= 2:
            return "OGW1"
        if l == 1:
            if k >= 1:
                return "OGW2"
            if alpha:
                return "OGW3a"
            if beta:
                return "OGW3b"
        elif l == 0:
            if k >= 2:
                return "OGW4"
            if alpha:
                return "OGW5a"
            if beta:
                return "OGW5b"
        raise NoApplicableRelationError(f"no relation for {key}")

    # -- grouped splitting sums -------------------------------------------

    def _split_sum(self, sigma: CanonicalKey, coeff, excluded=None,
                   dist_kind: Optional[str] = None):
        """Sum over the splitting index set of sigma.

        coeff(d1, k1, l1, d2, k2, l2, u1, u2) returns the exact coefficient
        of Gamma' Gamma'' (without the orientation sign); u1, u2 are the two
        parts of the distinguished entry when dist_kind is 'alpha' or 'beta',
        else None.  Tuples whose left or right key equals `excluded` are
        skipped.
        """
        d, alpha, beta, k_sigma = sigma
        mu_sigma = maslov_index(d, alpha, beta)
        if dist_kind == "alpha":
            dist_value, alpha = alpha[0], alpha[1:]
        elif dist_kind == "beta":
            dist_value, beta = beta[0], beta[1:]
        else:
            dist_value = None
        alpha_groups = _group(alpha)
        beta_groups = _group(beta)
        total = RAT(0)
        for d1 in range(1, d):
            d2 = d - d1
            def alpha_range(v):
                return max(0, v - d2), min(v, d1)
            def beta_range(v):
                return max(0, v - (d2 + 1) // 2), min(v, (d1 + 1) // 2)
            if dist_value is None:
                dist_parts = [(None, None)]
            elif dist_kind == "alpha":
                lo, hi = alpha_range(dist_value)
                dist_parts = [(u, dist_value - u) for u in range(lo, hi + 1)]
            else:
                lo, hi = beta_range(dist_value)
                dist_parts = [(u, dist_value - u) for u in range(lo, hi + 1)]
            for wa, a1, a2, sa1 in _grouped_splits(alpha_groups, alpha_range):
                for wb, b1, b2, sb1 in _grouped_splits(beta_groups, beta_range):
                    weight = wa * wb
                    for u1, u2 in dist_parts:
                        if dist_kind == "alpha":
                            mu1 = 3 * d1 - (sa1 + u1) - 2 * sb1
                        elif dist_kind == "beta":
                            mu1 = 3 * d1 - sa1 - 2 * (sb1 + u1)
                        else:
                            mu1 = 3 * d1 - sa1 - 2 * sb1
                        mu2 = mu_sigma - mu1
                        eps = eps_ratio_split(mu1, mu2)
                        left_alpha = a1 + [u1] if dist_kind == "alpha" else a1
                        right_alpha = a2 + [u2] if dist_kind == "alpha" else a2
                        left_beta = b1 + [u1] if dist_kind == "beta" else b1
                        right_beta = b2 + [u2] if dist_kind == "beta" else b2
                        key1_class = canonical_key(d1, left_alpha, left_beta, 0)
                        key2_class = canonical_key(d2, right_alpha, right_beta, 0)
                        for k1 in range(0, k_sigma + 2):
                            k2 = k_sigma + 1 - k1
                            num1 = mu1 - k1 - 1
                            if num1 < 0 or num1 % 2:
                                continue
                            l1 = num1 // 2
                            num2 = mu2 - k2 - 1
                            if num2 < 0:
                                continue
                            l2 = num2 // 2
                            if excluded is not None:
                                if (key1_class._replace(k=k1) == excluded
                                        or key2_class._replace(k=k2) == excluded):
                                    continue
                            c = coeff(d1, k1, l1, d2, k2, l2, u1, u2)
                            if not c:
                                continue
                            g1 = self.gamma_key(key1_class._replace(k=k1))
                            if not g1:
                                continue
                            g2 = self.gamma_key(key2_class._replace(k=k2))
                            if not g2:
                                continue
                            total += weight * eps * c * g1 * g2
        return total

    def _mixed_sum(self, sigma_class, k_open: int, coeff,
                   dist_kind: Optional[str] = None):
        """Sum over the sphere-disc index set of a class, boundary count
        k_open on the open part.

        coeff(d_F, l_F, d_U, l_U, dot2a, dot2b, uF, uU) returns the
        coefficient of Ntilde * Gamma; dot2a = 2 alpha_F . alpha_U and
        dot2b = 2 beta_F . beta_U over the grouped entries; uF, uU are the
        closed/open parts of the distinguished entry (uF half-integral for a
        beta entry), else None.
        """
        d, alpha, beta = sigma_class
        if dist_kind == "alpha":
            dist_value, alpha = alpha[0], alpha[1:]
        elif dist_kind == "beta":
            dist_value, beta = beta[0], beta[1:]
        else:
            dist_value = None
        alpha_groups = _group(alpha)
        beta_groups = _group(beta)
        total = RAT(0)
        for d_f in range(1, d // 2 + 1):
            d_u = d - 2 * d_f
            # Assignments of each entry value v: open part u, closed part
            # (v - u)/2, pruned to the supports of the two factors.
            def alpha_options(v):
                # u = -1 pairs a closed part (v+1)/2 with the exceptional
                # disc class; the open invariant vanishes unless the rest of
                # the open key is trivial, which the Gamma lookup enforces.
                out = []
                for u in range(max(-1, v - 2 * d_f), min(v, d_u) + 1):
                    if (v - u) % 2 == 0:
                        out.append(u)
                return out
            def beta_options(v):
                lo = max(0, v - 2 * d_f)
                hi = min(v, (d_u + 1) // 2)
                return list(range(lo, hi + 1))
            def assignments(groups, options):
                def rec(idx):
                    if idx == len(groups):
                        yield 1, [], [], 0, 0, 0
                        return
                    v, n = groups[idx]
                    opts = options(v)
                    if not opts:
                        return
                    for ways, assignment in _distributions(n, range(len(opts))):
                        us = [opts[i] for i, c in assignment for _ in range(c)]
                        s_u = sum(us)
                        s_f2 = sum(v - u for u in us)
                        dot2 = sum((v - u) * u for u in us)
                        fs = [(v - u) for u in us]
                        for w2, us2, fs2, su2, sf2, dd2 in rec(idx + 1):
                            yield (ways * w2, us + us2, fs + fs2,
                                   s_u + su2, s_f2 + sf2, dot2 + dd2)
                yield from rec(0)
            if dist_kind == "alpha":
                dist_opts = [(u, dist_value - u) for u in alpha_options(dist_value)]
            elif dist_kind == "beta":
                dist_opts = [(u, dist_value - u) for u in beta_options(dist_value)]
            else:
                dist_opts = [(None, None)]
            for wa, ua, fa2, sua, sfa2, dot2a in assignments(
                alpha_groups, alpha_options
            ):
                for wb, ub, fb2, sub, sfb2, dot2b in assignments(
                    beta_groups, beta_options
                ):
                    weight = wa * wb
                    for u_dist, f2_dist in dist_opts:
                        if dist_kind == "alpha":
                            open_alpha, open_beta = ua + [u_dist], ub
                            mu_u = 3 * d_u - (sua + u_dist) - 2 * sub
                            l_f2 = 6 * d_f - (sfa2 + f2_dist) - 2 * sfb2 - 2
                            alpha_f = [x // 2 for x in fa2] + [f2_dist // 2]
                            beta_f = [RAT(x, 2) for x in fb2]
                            da = dot2a + f2_dist * u_dist
                            db = dot2b
                        elif dist_kind == "beta":
                            open_alpha, open_beta = ua, ub + [u_dist]
                            mu_u = 3 * d_u - sua - 2 * (sub + u_dist)
                            l_f2 = 6 * d_f - sfa2 - 2 * (sfb2 + f2_dist) - 2
                            alpha_f = [x // 2 for x in fa2]
                            beta_f = [RAT(x, 2) for x in fb2] + [RAT(f2_dist, 2)]
                            da = dot2a
                            db = dot2b + f2_dist * u_dist
                        else:
                            open_alpha, open_beta = ua, ub
                            mu_u = 3 * d_u - sua - 2 * sub
                            l_f2 = 6 * d_f - sfa2 - 2 * sfb2 - 2
                            alpha_f = [x // 2 for x in fa2]
                            beta_f = [RAT(x, 2) for x in fb2]
                            da, db = dot2a, dot2b
                        if l_f2 < 0 or l_f2 % 2:
                            continue
                        l_f = l_f2 // 2
                        num = mu_u - k_open - 1
                        if num < 0 or num % 2:
                            continue
                        l_u = num // 2
                        if dist_kind == "alpha":
                            u_f = (dist_value - u_dist) // 2
                        elif dist_kind == "beta":
                            u_f = RAT(dist_value - u_dist, 2)
                        else:
                            u_f = None
                        c = coeff(d_f, l_f, d_u, l_u, da, db, u_f, u_dist)
                        if not c:
                            continue
                        g_u = self.gamma(d_u, open_alpha, open_beta, k_open)
                        if not g_u:
                            continue
                        n_f = self.closed.n_tilde(d_f, alpha_f, beta_f)
                        if not n_f:
                            continue
                        total += weight * c * n_f * g_u
        return total

    # -- the relations -----------------------------------------------------

    def eval_relation(self, relation: str, key: CanonicalKey):
        """Evaluate one relation for the target key and solve for Gamma."""
        d, alpha, beta, k = key
        l = interior_points(d, alpha, beta, k)
        if relation == "OGW1":
            return self._ogw1(d, alpha, beta, k, l)
        if relation == "OGW2":
            return self._ogw2(d, alpha, beta, k, l)
        if relation == "OGW3a":
            return self._ogw3(d, alpha, beta, k, l, "alpha")
        if relation == "OGW3b":
            return self._ogw3(d, alpha, beta, k, l, "beta")
        if relation == "OGW4":
            return self._ogw4(d, alpha, beta, k, l)
        if relation == "OGW5a":
            return self._ogw5(d, alpha, beta, k, l, "alpha")
        if relation == "OGW5b":
            return self._ogw5(d, alpha, beta, k, l, "beta")
        raise ValueError(f"unknown relation {relation!r}")

    def _ogw1(self, d, alpha, beta, k, l):
        def split_coeff(d1, k1, l1, d2, k2, l2, u1, u2):
            m = guarded_multinomial(k, (k1, k2 - 1))
            if not m:
                return 0
            bracket = (
                RAT(d2, 2) * guarded_multinomial(l - 2, (l1 - 1, l2))
                - RAT(d1, 2) * guarded_multinomial(l - 2, (l1, l2 - 1))
            )
            return m * RAT(d1, 2) * bracket
        def mixed_coeff(d_f, l_f, d_u, l_u, da, db, u_f, u_u):
            quantum = RAT(d_f * d_u, 2) - RAT(da, 4) - RAT(db, 2)
            bracket = (
                RAT(d_u, 2) * guarded_multinomial(l - 2, (l_f - 1, l_u))
                - d_f * guarded_multinomial(l - 2, (l_f, l_u - 1))
            )
            return d_f * quantum * bracket
        sigma = CanonicalKey(d, alpha, beta, k)
        return (self._split_sum(sigma, split_coeff)
                + self._mixed_sum((d, alpha, beta), k, mixed_coeff))

    def _ogw2(self, d, alpha, beta, k, l):
        def split_coeff(d1, k1, l1, d2, k2, l2, u1, u2):
            m = guarded_multinomial(l - 1, (l1, l2))
            if not m:
                return 0
            bracket = (
                RAT(d2, 2) * guarded_multinomial(k - 1, (k1 - 1, k2 - 1))
                - RAT(d1, 2) * guarded_multinomial(k - 1, (k1, k2 - 2))
            )
            return m * RAT(d1, 2) * bracket
        def mixed_coeff(d_f, l_f, d_u, l_u, da, db, u_f, u_u):
            quantum = RAT(d_f * d_u, 2) - RAT(da, 4) - RAT(db, 2)
            return -guarded_multinomial(l - 1, (l_f, l_u)) * d_f * d_f * quantum
        sigma = CanonicalKey(d, alpha, beta, k)
        total = (self._split_sum(sigma, split_coeff)
                 + self._mixed_sum((d, alpha, beta), k, mixed_coeff))
        if k == 1:
            total -= RAT(d * d, 4) * self.closed.n_tilde(
                RAT(d, 2), [RAT(a, 2) for a in alpha], [RAT(b, 2) for b in beta]
            )
        return total

    def _ogw3(self, d, alpha, beta, k, l, kind):
        value = alpha[0] if kind == "alpha" else beta[0]
        def split_coeff(d1, k1, l1, d2, k2, l2, u1, u2):
            m = (guarded_multinomial(k, (k1, k2 - 1))
                 * guarded_multinomial(l - 1, (l1, l2)))
            if not m:
                return 0
            return m * RAT(d1, 2) * RAT(d1 * u2 - d2 * u1, 4)
        def mixed_coeff(d_f, l_f, d_u, l_u, da, db, u_f, u_u):
            m = guarded_multinomial(l - 1, (l_f, l_u))
            if not m:
                return 0
            lever = u_f * RAT(d_u, 2) - RAT(d_f * u_u, 2)
            quantum = -RAT(d_f * d_u, 2) + RAT(da, 4) + RAT(db, 2)
            return m * d_f * lever * quantum
        sigma = CanonicalKey(d, alpha, beta, k)
        total = (
            self._split_sum(sigma, split_coeff, dist_kind=kind)
            + self._mixed_sum((d, alpha, beta), k, mixed_coeff, dist_kind=kind)
        )
        return total / RAT(-value, 2)

    def _ogw4(self, d, alpha, beta, k, l):
        target = CanonicalKey(d, alpha, beta, k)
        sigma = CanonicalKey(d + 1, alpha, beta, k - 1)
        def split_coeff(d1, k1, l1, d2, k2, l2, u1, u2):
            first = guarded_multinomial(l + 1, (l1, l2))
            a = 0
            if first:
                a = first * RAT(d1, 2) * (
                    RAT(d2, 2) * guarded_multinomial(k - 2, (k1 - 1, k2 - 1))
                    - RAT(d1, 2) * guarded_multinomial(k - 2, (k1, k2 - 2))
                )
            second = guarded_multinomial(k - 1, (k1, k2 - 1))
            b = 0
            if second:
                b = second * RAT(d1, 2) * (
                    RAT(d2, 2) * guarded_multinomial(l, (l1 - 1, l2))
                    - RAT(d1, 2) * guarded_multinomial(l, (l1, l2 - 1))
                )
            return a - b
        def mixed_coeff(d_f, l_f, d_u, l_u, da, db, u_f, u_u):
            quantum = RAT(d_f * d_u, 2) - RAT(da, 4) - RAT(db, 2)
            a = -guarded_multinomial(l + 1, (l_f, l_u)) * d_f * d_f * quantum
            bracket = (
                RAT(d_u, 2) * guarded_multinomial(l, (l_f - 1, l_u))
                - d_f * guarded_multinomial(l, (l_f, l_u - 1))
            )
            b = d_f * quantum * bracket
            return a - b
        total = (
            self._split_sum(sigma, split_coeff, excluded=target)
            + self._mixed_sum((d + 1, alpha, beta), k - 1, mixed_coeff)
        )
        if k == 2:
            total -= RAT((d + 1) ** 2, 4) * self.closed.n_tilde(
                RAT(d + 1, 2),
                [RAT(a, 2) for a in alpha],
                [RAT(b, 2) for b in beta],
            )
        sign = eps_sign_degree_bump(maslov_index(d, alpha, beta))
        lhs = sign * RAT(d + 1, 4) * self.gamma(1, (), (), 0)
        return total / lhs

    def _ogw5(self, d, alpha, beta, k, l, kind):
        target = CanonicalKey(d, alpha, beta, k)
        sigma = CanonicalKey(d + 1, alpha, beta, k + 1)
        value = alpha[0] if kind == "alpha" else beta[0]
        lever_scale = RAT(2, value)
        def split_coeff(d1, k1, l1, d2, k2, l2, u1, u2):
            point = guarded_multinomial(l, (l1, l2))
            if not point:
                return 0
            a = point * RAT(d1, 2) * (
                RAT(d2, 2) * guarded_multinomial(k, (k1 - 1, k2 - 1))
                - RAT(d1, 2) * guarded_multinomial(k, (k1, k2 - 2))
            )
            bmult = guarded_multinomial(k + 1, (k1, k2 - 1))
            b = 0
            if bmult:
                b = (lever_scale * bmult * point * RAT(d1, 2)
                     * RAT(d1 * u2 - d2 * u1, 4))
            return a + b
        def mixed_coeff(d_f, l_f, d_u, l_u, da, db, u_f, u_u):
            point = guarded_multinomial(l, (l_f, l_u))
            if not point:
                return 0
            quantum = RAT(d_f * d_u, 2) - RAT(da, 4) - RAT(db, 2)
            a = -point * d_f * d_f * quantum
            lever = u_f * RAT(d_u, 2) - RAT(d_f * u_u, 2)
            b = lever_scale * point * d_f * lever * (-quantum)
            return a + b
        total = (
            self._split_sum(sigma, split_coeff, excluded=target, dist_kind=kind)
            + self._mixed_sum((d + 1, alpha, beta), k + 1, mixed_coeff,
                              dist_kind=kind)
        )
        if k == 0:
            total -= RAT((d + 1) ** 2, 4) * self.closed.n_tilde(
                RAT(d + 1, 2),
                [RAT(a, 2) for a in alpha],
                [RAT(b, 2) for b in beta],
            )
        sign = eps_sign_degree_bump(maslov_index(d, alpha, beta))
        lhs = (sign * RAT(d * d + (1 - k) * d - k, 4)
               * self.gamma(1, (), (), 2))
        if not lhs:
            raise NoApplicableRelationError(
                f"degenerate difference-relation coefficient at {target}"
            )
        return total / lhs

    # -- plain index-set streams (reference enumeration for testing) ------

    def enumerate_split(self, d: int, alpha, beta, k: int
                        ) -> Iterator[SplitTuple]:
        """The splitting index set of a target, as plain tuples.

        Multi-indices keep their given lengths (no canonicalization); the
        stream realizes the formal constraint set, including entries that
        make one factor vanish.
        """
        mu = maslov_index(d, alpha, beta)
        for d1 in range(0, d + 1):
            d2 = d - d1
            alpha_ranges = [range(max(-1, a - d2), min(d1, a + 1) + 1)
                            for a in alpha]
            beta_ranges = [
                range(max(0, b - (d2 + 1) // 2), min((d1 + 1) // 2, b) + 1)
                for b in beta
            ]
            for a1 in itertools.product(*alpha_ranges):
                a2 = tuple(x - y for x, y in zip(alpha, a1))
                for b1 in itertools.product(*beta_ranges):
                    b2 = tuple(x - y for x, y in zip(beta, b1))
                    mu1 = maslov_index(d1, a1, b1)
                    mu2 = mu - mu1
                    for k1 in range(0, k + 2):
                        k2 = k + 1 - k1
                        n1, n2 = mu1 - k1 - 1, mu2 - k2 - 1
                        if n1 < 0 or n1 % 2 or n2 < 0 or n2 % 2:
                            continue
                        yield SplitTuple(
                            (d1, a1, b1, k1, n1 // 2),
                            (d2, a2, b2, k2, n2 // 2),
                        )

    def enumerate_mixed(self, d: int, alpha, beta, k: int
                        ) -> Iterator[MixedTuple]:
        """The sphere-disc index set of a target, as plain tuples.

        The closed part ranges over the support of the closed aggregates
        (integral alpha_F in [0, d_F], half-integral beta_F in [0, d_F] with
        2 beta_F <= beta componentwise).
        """
        for d_f in range(1, d // 2 + 1):
            d_u = d - 2 * d_f
            alpha_f_ranges = [
                [x for x in range(0, min(d_f, (a + 1) // 2) + 1)]
                for a in alpha
            ]
            beta_f_ranges = [
                [RAT(x, 2) for x in range(0, min(2 * d_f, b) + 1)]
                for b in beta
            ]
            for af in itertools.product(*alpha_f_ranges):
                au = tuple(a - 2 * x for a, x in zip(alpha, af))
                for bf in itertools.product(*beta_f_ranges):
                    bu = tuple(b - 2 * x for b, x in zip(beta, bf))
                    l_f = 3 * d_f - sum(af) - 2 * sum(bf) - 1
                    if l_f < 0 or l_f != int(l_f):
                        continue
                    mu_u = 3 * d_u - sum(au) - 2 * sum(bu)
                    num = mu_u - k - 1
                    if num < 0 or num % 2:
                        continue
                    yield MixedTuple(
                        (d_f, af, bf, int(l_f)),
                        (d_u, au, bu, k, num // 2),
                    )
