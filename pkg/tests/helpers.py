"""Shared fixtures, brute-force oracles and random generators for the tests.

The oracles here deliberately avoid the package's own shortcuts: Hilbert
values by listing every monomial, unimodality by expanding sequences to a
long explicit list.
"""
from __future__ import annotations

import random

from arlideals.arl import AugmentationPlan, augment
from arlideals.errors import HypothesisError
from arlideals.ideal import (
    INF,
    MonomialIdeal,
    contains,
    enumerate_index_sets,
    last_generator,
    lift,
    make_ideal,
    t_set,
)
from arlideals.monomial import monomials_of_degree, total_degree
from arlideals.sequences import HilbertSeq

# criterion number -> (passed, detail), filled in by test_acceptance
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}

# x, y, z = x1, x2, x3 throughout
MISSING_Y3Z3 = make_ideal(
    3, [(3, 0, 0), (2, 1, 0), (1, 3, 0), (0, 5, 0), (2, 0, 5), (1, 2, 3), (0, 4, 2)]
)
NON_ARL = make_ideal(
    3, [(3, 0, 0), (2, 1, 0), (1, 3, 0), (0, 5, 0), (0, 4, 2), (1, 2, 2), (0, 3, 3), (2, 0, 5)]
)
INFINITE_INDEX = make_ideal(3, [(2, 0, 0), (1, 2, 0), (1, 1, 2)])
TWO_VAR = make_ideal(2, [(3, 0), (2, 1), (1, 3), (0, 5)])
THREE_VAR_K1 = make_ideal(
    3, [(3, 0, 0), (2, 1, 0), (1, 3, 0), (0, 5, 0), (0, 4, 2), (1, 2, 3), (0, 3, 3)]
)
THREE_VAR = make_ideal(
    3,
    [(3, 0, 0), (2, 1, 0), (1, 3, 0), (0, 5, 0), (0, 4, 2), (1, 2, 3), (0, 3, 3), (2, 0, 5)],
)
FROBERG_335 = make_ideal(
    3,
    [
        (3, 0, 0), (2, 1, 0), (1, 3, 0), (0, 5, 0),
        (0, 4, 1),
        (1, 2, 3), (0, 3, 3),
        (2, 0, 5), (1, 1, 5), (0, 2, 5),
        (1, 0, 7), (0, 1, 7),
        (0, 0, 9),
    ],
)


def brute_hilbert(ideal: MonomialIdeal, d: int) -> int:
    return sum(1 for m in monomials_of_degree(ideal.n, d) if not contains(ideal, m))


def brute_hilbert_values(ideal: MonomialIdeal, top: int) -> list[int]:
    return [brute_hilbert(ideal, d) for d in range(top + 1)]


def borel_closure(n: int, monomials) -> MonomialIdeal:
    """Smallest strongly stable ideal containing the given monomials."""
    seen = set()
    stack = [tuple(m) for m in monomials]
    while stack:
        m = stack.pop()
        if m in seen:
            continue
        seen.add(m)
        for i in range(1, n):
            if m[i] == 0:
                continue
            for j in range(i):
                moved = list(m)
                moved[i] -= 1
                moved[j] += 1
                stack.append(tuple(moved))
    return make_ideal(n, seen)


def random_monomial(rng: random.Random, n: int, max_degree: int, min_degree: int = 1):
    d = rng.randint(min_degree, max_degree)
    cuts = sorted(rng.randint(0, d) for _ in range(n - 1))
    return tuple(b - a for a, b in zip([0] + cuts, cuts + [d]))


def random_strongly_stable(rng: random.Random, n: int, max_degree: int = 6) -> MonomialIdeal:
    """Borel closure of a few random monomials together with a power of x_{n-1}.

    The power keeps most samples inside the finiteness hypothesis; with
    seeds of degree >= 3 a good share of the samples are not ARL.
    """
    seeds = [random_monomial(rng, n, max_degree, min(3, max_degree)) for _ in range(rng.randint(1, 4))]
    seeds.append(tuple(rng.randint(2, max_degree) if j == n - 2 else 0 for j in range(n)))
    return borel_closure(n, seeds)


def satisfies_index_hypotheses(ideal: MonomialIdeal) -> bool:
    """Strongly stable, mu >= 2 and finitely many index tuples."""
    if ideal.is_zero or ideal.is_unit:
        return False
    try:
        if last_generator(ideal).mu < 2:
            return False
        enumerate_index_sets(ideal)
    except HypothesisError:
        return False
    return True


def _augment_level(rng, base, k, t, steps):
    """Add x^A x_n^g(A) for the k largest pool tuples, in ``steps`` calls."""
    pool = t_set(base)[:k]
    g = {}
    previous = t
    for a in pool:
        value = max(previous, total_degree(a) + 1) + (1 if rng.random() < 0.15 else 0)
        g[a] = value - total_degree(a)
        previous = value
    cuts = sorted(rng.sample(range(1, k), min(steps - 1, k - 1))) if k > 1 else []
    ideal = base
    for stop in cuts + [k]:
        ideal = augment(AugmentationPlan(base, tuple(pool[:stop]), {a: g[a] for a in pool[:stop]}))
    return ideal


def random_arl_chain(rng: random.Random, n: int, *, last_full: bool | None = None):
    """An ARL ideal in n variables built purely from augmentation steps.

    Returns (ideal, base) where ``base`` is the lifted ideal the final level
    started from (its last generator is a power of x_{n-1}).
    """
    ideal = make_ideal(1, [(rng.randint(1, 3),)])
    base = ideal
    for level in range(2, n + 1):
        base = lift(ideal)
        pool = t_set(base)
        t = last_generator(base).monomial[level - 2]
        final = level == n
        full = not final or (last_full if last_full is not None else rng.random() < 0.3)
        k = len(pool) if full else rng.randint(1, len(pool))
        ideal = _augment_level(rng, base, k, t, rng.randint(1, 3))
    return ideal, base


def expand(h: HilbertSeq, top: int) -> list[int]:
    return [h.value_at(d) for d in range(top + 1)]


def brute_unimodal(values: list[int]) -> bool:
    """Unimodal at each tail, judged on an explicit finite list.

    The list must be long enough that every derived sequence has settled.
    """
    K = max(1, values[1] if len(values) > 1 else 0)
    seqs = [values]
    for _ in range(K - 1):
        prev = seqs[-1]
        seqs.append([1] + [max(0, prev[d] - prev[d - 1]) for d in range(1, len(prev))])
    rs = []
    for s in seqs:
        rs.append(next((d for d in range(1, len(s)) if s[d] <= s[d - 1]), INF))
    depth = next(i for i, r in enumerate(rs) if r != INF)
    for i in range(depth, K):
        r = rs[i]
        if r == INF:
            continue
        s = seqs[i]
        if any(s[d] > s[d - 1] for d in range(r, len(s))):
            return False
    return True


def random_prefix_sequence(rng: random.Random, max_h1: int = 4, max_len: int = 8) -> HilbertSeq:
    """A random rising-then-falling prefix with a zero or constant tail (not always unimodal)."""
    h1 = rng.randint(1, max_h1)
    length = rng.randint(2, max_len)
    values = [1, h1]
    peak = rng.randint(1, length)
    while len(values) < length:
        last = values[-1]
        if len(values) < peak:
            values.append(last + rng.randint(0, h1 + 1))
        else:
            values.append(max(0, last - rng.randint(0, 3)))
    if values[-1] > 0 and rng.random() < 0.5:
        from arlideals.sequences import EventuallyConstant

        return HilbertSeq(tuple(values), EventuallyConstant(rng.randint(0, values[-1])))
    return HilbertSeq(tuple(values))
