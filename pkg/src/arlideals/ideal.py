"""Monomial ideals with canonical minimal generating sets.

Besides membership this module carries the structure used throughout: strong
stability, the last generator M_omega, the functions f_i (least power of x_i
that pushes a prefix monomial into the ideal) and the finite index sets I_i.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import (
    AmbientMismatchError,
    HypothesisError,
    InfiniteIndexSetError,
    NoLastGeneratorError,
)
from .monomial import (
    Exponents,
    as_exponents,
    degrevlex_compare,
    degrevlex_key,
    divides,
    generator_order,
    max_index,
    sort_descending,
    total_degree,
)

INF = math.inf


def _minimalize(gens: Iterable[Exponents]) -> tuple[Exponents, ...]:
    # ascending degree first: a divisor always has degree <= its multiple
    kept: list[Exponents] = []
    for g in sorted(set(gens), key=total_degree):
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(generator_order(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal of k[x_1..x_n] given by its minimal generators in canonical order.

    The constructor trusts minimality (use ``make_ideal`` for raw input) but
    always puts the generators into ``generator_order``.
    """

    n: int
    generators: tuple[Exponents, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ambient variable count must be >= 1")
        object.__setattr__(self, "generators", tuple(generator_order(self.generators)))

    @classmethod
    def from_generators(cls, n: int, raw: Iterable[Sequence[int]]) -> MonomialIdeal:
        return make_ideal(n, raw)

    def __contains__(self, m: Sequence[int]) -> bool:
        return contains(self, m)

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.n,)

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict) -> MonomialIdeal:
        from .monomial import parse_monomial

        n = int(data["n"])
        gens = []
        for g in data.get("generators", []):
            gens.append(parse_monomial(g, n) if isinstance(g, str) else as_exponents(g, n))
        return make_ideal(n, gens)


@dataclass(frozen=True)
class LastGenerator:
    monomial: Exponents
    mu: int


def make_ideal(n: int, raw: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Canonicalize: drop redundant generators and sort descending."""
    gens = [as_exponents(g) for g in raw]
    for g in gens:
        if len(g) != n:
            raise AmbientMismatchError(f"generator {g} has length {len(g)}, expected {n}")
    return MonomialIdeal(n, _minimalize(gens))


def contains(ideal: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != ideal.n:
        raise AmbientMismatchError(f"monomial {tuple(m)} not in {ideal.n} variables")
    return any(all(g <= e for g, e in zip(gen, m)) for gen in ideal.generators)


def add_generators(ideal: MonomialIdeal, extra: Iterable[Sequence[int]]) -> MonomialIdeal:
    return make_ideal(ideal.n, list(ideal.generators) + [tuple(e) for e in extra])


def strong_stability_witness(ideal: MonomialIdeal) -> tuple[Exponents, int, int] | None:
    """First (generator, i, j) with x_j * M / x_i outside the ideal, or None.

    Checking generators suffices for the whole ideal.
    """
    for gen in ideal.generators:
        for i in range(2, ideal.n + 1):
            if gen[i - 1] == 0:
                continue
            for j in range(1, i):
                moved = list(gen)
                moved[i - 1] -= 1
                moved[j - 1] += 1
                if not contains(ideal, moved):
                    return gen, i, j
    return None


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    return strong_stability_witness(ideal) is None


def last_generator(ideal: MonomialIdeal) -> LastGenerator:
    if ideal.is_zero:
        raise NoLastGeneratorError("the zero ideal has no last generator")
    if ideal.is_unit:
        raise NoLastGeneratorError("the unit ideal has no last generator")
    top = max(total_degree(g) for g in ideal.generators)
    # within one degree generators are stored descending, so the last is the smallest
    omega = [g for g in ideal.generators if total_degree(g) == top][-1]
    return LastGenerator(omega, max_index(omega))


def f_eval(ideal: MonomialIdeal, i: int, alpha: Sequence[int] = ()) -> int | float:
    """min { t : x^alpha * x_i^t in I }, or ``INF``.

    Evaluated in closed form over the generators that involve only
    x_1..x_i and whose first i-1 exponents fit under ``alpha``.
    """
    if not 1 <= i <= ideal.n:
        raise IndexError(f"f index {i} outside 1..{ideal.n}")
    if len(alpha) != i - 1:
        raise AmbientMismatchError(f"f_{i} takes {i - 1} arguments, got {len(alpha)}")
    best: int | float = INF
    for gen in ideal.generators:
        if any(gen[j] for j in range(i, ideal.n)):
            continue
        if all(gen[j] <= alpha[j] for j in range(i - 1)) and gen[i - 1] < best:
            best = gen[i - 1]
    return best


def bounded_tuples(ideal: MonomialIdeal, length: int) -> list[Exponents]:
    """Tuples with alpha_1 < f_1 and alpha_j < f_j(alpha_1..alpha_{j-1}), descending.

    Raises InfiniteIndexSetError when some bound on the way is infinite.
    """
    level: list[Exponents] = [()]
    for j in range(1, length + 1):
        nxt = []
        for prefix in level:
            bound = f_eval(ideal, j, prefix)
            if bound == INF:
                raise InfiniteIndexSetError(
                    f"f_{j}{prefix} is infinite, so tuples of length {j} are unbounded",
                    witness=(j, prefix),
                )
            nxt.extend(prefix + (a,) for a in range(int(bound)))
        level = nxt
    return sort_descending(level)


def _require_index_hypotheses(ideal: MonomialIdeal) -> LastGenerator:
    last = last_generator(ideal)
    if last.mu == 1:
        return last
    witness = strong_stability_witness(ideal)
    if witness is not None:
        raise HypothesisError(f"ideal is not strongly stable (witness {witness})")
    zero = (0,) * (last.mu - 2)
    if f_eval(ideal, last.mu - 1, zero) == INF:
        raise InfiniteIndexSetError(
            f"x_{last.mu - 1}^t is not in the ideal for any t, so I_{last.mu - 1} is infinite",
            witness=(last.mu - 1, zero),
        )
    return last


def enumerate_index_sets(ideal: MonomialIdeal) -> list[list[Exponents]]:
    """[I_1, ..., I_{mu-1}], each sorted descending; empty when mu == 1."""
    last = _require_index_hypotheses(ideal)
    mu = last.mu
    if mu == 1:
        return []
    sets = [bounded_tuples(ideal, i) for i in range(1, mu)]
    tail = last.monomial[: mu - 1]
    sets[-1] = [a for a in sets[-1] if degrevlex_compare(a, tail) >= 0]
    return sets


def t_set(ideal: MonomialIdeal) -> list[Exponents]:
    """{(alpha, b) : alpha in I_{n-2}, 0 <= b < f_{n-1}(alpha)}, descending.

    For an ideal whose last generator is a pure power of x_{n-1} this is the
    pool that the augmentation step draws new generators from.
    """
    return bounded_tuples(ideal, ideal.n - 1)


def reconstruct_generators(ideal: MonomialIdeal) -> MonomialIdeal:
    """Rebuild G(I) from f_1, the index sets and the f-values alone.

    Tuples whose f-value is infinite contribute nothing.
    """
    if ideal.is_zero:
        return ideal
    sets = enumerate_index_sets(ideal)
    n = ideal.n
    f1 = f_eval(ideal, 1)
    gens = [(int(f1),) + (0,) * (n - 1)]
    for i, index_set in enumerate(sets, start=1):
        for alpha in index_set:
            f = f_eval(ideal, i + 1, alpha)
            if f == INF:
                continue
            gens.append(alpha + (int(f),) + (0,) * (n - i - 1))
    return MonomialIdeal(n, tuple(set(gens)))


def colon_by_last_variable(ideal: MonomialIdeal) -> MonomialIdeal:
    """(I : x_n)."""
    gens = []
    for g in ideal.generators:
        if g[-1] > 0:
            g = g[:-1] + (g[-1] - 1,)
        gens.append(g)
    return make_ideal(ideal.n, gens)


def lift(ideal: MonomialIdeal, extra: int = 1, *, front: bool = False) -> MonomialIdeal:
    """Same generators viewed in ``n + extra`` variables.

    New variables go after the old ones unless ``front`` is set.
    """
    pad = (0,) * extra
    gens = [pad + g if front else g + pad for g in ideal.generators]
    return MonomialIdeal(ideal.n + extra, tuple(gens))


def generators_by_max_index(ideal: MonomialIdeal) -> dict[int, list[Exponents]]:
    out: dict[int, list[Exponents]] = {}
    for g in ideal.generators:
        out.setdefault(max_index(g) or 0, []).append(g)
    return out


__all__ = [
    "INF",
    "LastGenerator",
    "MonomialIdeal",
    "add_generators",
    "bounded_tuples",
    "colon_by_last_variable",
    "contains",
    "degrevlex_key",
    "enumerate_index_sets",
    "f_eval",
    "generators_by_max_index",
    "is_strongly_stable",
    "last_generator",
    "lift",
    "make_ideal",
    "reconstruct_generators",
    "strong_stability_witness",
    "t_set",
]
