"""Hilbert functions of R/I for monomial ideals, and the identities tying them
to the generator structure of ARL ideals.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .arl import check_arl_definition
from .errors import HypothesisError, NoLastGeneratorError
from .ideal import (
    INF,
    MonomialIdeal,
    _minimalize,
    bounded_tuples,
    colon_by_last_variable,
    f_eval,
    is_strongly_stable,
    last_generator,
)
from .monomial import Exponents, max_index, total_degree


@lru_cache(maxsize=8192)
def _counts(gens: tuple[Exponents, ...], n: int, top: int) -> tuple[int, ...]:
    """Standard-monomial counts in degrees 0..top for a minimal generating set.

    Monomials are grouped by their exponent e of the last variable: x'^b * x_n^e
    is standard iff x'^b avoids the slice ideal {g' : g_n <= e}.
    """
    if top < 0:
        return ()
    if any(sum(g) == 0 for g in gens):
        return (0,) * (top + 1)
    if not gens:
        return tuple(comb(n - 1 + d, d) for d in range(top + 1))
    if n == 1:
        f = min(g[0] for g in gens)
        return tuple(1 if d < f else 0 for d in range(top + 1))
    breaks = sorted({g[-1] for g in gens})
    result = [0] * (top + 1)

    def spread(counts, start, stop):
        for e in range(start, min(stop, top + 1)):
            for d in range(e, top + 1):
                result[d] += counts[d - e]

    if breaks[0] > 0:
        spread(_counts((), n - 1, top), 0, breaks[0])
    for k, b in enumerate(breaks):
        if b > top:
            break
        stop = breaks[k + 1] if k + 1 < len(breaks) else top + 1
        sub = _minimalize(g[:-1] for g in gens if g[-1] <= b)
        spread(_counts(sub, n - 1, top - b), b, stop)
    return tuple(result)


def hilbert_values(ideal: MonomialIdeal, max_degree: int) -> list[int]:
    """[H(R/I, 0), ..., H(R/I, max_degree)]."""
    return list(_counts(ideal.generators, ideal.n, max_degree))


def hilbert_function(ideal: MonomialIdeal, d: int) -> int:
    if d < 0:
        return 0
    return _counts(ideal.generators, ideal.n, d)[d]


def quotient_slice_dimension(ideal: MonomialIdeal, d: int) -> int:
    """dim ((I : x_n) / I)_d for a strongly stable I whose last generator involves x_n."""
    try:
        mu = last_generator(ideal).mu
    except NoLastGeneratorError as exc:
        raise HypothesisError(str(exc)) from exc
    if mu != ideal.n:
        raise HypothesisError(f"max of the last generator is {mu}, not {ideal.n}")
    if not is_strongly_stable(ideal):
        raise HypothesisError("ideal is not strongly stable")
    return hilbert_function(ideal, d) - hilbert_function(colon_by_last_variable(ideal), d)


def count_generators(ideal: MonomialIdeal, *, max_idx: int, degree: int) -> int:
    return sum(
        1 for g in ideal.generators if max_index(g) == max_idx and total_degree(g) == degree
    )


def _require_pure_power_of_penultimate(ideal: MonomialIdeal) -> int:
    n = ideal.n
    if n < 2:
        raise HypothesisError("needs at least two variables")
    try:
        omega = last_generator(ideal).monomial
    except NoLastGeneratorError as exc:
        raise HypothesisError(str(exc)) from exc
    t = omega[n - 2]
    if t == 0 or sum(omega) != t:
        raise HypothesisError(f"last generator {omega} is not a power of x_{n - 1}")
    if not check_arl_definition(ideal):
        raise HypothesisError("ideal is not almost reverse lexicographic")
    return t


def stabilized_value(ideal: MonomialIdeal) -> tuple[int, int]:
    """(t, value) with H(R/I, d) = value for every d >= t.

    Requires an ARL ideal whose last generator is x_{n-1}^t; the value is the
    sum of f_{n-1} over I_{n-2}.
    """
    t = _require_pure_power_of_penultimate(ideal)
    n = ideal.n
    value = sum(int(f_eval(ideal, n - 1, a)) for a in bounded_tuples(ideal, n - 2))
    return t, value


@dataclass(frozen=True)
class DropReport:
    degree: int
    threshold: int  # f_{n-1}(0)
    previous: int  # H(R/I, d-1)
    current: int  # H(R/I, d)
    generator_count: int  # generators with max index n and degree d
    first_drop: int | None  # min {d : H(d) <= H(d-1)}
    drop_matches: bool | None  # only meaningful for d >= threshold
    grows: bool | None  # only meaningful for d < threshold

    @property
    def holds(self) -> bool:
        checks = [self.drop_matches, self.grows, self.first_drop == self.threshold]
        return all(c for c in checks if c is not None)

    def __bool__(self) -> bool:
        return self.holds


def drop_equals_generator_count(ideal: MonomialIdeal, d: int) -> DropReport:
    """Check, at degree d, how the Hilbert function of an ARL ideal with mu = n moves.

    Past f_{n-1}(0) the drop H(d-1) - H(d) counts the degree-d generators
    involving x_n; before it the function strictly grows; and f_{n-1}(0) is the
    first degree where it stops growing.
    """
    n = ideal.n
    if d < 1:
        raise ValueError("degree must be >= 1")
    if n < 2:
        raise HypothesisError("needs at least two variables")
    try:
        mu = last_generator(ideal).mu
    except NoLastGeneratorError as exc:
        raise HypothesisError(str(exc)) from exc
    if mu != n:
        raise HypothesisError(f"max of the last generator is {mu}, not {n}")
    if not check_arl_definition(ideal):
        raise HypothesisError("ideal is not almost reverse lexicographic")
    t = f_eval(ideal, n - 1, (0,) * (n - 2))
    if t == INF:
        raise HypothesisError(f"no power of x_{n - 1} lies in the ideal")
    t = int(t)
    values = hilbert_values(ideal, max(d, t + 1))
    first_drop = next((k for k in range(1, len(values)) if values[k] <= values[k - 1]), None)
    count = count_generators(ideal, max_idx=n, degree=d)
    prev, cur = values[d - 1], values[d]
    return DropReport(
        degree=d,
        threshold=t,
        previous=prev,
        current=cur,
        generator_count=count,
        first_drop=first_drop,
        drop_matches=(prev - cur == count) if d >= t else None,
        grows=(cur > prev) if d < t else None,
    )


@dataclass(frozen=True)
class HilbertReport:
    values: list[int]
    stabilization: tuple[int, int] | None = None

    def to_json(self) -> dict:
        stab = None
        if self.stabilization is not None:
            stab = {"t": self.stabilization[0], "value": self.stabilization[1]}
        return {"values": self.values, "max_degree": len(self.values) - 1, "stabilized": stab}


def hilbert_report(ideal: MonomialIdeal, max_degree: int) -> HilbertReport:
    try:
        stab = stabilized_value(ideal)
    except HypothesisError:
        stab = None
    return HilbertReport(hilbert_values(ideal, max_degree), stab)
