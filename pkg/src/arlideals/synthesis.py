"""Build an ARL ideal with a prescribed Hilbert function.

The construction recurses on the derived sequence, lifts the result to one
more variable and then repeatedly adds generators in the last variable via
``augment``, lowering the Hilbert function one degree window at a time.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .arl import AugmentationPlan, augment
from .errors import InvariantViolation, NotUnimodalError
from .hilbert import hilbert_values
from .ideal import INF, MonomialIdeal, lift, make_ideal, t_set
from .monomial import Exponents, total_degree
from .sequences import (
    HilbertSeq,
    default_horizon,
    derived,
    finite_form,
    first_descent,
    is_unimodal_at_each_tail,
)


@dataclass(frozen=True)
class SynthesisStep:
    degree: int  # d_i
    count: int  # t_i
    chosen: tuple[Exponents, ...]  # A_1 > ... > A_{t_i}
    g: tuple[int, ...]  # g(A_j) = d_i - |A_j|
    added: tuple[Exponents, ...]
    pool_before: int  # |T_i|
    pool_after: int  # |T_{i+1}|

    def to_json(self) -> dict:
        return {
            "d": self.degree,
            "t": self.count,
            "chosen": [list(a) for a in self.chosen],
            "g": list(self.g),
            "added": [list(m) for m in self.added],
            "pool_before": self.pool_before,
            "pool_after": self.pool_after,
        }


@dataclass
class SynthesisLevel:
    n: int
    sequence: HilbertSeq
    lifted: MonomialIdeal | None  # None at the one-variable base
    r0: int | float
    pool_size: int = 0  # |T_0|
    steps: list[SynthesisStep] = field(default_factory=list)
    ideal: MonomialIdeal | None = None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sequence": self.sequence.to_json(),
            "lifted": None if self.lifted is None else self.lifted.to_json(),
            "r0": "inf" if self.r0 == INF else self.r0,
            "pool_size": self.pool_size,
            "steps": [s.to_json() for s in self.steps],
            "ideal": None if self.ideal is None else self.ideal.to_json(),
        }


@dataclass
class SynthesisTrace:
    levels: list[SynthesisLevel]  # innermost (one variable) first
    final: MonomialIdeal

    @property
    def steps(self) -> list[SynthesisStep]:
        """Augmentation steps of the outermost level."""
        return self.levels[-1].steps if self.levels else []

    def to_json(self) -> dict:
        return {"levels": [lv.to_json() for lv in self.levels], "final": self.final.to_json()}


def _base_case(h: HilbertSeq) -> MonomialIdeal:
    prefix, last = finite_form(h)
    if 0 in prefix:
        return make_ideal(1, [(prefix.index(0),)])
    if last == 0:
        return make_ideal(1, [(len(prefix),)])
    return MonomialIdeal(1, ())


def _next_excess(h: HilbertSeq, start: int, stable: int) -> int | None:
    """min {d >= start : stable > h_d}, or None when there is none."""
    prefix, last = finite_form(h)
    for d in range(start, len(prefix)):
        if stable < prefix[d]:
            raise InvariantViolation(f"target h_{d} = {prefix[d]} above stable value {stable}")
        if stable > prefix[d]:
            return d
    if stable > last:
        return max(start, len(prefix))
    if stable < last:
        raise InvariantViolation(f"target tail {last} above stable value {stable}")
    return None


def _check_window(ideal: MonomialIdeal, h: HilbertSeq, below: int, level: int, top: int):
    """H(R/K, d) = h_d for d < below and = level for below <= d <= top."""
    got = hilbert_values(ideal, top)
    for d, v in enumerate(got):
        want = h.value_at(d) if d < below else level
        if v != want:
            raise InvariantViolation(f"H({d}) = {v}, expected {want} during synthesis")


def _realize(h: HilbertSeq, levels: list[SynthesisLevel]) -> MonomialIdeal:
    h1 = h.value_at(1)
    if h1 <= 1:
        ideal = _base_case(h)
        levels.append(SynthesisLevel(1, h, None, first_descent(h), ideal=ideal))
        return ideal
    inner = _realize(derived(h), levels)
    if inner.n != h1 - 1:
        raise InvariantViolation(f"recursion returned {inner.n} variables, expected {h1 - 1}")
    current = lift(inner)
    r0 = first_descent(h)
    level = SynthesisLevel(h1, h, current, r0)
    levels.append(level)
    if r0 == INF:
        level.ideal = current
        return current

    pool = t_set(current)
    level.pool_size = len(pool)
    stable = len(pool)
    form_len = len(finite_form(h)[0])
    _check_window(current, h, r0, stable, max(r0, form_len) + 1)

    base = current
    chosen: list[Exponents] = []
    g: dict[Exponents, int] = {}
    previous = r0
    while True:
        d = _next_excess(h, previous, stable)
        if d is None:
            break
        target = h.value_at(d)
        t = stable - target
        picks = pool[len(chosen) : len(chosen) + t]
        if len(picks) != t:
            raise InvariantViolation(f"pool exhausted at degree {d}")
        step_g = tuple(d - total_degree(a) for a in picks)
        chosen.extend(picks)
        g.update(zip(picks, step_g))
        current = augment(AugmentationPlan(base, tuple(chosen), dict(g)))
        added = tuple(a + (e,) for a, e in zip(picks, step_g))
        level.steps.append(SynthesisStep(d, t, tuple(picks), step_g, added, stable, stable - t))
        stable -= t
        _check_window(current, h, d, target, max(d, form_len) + 1)
        if stable != len(pool) - len(chosen):
            raise InvariantViolation("pool accounting drifted")
        previous = d
    level.ideal = current
    return current


def synthesize(h: HilbertSeq, horizon: int | None = None) -> tuple[MonomialIdeal, SynthesisTrace]:
    """ARL ideal in max(1, h_1) variables whose Hilbert function is h.

    Raises NotUnimodalError (with the (i, d) witness) when h is not
    unimodal at each tail, since then no such ideal exists.
    """
    verdict = is_unimodal_at_each_tail(h, horizon)
    if not verdict:
        i, d = verdict.witness
        raise NotUnimodalError(
            f"derived sequence {i} rises again at degree {d} after its first descent",
            witness=verdict.witness,
        )
    levels: list[SynthesisLevel] = []
    ideal = _realize(h, levels)
    top = horizon if horizon is not None else default_horizon(h)
    if hilbert_values(ideal, top) != h.values(top):
        raise InvariantViolation("synthesized ideal has the wrong Hilbert function")
    return ideal, SynthesisTrace(levels, ideal)


__all__ = ["SynthesisLevel", "SynthesisStep", "SynthesisTrace", "synthesize"]
