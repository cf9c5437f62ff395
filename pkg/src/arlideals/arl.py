"""Almost reverse lexicographic (ARL) ideals.

An ideal is ARL when every monomial that is degrevlex-larger than a minimal
generator of the same degree already lies in the ideal.  Two independent
checks are provided: a brute-force scan of that definition, and the finite
criterion on the f-values over the index sets.  ``augment`` is the step that
adds generators in the last variable while keeping the ideal ARL.
"""
from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import HypothesisError, InvalidPlanError, InvariantViolation, NoLastGeneratorError
from .ideal import (
    INF,
    MonomialIdeal,
    contains,
    enumerate_index_sets,
    f_eval,
    generators_by_max_index,
    last_generator,
    make_ideal,
    reconstruct_generators,
    t_set,
)
from .monomial import Exponents, monomials_of_degree, sort_descending, total_degree


@dataclass(frozen=True)
class ArlVerdict:
    is_arl: bool
    witness: tuple[Exponents, Exponents] | None = None  # (M, N): M > N, N in G, M not in I

    def __bool__(self) -> bool:
        return self.is_arl


@dataclass(frozen=True)
class CriterionWitness:
    """alpha > beta in I_i but |alpha| + f_{i+1}(alpha) > |beta| + f_{i+1}(beta)."""

    i: int
    alpha: Exponents
    beta: Exponents
    alpha_value: int | float
    beta_value: int | float


@dataclass(frozen=True)
class ClosedFormWitness:
    """The generators differ from the closed form rebuilt from the f-values.

    ``monomial`` is a minimal generator missing from the rebuilt set when
    ``is_generator`` is true, otherwise a rebuilt monomial that is not a
    minimal generator.
    """

    monomial: Exponents
    is_generator: bool = True


@dataclass(frozen=True)
class CriterionReport:
    is_arl: bool
    witness: CriterionWitness | ClosedFormWitness | None = None

    def __bool__(self) -> bool:
        return self.is_arl


def check_arl_definition(ideal: MonomialIdeal) -> ArlVerdict:
    """Scan every generator N and every same-degree monomial M > N.

    Generators and candidates are both visited in descending order, so the
    reported witness is deterministic.
    """
    by_degree: dict[int, list[Exponents]] = {}
    for gen in ideal.generators:
        d = total_degree(gen)
        if d not in by_degree:
            by_degree[d] = sort_descending(monomials_of_degree(ideal.n, d))
        for m in by_degree[d]:
            if m == gen:
                break
            if not contains(ideal, m):
                return ArlVerdict(False, (m, gen))
    return ArlVerdict(True)


def _index_sets_or_hypothesis_error(ideal: MonomialIdeal) -> list[list[Exponents]]:
    try:
        return enumerate_index_sets(ideal)
    except NoLastGeneratorError as exc:
        raise HypothesisError(str(exc)) from exc


def check_arl_criterion(ideal: MonomialIdeal) -> CriterionReport:
    """ARL test through the f-values; needs a strongly stable ideal with x_{mu-1}^t in it.

    Along each index set (sorted descending) the quantity |alpha| + f_{i+1}(alpha)
    has to be nondecreasing.  On its own that is not enough: a generator such as
    x1*x3 in (x1^2, x1*x2, x1*x3, x2^5) sits outside every index set and is never
    compared.  So the generators must also be exactly the closed form rebuilt
    from the f-values, which every ARL ideal satisfies.
    """
    sets = _index_sets_or_hypothesis_error(ideal)
    for i, index_set in enumerate(sets, start=1):
        values = [total_degree(a) + f_eval(ideal, i + 1, a) for a in index_set]
        suffix_min = [INF] * (len(values) + 1)
        for k in range(len(values) - 1, -1, -1):
            suffix_min[k] = min(values[k], suffix_min[k + 1])
        for k, v in enumerate(values):
            if suffix_min[k + 1] < v:
                j = next(j for j in range(k + 1, len(values)) if values[j] < v)
                return CriterionReport(
                    False, CriterionWitness(i, index_set[k], index_set[j], v, values[j])
                )
    rebuilt = reconstruct_generators(ideal).generators
    stray = [g for g in ideal.generators if g not in rebuilt]
    if stray:
        return CriterionReport(False, ClosedFormWitness(stray[0], True))
    extra = [g for g in rebuilt if g not in ideal.generators]
    if extra:
        return CriterionReport(False, ClosedFormWitness(extra[0], False))
    return CriterionReport(True)


@dataclass(frozen=True)
class CorollaryReport:
    holds: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.holds


def corollary_inequalities_hold(ideal: MonomialIdeal) -> CorollaryReport:
    """|alpha| + f_i(alpha) <= f_i(0) <= |beta| + f_{i+1}(beta) for alpha in I_{i-1}, beta in I_i.

    Also checks that generator degrees weakly grow with the max index.
    Hypothesis: ARL with generators in the closed form rebuilt from f-values.
    """
    if ideal.is_zero:
        return CorollaryReport(True)
    if not check_arl_definition(ideal):
        raise HypothesisError("ideal is not almost reverse lexicographic")
    if reconstruct_generators(ideal) != ideal:
        raise HypothesisError("generators are not given by the closed form")
    sets = enumerate_index_sets(ideal)
    for i in range(1, len(sets) + 1):
        lower = [()] if i == 1 else sets[i - 2]
        f_zero = f_eval(ideal, i, (0,) * (i - 1))
        for alpha in lower:
            v = total_degree(alpha) + f_eval(ideal, i, alpha)
            if v > f_zero:
                return CorollaryReport(
                    False, {"i": i, "side": "lower", "tuple": alpha, "value": v, "f_zero": f_zero}
                )
        for beta in sets[i - 1]:
            v = total_degree(beta) + f_eval(ideal, i + 1, beta)
            if f_zero > v:
                return CorollaryReport(
                    False, {"i": i, "side": "upper", "tuple": beta, "value": v, "f_zero": f_zero}
                )
    groups = generators_by_max_index(ideal)
    keys = sorted(groups)
    for a, b in zip(keys, keys[1:]):
        hi = max(groups[a], key=total_degree)
        lo = min(groups[b], key=total_degree)
        if total_degree(hi) > total_degree(lo):
            return CorollaryReport(False, {"side": "degrees", "N": hi, "M": lo})
    return CorollaryReport(True)


@dataclass(frozen=True)
class AugmentationPlan:
    """New generators x^A * x_n^g(A) to add to an ARL ideal.

    ``base`` may already carry generators involving x_n from earlier steps;
    those count as previously chosen tuples.  The generators not involving
    x_n must form an ARL ideal whose last generator is a power of x_{n-1}.
    """

    base: MonomialIdeal
    chosen: tuple[Exponents, ...]
    g: Mapping[Exponents, int] = field(default_factory=dict)


def _split_base(base: MonomialIdeal) -> tuple[MonomialIdeal, dict[Exponents, int]]:
    n = base.n
    core, existing = [], {}
    for gen in base.generators:
        if gen[-1] > 0:
            existing[gen[:-1]] = gen[-1]
        else:
            core.append(gen)
    return MonomialIdeal(n, tuple(core)), existing


def validate_plan(plan: AugmentationPlan) -> tuple[MonomialIdeal, list[Exponents], dict]:
    """Return (core, combined tuples, combined g) or raise InvalidPlanError."""
    base = plan.base
    n = base.n
    if n < 2:
        raise InvalidPlanError("augmentation needs at least two variables", "ambient")
    core, existing = _split_base(base)
    try:
        last = last_generator(core)
    except NoLastGeneratorError as exc:
        raise InvalidPlanError(str(exc), "base-last-generator") from exc
    omega = last.monomial
    t = omega[n - 2]
    if t == 0 or sum(omega) != t:
        raise InvalidPlanError(
            f"last generator {omega} of the base is not a power of x_{n - 1}", "base-last-generator"
        )
    if not check_arl_definition(base):
        raise InvalidPlanError("base ideal is not almost reverse lexicographic", "base-arl")
    pool = t_set(core)
    pool_set = set(pool)
    g = dict(existing)
    for a in plan.chosen:
        a = tuple(a)
        if len(a) != n - 1:
            raise InvalidPlanError(f"tuple {a} does not have length {n - 1}", "chosen-in-T")
        if a in existing:
            raise InvalidPlanError(f"tuple {a} was already used by the base", "chosen-in-T")
        if a not in pool_set:
            raise InvalidPlanError(f"tuple {a} is not in the augmentation pool", "chosen-in-T")
        if a not in plan.g:
            raise InvalidPlanError(f"no exponent given for {a}", "g-defined")
        g[a] = int(plan.g[a])
    for a, v in plan.g.items():
        if tuple(a) in existing and existing[tuple(a)] != v:
            raise InvalidPlanError(f"exponent for {a} disagrees with the base", "g-consistent")
    combined = sort_descending(g)
    if combined != pool[: len(combined)]:
        raise InvalidPlanError("chosen tuples are not the largest elements of the pool", "largest")
    previous = t
    for a in combined:
        if g[a] < 1:
            raise InvalidPlanError(f"exponent for {a} is not positive", "g-positive")
        value = total_degree(a) + g[a]
        if value < previous:
            raise InvalidPlanError(
                f"|A| + g(A) drops to {value} at {a} (needs >= {previous})", "g-monotone"
            )
        previous = value
    return core, combined, g


def augment(plan: AugmentationPlan) -> MonomialIdeal:
    """Add the planned generators; the result is again ARL with exactly that union as G."""
    validate_plan(plan)
    new = [tuple(a) + (int(plan.g[tuple(a)]),) for a in plan.chosen]
    union = set(plan.base.generators) | set(new)
    result = MonomialIdeal(plan.base.n, tuple(union))
    if make_ideal(plan.base.n, union) != result:
        raise InvariantViolation("augmented generating set is not minimal")
    return result


def is_arl(ideal: MonomialIdeal) -> bool:
    return check_arl_definition(ideal).is_arl


__all__ = [
    "ArlVerdict",
    "AugmentationPlan",
    "ClosedFormWitness",
    "CorollaryReport",
    "CriterionReport",
    "CriterionWitness",
    "augment",
    "check_arl_criterion",
    "check_arl_definition",
    "corollary_inequalities_hold",
    "is_arl",
    "validate_plan",
]
