"""Fröberg sequences |n; d_1, ..., d_m| and exact truncated power series.

|n; d_1..d_m| is the coefficient sequence of prod(1 - z^{d_i}) / (1 - z)^n
with everything from the first nonpositive coefficient onward set to 0.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .errors import ArlError, InvariantViolation


@dataclass(frozen=True)
class FroebergSpec:
    n: int
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("variable count must be nonnegative")
        degrees = tuple(sorted(int(d) for d in self.degrees))
        if any(d < 1 for d in degrees):
            raise ValueError(f"degrees must be positive, got {degrees}")
        object.__setattr__(self, "degrees", degrees)

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def is_degenerate(self) -> bool:
        """n = 0: the sequence is (1, 0, 0, ...) whatever the degrees."""
        return self.n == 0

    def __str__(self) -> str:
        body = ",".join(map(str, self.degrees)) if self.degrees else "∅"
        return f"|{self.n}; {body}|"

    def to_json(self) -> dict:
        return {"n": self.n, "degrees": list(self.degrees)}


class TruncatedSeries:
    """Integer power series known exactly in degrees 0..horizon."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int]):
        self.coefficients = tuple(int(c) for c in coefficients)
        if not self.coefficients:
            raise ValueError("a truncated series needs at least one coefficient")

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[int], horizon: int) -> TruncatedSeries:
        out = list(coeffs[: horizon + 1])
        out.extend([0] * (horizon + 1 - len(out)))
        return cls(out)

    @property
    def horizon(self) -> int:
        return len(self.coefficients) - 1

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coefficients)})"

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        h = min(self.horizon, other.horizon)
        a, b = self.coefficients, other.coefficients
        out = [0] * (h + 1)
        for i in range(h + 1):
            if a[i]:
                for j in range(h + 1 - i):
                    out[i + j] += a[i] * b[j]
        return TruncatedSeries(out)

    def times_one_minus_z_power(self, d: int) -> TruncatedSeries:
        """Multiply by (1 - z^d)."""
        c = self.coefficients
        return TruncatedSeries(c[i] - (c[i - d] if i >= d else 0) for i in range(len(c)))

    def divide_by_one_minus_z(self, times: int = 1) -> TruncatedSeries:
        """Divide by (1 - z)^times through repeated prefix sums."""
        c = list(self.coefficients)
        for _ in range(times):
            total = 0
            for i, v in enumerate(c):
                total += v
                c[i] = total
        return TruncatedSeries(c)

    def truncate_positive(self) -> TruncatedSeries:
        """Zero out everything from the first coefficient <= 0 onward."""
        out = []
        for v in self.coefficients:
            if v <= 0:
                break
            out.append(v)
        out.extend([0] * (len(self.coefficients) - len(out)))
        return TruncatedSeries(out)


def truncate_positive(p: TruncatedSeries) -> TruncatedSeries:
    return p.truncate_positive()


def raw_series(spec: FroebergSpec, horizon: int) -> TruncatedSeries:
    """Untruncated prod(1 - z^{d_i}) / (1 - z)^n up to ``horizon``."""
    s = TruncatedSeries.from_polynomial([1], horizon)
    for d in spec.degrees:
        s = s.times_one_minus_z_power(d)
    return s.divide_by_one_minus_z(spec.n)


def safe_horizon(spec: FroebergSpec) -> int:
    # for m >= n the raw series is a polynomial of degree sum(d) - n
    return max(0, sum(spec.degrees) - spec.n + 2)


@lru_cache(maxsize=4096)
def _values(spec: FroebergSpec, up_to: int) -> tuple[int, ...]:
    horizon = max(up_to, safe_horizon(spec))
    return raw_series(spec, horizon).truncate_positive().coefficients[: up_to + 1]


def froberg_values(spec: FroebergSpec, up_to: int) -> list[int]:
    """h_0..h_{up_to} of |n; d_1..d_m|."""
    return list(_values(spec, up_to))


def normalize(spec: FroebergSpec) -> FroebergSpec:
    """Cancel degree-1 entries against the denominator while n > 0."""
    ones = spec.degrees.count(1)
    cancel = min(ones, spec.n)
    rest = [d for d in spec.degrees if d != 1] + [1] * (ones - cancel)
    return FroebergSpec(spec.n - cancel, tuple(rest))


def derived_spec(spec: FroebergSpec) -> FroebergSpec:
    """|n - 1; d_1..d_m|: the spec whose values are the derived sequence."""
    if spec.n < 1:
        raise ArlError(f"cannot derive {spec}: no variable left")
    return FroebergSpec(spec.n - 1, spec.degrees)


@dataclass(frozen=True)
class FiniteSupport:
    """h_d = 0 exactly from degree t on."""

    t: int


@dataclass(frozen=True)
class Plateau:
    """h is strictly increasing up to degree t and equal to c from there on."""

    t: int
    c: int


@dataclass(frozen=True)
class Unbounded:
    """h strictly increases forever, eventually like a polynomial of this degree."""

    poly_degree: int


TailClass = FiniteSupport | Plateau | Unbounded


@lru_cache(maxsize=4096)
def classify_tail(spec: FroebergSpec) -> TailClass:
    """Decide the long-run shape of |n; D| exactly.

    After cancelling degree-1 entries: m >= n gives a polynomial (finite
    support); m = n - 1 gives prefix sums of a positive polynomial, hence a
    plateau at prod(d_i); m < n - 1 gives strict growth forever.  Each answer
    is checked against computed coefficients before it is returned.
    """
    s = normalize(spec)
    n, m = s.n, s.m
    if m >= n:
        horizon = safe_horizon(s)
        values = froberg_values(s, horizon)
        if 0 not in values:
            raise InvariantViolation(f"{spec}: no truncation point within degree {horizon}")
        t = values.index(0)
        if any(values[t:]):
            raise InvariantViolation(f"{spec}: nonzero value after truncation")
        return FiniteSupport(t)
    if m == n - 1:
        t = sum(d - 1 for d in s.degrees)
        c = prod(s.degrees)
        values = froberg_values(s, t + 2)
        if values[t] != c or values[t + 1] != c or any(
            values[k] >= values[k + 1] for k in range(t)
        ):
            raise InvariantViolation(f"{spec}: expected plateau {c} from degree {t}")
        return Plateau(t, c)
    check = max(8, safe_horizon(s))
    values = froberg_values(s, check)
    if any(values[k] >= values[k + 1] for k in range(check)):
        raise InvariantViolation(f"{spec}: expected strict growth")
    return Unbounded(n - m - 1)


def froberg_sequence(spec: FroebergSpec):
    """The series-backed HilbertSeq of ``spec``."""
    from .sequences import HilbertSeq

    return HilbertSeq.froberg(spec)


def froberg_to_ideal(spec: FroebergSpec, horizon: int | None = None):
    """An ARL ideal in max(n, 1) variables whose Hilbert function is |n; D|.

    The sequence lives in h_1 <= n variables; when h_1 < n the remaining
    leading variables x_1..x_{n-h_1} are added as generators and the
    synthesized ideal is moved onto the last h_1 variables.
    """
    from .hilbert import hilbert_values
    from .ideal import make_ideal
    from .monomial import variable
    from .sequences import HilbertSeq, is_unimodal_at_each_tail
    from .synthesis import synthesize

    ambient = spec.n if spec.n >= 1 else 1
    h = HilbertSeq.froberg(normalize(spec))
    verdict = is_unimodal_at_each_tail(h)
    if not verdict:
        raise InvariantViolation(f"{spec} is not unimodal at each tail: {verdict.witness}")
    inner, trace = synthesize(h, horizon)
    pad = ambient - inner.n
    if pad < 0:
        raise InvariantViolation(f"{spec}: h_1 exceeds the variable count")
    gens = [variable(ambient, i) for i in range(1, pad + 1)]
    gens += [(0,) * pad + g for g in inner.generators]
    ideal = make_ideal(ambient, gens)
    top = horizon if horizon is not None else max(safe_horizon(spec), 16)
    if hilbert_values(ideal, top) != froberg_values(spec, top):
        raise InvariantViolation(f"{spec}: realized Hilbert function differs")
    return ideal, trace
