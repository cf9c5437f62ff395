"""Integer sequences h_0, h_1, ... with a finite description, and the calculus
of derived sequences, first weak descents r_i, the depth D and the
unimodal-at-each-tail predicate.

Every sequence is a prefix followed by a tail rule, so all of these are
decided exactly rather than by scanning up to a horizon.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import InvariantViolation, SequenceError
from .froberg import (
    FiniteSupport,
    FroebergSpec,
    Plateau,
    classify_tail,
    derived_spec,
    froberg_values,
    normalize,
)
from .ideal import INF


@dataclass(frozen=True)
class EventuallyZero:
    kind = "zero"


@dataclass(frozen=True)
class EventuallyConstant:
    value: int
    kind = "constant"


@dataclass(frozen=True)
class SeriesBacked:
    spec: FroebergSpec
    kind = "froberg"


Tail = EventuallyZero | EventuallyConstant | SeriesBacked


@dataclass(frozen=True)
class HilbertSeq:
    """h_0..h_{L-1} from ``prefix``, then whatever ``tail`` prescribes.

    For a series-backed tail the prefix is informational only (it is filled
    with h_0, h_1) and every value comes from the Fröberg spec.  A constant
    tail larger than the last prefix entry is absorbed into the prefix so
    that the stored form always ends in a weak descent.
    """

    prefix: tuple[int, ...]
    tail: Tail = EventuallyZero()

    def __post_init__(self):
        tail = self.tail
        if isinstance(tail, SeriesBacked):
            object.__setattr__(self, "prefix", tuple(froberg_values(tail.spec, 1)))
            return
        prefix = tuple(int(v) for v in self.prefix)
        if not prefix:
            raise SequenceError("a sequence needs at least h_0")
        if prefix[0] != 1:
            raise SequenceError(f"h_0 must be 1, got {prefix[0]}")
        if any(v < 0 for v in prefix):
            raise SequenceError(f"negative entry in {prefix}")
        if isinstance(tail, EventuallyConstant):
            if tail.value < 0:
                raise SequenceError(f"negative tail value {tail.value}")
            if tail.value > prefix[-1]:
                prefix = prefix + (tail.value,)
        elif not isinstance(tail, EventuallyZero):
            raise SequenceError(f"unknown tail rule {tail!r}")
        object.__setattr__(self, "prefix", prefix)

    @classmethod
    def of(cls, values: Iterable[int], tail: Tail | None = None) -> HilbertSeq:
        return cls(tuple(values), tail if tail is not None else EventuallyZero())

    @classmethod
    def froberg(cls, spec: FroebergSpec) -> HilbertSeq:
        return cls((1,), SeriesBacked(normalize(spec)))

    @property
    def is_series(self) -> bool:
        return isinstance(self.tail, SeriesBacked)

    def value_at(self, d: int) -> int:
        if d < 0:
            raise ValueError("degree must be nonnegative")
        if isinstance(self.tail, SeriesBacked):
            return froberg_values(self.tail.spec, d)[d]
        if d < len(self.prefix):
            return self.prefix[d]
        return self.tail.value if isinstance(self.tail, EventuallyConstant) else 0

    def values(self, up_to: int) -> list[int]:
        if isinstance(self.tail, SeriesBacked):
            return froberg_values(self.tail.spec, up_to)
        return [self.value_at(d) for d in range(up_to + 1)]

    def to_json(self) -> dict:
        tail = self.tail
        if isinstance(tail, SeriesBacked):
            body = {"kind": "froberg", **tail.spec.to_json()}
        elif isinstance(tail, EventuallyConstant):
            body = {"kind": "constant", "value": tail.value}
        else:
            body = {"kind": "zero"}
        return {"prefix": list(self.prefix), "tail": body}

    @classmethod
    def from_json(cls, data: dict) -> HilbertSeq:
        tail = data.get("tail") or {"kind": "zero"}
        kind = tail.get("kind")
        if kind == "zero":
            rule = EventuallyZero()
        elif kind == "constant":
            rule = EventuallyConstant(int(tail["value"]))
        elif kind == "froberg":
            rule = SeriesBacked(FroebergSpec(int(tail["n"]), tuple(tail.get("degrees", ()))))
        else:
            raise SequenceError(f"unknown tail kind {kind!r}")
        return cls(tuple(data.get("prefix", (1,))), rule)


def parse_tail(text: str | None) -> Tail:
    """'zero' or 'constant:<c>'."""
    if text is None or text.strip() == "zero":
        return EventuallyZero()
    head, _, rest = text.strip().partition(":")
    if head == "constant" and rest:
        try:
            return EventuallyConstant(int(rest))
        except ValueError:
            pass
    raise SequenceError(f"tail must be 'zero' or 'constant:<c>', got {text!r}")


def parse_sequence(csv: str, tail: str | None = None) -> HilbertSeq:
    try:
        values = tuple(int(v) for v in csv.replace(" ", "").split(",") if v)
    except ValueError as exc:
        raise SequenceError(f"cannot read sequence {csv!r}") from exc
    return HilbertSeq(values, parse_tail(tail))


def finite_form(h: HilbertSeq) -> tuple[list[int], int] | None:
    """(prefix, tail value) with h_d = tail value for d >= len(prefix).

    None when h grows forever, which only happens for series-backed input.
    The returned prefix always ends at or after the first weak descent.
    """
    if isinstance(h.tail, EventuallyZero):
        return list(h.prefix), 0
    if isinstance(h.tail, EventuallyConstant):
        return list(h.prefix), h.tail.value
    shape = classify_tail(h.tail.spec)
    if isinstance(shape, FiniteSupport):
        return froberg_values(h.tail.spec, shape.t)[: max(shape.t, 1)], 0
    if isinstance(shape, Plateau):
        return froberg_values(h.tail.spec, shape.t), shape.c
    return None


def derived(h: HilbertSeq) -> HilbertSeq:
    """max(0, h_d - h_{d-1}) for d >= 1, with the leading entry reset to 1."""
    if isinstance(h.tail, SeriesBacked):
        spec = h.tail.spec
        if spec.n == 0:
            return HilbertSeq((1,))
        return HilbertSeq((1,), SeriesBacked(derived_spec(spec)))
    prefix, last = finite_form(h)
    diffs = [max(0, prefix[d] - prefix[d - 1]) for d in range(1, len(prefix))]
    diffs.append(max(0, last - prefix[-1]))
    return HilbertSeq((1, *diffs))


def first_descent(h: HilbertSeq) -> int | float:
    """r = min {d >= 1 : h_d <= h_{d-1}}, or INF."""
    form = finite_form(h)
    if form is None:
        return INF
    prefix, last = form
    for d in range(1, len(prefix)):
        if prefix[d] <= prefix[d - 1]:
            return d
    return len(prefix)  # the tail value never exceeds the stored last entry


@dataclass(frozen=True)
class TailAnalysis:
    r: tuple[int | float, ...]
    depth: int
    horizon: int


def default_horizon(h: HilbertSeq) -> int:
    return max(2 * len(h.prefix), 32)


def derived_chain(h: HilbertSeq) -> list[HilbertSeq]:
    """[h^(0), ..., h^(K-1)] with K = max(1, h_1)."""
    chain = [h]
    for _ in range(max(1, h.value_at(1)) - 1):
        chain.append(derived(chain[-1]))
    return chain


def tail_analysis(h: HilbertSeq, horizon: int | None = None) -> TailAnalysis:
    """r_i for 0 <= i < max(1, h_1) and the depth D = min {i : r_i finite}.

    The values are exact; ``horizon`` is only recorded.
    """
    if horizon is None:
        horizon = default_horizon(h)
    rs = tuple(first_descent(s) for s in derived_chain(h))
    depth = next((i for i, r in enumerate(rs) if r != INF), None)
    if depth is None:
        raise InvariantViolation(f"no finite r_i for {h}")
    if depth > h.value_at(1):
        raise InvariantViolation(f"depth {depth} exceeds h_1 for {h}")
    return TailAnalysis(rs, depth, horizon)


@dataclass(frozen=True)
class UnimodalityVerdict:
    holds: bool
    witness: tuple[int, int] | None = None  # (i, d) with h^(i)_d > h^(i)_{d-1}, d > r_i

    def __bool__(self) -> bool:
        return self.holds


def is_unimodal_at_each_tail(h: HilbertSeq, horizon: int | None = None) -> UnimodalityVerdict:
    """Every h^(i) with D <= i < max(1, h_1) is nonincreasing from r_i on."""
    chain = derived_chain(h)
    analysis = tail_analysis(h, horizon)
    for i in range(analysis.depth, len(chain)):
        r = analysis.r[i]
        if r == INF:
            continue
        prefix, _ = finite_form(chain[i])
        for d in range(r + 1, len(prefix)):
            if prefix[d] > prefix[d - 1]:
                return UnimodalityVerdict(False, (i, d))
    return UnimodalityVerdict(True)


__all__ = [
    "EventuallyConstant",
    "EventuallyZero",
    "HilbertSeq",
    "SeriesBacked",
    "TailAnalysis",
    "UnimodalityVerdict",
    "default_horizon",
    "derived",
    "derived_chain",
    "finite_form",
    "first_descent",
    "is_unimodal_at_each_tail",
    "parse_sequence",
    "parse_tail",
    "tail_analysis",
]
