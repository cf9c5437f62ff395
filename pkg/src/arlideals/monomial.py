"""Exponent-vector monomials and the degree reverse lexicographic order.

A monomial x_1^{a_1} ... x_n^{a_n} is a plain tuple ``(a_1, ..., a_n)`` of
nonnegative ints.  The same comparison is used for index tuples of any
fixed length.
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence

from .errors import AmbientMismatchError, MonomialParseError

Exponents = tuple[int, ...]


def as_exponents(values: Iterable[int], n: int | None = None) -> Exponents:
    """Validate and freeze an exponent vector, optionally checking its length."""
    m = tuple(int(v) for v in values)
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    if n is not None and len(m) != n:
        raise AmbientMismatchError(f"expected {n} exponents, got {len(m)} in {m}")
    return m


def total_degree(m: Sequence[int]) -> int:
    return sum(m)


def max_index(m: Sequence[int]) -> int | None:
    """1-based index of the last variable with a positive exponent."""
    for j in range(len(m) - 1, -1, -1):
        if m[j] > 0:
            return j + 1
    return None


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise AmbientMismatchError(f"length mismatch: {tuple(a)} vs {tuple(b)}")


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    _check_lengths(a, b)
    return all(x <= y for x, y in zip(a, b))


def degrevlex_key(m: Sequence[int]) -> tuple:
    """Sort key: ``key(a) > key(b)`` iff ``a > b`` in degrevlex."""
    return (sum(m), tuple(-e for e in reversed(m)))


def degrevlex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return 1, 0 or -1 as ``a`` is greater than, equal to or less than ``b``.

    Higher total degree wins.  At equal degree the vector with the smaller
    exponent at the last differing position is the greater one.
    """
    _check_lengths(a, b)
    ka, kb = degrevlex_key(a), degrevlex_key(b)
    return (ka > kb) - (ka < kb)


def sort_descending(ms: Iterable[Sequence[int]]) -> list[Exponents]:
    return sorted((tuple(m) for m in ms), key=degrevlex_key, reverse=True)


def generator_order(ms: Iterable[Sequence[int]]) -> list[Exponents]:
    """Canonical listing of a generating set: by degree, then degrevlex-descending.

    This is the order in which generating sets are written out, e.g.
    x1^3, x1^2*x2, x1*x2^3, x2^5.
    """
    return sorted((tuple(m) for m in ms), key=lambda m: (sum(m), tuple(reversed(m))))


def monomials_of_degree(n: int, d: int) -> Iterator[Exponents]:
    """All exponent vectors of length ``n`` summing to ``d`` (no particular order)."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def multiply(a: Sequence[int], b: Sequence[int]) -> Exponents:
    _check_lengths(a, b)
    return tuple(x + y for x, y in zip(a, b))


def unit(n: int) -> Exponents:
    return (0,) * n


def variable(n: int, i: int, power: int = 1) -> Exponents:
    """x_i^power in ``n`` variables (``i`` is 1-based)."""
    if not 1 <= i <= n:
        raise ValueError(f"variable index {i} out of range 1..{n}")
    m = [0] * n
    m[i - 1] = power
    return tuple(m)


# -- text syntax -------------------------------------------------------------

_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int | None = None) -> Exponents:
    """Parse ``[2,0,5]`` or ``x1^2*x3^5`` (``1`` is the unit monomial).

    The symbolic form needs ``n`` to know the ambient length.
    """
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise MonomialParseError(f"unterminated exponent list: {text!r}")
        body = s[1:-1].strip()
        try:
            values = [int(tok) for tok in body.split(",")] if body else []
        except ValueError as exc:
            raise MonomialParseError(f"bad exponent list: {text!r}") from exc
        if not values:
            raise MonomialParseError("empty exponent list")
        try:
            return as_exponents(values, n)
        except AmbientMismatchError:
            raise
        except ValueError as exc:
            raise MonomialParseError(str(exc)) from exc
    if n is None:
        raise MonomialParseError(f"symbolic monomial {text!r} needs the variable count")
    exps = [0] * n
    if s == "1":
        return tuple(exps)
    for factor in s.split("*"):
        match = _FACTOR.match(factor.strip())
        if not match:
            raise MonomialParseError(f"bad factor {factor!r} in {text!r}")
        idx = int(match.group(1))
        power = int(match.group(2)) if match.group(2) is not None else 1
        if not 1 <= idx <= n:
            raise MonomialParseError(f"variable x{idx} outside x1..x{n}")
        exps[idx - 1] += power
    return tuple(exps)


def format_monomial(m: Sequence[int]) -> str:
    """Symbolic rendering, e.g. ``(2, 0, 5) -> 'x1^2*x3^5'``."""
    parts = []
    for j, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{j}")
        elif e > 1:
            parts.append(f"x{j}^{e}")
    return "*".join(parts) if parts else "1"
