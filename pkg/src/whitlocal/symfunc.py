"""Partitions and symmetric function values.

Schur polynomials are computed by the Jacobi-Trudi determinant in complete
homogeneous symmetric polynomials, which works at arbitrary LaurentPoly
argument values (rationals, variables, inverted variables).  A second,
independent route through the bialternant quotient of alternants is kept
for cross-checking; it requires distinct variable names because it divides
by the Vandermonde determinant exactly.

A Schur value at fewer variables than the partition has parts is zero; the
library returns that zero rather than raising, matching the support
convention used by the spherical Whittaker values built on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exactalg import InexactDivision, LaurentPoly
from .report import SuiteReport, run_check
from . import exactalg


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of nonnegative integers, trailing zeros dropped."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts {parts} are not weakly decreasing")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts {parts} contain a negative entry")
        object.__setattr__(self, "parts", parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """The i-th part (1-based), zero beyond the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < self.length:
            raise ValueError(f"cannot pad {self.parts} to shorter length {n}")
        return self.parts + (0,) * (n - self.length)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def to_json_obj(self) -> list[int]:
        return list(self.parts)

    @classmethod
    def from_json_obj(cls, obj) -> "Partition":
        return cls(obj)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_of(weight: int, max_length: int) -> Iterator[Partition]:
    """All partitions of the given weight into at most max_length parts.

    Emitted in lexicographically descending order: (k) first, then (k-1,1), ...
    """
    if weight < 0:
        return
    if weight == 0:
        yield Partition(())
        return
    if max_length <= 0:
        return

    def rec(remaining: int, cap: int, slots: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(prefix)
            return
        if slots == 0:
            return
        top = min(cap, remaining)
        for first in range(top, 0, -1):
            # the rest must fit under this part in the remaining slots
            if first * slots < remaining:
                continue
            prefix.append(first)
            yield from rec(remaining - first, first, slots - 1, prefix)
            prefix.pop()

    yield from rec(weight, weight, max_length, [])


def partitions_up_to(max_weight: int, max_length: int) -> Iterator[Partition]:
    """All partitions of weight 0..max_weight into at most max_length parts."""
    for w in range(max_weight + 1):
        yield from partitions_of(w, max_length)


def _coerce_values(xs: Sequence) -> list[LaurentPoly]:
    return [LaurentPoly.coerce(x) for x in xs]


def homogeneous_list(kmax: int, xs: Sequence) -> list[LaurentPoly]:
    """[h_0, h_1, ..., h_kmax] at the given argument values."""
    values = _coerce_values(xs)
    row = [LaurentPoly.one()] + [LaurentPoly.zero()] * kmax
    for x in values:
        for d in range(1, kmax + 1):
            row[d] = row[d] + x * row[d - 1]
    return row


def complete_homogeneous(k: int, xs: Sequence) -> LaurentPoly:
    """The complete homogeneous symmetric polynomial h_k at given values."""
    if k < 0:
        return LaurentPoly.zero()
    return homogeneous_list(k, xs)[k]


def _det(matrix: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by cofactor expansion with memoized column subsets.

    Matrices here are at most partition-length sized, so this stays small.
    """
    n = len(matrix)
    if n == 0:
        return LaurentPoly.one()
    cache: dict[tuple[int, ...], LaurentPoly] = {}

    # the row being expanded is always n - len(cols), so cols alone keys the cache
    def minor(row: int, cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return LaurentPoly.one()
        got = cache.get(cols)
        if got is not None:
            return got
        total = LaurentPoly.zero()
        sign = 1
        for idx, col in enumerate(cols):
            entry = matrix[row][col]
            if not entry.is_zero():
                rest = minor(row + 1, cols[:idx] + cols[idx + 1:])
                term = entry * rest
                total = total + (term if sign > 0 else -term)
            sign = -sign
        cache[cols] = total
        return total

    return minor(0, tuple(range(n)))


def schur(lam: Partition, xs: Sequence) -> LaurentPoly:
    """Schur polynomial value s_lam(xs) via the Jacobi-Trudi determinant.

    Returns zero when the partition has more parts than there are values.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    values = _coerce_values(xs)
    ell = lam.length
    if ell > len(values):
        return LaurentPoly.zero()
    if ell == 0:
        return LaurentPoly.one()
    kmax = lam.parts[0] + ell - 1
    h = homogeneous_list(kmax, values)

    def h_at(k: int) -> LaurentPoly:
        return h[k] if 0 <= k <= kmax else LaurentPoly.zero()

    matrix = [
        [h_at(lam.part(i + 1) - (i + 1) + (j + 1)) for j in range(ell)]
        for i in range(ell)
    ]
    return _det(matrix)


def _divide_by_difference(f: LaurentPoly, a: str, b: str) -> LaurentPoly:
    """Exact division of f by (a - b) for variables a, b.

    Synthetic division in the variable a; raises InexactDivision when the
    remainder (f with a replaced by b) is nonzero.
    """
    by_deg = f.coefficients_in(a)
    if not by_deg:
        return LaurentPoly.zero()
    degrees = sorted(by_deg)
    if degrees[0] < 0 or not all(isinstance(d, int) for d in degrees):
        raise InexactDivision(f"{a} occurs with negative or fractional exponent")
    kmax = degrees[-1]
    coeffs = [by_deg.get(k, LaurentPoly.zero()) for k in range(kmax + 1)]
    bvar = LaurentPoly.var(b)
    quot = [LaurentPoly.zero()] * kmax
    carry = LaurentPoly.zero()
    for k in range(kmax, 0, -1):
        carry = coeffs[k] + carry * bvar
        quot[k - 1] = carry
    remainder = coeffs[0] + carry * bvar
    if not remainder.is_zero():
        raise InexactDivision(f"division by ({a} - {b}) leaves remainder {remainder}")
    avar = LaurentPoly.var(a)
    total = LaurentPoly.zero()
    for k, c in enumerate(quot):
        if not c.is_zero():
            total = total + c * avar ** k
    return total


def schur_bialternant_oracle(lam: Partition, names: Sequence[str]) -> LaurentPoly:
    """Independent Schur value via the quotient of alternants.

    det(x_i^(lam_j + n - j)) divided exactly by the Vandermonde determinant
    prod_{i<j} (x_i - x_j).  Needs distinct variable names.
    """
    if not isinstance(lam, Partition):
        lam = Partition(lam)
    n = len(names)
    if len(set(names)) != n:
        raise ValueError("bialternant oracle needs distinct variable names")
    if lam.length > n:
        raise ValueError(
            f"partition {lam} has more parts than the {n} supplied variables"
        )
    exps = [lam.part(j + 1) + n - (j + 1) for j in range(n)]
    matrix = [
        [LaurentPoly.var(names[i], exps[j]) if exps[j] else LaurentPoly.one() for j in range(n)]
        for i in range(n)
    ]
    numerator = _det(matrix)
    for i in range(n):
        for j in range(i + 1, n):
            numerator = _divide_by_difference(numerator, names[i], names[j])
    return numerator


def cauchy_product_side(n: int, m: int, var: str,
                        a_prefix: str = "a", b_prefix: str = "b") -> exactalg.RationalFunction:
    """The closed product form 1 / prod_{i,j} (1 - a_i b_j t)."""
    t = LaurentPoly.var(var)
    den = LaurentPoly.one()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            den = den * (LaurentPoly.one() - LaurentPoly.var(f"{a_prefix}{i}") * LaurentPoly.var(f"{b_prefix}{j}") * t)
    return exactalg.RationalFunction(1, den)


def cauchy_schur_side(n: int, m: int, var: str, order: int,
                      a_prefix: str = "a", b_prefix: str = "b") -> exactalg.TruncatedSeries:
    """The Schur expansion sum_lam s_lam(a) s_lam(b) t^|lam| up to the order."""
    avals = [LaurentPoly.var(f"{a_prefix}{i}") for i in range(1, n + 1)]
    bvals = [LaurentPoly.var(f"{b_prefix}{j}") for j in range(1, m + 1)]
    coeffs = [LaurentPoly.zero() for _ in range(order + 1)]
    for w in range(order + 1):
        for lam in partitions_of(w, min(n, m)):
            coeffs[w] = coeffs[w] + schur(lam, avals) * schur(lam, bvals)
    return exactalg.TruncatedSeries(var, coeffs)


def cauchy_check(n: int, m: int, order: int) -> SuiteReport:
    """Machine-check the Cauchy identity at n and m variables up to an order."""
    if n < 1 or m < 1 or order < 0:
        raise ValueError("cauchy_check needs n, m >= 1 and order >= 0")
    report = SuiteReport("cauchy")

    def body() -> tuple[bool, str | None]:
        lhs = cauchy_schur_side(n, m, "X", order)
        rhs = exactalg.series_expand(cauchy_product_side(n, m, "X"), "X", order)
        for k in range(order + 1):
            if lhs.coeffs[k] != rhs.coeffs[k]:
                return False, (
                    f"X^{k}: schur side {lhs.coeffs[k].to_text()} != "
                    f"product side {rhs.coeffs[k].to_text()}"
                )
        return True, None

    report.add(
        run_check(
            f"n={n},m={m},order={order}",
            f"Cauchy identity at {n}x{m} variables through X^{order}",
            body,
        )
    )
    return report
