"""The spectral parameter transform and the matrix identities behind it.

For rank parameter n, the transform on a pair of complex parameters is

    s' = (1 + (n-1) w - s) / n,        w' = ((n+1) s + w - 1) / n.

It is an involution with unique fixed point (1/2, 1/2), and it satisfies
the two linear exponent identities

    n (s' - 1/2) = n (1/2 - s) + (n-1)(s + w - 1),
    s' + w' - 1  = s + w - 1,

which is exactly what makes the two normalized integral sides trade places.
All of this is verified here over exact polynomials in the symbols s, w,
never numerically.

The matrix side lives on (n+1) x (n+1) symbolic matrices: the order-two
Weyl element that swaps the last two coordinates conjugates the column of
unipotents above coordinate n into the column above coordinate n+1, and a
cusp-invariance step factors a scaled block diagonal through that element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exactalg import LaurentPoly
from .report import SuiteReport, run_check

S_VAR = "s"
W_VAR = "w"


def _coerce_param(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, str):
        return LaurentPoly.var(x)
    return LaurentPoly.const(Fraction(x))


@dataclass(frozen=True)
class ParamPair:
    """A pair of spectral parameters together with the rank parameter n."""

    s: LaurentPoly
    w: LaurentPoly
    n: int

    def __init__(self, s, w, n: int):
        if not isinstance(n, int) or n < 2:
            raise ValueError(f"the rank parameter must be an integer >= 2, got {n!r}")
        object.__setattr__(self, "s", _coerce_param(s))
        object.__setattr__(self, "w", _coerce_param(w))
        object.__setattr__(self, "n", n)

    @classmethod
    def symbolic(cls, n: int) -> "ParamPair":
        return cls(LaurentPoly.var(S_VAR), LaurentPoly.var(W_VAR), n)

    def __str__(self) -> str:
        return f"(s={self.s.to_text()}, w={self.w.to_text()}; n={self.n})"


def dual_params(pair: ParamPair) -> ParamPair:
    """Apply the parameter transform, exactly."""
    n = pair.n
    s, w = pair.s, pair.w
    one = LaurentPoly.one()
    s_new = (one + (n - 1) * w - s) / n
    w_new = ((n + 1) * s + w - one) / n
    return ParamPair(s_new, w_new, n)


def verify_involution_and_exponents(
    n: int, dual: Callable[[ParamPair], ParamPair] = dual_params
) -> SuiteReport:
    """Machine-check the transform for one rank parameter, fully symbolically.

    Checks the two exponent identities, the involution property, the fixed
    point at (1/2, 1/2), and for n = 2 the classical closed form.  The
    ``dual`` hook exists so tests can feed a perturbed transform and watch
    the checks fail.
    """
    report = SuiteReport("involution")
    pair = ParamPair.symbolic(n)
    image = dual(pair)
    s, w = pair.s, pair.w
    half = Fraction(1, 2)

    def check_exponent_first() -> tuple[bool, str | None]:
        lhs = n * (image.s - half)
        rhs = n * (half - s) + (n - 1) * (s + w - 1)
        return lhs == rhs, f"{lhs.to_text()} != {rhs.to_text()}"

    def check_exponent_second() -> tuple[bool, str | None]:
        lhs = image.s + image.w - 1
        rhs = s + w - 1
        return lhs == rhs, f"{lhs.to_text()} != {rhs.to_text()}"

    def check_involution() -> tuple[bool, str | None]:
        twice = dual(image)
        ok = twice.s == s and twice.w == w
        return ok, f"double image is {twice}"

    def check_fixed_point() -> tuple[bool, str | None]:
        fp = dual(ParamPair(half, half, n))
        ok = fp.s == LaurentPoly.const(half) and fp.w == LaurentPoly.const(half)
        return ok, f"image of (1/2, 1/2) is {fp}"

    report.add(run_check(
        f"n={n:02d}/exponent-balance",
        "first exponent identity n(s'-1/2) = n(1/2-s) + (n-1)(s+w-1)",
        check_exponent_first,
    ))
    report.add(run_check(
        f"n={n:02d}/exponent-sum",
        "second exponent identity s'+w'-1 = s+w-1",
        check_exponent_second,
    ))
    report.add(run_check(
        f"n={n:02d}/involution",
        "applying the transform twice is the identity",
        check_involution,
    ))
    report.add(run_check(
        f"n={n:02d}/fixed-point",
        "(1/2, 1/2) is fixed",
        check_fixed_point,
    ))
    if n == 2:
        def check_rank2_form() -> tuple[bool, str | None]:
            want_s = (1 + w - s) / 2
            want_w = (3 * s + w - 1) / 2
            ok = image.s == want_s and image.w == want_w
            return ok, f"got {image}"

        report.add(run_check(
            "n=02/rank2-closed-form",
            "n = 2 reproduces s' = (1+w-s)/2, w' = (3s+w-1)/2",
            check_rank2_form,
        ))
    return report


class SymbolicMatrix:
    """A square matrix of LaurentPoly entries with exact arithmetic."""

    __slots__ = ("size", "rows")

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(LaurentPoly.coerce(e) for e in row) for row in rows)
        size = len(rows)
        if any(len(row) != size for row in rows):
            raise ValueError("matrix must be square")
        self.size = size
        self.rows = rows

    @classmethod
    def identity(cls, size: int) -> "SymbolicMatrix":
        return cls([
            [LaurentPoly.one() if i == j else LaurentPoly.zero() for j in range(size)]
            for i in range(size)
        ])

    @classmethod
    def scalar(cls, size: int, value) -> "SymbolicMatrix":
        value = LaurentPoly.coerce(value)
        return cls([
            [value if i == j else LaurentPoly.zero() for j in range(size)]
            for i in range(size)
        ])

    @classmethod
    def block_diag(cls, *blocks) -> "SymbolicMatrix":
        mats = [b if isinstance(b, SymbolicMatrix) else SymbolicMatrix([[b]]) for b in blocks]
        size = sum(m.size for m in mats)
        rows = [[LaurentPoly.zero()] * size for _ in range(size)]
        offset = 0
        for m in mats:
            for i in range(m.size):
                for j in range(m.size):
                    rows[offset + i][offset + j] = m.rows[i][j]
            offset += m.size
        return cls(rows)

    def __mul__(self, other: "SymbolicMatrix") -> "SymbolicMatrix":
        if not isinstance(other, SymbolicMatrix):
            return NotImplemented
        if other.size != self.size:
            raise ValueError("matrix sizes differ")
        n = self.size
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = LaurentPoly.zero()
                for k in range(n):
                    a = self.rows[i][k]
                    if a.is_zero():
                        continue
                    b = other.rows[k][j]
                    if b.is_zero():
                        continue
                    acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return SymbolicMatrix(rows)

    def substitute(self, name: str, value) -> "SymbolicMatrix":
        return SymbolicMatrix([
            [e.substitute(name, value) for e in row] for row in self.rows
        ])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymbolicMatrix)
            and self.size == other.size
            and self.rows == other.rows
        )

    __hash__ = None

    def __str__(self) -> str:
        return "[" + "; ".join(
            ", ".join(e.to_text() for e in row) for row in self.rows
        ) + "]"


def swap_last_two(size: int) -> SymbolicMatrix:
    """The order-two Weyl element exchanging the last two coordinates."""
    if size < 2:
        raise ValueError("need size >= 2 to swap the last two coordinates")
    m = [[LaurentPoly.zero()] * size for _ in range(size)]
    for i in range(size - 2):
        m[i][i] = LaurentPoly.one()
    m[size - 2][size - 1] = LaurentPoly.one()
    m[size - 1][size - 2] = LaurentPoly.one()
    return SymbolicMatrix(m)


def column_unipotent(size: int, col: int, names: Sequence[str]) -> SymbolicMatrix:
    """Identity plus a column of symbols above the diagonal in one column.

    Entry (i, col) is names[i] for i = 1..len(names), 1-based.
    """
    m = SymbolicMatrix.identity(size)
    rows = [list(r) for r in m.rows]
    for i, name in enumerate(names):
        rows[i][col - 1] = LaurentPoly.var(name)
    return SymbolicMatrix(rows)


def weyl_conjugation_identity(n: int) -> SuiteReport:
    """Check that the swap element carries one unipotent column to the other.

    With u_mid the column of n-1 symbols above coordinate n and u_last the
    same column above coordinate n+1, conjugation by the swap element sends
    u_mid to u_last; the element squares to the identity.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    report = SuiteReport("weyl")
    size = n + 1
    names = [f"u{i}" for i in range(1, n)]
    w = swap_last_two(size)
    u_mid = column_unipotent(size, n, names)
    u_last = column_unipotent(size, n + 1, names)

    report.add(run_check(
        f"n={n:02d}/conjugation",
        "swap element conjugates the middle-column unipotent to the last column",
        lambda: (w * u_mid * w == u_last, f"{w * u_mid * w} != {u_last}"),
    ))
    report.add(run_check(
        f"n={n:02d}/square",
        "the swap element squares to the identity",
        lambda: (w * w == SymbolicMatrix.identity(size), f"{w * w}"),
    ))
    return report


def cusp_invariance_factorization(n: int) -> SuiteReport:
    """Check the factorization that moves a central scaling past the swap.

    With H a generic (n-1) x (n-1) symbolic block and u an invertible
    scalar, the claim is

        diag(u*H, u, 1) = (u * Id) * swap * diag(H, u^(-1), 1) * swap,

    checked entrywise, together with the two intermediate regroupings and
    the u = 1 specialization.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    report = SuiteReport("cusp")
    size = n + 1
    u = LaurentPoly.var("u")
    u_inv = LaurentPoly.var("u", -1)
    h_block = SymbolicMatrix([
        [LaurentPoly.var(f"h{i}_{j}") for j in range(1, n)] for i in range(1, n)
    ])
    scaled_h = SymbolicMatrix([[u * e for e in row] for row in h_block.rows])
    lhs = SymbolicMatrix.block_diag(scaled_h, u, 1)
    w = swap_last_two(size)
    central = SymbolicMatrix.scalar(size, u)
    inner = SymbolicMatrix.block_diag(h_block, u_inv, 1)
    rhs = central * w * inner * w

    report.add(run_check(
        f"n={n:02d}/regroup-scaling",
        "diag(u*H, u, 1) equals u * diag(H, 1, u^(-1))",
        lambda: (
            lhs == central * SymbolicMatrix.block_diag(h_block, 1, u_inv),
            f"{lhs} != {central * SymbolicMatrix.block_diag(h_block, 1, u_inv)}",
        ),
    ))
    report.add(run_check(
        f"n={n:02d}/swap-conjugation",
        "conjugation by the swap exchanges the last two diagonal entries",
        lambda: (
            SymbolicMatrix.block_diag(h_block, 1, u_inv) == w * inner * w,
            f"{w * inner * w}",
        ),
    ))
    report.add(run_check(
        f"n={n:02d}/full-factorization",
        "diag(u*H, u, 1) = (u*Id) * swap * diag(H, u^(-1), 1) * swap",
        lambda: (lhs == rhs, f"{lhs} != {rhs}"),
    ))

    def check_unit_specialization() -> tuple[bool, str | None]:
        one = LaurentPoly.one()
        lhs1 = lhs.substitute("u", one)
        rhs1 = rhs.substitute("u", one)
        plain = SymbolicMatrix.block_diag(h_block, 1, 1)
        ok = lhs1 == plain and rhs1 == plain
        return ok, f"u=1 gives {lhs1} and {rhs1}"

    report.add(run_check(
        f"n={n:02d}/unit-specialization",
        "both sides collapse to diag(H, 1, 1) at u = 1",
        check_unit_specialization,
    ))
    return report
