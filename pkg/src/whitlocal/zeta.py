"""Local zeta integrals on the torus lattice and the weight factors they
produce.

Unramified local zeta integrals reduce, by Iwasawa decomposition, to sums
over dominant cocharacter lattices.  Every lattice term is assembled here
from Whittaker values and modulus characters, and an exact runtime check
confirms that the half-power bookkeeping collapses each term to a product
of two Schur values:

    delta_(n+1)^(1/2)((mu,0)) * delta_n^(-1/2)(mu) = q^(-|mu|/2),

which the measure factor q^(|mu|/2) then cancels.  The resulting series
identity

    sum_mu s_mu(alpha) s_mu(beta) X^|mu| = 1 / prod_(i,j) (1 - alpha_i beta_j X)

is the Cauchy identity, so the unramified integral equals the local
L-factor and the unramified weight is exactly 1.

At a place dividing the twisting level, the level-m vector restricts the
lattice by mu_(n-1) >= m.  The weight there is computed two ways: directly,
with the character-orthogonality constant, and through the regrouped
enumeration used in published derivations, whose printed constant differs;
both are returned together with their exact ratio.

At a place dividing the auxiliary modulus only the structural shape is
computable: the basis index set, the vanishing verdict when the local
conductor exceeds the level, and the exact volume 1/[K : K_0(m)] at the
boundary, compared against the published approximation p^(-(n-1)m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exactalg import (
    LaurentPoly,
    RationalFunction,
    TruncatedSeries,
    qpow,
    series_equal,
    series_expand,
)
from .localrep import RankMismatch, UnramifiedRep, congruence_index, contragredient
from .report import SuiteReport, run_check
from .symfunc import Partition, partitions_of, schur
from .whittaker import TorusCocharacter, delta_half, spherical_value, twist_constants, twisted_value

PLACE_UNRAMIFIED = "unramified"
PLACE_DIVIDING_L = "dividing_l"
PLACE_DIVIDING_Q = "dividing_q"


class SymbolCollision(ValueError):
    """Two data sets share a variable name that must stay independent."""


@dataclass
class ZetaResult:
    """A truncated lattice-sum series with its closed form, when materialized."""

    series: TruncatedSeries
    closed_form: Optional[RationalFunction]
    lattice_points: int

    def closed_form_matches(self) -> bool:
        if self.closed_form is None:
            return True
        expanded = series_expand(self.closed_form, self.series.var, self.series.order)
        return series_equal(self.series, expanded)

    def to_json_obj(self) -> dict:
        out: dict = {
            "series": self.series.to_json_obj(),
            "latticePoints": self.lattice_points,
        }
        if self.closed_form is not None:
            out["closedForm"] = self.closed_form.to_json_obj()
        return out


@dataclass
class PaperComparison:
    """A computed constant next to its published counterpart."""

    paper_constant: LaurentPoly
    computed_constant: LaurentPoly
    ratio: RationalFunction

    def to_json_obj(self) -> dict:
        return {
            "paperConstant": self.paper_constant.to_text(),
            "computedConstant": self.computed_constant.to_text(),
            "ratio": self.ratio.to_json_obj(),
        }


@dataclass
class WeightResult:
    """The local weight attached to one place, with provenance of constants.

    value is the exact weight: the constant 1 at unramified places, a
    truncated series in Y at places dividing the twisting level, an exact
    rational at the structural boundary case, and None when only the index
    set is determined.
    """

    value: Union[LaurentPoly, TruncatedSeries, None]
    place_kind: str
    paper_comparison: Optional[PaperComparison] = None
    paper_value: Union[LaurentPoly, TruncatedSeries, None] = None
    index_set: Optional[tuple] = None
    vanishes: Optional[bool] = None
    lattice_points: Optional[int] = None

    def to_json_obj(self) -> dict:
        def encode(v):
            if v is None:
                return None
            if isinstance(v, TruncatedSeries):
                return v.to_json_obj()
            return v.to_text()

        out: dict = {"placeKind": self.place_kind, "value": encode(self.value)}
        if self.paper_comparison is not None:
            out["paperComparison"] = self.paper_comparison.to_json_obj()
        if self.paper_value is not None:
            out["paperValue"] = encode(self.paper_value)
        if self.index_set is not None:
            out["indexSet"] = [list(t) for t in self.index_set]
        if self.vanishes is not None:
            out["vanishes"] = self.vanishes
        if self.lattice_points is not None:
            out["latticePoints"] = self.lattice_points
        return out


def _check_symbols(rep_a: UnramifiedRep, rep_b: UnramifiedRep, var: str) -> None:
    va, vb = rep_a.variables(), rep_b.variables()
    shared = va & vb
    if shared:
        raise SymbolCollision(f"representations share symbols {sorted(shared)}")
    for bad in (var, "q"):
        if bad in va or bad in vb:
            raise SymbolCollision(
                f"{bad!r} is reserved and cannot be a Satake symbol here"
            )


def local_l_factor(rep_a: UnramifiedRep, rep_b: UnramifiedRep,
                   var: str = "X") -> RationalFunction:
    """The local Rankin-Selberg L-factor 1 / prod (1 - alpha_i beta_j var)."""
    _check_symbols(rep_a, rep_b, var)
    t = LaurentPoly.var(var)
    den = LaurentPoly.one()
    for a in rep_a.satake:
        for b in rep_b.satake:
            den = den * (LaurentPoly.one() - a * b * t)
    return RationalFunction(1, den)


def _l_factor_denominator_series(rep_a: UnramifiedRep, rep_b: UnramifiedRep,
                                 var: str, order: int) -> TruncatedSeries:
    """prod (1 - alpha_i beta_j var) multiplied out with truncation.

    Truncating at each step keeps the factor count manageable at larger
    ranks, where the fully expanded polynomial would be huge.
    """
    t = LaurentPoly.var(var)
    acc = TruncatedSeries.one(var, order)
    for a in rep_a.satake:
        for b in rep_b.satake:
            acc = acc * TruncatedSeries.from_poly(LaurentPoly.one() - a * b * t, var, order)
    return acc


def local_zeta_unramified(rep_a: UnramifiedRep, rep_b: UnramifiedRep,
                          var: str = "X", order: int = 6,
                          build_closed_form: bool = True) -> ZetaResult:
    """The unramified local zeta integral as a dominant-lattice sum.

    rep_a has rank one more than rep_b.  Each lattice term is built from
    the two spherical values, the inverse modulus of the smaller group, and
    the measure factor; the collapse of all residue-cardinality powers to a
    product of Schur values is asserted exactly, term by term.
    """
    n = rep_b.rank
    if rep_a.rank != n + 1:
        raise RankMismatch(
            f"expected ranks (n+1, n), got ({rep_a.rank}, {rep_b.rank})"
        )
    _check_symbols(rep_a, rep_b, var)
    if order < 0:
        raise ValueError("series order must be nonnegative")
    coeffs = [LaurentPoly.zero() for _ in range(order + 1)]
    lattice = 0
    for k in range(order + 1):
        for lam in partitions_of(k, n):
            mu = TorusCocharacter(lam.padded(n))
            wa = spherical_value(rep_a, TorusCocharacter(lam.padded(n + 1)))
            wb = spherical_value(rep_b, mu)
            term = wa * wb * delta_half(mu) ** -2 * qpow(Fraction(k, 2))
            expected = schur(lam, rep_a.satake) * schur(lam, rep_b.satake)
            if term != expected:
                raise ArithmeticError(
                    f"modulus bookkeeping failed to collapse at mu={mu}: "
                    f"{term.to_text()} != {expected.to_text()}"
                )
            coeffs[k] = coeffs[k] + term
            lattice += 1
    closed = local_l_factor(rep_a, rep_b, var) if build_closed_form else None
    return ZetaResult(TruncatedSeries(var, coeffs), closed, lattice)


def verify_unramified_identity(n: int, order: int = 6) -> SuiteReport:
    """Machine-check that the unramified integral equals the local L-factor.

    Runs the rank (n+1, n) lattice sum with fully symbolic Satake
    parameters and compares it coefficientwise against the exact expansion
    of the closed product form.
    """
    report = SuiteReport("unramified")

    def body() -> tuple[bool, str | None]:
        rep_a = UnramifiedRep.symbolic(n + 1, "a")
        rep_b = UnramifiedRep.symbolic(n, "b")
        result = local_zeta_unramified(rep_a, rep_b, "X", order)
        expanded = series_expand(result.closed_form, "X", order)
        for k in range(order + 1):
            if result.series.coeffs[k] != expanded.coeffs[k]:
                return False, (
                    f"X^{k}: lattice sum {result.series.coeffs[k].to_text()} != "
                    f"L-factor expansion {expanded.coeffs[k].to_text()}"
                )
        if result.series.coeffs[0] != LaurentPoly.one():
            return False, "normalization: X^0 coefficient is not 1"
        return True, None

    report.add(
        run_check(
            f"ranks=({n + 1},{n}),order={order}",
            f"unramified integral equals the L-factor for ranks ({n + 1},{n}) "
            f"through X^{order}",
            body,
        )
    )
    return report


def weight_unramified(rep_big: UnramifiedRep, rep_mid: UnramifiedRep,
                      rep_small: UnramifiedRep, order: int = 6) -> WeightResult:
    """The weight at an unramified place: both normalized ratios, hence 1.

    Computes the rank (n+1, n) integral against the contragredient of the
    middle representation and the rank (n, n-1) integral, divides each by
    its L-factor as truncated series, and checks both ratios are exactly 1.
    """
    n = rep_mid.rank
    if rep_big.rank != n + 1 or rep_small.rank != n - 1:
        raise RankMismatch(
            f"expected ranks (n+1, n, n-1), got "
            f"({rep_big.rank}, {rep_mid.rank}, {rep_small.rank})"
        )
    dual_mid = contragredient(rep_mid)
    z_s = local_zeta_unramified(rep_big, dual_mid, "X", order, build_closed_form=False)
    ratio_s = z_s.series * _l_factor_denominator_series(rep_big, dual_mid, "X", order)
    z_w = local_zeta_unramified(rep_mid, rep_small, "Y", order, build_closed_form=False)
    ratio_w = z_w.series * _l_factor_denominator_series(rep_mid, rep_small, "Y", order)
    for label, ratio in (("s-side", ratio_s), ("w-side", ratio_w)):
        if not ratio.is_one():
            raise ArithmeticError(
                f"unramified {label} ratio is not 1: {ratio.to_text()}"
            )
    return WeightResult(
        value=LaurentPoly.one(),
        place_kind=PLACE_UNRAMIFIED,
        lattice_points=z_s.lattice_points + z_w.lattice_points,
    )


def weight_at_l(rep_mid: UnramifiedRep, rep_small: UnramifiedRep, m: int,
                var: str = "Y", order: int = 6) -> WeightResult:
    """The weight at a place dividing the twisting level, to a given order.

    The level-m vector confines the lattice to mu_(n-1) >= m.  The value is

        (1/q^((n-1)m)) * sum_mu q^((n-1)m) s_mu(beta) s_mu(gamma) Y^|mu|
            / L(w, middle x small),

    computed from Whittaker values with every constant carried explicitly;
    the vector normalization and the orthogonality constant cancel exactly.
    A second pass enumerates the same lattice grouped by the last
    coordinate, evaluating the small side through the central-twist
    identity, and must agree termwise.  The published form of this weight
    carries q^((n-2)m) where orthogonality gives q^((n-1)m); paper_value
    and paper_comparison record that variant and the exact ratio.

    Division by the L-factor is exact: the series is multiplied by the
    denominator polynomial of L, so no series inversion is involved.
    """
    n = rep_mid.rank
    if rep_small.rank != n - 1:
        raise RankMismatch(
            f"expected ranks (n, n-1), got ({rep_mid.rank}, {rep_small.rank})"
        )
    if n < 2:
        raise ValueError("the twisted weight needs rank >= 2")
    if m < 0:
        raise ValueError("the level must be nonnegative")
    _check_symbols(rep_mid, rep_small, var)
    if order < 0:
        raise ValueError("series order must be nonnegative")

    paper_const, computed_const = twist_constants(n, m)
    prefactor = computed_const ** -1  # the level-m vector normalization

    # direct enumeration: mu = lam + m*(1,...,1), lam dominant of length <= n-1
    direct = [LaurentPoly.zero() for _ in range(order + 1)]
    lattice = 0
    base_weight = (n - 1) * m
    for k in range(base_weight, order + 1):
        for lam in partitions_of(k - base_weight, n - 1):
            mu = TorusCocharacter(tuple(p + m for p in lam.padded(n - 1)))
            tv = twisted_value(rep_mid, mu, m)
            wb = spherical_value(rep_small, mu)
            term = prefactor * tv * wb * delta_half(mu) ** -2 * qpow(Fraction(k, 2))
            expected = schur(Partition(mu.exps), rep_mid.satake) * schur(
                Partition(mu.exps), rep_small.satake
            )
            if term != expected:
                raise ArithmeticError(
                    f"constants failed to cancel at mu={mu}: "
                    f"{term.to_text()} != {expected.to_text()}"
                )
            direct[k] = direct[k] + term
            lattice += 1
    direct_series = TruncatedSeries(var, direct)

    # regrouped enumeration: fix the last coordinate nu >= m, split mu = a + nu*1
    small_product = rep_small.satake_product()
    regrouped = [LaurentPoly.zero() for _ in range(order + 1)]
    for nu in range(m, order // (n - 1) + 1):
        head = (n - 1) * nu
        central = small_product ** nu
        for rest in range(order - head + 1):
            for a in partitions_of(rest, n - 2):
                mu_parts = tuple(p + nu for p in a.padded(n - 2)) + (nu,)
                big_side = schur(Partition(mu_parts), rep_mid.satake)
                small_side = central * schur(a, rep_small.satake)
                regrouped[head + rest] = regrouped[head + rest] + big_side * small_side
    regrouped_series = TruncatedSeries(var, regrouped)
    if not series_equal(direct_series, regrouped_series):
        raise ArithmeticError(
            "direct and regrouped lattice enumerations disagree: "
            f"{direct_series.to_text()} vs {regrouped_series.to_text()}"
        )

    lden = _l_factor_denominator_series(rep_mid, rep_small, var, order)
    value = direct_series * lden
    paper_value = (regrouped_series * lden) * paper_const
    comparison = PaperComparison(
        paper_constant=paper_const,
        computed_constant=computed_const,
        ratio=RationalFunction(computed_const, paper_const),
    )
    return WeightResult(
        value=value,
        place_kind=PLACE_DIVIDING_L,
        paper_comparison=comparison,
        paper_value=paper_value,
        lattice_points=lattice,
    )


def weight_at_q_structural(n0: int, m: int, n: int, p: int) -> WeightResult:
    """Structural weight data at a place dividing the auxiliary modulus.

    The newform basis indexes the weight by triples (a1, a2, j) with
    a1 + a2 = m and 0 <= j <= a2 - n0, where n0 is the local conductor
    exponent; the lattice bookkeeping pins a1 = min(nu, m).  The set is
    empty exactly when n0 > m (the weight vanishes), and at the boundary
    n0 = m the single surviving term (0, m, 0) contributes the reciprocal
    of the congruence subgroup index.  The published approximation for that
    volume is p^(-(n-1)m); both are returned with their exact ratio.
    Below the boundary (n0 < m) only the index set is determined here.
    """
    if not isinstance(n0, int) or n0 < 0:
        raise ValueError(f"conductor exponent must be a nonnegative int, got {n0!r}")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"level exponent must be a nonnegative int, got {m!r}")
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"rank must be an integer >= 2, got {n!r}")
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"residue cardinality must be numeric >= 2, got {p!r}")
    index_set = tuple(
        (a1, m - a1, j)
        for a1 in range(0, m + 1)
        for j in range(0, (m - a1) - n0 + 1)
    )
    vanishes = not index_set
    paper_constant = LaurentPoly.const(Fraction(1, p ** ((n - 1) * m)))
    if vanishes:
        return WeightResult(
            value=LaurentPoly.zero(),
            place_kind=PLACE_DIVIDING_Q,
            index_set=index_set,
            vanishes=True,
            lattice_points=0,
        )
    if n0 == m:
        value = LaurentPoly.const(Fraction(1, congruence_index(n, p, m)))
        comparison = PaperComparison(
            paper_constant=paper_constant,
            computed_constant=value,
            ratio=RationalFunction(value, paper_constant),
        )
        return WeightResult(
            value=value,
            place_kind=PLACE_DIVIDING_Q,
            paper_comparison=comparison,
            paper_value=paper_constant,
            index_set=index_set,
            vanishes=False,
            lattice_points=len(index_set),
        )
    return WeightResult(
        value=None,
        place_kind=PLACE_DIVIDING_Q,
        index_set=index_set,
        vanishes=False,
        lattice_points=len(index_set),
    )
