"""Local data at a finite place: unramified representations, congruence
subgroup indices, and additive character sums.

An unramified representation is carried entirely by its Satake parameters.
Parameters are stored as single-term LaurentPolys so that every symmetric
function evaluation downstream (Hecke eigenvalues, spherical values) works
uniformly whether a parameter is a named variable, the inverse of one, or
an exact rational.

The congruence subgroup of level m fixes the bottom row of an invertible
matrix to (0, ..., 0, *) modulo the m-th power of the maximal ideal.  Its
index in the full maximal compact has the closed form

    [K : K_0(m)] = p^((n-1)(m-1)) * (p^n - 1) / (p - 1)    for m >= 1

and 1 for m = 0.  A brute-force count over matrices modulo p^m is provided
as an independent oracle for small cases.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence, Union

from .exactalg import LaurentPoly, RESIDUE_CARDINALITY_VAR, qpow
from .symfunc import complete_homogeneous

SYMBOLIC_Q = RESIDUE_CARDINALITY_VAR

ENUMERATION_LIMIT = 2 ** 24


class ZeroSatakeParameter(ValueError):
    """A Satake parameter is zero, so its inverse does not exist."""


class EnumerationTooLarge(ValueError):
    """A brute-force enumeration would exceed the configured size bound."""


class UnsupportedConductor(ValueError):
    """The additive character has nonzero conductor, which is out of scope."""


class RankMismatch(ValueError):
    """Ranks of the supplied data do not line up."""


def _validate_p(p: Union[int, str]) -> Union[int, str]:
    if isinstance(p, str):
        if p != SYMBOLIC_Q:
            raise ValueError(
                f"symbolic residue cardinality must be named {SYMBOLIC_Q!r}, got {p!r}"
            )
        return p
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"residue cardinality must be an integer >= 2, got {p!r}")
    return p


@dataclass(frozen=True)
class LocalFieldData:
    """Residue cardinality (an integer or the symbol q) and additive conductor."""

    p: Union[int, str] = SYMBOLIC_Q
    d_v: int = 0

    def __post_init__(self):
        _validate_p(self.p)
        if not isinstance(self.d_v, int) or self.d_v < 0:
            raise ValueError(f"conductor exponent must be a nonnegative int, got {self.d_v!r}")

    def ppow(self, e) -> LaurentPoly:
        """p^e as an exact LaurentPoly (a q power when symbolic)."""
        if isinstance(self.p, str):
            return qpow(e)
        f = Fraction(e)
        if f.denominator != 1:
            raise ValueError(f"numeric residue cardinality cannot carry exponent {e}")
        return LaurentPoly.const(Fraction(self.p) ** f.numerator)


def _coerce_param(x) -> LaurentPoly:
    p = LaurentPoly.coerce(x)
    if p.is_zero() or p.is_unit():
        return p
    raise ValueError(
        f"Satake parameters must be single-term values, got {p.to_text()}"
    )


@dataclass(frozen=True)
class UnramifiedRep:
    """An unramified representation given by its Satake parameters.

    trivial_central records that the product of the parameters is 1; it is
    enforced when all parameters are numeric and is otherwise an annotation
    that substitution helpers can realize.
    """

    rank: int
    satake: tuple[LaurentPoly, ...]
    trivial_central: bool = False

    def __init__(self, rank: int, satake: Sequence, trivial_central: bool = False):
        if not isinstance(rank, int) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank!r}")
        params = tuple(_coerce_param(x) for x in satake)
        if len(params) != rank:
            raise RankMismatch(
                f"rank {rank} representation needs {rank} Satake parameters, "
                f"got {len(params)}"
            )
        if trivial_central and all(p.is_constant() for p in params):
            prod = Fraction(1)
            for p in params:
                prod *= p.as_fraction()
            if prod != 1:
                raise ValueError(
                    f"trivial central character requires the parameters to multiply "
                    f"to 1, got {prod}"
                )
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "satake", params)
        object.__setattr__(self, "trivial_central", trivial_central)

    @classmethod
    def symbolic(cls, rank: int, prefix: str = "a", trivial_central: bool = False) -> "UnramifiedRep":
        if prefix == SYMBOLIC_Q:
            raise ValueError(f"{SYMBOLIC_Q!r} is reserved for the residue cardinality")
        return cls(rank, [LaurentPoly.var(f"{prefix}{i}") for i in range(1, rank + 1)],
                   trivial_central)

    def variables(self) -> frozenset[str]:
        out: set[str] = set()
        for p in self.satake:
            out.update(p.variables())
        return frozenset(out)

    def satake_product(self) -> LaurentPoly:
        prod = LaurentPoly.one()
        for p in self.satake:
            prod = prod * p
        return prod

    def to_json_obj(self) -> dict:
        return {
            "rank": self.rank,
            "satake": [p.to_text() for p in self.satake],
            "trivialCentral": self.trivial_central,
        }

    @classmethod
    def from_json_obj(cls, obj) -> "UnramifiedRep":
        return cls(
            obj["rank"],
            [LaurentPoly.parse(s) for s in obj["satake"]],
            obj.get("trivialCentral", False),
        )


def hecke_eigenvalue(rep: UnramifiedRep, k: int, classical: bool = False) -> LaurentPoly:
    """Spherical Hecke eigenvalue at the k-th elementary torus coset.

    In the unitary normalization this is h_k of the Satake parameters; the
    classical normalization differs by q^(k(n-1)/2) and is exposed through
    the flag.
    """
    if k < 0:
        raise ValueError("hecke_eigenvalue needs k >= 0")
    value = complete_homogeneous(k, rep.satake)
    if classical:
        value = value * qpow(Fraction(k * (rep.rank - 1), 2))
    return value


def contragredient(rep: UnramifiedRep) -> UnramifiedRep:
    """The contragredient: inverted Satake parameters in reversed order."""
    inverted = []
    for p in reversed(rep.satake):
        if p.is_zero():
            raise ZeroSatakeParameter("cannot invert a zero Satake parameter")
        inverted.append(p ** -1)
    return UnramifiedRep(rep.rank, inverted, rep.trivial_central)


def central_substitution(rep: UnramifiedRep) -> dict[str, LaurentPoly]:
    """Substitution realizing a trivial central character on symbolic data.

    Maps the last parameter's variable to the inverse of the product of the
    others.  Requires all parameters to be distinct plain variables.
    """
    names = []
    for p in rep.satake:
        if not p.is_unit():
            raise ValueError("central substitution needs nonzero parameters")
        ((mon, c),) = p.terms.items()
        if c != 1 or len(mon.exps) != 1 or mon.exps[0][1] != 1:
            raise ValueError("central substitution needs plain variable parameters")
        names.append(mon.exps[0][0])
    if len(set(names)) != len(names):
        raise ValueError("central substitution needs distinct variables")
    inv = LaurentPoly.one()
    for name in names[:-1]:
        inv = inv * LaurentPoly.var(name, -1)
    return {names[-1]: inv}


def congruence_index(n: int, p: int, m: int) -> int:
    """Index of the level-m bottom-row congruence subgroup in GL_n(o).

    m = 0 gives the full group, index 1.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"matrix size must be an integer >= 2, got {n!r}")
    if not isinstance(p, int) or p < 2:
        raise ValueError(f"residue cardinality must be a numeric prime power, got {p!r}")
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"level exponent must be a nonnegative int, got {m!r}")
    if m == 0:
        return 1
    return p ** ((n - 1) * (m - 1)) * (p ** n - 1) // (p - 1)


def _det_mod(rows: tuple, n: int, q: int) -> int:
    """Determinant of an n x n integer matrix modulo q by cofactor expansion."""
    if n == 1:
        return rows[0][0] % q
    if n == 2:
        return (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]) % q
    total = 0
    sign = 1
    for j in range(n):
        a = rows[0][j]
        if a:
            minor = tuple(
                tuple(rows[i][k] for k in range(n) if k != j) for i in range(1, n)
            )
            total += sign * a * _det_mod(minor, n - 1, q)
        sign = -sign
    return total % q


def congruence_index_bruteforce(n: int, p: int, m: int) -> int:
    """Count the index directly over matrices modulo p^m.

    Both the full unit group and the congruence subgroup reduce faithfully
    modulo p^m, so the index is the ratio of the two counts.  Guarded by a
    hard size bound; p must be prime here so that invertibility is just
    det != 0 mod p.
    """
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"matrix size must be an integer >= 2, got {n!r}")
    if m == 0:
        return 1
    if p ** (m * n * n) > ENUMERATION_LIMIT:
        raise EnumerationTooLarge(
            f"p^(m*n^2) = {p}^{m * n * n} exceeds the bound {ENUMERATION_LIMIT}"
        )
    q = p ** m
    full = 0
    sub = 0
    for flat in product(range(q), repeat=n * n):
        rows = tuple(flat[i * n:(i + 1) * n] for i in range(n))
        if _det_mod(rows, n, q) % p == 0:
            continue
        full += 1
        if all(x % q == 0 for x in rows[n - 1][: n - 1]):
            sub += 1
    if full % sub:
        raise ArithmeticError("subgroup count does not divide the group count")
    return full // sub


def character_sum(p: Union[int, str], m: int, valuations: Sequence[int],
                  d_v: int = 0) -> LaurentPoly:
    """Sum of the additive character over a box of level-m residues.

    For each coordinate the character beta -> psi(u_i * beta) is summed
    over beta in m^(-m)o / o, where u_i has the given valuation.  By
    orthogonality the sum is p^m per coordinate when the coordinate
    character is trivial (valuation >= m) and 0 otherwise, hence p^(r*m)
    or 0 overall.  Requires conductor zero.
    """
    p = _validate_p(p)
    if d_v != 0:
        raise UnsupportedConductor(
            f"character sums are only implemented for conductor 0, got d_v={d_v}"
        )
    if not isinstance(m, int) or m < 0:
        raise ValueError(f"level exponent must be a nonnegative int, got {m!r}")
    vals = [int(v) for v in valuations]
    if any(v < 0 for v in vals):
        raise ValueError("valuations must be nonnegative")
    r = len(vals)
    if all(v >= m for v in vals):
        if isinstance(p, str):
            return qpow(r * m)
        return LaurentPoly.const(Fraction(p) ** (r * m))
    return LaurentPoly.zero()


def character_sum_numeric(p: int, m: int, valuations: Sequence[int]) -> complex:
    """Brute-force numeric character sum over all residue tuples.

    Sums exp(2 pi i * sum_i b_i p^(v_i) / p^m) over b in (Z/p^m)^r without
    using orthogonality, as an independent oracle.
    """
    if isinstance(p, str):
        raise ValueError("the numeric oracle needs a numeric residue cardinality")
    q = p ** m
    vals = [int(v) for v in valuations]
    total = 0j
    tau = 2j * cmath.pi
    for b in product(range(q), repeat=len(vals)):
        phase = sum(bi * p ** vi for bi, vi in zip(b, vals)) % q
        total += cmath.exp(tau * phase / q)
    return total
