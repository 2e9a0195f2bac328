"""Admissible blowup weights, discrepancies, and contraction records.

A contraction of a germ (f + t*g = 0) in 1/n(1,-1,a,0) is the weighted
blowup of x, y, z, t with weights (w0, 1).  Case T admits every w0 that is
primitive in Z^3 + Z*(1/n)(1,-1,a) and makes f = xy + z^(k*n) homogeneous
(a1 + a2 = k*n*a3); there are infinitely many, so enumeration is exhaustive
only inside a user-supplied bound on max(a_i)/d.  The D and E cases each
admit exactly one weight vector:

    D_m  (m-1, m-2, 2)       E6  (6, 4, 3)
    E7   (9, 6, 4)           E8  (15, 10, 6)

The discrepancy of the exceptional divisor is

    sum(blowup weights) - valuation(f + t*g) - 1,

the adjunction value for a hypersurface inside a weighted blowup; it is
cross-checked against the index-one cover (see the cover module) and the
rank-2 toric picture (see the resolution module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainRejection, NonAdmissibleWeight, SemistabilityViolation
from .germs import GermSpec
from .lattices import (
    QuotientLattice,
    WeightVector,
    divisors,
    fraction_to_str,
    weight_in_lattice,
    weight_is_primitive,
)
from .polynomials import (
    SparsePoly,
    graded_piece,
    min_weight_monomial,
    poly_to_json,
    format_poly,
    valuation,
)


def admissible_weights_T(n: int, a: int, k: int, bound) -> list[WeightVector]:
    """All admissible case-T weights with max entry (1/d)*a_i <= bound.

    Scans every divisor d of n and every positive integer solution of
    a1 + a2 = k*n*a3 with coprime entries, keeping the vectors that lie in
    Z^3 + Z*(1/n)(1,-1,a) and are primitive there.  Exhaustive within the
    bound; sorted lexicographically as rational vectors.
    """
    if n < 1 or gcd(a, n) != 1:
        raise ValueError(f"invalid quotient data n={n}, a={a}")
    if k < 1:
        raise ValueError("k must be a positive integer")
    bound = Fraction(bound)
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    lattice = QuotientLattice(3, n, a)
    found = []
    for d in divisors(n):
        cap = int(d * bound)  # entries a_i <= d*bound
        for a3 in range(1, cap + 1):
            total = k * n * a3
            for a1 in range(1, min(cap, total - 1) + 1):
                a2 = total - a1
                if a2 < 1 or a2 > cap:
                    continue
                if gcd(gcd(a1, a2), a3) != 1:
                    continue
                w = WeightVector((a1, a2, a3), d)
                if not weight_in_lattice(lattice, w):
                    continue
                if not weight_is_primitive(lattice, w):
                    continue
                found.append(w)
    found.sort(key=WeightVector.sort_key)
    return found


_DE_TABLE = {
    "E6": (6, 4, 3),
    "E7": (9, 6, 4),
    "E8": (15, 10, 6),
}


def fixed_weights_DE(case: str, m: int | None = None) -> WeightVector:
    """The unique admissible weight vector for a D or E germ."""
    from .germs import normal_form
    from .polynomials import is_homogeneous

    if case == "D":
        if m is None or m < 4:
            raise ValueError("case D needs m >= 4")
        w = WeightVector((m - 1, m - 2, 2))
    elif case in _DE_TABLE:
        w = WeightVector(_DE_TABLE[case])
    else:
        raise ValueError(f"no fixed weights for case {case!r}")
    homogeneous, _ = is_homogeneous(w, normal_form(case, 1, None, m))
    assert homogeneous
    return w


def is_admissible(germ: GermSpec, w0: WeightVector) -> tuple[bool, str | None]:
    """Whether w0 is an admissible blowup weight for the germ; returns (ok, reason)."""
    if germ.case == "N":
        return False, (
            "non-normal fibre germs admit no contraction enumeration; "
            "the classification assumes a normal special fibre"
        )
    if germ.case == "T":
        a1, a2, a3 = w0.numerators
        if a1 + a2 != germ.k * germ.n * a3:
            return False, (
                f"f is not homogeneous for {w0}: "
                f"{a1} + {a2} != {germ.k * germ.n} * {a3}"
            )
        lattice = germ.weight_lattice
        if not weight_in_lattice(lattice, w0):
            return False, f"{w0} does not lie in Z^3 + Z*(1/{germ.n})(1,-1,{germ.a})"
        if not weight_is_primitive(lattice, w0):
            return False, f"{w0} is imprimitive in the extended lattice"
        return True, None
    expected = fixed_weights_DE(germ.case, germ.m)
    if w0 != expected:
        return False, f"case {germ.case} admits only w0 = {expected}"
    return True, None


def _check_admissible(germ: GermSpec, w0: WeightVector) -> None:
    ok, reason = is_admissible(germ, w0)
    if not ok:
        raise NonAdmissibleWeight(reason)


def discrepancy(germ: GermSpec, w0: WeightVector) -> Fraction:
    """Discrepancy of the exceptional divisor: sum of weights - w(f + t*g) - 1."""
    _check_admissible(germ, w0)
    total = sum(w0.extended, Fraction(0))
    equation = germ.f + germ.tg
    value = total - valuation(w0, equation) - 1
    if value <= 0:
        raise DomainRejection(
            f"discrepancy {value} is not positive; the pair is not terminal"
        )
    return value


@dataclass(frozen=True)
class ContractionRecord:
    """One weighted blowup of a germ, with its exceptional divisor data.

    E lives in the weighted projective space P(a1, a2, a3, d) and is cut out
    by f(X, Y, Z) + T * g_(lam-1)(X, Y, Z, T), where g_(lam-1) is the graded
    piece of g in weight lam - 1 (possibly zero) and lam = w(f).
    """

    germ: GermSpec
    w0: WeightVector
    lam: Fraction
    discrepancy: Fraction
    ambient: tuple[int, int, int, int]
    E_equation: SparsePoly
    semistable_ok: bool
    contraction_status: str

    def to_json(self) -> dict:
        return {
            "germ": self.germ.to_json(),
            "w0": self.w0.to_json(),
            "lambda": fraction_to_str(self.lam),
            "discrepancy": fraction_to_str(self.discrepancy),
            "ambient": list(self.ambient),
            "E_equation": poly_to_json(self.E_equation),
            "E_equation_str": format_poly(self.E_equation, ("X", "Y", "Z", "T")),
            "semistable_ok": self.semistable_ok,
            "contraction_status": self.contraction_status,
        }


def build_contraction(germ: GermSpec, w0: WeightVector) -> ContractionRecord:
    """Assemble the contraction record for an admissible weight.

    Rejects the pair when w(t*g) < w(f): the witnessing monomial is carried
    on the raised SemistabilityViolation.
    """
    _check_admissible(germ, w0)
    lam = valuation(w0, germ.f)
    if not germ.tg.is_zero:
        val_tg = valuation(w0, germ.tg)
        if val_tg < lam:
            exp, coeff = min_weight_monomial(w0, germ.tg)
            raise SemistabilityViolation(
                f"w(t*g) = {fraction_to_str(val_tg)} < w(f) = {fraction_to_str(lam)}; "
                f"witness monomial {format_poly(SparsePoly.monomial(exp, coeff))}",
                witness=exp,
            )
    piece = (
        SparsePoly.zero(4)
        if germ.tg.is_zero
        else graded_piece(w0, germ.g, lam - 1)
    )
    e_equation = germ.f + piece.times_t()
    disc = discrepancy(germ, w0)
    return ContractionRecord(
        germ=germ,
        w0=w0,
        lam=lam,
        discrepancy=disc,
        ambient=(*w0.numerators, w0.denominator),
        E_equation=e_equation,
        semistable_ok=True,
        contraction_status="divisorial-contraction" if germ.rho_one else "pending-rho",
    )


def enumerate_contractions(germ: GermSpec, bound=None):
    """All contraction records of the germ within the bound.

    Returns (records, rejected) where rejected lists the admissible weights
    whose blowup fails semistability, with the witnessing monomial.  Case T
    needs a bound; D and E germs have a single record and ignore it.
    """
    if germ.case == "N":
        raise DomainRejection(
            "non-normal fibre germs admit no contraction enumeration; "
            "the classification assumes a normal special fibre"
        )
    if germ.case == "T":
        if bound is None:
            raise ValueError("case-T enumeration needs a bound")
        weights = admissible_weights_T(germ.n, germ.a, germ.k, bound)
    else:
        weights = [fixed_weights_DE(germ.case, germ.m)]
    records, rejected = [], []
    for w in weights:
        try:
            records.append(build_contraction(germ, w))
        except SemistabilityViolation as exc:
            rejected.append((w, exc.witness))
    records.sort(key=lambda r: (r.lam, r.w0.sort_key()))
    return records, rejected
