"""Enumerating admissible blowup weights and building contraction records.

A weighted blowup of x, y, z, t with weights (w0, 1) contracts an
exceptional divisor E onto the germ's singular point.  For case T the
admissible w0 are the primitive vectors of Z^3 + Z*(1/n)(1,-1,a) making
xy + z^(k*n) homogeneous; there are infinitely many, so enumeration is
relative to a bound on the largest rational entry.  Each record carries

    lambda        = w(f), the valuation of the fibre equation,
    discrepancy   = sum(weights) - w(f + t*g) - 1   (> 0, terminality),
    E lives in    P(a1, a2, a3, d),
    E equation    = f + T * (weight lambda-1 piece of g).
"""

from semistable import (
    SemistabilityViolation,
    admissible_weights_T,
    build_contraction,
    enumerate_contractions,
    fixed_weights_DE,
    format_poly,
    validate_germ,
)

# Every admissible weight for xy + z^2 at index two, entries up to 3:
print("admissible weights for the index-two quadric, bound 3:")
for w in admissible_weights_T(n=2, a=1, k=1, bound=3):
    print("   ", w)
print("note: (1,1,1) is missing; it halves to (1/2)(1,1,1) inside the lattice.")

quadric = validate_germ({
    "n": 2, "a": 1, "case": "T", "k": 1,
    "g": [{"coeff": "1", "exp": [0, 0, 0, 2]}],
})
records, rejected = enumerate_contractions(quadric, bound=3)
print(f"\n{len(records)} records, {len(rejected)} rejected by semistability:")
for record in records:
    a1, a2, a3, d = record.ambient
    print(f"    w0 = {record.w0}: lambda = {record.lam}, "
          f"discrepancy = {record.discrepancy}, "
          f"E = ({format_poly(record.E_equation, ('X','Y','Z','T'))} = 0) "
          f"in P({a1},{a2},{a3},{d})")
for w, witness in rejected:
    print(f"    {w} fails w(t*g) >= w(f), witness exponent {witness}")

# D and E germs admit exactly one weight vector each:
print("\nfixed weights:", fixed_weights_DE("D", 7), fixed_weights_DE("E8"))

e6 = validate_germ({"n": 1, "a": 0, "case": "E6",
                    "g": [{"coeff": "1", "exp": [0, 0, 0, 11]}]})
record = build_contraction(e6, fixed_weights_DE("E6"))
print(f"E6 record: lambda = {record.lam}, discrepancy = {record.discrepancy}")

# Semistability is enforced: a perturbation of weight below w(f) is refused,
# and the violating monomial is named.
shallow = validate_germ({"n": 1, "a": 0, "case": "E6",
                         "g": [{"coeff": "1", "exp": [0, 0, 0, 1]}]})
try:
    build_contraction(shallow, fixed_weights_DE("E6"))
except SemistabilityViolation as exc:
    print("refused:", exc)
