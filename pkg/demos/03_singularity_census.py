"""The singularity census of the blown-up family along its exceptional divisor.

For a case-T record the affine chart (T != 0) of E is

    U = (x'y' + h(z') = 0)  inside  (1/d)(a1, a2, a3),
    h(z') = z'^(k*n) + sum_i c_i z'^(i*n),

and three kinds of singular points are read off exactly:

  * interior A_(l-1) points at the multiplicity-l roots of h, counted by the
    degree of the multiplicity-l squarefree factor (no roots are located);
  * a quotient germ at the chart origin when d > 1;
  * two corner quotients at (1:0:0:0) and (0:1:0:0).
"""

from semistable import (
    UnsupportedForm,
    WeightVector,
    build_contraction,
    census,
    reduced_g_coefficients,
    validate_germ,
)

# A cubic family: xy + z^3 - 3z t^2 + 2 t^3 = 0 at index one, blown up with
# weights (2,1,1).  Here h(z) = z^3 - 3z + 2 = (z-1)^2 (z+2): one double
# root, one simple root.
cubic = validate_germ({
    "n": 1, "a": 0, "case": "T", "k": 3,
    "g": [{"coeff": "-3", "exp": [0, 0, 1, 1]}, {"coeff": "2", "exp": [0, 0, 0, 2]}],
})
record = build_contraction(cubic, WeightVector((2, 1, 1)))
red = reduced_g_coefficients(record)
print("leading coefficients c_i:", dict(red.c))
result = census(record)
for entry in result.interior:
    print(f"interior: {entry.count} point(s) of type {entry.type_label}")
print("origin entry:", result.origin)
for corner in result.corners:
    status = "smooth" if corner.smooth else f"(xy=0) in (1/{corner.r})(1,-1,{corner.c})"
    print(f"corner {corner.point}: {status}")

# An index-two quartic: xy + z^4 + 7 t^2 = 0 in (1/2)(1,-1,1,0) blown up
# with (1/2)(1,3,1).  The chart h = z^4 + 7 is squarefree, the constant term
# keeps the chart origin off the surface, and only one corner is singular.
quartic = validate_germ({
    "n": 2, "a": 1, "case": "T", "k": 2,
    "g": [{"coeff": "7", "exp": [0, 0, 0, 1]}],
})
result = census(build_contraction(quartic, WeightVector((1, 3, 1), 2)))
print("\nquartic census:", result.to_json())

# Dropping the constant term moves the singularity into the chart origin,
# which becomes a quotient germ of fibre type (k', n', a') = (1, 2, 1):
quartic_z = validate_germ({
    "n": 2, "a": 1, "case": "T", "k": 2,
    "g": [{"coeff": "1", "exp": [0, 0, 2, 0]}],   # t*g = z^2 t
})
entry = census(build_contraction(quartic_z, WeightVector((1, 3, 1), 2))).origin
print(f"\norigin germ: (xy + z^{entry.z_power} = 0) in "
      f"(1/{entry.index})(1,-1,{entry.b}), fibre type {entry.quotient}")

# The census never guesses: perturbations outside the reduced shape are
# refused rather than silently mis-reported.
offgrid = validate_germ({
    "n": 1, "a": 0, "case": "T", "k": 3,
    "g": [{"coeff": "1", "exp": [1, 0, 0, 5]}],   # involves x
})
try:
    census(build_contraction(offgrid, WeightVector((2, 1, 1))))
except UnsupportedForm as exc:
    print("\nrefused:", exc)
