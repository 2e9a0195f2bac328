"""Classifying smoothing germs and reading off their fibre singularities.

A one-parameter smoothing germ is a hypersurface family

    (f(x, y, z) + t * g(x, y, z, t) = 0)  inside  (1/n)(1, -1, a, 0),

with t the parameter on the base curve.  The validator checks the normal
form: gcd(a, n) = 1, the case equation, that the perturbation enters only
through t*g, and invariance of f + t*g under the cyclic action.  The special
fibre of a case-T germ is a cyclic quotient surface singularity; D and E
germs have Du Val fibres.
"""

from semistable import (
    GermRejection,
    fibre_singularity,
    format_poly,
    isolatedness_probe,
    validate_germ,
)

# An index-two quadric germ: xy + z^2 + t^3 inside (1/2)(1,-1,1,0).
# Its JSON form is exactly what the command line reads.
quadric = validate_germ({
    "n": 2, "a": 1, "case": "T", "k": 1,
    "g": [{"coeff": "1", "exp": [0, 0, 0, 2]}],   # g = t^2, so t*g = t^3
})
print("germ:", format_poly(quadric.f + quadric.tg), "= 0",
      f"in (1/{quadric.n})(1,-1,{quadric.a},0)")

fibre = fibre_singularity(quadric)
print(f"fibre: cyclic quotient 1/{fibre.r}(1,{fibre.q})")
print("chart dictionary:", dict(fibre.dictionary))

# The isolatedness probe is one-sided: "verified" certifies a
# zero-dimensional singular locus, everything else stays "inconclusive".
print("isolatedness:", isolatedness_probe(quadric))

# Truncating the perturbation to t-order 2 leaves the product family
# (xy + z^2 = 0) x T, which is singular along the whole t-axis:
print("isolatedness after truncation:", isolatedness_probe(quadric, t_order=2))

# A Du Val fibre: the D4 germ x^2 + y^2 z + z^3 at index one.
d4 = validate_germ({"n": 1, "a": 0, "case": "D", "m": 4, "g": []})
print("\nD-case fibre:", fibre_singularity(d4))

# Rejections are structured, not silent.  gcd(a, n) = 1 fails here:
try:
    validate_germ({"n": 2, "a": 2, "case": "T", "k": 1, "g": []})
except GermRejection as exc:
    print("\nrejected germ:", exc)

# ... and a perturbation with a nonzero character fails invariance:
try:
    validate_germ({"n": 3, "a": 1, "case": "T", "k": 1,
                   "g": [{"coeff": "1", "exp": [0, 0, 1, 1]}]})
except GermRejection as exc:
    print("rejected germ:", exc)
