"""Resolving cyclic quotient surfaces and subdividing their toric cones.

The minimal resolution of 1/r(1, q) is a string of rational curves whose
self-intersections are the negatives of the continued-fraction entries of
r/q.  Du Val germs resolve to the A/D/E trees of (-2)-curves.  On the toric
side, a case-T fibre is the quadrant cone in Z^2 + Z*(1/r)(1, q); inserting
a primitive interior ray is a weighted blowup of the surface, and the
monomial dictionary x = u^(k n), y = v^(k n), z = u v carries those rays to
exactly the admissible 3-fold weights.
"""

from fractions import Fraction

from semistable import (
    SurfaceCone,
    admissible_weights_T,
    duval_graph,
    fibre_cone,
    hj_evaluate,
    hj_expansion,
    ray_to_weight,
    resolve_cyclic,
    toric_subdivide,
    weight_to_ray,
)

for r, q in [(4, 1), (5, 2), (7, 6), (12, 5)]:
    entries = hj_expansion(r, q)
    assert hj_evaluate(entries) == Fraction(r, q)
    graph = resolve_cyclic(r, q)
    print(f"1/{r}(1,{q}): expansion {entries}, "
          f"string {[v.self_intersection for v in graph.vertices]}")

graph = duval_graph("E7")
print("\nE7 dual graph:", len(graph.vertices), "curves of self-intersection -2,",
      f"fork at {graph.vertices[graph.fork].label}")

# Subdividing the cone of the quotient 1/4(1,1) at its central ray is the
# minimal resolution: both pieces come out smooth and the inserted curve has
# discrepancy -1/2 (log terminal, as it must be).
cone = SurfaceCone(4, 1)
left, right, f_disc = toric_subdivide(cone, (Fraction(1, 4), Fraction(1, 4)))
print(f"\n1/4(1,1) split at (1/4)(1,1): pieces 1/{left.r} and 1/{right.r}, "
      f"divisor discrepancy {f_disc}")

# An off-center ray leaves a residual quotient on one side:
left, right, f_disc = toric_subdivide(cone, (Fraction(1, 4), Fraction(5, 4)))
print(f"1/4(1,1) split at (1/4)(1,5): pieces 1/{left.r}(1,{left.q}) "
      f"and 1/{right.r}, divisor discrepancy {f_disc}")

# The fibre of the index-two quadric germ is exactly this 1/4(1,1), and its
# primitive interior rays match the admissible blowup weights one for one:
k, n, a = 1, 2, 1
cone = fibre_cone(k, n, a)
print(f"\nfibre cone of the index-two quadric: 1/{cone.r}(1,{cone.q})")
for w in admissible_weights_T(n, a, k, bound=3):
    ray = weight_to_ray(k, n, w)
    assert ray_to_weight(k, n, ray) == w
    _, _, f_disc = toric_subdivide(cone, ray)
    print(f"    {w}  <->  ray ({ray[0]}, {ray[1]}),  surface discrepancy {f_disc}")
