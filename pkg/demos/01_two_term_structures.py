"""A first tour: two-term complexes, their linear categories, and the
correspondence between them.

A two-term complex C^-1 --d--> C^0 is the same thing as a linear category:
objects form C^0, an arrow from x is a pair (x, a) with target x + d a, and
composition just adds arrow parts.  Run this script to watch the translation
go back and forth and to see why every linear category is a groupoid.
"""

from fractions import Fraction as F

from lie2alg import dkcore, exactla as xla

print(__doc__)

# a complex with a nontrivial differential
c = dkcore.TwoTermComplex(2, 2, xla.matrix([[1, 0], [0, 0]]))
print("complex: C^-1 of dimension", c.n1, "-> C^0 of dimension", c.n0)
print("d =", [[str(x) for x in row] for row in c.d])

v = dkcore.gamma(c)
x = xla.vector([1, 2])
a = xla.vector([3, -1])
arrow = dkcore.Arrow(x, a)
print("\nan arrow from", list(map(str, x)), "with arrow part", list(map(str, a)))
print("its target is x + d a =", list(map(str, v.target(arrow))))

# composition adds arrow parts, and (x + da, -a) is a two-sided inverse
follow = dkcore.Arrow(v.target(arrow), xla.vector([F(1, 2), 4]))
composite = dkcore.compose_arrows(v, follow, arrow)
print("composite arrow part:", list(map(str, composite.part)))
inverse = v.inverse(arrow)
print("inverse composes to the identity:",
      dkcore.compose_arrows(v, inverse, arrow) == v.identity(x))

# the roundtrip is exact on the nose
print("\nnormalize(gamma(c)) == c:", dkcore.normalize(v) == c)

# the deterministic splitting onto cohomology
hodge = dkcore.hodge_decompose(c)
print("\ncohomology of the complex: degree 0 has dimension",
      hodge.skeletal.n0, "and degree -1 has dimension", hodge.skeletal.n1)
print("the inclusion of the skeletal model is a quasi-isomorphism:",
      dkcore.is_quasi_iso(hodge.include))
