"""Skew-symmetrization: projecting weak structures onto semistrict ones.

The bracket is antisymmetrized, the alternator is discarded, and the
Jacobiator picks up two exactly-tuned rational coefficients:

    {x,y,z} = 1/6 sum sgn <...> - 1/12 sum sgn <[.,.], .>

On the quadratic structure of a semisimple algebra the output is the
well-known one-dimensional central extension model with Jacobiator
-1/2 <[x,y], z>.
"""

from fractions import Fraction as F

import numpy as np

from lie2alg import catalog, el2, exactla as xla, skew

print(__doc__)

g = catalog.sl2()
k = catalog.killing_form(g)
quad = el2.from_quadratic_lie(g, k)
out = skew.skew_symmetrize(quad)

print("output is semistrict:", el2.is_semistrict(out))
print("output passes the checker:", el2.check_el2(out).passed)
print("output equals the direct construction:",
      out == el2.string_2_algebra(g, k))

phi = np.tensordot(g.c, k, axes=([0], [0]))
print("Jacobiator equals -1/2 <[x,y], z> entrywise:",
      xla.arrays_equal(out.jac.reshape(3, 3, 3), phi * F(-1, 2)))

print("idempotent:", skew.skew_symmetrize(out) == out)

# on a 2-dimensional carrier every alternating trilinear map dies, so the
# squared-bracket structure collapses all the way to a strict one
e = el2.from_leibniz(catalog.leibniz_square())
collapsed = skew.skew_symmetrize(e)
print("\nsquared-bracket example collapses to a strict structure:",
      el2.is_strict(collapsed))
