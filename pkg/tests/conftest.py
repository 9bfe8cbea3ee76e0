import random
from fractions import Fraction as F

import numpy as np
import pytest

from lie2alg import catalog, cohom, el2, exactla as xla


# ---------------------------------------------------------------------------
# deterministic random helpers
# ---------------------------------------------------------------------------

def rand_mat(rng, rows, cols, lo=-2, hi=3):
    out = np.empty((rows, cols), dtype=object)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = F(rng.randrange(lo, hi))
    return xla.freeze(out)


def rand_tensor(rng, *shape, lo=-2, hi=3):
    out = np.empty(shape, dtype=object)
    flat = out.reshape(-1)
    for i in range(flat.size):
        flat[i] = F(rng.randrange(lo, hi))
    return xla.freeze(out)


def rand_invertible(rng, n):
    while True:
        m = rand_mat(rng, n, n)
        try:
            xla.inverse(m)
            return m
        except xla.SubspaceError:
            continue


def perturb(e, tensor_name, flat_idx, delta=F(1)):
    """Copy of a structure with one tensor entry shifted by delta."""
    arrs = {
        name: np.array(getattr(e, name), dtype=object, copy=True)
        for name in ("b00", "b01", "b10", "alt", "jac")
    }
    arrs[tensor_name].reshape(-1)[flat_idx] += delta
    return el2.EL2Algebra(e.complex, **arrs)


def twisted_nonskeletal(rng, skeletal, acyclic_dim):
    """A non-skeletal structure equivalent to the given skeletal one: block
    sum with an acyclic piece, pushed along a random invertible chain
    isomorphism.  Returns (structure, phi0, phi1)."""
    big = el2.direct_sum(skeletal, el2.zero_el2(acyclic_dim, acyclic_dim, xla.identity(acyclic_dim)))
    n0, n1 = big.complex.n0, big.complex.n1
    phi0 = rand_invertible(rng, n0)
    phi1 = rand_invertible(rng, n1)
    return el2.transport(big, phi0, phi1), phi0, phi1


# ---------------------------------------------------------------------------
# the corpus
# ---------------------------------------------------------------------------

@pytest.fixture(scope="session")
def gm_corpus():
    """(name, algebra, module) pairs the cohomology tests range over."""
    sl2 = catalog.sl2()
    ab2 = catalog.abelian_lie(2)
    ab3 = catalog.abelian_lie(3)
    aff = catalog.affine_line()
    return [
        ("sl2/trivial", sl2, catalog.trivial_rep(sl2)),
        ("sl2/adjoint", sl2, catalog.adjoint_rep(sl2)),
        ("abelian2/trivial", ab2, catalog.trivial_rep(ab2)),
        ("abelian3/trivial", ab3, catalog.trivial_rep(ab3)),
        ("affine/trivial", aff, catalog.trivial_rep(aff)),
    ]


@pytest.fixture(scope="session")
def hl3_spaces(gm_corpus):
    return {name: (g, m, cohom.hl3(g, m)) for name, g, m in gm_corpus}


@pytest.fixture(scope="session")
def quadratic_corpus():
    """(name, algebra, pairing) triples with invariant symmetric forms."""
    sl2 = catalog.sl2()
    so3 = catalog.so3()
    ab2 = catalog.abelian_lie(2)
    return [
        ("sl2/killing", sl2, catalog.killing_form(sl2)),
        ("so3/killing", so3, catalog.killing_form(so3)),
        ("abelian2/identity", ab2, xla.identity(2)),
    ]


@pytest.fixture(scope="session")
def el2_corpus(quadratic_corpus, hl3_spaces):
    """Every constructor family: hemistrict structures of Leibniz algebras,
    quadratic hemistrict and semistrict structures, and one skeletal
    structure per cocycle-space basis element of every (algebra, module)."""
    out = []
    for name, leib in catalog.standard_leibniz_corpus():
        out.append((f"leibniz:{name}", el2.from_leibniz(leib)))
    for name, g, pairing in quadratic_corpus:
        out.append((f"quadratic:{name}", el2.from_quadratic_lie(g, pairing)))
        out.append((f"string:{name}", el2.string_2_algebra(g, pairing)))
    for name, (g, m, space) in hl3_spaces.items():
        for k in range(space.cocycles.dim):
            pair = cohom.unflatten_pair(g, m, space.cocycles.basis[:, k])
            out.append(
                (f"skeletal:{name}#{k}", el2.from_skeletal_cocycle(g, m, pair.s, pair.j))
            )
    return out
