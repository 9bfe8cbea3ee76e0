"""Ready-made algebras, modules and graded fixtures.

Everything here is finite-dimensional over Q with exact structure constants.
The graded fixtures at the bottom provide differential graded Lie algebras
with designed Maurer-Cartan elements for the deformation module: nilpotent
ones built from a Lie algebra tensored with a small commutative dg algebra,
and contraction ("big bracket") ones on the exterior algebra of an inner
product space, where a Maurer-Cartan trivector is the same thing as a
quadratic Lie algebra structure.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import numpy as np

from . import exactla as xla
from .defo import GradedL3Algebra
from .el2 import LeibnizAlgebraFD, LieAlgebraFD, RepresentationFD


# ---------------------------------------------------------------------------
# Lie algebras and modules
# ---------------------------------------------------------------------------

def abelian_lie(n: int) -> LieAlgebraFD:
    return LieAlgebraFD(n, xla.zeros(n, n, n))


def sl2() -> LieAlgebraFD:
    """Basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    c = xla.zeros(3, 3, 3).copy()
    c[1, 0, 1], c[1, 1, 0] = Fraction(2), Fraction(-2)
    c[2, 0, 2], c[2, 2, 0] = Fraction(-2), Fraction(2)
    c[0, 1, 2], c[0, 2, 1] = Fraction(1), Fraction(-1)
    return LieAlgebraFD(3, xla.freeze(c))


def so3() -> LieAlgebraFD:
    """Basis (e1, e2, e3) with [e_i, e_j] = eps_ijk e_k (cross product)."""
    c = xla.zeros(3, 3, 3).copy()
    for i, j, k, sign in ((0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1)):
        c[k, i, j] = Fraction(sign)
        c[k, j, i] = Fraction(-sign)
    return LieAlgebraFD(3, xla.freeze(c))


def affine_line() -> LieAlgebraFD:
    """The two-dimensional non-abelian algebra: [t, s] = s."""
    c = xla.zeros(2, 2, 2).copy()
    c[1, 0, 1], c[1, 1, 0] = Fraction(1), Fraction(-1)
    return LieAlgebraFD(2, xla.freeze(c))


def heisenberg() -> LieAlgebraFD:
    """Basis (X, Y, Z) with [X, Y] = Z central."""
    c = xla.zeros(3, 3, 3).copy()
    c[2, 0, 1], c[2, 1, 0] = Fraction(1), Fraction(-1)
    return LieAlgebraFD(3, xla.freeze(c))


def killing_form(g: LieAlgebraFD) -> np.ndarray:
    """K(x, y) = trace(ad x . ad y), exact."""
    # ad(e_i) has matrix c[:, i, :]
    k = np.empty((g.dim, g.dim), dtype=object)
    for i in range(g.dim):
        for j in range(g.dim):
            total = Fraction(0)
            for a in range(g.dim):
                for b in range(g.dim):
                    total += g.c[a, i, b] * g.c[b, j, a]
            k[i, j] = total
    return xla.freeze(k)


def cartan_3form(g: LieAlgebraFD, pairing: np.ndarray) -> np.ndarray:
    """phi(x,y,z) = <[x,y], z> as a (1, n, n, n) tensor over a 1-dim module."""
    phi = np.tensordot(g.c, np.asarray(pairing), axes=([0], [0]))
    return xla.freeze(phi.reshape((1, g.dim, g.dim, g.dim)))


def trivial_rep(g: LieAlgebraFD, dim: int = 1) -> RepresentationFD:
    return RepresentationFD(g, dim, xla.zeros(dim, g.dim, dim))


def adjoint_rep(g: LieAlgebraFD) -> RepresentationFD:
    return RepresentationFD(g, g.dim, g.c)


# ---------------------------------------------------------------------------
# Leibniz algebras
# ---------------------------------------------------------------------------

def leibniz_square() -> LeibnizAlgebraFD:
    """Two-dimensional: [x, x] = y, all other brackets zero."""
    c = xla.zeros(2, 2, 2).copy()
    c[1, 0, 0] = Fraction(1)
    return LeibnizAlgebraFD(2, xla.freeze(c))


def lie_as_leibniz(g: LieAlgebraFD) -> LeibnizAlgebraFD:
    return LeibnizAlgebraFD(g.dim, g.c)


def hemidirect_leibniz(rep: RepresentationFD) -> LeibnizAlgebraFD:
    """g + M with [(x, m), (y, n)] = ([x, y], x . n): left Leibniz, and not
    skew whenever the action is nontrivial."""
    g = rep.algebra
    n, dm = g.dim, rep.dim
    total = n + dm
    c = xla.zeros(total, total, total).copy()
    c[:n, :n, :n] = g.c
    c[n:, :n, n:] = rep.rho
    return LeibnizAlgebraFD(total, xla.freeze(c))


def standard_leibniz_corpus() -> list[tuple[str, LeibnizAlgebraFD]]:
    """Named Leibniz fixtures: the squared-bracket example, Lie algebras
    viewed as Leibniz algebras, and hemidirect products with modules."""
    t = affine_line()
    return [
        ("square", leibniz_square()),
        ("sl2-as-leibniz", lie_as_leibniz(sl2())),
        ("abelian3", lie_as_leibniz(abelian_lie(3))),
        ("affine+module", hemidirect_leibniz(
            RepresentationFD(abelian_lie(1), 1, xla.tensor([1, 1, 1], [1]))
        )),
        ("affine+adjoint", hemidirect_leibniz(adjoint_rep(t))),
        ("sl2+adjoint", hemidirect_leibniz(adjoint_rep(sl2()))),
    ]


# ---------------------------------------------------------------------------
# Graded fixtures: Lie algebra tensor a small commutative dg algebra
# ---------------------------------------------------------------------------

class _SmallCdga:
    """A finite-dimensional graded-commutative dg algebra given by monomial
    basis labels, degrees, a multiplication table and a differential."""

    def __init__(self, labels, degrees, products, diff):
        self.labels = list(labels)
        self.index = {m: i for i, m in enumerate(self.labels)}
        self.degrees = dict(degrees)
        self.products = dict(products)  # (m1, m2) -> list[(coeff, m3)]
        self.diff = dict(diff)          # m -> list[(coeff, m2)]


def _lambda_theta_eta_cdga() -> _SmallCdga:
    """Monomials of the free graded-commutative algebra on two degree -1
    generators and one degree +1 generator, with d(theta1) = 1; products
    landing outside the retained monomials are zero (degree truncation)."""
    labels = ["1", "t1", "t2", "t1t2", "h", "t1h", "t2h", "t1t2h"]
    degrees = {
        "1": 0, "t1": -1, "t2": -1, "t1t2": -2,
        "h": 1, "t1h": 0, "t2h": 0, "t1t2h": -1,
    }
    # generator exponents: (theta1, theta2, eta) with each in {0, 1}
    expo = {
        "1": (0, 0, 0), "t1": (1, 0, 0), "t2": (0, 1, 0), "t1t2": (1, 1, 0),
        "h": (0, 0, 1), "t1h": (1, 0, 1), "t2h": (0, 1, 1), "t1t2h": (1, 1, 1),
    }
    by_expo = {v: k for k, v in expo.items()}
    gen_deg = (-1, -1, 1)

    def mono_mul(a, b):
        ea, eb = expo[a], expo[b]
        if any(ea[i] and eb[i] for i in range(3)):
            return []
        # Koszul sign from commuting b's generators through a's
        sign = 1
        for i in range(3):
            if eb[i] and gen_deg[i] % 2:
                # count odd generators of a strictly after position i
                crossings = sum(1 for jj in range(i + 1, 3) if ea[jj] and gen_deg[jj] % 2)
                sign *= (-1) ** crossings
        prod = tuple(ea[i] + eb[i] for i in range(3))
        return [(Fraction(sign), by_expo[prod])]

    products = {}
    for a in labels:
        for b in labels:
            products[(a, b)] = mono_mul(a, b)

    # d is the derivation with d(theta1) = 1, d(theta2) = d(eta) = 0:
    # d(theta1 ^ w) = w restricted to monomials without theta1.
    diff = {m: [] for m in labels}
    for m in labels:
        e = expo[m]
        if e[0]:
            rest = (0, e[1], e[2])
            diff[m] = [(Fraction(1), by_expo[rest])]
    return _SmallCdga(labels, degrees, products, diff)


def tensor_dgla(g: LieAlgebraFD, omega: _SmallCdga) -> GradedL3Algebra:
    """The dg Lie algebra g (x) Omega: bracket [x (x) a, y (x) b] =
    [x,y] (x) ab, differential 1 (x) d."""
    n = g.dim
    degs = sorted(set(omega.degrees.values()))
    mono_by_deg = {k: [m for m in omega.labels if omega.degrees[m] == k] for k in degs}
    dims = {k: n * len(mono_by_deg[k]) for k in degs}
    pos = {}
    for k in degs:
        for w, m in enumerate(mono_by_deg[k]):
            for i in range(n):
                pos[(m, i)] = (k, w * n + i)

    l1 = {}
    for k in degs:
        if k + 1 not in dims:
            continue
        mat = xla.zeros(dims[k + 1], dims[k]).copy()
        nonzero = False
        for m in mono_by_deg[k]:
            for coeff, m2 in omega.diff[m]:
                for i in range(n):
                    kk, row = pos[(m2, i)]
                    _, col = pos[(m, i)]
                    mat[row, col] += coeff
                    nonzero = True
        if nonzero:
            l1[k] = xla.freeze(mat)

    l2 = {}
    for k1 in degs:
        for k2 in degs:
            k_out = k1 + k2
            if k_out not in dims:
                continue
            t = xla.zeros(dims[k_out], dims[k1], dims[k2]).copy()
            nonzero = False
            for m1 in mono_by_deg[k1]:
                for m2 in mono_by_deg[k2]:
                    for coeff, m3 in omega.products[(m1, m2)]:
                        if omega.degrees[m3] != k_out:
                            continue
                        for i in range(n):
                            for j in range(n):
                                for out in range(n):
                                    if g.c[out, i, j] == 0:
                                        continue
                                    _, row = pos[(m3, out)]
                                    _, c1 = pos[(m1, i)]
                                    _, c2 = pos[(m2, j)]
                                    t[row, c1, c2] += coeff * g.c[out, i, j]
                                    nonzero = True
            if nonzero:
                l2[(k1, k2)] = xla.freeze(t)
    return GradedL3Algebra(dims=dims, l1=l1, l2=l2, l3={})


def nilpotent_cdga_dgla(g: LieAlgebraFD | None = None) -> tuple[GradedL3Algebra, np.ndarray]:
    """A dgla in degrees -2..1 with a nonzero Maurer-Cartan element.

    Built as g (x) Omega for Omega generated by two degree -1 and one degree
    +1 odd generators with d(theta1) = 1.  Degree +2 is zero, so gamma =
    x (x) eta satisfies the Maurer-Cartan equation for free while twisting
    the differential nontrivially.
    """
    if g is None:
        g = affine_line()
    omega = _lambda_theta_eta_cdga()
    dgla = tensor_dgla(g, omega)
    gamma = xla.zeros(dgla.dim(1)).copy()
    gamma[0] = Fraction(1)  # first basis vector of g (x) eta
    return dgla, xla.freeze(gamma)


def _lambda_theta_eta_small() -> _SmallCdga:
    """Monomials 1, theta, eta, theta*eta with degrees 0, -1, +1, 0 and
    d(theta) = 1; no degree below -1, for the two-term construction."""
    labels = ["1", "t", "h", "th"]
    degrees = {"1": 0, "t": -1, "h": 1, "th": 0}
    expo = {"1": (0, 0), "t": (1, 0), "h": (0, 1), "th": (1, 1)}
    by_expo = {v: k for k, v in expo.items()}

    def mono_mul(a, b):
        ea, eb = expo[a], expo[b]
        if any(ea[i] and eb[i] for i in range(2)):
            return []
        sign = 1
        # both generators odd: each crossing contributes a sign
        if eb[0] and ea[1]:
            sign = -sign
        prod = (ea[0] + eb[0], ea[1] + eb[1])
        return [(Fraction(sign), by_expo[prod])]

    products = {(a, b): mono_mul(a, b) for a in labels for b in labels}
    diff = {m: [] for m in labels}
    diff["t"] = [(Fraction(1), "1")]
    diff["th"] = [(Fraction(1), "h")]
    return _SmallCdga(labels, degrees, products, diff)


def nilpotent_cdga_dgla_n2(g: LieAlgebraFD | None = None) -> tuple[GradedL3Algebra, np.ndarray]:
    """A dgla populated in degrees -1..1 with nonzero differential and a
    nonzero Maurer-Cartan element, for the two-term symmetry construction."""
    if g is None:
        g = affine_line()
    dgla = tensor_dgla(g, _lambda_theta_eta_small())
    gamma = xla.zeros(dgla.dim(1)).copy()
    gamma[0] = Fraction(1)
    return dgla, xla.freeze(gamma)


def _eta_cube_cdga() -> _SmallCdga:
    """Three odd degree +1 generators with d(eta3) = -eta1 eta2, truncated to
    degrees <= 2.  Tensoring with a Lie algebra produces Maurer-Cartan
    problems where the differential genuinely balances the bracket term."""
    labels = ["1", "h1", "h2", "h3", "h1h2", "h1h3", "h2h3"]
    degrees = {"1": 0, "h1": 1, "h2": 1, "h3": 1, "h1h2": 2, "h1h3": 2, "h2h3": 2}
    expo = {
        "1": (0, 0, 0), "h1": (1, 0, 0), "h2": (0, 1, 0), "h3": (0, 0, 1),
        "h1h2": (1, 1, 0), "h1h3": (1, 0, 1), "h2h3": (0, 1, 1),
    }
    by_expo = {v: k for k, v in expo.items()}

    def mono_mul(a, b):
        ea, eb = expo[a], expo[b]
        if any(ea[i] and eb[i] for i in range(3)):
            return []
        prod = tuple(ea[i] + eb[i] for i in range(3))
        if sum(prod) > 2:
            return []
        sign = 1
        for i in range(3):
            if eb[i]:
                crossings = sum(1 for jj in range(i + 1, 3) if ea[jj])
                sign *= (-1) ** crossings
        return [(Fraction(sign), by_expo[prod])]

    products = {(a, b): mono_mul(a, b) for a in labels for b in labels}
    diff = {m: [] for m in labels}
    diff["h3"] = [(Fraction(-1), "h1h2")]
    return _SmallCdga(labels, degrees, products, diff)


def mc_balancing_dgla() -> tuple[GradedL3Algebra, np.ndarray, np.ndarray]:
    """A dgla whose Maurer-Cartan equation has genuine content: on the
    Heisenberg algebra tensored with the eta-cube algebra, the element
    X h1 + Y h2 + Z h3 is flat because d gamma = -Z h1h2 cancels
    1/2 [gamma, gamma] = Z h1h2, while dropping the h3 leg leaves a nonzero
    residual.  Returns (algebra, flat gamma, non-flat gamma)."""
    dgla = tensor_dgla(heisenberg(), _eta_cube_cdga())
    # degree 1 basis comes out as (h1 (x) basis, h2 (x) basis, h3 (x) basis)
    good = xla.zeros(dgla.dim(1)).copy()
    good[0] = Fraction(1)   # X (x) h1
    good[4] = Fraction(1)   # Y (x) h2
    good[8] = Fraction(1)   # Z (x) h3
    bad = xla.zeros(dgla.dim(1)).copy()
    bad[0] = Fraction(1)
    bad[4] = Fraction(1)
    return dgla, xla.freeze(good), xla.freeze(bad)


def action_dgla(rep: RepresentationFD) -> GradedL3Algebra:
    """The algebra in degree 0 and its module in degree -1, zero
    differential: [x, m] = x.m and [m, x] = -x.m."""
    g = rep.algebra
    return GradedL3Algebra(
        dims={0: g.dim, -1: rep.dim},
        l1={},
        l2={
            (0, 0): g.c,
            (0, -1): rep.rho,
            (-1, 0): xla.freeze(-np.moveaxis(rep.rho, 1, 2)),
        },
        l3={},
    )


def inner_derivation_dgla(g: LieAlgebraFD) -> GradedL3Algebra:
    """The identity crossed module g -> g as a dgla in degrees -1, 0."""
    base = action_dgla(adjoint_rep(g))
    return GradedL3Algebra(dims=base.dims, l1={-1: xla.identity(g.dim)}, l2=base.l2, l3={})


def two_term_l3_dgla(g: LieAlgebraFD, pairing: np.ndarray) -> GradedL3Algebra:
    """Degrees 0 and -1 with trivial one-dimensional module, zero
    differential, and trilinear bracket <[x,y], z> landing in degree -1.
    The arity-4 relation is the closedness of that 3-cochain."""
    phi = np.tensordot(g.c, np.asarray(pairing), axes=([0], [0]))
    return GradedL3Algebra(
        dims={0: g.dim, -1: 1},
        l1={},
        l2={(0, 0): g.c},
        l3={(0, 0, 0): xla.freeze(phi.reshape((1, g.dim, g.dim, g.dim)))},
    )


def twisted_big_bracket_dgla() -> tuple[GradedL3Algebra, np.ndarray]:
    """The contraction algebra on Lambda Q^4 with the inner differential
    {e2^e3^e4, .} and the Maurer-Cartan trivector e1^e2^e3."""
    mu = trivector_coords(4, [(1, (1, 2, 3))])
    dgla = big_bracket_dgla(xla.identity(4), mu=mu)
    return dgla, cross_product_gamma(4)


# ---------------------------------------------------------------------------
# Graded fixtures: contraction bracket on an exterior algebra
# ---------------------------------------------------------------------------

def _subsets(n: int, k: int):
    return list(itertools.combinations(range(n), k))


def big_bracket_dgla(
    form: np.ndarray, mu: np.ndarray | None = None
) -> GradedL3Algebra:
    """The graded Lie algebra Lambda V with Lambda^p V placed in degree
    p - 2 and the bracket induced by contracting one index pair through the
    symmetric form; a trivector mu with {mu, mu} = 0 may be supplied as an
    inner differential d = {mu, .}."""
    form = xla.as_exact(form)
    n = form.shape[0]
    if form.shape != (n, n) or not xla.arrays_equal(form, form.T):
        raise xla.ShapeError("contraction form must be square symmetric")
    subsets = {p: _subsets(n, p) for p in range(n + 1)}
    index = {p: {s: i for i, s in enumerate(subsets[p])} for p in subsets}
    dims = {p - 2: len(subsets[p]) for p in range(n + 1)}

    def merge(left: tuple[int, ...], right: tuple[int, ...]):
        """Sort a concatenated monomial, returning (sign, sorted) or None on
        a repeated index."""
        arr = list(left) + list(right)
        sign = 1
        # insertion sort, counting transpositions
        for i in range(1, len(arr)):
            j = i
            while j > 0 and arr[j - 1] > arr[j]:
                arr[j - 1], arr[j] = arr[j], arr[j - 1]
                sign = -sign
                j -= 1
        for i in range(1, len(arr)):
            if arr[i - 1] == arr[i]:
                return None
        return sign, tuple(arr)

    def bracket_monomials(s: tuple[int, ...], t: tuple[int, ...]):
        """{e_S, e_T} = sum over index pairs of the contracted monomial."""
        p, q = len(s), len(t)
        out = []
        for ai, vi in enumerate(s):
            for bj, wj in enumerate(t):
                coeff = form[vi, wj]
                if coeff == 0:
                    continue
                sign = (-1) ** (p - 1 - ai) * (-1) ** bj
                rest_s = s[:ai] + s[ai + 1:]
                rest_t = t[:bj] + t[bj + 1:]
                merged = merge(rest_s, rest_t)
                if merged is None:
                    continue
                msign, mono = merged
                out.append((coeff * sign * msign, mono))
        return out

    l2 = {}
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            r = p + q - 2
            if r < 0 or r > n or not subsets[r]:
                continue
            t = xla.zeros(len(subsets[r]), len(subsets[p]), len(subsets[q])).copy()
            nonzero = False
            for s_i, s in enumerate(subsets[p]):
                for t_i, tt in enumerate(subsets[q]):
                    for coeff, mono in bracket_monomials(s, tt):
                        t[index[r][mono], s_i, t_i] += coeff
                        nonzero = True
            if nonzero:
                l2[(p - 2, q - 2)] = xla.freeze(t)

    l1 = {}
    if mu is not None:
        mu = xla.as_exact(mu)
        if mu.shape != (len(subsets[3]),):
            raise xla.ShapeError("inner differential must be a trivector coordinate vector")
        for p in range(n + 1):
            key = (1, p - 2)
            if key not in l2:
                continue
            mat = np.tensordot(l2[key], mu, axes=([1], [0]))
            if not xla.is_zero(mat):
                l1[p - 2] = xla.freeze(mat)
    return GradedL3Algebra(dims={k: v for k, v in dims.items()}, l1=l1, l2=l2, l3={})


def trivector_coords(n: int, terms: list[tuple[int, tuple[int, int, int]]]) -> np.ndarray:
    """Coordinate vector in the basis of increasing triples of {0..n-1}."""
    subsets = _subsets(n, 3)
    v = xla.zeros(len(subsets)).copy()
    for coeff, triple in terms:
        v[subsets.index(tuple(sorted(triple)))] += Fraction(coeff)
    return xla.freeze(v)


def cross_product_gamma(n: int = 3) -> np.ndarray:
    """The trivector e1 ^ e2 ^ e3 in Lambda^3 Q^n, a Maurer-Cartan element of
    the contraction dgla for the standard form (it encodes the rotation
    algebra, extended by a center when n > 3)."""
    return trivector_coords(n, [(1, (0, 1, 2))])
