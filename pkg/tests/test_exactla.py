from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from lie2alg import exactla as xla


rationals = st.fractions(min_value=-30, max_value=30, max_denominator=7)


def small_matrix(max_dim=5):
    return st.integers(0, max_dim).flatmap(
        lambda r: st.integers(0, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: xla.matrix(rows) if r else xla.zeros(0, c))
        )
    )


def test_rat_parsing():
    assert xla.rat("3/4") == F(3, 4)
    assert xla.rat("-6/8") == F(-3, 4)
    assert xla.rat(5) == F(5)
    assert xla.rat_str(F(8, 2)) == "4"
    assert xla.rat_str(F(-1, 3)) == "-1/3"
    with pytest.raises(xla.ShapeError):
        xla.rat("1/0")
    with pytest.raises(xla.ShapeError):
        xla.rat("0.5x")


def test_rref_identity():
    m = xla.identity(2)
    r, pivots = xla.rref(m)
    assert xla.arrays_equal(r, m)
    assert pivots == (0, 1)


def test_rref_hand_reduced():
    # [[2,4],[1,2]]: scale row0 by 1/2, eliminate row1 -> [[1,2],[0,0]]
    m = xla.matrix([[2, 4], [1, 2]])
    r, pivots = xla.rref(m)
    assert xla.arrays_equal(r, xla.matrix([[1, 2], [0, 0]]))
    assert pivots == (0,)


def test_rref_empty():
    m = xla.zeros(0, 0)
    r, pivots = xla.rref(m)
    assert r.shape == (0, 0)
    assert pivots == ()


def test_kernel_identity_and_zero():
    assert xla.kernel_basis(xla.identity(3)).dim == 0
    k = xla.kernel_basis(xla.zeros(1, 3))
    assert k.dim == 3
    assert xla.arrays_equal(k.basis, xla.identity(3))


def test_kernel_row_vector():
    k = xla.kernel_basis(xla.matrix([[1, 1]]))
    assert k.dim == 1
    v = k.basis[:, 0]
    # oracle: exhaustively m v = 0 and v spans the expected line
    assert sum(v) == 0
    assert v[1] == 1 and v[0] == -1


def test_image_basis():
    assert xla.image_basis(xla.identity(3)).dim == 3
    assert xla.image_basis(xla.zeros(2, 2)).dim == 0
    im = xla.image_basis(xla.matrix([[1, 2], [2, 4]]))
    assert im.dim == 1
    assert xla.arrays_equal(im.basis[:, 0], xla.vector([1, 2]))


def test_membership():
    s = xla.Subspace(2, xla.matrix([[1], [2]]))
    assert xla.membership(s, xla.vector([2, 4]))[0] == 2
    assert xla.membership(s, xla.vector([0, 0])) is not None
    # (1, 0) is outside span{(1, 2)}: solving [1;2] c = (1,0) is inconsistent
    assert xla.membership(s, xla.vector([1, 0])) is None
    with pytest.raises(xla.ShapeError):
        xla.membership(s, xla.vector([1, 0, 0]))


def test_quotient():
    z = xla.full_space(2)
    b = xla.Subspace(2, xla.matrix([[1], [0]]))
    dim, reps = xla.quotient(z, b)
    assert dim == 1
    assert xla.arrays_equal(reps[:, 0], xla.vector([0, 1]))
    dim, reps = xla.quotient(z, z)
    assert dim == 0
    dim, reps = xla.quotient(z, xla.zero_space(2))
    assert dim == 2
    assert xla.arrays_equal(reps, z.basis)
    with pytest.raises(xla.SubspaceError):
        xla.quotient(b, z)


def test_contract():
    eye = xla.identity(2)
    e1 = xla.vector([1, 0])
    assert xla.arrays_equal(xla.contract(eye, 1, e1), e1)
    t = xla.zeros(2, 2, 2)
    assert xla.is_zero(xla.contract(t, 2, e1))
    # a structure tensor evaluated on basis pairs reproduces its entries
    t = xla.tensor([2, 2, 2], [F(k * 4 + i * 2 + j, 3) for k in range(2) for i in range(2) for j in range(2)])
    for i in range(2):
        for j in range(2):
            ei = xla.zeros(2).copy(); ei[i] = 1
            ej = xla.zeros(2).copy(); ej[j] = 1
            got = xla.apply_multilinear(t, ei, ej)
            assert xla.arrays_equal(got, t[:, i, j])
    with pytest.raises(xla.ShapeError):
        xla.contract(t, 1, xla.vector([1, 0, 0]))


def test_plug_matches_pointwise_composition():
    rng = np.random.default_rng(7)
    outer = xla.tensor([2, 3, 2], [F(int(x)) for x in rng.integers(-3, 4, 12)])
    inner = xla.tensor([3, 2, 2], [F(int(x)) for x in rng.integers(-3, 4, 12)])
    comp = xla.plug(outer, 1, inner)
    assert comp.shape == (2, 2, 2, 2)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                ei = xla.identity(2)[:, i]
                ej = xla.identity(2)[:, j]
                ek = xla.identity(2)[:, k]
                expect = xla.apply_multilinear(outer, xla.apply_multilinear(inner, ei, ej), ek)
                assert xla.arrays_equal(comp[:, i, j, k], expect)


@settings(max_examples=60, deadline=None)
@given(small_matrix())
def test_rref_idempotent_and_rank_nullity(m):
    r, pivots = xla.rref(m)
    r2, pivots2 = xla.rref(r)
    assert xla.arrays_equal(r, r2) and pivots == pivots2
    ker = xla.kernel_basis(m)
    im = xla.image_basis(m)
    assert ker.dim + im.dim == m.shape[1]
    for j in range(ker.dim):
        assert xla.is_zero(np.dot(m, ker.basis[:, j]))


@settings(max_examples=40, deadline=None)
@given(small_matrix(4), st.lists(rationals, min_size=4, max_size=4))
def test_image_membership(m, coeffs):
    v = xla.vector(coeffs[: m.shape[1]] + [0] * max(0, m.shape[1] - len(coeffs)))
    image = np.dot(m, v) if m.shape[1] else xla.zeros(m.shape[0])
    assert xla.membership(xla.image_basis(m), image) is not None


@settings(max_examples=100, deadline=None)
@given(rationals, rationals)
def test_exact_addition_roundtrip(a, b):
    assert (a + b) - b == a


def test_inverse():
    m = xla.matrix([[1, 2], [3, 4]])
    inv = xla.inverse(m)
    assert xla.arrays_equal(np.dot(m, inv), xla.identity(2))
    assert xla.arrays_equal(np.dot(inv, m), xla.identity(2))
    assert inv[0, 0] == F(-2)
    with pytest.raises(xla.SubspaceError):
        xla.inverse(xla.matrix([[1, 2], [2, 4]]))
    with pytest.raises(xla.ShapeError):
        xla.inverse(xla.zeros(2, 3))
    assert xla.inverse(xla.zeros(0, 0)).shape == (0, 0)


def test_zero_dimensional_spaces_are_first_class():
    empty = xla.zeros(0, 0)
    r, p = xla.rref(empty)
    assert p == ()
    assert xla.kernel_basis(xla.zeros(3, 0)).dim == 0
    assert xla.image_basis(xla.zeros(0, 3)).ambient_dim == 0
    t = xla.zeros(0, 2)
    assert xla.contract(t, 1, xla.vector([1, 1])).shape == (0,)
