import random
from fractions import Fraction as F

import numpy as np
import pytest

from conftest import rand_invertible, rand_tensor, twisted_nonskeletal
from lie2alg import catalog, cohom, dkcore, el2, exactla as xla, morph


@pytest.fixture(scope="module")
def sl2_setup():
    g = catalog.sl2()
    m = catalog.trivial_rep(g)
    k = catalog.killing_form(g)
    base = cohom.CocyclePair(k.reshape(1, 3, 3), xla.zeros(1, 3, 3, 3))
    return g, m, base


def skeletal_of(g, m, pair):
    return el2.from_skeletal_cocycle(g, m, pair.s, pair.j)


def morphism_family(rng, g, m, base, count):
    """Verified (1,f) morphisms between skeletal structures over (g, m),
    chained so consecutive ones are composable."""
    out = []
    current = base
    for _ in range(count):
        f = rand_tensor(rng, m.dim, g.dim, g.dim)
        nxt = current + cohom.coboundary(g, m, f)
        out.append(
            cohom.skeletal_morphism(skeletal_of(g, m, current), skeletal_of(g, m, nxt), f)
        )
        current = nxt
    return out


def test_identity_morphism_passes():
    e = el2.string_2_algebra(catalog.sl2(), catalog.killing_form(catalog.sl2()))
    assert morph.check_morphism(morph.identity_morphism(e)).passed


def test_skeletal_morphisms_pass(sl2_setup):
    rng = random.Random(21)
    g, m, base = sl2_setup
    for mor in morphism_family(rng, g, m, base, 5):
        assert morph.check_morphism(mor).passed


def test_random_f2_perturbation_fails(sl2_setup):
    rng = random.Random(4)
    g, m, base = sl2_setup
    e = skeletal_of(g, m, base)
    bad = morph.ELMorphism(
        e, e, xla.identity(3), xla.identity(1), rand_tensor(rng, 1, 3, 3)
    )
    report = morph.check_morphism(bad)
    assert not report.passed


def test_compose_identity_and_associativity(sl2_setup):
    rng = random.Random(33)
    g, m, base = sl2_setup
    f1, f2, f3 = morphism_family(rng, g, m, base, 3)
    assert morph.compose(morph.identity_morphism(f1.dst), f1) == f1
    assert morph.compose(f1, morph.identity_morphism(f1.src)) == f1
    lhs = morph.compose(morph.compose(f3, f2), f1)
    rhs = morph.compose(f3, morph.compose(f2, f1))
    assert lhs == rhs
    assert morph.check_morphism(lhs).passed


def test_compose_rejects_mismatched_endpoints(sl2_setup):
    g, m, base = sl2_setup
    e = skeletal_of(g, m, base)
    other = el2.zero_el2(2, 1)
    ident = morph.identity_morphism(e)
    with pytest.raises(dkcore.CompositionError):
        morph.compose(morph.identity_morphism(other), ident)


def test_strict_iso_inverse_composes_to_identity():
    rng = random.Random(7)
    st = el2.string_2_algebra(catalog.sl2(), catalog.killing_form(catalog.sl2()))
    phi0 = rand_invertible(rng, 3)
    phi1 = rand_invertible(rng, 1)
    moved = el2.transport(st, phi0, phi1)
    fwd = morph.ELMorphism(st, moved, phi0, phi1, xla.zeros(1, 3, 3))
    back = morph.ELMorphism(moved, st, xla.inverse(phi0), xla.inverse(phi1), xla.zeros(1, 3, 3))
    assert morph.check_morphism(fwd).passed
    assert morph.check_morphism(back).passed
    assert morph.compose(back, fwd) == morph.identity_morphism(st)


def test_quasi_inverse_data_and_2morphism(sl2_setup):
    rng = random.Random(12)
    g, m, base = sl2_setup
    for _ in range(4):
        f = rand_tensor(rng, 1, 3, 3)
        theta = rand_tensor(rng, 1, 3)
        src = skeletal_of(g, m, base)
        dst = skeletal_of(g, m, base + cohom.coboundary(g, m, f))
        fwd = cohom.skeletal_morphism(src, dst, f)
        back, two = cohom.quasi_inverse_data(src, dst, f, theta)
        assert morph.check_morphism(back).passed
        assert morph.check_2morphism(two).passed


def test_zero_2morphism_between_equal_morphisms(sl2_setup):
    g, m, base = sl2_setup
    e = skeletal_of(g, m, base)
    ident = morph.identity_morphism(e)
    assert morph.check_2morphism(morph.identity_2morphism(ident)).passed


def test_random_theta_usually_fails(sl2_setup):
    rng = random.Random(5)
    g, m, base = sl2_setup
    e = skeletal_of(g, m, base)
    ident = morph.identity_morphism(e)
    theta = rand_tensor(rng, 1, 3, lo=1, hi=3)
    # theta with d = 0 must satisfy g0 - f0 = 0 = d theta (fine) but the
    # bracket-homotopy condition fails for generic nonzero theta
    bad = morph.ELTwoMorphism(ident, ident, theta)
    assert not morph.check_2morphism(bad).passed


def test_vertical_composition(sl2_setup):
    rng = random.Random(14)
    g, m, base = sl2_setup
    e = skeletal_of(g, m, base)
    # build three parallel morphisms connected by 2-morphisms: starting from
    # (1, f), shifting f by the boundary formula of theta keeps it parallel
    f = rand_tensor(rng, 1, 3, 3)
    dst_pair = base + cohom.coboundary(g, m, f)
    dst = skeletal_of(g, m, dst_pair)

    def shifted(fmat, theta):
        t1 = np.tensordot(dst.b01, theta, axes=([2], [0]))
        t2 = np.swapaxes(np.tensordot(dst.b10, theta, axes=([1], [0])), 1, 2)
        t3 = xla.postcompose(theta, e.b00)
        return xla.freeze(fmat - t1 - t2 + t3)

    theta1 = rand_tensor(rng, 1, 3)
    theta2 = rand_tensor(rng, 1, 3)
    m1 = cohom.skeletal_morphism(e, dst, f)
    m2 = cohom.skeletal_morphism(e, dst, shifted(f, theta1))
    m3 = cohom.skeletal_morphism(e, dst, shifted(shifted(f, theta1), theta2))
    assert morph.check_morphism(m2).passed and morph.check_morphism(m3).passed
    t1 = morph.ELTwoMorphism(m1, m2, theta1)
    t2 = morph.ELTwoMorphism(m2, m3, theta2)
    assert morph.check_2morphism(t1).passed and morph.check_2morphism(t2).passed
    comp = morph.vertical_compose(t2, t1)
    assert morph.check_2morphism(comp).passed
    assert xla.arrays_equal(comp.theta, theta1 + theta2)
    # identity is neutral, inverse negates
    zero = morph.identity_2morphism(m1)
    assert morph.vertical_compose(t1, zero) == t1
    inv = morph.inverse_2morphism(t1)
    assert xla.arrays_equal(morph.vertical_compose(inv, t1).theta, xla.zeros(1, 3))


def test_horizontal_composition_and_interchange(sl2_setup):
    rng = random.Random(15)
    g, m, base = sl2_setup
    e = skeletal_of(g, m, base)
    f = rand_tensor(rng, 1, 3, 3)
    mid_pair = base + cohom.coboundary(g, m, f)
    mid = skeletal_of(g, m, mid_pair)
    f2 = rand_tensor(rng, 1, 3, 3)
    far_pair = mid_pair + cohom.coboundary(g, m, f2)
    far = skeletal_of(g, m, far_pair)

    def shifted(dst, fmat, theta):
        t1 = np.tensordot(dst.b01, theta, axes=([2], [0]))
        t2 = np.swapaxes(np.tensordot(dst.b10, theta, axes=([1], [0])), 1, 2)
        t3 = xla.postcompose(theta, e.b00)
        return xla.freeze(fmat - t1 - t2 + t3)

    theta_f = rand_tensor(rng, 1, 3)
    theta_g = rand_tensor(rng, 1, 3)
    F_ = cohom.skeletal_morphism(e, mid, f)
    G_ = cohom.skeletal_morphism(e, mid, shifted(mid, f, theta_f))
    H_ = cohom.skeletal_morphism(mid, far, f2)
    K_ = cohom.skeletal_morphism(mid, far, shifted(far, f2, theta_g))
    tF = morph.ELTwoMorphism(F_, G_, theta_f)
    tG = morph.ELTwoMorphism(H_, K_, theta_g)
    assert morph.check_2morphism(tF).passed and morph.check_2morphism(tG).passed

    horiz = morph.horizontal_compose(tG, tF)
    assert morph.check_2morphism(horiz).passed
    assert horiz.src == morph.compose(H_, F_)
    assert horiz.dst == morph.compose(K_, G_)

    # categorical validation: the whiskering expansions agree on basis objects
    # psi(f0 x) + k1(theta_F x) = h1(theta_F x) + psi(g0 x)
    lhs = np.dot(tG.theta, F_.f0) + np.dot(K_.f1, tF.theta)
    rhs = np.dot(H_.f1, tF.theta) + np.dot(tG.theta, G_.f0)
    assert xla.arrays_equal(lhs, rhs)

    # whiskering with identity 2-morphisms is plain whiskering
    plain = morph.horizontal_compose(morph.identity_2morphism(H_), tF)
    assert xla.arrays_equal(plain.theta, np.dot(H_.f1, tF.theta))
    assert morph.whisker_left(tF, H_) == plain
    assert xla.arrays_equal(morph.whisker_right(F_, tG).theta, np.dot(tG.theta, F_.f0))
    both_id = morph.horizontal_compose(
        morph.identity_2morphism(H_), morph.identity_2morphism(F_)
    )
    assert xla.is_zero(both_id.theta)

    # middle-four interchange on a composable quadruple
    theta_f2 = rand_tensor(rng, 1, 3)
    theta_g2 = rand_tensor(rng, 1, 3)
    G2 = cohom.skeletal_morphism(e, mid, shifted(mid, G_.f2, theta_f2))
    K2 = cohom.skeletal_morphism(mid, far, shifted(far, K_.f2, theta_g2))
    tF2 = morph.ELTwoMorphism(G_, G2, theta_f2)
    tG2 = morph.ELTwoMorphism(K_, K2, theta_g2)
    one_way = morph.horizontal_compose(
        morph.vertical_compose(tG2, tG), morph.vertical_compose(tF2, tF)
    )
    other_way = morph.vertical_compose(
        morph.horizontal_compose(tG2, tF2), morph.horizontal_compose(tG, tF)
    )
    assert one_way.src == other_way.src and one_way.dst == other_way.dst
    assert xla.arrays_equal(one_way.theta, other_way.theta)


def test_is_equivalence():
    rng = random.Random(2)
    st = el2.string_2_algebra(catalog.sl2(), catalog.killing_form(catalog.sl2()))
    assert morph.is_equivalence(morph.identity_morphism(st))
    # inclusion of a skeletal model is an equivalence
    moved, _, _ = twisted_nonskeletal(rng, st, 2)
    skeletal, inclusion = cohom.transfer_to_skeletal(moved)
    assert morph.is_equivalence(inclusion)
    # zero morphism to a structure with nontrivial cohomology is not
    zero = morph.ELMorphism(
        el2.zero_el2(0, 0), st, xla.zeros(3, 0), xla.zeros(1, 0), xla.zeros(1, 0, 0)
    )
    assert morph.check_morphism(zero).passed
    assert not morph.is_equivalence(zero)


def test_equivalences_compose(sl2_setup):
    rng = random.Random(19)
    g, m, base = sl2_setup
    f1, f2 = (rand_tensor(rng, 1, 3, 3) for _ in range(2))
    a = skeletal_of(g, m, base)
    b = skeletal_of(g, m, base + cohom.coboundary(g, m, f1))
    c = skeletal_of(g, m, base + cohom.coboundary(g, m, f1) + cohom.coboundary(g, m, f2))
    m1 = cohom.skeletal_morphism(a, b, f1)
    m2 = cohom.skeletal_morphism(b, c, f2)
    assert morph.is_equivalence(m1) and morph.is_equivalence(m2)
    assert morph.is_equivalence(morph.compose(m2, m1))
