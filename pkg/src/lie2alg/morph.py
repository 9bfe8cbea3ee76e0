"""Morphisms and 2-morphisms between two-term structures.

A morphism is a chain map (f0, f1) together with a bilinear homotopy f2
measuring the failure to preserve brackets on the nose;  f2 must also be
compatible with the alternators and Jacobiators of its endpoints.  A
2-morphism between parallel morphisms is a degree -1 map theta that is a
chain homotopy from one chain map to the other and relates the two bracket
homotopies, with the quadratic correction term [theta(x), theta(y)]' taken in
the derived sense [d'theta(x), theta(y)]'.

Composition formulas:

* morphisms:  (g . f)^2(x, y) = g2(f0 x, f0 y) + g1(f2(x, y))
* vertical:   theta = theta1 + theta2  (arrow parts add)
* horizontal: theta(x) = psi(f0 x) + k1(theta_F(x)),  obtained by expanding
  the whiskered composite on the categorical side; the tests validate the
  formula against that categorical expansion.

A morphism is an equivalence exactly when its chain map part is a
quasi-isomorphism.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import dkcore, exactla as xla
from .dkcore import CompositionError
from .el2 import EL2Algebra
from .exactla import ShapeError
from .report import CheckReport, collect_tensor_violations


@dataclass(frozen=True, eq=False)
class ELMorphism:
    """(f0, f1, f2): src -> dst."""

    src: EL2Algebra
    dst: EL2Algebra
    f0: np.ndarray  # (dst.n0, src.n0)
    f1: np.ndarray  # (dst.n1, src.n1)
    f2: np.ndarray  # (dst.n1, src.n0, src.n0)

    def __post_init__(self) -> None:
        shapes = {
            "f0": (self.dst.complex.n0, self.src.complex.n0),
            "f1": (self.dst.complex.n1, self.src.complex.n1),
            "f2": (self.dst.complex.n1, self.src.complex.n0, self.src.complex.n0),
        }
        for name, want in shapes.items():
            arr = np.asarray(getattr(self, name))
            if arr.shape != want:
                raise ShapeError(f"{name} has shape {arr.shape}, expected {want}")
            object.__setattr__(self, name, xla.freeze(np.array(arr, dtype=object, copy=True)))

    @property
    def chain_map(self) -> dkcore.ChainMap:
        return dkcore.ChainMap(self.src.complex, self.dst.complex, self.f0, self.f1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ELMorphism):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and xla.arrays_equal(self.f0, other.f0)
            and xla.arrays_equal(self.f1, other.f1)
            and xla.arrays_equal(self.f2, other.f2)
        )

    def __hash__(self) -> int:  # pragma: no cover
        return hash((self.src.complex.n0, self.dst.complex.n0))


def identity_morphism(e: EL2Algebra) -> ELMorphism:
    n0, n1 = e.complex.n0, e.complex.n1
    return ELMorphism(e, e, xla.identity(n0), xla.identity(n1), xla.zeros(n1, n0, n0))


def check_morphism(m: ELMorphism, *, stop_after: Optional[int] = None) -> CheckReport:
    """All defining identities of a morphism on basis tuples: the chain-map
    condition, the three bracket-homotopy conditions, and compatibility with
    the alternators and Jacobiators of the endpoints."""
    report = CheckReport()
    src, dst = m.src, m.dst
    d, dp = src.complex.d, dst.complex.d
    f0, f1, f2 = m.f0, m.f1, m.f2

    r = np.dot(f0, d) - np.dot(dp, f1)
    if collect_tensor_violations(report, "chain-map", r, stop_after=stop_after):
        return report

    # [f0 x, f0 y]' - f0[x, y] = d' f2(x, y)
    b00_ff = xla.precompose(xla.precompose(dst.b00, 1, f0), 2, f0)
    r = b00_ff - xla.postcompose(f0, src.b00) - xla.postcompose(dp, f2)
    if collect_tensor_violations(report, "bracket.00", r, stop_after=stop_after):
        return report

    # [f1 a, f0 y]' - f1[a, y] = f2(da, y)
    b10_ff = xla.precompose(xla.precompose(dst.b10, 1, f1), 2, f0)
    f2_da = np.moveaxis(np.tensordot(f2, d, axes=([1], [0])), 2, 1)
    r = b10_ff - xla.postcompose(f1, src.b10) - f2_da
    if collect_tensor_violations(report, "bracket.10", r, stop_after=stop_after):
        return report

    # [f0 x, f1 b]' - f1[x, b] = f2(x, db)
    b01_ff = xla.precompose(xla.precompose(dst.b01, 1, f0), 2, f1)
    f2_db = np.tensordot(f2, d, axes=([2], [0]))
    r = b01_ff - xla.postcompose(f1, src.b01) - f2_db
    if collect_tensor_violations(report, "bracket.01", r, stop_after=stop_after):
        return report

    # <f0 x, f0 y>' - f1<x, y> = f2(x, y) + f2(y, x)
    alt_ff = xla.precompose(xla.precompose(dst.alt, 1, f0), 2, f0)
    r = alt_ff - xla.postcompose(f1, src.alt) - f2 - f2.swapaxes(1, 2)
    if collect_tensor_violations(report, "alternator", r, stop_after=stop_after):
        return report

    # <f0 x, f0 y, f0 z>' - f1<x, y, z> =
    #   [f0x, f2(y,z)]' - [f0y, f2(x,z)]' - [f2(x,y), f0z]'
    #   - f2([x,y], z) - f2(y, [x,z]) + f2(x, [y,z])
    jac_ff = xla.precompose(xla.precompose(xla.precompose(dst.jac, 1, f0), 2, f0), 3, f0)
    lhs = jac_ff - xla.postcompose(f1, src.jac)
    b01p_f0 = xla.precompose(dst.b01, 1, f0)
    t1 = np.tensordot(b01p_f0, f2, axes=([2], [0]))                       # (k, x, y, z)
    t2 = np.tensordot(b01p_f0, f2, axes=([2], [0])).swapaxes(1, 2)         # [f0y, f2(x,z)]
    b10p_f0 = xla.precompose(dst.b10, 2, f0)
    t3 = np.moveaxis(np.tensordot(b10p_f0, f2, axes=([1], [0])), 1, 3)     # (k, x, y, z)
    t4 = np.moveaxis(np.tensordot(f2, src.b00, axes=([1], [0])), (2, 3), (1, 2))
    t5 = np.swapaxes(np.tensordot(f2, src.b00, axes=([2], [0])), 1, 2)
    t6 = np.tensordot(f2, src.b00, axes=([2], [0]))
    r = lhs - (t1 - t2 - t3 - t4 - t5 + t6)
    collect_tensor_violations(report, "jacobiator", r, stop_after=stop_after)
    return report


def compose(g: ELMorphism, f: ELMorphism) -> ELMorphism:
    """(g . f)^2(x, y) = g2(f0 x, f0 y) + g1 f2(x, y)."""
    if f.dst != g.src:
        raise CompositionError("morphism endpoints do not match")
    f2 = (
        xla.precompose(xla.precompose(g.f2, 1, f.f0), 2, f.f0)
        + xla.postcompose(g.f1, f.f2)
    )
    return ELMorphism(f.src, g.dst, np.dot(g.f0, f.f0), np.dot(g.f1, f.f1), f2)


def is_equivalence(m: ELMorphism) -> bool:
    return dkcore.is_quasi_iso(m.chain_map)


@dataclass(frozen=True, eq=False)
class ELTwoMorphism:
    """theta: src => dst between parallel morphisms."""

    src: ELMorphism
    dst: ELMorphism
    theta: np.ndarray  # (dst-complex n1, src-complex n0)

    def __post_init__(self) -> None:
        if self.src.src != self.dst.src or self.src.dst != self.dst.dst:
            raise CompositionError("2-morphism endpoints are not parallel")
        want = (self.src.dst.complex.n1, self.src.src.complex.n0)
        arr = np.asarray(self.theta)
        if arr.shape != want:
            raise ShapeError(f"theta has shape {arr.shape}, expected {want}")
        object.__setattr__(self, "theta", xla.freeze(np.array(arr, dtype=object, copy=True)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ELTwoMorphism):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and xla.arrays_equal(self.theta, other.theta)
        )

    def __hash__(self) -> int:  # pragma: no cover
        return hash(self.theta.shape)


def identity_2morphism(m: ELMorphism) -> ELTwoMorphism:
    return ELTwoMorphism(m, m, xla.zeros(m.dst.complex.n1, m.src.complex.n0))


def check_2morphism(t: ELTwoMorphism, *, stop_after: Optional[int] = None) -> CheckReport:
    """theta is a chain homotopy from the source to the target chain map, and

        f2(x,y) - g2(x,y) = [f0x, theta y]' + [theta x, f0y]'
                            - theta([x,y]) - [theta x, theta y]'

    with the last bracket the derived one, [d'theta x, theta y]'."""
    report = CheckReport()
    f, g = t.src, t.dst
    theta = t.theta
    src = f.src
    dst = f.dst
    d, dp = src.complex.d, dst.complex.d

    r = g.f0 - f.f0 - np.dot(dp, theta)
    if collect_tensor_violations(report, "homotopy.objects", r, stop_after=stop_after):
        return report
    r = g.f1 - f.f1 - np.dot(theta, d)
    if collect_tensor_violations(report, "homotopy.parts", r, stop_after=stop_after):
        return report

    t1 = np.tensordot(xla.precompose(dst.b01, 1, f.f0), theta, axes=([2], [0]))
    t2 = np.swapaxes(
        np.tensordot(xla.precompose(dst.b10, 2, f.f0), theta, axes=([1], [0])), 1, 2
    )
    # t2 axes: b10'[k, m, y-slot after f0] theta[m, x] -> (k, y, x) -> (k, x, y)
    t3 = xla.postcompose(theta, src.b00)
    dtheta = np.dot(dp, theta)
    t4 = np.tensordot(
        np.tensordot(dst.b01, dtheta, axes=([1], [0])), theta, axes=([1], [0])
    )
    # t4 axes: b01'[k, m, b] dtheta[m, x] -> (k, b, x); then theta[b, y] -> (k, x, y)
    r = f.f2 - g.f2 - t1 - t2 + t3 + t4
    collect_tensor_violations(report, "homotopy.bracket", r, stop_after=stop_after)
    return report


def vertical_compose(t2: ELTwoMorphism, t1: ELTwoMorphism) -> ELTwoMorphism:
    """Arrow parts add: theta = theta1 + theta2."""
    if t1.dst != t2.src:
        raise CompositionError("2-morphisms are not vertically composable")
    return ELTwoMorphism(t1.src, t2.dst, t1.theta + t2.theta)


def inverse_2morphism(t: ELTwoMorphism) -> ELTwoMorphism:
    return ELTwoMorphism(t.dst, t.src, -t.theta)


def horizontal_compose(tG: ELTwoMorphism, tF: ELTwoMorphism) -> ELTwoMorphism:
    """For tF: F => G (between L -> L') and tG: H => K (between L' -> L''),
    the composite H.F => K.G has theta(x) = psi(f0 x) + k1(theta_F(x))."""
    if tF.src.dst != tG.src.src:
        raise CompositionError("2-morphisms do not share the middle structure")
    F, K = tF.src, tG.dst
    theta = np.dot(tG.theta, F.f0) + np.dot(K.f1, tF.theta)
    return ELTwoMorphism(compose(tG.src, tF.src), compose(tG.dst, tF.dst), theta)


def whisker_right(m: ELMorphism, t: ELTwoMorphism) -> ELTwoMorphism:
    """t * m: precompose both sides of t with m."""
    return horizontal_compose(t, identity_2morphism(m))


def whisker_left(t: ELTwoMorphism, m: ELMorphism) -> ELTwoMorphism:
    """m * t: postcompose both sides of t with m."""
    return horizontal_compose(identity_2morphism(m), t)
