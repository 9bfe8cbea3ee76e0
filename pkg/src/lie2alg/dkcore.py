"""Two-term complexes, linear categories and the normalization equivalence.

A two-term complex ``C^-1 --d--> C^0`` corresponds to a linear category whose
objects form C^0 and whose arrows are pairs (x, a) with source x and target
x + d a: an arrow bold-a : x -> y decomposes uniquely as 1_x + a with arrow
part a in ker(source).  Composition adds arrow parts, which makes every
linear category a groupoid, with (x + da, -a) inverse to (x, a).

The two constructions ``gamma`` (complex -> category) and ``normalize``
(category -> complex) are mutually inverse on this representation, the
finite-dimensional two-term case of the Dold-Kan correspondence.

This module also houses bilinear bracket data on a complex (the chain-level
avatar of a bilinear functor on the category, including the derived bracket
of two arrow parts), quasi-isomorphism detection, and the deterministic
Hodge-style splitting used by homotopy transfer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import exactla as xla
from .exactla import ShapeError, Subspace
from .report import CheckReport, collect_tensor_violations


class CompositionError(ValueError):
    """Arrows or maps are not composable."""


class ChainMapError(ValueError):
    """Matrices do not commute with the differentials."""


@dataclass(frozen=True, eq=False)
class TwoTermComplex:
    """C^-1 --d--> C^0 with chosen bases; d is an (n0 x n1) matrix."""

    n0: int
    n1: int
    d: np.ndarray

    def __post_init__(self) -> None:
        d = np.asarray(self.d)
        if d.shape != (self.n0, self.n1):
            raise ShapeError(f"d has shape {d.shape}, expected ({self.n0}, {self.n1})")
        object.__setattr__(self, "d", xla.freeze(np.array(d, dtype=object, copy=True)))

    @property
    def is_skeletal(self) -> bool:
        return xla.is_zero(self.d)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoTermComplex):
            return NotImplemented
        return (
            self.n0 == other.n0
            and self.n1 == other.n1
            and xla.arrays_equal(self.d, other.d)
        )

    def __hash__(self) -> int:  # pragma: no cover
        return hash((self.n0, self.n1))


def zero_complex(n0: int = 0, n1: int = 0) -> TwoTermComplex:
    return TwoTermComplex(n0, n1, xla.zeros(n0, n1))


@dataclass(frozen=True)
class Arrow:
    """An arrow (x, a): x -> x + d a of a linear category, stored as its
    source object and arrow part."""

    obj: np.ndarray
    part: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "obj", xla.freeze(np.array(self.obj, dtype=object, copy=True)))
        object.__setattr__(self, "part", xla.freeze(np.array(self.part, dtype=object, copy=True)))

    def __add__(self, other: "Arrow") -> "Arrow":
        return Arrow(self.obj + other.obj, self.part + other.part)

    def __sub__(self, other: "Arrow") -> "Arrow":
        return Arrow(self.obj - other.obj, self.part - other.part)

    def __neg__(self) -> "Arrow":
        return Arrow(-self.obj, -self.part)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Arrow):
            return NotImplemented
        return xla.arrays_equal(self.obj, other.obj) and xla.arrays_equal(self.part, other.part)

    def __hash__(self) -> int:  # pragma: no cover
        return hash((self.obj.shape, self.part.shape))


@dataclass(frozen=True, eq=False)
class LinearCategory:
    """The linear groupoid with object space Q^objects_dim and arrows
    (x, a) with target x + t_matrix a."""

    objects_dim: int
    arrow_part_dim: int
    t_matrix: np.ndarray

    def __post_init__(self) -> None:
        t = np.asarray(self.t_matrix)
        if t.shape != (self.objects_dim, self.arrow_part_dim):
            raise ShapeError(
                f"target matrix shape {t.shape}, expected ({self.objects_dim}, {self.arrow_part_dim})"
            )
        object.__setattr__(self, "t_matrix", xla.freeze(np.array(t, dtype=object, copy=True)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCategory):
            return NotImplemented
        return (
            self.objects_dim == other.objects_dim
            and self.arrow_part_dim == other.arrow_part_dim
            and xla.arrays_equal(self.t_matrix, other.t_matrix)
        )

    def __hash__(self) -> int:  # pragma: no cover
        return hash((self.objects_dim, self.arrow_part_dim))

    def source(self, f: Arrow) -> np.ndarray:
        return f.obj

    def target(self, f: Arrow) -> np.ndarray:
        return xla.freeze(f.obj + np.dot(self.t_matrix, f.part))

    def identity(self, x: np.ndarray) -> Arrow:
        return Arrow(x, xla.zeros(self.arrow_part_dim))

    def inverse(self, f: Arrow) -> Arrow:
        return Arrow(self.target(f), -f.part)


def gamma(c: TwoTermComplex) -> LinearCategory:
    """The linear category of a two-term complex: objects C^0, arrows
    C^0 + C^-1 with t(x, a) = x + d a."""
    return LinearCategory(c.n0, c.n1, c.d)


def normalize(v: LinearCategory) -> TwoTermComplex:
    """Normalized complex of a linear category: degree 0 the objects, degree
    -1 the arrow parts (the kernel of the source map), differential the
    restriction of the target map."""
    return TwoTermComplex(v.objects_dim, v.arrow_part_dim, v.t_matrix)


def compose_arrows(v: LinearCategory, g: Arrow, f: Arrow) -> Arrow:
    """The composite g after f; defined when target(f) = source(g), and then
    equal to (source(f), part(f) + part(g))."""
    if not xla.arrays_equal(v.target(f), g.obj):
        raise CompositionError("target of the first arrow differs from source of the second")
    return Arrow(f.obj, f.part + g.part)


# ---------------------------------------------------------------------------
# Chain maps and homotopies
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ChainMap:
    """A chain map (f0, f1): src -> dst, with f0 d = d' f1."""

    src: TwoTermComplex
    dst: TwoTermComplex
    f0: np.ndarray
    f1: np.ndarray

    def __post_init__(self) -> None:
        f0 = np.asarray(self.f0)
        f1 = np.asarray(self.f1)
        if f0.shape != (self.dst.n0, self.src.n0):
            raise ShapeError(f"f0 shape {f0.shape}, expected ({self.dst.n0}, {self.src.n0})")
        if f1.shape != (self.dst.n1, self.src.n1):
            raise ShapeError(f"f1 shape {f1.shape}, expected ({self.dst.n1}, {self.src.n1})")
        object.__setattr__(self, "f0", xla.freeze(np.array(f0, dtype=object, copy=True)))
        object.__setattr__(self, "f1", xla.freeze(np.array(f1, dtype=object, copy=True)))
        if not xla.arrays_equal(np.dot(self.f0, self.src.d), np.dot(self.dst.d, self.f1)):
            raise ChainMapError("f0 d != d' f1")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainMap):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and xla.arrays_equal(self.f0, other.f0)
            and xla.arrays_equal(self.f1, other.f1)
        )

    def __hash__(self) -> int:  # pragma: no cover
        return hash((self.src.n0, self.src.n1, self.dst.n0, self.dst.n1))


def identity_chain_map(c: TwoTermComplex) -> ChainMap:
    return ChainMap(c, c, xla.identity(c.n0), xla.identity(c.n1))


def compose_chain_maps(g: ChainMap, f: ChainMap) -> ChainMap:
    if f.dst != g.src:
        raise CompositionError("chain maps are not composable")
    return ChainMap(f.src, g.dst, np.dot(g.f0, f.f0), np.dot(g.f1, f.f1))


@dataclass(frozen=True, eq=False)
class ChainHomotopy:
    """A degree -1 map h: C^0 -> C'^-1; its meaning is fixed by the use site."""

    h: np.ndarray

    def __post_init__(self) -> None:
        h = np.asarray(self.h)
        if h.ndim != 2:
            raise ShapeError("homotopy must be a matrix")
        object.__setattr__(self, "h", xla.freeze(np.array(h, dtype=object, copy=True)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChainHomotopy):
            return NotImplemented
        return xla.arrays_equal(self.h, other.h)

    def __hash__(self) -> int:  # pragma: no cover
        return hash(self.h.shape)


# ---------------------------------------------------------------------------
# Bilinear bracket data and the derived bracket on arrows
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class BilinearBracket:
    """Chain-level data of a bilinear functor on gamma(complex).

    b00: C0 x C0 -> C0, b01: C0 x C-1 -> C-1, b10: C-1 x C0 -> C-1, each
    stored with the output coordinate on axis 0.  The bracket of two arrow
    parts is derived: [a, b] = [da, b], evaluated through b01.
    """

    complex: TwoTermComplex
    b00: np.ndarray
    b01: np.ndarray
    b10: np.ndarray

    def __post_init__(self) -> None:
        n0, n1 = self.complex.n0, self.complex.n1
        shapes = {"b00": (n0, n0, n0), "b01": (n1, n0, n1), "b10": (n1, n1, n0)}
        for name, want in shapes.items():
            arr = np.asarray(getattr(self, name))
            if arr.shape != want:
                raise ShapeError(f"{name} has shape {arr.shape}, expected {want}")
            object.__setattr__(self, name, xla.freeze(np.array(arr, dtype=object, copy=True)))

    def on_objects(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return xla.apply_multilinear(self.b00, x, y)

    def derived(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """[a, b] = [da, b] for two arrow parts."""
        return xla.apply_multilinear(self.b01, np.dot(self.complex.d, a), b)

    def on_arrows(self, f: Arrow, g: Arrow) -> Arrow:
        """[(x,a), (y,b)] = ([x,y], [x,b] + [a,y] + [a,b])."""
        x, a = f.obj, f.part
        y, b = g.obj, g.part
        obj = self.on_objects(x, y)
        part = (
            xla.apply_multilinear(self.b01, x, b)
            + xla.apply_multilinear(self.b10, a, y)
            + self.derived(a, b)
        )
        return Arrow(obj, part)


def functor_bracket_on_arrows(bracket: BilinearBracket, f: Arrow, g: Arrow) -> Arrow:
    return bracket.on_arrows(f, g)


def crossed_module_report(bracket: BilinearBracket, stop_after: Optional[int] = None) -> CheckReport:
    """The four identities a bilinear functor imposes on its components,
    evaluated on basis elements:

        d[x,b] = [x,db]   d[a,y] = [da,y]   [da,b] = [a,db]   d[a,b] = [da,db]
    """
    c = bracket.complex
    d, b00, b01, b10 = c.d, bracket.b00, bracket.b01, bracket.b10
    report = CheckReport()

    r = xla.postcompose(d, b01) - xla.precompose(b00, 2, d)
    if collect_tensor_violations(report, "d[x,b]=[x,db]", r, stop_after=stop_after):
        return report

    lhs = xla.postcompose(d, b10)
    rhs = np.moveaxis(np.tensordot(b00, d, axes=([1], [0])), 2, 1)
    if collect_tensor_violations(report, "d[a,y]=[da,y]", lhs - rhs, stop_after=stop_after):
        return report

    da_b = np.moveaxis(np.tensordot(b01, d, axes=([1], [0])), 2, 1)
    a_db = np.tensordot(b10, d, axes=([2], [0]))
    if collect_tensor_violations(report, "[da,b]=[a,db]", da_b - a_db, stop_after=stop_after):
        return report

    lhs = xla.postcompose(d, xla.freeze(da_b))
    # b00(da, db): contract both input slots of b00 with d; axes come out as
    # (output, a, b) directly.
    rhs = np.tensordot(np.tensordot(b00, d, axes=([1], [0])), d, axes=([1], [0]))
    if collect_tensor_violations(report, "d[a,b]=[da,db]", lhs - rhs, stop_after=stop_after):
        return report
    return report


# ---------------------------------------------------------------------------
# Cohomology of a two-term complex, quasi-isomorphisms, Hodge splitting
# ---------------------------------------------------------------------------

def h_minus1_basis(c: TwoTermComplex) -> Subspace:
    """H^-1 = ker d as a subspace of C^-1."""
    return xla.kernel_basis(c.d)


def h0_data(c: TwoTermComplex) -> tuple[int, np.ndarray, Subspace]:
    """H^0 = C^0 / im d: dimension, representative columns, and im d."""
    im = xla.image_basis(c.d)
    dim, reps = xla.quotient(xla.full_space(c.n0), im)
    return dim, reps, im


def is_quasi_iso(f: ChainMap) -> bool:
    """True when the induced maps on H^0 and H^-1 are isomorphisms."""
    # induced map on H^-1 = ker d
    ker_src = h_minus1_basis(f.src)
    ker_dst = h_minus1_basis(f.dst)
    if ker_src.dim != ker_dst.dim:
        return False
    mat1 = np.empty((ker_dst.dim, ker_src.dim), dtype=object)
    for j in range(ker_src.dim):
        image = np.dot(f.f1, ker_src.basis[:, j])
        coords = xla.membership(ker_dst, image)
        if coords is None:  # not a chain map image; cannot happen for valid maps
            return False
        mat1[:, j] = coords
    if xla.rank(mat1) != ker_dst.dim:
        return False

    # induced map on H^0 = C^0 / im d
    dim_src, reps_src, _ = h0_data(f.src)
    dim_dst, reps_dst, im_dst = h0_data(f.dst)
    if dim_src != dim_dst:
        return False
    if dim_dst == 0:
        return True
    basis = np.column_stack([im_dst.basis, reps_dst]) if im_dst.dim else reps_dst
    mat0 = np.empty((dim_dst, dim_src), dtype=object)
    for j in range(dim_src):
        image = np.dot(f.f0, reps_src[:, j])
        coords = xla.solve(basis, image)
        if coords is None:
            return False
        mat0[:, j] = coords[im_dst.dim:]
    return xla.rank(mat0) == dim_dst


@dataclass(frozen=True)
class HodgeData:
    """Deterministic splitting of a two-term complex onto its cohomology.

    include . project = identity on the skeletal complex, and on the original
    complex 1 - include . project equals d h in degree 0 and h d in degree -1.
    The side conditions h . include = 0 and project . h = 0 also hold.
    """

    skeletal: TwoTermComplex
    include: ChainMap
    project: ChainMap
    homotopy: ChainHomotopy


def hodge_decompose(c: TwoTermComplex) -> HodgeData:
    ker = h_minus1_basis(c)                 # basis K of ker d in C^-1
    h0_dim, h0_reps, im = h0_data(c)        # complement reps of im d in C^0

    # complement of ker d inside C^-1: coordinate vectors at the pivot
    # columns of d
    _, pivots = xla.rref(c.d)
    compl = np.empty((c.n1, len(pivots)), dtype=object)
    compl[...] = xla.ZERO
    for k, j in enumerate(pivots):
        compl[j, k] = xla.ONE

    skeletal = TwoTermComplex(h0_dim, ker.dim, xla.zeros(h0_dim, ker.dim))

    i0 = h0_reps if h0_dim else xla.zeros(c.n0, 0)
    i1 = ker.basis

    # p0: coordinates along the splitting C^0 = im d + reps
    basis0 = np.column_stack([im.basis, i0]) if (im.dim and h0_dim) else (i0 if h0_dim else im.basis)
    p0 = np.empty((h0_dim, c.n0), dtype=object)
    im_coords = np.empty((im.dim, c.n0), dtype=object)
    for j in range(c.n0):
        e = xla.zeros(c.n0).copy()
        e[j] = xla.ONE
        coords = xla.solve(basis0, e) if basis0.size or c.n0 == 0 else xla.zeros(0)
        if coords is None:
            raise AssertionError("splitting basis failed to span C^0")
        im_coords[:, j] = coords[: im.dim]
        p0[:, j] = coords[im.dim :]

    # p1: coordinates along C^-1 = ker d + complement
    basis1 = np.column_stack([i1, compl]) if (ker.dim and len(pivots)) else (i1 if ker.dim else compl)
    p1 = np.empty((ker.dim, c.n1), dtype=object)
    compl_coords = np.empty((len(pivots), c.n1), dtype=object)
    for j in range(c.n1):
        e = xla.zeros(c.n1).copy()
        e[j] = xla.ONE
        coords = xla.solve(basis1, e) if basis1.size or c.n1 == 0 else xla.zeros(0)
        if coords is None:
            raise AssertionError("splitting basis failed to span C^-1")
        p1[:, j] = coords[: ker.dim]
        compl_coords[:, j] = coords[ker.dim :]

    # h: invert d on the complement of ker d, applied to the im-d component.
    # d restricted to the complement is an isomorphism onto im d, and the
    # im-d component of e_j is im.basis @ im_coords[:, j].
    d_on_compl = np.dot(c.d, compl)  # (n0 x r), columns a basis of im d
    h = np.empty((c.n1, c.n0), dtype=object)
    for j in range(c.n0):
        target = np.dot(im.basis, im_coords[:, j]) if im.dim else xla.zeros(c.n0)
        coords = xla.solve(d_on_compl, target)
        if coords is None:
            raise AssertionError("failed to invert d on the pivot complement")
        h[:, j] = np.dot(compl, coords) if len(pivots) else xla.zeros(c.n1)

    include = ChainMap(skeletal, c, i0, i1)
    project = ChainMap(c, skeletal, p0, p1)
    return HodgeData(skeletal, include, project, ChainHomotopy(h))
