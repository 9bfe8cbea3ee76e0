"""Exact rational linear and multilinear algebra.

Everything in this package is computed over the rationals, with scalars
represented by :class:`fractions.Fraction` stored in numpy arrays of dtype
``object``.  Matrices are 2-d arrays acting on column vectors; a multilinear
map is stored as a dense array whose axis 0 indexes the output coordinate and
whose remaining axes index the input slots, so ``T[k, i, j]`` is the k-th
coordinate of the map applied to the pair of basis vectors ``(e_i, e_j)``.

All operations are pure and deterministic: row reduction scans columns left to
right and picks the first usable pivot, kernel vectors are enumerated by
increasing free column, and quotient representatives are produced by greedy
pivot extension.  Arrays returned by this module are frozen (non-writeable).

Zero-dimensional spaces are legal everywhere; contractions over an empty axis
produce integer zeros, which compare equal to ``Fraction(0)`` and mix safely
with exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

Rat = Fraction
Scalar = Union[int, str, Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class ExactLinearAlgebraError(ValueError):
    """Base class for errors raised by this module."""


class ShapeError(ExactLinearAlgebraError):
    """Operands have incompatible shapes or dimensions."""


class SubspaceError(ExactLinearAlgebraError):
    """A subspace argument violates a containment precondition."""


def rat(value: Scalar) -> Fraction:
    """Coerce ``value`` to a reduced Fraction.  Accepts ints, Fractions and
    strings like ``"3"`` or ``"-3/4"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ShapeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ShapeError(f"invalid rational literal {value!r}: {exc}") from exc
    raise ShapeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Scalar) -> str:
    """Canonical text form: bare integer when the denominator is 1."""
    q = rat(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def freeze(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def zeros(*shape: int) -> np.ndarray:
    out = np.empty(shape, dtype=object)
    out[...] = ZERO
    return freeze(out)


def vector(entries: Iterable[Scalar]) -> np.ndarray:
    data = [rat(x) for x in entries]
    out = np.empty(len(data), dtype=object)
    for i, x in enumerate(data):
        out[i] = x
    return freeze(out)


def matrix(rows: Sequence[Sequence[Scalar]]) -> np.ndarray:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    out = np.empty((nrows, ncols), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != ncols:
            raise ShapeError("ragged matrix rows")
        for j, x in enumerate(row):
            out[i, j] = rat(x)
    return freeze(out)


def tensor(shape: Sequence[int], entries: Iterable[Scalar]) -> np.ndarray:
    """Dense tensor from a flat entry sequence in row-major (lexicographic)
    index order."""
    shape = tuple(int(s) for s in shape)
    data = [rat(x) for x in entries]
    size = 1
    for s in shape:
        size *= s
    if len(data) != size:
        raise ShapeError(f"expected {size} entries for shape {shape}, got {len(data)}")
    out = np.empty(shape, dtype=object)
    flat = out.reshape(-1)
    for i, x in enumerate(data):
        flat[i] = x
    return freeze(out)


def identity(n: int) -> np.ndarray:
    out = np.empty((n, n), dtype=object)
    out[...] = ZERO
    for i in range(n):
        out[i, i] = ONE
    return freeze(out)


def as_exact(a: np.ndarray) -> np.ndarray:
    """Copy ``a`` into a frozen object array of Fractions."""
    arr = np.asarray(a)
    out = np.empty(arr.shape, dtype=object)
    flat_in = arr.reshape(-1)
    flat_out = out.reshape(-1)
    for i in range(flat_in.size):
        flat_out[i] = rat(flat_in[i])
    return freeze(out)


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in np.asarray(a).reshape(-1))


def arrays_equal(a: np.ndarray, b: np.ndarray) -> bool:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        return False
    return all(x == y for x, y in zip(a.reshape(-1), b.reshape(-1)))


# ---------------------------------------------------------------------------
# Row reduction and derived computations
# ---------------------------------------------------------------------------

def rref(m: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Reduced row-echelon form and pivot column indices.

    Deterministic: columns are scanned left to right and the first row with a
    nonzero entry at or below the current row is used as the pivot.
    """
    m = np.asarray(m)
    if m.ndim != 2:
        raise ShapeError("rref expects a matrix")
    nrows, ncols = m.shape
    r = np.array(m, dtype=object, copy=True)
    pivots: list[int] = []
    row = 0
    for col in range(ncols):
        if row >= nrows:
            break
        pivot_row = None
        for i in range(row, nrows):
            if r[i, col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != row:
            r[[row, pivot_row], :] = r[[pivot_row, row], :]
        inv = ONE / rat(r[row, col])
        if inv != 1:
            r[row, :] = r[row, :] * inv
        for i in range(nrows):
            if i != row and r[i, col] != 0:
                r[i, :] = r[i, :] - r[i, col] * r[row, :]
        pivots.append(col)
        row += 1
    return freeze(r), tuple(pivots)


def rank(m: np.ndarray) -> int:
    return len(rref(m)[1])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^ambient_dim given by independent basis columns."""

    ambient_dim: int
    basis: np.ndarray  # shape (ambient_dim, dim)

    def __post_init__(self) -> None:
        b = np.asarray(self.basis)
        if b.ndim != 2 or b.shape[0] != self.ambient_dim:
            raise ShapeError(
                f"basis shape {b.shape} does not match ambient dimension {self.ambient_dim}"
            )
        if rank(b) != b.shape[1]:
            raise SubspaceError("basis columns are linearly dependent")
        object.__setattr__(self, "basis", freeze(np.array(b, dtype=object, copy=True)))

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and arrays_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:  # pragma: no cover - subspaces are not dict keys
        return hash((self.ambient_dim, self.dim))


def full_space(n: int) -> Subspace:
    return Subspace(n, identity(n))


def zero_space(n: int) -> Subspace:
    return Subspace(n, zeros(n, 0))


def kernel_basis(m: np.ndarray) -> Subspace:
    """Basis of the null space {v : m v = 0}, one column per free variable,
    enumerated by increasing free column index."""
    m = np.asarray(m)
    nrows, ncols = m.shape
    r, pivots = rref(m)
    free = [j for j in range(ncols) if j not in pivots]
    basis = np.empty((ncols, len(free)), dtype=object)
    basis[...] = ZERO
    for col_idx, j in enumerate(free):
        basis[j, col_idx] = ONE
        for i, pc in enumerate(pivots):
            basis[pc, col_idx] = -rat(r[i, j])
    return Subspace(ncols, basis)


def image_basis(m: np.ndarray) -> Subspace:
    """Column space basis: the original columns sitting at the pivot indices."""
    m = np.asarray(m)
    _, pivots = rref(m)
    basis = np.empty((m.shape[0], len(pivots)), dtype=object)
    for k, j in enumerate(pivots):
        basis[:, k] = m[:, j]
    return Subspace(m.shape[0], basis)


def solve(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """One exact solution of ``a x = b``, or None when inconsistent.

    Free variables are set to zero, so the answer is deterministic.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 1 or a.shape[0] != b.shape[0]:
        raise ShapeError(f"cannot solve shapes {a.shape} x = {b.shape}")
    nrows, ncols = a.shape
    aug = np.empty((nrows, ncols + 1), dtype=object)
    aug[:, :ncols] = a
    aug[:, ncols] = b
    r, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = np.empty(ncols, dtype=object)
    x[...] = ZERO
    for i, pc in enumerate(pivots):
        x[pc] = rat(r[i, ncols])
    return freeze(x)


def inverse(m: np.ndarray) -> np.ndarray:
    """Exact inverse of a square matrix; raises on singular input."""
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError("inverse expects a square matrix")
    n = m.shape[0]
    aug = np.empty((n, 2 * n), dtype=object)
    aug[:, :n] = m
    aug[:, n:] = identity(n)
    r, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise SubspaceError("matrix is singular")
    return freeze(np.array(r[:, n:], dtype=object, copy=True))


def membership(s: Subspace, v: np.ndarray) -> Optional[np.ndarray]:
    """Coordinates of ``v`` in the basis of ``s`` when v lies in the span,
    otherwise None."""
    v = np.asarray(v)
    if v.shape != (s.ambient_dim,):
        raise ShapeError(
            f"vector of length {v.shape} against ambient dimension {s.ambient_dim}"
        )
    return solve(s.basis, v)


def contains(s: Subspace, v: np.ndarray) -> bool:
    return membership(s, v) is not None


def subspace_leq(a: Subspace, b: Subspace) -> bool:
    """True when span(a) is contained in span(b)."""
    if a.ambient_dim != b.ambient_dim:
        raise ShapeError("subspaces of different ambient spaces")
    return all(contains(b, a.basis[:, j]) for j in range(a.dim))


def subspaces_equal(a: Subspace, b: Subspace) -> bool:
    return subspace_leq(a, b) and subspace_leq(b, a)


def quotient(z: Subspace, b: Subspace) -> tuple[int, np.ndarray]:
    """Dimension of z/b and representative vectors completing a basis of b to
    one of z, obtained by greedy pivot extension through z's basis columns."""
    if z.ambient_dim != b.ambient_dim:
        raise ShapeError("quotient of subspaces in different ambient spaces")
    if not subspace_leq(b, z):
        raise SubspaceError("denominator subspace is not contained in the numerator")
    current = np.array(b.basis, dtype=object, copy=True)
    reps: list[np.ndarray] = []
    for j in range(z.dim):
        candidate = z.basis[:, j]
        if solve(current, candidate) is None:
            reps.append(candidate)
            current = np.column_stack([current, candidate]) if current.size else candidate.reshape(-1, 1)
            if current.ndim == 1:
                current = current.reshape(-1, 1)
    out = np.empty((z.ambient_dim, len(reps)), dtype=object)
    for k, rep in enumerate(reps):
        out[:, k] = rep
    return len(reps), freeze(out)


# ---------------------------------------------------------------------------
# Dense multilinear contraction
# ---------------------------------------------------------------------------

def contract(t: np.ndarray, slot: int, arg: np.ndarray) -> np.ndarray:
    """Contract axis ``slot`` of ``t`` with a vector (removing the axis) or
    with a matrix of shape (slot_dim, k) (replacing the axis by one of size k,
    kept in place)."""
    t = np.asarray(t)
    arg = np.asarray(arg)
    if not 0 <= slot < t.ndim:
        raise ShapeError(f"slot {slot} out of range for shape {t.shape}")
    if arg.ndim == 1:
        if arg.shape[0] != t.shape[slot]:
            raise ShapeError(
                f"slot {slot} has dimension {t.shape[slot]}, vector has {arg.shape[0]}"
            )
        return freeze(np.tensordot(t, arg, axes=([slot], [0])))
    if arg.ndim == 2:
        if arg.shape[0] != t.shape[slot]:
            raise ShapeError(
                f"slot {slot} has dimension {t.shape[slot]}, matrix has {arg.shape[0]} rows"
            )
        res = np.tensordot(t, arg, axes=([slot], [0]))
        return freeze(np.moveaxis(res, -1, slot))
    raise ShapeError("contract expects a vector or matrix argument")


def precompose(t: np.ndarray, slot: int, m: np.ndarray) -> np.ndarray:
    """Plug the linear map ``m`` (rows = slot dimension of t) into input slot
    ``slot`` of the multilinear tensor ``t`` (axis 0 of t is the output)."""
    return contract(t, slot, m)


def postcompose(m: np.ndarray, t: np.ndarray) -> np.ndarray:
    """Apply the linear map ``m`` to the output axis of ``t``."""
    t = np.asarray(t)
    m = np.asarray(m)
    if m.shape[1] != t.shape[0]:
        raise ShapeError(
            f"map with {m.shape[1]} columns cannot act on output of dimension {t.shape[0]}"
        )
    return freeze(np.tensordot(m, t, axes=([1], [0])))


def plug(outer: np.ndarray, slot: int, inner: np.ndarray) -> np.ndarray:
    """Substitute the multilinear tensor ``inner`` into input slot ``slot`` of
    ``outer``; the inner input axes take the slot's position in order."""
    outer = np.asarray(outer)
    inner = np.asarray(inner)
    if not 1 <= slot < outer.ndim:
        raise ShapeError(f"input slot {slot} out of range for shape {outer.shape}")
    if outer.shape[slot] != inner.shape[0]:
        raise ShapeError(
            f"slot {slot} of shape {outer.shape} does not accept output of shape {inner.shape}"
        )
    res = np.tensordot(outer, inner, axes=([slot], [0]))
    # tensordot puts the inner input axes last; rotate them back into place.
    n_out = outer.ndim - 1  # axes of outer remaining
    n_in = inner.ndim - 1
    order = list(range(res.ndim))
    moved = order[:slot] + order[n_out : n_out + n_in] + order[slot:n_out]
    return freeze(np.transpose(res, moved))


def apply_multilinear(t: np.ndarray, *vectors: np.ndarray) -> np.ndarray:
    """Evaluate the multilinear map ``t`` on coordinate vectors."""
    t = np.asarray(t)
    if len(vectors) != t.ndim - 1:
        raise ShapeError(
            f"tensor with {t.ndim - 1} input slots applied to {len(vectors)} vectors"
        )
    out = t
    for v in reversed(vectors):
        v = np.asarray(v)
        if v.shape[0] != out.shape[-1]:
            raise ShapeError("argument length does not match slot dimension")
        out = np.tensordot(out, v, axes=([out.ndim - 1], [0]))
    return freeze(out)
