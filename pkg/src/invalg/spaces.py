"""Subspaces of complex matrix space with Hilbert-Schmidt orthonormal bases.

All membership and equality decisions are residual-based: a matrix belongs to
a subspace when the norm of its component orthogonal to the subspace is small
relative to the matrix norm.
"""

import numpy as np

from ._linalg import EQ_TOL, RANK_TOL, nullspace, row_space


class MatrixSubspace:
    """A subspace of ``rows x cols`` complex matrices.

    The basis is stored flattened as orthonormal rows of ``self.flat`` (the
    Hilbert-Schmidt inner product on matrices is the standard one on the
    flattened vectors).
    """

    def __init__(self, flat, shape):
        self.flat = np.asarray(flat, dtype=complex)
        self.shape = (int(shape[0]), int(shape[1]))
        if self.flat.ndim != 2 or self.flat.shape[1] != self.shape[0] * self.shape[1]:
            raise ValueError("flattened basis has wrong width for shape")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_spanning(cls, mats, shape=None, tol=RANK_TOL):
        mats = [np.asarray(m, dtype=complex) for m in mats]
        if shape is None:
            if not mats:
                raise ValueError("need a shape for an empty spanning set")
            shape = mats[0].shape
        if not mats:
            return cls.zero(shape)
        stacked = np.stack([m.reshape(-1) for m in mats])
        return cls(row_space(stacked, tol), shape)

    @classmethod
    def zero(cls, shape):
        if np.isscalar(shape):
            shape = (shape, shape)
        return cls(np.zeros((0, shape[0] * shape[1]), dtype=complex), shape)

    @classmethod
    def full(cls, shape):
        if np.isscalar(shape):
            shape = (shape, shape)
        return cls(np.eye(shape[0] * shape[1], dtype=complex), shape)

    @classmethod
    def identity_line(cls, d):
        if not np.isscalar(d):
            d = d[0]
        v = np.eye(d, dtype=complex).reshape(1, -1) / np.sqrt(d)
        return cls(v, (d, d))

    # -- basic queries -----------------------------------------------------

    @property
    def dim(self):
        return self.flat.shape[0]

    @property
    def ambient_dim(self):
        if self.shape[0] != self.shape[1]:
            raise ValueError("ambient_dim is only defined for square matrices")
        return self.shape[0]

    def basis(self):
        return self.flat.reshape(-1, *self.shape)

    def project(self, m):
        v = np.asarray(m, dtype=complex).reshape(-1)
        coeff = self.flat.conj() @ v
        return (coeff @ self.flat).reshape(self.shape)

    def contains(self, m, tol=RANK_TOL):
        m = np.asarray(m, dtype=complex)
        norm = np.linalg.norm(m)
        if norm == 0.0:
            return True
        return np.linalg.norm(m - self.project(m)) <= tol * norm

    def contains_space(self, other, tol=EQ_TOL):
        return all(self.contains(b, tol) for b in other.basis())

    def equals(self, other, tol=EQ_TOL):
        if self.shape != other.shape or self.dim != other.dim:
            return False
        return self.contains_space(other, tol) and other.contains_space(self, tol)

    def contains_identity(self, tol=RANK_TOL):
        return self.contains(np.eye(self.ambient_dim), tol)

    # -- lattice / algebra operations --------------------------------------

    def add(self, other, tol=RANK_TOL):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return MatrixSubspace.from_spanning(
            list(self.basis()) + list(other.basis()), self.shape, tol)

    def intersect(self, other, tol=RANK_TOL):
        """Intersection via the nullspace of stacked coordinate equations."""
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        if self.dim == 0 or other.dim == 0:
            return MatrixSubspace.zero(self.shape)
        c1 = self.flat.T          # columns span self (as vectors)
        c2 = other.flat.T
        stacked = np.hstack([c1, -c2])
        null_rows = nullspace(stacked, tol)
        vecs = [c1 @ r[: self.dim] for r in null_rows]
        if not vecs:
            return MatrixSubspace.zero(self.shape)
        return MatrixSubspace.from_spanning(
            [v.reshape(self.shape) for v in vecs], self.shape, tol)

    def is_product_closed(self, tol=RANK_TOL):
        """Whether all pairwise basis products re-project into the space."""
        if self.shape[0] != self.shape[1]:
            raise ValueError("products need square matrices")
        for a in self.basis():
            for b in self.basis():
                if not self.contains(a @ b, tol):
                    return False
        return True

    def fingerprint(self, ndigits=9):
        """Basis-independent sort key: the rounded orthogonal projector."""
        p = self.flat.conj().T @ self.flat
        r = np.round(p.real, ndigits) + 0.0
        i = np.round(p.imag, ndigits) + 0.0
        return np.stack([r, i]).tobytes()


def span_product(s1, s2, tol=RANK_TOL):
    """Span of all pairwise products of basis matrices of two subspaces."""
    if s1.shape[1] != s2.shape[0]:
        raise ValueError("inner dimensions do not match")
    out_shape = (s1.shape[0], s2.shape[1])
    prods = [a @ b for a in s1.basis() for b in s2.basis()]
    return MatrixSubspace.from_spanning(prods, out_shape, tol)


def generated_algebra(space, include_identity=False, tol=RANK_TOL):
    """Smallest product-closed subspace containing ``space``.

    Fixpoint iteration: repeatedly adjoin the span of pairwise products until
    the dimension stabilizes.  Optionally adjoins the identity first.
    """
    d = space.ambient_dim
    cur = space
    if include_identity:
        cur = cur.add(MatrixSubspace.identity_line(d), tol)
    while True:
        nxt = cur.add(span_product(cur, cur, tol), tol)
        if nxt.dim == cur.dim:
            return nxt
        cur = nxt
        if cur.dim > d * d:
            raise RuntimeError("closure exceeded the ambient dimension")
