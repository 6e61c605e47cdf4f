"""Small shared linear-algebra helpers (SVD-based ranks, nullspaces, rounding)."""

import numpy as np

from .errors import RoundingAmbiguous

#: default tolerance for rank decisions and membership residuals
RANK_TOL = 1e-8
#: default tolerance when rounding a float to a nearby integer
INT_TOL = 1e-6
#: default tolerance for subspace equality (symmetric projection residual)
EQ_TOL = 1e-6


def nullspace(a, tol=RANK_TOL):
    """Orthonormal rows spanning ``{x : a @ x = 0}``."""
    a = np.asarray(a, dtype=complex)
    if a.size == 0:
        return np.eye(a.shape[1], dtype=complex)
    _, s, vh = np.linalg.svd(a)
    cutoff = tol * max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return vh[rank:].conj()


def row_space(a, tol=RANK_TOL):
    """Orthonormal rows spanning the row space of ``a``."""
    a = np.asarray(a, dtype=complex)
    if a.size == 0 or a.shape[0] == 0:
        return np.zeros((0, a.shape[1]), dtype=complex)
    _, s, vh = np.linalg.svd(a, full_matrices=False)
    cutoff = tol * max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return vh[:rank]


def column_space(a, tol=RANK_TOL):
    """Orthonormal columns spanning the column space of ``a``."""
    a = np.asarray(a, dtype=complex)
    if a.size == 0 or a.shape[1] == 0:
        return np.zeros((a.shape[0], 0), dtype=complex)
    u, s, _ = np.linalg.svd(a, full_matrices=False)
    cutoff = tol * max(1.0, s[0] if s.size else 0.0)
    rank = int(np.sum(s > cutoff))
    return u[:, :rank]


def round_to_int(x, tol=INT_TOL, what="value"):
    """Round a real number to the nearest integer, or fail loudly."""
    n = int(round(float(x)))
    if abs(x - n) > tol:
        raise RoundingAmbiguous(f"{what} {x!r} is not within {tol} of an integer")
    return n


def round_to_gaussian_int(z, tol=INT_TOL, what="value"):
    """Round a complex number to the nearest Gaussian integer, or fail loudly."""
    z = complex(z)
    re = round_to_int(z.real, tol, what=f"Re {what}")
    im = round_to_int(z.imag, tol, what=f"Im {what}")
    return complex(re, im)


def random_hermitian(dim, rng):
    """A random Hermitian matrix with O(1) entries."""
    x = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (x + x.conj().T) / 2.0


def cluster_real(values, gap):
    """Group sorted real values into clusters separated by more than ``gap``.

    Returns a list of index arrays into the *sorted* order.
    """
    order = np.argsort(values)
    sv = np.asarray(values)[order]
    clusters = []
    start = 0
    for i in range(1, len(sv)):
        if sv[i] - sv[i - 1] > gap:
            clusters.append(order[start:i])
            start = i
    clusters.append(order[start:])
    return clusters


def cluster_complex(values, gap):
    """Group complex values into connected clusters at distance threshold ``gap``.

    Simple union-find; fine for the small spectra that arise here.
    """
    values = np.asarray(values)
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= gap:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    # deterministic ordering: by smallest (re, im) member
    def key(ix):
        zs = [(values[i].real, values[i].imag) for i in ix]
        return min(zs)

    return [np.array(ix) for ix in sorted(groups.values(), key=key)]


def scalar_multiple_of_identity(m, tol=RANK_TOL):
    """Return ``c`` with ``m = c*I`` if it is one (within tol), else ``None``."""
    m = np.asarray(m)
    d = m.shape[0]
    c = np.trace(m) / d
    if np.linalg.norm(m - c * np.eye(d)) <= tol * max(1.0, abs(c) * np.sqrt(d)):
        return complex(c)
    return None
