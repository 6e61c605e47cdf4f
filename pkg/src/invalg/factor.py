"""Central simple invariant subalgebras and tensor factorizations.

An invariant central simple subalgebra B of the matrix algebra on an
irreducible (possibly projective) representation W pairs with its centralizer
Z: together they span everything, and W factors as a tensor product of two
smaller projective representations carried by the two sides.  Recovery is
numerical — matrix units of B give a basis change to Kronecker form, after
which each group element's matrix is rank one under the row/column
rearrangement and splits by SVD.

The subset scan over sums of isotypic components of the conjugation action is
certified complete exactly when that action is multiplicity-free; otherwise
generated-algebra closures are added as uncertified heuristic candidates.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from ._linalg import (RANK_TOL, cluster_complex, column_space,
                      scalar_multiple_of_identity)
from .algebras import center, centralizer, semisimplicity_certificate
from .errors import FactorRecoveryFailure, NotCentralSimple
from .reps import Representation, TwoCocycle, adjoint_rep, isotypic_decomposition, validate
from .spaces import MatrixSubspace, generated_algebra

SUBSET_SCAN_CAP = 20  # components; 2^m subsets beyond this is out of reach
UNIT_RETRIES = 20


@dataclass
class DualPairFactorization:
    """A dual pair B, Z with the recovered tensor splitting of W."""

    b_space: MatrixSubspace
    z_space: MatrixSubspace
    a: int
    b: int
    sigma: Representation
    tau: Representation
    basis_change: np.ndarray
    lambdas: np.ndarray
    residual: float


def isotypic_matrix_components(adjoint, seed=0, tol=RANK_TOL):
    """Isotypic components of a conjugation action, as matrix subspaces."""
    comps = isotypic_decomposition(adjoint, seed=seed, tol=tol)
    w = int(round(np.sqrt(adjoint.dim)))
    if w * w != adjoint.dim:
        raise ValueError("conjugation action dimension is not a square")
    spaces = []
    for c in comps:
        cols = column_space(c.projector, tol)
        spaces.append(MatrixSubspace(cols.T, (w, w)))
    return comps, spaces


def multfree_scan(adjoint, seed=0, tol=RANK_TOL):
    """Scan sums of isotypic components for product closure.

    Returns ``(unital, nonunital, certified)``: product-closed sums that do /
    do not contain the identity matrix, and whether the scan is exhaustive
    (true exactly when the conjugation action is multiplicity-free, where
    every invariant subspace is such a sum).
    """
    comps, spaces = isotypic_matrix_components(adjoint, seed=seed, tol=tol)
    m = len(comps)
    certified = all(c.multiplicity <= 1 for c in comps)
    w = spaces[0].shape[0]
    found = []

    def record(space):
        for other in found:
            if other.equals(space):
                return
        found.append(space)

    if m <= SUBSET_SCAN_CAP:
        for r in range(m + 1):
            for subset in itertools.combinations(range(m), r):
                if not subset:
                    record(MatrixSubspace.zero((w, w)))
                    continue
                total = spaces[subset[0]]
                for i in subset[1:]:
                    total = total.add(spaces[i], tol)
                if total.is_product_closed(tol * 10):
                    record(total)
    else:
        certified = False
        record(MatrixSubspace.zero((w, w)))

    if not certified:
        # heuristic candidates: close each component (with the unit adjoined)
        # under products; sound but not exhaustive
        eye_line = MatrixSubspace.identity_line(w)
        record(eye_line)
        record(MatrixSubspace.full((w, w)))
        for sp in spaces:
            cand = generated_algebra(sp.add(eye_line, tol), tol=tol)
            if cand.is_product_closed(tol * 10):
                record(cand)

    unital = [s for s in found if s.contains_identity(tol * 10)]
    nonunital = [s for s in found if not s.contains_identity(tol * 10)]
    unital.sort(key=lambda s: (s.dim, s.fingerprint()))
    nonunital.sort(key=lambda s: (s.dim, s.fingerprint()))
    return unital, nonunital, certified


def central_simple_invariant_subalgebras(w_rep, seed=0, tol=RANK_TOL):
    """Invariant subalgebras with center exactly the scalar line.

    Returns ``(list, certified)``.  The list is closed under taking
    centralizers and always contains the scalar line and the full algebra.
    """
    ad = adjoint_rep(w_rep)
    unital, _, certified = multfree_scan(ad, seed=seed, tol=tol)
    out = []
    for sp in unital:
        _, witness = semisimplicity_certificate(sp, tol)
        if witness is not None:
            continue
        if center(sp, tol).dim == 1:
            out.append(sp)
    # close under centralizer (the partner of a dual pair is again central
    # simple and invariant; for certified scans this is a no-op)
    i = 0
    while i < len(out):
        z = centralizer(out[i], tol)
        if not any(z.equals(sp) for sp in out):
            out.append(z)
        i += 1
    d = w_rep.dim
    assert any(sp.dim == 1 for sp in out), "scalar line missing"
    assert any(sp.dim == d * d for sp in out), "full algebra missing"
    out.sort(key=lambda s: (s.dim, s.fingerprint()))
    return out, certified


def _normalize_projective(m):
    """Scale to |det| = 1, then make the largest-modulus entry positive real."""
    k = m.shape[0]
    det = np.linalg.det(m)
    if abs(det) < 1e-12:
        raise FactorRecoveryFailure("recovered factor is singular")
    m = m / abs(det) ** (1.0 / k)
    flat = np.abs(m).reshape(-1)
    pos = int(np.argmax(np.round(flat, 10)))
    entry = m.reshape(-1)[pos]
    m = m * (entry.conjugate() / abs(entry))
    return m


def _matrix_units(b_space, a, seed, tol):
    """Matrix units of a central simple subalgebra, via a generic element.

    A generic element of B has ``a`` distinct eigenvalues whose spectral
    projectors are the diagonal units; the off-diagonal units come from the
    one-dimensional corner spaces ``f_11 B f_pp``.
    """
    d = b_space.ambient_dim
    basis = b_space.basis()
    rng = np.random.default_rng(seed)
    diag = None
    for attempt in range(UNIT_RETRIES):
        coeff = rng.standard_normal(b_space.dim) + 1j * rng.standard_normal(b_space.dim)
        x = np.tensordot(coeff, basis, axes=(0, 0))
        try:
            vals, vecs = np.linalg.eig(x)
            vinv = np.linalg.inv(vecs)
        except np.linalg.LinAlgError:
            continue
        clusters = cluster_complex(vals, 1e-6 * max(1.0, float(np.max(np.abs(vals)))))
        if len(clusters) != a:
            continue
        projs = []
        ok = True
        for ix in clusters:
            sel = np.zeros(d)
            sel[ix] = 1.0
            p = (vecs * sel) @ vinv
            if np.linalg.norm(p @ p - p) > 1e-6 or not b_space.contains(p, 1e-6):
                ok = False
                break
            projs.append(p)
        if ok and all(len(ix) == len(clusters[0]) for ix in clusters):
            diag = projs
            break
    if diag is None:
        raise FactorRecoveryFailure(
            f"could not split a generic element into {a} equal-rank projectors")
    units = {(0, 0): diag[0]}
    for p in range(1, a):
        corner = MatrixSubspace.from_spanning(
            [diag[0] @ bb @ diag[p] for bb in basis], (d, d), tol)
        if corner.dim != 1:
            raise FactorRecoveryFailure(
                f"corner space 1-{p} has dimension {corner.dim}, expected 1")
        u = corner.basis()[0]
        back = MatrixSubspace.from_spanning(
            [diag[p] @ bb @ diag[0] for bb in basis], (d, d), tol)
        if back.dim != 1:
            raise FactorRecoveryFailure(
                f"corner space {p}-1 has dimension {back.dim}, expected 1")
        v = back.basis()[0]
        c = np.trace(u @ v) / np.trace(diag[0])
        if abs(c) < 1e-10:
            raise FactorRecoveryFailure("corner generators multiply to zero")
        units[(0, p)] = u
        units[(p, 0)] = v / c
    for p in range(1, a):
        for q in range(1, a):
            units[(p, q)] = units[(p, 0)] @ units[(0, q)]
    for p in range(1, a):
        if np.linalg.norm(units[(p, p)] - diag[p]) > 1e-6:
            raise FactorRecoveryFailure("diagonal units disagree with projectors")
    for (p, q) in units:
        for (r, s) in units:
            prod = units[(p, q)] @ units[(r, s)]
            want = units[(p, s)] if q == r else 0.0
            if np.linalg.norm(prod - want) > 1e-6:
                raise FactorRecoveryFailure(
                    f"unit relations fail at ({p},{q})x({r},{s})")
    return units


def extract_factorization(b_space, w_rep, seed=0, tol=RANK_TOL):
    """Tensor-split W along a central simple invariant subalgebra.

    Builds the basis change taking B to (a x a blocks) kron identity, then
    recovers per-element factors sigma (carried by B) and tau (carried by the
    centralizer) from the rank-one rearrangement of each transformed group
    matrix, with scalars ``lambda_g`` absorbing the projective ambiguity.
    """
    d = w_rep.dim
    if b_space.shape != (d, d):
        raise ValueError("subalgebra does not act on the representation space")
    if not b_space.contains_identity(tol * 10):
        raise NotCentralSimple("subalgebra does not contain the identity")
    _, witness = semisimplicity_certificate(b_space, tol)
    if witness is not None:
        raise NotCentralSimple("subalgebra is not semisimple")
    if center(b_space, tol).dim != 1:
        raise NotCentralSimple(
            f"center has dimension {center(b_space, tol).dim}, expected 1")
    a = int(round(np.sqrt(b_space.dim)))
    if a * a != b_space.dim:
        raise NotCentralSimple(f"dimension {b_space.dim} is not a perfect square")
    if d % a != 0:
        raise NotCentralSimple(f"matrix size {d} not divisible by block size {a}")
    b = d // a

    units = _matrix_units(b_space, a, seed, tol)
    w_cols = column_space(units[(0, 0)], tol)
    if w_cols.shape[1] != b:
        raise FactorRecoveryFailure(
            f"diagonal unit has rank {w_cols.shape[1]}, expected {b}")
    cols = []
    for p in range(a):
        block = (units[(p, 0)] if p else units[(0, 0)]) @ w_cols
        cols.append(block)
    s_mat = np.hstack(cols)
    svals = np.linalg.svd(s_mat, compute_uv=False)
    if svals[-1] < tol * max(1.0, svals[0]):
        raise FactorRecoveryFailure("block basis change is singular")
    s_inv = np.linalg.inv(s_mat)

    group = w_rep.group
    n = group.order
    rho = np.einsum("ij,gjk,kl->gil", s_inv, w_rep.matrices, s_mat)
    sig = np.zeros((n, a, a), dtype=complex)
    tau = np.zeros((n, b, b), dtype=complex)
    lam = np.zeros(n, dtype=complex)
    residual = 0.0
    for g in range(n):
        r = rho[g].reshape(a, b, a, b).transpose(0, 2, 1, 3).reshape(a * a, b * b)
        u_, s_, vh_ = np.linalg.svd(r)
        if s_[0] < tol:
            raise FactorRecoveryFailure(f"element {g} transforms to zero")
        if min(a, b) > 1 and s_[1] > 1e-6 * s_[0]:
            raise FactorRecoveryFailure(
                f"element {g} is not rank one in the product basis "
                f"(second singular value {s_[1]:.3g})")
        scale = np.sqrt(s_[0])
        sig[g] = _normalize_projective((scale * u_[:, 0]).reshape(a, a))
        tau[g] = _normalize_projective((scale * vh_[0]).reshape(b, b))
        if g == group.identity:
            if np.linalg.norm(sig[g] - np.eye(a)) < 1e-8:
                sig[g] = np.eye(a)
            if np.linalg.norm(tau[g] - np.eye(b)) < 1e-8:
                tau[g] = np.eye(b)
        kr = np.kron(sig[g], tau[g])
        lam[g] = np.vdot(kr.reshape(-1), rho[g].reshape(-1)) / np.vdot(
            kr.reshape(-1), kr.reshape(-1))
        residual = max(residual, float(np.linalg.norm(rho[g] - lam[g] * kr)))

    sigma_rep = _as_projective_rep(group, sig, f"{w_rep.name or 'W'}:left")
    tau_rep = _as_projective_rep(group, tau, f"{w_rep.name or 'W'}:right")
    z_space = centralizer(b_space, tol)
    assert centralizer(z_space, tol).equals(b_space), "double centralizer moved"
    assert b_space.dim * z_space.dim == d * d, \
        "dual pair dimensions do not multiply up"
    return DualPairFactorization(
        b_space=b_space, z_space=z_space, a=a, b=b,
        sigma=sigma_rep, tau=tau_rep, basis_change=s_mat, lambdas=lam,
        residual=residual)


def _as_projective_rep(group, mats, name):
    """Wrap matrices as a representation, recovering the cocycle table."""
    n = group.order
    k = mats.shape[1]
    vals = np.ones((n, n), dtype=complex)
    inv_mats = np.linalg.inv(mats)
    for g in range(n):
        prods = np.einsum("ij,hjk->hik", mats[g], mats)
        for h in range(n):
            vals[g, h] = scalar_multiple_of_identity(
                prods[h] @ inv_mats[group.mult[g, h]], tol=1e-6)
    vals[group.identity, :] = 1.0
    vals[:, group.identity] = 1.0
    cocycle = None
    if np.max(np.abs(vals - 1.0)) > 1e-8:
        cocycle = TwoCocycle(group, vals)
        cocycle.validate(tol=1e-6)
    rep = Representation(group=group, dim=k, matrices=mats, unitary=False,
                        cocycle=cocycle, name=name)
    validate(rep, tol=1e-6)
    return rep


def cocycle_consistency(fact, w_rep, group=None):
    """Max deviation of the cocycle balance over all element pairs.

    The product of the recovered factors' cocycles, corrected by the scalar
    ``lambda`` table, must reproduce the cocycle of the input representation:
    ``alpha_rho(g,h) = alpha_sigma(g,h) alpha_tau(g,h) lambda_g lambda_h /
    lambda_{gh}``.
    """
    g = w_rep.group if group is None else group
    n = g.order

    def table(rep):
        if rep.cocycle is None:
            return np.ones((n, n), dtype=complex)
        return rep.cocycle.values

    pred = (table(fact.sigma) * table(fact.tau)
            * fact.lambdas[:, None] * fact.lambdas[None, :]
            / fact.lambdas[g.mult])
    return float(np.max(np.abs(table(w_rep) - pred)))
