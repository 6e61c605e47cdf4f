"""Linear and projective matrix representations of finite groups.

A representation assigns one ``d x d`` complex matrix to each group element
(indexed ``0..n-1``).  Projective representations carry an explicit 2-cocycle
table: ``rho(g) @ rho(h) = alpha(g, h) * rho(g*h)``.

The irreducible character table of a group is computed numerically by
splitting its regular representation with random invariant Hermitian
operators; eigenspaces of a generic invariant operator are irreducible
invariant subspaces, so iterating with character tests converges quickly.
"""

from dataclasses import dataclass

import numpy as np

from ._linalg import (EQ_TOL, INT_TOL, RANK_TOL, cluster_real, nullspace,
                      random_hermitian, round_to_gaussian_int,
                      scalar_multiple_of_identity)
from .errors import (AssertionFailure, NonSimpleAction, NotAnAutomorphism,
                     NotARepresentation, ToleranceFailure)
from .groups import (FiniteGroup, Subgroup, class_index_array,
                     conjugacy_classes, left_transversal)

#: dimension cap for induced representations
INDUCE_DIM_CAP = 500
#: eigenvalue gap threshold used when splitting with random invariant operators
SPLIT_GAP = 1e-6
#: retries with fresh randomness before giving up on a split
SPLIT_RETRIES = 20


@dataclass(frozen=True)
class TwoCocycle:
    """A normalized 2-cocycle ``alpha: G x G -> C*`` stored as an n x n table."""

    group: FiniteGroup
    values: np.ndarray

    def validate(self, tol=RANK_TOL):
        """Check nonvanishing, normalization and the cocycle identity."""
        a = np.asarray(self.values)
        n = self.group.order
        if a.shape != (n, n):
            raise ValueError("cocycle table has wrong shape")
        if np.min(np.abs(a)) < tol:
            raise ValueError("cocycle values must be nonzero")
        e = self.group.identity
        if np.max(np.abs(a[e, :] - 1.0)) > tol or np.max(np.abs(a[:, e] - 1.0)) > tol:
            raise ValueError("cocycle is not normalized: alpha(1,x)=alpha(x,1)=1")
        m = self.group.mult
        # alpha(x,y) alpha(xy,z) = alpha(y,z) alpha(x, yz) for all x, y, z
        lhs = a[:, :, None] * a[m]          # [x,y,z] = a(x,y) a(xy,z)
        rhs = a[None, :, :] * a[:, m]       # [x,y,z] = a(y,z) a(x,yz)
        dev = np.max(np.abs(lhs - rhs))
        if dev > tol:
            raise ValueError(f"cocycle identity fails by {dev:.3g}")
        return float(dev)

    def value(self, g, h):
        return complex(self.values[g, h])


@dataclass(frozen=True)
class Representation:
    """Matrices for each element of ``group``, optionally with a cocycle."""

    group: FiniteGroup
    dim: int
    matrices: np.ndarray
    unitary: bool = False
    cocycle: TwoCocycle = None
    name: str = None

    def matrix(self, g):
        return self.matrices[g]

    @property
    def is_projective(self):
        return self.cocycle is not None


@dataclass(frozen=True)
class ClassFunction:
    """Values of a class function, ordered like ``conjugacy_classes(group)``."""

    group: FiniteGroup
    values: tuple

    def at_element(self, g):
        return self.values[class_index_array(self.group)[g]]

    def rounded(self, ndigits=8):
        return tuple(complex(round(v.real, ndigits), round(v.imag, ndigits))
                     for v in self.values)


@dataclass(frozen=True)
class IsotypicComponent:
    """One isotypic block of a representation."""

    projector: np.ndarray
    irrep_label: str
    multiplicity: int
    dim: int
    character: ClassFunction


@dataclass(frozen=True)
class ValidationReport:
    max_deviation: float
    worst_pair: tuple
    identity_deviation: float
    unitary_deviation: float
    projective: bool


def validate(rep, tol=RANK_TOL):
    """Verify the homomorphism (or cocycle) law and the identity matrix.

    Returns a :class:`ValidationReport`; raises :class:`NotARepresentation`
    with the worst offending pair when the deviation exceeds ``tol``.
    """
    g = rep.group
    mats = np.asarray(rep.matrices, dtype=complex)
    n, d = g.order, rep.dim
    if mats.shape != (n, d, d):
        raise NotARepresentation("matrix array has wrong shape")
    id_dev = float(np.linalg.norm(mats[g.identity] - np.eye(d)))
    if rep.cocycle is not None:
        rep.cocycle.validate(tol=max(tol, 1e-8))
    worst = (g.identity, g.identity)
    worst_dev = id_dev
    for a in range(n):
        prod = mats[a] @ mats  # (n, d, d): rho(a) rho(b)
        target = mats[g.mult[a]]
        if rep.cocycle is not None:
            target = target * rep.cocycle.values[a][:, None, None]
        devs = np.linalg.norm((prod - target).reshape(n, -1), axis=1)
        b = int(np.argmax(devs))
        if devs[b] > worst_dev:
            worst_dev = float(devs[b])
            worst = (a, b)
    unit_dev = 0.0
    if rep.unitary:
        uhu = np.einsum("gji,gjk->gik", mats.conj(), mats)
        unit_dev = float(np.max(np.linalg.norm(uhu - np.eye(d), axis=(1, 2))))
    if worst_dev > tol:
        raise NotARepresentation(
            f"multiplication law fails by {worst_dev:.3g} at pair {worst}",
            worst_pair=worst, deviation=worst_dev)
    return ValidationReport(max_deviation=worst_dev, worst_pair=worst,
                            identity_deviation=id_dev, unitary_deviation=unit_dev,
                            projective=rep.is_projective)


def unitarize(rep):
    """Equivalent unitary representation via averaging; returns ``(rep', T)``.

    ``H = sum_g rho(g)^* rho(g)`` is invariant, and with ``H = T^* T`` the
    conjugated representation ``T rho T^{-1}`` is unitary.  For projective
    input the matrices are first rescaled so the cocycle has modulus one
    (the modulus of a cocycle over a finite group is always a coboundary),
    which the averaging argument requires.
    """
    g = rep.group
    mats = np.asarray(rep.matrices, dtype=complex).copy()
    cocycle = rep.cocycle
    if cocycle is not None:
        logmod = np.log(np.abs(cocycle.values))
        c = np.exp(logmod.mean(axis=1))  # c_g = geometric mean over h of |alpha(g,h)|
        mats = mats / c[:, None, None]
        new_vals = cocycle.values.copy()
        n = g.order
        new_vals = new_vals * c[g.mult] / (c[:, None] * c[None, :])
        cocycle = TwoCocycle(g, new_vals)
    h = np.einsum("gji,gjk->ik", mats.conj(), mats) / g.order
    t = np.linalg.cholesky(h).conj().T  # h = t^* t
    tinv = np.linalg.inv(t)
    new_mats = t @ mats @ tinv
    out = Representation(group=g, dim=rep.dim, matrices=new_mats, unitary=True,
                         cocycle=cocycle, name=rep.name)
    validate(out)
    return out, t


def character(rep):
    """The character as a :class:`ClassFunction` (linear representations only)."""
    if rep.is_projective:
        raise ValueError("characters of projective representations are not class functions here")
    classes = conjugacy_classes(rep.group)
    vals = tuple(complex(np.trace(rep.matrices[c[0]])) for c in classes)
    return ClassFunction(group=rep.group, values=vals)


def inner_product(chi1, chi2, tol=INT_TOL):
    """Hermitian character pairing, rounded to a Gaussian integer.

    Raises :class:`RoundingAmbiguous` when the value is not within ``tol``
    of a Gaussian integer (character pairings always are).
    """
    if chi1.group is not chi2.group:
        raise ValueError("class functions on different groups")
    classes = conjugacy_classes(chi1.group)
    total = sum(len(c) * v1 * np.conj(v2)
                for c, v1, v2 in zip(classes, chi1.values, chi2.values))
    val = total / chi1.group.order
    return round_to_gaussian_int(val, tol, what="character pairing")


def is_irreducible(rep):
    """Character test for linear reps; commutant test for projective ones."""
    if rep.is_projective:
        return commutant_dimension(rep) == 1
    chi = character(rep)
    return inner_product(chi, chi) == 1


def commutant_dimension(rep, tol=RANK_TOL):
    """Dimension of ``{X : X rho(g) = rho(g) X for all g}``."""
    d = rep.dim
    eye = np.eye(d)
    rows = []
    for m in rep.matrices:
        rows.append(np.kron(eye, m.T) - np.kron(m, eye))
    return int(nullspace(np.vstack(rows), tol).shape[0])


def adjoint_rep(rep):
    """The conjugation action on ``d x d`` matrices, as a ``d^2``-dim rep.

    Matrices act on row-major flattened arguments; for projective input the
    scalars cancel and the result is an honest linear representation.
    """
    mats = rep.matrices
    if rep.unitary:
        invs = np.conj(np.transpose(mats, (0, 2, 1)))
    else:
        invs = np.linalg.inv(mats)
    big = np.stack([np.kron(m, vi.T) for m, vi in zip(mats, invs)])
    return Representation(group=rep.group, dim=rep.dim ** 2, matrices=big,
                          unitary=rep.unitary, name=None)


def _regular_representation(group):
    n = group.order
    mats = np.zeros((n, n, n))
    for g in range(n):
        mats[g, group.mult[g], np.arange(n)] = 1.0
    return Representation(group=group, dim=n, matrices=mats.astype(complex),
                          unitary=True, name="regular")


def _character_of_isometry(rep, q, class_reps):
    return tuple(complex(np.trace(q.conj().T @ rep.matrices[g] @ q))
                 for g in class_reps)


def _split_once(rep, q, rng, gap=SPLIT_GAP):
    """Split the invariant subspace spanned by isometry columns ``q``.

    Returns a list of isometries onto eigenspace clusters of a random
    invariant Hermitian operator; a single cluster means no progress.
    """
    k = q.shape[1]
    sub = np.einsum("ia,gij,jb->gab", q.conj(), rep.matrices, q)
    x = random_hermitian(k, rng)
    t = np.einsum("gab,bc,gdc->ad", sub, x, sub.conj()) / rep.group.order
    t = (t + t.conj().T) / 2.0
    w, v = np.linalg.eigh(t)
    clusters = cluster_real(w, gap * max(1.0, float(np.max(np.abs(w)))))
    return [q @ v[:, np.sort(ix)] for ix in clusters]


def character_table(group, seed=0):
    """All irreducible characters, via random splitting of the regular rep.

    Deterministic for a fixed seed; characters are sorted by (dimension,
    rounded values).  Labels ``chi0, chi1, ...`` follow that order.
    """
    cache_key = ("char_table", seed)
    if cache_key in group._cache:
        return group._cache[cache_key]
    reg = _regular_representation(group)
    classes = conjugacy_classes(group)
    class_reps = [c[0] for c in classes]
    class_sizes = np.array([len(c) for c in classes], dtype=float)

    found = {}

    def is_irr(chi_vals):
        tot = np.sum(class_sizes * np.abs(np.array(chi_vals)) ** 2) / group.order
        return abs(tot - 1.0) < 1e-6

    rng = np.random.default_rng(seed)
    worklist = [np.eye(group.order, dtype=complex)]
    while worklist:
        q = worklist.pop(0)
        chi = _character_of_isometry(reg, q, class_reps)
        if is_irr(chi):
            key = tuple(np.round(np.array(chi), 6).tolist())
            if key not in found:
                found[key] = chi
            continue
        for attempt in range(SPLIT_RETRIES):
            pieces = _split_once(reg, q, rng)
            if len(pieces) > 1:
                worklist.extend(pieces)
                break
        else:
            raise ToleranceFailure(
                "failed to split a reducible invariant subspace after "
                f"{SPLIT_RETRIES} attempts")

    chars = [ClassFunction(group=group, values=v) for v in found.values()]
    ident_cls = int(class_index_array(group)[group.identity])
    chars.sort(key=lambda c: (round(c.values[ident_cls].real),
                              tuple((round(v.real, 8), round(v.imag, 8)) for v in c.values)))
    dims = [int(round(c.values[ident_cls].real)) for c in chars]
    if sum(d * d for d in dims) != group.order or len(chars) != len(classes):
        raise ToleranceFailure("character table incomplete or inconsistent")
    group._cache[cache_key] = chars
    return chars


def irrep_label(group, chi, seed=0):
    """Canonical label of an irreducible character in the sorted table."""
    table = character_table(group, seed=seed)
    key = chi.rounded(6)
    for i, c in enumerate(table):
        if c.rounded(6) == key:
            return f"chi{i}"
    raise ValueError("character not found in table")


def isotypic_decomposition(rep, seed=0, tol=RANK_TOL):
    """Isotypic projectors of a linear representation.

    Uses the averaging projector ``(d_i/|G|) sum_g conj(chi_i(g)) rho(g)``.
    The projectors are validated (idempotent, mutually annihilating, summing
    to the identity); :class:`ToleranceFailure` otherwise.
    """
    group = rep.group
    table = character_table(group, seed=seed)
    cls_idx = class_index_array(group)
    chi_v = character(rep)
    ident_cls = int(cls_idx[group.identity])
    comps = []
    total = np.zeros((rep.dim, rep.dim), dtype=complex)
    for i, chi in enumerate(table):
        mult = inner_product(chi_v, chi)
        if mult.imag != 0 or mult.real < 0:
            raise ToleranceFailure(f"impossible multiplicity {mult} for chi{i}")
        m = int(mult.real)
        if m == 0:
            continue
        d_i = int(round(chi.values[ident_cls].real))
        vals = np.conj(np.array([chi.values[cls_idx[g]] for g in range(group.order)]))
        proj = np.einsum("g,gij->ij", vals, rep.matrices) * (d_i / group.order)
        total += proj
        comps.append(IsotypicComponent(projector=proj, irrep_label=f"chi{i}",
                                       multiplicity=m, dim=m * d_i, character=chi))
    dev = np.linalg.norm(total - np.eye(rep.dim))
    if dev > 1e-6:
        raise ToleranceFailure(f"isotypic projectors do not sum to identity ({dev:.3g})")
    for a in range(len(comps)):
        for b in range(len(comps)):
            prod = comps[a].projector @ comps[b].projector
            want = comps[a].projector if a == b else 0.0
            if np.linalg.norm(prod - want) > 1e-6:
                raise ToleranceFailure("isotypic projectors are not orthogonal idempotents")
    return comps


def restrict(rep, subgroup):
    """Restriction to a subgroup, as a representation of ``subgroup.as_group()``."""
    h = subgroup.as_group()
    emb = subgroup.embedding()
    mats = rep.matrices[emb]
    cocycle = None
    if rep.cocycle is not None:
        cocycle = TwoCocycle(h, rep.cocycle.values[np.ix_(emb, emb)])
    return Representation(group=h, dim=rep.dim, matrices=mats,
                          unitary=rep.unitary, cocycle=cocycle, name=None)


def induce(subgroup, w_rep, cap=INDUCE_DIM_CAP):
    """Induced representation over a left transversal (linear input only).

    Block ``(i, j)`` of the induced matrix for ``g`` is ``rho_W(t_i^-1 g t_j)``
    when that element lies in the subgroup and zero otherwise; the basis
    order is the distinguished copies ``t_i . W``.
    """
    if w_rep.is_projective:
        raise ValueError("induction is implemented for linear representations only")
    group = subgroup.parent
    trans = left_transversal(subgroup)
    l, k = subgroup.index, w_rep.dim
    if l * k > cap:
        raise ValueError(f"induced dimension {l * k} exceeds cap {cap}")
    pos = {m: i for i, m in enumerate(subgroup.members)}
    n = group.order
    mats = np.zeros((n, l * k, l * k), dtype=complex)
    for g in range(n):
        for j, tj in enumerate(trans.reps):
            gt = group.mult[g, tj]
            for i, ti in enumerate(trans.reps):
                x = int(group.mult[group.inv[ti], gt])
                if x in pos:
                    mats[g, i * k:(i + 1) * k, j * k:(j + 1) * k] = w_rep.matrices[pos[x]]
                    break
    return Representation(group=group, dim=l * k, matrices=mats,
                          unitary=w_rep.unitary, name=None)


def induced_character(subgroup, chi_w):
    """Character of the induced representation, by the averaging formula."""
    group = subgroup.parent
    h_group = subgroup.as_group()
    pos = {m: i for i, m in enumerate(subgroup.members)}
    h_cls = class_index_array(h_group)
    classes = conjugacy_classes(group)
    vals = []
    for cls in classes:
        g = cls[0]
        total = 0.0 + 0.0j
        for x in range(group.order):
            y = int(group.mult[group.mult[group.inv[x], g], x])
            if y in pos:
                total += chi_w.values[h_cls[pos[y]]]
        vals.append(total / subgroup.order)
    return ClassFunction(group=group, values=tuple(vals))


def is_induced_from(v_rep, subgroup, w_rep, tol=INT_TOL):
    """Whether ``V = Ind(W)`` at the character level.

    Precondition: ``dim V = [G:H] * dim W`` (ValueError otherwise).  When the
    characters match, the multiplicity of W inside the restriction of V is
    asserted to be one; a different value raises :class:`AssertionFailure`.
    """
    if v_rep.dim != subgroup.index * w_rep.dim:
        raise ValueError("dimension mismatch: dim V != [G:H] * dim W")
    chi_v = character(v_rep)
    chi_ind = induced_character(subgroup, character(w_rep))
    match = max(abs(a - b) for a, b in zip(chi_v.values, chi_ind.values)) < tol
    if match:
        chi_res = character(restrict(v_rep, subgroup))
        m = inner_product(chi_res, character(w_rep))
        if m != 1:
            raise AssertionFailure(
                f"induced character matches but W-multiplicity in Res V is {m}, not 1")
    return match


def equivariant_hom_space(v_rep, w_rep, tol=RANK_TOL):
    """Orthonormal basis of ``{f : f rho_V(g) = rho_W(g) f}`` (maps V -> W)."""
    if v_rep.group is not w_rep.group:
        raise ValueError("representations of different groups")
    dv, dw = v_rep.dim, w_rep.dim
    rows = []
    for mv, mw in zip(v_rep.matrices, w_rep.matrices):
        rows.append(np.kron(np.eye(dw), mv.T) - np.kron(mw, np.eye(dv)))
    basis = nullspace(np.vstack(rows), tol)
    return basis.reshape(-1, dw, dv)


def skolem_noether_lift(group, action, tol=RANK_TOL):
    """Lift an automorphism action on ``M_d`` to a projective representation.

    Parameters
    ----------
    group : FiniteGroup
    action : (n, d^2, d^2) array
        One matrix per group element, acting on row-major flattened ``d x d``
        matrices in the matrix-unit basis.  Each must be an algebra
        automorphism (checked; :class:`NotAnAutomorphism` otherwise).

    Returns a :class:`Representation` with ``rho(1) = I`` whose conjugation
    action reproduces the input, together with the 2-cocycle recovered from
    ``rho(g) rho(h) = alpha(g, h) rho(g h)``.  The intertwiner solution space
    is required to be one-dimensional (:class:`NonSimpleAction` otherwise).
    """
    action = np.asarray(action, dtype=complex)
    n = group.order
    d2 = action.shape[1]
    d = int(round(np.sqrt(d2)))
    if action.shape != (n, d2, d2) or d * d != d2:
        raise ValueError("action must be an (n, d^2, d^2) array")
    eye = np.eye(d, dtype=complex)

    units = np.zeros((d2, d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            units[i * d + j, i, j] = 1.0

    images = np.einsum("gab,ub->gua", action, units.reshape(d2, d2)).reshape(n, d2, d, d)

    for g in range(n):
        t_im = images[g]
        t_eye = (action[g] @ eye.reshape(d2)).reshape(d, d)
        if np.linalg.norm(t_eye - eye) > 1e-6:
            raise NotAnAutomorphism(f"action of element {g} does not fix the identity")
        for a in range(d2):
            for b in range(d2):
                prod_img = action[g] @ (units[a] @ units[b]).reshape(d2)
                if np.linalg.norm(prod_img.reshape(d, d) - t_im[a] @ t_im[b]) > 1e-6:
                    raise NotAnAutomorphism(
                        f"action of element {g} is not multiplicative")

    mats = np.zeros((n, d, d), dtype=complex)
    for g in range(n):
        if g == group.identity:
            mats[g] = eye
            continue
        rows = []
        for u in range(d2):
            rows.append(np.kron(images[g, u], eye) - np.kron(eye, units[u].T))
        sol = nullspace(np.vstack(rows), tol)
        if sol.shape[0] != 1:
            raise NonSimpleAction(
                f"intertwiner space for element {g} has dimension {sol.shape[0]}")
        m = sol[0].reshape(d, d)
        # deterministic normalization: unit modulus determinant, then a
        # positive-real leading entry
        det = np.linalg.det(m)
        m = m / (abs(det) ** (1.0 / d))
        lead = m.ravel()[int(np.argmax(np.abs(m.ravel())))]
        m = m * (np.conj(lead) / abs(lead))
        mats[g] = m

    inv_mats = np.linalg.inv(mats)
    alpha = np.zeros((n, n), dtype=complex)
    for g in range(n):
        prod = mats[g] @ mats
        residue = prod @ inv_mats[group.mult[g]]
        for h in range(n):
            c = scalar_multiple_of_identity(residue[h], tol=1e-6)
            if c is None:
                raise ToleranceFailure(
                    f"rho(g)rho(h)rho(gh)^-1 is not scalar at ({g}, {h})")
            alpha[g, h] = c
    cocycle = TwoCocycle(group, alpha)
    rep = Representation(group=group, dim=d, matrices=mats, unitary=False,
                         cocycle=cocycle, name=None)
    validate(rep, tol=1e-6)

    # round trip: conjugation by the lift reproduces the action
    worst = 0.0
    for g in range(n):
        rebuilt = np.einsum("ij,ujk,kl->uil", mats[g], units, inv_mats[g])
        worst = max(worst, float(np.linalg.norm(rebuilt - images[g])))
    if worst > 1e-6:
        raise ToleranceFailure(f"lift round-trip residual {worst:.3g}")
    return rep
