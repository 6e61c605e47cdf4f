"""Representation validation, characters, induction, projective lifts."""

import numpy as np
import pytest

from invalg import catalog
from invalg import (NotAnAutomorphism, NotARepresentation,
                    adjoint_rep, character, character_table,
                    equivariant_hom_space, induce, induced_character,
                    inner_product, is_induced_from, is_irreducible,
                    isotypic_decomposition, restrict, skolem_noether_lift,
                    unitarize, validate)
from invalg.groups import all_subgroups, product_index, subgroup_generated_by
from invalg.reps import Representation
from invalg._linalg import scalar_multiple_of_identity

IRREDUCIBLE = [("S3", "std"), ("Q8", "std"), ("D4", "std"), ("A4", "std3"),
               ("S4", "std3"), ("SL23", "std"), ("S3xS3", "stdXstd")]


@pytest.mark.parametrize("key,rep_name", IRREDUCIBLE + [
    ("S3", "triv"), ("S3", "sign"), ("S3", "trivPlusSign"),
    ("S3", "trivPlusSignPlusStd"), ("S3", "regular"), ("C2xC2", "pauli")])
def test_catalog_reps_validate(key, rep_name):
    _, rep = catalog.get(key, rep_name)
    report = validate(rep)
    assert report.max_deviation < 1e-10
    assert report.identity_deviation < 1e-10


def test_validate_raises_on_corruption():
    _, rep = catalog.get("S3", "std")
    mats = np.array(rep.matrices)
    mats[3, 0, 0] += 0.01
    bad = Representation(group=rep.group, dim=rep.dim, matrices=mats,
                         unitary=False, name="corrupted")
    with pytest.raises(NotARepresentation) as exc:
        validate(bad)
    assert exc.value.worst_pair is not None
    g, h = exc.value.worst_pair
    assert 0 <= g < 6 and 0 <= h < 6


def test_character_values_s3_std():
    g, rep = catalog.get("S3", "std")
    chi = character(rep)
    assert abs(chi.at_element(g.identity) - 2.0) < 1e-12
    # transpositions trace to 0, three-cycles to -1
    for x in g.elements():
        order = next(k for k in range(1, 7)
                     if np.linalg.norm(np.linalg.matrix_power(rep.matrices[x], k)
                                       - np.eye(2)) < 1e-9)
        expected = {1: 2.0, 2: 0.0, 3: -1.0}[order]
        assert abs(chi.at_element(x) - expected) < 1e-9


def test_character_orthogonality():
    _, triv = catalog.get("S3", "triv")
    _, sign = catalog.get("S3", "sign")
    _, std = catalog.get("S3", "std")
    chars = [character(r) for r in (triv, sign, std)]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            ip = inner_product(a, b)
            assert abs(ip - (1.0 if i == j else 0.0)) < 1e-9


@pytest.mark.parametrize("key,nrows", [("S3", 3), ("Q8", 5), ("D4", 5),
                                       ("A4", 4), ("S4", 5), ("SL23", 7)])
def test_character_table_rows(key, nrows):
    g = catalog.get(key).group
    table = character_table(g, seed=0)
    assert len(table) == nrows
    for i, a in enumerate(table):
        for j, b in enumerate(table):
            ip = inner_product(a, b)
            assert abs(ip - (1.0 if i == j else 0.0)) < 1e-8
    dims = sorted(int(round(np.real(c.at_element(g.identity)))) for c in table)
    assert sum(d * d for d in dims) == g.order


def test_is_irreducible():
    for key, rep_name in IRREDUCIBLE:
        _, rep = catalog.get(key, rep_name)
        assert is_irreducible(rep)
    for rep_name in ("trivPlusSign", "trivPlusSignPlusStd", "regular"):
        _, rep = catalog.get("S3", rep_name)
        assert not is_irreducible(rep)


def test_isotypic_decomposition_regular():
    """The regular rep of S3 splits as triv + sign + 2*std."""
    _, rep = catalog.get("S3", "regular")
    comps = isotypic_decomposition(rep, seed=0)
    # component dim counts the whole isotypic block (irrep dim x multiplicity)
    assert sorted((c.dim, c.multiplicity) for c in comps) == [(1, 1), (1, 1), (4, 2)]
    total = np.zeros((6, 6), dtype=complex)
    for c in comps:
        p = c.projector
        assert np.linalg.norm(p @ p - p) < 1e-8
        for m in rep.matrices:
            assert np.linalg.norm(m @ p - p @ m) < 1e-8
        total += p
    assert np.linalg.norm(total - np.eye(6)) < 1e-8


def _one_dim_char_rep(h_group, chi):
    mats = np.array([[[chi.at_element(x)]] for x in h_group.elements()])
    return Representation(group=h_group, dim=1, matrices=mats,
                          unitary=True, name=None)


def test_restrict_and_induce_round_trip():
    g, std = catalog.get("S3", "std")
    c3 = next(s for s in all_subgroups(g) if s.order == 3)
    res = restrict(std, c3)
    assert validate(res).max_deviation < 1e-10
    h = c3.as_group()
    # std restricted to C3 = omega + omega^2; induce either back up to std
    omega = next(c for c in character_table(h, seed=0)
                 if abs(c.at_element(h.identity) - 1) < 1e-9
                 and inner_product(c, character(res)) == 1)
    w = _one_dim_char_rep(h, omega)
    assert is_induced_from(std, c3, w)
    ind = induce(c3, w)
    assert ind.dim == 2
    assert validate(ind).max_deviation < 1e-10
    assert inner_product(character(ind), character(std)) == 1


def test_frobenius_reciprocity():
    """<Ind chi_W, chi_V>_G = <chi_W, Res chi_V>_H over all subgroups of S3."""
    g, std = catalog.get("S3", "std")
    chi_v = character(std)
    for sub in all_subgroups(g):
        chi_res = character(restrict(std, sub))
        for chi_w in character_table(sub.as_group(), seed=0):
            lhs = inner_product(induced_character(sub, chi_w), chi_v)
            rhs = inner_product(chi_w, chi_res)
            assert lhs == rhs


def test_unitarize():
    g, rep = catalog.get("S3", "std")
    # skew the basis so the rep is no longer unitary
    s = np.array([[1.0, 0.7], [0.0, 1.0]])
    skewed = Representation(group=g, dim=2,
                            matrices=np.stack([s @ m @ np.linalg.inv(s)
                                               for m in rep.matrices]),
                            unitary=False, name="skewed")
    fixed, t = unitarize(skewed)
    for m in fixed.matrices:
        assert np.linalg.norm(m @ m.conj().T - np.eye(2)) < 1e-9
    for x in g.elements():
        assert np.linalg.norm(t @ skewed.matrices[x] @ np.linalg.inv(t)
                              - fixed.matrices[x]) < 1e-9


def test_equivariant_hom_space_schur():
    _, std = catalog.get("S3", "std")
    _, triv = catalog.get("S3", "triv")
    assert equivariant_hom_space(std, std).shape[0] == 1
    assert equivariant_hom_space(std, triv).shape[0] == 0
    _, direct = catalog.get("S3", "trivPlusSignPlusStd")
    assert equivariant_hom_space(std, direct).shape[0] == 1


@pytest.mark.parametrize("key,rep_name", IRREDUCIBLE)
def test_skolem_noether_round_trip(key, rep_name):
    """Conjugation action -> lift -> same action, with scalar-related matrices."""
    g, rep = catalog.get(key, rep_name)
    action = adjoint_rep(rep).matrices
    lifted = skolem_noether_lift(g, action)
    alpha = lifted.cocycle
    inv = np.linalg.inv(lifted.matrices)
    for x in g.elements():
        got = np.kron(lifted.matrices[x], inv[x].T)
        assert np.linalg.norm(got - action[x]) < 1e-8
        c = scalar_multiple_of_identity(lifted.matrices[x]
                                        @ np.linalg.inv(rep.matrices[x]))
        assert c is not None
        assert abs(abs(c) - 1.0) < 1e-8
    # linear input: any recovered cocycle is a coboundary, values on the circle
    if alpha is not None:
        assert np.max(np.abs(np.abs(alpha.values) - 1.0)) < 1e-8


def test_skolem_noether_pauli_commutator():
    """The Klein-four conjugation action lifts only projectively."""
    g, rep = catalog.get("C2xC2", "pauli")
    action = adjoint_rep(rep).matrices
    lifted = skolem_noether_lift(g, action)
    alpha = lifted.cocycle
    x = product_index(2, 1, 0)
    z = product_index(2, 0, 1)
    mx, mz = lifted.matrices[x], lifted.matrices[z]
    comm = mx @ mz @ np.linalg.inv(mx) @ np.linalg.inv(mz)
    c = scalar_multiple_of_identity(comm)
    assert c is not None
    assert abs(c - (-1.0)) < 1e-8
    assert alpha is not None  # genuinely projective


def test_skolem_noether_rejects_non_automorphism():
    g, rep = catalog.get("S3", "std")
    action = np.array(adjoint_rep(rep).matrices)
    action[2] *= 1.5  # scaling breaks multiplicativity
    with pytest.raises(NotAnAutomorphism):
        skolem_noether_lift(g, action)


def test_skolem_noether_non_faithful_action():
    """Kernel elements act trivially; the lift sends them to the identity line."""
    g, rep = catalog.get("S3", "trivPlusSign")
    action = adjoint_rep(rep).matrices
    lifted = skolem_noether_lift(g, action)
    for x in g.elements():
        if np.linalg.norm(action[x] - np.eye(4)) < 1e-9:
            c = scalar_multiple_of_identity(lifted.matrices[x])
            assert c is not None and abs(abs(c) - 1.0) < 1e-8
