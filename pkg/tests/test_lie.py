"""Exact Weyl dimensions, tensor irreducibility, power-set classification."""

import itertools

import pytest

from invalg import (HighestWeight, RootSystem, etingof_enumerate,
                    tensor_irreducible, weyl_dim)
from invalg.lie import parse_product_type

POSITIVE_ROOT_COUNTS = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10,
    "B2": 4, "B3": 9, "B4": 16,
    "C2": 4, "C3": 9, "C4": 16,
    "D3": 6, "D4": 12,
    "G2": 6,
}

# classical dimension values, indexed by fundamental-weight coordinates
KNOWN_DIMS = {
    ("A2", (1, 0)): 3, ("A2", (0, 1)): 3, ("A2", (1, 1)): 8,
    ("A2", (2, 0)): 6, ("A2", (3, 0)): 10, ("A2", (2, 2)): 27,
    ("A3", (1, 0, 0)): 4, ("A3", (0, 1, 0)): 6, ("A3", (1, 0, 1)): 15,
    ("B2", (1, 0)): 5, ("B2", (0, 1)): 4, ("B2", (0, 2)): 10,
    ("B2", (1, 1)): 16, ("B2", (2, 0)): 14,
    ("B3", (1, 0, 0)): 7, ("B3", (0, 0, 1)): 8, ("B3", (0, 1, 0)): 21,
    ("C2", (1, 0)): 4, ("C2", (0, 1)): 5, ("C2", (2, 0)): 10,
    ("C3", (1, 0, 0)): 6, ("C3", (0, 1, 0)): 14, ("C3", (0, 0, 1)): 14,
    ("D3", (1, 0, 0)): 6, ("D3", (0, 1, 0)): 4, ("D3", (0, 0, 1)): 4,
    ("D4", (1, 0, 0, 0)): 8, ("D4", (0, 1, 0, 0)): 28,
    ("D4", (0, 0, 1, 0)): 8, ("D4", (0, 0, 0, 1)): 8,
    ("G2", (1, 0)): 7, ("G2", (0, 1)): 14, ("G2", (1, 1)): 64,
    ("G2", (2, 0)): 27,
}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_ROOT_COUNTS.items()))
def test_positive_root_counts(name, count):
    rs = RootSystem.from_name(name)
    assert len(rs.positive_roots) == count
    assert len(rs.fundamental_weights2) == rs.rank


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D2", "E6", "G3", "x2", "A"])
def test_rejects_bad_names(bad):
    with pytest.raises(ValueError):
        RootSystem.from_name(bad)


def test_weyl_dim_a1_line():
    rs = RootSystem.from_name("A1")
    for m in range(51):
        assert weyl_dim(HighestWeight(rs, (m,))) == m + 1


@pytest.mark.parametrize("name_coords,dim", sorted(KNOWN_DIMS.items()))
def test_weyl_dim_known_values(name_coords, dim):
    name, coords = name_coords
    rs = RootSystem.from_name(name)
    assert weyl_dim(HighestWeight(rs, coords)) == dim


def test_weyl_dim_trivial_weight():
    for name in POSITIVE_ROOT_COUNTS:
        rs = RootSystem.from_name(name)
        assert weyl_dim(HighestWeight(rs, (0,) * rs.rank)) == 1


def test_weyl_dim_exact_integers():
    """Large weights stay exact (no float in sight)."""
    rs = RootSystem.from_name("D4")
    d = weyl_dim(HighestWeight(rs, (20, 20, 20, 20)))
    assert isinstance(d, int)
    assert d % 1 == 0 and d > 10 ** 12


def test_highest_weight_validation():
    rs = RootSystem.from_name("A2")
    with pytest.raises(ValueError):
        HighestWeight(rs, (-1, 0))
    with pytest.raises(ValueError):
        HighestWeight(rs, (1,))
    w = HighestWeight(rs, (1, 2))
    assert not w.is_zero
    assert HighestWeight(rs, (0, 0)).is_zero


def test_tensor_irreducible_small_sweep():
    """V(lam) x V(mu) is irreducible iff one factor is trivial (rank <= 3)."""
    names = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "G2"]
    for name in names:
        rs = RootSystem.from_name(name)
        weights = [HighestWeight(rs, c)
                   for c in itertools.product(range(3), repeat=rs.rank)]
        for lam in weights:
            for mu in weights:
                assert tensor_irreducible(lam, mu) == (lam.is_zero or mu.is_zero)


def test_tensor_irreducible_rejects_cross_system():
    # factors on different systems belong to the product-group enumeration
    a1 = RootSystem.from_name("A1")
    g2 = RootSystem.from_name("G2")
    with pytest.raises(ValueError):
        tensor_irreducible(HighestWeight(a1, (3,)), HighestWeight(g2, (0, 0)))


def test_etingof_enumerate_two_sl2():
    a1 = RootSystem.from_name("A1")
    w = HighestWeight(a1, (1,))
    cls = etingof_enumerate([(a1, w), (a1, w)])
    assert [e.dim for e in cls.entries] == [1, 4, 4, 16]
    assert cls.count == 5  # 2^2 unital entries plus the zero algebra
    assert cls.total_dim == 16
    # complement duality: subset and complement dims multiply to the total
    for e in cls.entries:
        comp = tuple(i for i in cls.nonzero_indices if i not in e.subset)
        comp_dim = next(x.dim for x in cls.entries if x.subset == comp)
        assert e.dim * comp_dim == cls.total_dim


def test_etingof_enumerate_skips_trivial_factors():
    a1 = RootSystem.from_name("A1")
    cls = etingof_enumerate([(a1, HighestWeight(a1, (2,))),
                             (a1, HighestWeight(a1, (0,)))])
    assert [e.dim for e in cls.entries] == [1, 9]
    assert cls.count == 3
    assert cls.nonzero_indices == (0,)


def test_etingof_enumerate_three_factors():
    a1 = RootSystem.from_name("A1")
    a2 = RootSystem.from_name("A2")
    cls = etingof_enumerate([(a1, HighestWeight(a1, (1,))),
                             (a2, HighestWeight(a2, (1, 0))),
                             (a1, HighestWeight(a1, (3,)))])
    assert cls.count == 2 ** 3 + 1
    assert sorted(e.dim for e in cls.entries) == [1, 4, 9, 16, 36, 64, 144, 576]


def test_parse_product_type():
    systems = parse_product_type("A1xB3xG2")
    assert [s.name for s in systems] == ["A1", "B3", "G2"]
    with pytest.raises(ValueError):
        parse_product_type("A1xZ9")
