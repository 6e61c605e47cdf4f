"""Group construction, subgroup enumeration, transversals, conjugacy."""

import numpy as np
import pytest

from invalg import (CapExceeded, NotAGroup, all_subgroups,
                    are_conjugate_subgroups, build_from_mult_table,
                    build_from_permutations, conjugacy_classes, direct_product,
                    left_transversal)
from invalg.groups import Subgroup, subgroup_generated_by


def _s3():
    return build_from_permutations([(1, 0, 2), (1, 2, 0)], name="S3")


def test_build_s3_basic():
    g = _s3()
    assert g.order == 6
    assert g.mult[g.identity, 4] == 4
    for x in g.elements():
        assert g.mult[x, g.inv[x]] == g.identity
        assert g.mult[g.inv[x], x] == g.identity


def test_build_rejects_non_group():
    table = np.zeros((3, 3), dtype=int)  # constant row: no identity
    with pytest.raises(NotAGroup):
        build_from_mult_table(table)


def test_build_rejects_non_associative():
    # a quasigroup (latin square) that is not associative
    table = np.array([[0, 1, 2, 3, 4],
                      [1, 0, 3, 4, 2],
                      [2, 4, 0, 1, 3],
                      [3, 2, 4, 0, 1],
                      [4, 3, 1, 2, 0]])
    with pytest.raises(NotAGroup):
        build_from_mult_table(table)


def test_mult_table_round_trip():
    g = _s3()
    h = build_from_mult_table(np.array(g.mult))
    assert h.order == g.order
    assert np.array_equal(h.mult, g.mult)
    assert h.identity == g.identity


def test_conjugacy_classes_s3():
    g = _s3()
    classes = conjugacy_classes(g)
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 2, 3]
    assert sum(sizes) == 6


def test_all_subgroups_s3():
    g = _s3()
    subs = all_subgroups(g)
    # one per conjugacy class: 1, <transposition>, <3-cycle>, S3
    assert sorted(s.order for s in subs) == [1, 2, 3, 6]
    for s in subs:
        mem = set(s.members)
        for a in s.members:
            assert int(g.inv[a]) in mem
            for b in s.members:
                assert int(g.mult[a, b]) in mem


def test_all_subgroups_s4_count():
    g = build_from_permutations([(1, 0, 2, 3), (1, 2, 3, 0)], name="S4")
    subs = all_subgroups(g)
    # 11 conjugacy classes of subgroups of S4
    assert len(subs) == 11
    assert sorted(s.order for s in subs) == [1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24]


def test_all_subgroups_cap():
    n = 501
    mult = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    g = build_from_mult_table(mult)
    with pytest.raises(CapExceeded):
        all_subgroups(g)


def test_left_transversal_partitions():
    g = _s3()
    subs = all_subgroups(g)
    for s in subs:
        t = left_transversal(s)
        assert len(t.reps) == s.index
        assert t.reps[0] == g.identity
        seen = set()
        for r in t.reps:
            coset = {int(g.mult[r, h]) for h in s.members}
            assert not (coset & seen)
            seen |= coset
        assert seen == set(range(g.order))


def test_conjugate_subgroups():
    g = _s3()
    order2 = [s for s in all_subgroups(g) if s.order == 2]
    # representatives are per conjugacy class, so only one order-2 rep
    assert len(order2) == 1
    # but the three transposition subgroups are mutually conjugate
    transpositions = [x for x in g.elements()
                      if x != g.identity and g.mult[x, x] == g.identity]
    assert len(transpositions) == 3
    h1 = subgroup_generated_by(g, [transpositions[0]])
    h2 = subgroup_generated_by(g, [transpositions[1]])
    assert are_conjugate_subgroups(h1, h2)
    h3 = subgroup_generated_by(g, [g.mult[transpositions[0], transpositions[1]]])
    assert h3.order == 3
    assert not are_conjugate_subgroups(h1, h3)


def test_direct_product_order_and_structure():
    g = _s3()
    gg = direct_product(g, g)
    assert gg.order == 36
    # (a1,b1)*(a2,b2) = (a1 a2, b1 b2) in the (a * order + b) indexing
    a1, b1, a2, b2 = 2, 3, 4, 1
    lhs = gg.mult[a1 * 6 + b1, a2 * 6 + b2]
    assert lhs == g.mult[a1, a2] * 6 + g.mult[b1, b2]


def test_subgroup_as_group_embedding():
    g = _s3()
    s = next(s for s in all_subgroups(g) if s.order == 3)
    h = s.as_group()
    emb = s.embedding()
    for i in range(h.order):
        for j in range(h.order):
            assert emb[h.mult[i, j]] == g.mult[emb[i], emb[j]]
