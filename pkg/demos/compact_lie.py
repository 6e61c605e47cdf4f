"""Invariant subalgebras for compact connected groups, by exact arithmetic.

For an irreducible action V = V_1 (x) ... (x) V_n of a product of simple
compact groups, the invariant unital subalgebras of End(V) are exactly the
power set of the factors (tensor the chosen End(V_i) with identities), plus
the zero algebra.  Dimensions come from the Weyl formula in exact integers.
"""

import itertools

from invalg import HighestWeight, RootSystem, etingof_enumerate, tensor_irreducible, weyl_dim

# exact Weyl dimensions on a few familiar systems
for name, coords in [("A1", (7,)), ("A2", (1, 1)), ("B2", (0, 1)),
                     ("C3", (0, 1, 0)), ("D4", (0, 1, 0, 0)), ("G2", (0, 1))]:
    rs = RootSystem.from_name(name)
    print(f"dim V_{name}{coords} = {weyl_dim(HighestWeight(rs, coords))}")

# a tensor product of nontrivial irreducibles is never irreducible for a
# single simple group; sweep all small weights of B3 as a sanity check
rs = RootSystem.from_name("B3")
weights = [HighestWeight(rs, c) for c in itertools.product(range(3), repeat=3)]
violations = sum(1 for lam in weights for mu in weights
                 if tensor_irreducible(lam, mu) != (lam.is_zero or mu.is_zero))
print(f"\nB3 sweep over {len(weights)}^2 weight pairs: {violations} violations")

# SU(2) x SU(2) acting on C^2 (x) C^2: four unital subalgebras plus zero
a1 = RootSystem.from_name("A1")
v = HighestWeight(a1, (1,))
cls = etingof_enumerate([(a1, v), (a1, v)])
print(f"\nSU(2) x SU(2) on C^2 (x) C^2: factor dims {cls.factor_dims}")
for e in cls.entries:
    label = " (x) ".join(f"End(V_{i})" for i in e.subset) or "C"
    print(f"  dim {e.dim:2}  {label}")
print(f"total count including the zero algebra: {cls.count} = 2^2 + 1")

# factors acting trivially do not contribute
cls2 = etingof_enumerate([(a1, HighestWeight(a1, (3,))),
                          (a1, HighestWeight(a1, (0,)))])
print(f"\nwith one trivial factor: count {cls2.count} = 2^1 + 1, "
      f"nonzero factors {cls2.nonzero_indices}")
