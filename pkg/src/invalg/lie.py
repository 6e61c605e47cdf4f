"""Weyl dimensions and the power-set classification for compact Lie groups.

Root data live in orthogonal coordinate models (one extra coordinate for
type A, a doubled lattice so spin weights stay integral), which keeps every
pairing an integer and the dimension formula an exact ratio of big-integer
products.  For a product of simple factors acting irreducibly, the invariant
subalgebras are indexed by subsets of the factors with nonzero highest
weight, plus the zero algebra.
"""

import itertools
import re
from dataclasses import dataclass

from .errors import AssertionFailure, NonIntegerDimension

MAX_RANK = 8


def _basis_vec(n, i, scale=1):
    v = [0] * n
    v[i] = scale
    return v


def _prefix_vec(n, upto, scale=1):
    return [scale if i < upto else 0 for i in range(n)]


def _root_data(family, rank):
    """Positive roots, doubled fundamental weights, in the coordinate model."""
    if family == "A":
        n = rank + 1
        roots = [[int(k == i) - int(k == j) for k in range(n)]
                 for i in range(n) for j in range(i + 1, n)]
        # along-diagonal components cancel against every root, so the plain
        # prefix vectors serve as fundamental weights here
        fw2 = [_prefix_vec(n, i + 1, 2) for i in range(rank)]
    elif family in ("B", "C"):
        n = rank
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                roots.append([int(k == i) - int(k == j) for k in range(n)])
                roots.append([int(k == i) + int(k == j) for k in range(n)])
        if family == "B":
            roots += [_basis_vec(n, i) for i in range(n)]
            fw2 = [_prefix_vec(n, i + 1, 2) for i in range(rank - 1)]
            fw2.append(_prefix_vec(n, n, 1))  # spin weight: all halves
        else:
            roots += [_basis_vec(n, i, 2) for i in range(n)]
            fw2 = [_prefix_vec(n, i + 1, 2) for i in range(rank)]
    elif family == "D":
        n = rank
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                roots.append([int(k == i) - int(k == j) for k in range(n)])
                roots.append([int(k == i) + int(k == j) for k in range(n)])
        fw2 = [_prefix_vec(n, i + 1, 2) for i in range(rank - 2)]
        half_minus = _prefix_vec(n, n, 1)
        half_minus[n - 1] = -1
        fw2.append(half_minus)
        fw2.append(_prefix_vec(n, n, 1))
    elif family == "G":
        roots = [[1, -1, 0], [-2, 1, 1], [-1, 0, 1],
                 [0, -1, 1], [1, -2, 1], [-1, -1, 2]]
        fw2 = [[0, -2, 2], [-2, -2, 4]]
    else:
        raise ValueError(f"unsupported family {family!r}")
    return [tuple(r) for r in roots], [tuple(w) for w in fw2]


_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "G": lambda n: 6,
}


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    positive_roots: tuple
    fundamental_weights2: tuple  # doubled, so half-integer weights stay integral
    rho2: tuple

    @classmethod
    def build(cls, family, rank):
        family = family.upper()
        limits = {"A": (1, MAX_RANK), "B": (2, MAX_RANK), "C": (2, MAX_RANK),
                  "D": (3, MAX_RANK), "G": (2, 2)}
        if family not in limits:
            raise ValueError(f"unsupported family {family!r}")
        lo, hi = limits[family]
        if not lo <= rank <= hi:
            raise ValueError(f"{family}{rank} out of the supported range "
                             f"{family}{lo}..{family}{hi}")
        roots, fw2 = _root_data(family, rank)
        if len(roots) != _ROOT_COUNTS[family](rank):
            raise AssertionFailure(
                f"{family}{rank}: {len(roots)} positive roots, "
                f"expected {_ROOT_COUNTS[family](rank)}")
        dim = len(roots[0])
        rho2 = tuple(sum(w[k] for w in fw2) for k in range(dim))
        for alpha in roots:
            if _dot(alpha, rho2) <= 0:
                raise AssertionFailure(
                    f"{family}{rank}: root {alpha} pairs nonpositively with rho")
        return cls(family=family, rank=rank, positive_roots=tuple(roots),
                   fundamental_weights2=tuple(fw2), rho2=rho2)

    @classmethod
    def from_name(cls, name):
        m = re.fullmatch(r"([A-Ga-g])(\d+)", name.strip())
        if not m:
            raise ValueError(f"cannot parse root system name {name!r}")
        return cls.build(m.group(1), int(m.group(2)))

    @property
    def name(self):
        return f"{self.family}{self.rank}"


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class HighestWeight:
    system: RootSystem
    coords: tuple

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if len(coords) != self.system.rank:
            raise ValueError(
                f"{self.system.name} needs {self.system.rank} coordinates, "
                f"got {len(coords)}")
        if any(c < 0 for c in coords):
            raise ValueError("highest weight coordinates must be nonnegative")
        object.__setattr__(self, "coords", coords)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def vector2(self):
        """The weight in the coordinate model, doubled."""
        dim = len(self.system.rho2)
        out = [0] * dim
        for c, w in zip(self.coords, self.system.fundamental_weights2):
            for k in range(dim):
                out[k] += c * w[k]
        return tuple(out)

    def __add__(self, other):
        if other.system != self.system:
            raise ValueError("weights live on different root systems")
        return HighestWeight(self.system,
                             tuple(a + b for a, b in zip(self.coords, other.coords)))


def weyl_dim(weight):
    """Dimension of the irreducible with this highest weight, exactly."""
    sys_ = weight.system
    lam2 = weight.vector2()
    shifted = tuple(a + b for a, b in zip(lam2, sys_.rho2))
    num = 1
    den = 1
    for alpha in sys_.positive_roots:
        num *= _dot(alpha, shifted)
        den *= _dot(alpha, sys_.rho2)
    if num % den != 0:
        raise NonIntegerDimension(
            f"{sys_.name}, weight {weight.coords}: product {num}/{den} "
            "is not an integer")
    return num // den


def tensor_irreducible(lam, mu):
    """Whether V(lam) (x) V(mu) stays irreducible (on one simple factor).

    Computed from dimensions: the Cartan component V(lam+mu) exhausts the
    tensor product exactly when the dimensions match.  The answer is checked
    against the clean criterion — one of the two weights is zero.
    """
    if lam.system != mu.system:
        raise ValueError("weights live on different root systems")
    product = weyl_dim(lam) * weyl_dim(mu)
    combined = weyl_dim(lam + mu)
    if combined > product:
        raise AssertionFailure("Cartan component exceeds the tensor product")
    result = combined == product
    expected = lam.is_zero or mu.is_zero
    if result != expected:
        raise AssertionFailure(
            f"tensor irreducibility mismatch on {lam.coords} vs {mu.coords}")
    return result


@dataclass(frozen=True)
class SubalgebraEntry:
    subset: tuple  # indices of factors whose matrix algebra is included
    dim: int
    factor_dims: tuple


@dataclass(frozen=True)
class PowerSetClassification:
    factor_dims: tuple
    nonzero_indices: tuple
    entries: tuple  # the unital ones, one per subset
    includes_zero: bool = True

    @property
    def count(self):
        return len(self.entries) + int(self.includes_zero)

    @property
    def total_dim(self):
        d = 1
        for k in self.factor_dims:
            d *= k
        return d * d


def etingof_enumerate(factors):
    """Invariant subalgebras for a product of simple factors.

    ``factors`` is a list of (RootSystem, HighestWeight) pairs describing an
    irreducible action of a product group.  Subalgebras correspond to subsets
    of the factors with nonzero weight; each contributes the square of its
    dimension product, the complement gives the centralizer, and the zero
    algebra rides along for a total of ``2^|I| + 1``.
    """
    dims = []
    for sys_, weight in factors:
        if weight.system != sys_:
            raise ValueError("weight does not belong to its declared system")
        dims.append(weyl_dim(weight))
    nonzero = tuple(i for i, (_, w) in enumerate(factors) if not w.is_zero)
    entries = []
    for r in range(len(nonzero) + 1):
        for subset in itertools.combinations(nonzero, r):
            d = 1
            for j in subset:
                d *= dims[j]
            entries.append(SubalgebraEntry(subset=subset, dim=d * d,
                                           factor_dims=tuple(dims[j] for j in subset)))
    entries.sort(key=lambda e: (e.dim, e.subset))
    cls = PowerSetClassification(factor_dims=tuple(dims),
                                 nonzero_indices=nonzero,
                                 entries=tuple(entries))
    full = 1
    for i in nonzero:
        full *= dims[i]
    for e in entries:
        comp = tuple(i for i in nonzero if i not in e.subset)
        dcomp = 1
        for j in comp:
            dcomp *= dims[j]
        if e.dim * dcomp * dcomp != full * full:
            raise AssertionFailure("complement duality fails in the enumeration")
    if cls.count != 2 ** len(nonzero) + 1:
        raise AssertionFailure("power-set count is off")
    return cls


def parse_product_type(text):
    """Split a product name like ``A1xA1`` into root systems."""
    parts = text.split("x")
    return [RootSystem.from_name(p) for p in parts]
