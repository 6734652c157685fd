"""Construction data of the foliated Delzant construction.

The facet normals ``X_1..X_d`` define ``pi: R^d -> R^m, e_j -> X_j``.  Its
kernel ``n`` generates the null subgroup ``N`` of ``T^d``; the level set ``M``
has dimension ``d + m``, the leaves dimension ``d - m``.  ``N`` is closed iff
``n`` is a rational subspace, otherwise it winds densely and the leaf space
is a genuine quasifold.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import NotSurjective, OutsideDelta
from .polytope import FaceLattice, HRep
from .scalar import render_scalar

__all__ = [
    "ConstructionData",
    "FiberPoint",
    "RATIONAL_CLOSED",
    "DENSE_WINDING",
    "build_construction",
    "null_subgroup_closedness",
    "fiber_point",
    "dimensions",
    "sample_points",
]

RATIONAL_CLOSED = "rational-closed"
DENSE_WINDING = "dense-winding"

# Phi = +1/2 sum |z_j|^2 e_j^* + lambda; see fiber_point.
MOMENT_MAP_CONVENTION = "Phi(z) = +1/2 * sum_j |z_j|^2 e_j^* + lambda, M = Phi_N^{-1}(0)"


@dataclass(frozen=True)
class ConstructionData:
    d: int
    m: int
    X: tuple
    lam: tuple
    n_basis: tuple
    dim_M: int
    dim_F: int
    codim: int
    null_closed: str

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "n_basis": [[render_scalar(x) for x in eta] for eta in self.n_basis],
            "null_closed": self.null_closed,
            "dimensions": dimensions(self),
            "moment_map_convention": MOMENT_MAP_CONVENTION,
        }


@dataclass(frozen=True)
class FiberPoint:
    mu: tuple
    r2: tuple
    residuals: tuple


def _projection_matrix(X, m):
    return [[x[i] for x in X] for i in range(m)]


def _kernel(X, m, field):
    d = len(X)
    one = field(1)
    if m == 0:
        return [tuple(one if i == j else one - 1 for i in range(d)) for j in range(d)]
    return [tuple(v) for v in linalg.nullspace(_projection_matrix(X, m))]


def build_construction(h: HRep) -> ConstructionData:
    X = tuple(tuple(x) for x in h.normals)
    d, m = h.d, h.m
    if m and linalg.rank(_projection_matrix(X, m)) < m:
        raise NotSurjective("the facet normals do not span R^m")
    basis = _kernel(X, m, h.field)
    for eta in basis:
        for i in range(m):
            if linalg.dot(eta, [x[i] for x in X]):
                raise AssertionError("kernel vector fails pi(eta) = 0")
    closed = _closedness(X, m, basis)
    return ConstructionData(
        d=d,
        m=m,
        X=X,
        lam=tuple(h.offsets),
        n_basis=tuple(basis),
        dim_M=2 * d - (d - m),
        dim_F=d - m,
        codim=2 * m,
        null_closed=closed,
    )


def _rational_rank_of_split(X, m) -> int:
    # x in Q^d with sum x_j X_j = 0  <=>  both rational and sqrt parts vanish
    rows = [[x[i].a for x in X] for i in range(m)] + [[x[i].b for x in X] for i in range(m)]
    return linalg.rank(rows) if rows and rows[0] else 0


def _closedness(X, m, basis) -> str:
    d = len(X)
    rational_dim = d - _rational_rank_of_split(X, m)
    by_rank = rational_dim == d - m
    # second route: the reduced echelon basis of a subspace is unique, and it
    # is rational iff the subspace is
    if basis:
        R, _ = linalg.rref([list(eta) for eta in basis])
        by_echelon = all(not x.b for row in R for x in row)
    else:
        by_echelon = True
    if by_rank != by_echelon:
        raise AssertionError("closedness routes disagree")
    return RATIONAL_CLOSED if by_rank else DENSE_WINDING


def null_subgroup_closedness(cd: ConstructionData) -> str:
    return _closedness(cd.X, cd.m, cd.n_basis)


def fiber_point(mu, cd: ConstructionData) -> FiberPoint:
    """Point of the level set over ``mu``, recorded as ``r2_j = |z_j|^2``.

    The residuals are the pairings of ``Phi(z)`` with the basis of ``n`` and
    vanish exactly because ``pi(eta) = 0``.
    """
    mu = tuple(mu)
    r2 = tuple(2 * (linalg.dot(mu, x) - l) for x, l in zip(cd.X, cd.lam))
    bad = [j for j, r in enumerate(r2) if r.sign() < 0]
    if bad:
        raise OutsideDelta(f"point violates half-spaces {bad}")
    residuals = tuple(
        linalg.dot([r / 2 + l for r, l in zip(r2, cd.lam)], eta) for eta in cd.n_basis
    )
    return FiberPoint(mu, r2, residuals)


def dimensions(cd: ConstructionData) -> dict:
    out = {
        "dim_M": cd.d + cd.m,
        "dim_F": cd.d - cd.m,
        "codim": 2 * cd.m,
        "quasifold_dim": 2 * cd.m,
    }
    assert out["dim_M"] == out["dim_F"] + out["codim"] == cd.dim_M
    return out


def sample_points(lattice: FaceLattice, count: int, rng: random.Random) -> list:
    """Exact points of the polytope as random rational convex combinations of vertices."""
    verts = [v.coords for v in lattice.vertices]
    zero = lattice.field(0)
    pts = []
    for _ in range(count):
        w = [Fraction(rng.randint(0, 12)) for _ in verts]
        if not any(w):
            w[rng.randrange(len(w))] = Fraction(1)
        total = sum(w)
        pts.append(
            tuple(
                sum((v[i] * (wi / total) for v, wi in zip(verts, w)), zero)
                for i in range(lattice.m)
            )
        )
    return pts
