"""Standard simple polytopes and ways of making new ones.

Everything here is exact: rational data, or Q(sqrt 5) for the pentagon and
the dodecahedron.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .polytope import HalfSpace, HRep, Vertex, build_face_lattice, edge_generators, enumerate_vertices
from .scalar import QQ, FieldSpec

QQ5 = FieldSpec(5)
PHI = QQ5(Fraction(1, 2), Fraction(1, 2))  # golden ratio


def point() -> HRep:
    return HRep(0, QQ, (), "point")


def simplex(m: int) -> HRep:
    rows = [[1 if i == j else 0 for i in range(m)] for j in range(m)] + [[-1] * m]
    return HRep.from_rows(rows, [0] * m + [-1], m=m, name=f"{m}-simplex")


def cube(m: int) -> HRep:
    rows, offs = [], []
    for j in range(m):
        rows.append([1 if i == j else 0 for i in range(m)])
        offs.append(0)
    for j in range(m):
        rows.append([-1 if i == j else 0 for i in range(m)])
        offs.append(-1)
    return HRep.from_rows(rows, offs, m=m, name=f"{m}-cube")


def segment() -> HRep:
    return HRep.from_rows([[1], [-1]], [0, -1], name="segment")


def product(P: HRep, Q: HRep) -> HRep:
    if P.field != Q.field:
        raise ValueError("factors live in different fields")
    zero = P.field(0)
    hs = [HalfSpace(tuple(h.normal) + (zero,) * Q.m, h.offset) for h in P.halfspaces]
    hs += [HalfSpace((zero,) * P.m + tuple(h.normal), h.offset) for h in Q.halfspaces]
    name = f"{P.name}x{Q.name}" if P.name and Q.name else ""
    return HRep(P.m + Q.m, P.field, tuple(hs), name)


def truncate_vertex(h: HRep, v: Vertex, ts=None) -> HRep:
    """Cut ``v`` off by the hyperplane through ``v + t_i e_i``.

    ``e_i`` are the inward edge vectors at ``v`` (to the neighbouring
    vertices) and every ``t_i`` must lie strictly between 0 and 1, so the cut
    removes ``v`` alone and the result stays simple.
    """
    vs = enumerate_vertices(h)
    lattice = build_face_lattice(vs, h)
    E = edge_generators(v, h, lattice)
    m = h.m
    if ts is None:
        ts = [Fraction(1, 2)] * m
    if not all(0 < t < 1 for t in ts):
        raise ValueError("truncation depths must lie in (0, 1)")
    # new constraint: sum_i alpha_i / t_i >= 1 where mu - v = sum_i alpha_i e_i,
    # i.e. <mu, X> >= 1 + <v, X> with X = E^{-T} (1/t)
    ET = [list(row) for row in E]  # rows are e_i, so ET @ X = (1/t)
    X = linalg.solve(ET, [h.field(1 / Fraction(t)) for t in ts])
    offset = 1 + linalg.dot(v.coords, X)
    return HRep(m, h.field, h.halfspaces + (HalfSpace(tuple(X), offset),), h.name)


def pentagon() -> HRep:
    """Affine image of the regular pentagon with vertices in Q(sqrt 5).

    Vertices (0,0), (1,0), (1,1), (0,phi), (1-phi,1).
    """
    one = QQ5(1)
    rows = [
        [0, 1],
        [-1, 0],
        [1 - PHI, -one],
        [PHI - 1, 1 - PHI],
        [one, PHI - 1],
    ]
    offs = [0, -1, -PHI, -one, 0]
    return HRep.from_rows(rows, offs, field=QQ5, name="pentagon")


def dodecahedron() -> HRep:
    """Regular dodecahedron with vertices (+-1,+-1,+-1) and its cyclic companions."""
    rows = []
    for s1 in (1, -1):
        for s2 in (1, -1):
            base = [QQ5(0), s1 * PHI, QQ5(s2)]
            for shift in range(3):
                rows.append(base[-shift:] + base[:-shift] if shift else list(base))
    offs = [-(PHI + 1)] * 12
    return HRep.from_rows(rows, offs, field=QQ5, name="dodecahedron")


def prism() -> HRep:
    P = product(simplex(2), segment())
    return HRep(P.m, P.field, P.halfspaces, "prism")


def truncated_cube() -> HRep:
    c = cube(3)
    top = [v for v in enumerate_vertices(c) if all(x == 1 for x in v.coords)][0]
    t = truncate_vertex(c, top)
    return HRep(t.m, t.field, t.halfspaces, "truncated-cube")


def random_truncation(rng: random.Random, max_dim: int = 3, max_cuts: int = 4) -> HRep:
    """A simplex or cube of dimension 2..max_dim with random vertex truncations."""
    m = rng.randint(2, max_dim)
    h = simplex(m) if rng.random() < 0.5 else cube(m)
    for _ in range(rng.randint(0, max_cuts)):
        vs = enumerate_vertices(h)
        v = rng.choice(vs)
        ts = [Fraction(rng.randint(1, 9), 10) for _ in range(m)]
        h = truncate_vertex(h, v, ts)
    return h


def corpus() -> dict:
    """The polytopes shipped as JSON files in ``quasifold/corpus``."""
    return {
        "point": point(),
        "segment": segment(),
        "simplex2": HRep(2, QQ, simplex(2).halfspaces, "2-simplex"),
        "square": HRep(2, QQ, cube(2).halfspaces, "square"),
        "pentagon": pentagon(),
        "cube": cube(3),
        "simplex3": simplex(3),
        "dodecahedron": dodecahedron(),
        "prism": prism(),
        "truncated_cube": truncated_cube(),
    }
