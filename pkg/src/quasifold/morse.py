"""Morse data of a generic linear functional on a simple polytope.

For a direction ``xi`` the height function ``<., xi>`` restricted to the
polytope has one critical point per vertex.  The index of a vertex is twice
the number of edges at it along which the height strictly decreases, so the
global minimiser has index 0 and the maximiser index 2m.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from . import linalg
from .errors import IndexBoundViolation, NonGeneric, ParseError
from .polytope import Face, FaceLattice, HRep, Vertex, edge_generators
from .scalar import FieldSpec, parse_scalar

__all__ = [
    "MorseData",
    "IndexPartition",
    "is_generic",
    "choose_generic",
    "vertex_index",
    "min_vertex",
    "build_morse",
    "face_index",
    "partition_faces",
    "cover_intersection_sums",
    "parse_direction",
]


@dataclass(frozen=True)
class MorseData:
    xi: tuple
    height: dict  # vertex id -> <v, xi>
    descending: dict  # vertex id -> frozenset of facets whose dropped edge descends
    index: dict  # vertex id -> even index
    min_vertex: dict  # face key (facet set) -> vertex id

    def index_counts(self, m: int) -> list:
        """Number of vertices of index 0, 2, ..., 2m."""
        counts = [0] * (m + 1)
        for i in self.index.values():
            counts[i // 2] += 1
        return counts


@dataclass(frozen=True)
class IndexPartition:
    k: int
    A: tuple  # faces of dim m-k whose min vertex has index 2k
    B: tuple  # faces of dim m-k whose min vertex has index < 2k


def is_generic(xi, lattice: FaceLattice) -> bool:
    """True iff ``<xi, e> != 0`` for every edge direction ``e``."""
    if lattice.m and not any(xi):
        return False
    return all(linalg.dot(xi, e).sign() != 0 for e in lattice.edge_directions())


def choose_generic(lattice: FaceLattice, seed: int = 1) -> tuple:
    """First generic member of the moment curve ``(1, t, ..., t^(m-1))``, ``t >= seed``.

    Each edge kills at most m-1 values of t, so the search ends.
    """
    one = lattice.field(1)
    t = seed
    while True:
        xi = tuple(one * t**i for i in range(lattice.m))
        if is_generic(xi, lattice):
            return xi
        t += 1


def vertex_index(v: Vertex, xi, generators) -> int:
    """Twice the number of inward edge generators along which ``<., xi>`` decreases."""
    count = 0
    for e in generators:
        s = linalg.dot(xi, e).sign()
        if s == 0:
            raise NonGeneric(f"xi is constant along an edge at vertex {v}")
        count += s < 0
    return 2 * count


def _heights(lattice, xi):
    return {i: linalg.dot(v.coords, xi) for i, v in enumerate(lattice.vertices)}


def min_vertex(F: Face, xi, lattice: FaceLattice, heights=None) -> int:
    """The unique vertex of ``F`` minimising ``<., xi>``."""
    if heights is None:
        heights = {i: linalg.dot(lattice.vertices[i].coords, xi) for i in F.vertices}
    best = min(F.vertices, key=lambda i: heights[i])
    ties = [i for i in F.vertices if heights[i] == heights[best]]
    if len(ties) > 1:
        raise NonGeneric(f"xi is constant on a face spanned by vertices {ties}")
    return best


def build_morse(lattice: FaceLattice, h: HRep, xi) -> MorseData:
    if len(xi) != lattice.m:
        raise ParseError(f"direction has {len(xi)} entries, expected {lattice.m}")
    if not is_generic(xi, lattice):
        raise NonGeneric(f"direction {[str(x) for x in xi]} is constant along some edge")
    heights = _heights(lattice, xi)
    descending, index = {}, {}
    for vid, v in enumerate(lattice.vertices):
        gens = edge_generators(v, h, lattice)
        index[vid] = vertex_index(v, xi, gens)
        descending[vid] = frozenset(
            j for j, e in zip(sorted(v.active), gens) if linalg.dot(xi, e).sign() < 0
        )
    mins = {key: min_vertex(F, xi, lattice, heights) for key, F in lattice.faces.items()}
    return MorseData(tuple(xi), heights, descending, index, mins)


def face_index(vid: int, F: Face, md: MorseData) -> int:
    """Index of vertex ``vid`` for the height function restricted to ``F``.

    Only the edges lying in ``F`` count, i.e. those leaving a facet not in
    ``F``'s facet set.
    """
    return 2 * len(md.descending[vid] - F.facets)


def partition_faces(k: int, md: MorseData, lattice: FaceLattice) -> IndexPartition:
    m = lattice.m
    if not 0 <= k <= m:
        raise ValueError(f"k={k} outside [0, {m}]")
    A, B = [], []
    for F in lattice.faces_of_dim(m - k):
        ind = md.index[md.min_vertex[F.facets]]
        if ind == 2 * k:
            A.append(F)
        elif ind < 2 * k:
            B.append(F)
        else:
            raise IndexBoundViolation(
                f"face with facets {sorted(F.facets)} has min-vertex index {ind} > {2 * k}"
            )
    return IndexPartition(k, tuple(A), tuple(B))


def cover_intersection_sums(k: int, part: IndexPartition, md: MorseData, lattice: FaceLattice) -> list:
    """Sums of ``|B_k^{i_1} cap ... cap B_k^{i_s}|`` over index sets of size s = 1..k.

    ``B_k^j`` holds the faces of ``B_k`` lying in the (m-k+1)-face ``sigma_j``
    and sharing its minimal vertex.  Each face ``F`` belongs to ``c(F)`` of
    these sets, so it contributes ``C(c(F), s)`` to the size-s sum.
    """
    sums = [0] * (k + 1)
    for F in part.B:
        lam = md.min_vertex[F.facets]
        c = 0
        for j in F.facets:
            sigma = F.facets - {j}
            if sigma in lattice.faces and md.min_vertex[sigma] == lam:
                c += 1
        for s in range(1, k + 1):
            sums[s] += comb(c, s)
    return sums[1:]


def parse_direction(text: str, field: FieldSpec) -> tuple:
    """Parse ``"1,2,3"`` or a JSON list of scalar text forms."""
    text = text.strip()
    if text.startswith("["):
        try:
            items = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad --xi JSON: {exc}") from exc
    else:
        items = [s for s in text.split(",")] if text else []
    return tuple(parse_scalar(x, field) for x in items)
