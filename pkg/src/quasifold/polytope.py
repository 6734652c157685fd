"""Simple convex polytopes given by half-spaces ``<mu, X_j> >= lambda_j``.

Vertices are found by solving every m x m system of facet equations exactly.
Faces of a simple polytope are then in bijection with the subsets of the
active facet sets of its vertices, which gives the whole face lattice.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from . import linalg
from .errors import Empty, NonSimple, ParseError, Redundant, Unbounded
from .scalar import QQ, FieldSpec, Scalar, parse_scalar, render_scalar

__all__ = [
    "HalfSpace",
    "HRep",
    "Vertex",
    "Face",
    "FaceLattice",
    "enumerate_vertices",
    "check_simple",
    "build_face_lattice",
    "edge_generators",
    "load_hrep",
]


@dataclass(frozen=True)
class HalfSpace:
    """The closed half-space ``<mu, normal> >= offset``."""

    normal: tuple
    offset: Scalar

    def slack(self, mu) -> Scalar:
        return linalg.dot(mu, self.normal) - self.offset


@dataclass(frozen=True)
class HRep:
    m: int
    field: FieldSpec
    halfspaces: tuple
    name: str = ""

    def __post_init__(self):
        if self.m < 0:
            raise ParseError("dimension m must be non-negative")
        for j, hs in enumerate(self.halfspaces):
            if len(hs.normal) != self.m:
                raise ParseError(f"half-space {j}: normal has {len(hs.normal)} entries, expected {self.m}")
            for x in (*hs.normal, hs.offset):
                if x.field != self.field:
                    raise ParseError(f"half-space {j}: entry {x} is not in {self.field}")
            if not any(hs.normal):
                raise ParseError(f"half-space {j}: zero normal")

    @property
    def d(self) -> int:
        return len(self.halfspaces)

    @property
    def normals(self) -> list:
        return [hs.normal for hs in self.halfspaces]

    @property
    def offsets(self) -> list:
        return [hs.offset for hs in self.halfspaces]

    def contains(self, mu) -> bool:
        return all(hs.slack(mu).sign() >= 0 for hs in self.halfspaces)

    @classmethod
    def from_rows(cls, rows, offsets, field: FieldSpec = QQ, m=None, name=""):
        """Build from plain numbers; entries may be Scalars, ints or Fractions."""

        def lift(x):
            return x if isinstance(x, Scalar) else field(x)

        if m is None:
            m = len(rows[0]) if rows else 0
        hs = tuple(
            HalfSpace(tuple(lift(x) for x in row), lift(off)) for row, off in zip(rows, offsets)
        )
        return cls(m, field, hs, name)

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "HRep":
        try:
            m = data["m"]
            radicand = data.get("field", {}).get("radicand", 0)
            raw = data["halfspaces"]
        except (KeyError, AttributeError, TypeError) as exc:
            raise ParseError(f"malformed polytope file: {exc}") from exc
        if isinstance(m, bool) or not isinstance(m, int):
            raise ParseError(f"m must be an integer, got {m!r}")
        fs = FieldSpec(radicand)
        halfspaces = []
        for j, entry in enumerate(raw):
            try:
                normal = tuple(parse_scalar(x, fs) for x in entry["normal"])
                offset = parse_scalar(entry["offset"], fs)
            except (KeyError, TypeError) as exc:
                raise ParseError(f"half-space {j}: {exc}") from exc
            halfspaces.append(HalfSpace(normal, offset))
        return cls(m, fs, tuple(halfspaces), name or data.get("name", ""))

    def to_json(self) -> dict:
        out = {}
        if self.name:
            out["name"] = self.name
        out["m"] = self.m
        out["field"] = {"radicand": self.field.radicand}
        out["halfspaces"] = [
            {"normal": [render_scalar(x) for x in hs.normal], "offset": render_scalar(hs.offset)}
            for hs in self.halfspaces
        ]
        return out


def load_hrep(path) -> HRep:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    return HRep.from_json(data, name=data.get("name", path.stem) if isinstance(data, dict) else "")


@dataclass(frozen=True)
class Vertex:
    coords: tuple
    active: frozenset

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.coords) + ")"


@dataclass(frozen=True)
class Face:
    facets: frozenset
    dim: int
    vertices: tuple  # sorted vertex ids


@dataclass
class FaceLattice:
    m: int
    vertices: list
    faces: dict = dc_field(default_factory=dict)  # frozenset of facets -> Face
    field: FieldSpec = QQ

    @property
    def f_vector(self) -> list:
        f = [0] * (self.m + 1)
        for face in self.faces.values():
            f[face.dim] += 1
        return f

    def faces_of_dim(self, j: int) -> list:
        return sorted(
            (F for F in self.faces.values() if F.dim == j),
            key=lambda F: (F.vertices, sorted(F.facets)),
        )

    @property
    def top(self) -> Face:
        return self.faces[frozenset()]

    def edges(self) -> list:
        return self.faces_of_dim(1)

    def edge_directions(self) -> list:
        out = []
        for e in self.edges():
            u, w = e.vertices
            out.append(tuple(y - x for x, y in zip(self.vertices[u].coords, self.vertices[w].coords)))
        return out

    def face_containing(self, facets) -> Face:
        return self.faces[frozenset(facets)]

    @staticmethod
    def contains(big: Face, small: Face) -> bool:
        """Containment in the face poset: ``small`` is a face of ``big``."""
        return big.facets <= small.facets

    def vertex_id(self, v: Vertex) -> int:
        return self.vertices.index(v)


def _raw_vertices(h: HRep) -> list:
    m = h.m
    normals = h.normals
    if (linalg.rank(normals) if normals else 0) < m:
        raise Unbounded("facet normals do not span the ambient space, the region contains a line")
    found = {}
    for combo in itertools.combinations(range(h.d), m):
        A = [normals[j] for j in combo]
        b = [h.halfspaces[j].offset for j in combo]
        mu = linalg.solve(A, b)
        if mu is None:
            continue
        mu = tuple(mu)
        if mu in found:
            continue
        slacks = [hs.slack(mu).sign() for hs in h.halfspaces]
        if min(slacks, default=0) < 0:
            continue
        found[mu] = frozenset(j for j, s in enumerate(slacks) if s == 0)
    return [Vertex(mu, act) for mu, act in sorted(found.items())]


def _edge_direction(v: Vertex, drop: int, h: HRep):
    """Direction of the edge at ``v`` leaving facet ``drop``, pointing into the polytope."""
    keep = sorted(v.active - {drop})
    zero = h.field(0)
    if keep:
        e = linalg.nullspace([h.normals[j] for j in keep])
        if len(e) != 1:
            raise NonSimple(f"active normals at vertex {v} are linearly dependent")
        e = e[0]
    else:
        e = [zero + 1]
    s = linalg.dot(e, h.normals[drop]).sign()
    if s == 0:
        raise NonSimple(f"active normals at vertex {v} are linearly dependent")
    if s < 0:
        e = [-x for x in e]
    return tuple(e)


def _edge_endpoint(v: Vertex, e, h: HRep):
    """Far endpoint of the edge from ``v`` along ``e``, or ``None`` for a ray."""
    best = None
    for hs in h.halfspaces:
        rate = linalg.dot(e, hs.normal)
        if rate.sign() < 0:
            t = hs.slack(v.coords) / (-rate)
            if best is None or t < best:
                best = t
    if best is None:
        return None
    return tuple(x + best * y for x, y in zip(v.coords, e))


def enumerate_vertices(h: HRep, require_simple: bool = True) -> list:
    """All vertices of the polytope, sorted lexicographically by coordinates.

    With ``require_simple`` the polytope is also checked to be simple,
    bounded and free of redundant half-spaces; ``check_simple`` can be used
    on the output of ``require_simple=False`` instead.
    """
    vs = _raw_vertices(h)
    if not vs:
        raise Empty("no feasible vertex: the polytope is empty")
    if not require_simple:
        return vs
    m = h.m
    for v in vs:
        if len(v.active) > m:
            raise NonSimple(f"vertex {v} lies on {len(v.active)} facets, expected {m}")
    used = set().union(*(v.active for v in vs))
    unused = sorted(set(range(h.d)) - used)
    if unused:
        raise Redundant(f"half-spaces {unused} are never active; remove them or fix their offsets")
    if m > 0 and len(vs) < m + 1:
        raise Unbounded(f"only {len(vs)} vertices for an {m}-dimensional polytope")
    coords = {v.coords for v in vs}
    for v in vs:
        for j in v.active:
            w = _edge_endpoint(v, _edge_direction(v, j, h), h)
            if w is None:
                raise Unbounded(f"the edge at vertex {v} leaving facet {j} is a ray")
            if w not in coords:
                raise NonSimple(f"edge endpoint {w} from vertex {v} is not a vertex")
    return vs


def check_simple(vs: list, h: HRep) -> bool:
    """True iff every vertex has exactly m active facets with independent normals."""
    for v in vs:
        if len(v.active) != h.m:
            return False
        if h.m and linalg.rank([h.normals[j] for j in sorted(v.active)]) != h.m:
            return False
    return True


def build_face_lattice(vs: list, h: HRep) -> FaceLattice:
    lattice = FaceLattice(h.m, list(vs), field=h.field)
    seen = {}
    for v in vs:
        act = sorted(v.active)
        for r in range(len(act) + 1):
            for S in itertools.combinations(act, r):
                S = frozenset(S)
                if S in seen:
                    continue
                seen[S] = tuple(i for i, u in enumerate(vs) if S <= u.active)
    by_vertices = {}
    for S, ids in seen.items():
        if ids not in by_vertices:
            maximal = frozenset.intersection(*(vs[i].active for i in ids))
            by_vertices[ids] = Face(maximal, h.m - len(maximal), ids)
    for face in by_vertices.values():
        lattice.faces[face.facets] = face
    return lattice


def edge_generators(v: Vertex, h: HRep, lattice: FaceLattice) -> list:
    """Inward edge vectors at ``v``, one per active facet in sorted order.

    The j-th vector runs along the edge obtained by dropping the j-th active
    facet, and equals (other endpoint) - v.
    """
    vid = lattice.vertex_id(v)
    out = []
    for j in sorted(v.active):
        edge = lattice.faces[v.active - {j}]
        (w,) = [i for i in edge.vertices if i != vid]
        other = lattice.vertices[w].coords
        out.append(tuple(y - x for x, y in zip(v.coords, other)))
    return out
