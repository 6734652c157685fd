"""Full analysis of one polytope: vertices, lattice, Morse data, invariants,
construction data and audits, collected into a JSON-ready report."""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import delzant, invariants as inv, morse
from .errors import EulerMismatch, IndexBoundViolation, NegativeEntry, QuasifoldError
from .polytope import HRep, build_face_lattice, enumerate_vertices
from .scalar import render_scalar

XI_SEEDS = range(1, 11)
LEVEL_SET_SAMPLES = 100
SAMPLE_SEED = 0

REPORT_SCHEMA = {
    "type": "object",
    "required": ["name", "m", "field", "f", "h", "betti", "hodge", "euler", "xi", "audits", "construction"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "m": {"type": "integer", "minimum": 0},
        "field": {"type": "object", "required": ["radicand"], "properties": {"radicand": {"type": "integer"}}},
        "f": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "h": {"type": ["array", "null"], "items": {"type": "integer"}},
        "betti": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "betti_h": {"type": ["array", "null"], "items": {"type": "integer"}},
        "hodge": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}}},
        "euler": {"type": ["integer", "null"]},
        "xi": {"type": "array", "items": {"$ref": "#/$defs/scalar"}},
        "vertices": {"type": "array"},
        "audits": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "pass", "detail"],
                "properties": {"name": {"type": "string"}, "pass": {"type": "boolean"}, "detail": {"type": "object"}},
            },
        },
        "construction": {
            "type": "object",
            "required": ["d", "m", "n_basis", "null_closed", "dimensions"],
            "properties": {
                "d": {"type": "integer"},
                "m": {"type": "integer"},
                "n_basis": {"type": "array", "items": {"type": "array", "items": {"$ref": "#/$defs/scalar"}}},
                "null_closed": {"enum": [delzant.RATIONAL_CLOSED, delzant.DENSE_WINDING]},
                "dimensions": {"type": "object"},
                "moment_map_convention": {"type": "string"},
            },
        },
    },
    "$defs": {
        "scalar": {
            "oneOf": [
                {"type": "string"},
                {"type": "object", "required": ["a", "b"], "properties": {"a": {"type": "string"}, "b": {"type": "string"}},
                 "additionalProperties": False},
            ]
        }
    },
}


def validate_report(report: dict) -> None:
    import jsonschema

    jsonschema.validate(report, REPORT_SCHEMA)


@dataclass
class Analysis:
    """Everything computed for one polytope; ``report`` is the JSON form."""

    hrep: HRep
    lattice: object
    md: morse.MorseData
    construction: delzant.ConstructionData
    report: dict

    @property
    def passed(self) -> bool:
        return all(a["pass"] for a in self.report["audits"])


def _level_set_audit(lattice, cd) -> inv.Audit:
    rng = random.Random(SAMPLE_SEED)
    points = delzant.sample_points(lattice, LEVEL_SET_SAMPLES, rng)
    nonzero = 0
    for mu in points:
        fp = delzant.fiber_point(mu, cd)
        nonzero += sum(1 for r in fp.residuals if r)
    tight_bad = []
    for vid, v in enumerate(lattice.vertices):
        fp = delzant.fiber_point(v.coords, cd)
        zeros = {j for j, r in enumerate(fp.r2) if not r}
        if zeros != set(v.active) or any(fp.residuals):
            tight_bad.append(vid)
    return inv.Audit(
        "level_set",
        nonzero == 0 and not tight_bad,
        {"points": len(points), "nonzero_residuals": nonzero, "vertex_mismatches": tight_bad},
    )


def _xi_independence_audit(lattice, h, counts) -> inv.Audit:
    seen = {}
    for seed in XI_SEEDS:
        xi = morse.choose_generic(lattice, seed)
        md = morse.build_morse(lattice, h, xi)
        seen[seed] = md.index_counts(lattice.m)
    bad = [s for s, c in seen.items() if c != counts]
    return inv.Audit("xi_independence", not bad, {"seeds": list(XI_SEEDS), "reference": counts, "differing_seeds": bad})


def analyze(h: HRep, xi=None, seed: int = 1, full_audit: bool = False) -> Analysis:
    """Run the pipeline.  Input errors raise; audit failures are recorded."""
    vs = enumerate_vertices(h)
    lattice = build_face_lattice(vs, h)
    m = h.m
    if xi is None:
        xi = morse.choose_generic(lattice, seed)
    md = morse.build_morse(lattice, h, xi)
    cd = delzant.build_construction(h)

    f = lattice.f_vector
    audits = []
    b = inv.betti_morse(md, m)
    try:
        hv = inv.h_vector(f)
        bh = inv.betti_h(hv)
    except NegativeEntry as exc:
        hv = bh = None
        audits.append(inv.Audit("h_vector", False, {"error": str(exc)}))
    audits.append(inv.audit_route_agreement(b, bh or []))
    try:
        chi = inv.euler(b, f)
        audits.append(inv.Audit("euler", True, {"euler": chi, "f0": f[0]}))
    except EulerMismatch as exc:
        chi = None
        audits.append(inv.Audit("euler", False, {"error": str(exc)}))
    odd = [j for j in range(1, 2 * m + 1, 2) if b[j]]
    audits.append(inv.Audit("odd_betti_vanish", not odd, {"nonzero_odd_degrees": odd}))
    hpq = inv.hodge_diamond(b)
    audits.append(inv.audit_hodge(hpq, b))

    if full_audit:
        nu = [0] * (2 * m + 1)
        for ind in md.index.values():
            nu[ind] += 1
        audits.append(inv.audit_morse_inequalities(b, nu))
        for k in range(m + 1):
            try:
                part = morse.partition_faces(k, md, lattice)
            except IndexBoundViolation as exc:
                audits.append(inv.Audit(f"inclusion_exclusion_k{k}", False, {"error": str(exc)}))
                continue
            sums = morse.cover_intersection_sums(k, part, md, lattice)
            audits.append(inv.audit_inclusion_exclusion(k, part, f, sums))
        if hv is not None:
            audits.append(inv.audit_dehn_sommerville(hv))
        audits.append(inv.audit_min_vertex(md, lattice))
        audits.append(_xi_independence_audit(lattice, h, md.index_counts(m)))
        audits.append(_level_set_audit(lattice, cd))

    report = {
        "name": h.name,
        "m": m,
        "field": {"radicand": h.field.radicand},
        "f": f,
        "h": hv,
        "betti": b,
        "betti_h": bh,
        "hodge": hpq,
        "euler": chi,
        "xi": [render_scalar(x) for x in md.xi],
        "vertices": [
            {
                "coords": [render_scalar(x) for x in v.coords],
                "index": md.index[vid],
                "active_normals": [[render_scalar(x) for x in h.normals[j]] for j in sorted(v.active)],
            }
            for vid, v in enumerate(lattice.vertices)
        ],
        "audits": [a.to_json() for a in audits],
        "construction": cd.to_json(),
    }
    return Analysis(h, lattice, md, cd, report)


def render_text(report: dict) -> str:
    k = report["field"]["radicand"]
    lines = [f"polytope: {report['name'] or '(unnamed)'}  m={report['m']}  field radicand={report['field']['radicand']}"]
    lines.append("xi: (" + ", ".join(_scalar_text(x, k) for x in report["xi"]) + ")")
    lines.append(f"f-vector: {report['f']}")
    lines.append(f"h-vector: {report['h']}")
    lines.append("betti:    " + " ".join(f"b{j}={x}" for j, x in enumerate(report["betti"])))
    lines.append(f"euler:    {report['euler']}")
    lines.append("hodge diamond (h^{p,q}, rows p):")
    for row in report["hodge"]:
        lines.append("  " + " ".join(f"{x:3d}" for x in row))
    c = report["construction"]
    dims = c["dimensions"]
    lines.append(
        f"construction: d={c['d']} m={c['m']} dim_M={dims['dim_M']} dim_F={dims['dim_F']} "
        f"codim={dims['codim']} null subgroup: {c['null_closed']}"
    )
    for eta in c["n_basis"]:
        lines.append("  n: (" + ", ".join(_scalar_text(x, k) for x in eta) + ")")
    lines.append(f"  convention: {c['moment_map_convention']}")
    lines.append("audits:")
    for a in report["audits"]:
        lines.append(f"  [{'PASS' if a['pass'] else 'FAIL'}] {a['name']}")
    return "\n".join(lines) + "\n"


def _scalar_text(x, k) -> str:
    if isinstance(x, dict):
        a, b = x["a"], x["b"]
        sep = " - " if b.startswith("-") else " + "
        return f"{a}{sep}{b.lstrip('-')}*sqrt({k})"
    return x


__all__ = ["analyze", "Analysis", "render_text", "validate_report", "REPORT_SCHEMA", "QuasifoldError"]
