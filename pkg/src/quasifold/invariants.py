"""Basic Betti numbers, Hodge numbers and Euler characteristic.

Two independent routes give the Betti table: counting vertices by Morse
index, and the h-vector of the polytope.  The audits below compare them and
check the counting identities that tie them together.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .errors import EulerMismatch, NegativeEntry
from .morse import IndexPartition, MorseData, face_index

__all__ = [
    "binomial",
    "h_vector",
    "betti_morse",
    "betti_h",
    "euler",
    "hodge_diamond",
    "Audit",
    "audit_morse_inequalities",
    "audit_inclusion_exclusion",
    "audit_dehn_sommerville",
    "audit_route_agreement",
    "audit_min_vertex",
    "audit_hodge",
]


def binomial(n: int, r: int) -> int:
    """C(n, r), zero outside 0 <= r <= n."""
    if r < 0 or n < 0 or r > n:
        return 0
    return comb(n, r)


def h_vector(f) -> list:
    """h_k = sum_{i<=k} (-1)^(k-i) C(m-i, m-k) f_{m-i} for a simple m-polytope."""
    m = len(f) - 1
    h = [
        sum((-1) ** (k - i) * binomial(m - i, m - k) * f[m - i] for i in range(k + 1))
        for k in range(m + 1)
    ]
    if any(x < 0 for x in h):
        raise NegativeEntry(f"h-vector {h} has a negative entry (is the polytope simple?)")
    return h


def betti_morse(md: MorseData, m: int) -> list:
    """b_{2k} = number of vertices of index 2k, odd degrees zero."""
    b = [0] * (2 * m + 1)
    for ind in md.index.values():
        b[ind] += 1
    return b


def betti_h(h) -> list:
    m = len(h) - 1
    b = [0] * (2 * m + 1)
    for k, hk in enumerate(h):
        b[2 * k] = hk
    return b


def euler(b, f) -> int:
    chi = sum((-1) ** j * bj for j, bj in enumerate(b))
    if chi != f[0]:
        raise EulerMismatch(f"alternating Betti sum {chi} differs from vertex count {f[0]}")
    return chi


def hodge_diamond(b) -> list:
    """(m+1) x (m+1) table with h^{k,k} = b_{2k} and zeros off the diagonal."""
    m = (len(b) - 1) // 2
    hpq = [[b[2 * p] if p == q else 0 for q in range(m + 1)] for p in range(m + 1)]
    for j in range(2 * m + 1):
        row = sum(hpq[p][j - p] for p in range(m + 1) if 0 <= j - p <= m)
        assert row == b[j], (j, row, b[j])
    return hpq


@dataclass
class Audit:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def audit_morse_inequalities(b, nu) -> Audit:
    """Strong Morse inequalities, the Euler equality, and degreewise perfection.

    ``nu[j]`` is the number of critical leaves of index j (so odd entries
    are 0 for the toric case).
    """
    q = len(b) - 1
    failures = []
    for j in range(q + 1):
        lhs = sum((-1) ** (j - i) * b[i] for i in range(j + 1))
        rhs = sum((-1) ** (j - i) * nu[i] for i in range(j + 1))
        if lhs > rhs:
            failures.append({"degree": j, "betti_sum": lhs, "critical_sum": rhs})
    euler_b = sum((-1) ** j * x for j, x in enumerate(b))
    euler_nu = sum((-1) ** j * x for j, x in enumerate(nu))
    perfect = list(b) == list(nu)
    ok = not failures and euler_b == euler_nu and perfect
    return Audit(
        "morse_inequalities",
        ok,
        {"nu": list(nu), "betti": list(b), "violations": failures,
         "euler_equal": euler_b == euler_nu, "perfect": perfect},
    )


def inclusion_exclusion_formula(k: int, f) -> int:
    """sum_{s=1}^{k} (-1)^(s-1) C(m-k+s, m-k) f_{m-k+s}."""
    m = len(f) - 1
    return sum((-1) ** (s - 1) * binomial(m - k + s, m - k) * f[m - k + s] for s in range(1, k + 1))


def audit_inclusion_exclusion(k: int, part: IndexPartition, f, cover_sums=None) -> Audit:
    m = len(f) - 1
    A, B = len(part.A), len(part.B)
    formula = inclusion_exclusion_formula(k, f)
    detail = {"k": k, "A": A, "B": B, "f": f[m - k], "formula": formula}
    ok = A + B == f[m - k] and B == formula
    if cover_sums is not None:
        expected = [binomial(m - k + s, m - k) * f[m - k + s] for s in range(1, k + 1)]
        alternating = sum((-1) ** s * x for s, x in enumerate(cover_sums))
        detail["cover_sums"] = list(cover_sums)
        detail["cover_expected"] = expected
        ok = ok and list(cover_sums) == expected and alternating == B
    return Audit(f"inclusion_exclusion_k{k}", ok, detail)


def audit_dehn_sommerville(h) -> Audit:
    m = len(h) - 1
    bad = [k for k in range(m + 1) if h[k] != h[m - k]]
    return Audit("dehn_sommerville", not bad, {"h": list(h), "asymmetric_k": bad})


def audit_route_agreement(b_morse, b_h) -> Audit:
    return Audit(
        "route_agreement",
        list(b_morse) == list(b_h),
        {"morse": list(b_morse), "h_vector": list(b_h)},
    )


def audit_min_vertex(md: MorseData, lattice) -> Audit:
    """Per face: the bound ind(lambda_F) <= 2 codim F, and that the vertex of
    least face-relative index is unique and equals the height minimiser."""
    m = lattice.m
    bound_bad, argmin_bad = [], []
    for key, F in lattice.faces.items():
        lam = md.min_vertex[key]
        if md.index[lam] > 2 * (m - F.dim):
            bound_bad.append(sorted(key))
        rel = {v: face_index(v, F, md) for v in F.vertices}
        low = min(rel.values())
        winners = [v for v, r in rel.items() if r == low]
        if winners != [lam] or low != 0:
            argmin_bad.append(sorted(key))
    return Audit(
        "min_vertex",
        not bound_bad and not argmin_bad,
        {"faces": len(lattice.faces), "bound_violations": bound_bad, "argmin_violations": argmin_bad},
    )


def audit_hodge(hpq, b) -> Audit:
    m = len(hpq) - 1
    off = [[p, q] for p in range(m + 1) for q in range(m + 1) if p != q and hpq[p][q]]
    rows = [sum(hpq[p][j - p] for p in range(m + 1) if 0 <= j - p <= m) for j in range(2 * m + 1)]
    return Audit(
        "hodge_diagonal",
        not off and rows == list(b),
        {"off_diagonal_nonzero": off, "row_sums": rows},
    )
