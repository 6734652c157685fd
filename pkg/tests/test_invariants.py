import random

import pytest

from quasifold import families
from quasifold.errors import EulerMismatch, NegativeEntry
from quasifold.invariants import (
    audit_dehn_sommerville,
    audit_inclusion_exclusion,
    audit_min_vertex,
    audit_morse_inequalities,
    betti_h,
    betti_morse,
    binomial,
    euler,
    h_vector,
    hodge_diamond,
    inclusion_exclusion_formula,
)
from quasifold.morse import build_morse, choose_generic, cover_intersection_sums, partition_faces
from quasifold.polytope import build_face_lattice, enumerate_vertices

from conftest import CORPUS_NAMES, corpus_entry


def analyse(h, seed=1):
    lattice = build_face_lattice(enumerate_vertices(h), h)
    return lattice, build_morse(lattice, h, choose_generic(lattice, seed))


@pytest.mark.parametrize(
    "f, h",
    [([4, 4, 1], [1, 2, 1]), ([5, 5, 1], [1, 3, 1]), ([20, 30, 12, 1], [1, 9, 9, 1]),
     ([8, 12, 6, 1], [1, 3, 3, 1]), ([1], [1]), ([2, 1], [1, 1])],
)
def test_h_vector_examples(f, h):
    assert h_vector(f) == h


def test_h_vector_negative():
    with pytest.raises(NegativeEntry):
        h_vector([2, 5, 1])


def test_binomial_boundaries():
    assert binomial(3, -1) == 0 and binomial(2, 3) == 0 and binomial(4, 2) == 6


def test_betti_examples(square):
    h, lattice = square
    md = build_morse(lattice, h, (lattice.field(1), lattice.field(2)))
    assert betti_morse(md, 2) == [1, 0, 2, 0, 1]
    assert betti_h([1, 3, 3, 1]) == [1, 0, 3, 0, 3, 0, 1]
    assert betti_h([1]) == [1]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_simplex_betti_and_hodge(m):
    lattice, md = analyse(families.simplex(m))
    b = betti_morse(md, m)
    assert b[::2] == [1] * (m + 1)
    hpq = hodge_diamond(b)
    assert [hpq[k][k] for k in range(m + 1)] == [1] * (m + 1)


def test_pentagon_betti(pentagon):
    h, lattice = pentagon
    md = build_morse(lattice, h, choose_generic(lattice, 1))
    assert betti_morse(md, 2) == [1, 0, 3, 0, 1] == betti_h(h_vector(lattice.f_vector))
    assert hodge_diamond([1, 0, 3, 0, 1]) == [[1, 0, 0], [0, 3, 0], [0, 0, 1]]


def test_euler_examples():
    assert euler([1, 0, 2, 0, 1], [4, 4, 1]) == 4
    assert euler([1, 0, 9, 0, 9, 0, 1], [20, 30, 12, 1]) == 20
    assert euler([1], [1]) == 1
    with pytest.raises(EulerMismatch):
        euler([1, 0, 2, 0, 1], [5, 5, 1])


def test_point_report():
    assert hodge_diamond([1]) == [[1]]


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_route_agreement_and_identities(name):
    h, lattice = corpus_entry(name)
    f = lattice.f_vector
    hv = h_vector(f)
    assert sum(hv) == f[0]
    assert hv == hv[::-1]
    assert audit_dehn_sommerville(hv).passed
    for seed in range(1, 11):
        md = build_morse(lattice, h, choose_generic(lattice, seed))
        b = betti_morse(md, h.m)
        assert b == betti_h(hv)
        assert euler(b, f) == f[0]
        hpq = hodge_diamond(b)
        assert all(hpq[p][q] == 0 for p in range(h.m + 1) for q in range(h.m + 1) if p != q)


def test_morse_inequality_examples(square):
    h, lattice = square
    md = build_morse(lattice, h, (lattice.field(1), lattice.field(2)))
    nu = betti_morse(md, 2)
    assert audit_morse_inequalities([1, 0, 2, 0, 1], nu).passed
    _, ldod = corpus_entry("dodecahedron")
    hd, _ = corpus_entry("dodecahedron")
    md = build_morse(ldod, hd, choose_generic(ldod, 1))
    nu = betti_morse(md, 3)
    assert nu == [1, 0, 9, 0, 9, 0, 1]
    assert audit_morse_inequalities(betti_h(h_vector(ldod.f_vector)), nu).passed


def test_morse_inequality_negative_control():
    # corrupted index table: an extra index-1 critical leaf and a missing index-2
    audit = audit_morse_inequalities([1, 0, 2, 0, 1], [1, 1, 1, 0, 1])
    assert not audit.passed
    # Euler equality holds but perfection fails
    audit = audit_morse_inequalities([1, 0, 2, 0, 1], [1, 1, 3, 0, 1])
    assert not audit.passed and audit.detail["euler_equal"]


def test_strong_inequalities_catch_missing_minimum():
    audit = audit_morse_inequalities([1, 0, 1], [0, 0, 2])
    assert not audit.passed and audit.detail["violations"][0]["degree"] == 0


def test_inclusion_exclusion_square(square):
    h, lattice = square
    md = build_morse(lattice, h, (lattice.field(1), lattice.field(2)))
    f = lattice.f_vector
    p1 = partition_faces(1, md, lattice)
    a1 = audit_inclusion_exclusion(1, p1, f, cover_intersection_sums(1, p1, md, lattice))
    assert a1.passed and a1.detail["B"] == 2 and a1.detail["formula"] == 2
    p2 = partition_faces(2, md, lattice)
    a2 = audit_inclusion_exclusion(2, p2, f, cover_intersection_sums(2, p2, md, lattice))
    assert a2.passed and a2.detail["B"] == 3 and a2.detail["formula"] == 3
    p0 = partition_faces(0, md, lattice)
    assert audit_inclusion_exclusion(0, p0, f).detail["formula"] == 0


def test_printed_sign_would_fail():
    # the (-1)^s normalisation gives |B_2| = -3 for the square
    f = [4, 4, 1]
    literal = sum((-1) ** s * binomial(s, 0) * f[s] for s in range(1, 3))
    assert literal == -3 and inclusion_exclusion_formula(2, f) == 3


@pytest.mark.parametrize("name", CORPUS_NAMES)
def test_inclusion_exclusion_corpus(name):
    h, lattice = corpus_entry(name)
    f = lattice.f_vector
    for seed in (1, 5, 10):
        md = build_morse(lattice, h, choose_generic(lattice, seed))
        for k in range(h.m + 1):
            part = partition_faces(k, md, lattice)
            audit = audit_inclusion_exclusion(k, part, f, cover_intersection_sums(k, part, md, lattice))
            assert audit.passed, audit.detail
        assert audit_min_vertex(md, lattice).passed


def test_truncation_adds_middle_ones():
    rng = random.Random(11)
    for _ in range(15):
        h = families.random_truncation(rng, max_cuts=2)
        lattice = build_face_lattice(enumerate_vertices(h), h)
        v = rng.choice(lattice.vertices)
        cut = families.truncate_vertex(h, v)
        cut_lattice = build_face_lattice(enumerate_vertices(cut), cut)
        before, after = h_vector(lattice.f_vector), h_vector(cut_lattice.f_vector)
        m = h.m
        assert [y - x for x, y in zip(before, after)] == [0] + [1] * (m - 1) + [0]


def test_products_multiply_h_polynomials():
    # h-polynomial of a product is the product of h-polynomials
    def poly_mul(p, q):
        out = [0] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] += x * y
        return out

    for a, b in [(1, 1), (1, 2), (2, 2), (1, 3)]:
        P = families.product(families.simplex(a), families.simplex(b))
        lattice, md = analyse(P)
        hv = h_vector(lattice.f_vector)
        assert hv == poly_mul([1] * (a + 1), [1] * (b + 1))
        assert betti_morse(md, a + b) == betti_h(hv)
