import functools

import pytest

from quasifold.cli import corpus_dir
from quasifold.polytope import build_face_lattice, enumerate_vertices, load_hrep

CORPUS_NAMES = sorted(p.stem for p in corpus_dir().glob("*.json"))


@functools.lru_cache(maxsize=None)
def corpus_entry(name):
    h = load_hrep(corpus_dir() / f"{name}.json")
    vs = enumerate_vertices(h)
    return h, build_face_lattice(vs, h)


@pytest.fixture(params=CORPUS_NAMES)
def corpus_polytope(request):
    return corpus_entry(request.param)


@pytest.fixture
def square():
    return corpus_entry("square")


@pytest.fixture
def simplex2():
    return corpus_entry("simplex2")


@pytest.fixture
def pentagon():
    return corpus_entry("pentagon")
