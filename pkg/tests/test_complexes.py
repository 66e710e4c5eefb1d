import json

import pytest
from hypothesis import given, strategies as st

from charvar.complexes import (
    EMPTY,
    NONEMPTY,
    SimplicialComplex,
    build_complex,
    certify_sphere,
    homology,
    intersection_status,
    intersection_table,
    boundary_complex,
    suspension,
    table_consistent,
)


def betti(c):
    return homology(c).reduced_betti


OCTAHEDRON = build_complex("abcdef", [(a, b, c) for a in "ab" for b in "cd" for c in "ef"])


def test_build_examples():
    tri = build_complex("ABC", [("A", "B"), ("B", "C"), ("C", "A")])
    assert tri.f_vector() == [3, 3] and tri.dim == 1
    assert build_complex("A", [("A",)]).dim == 0
    assert build_complex("ABC", [("A", "B", "C"), ("A", "B")]).facets == ((0, 1, 2),)
    with pytest.raises(ValueError, match="duplicate"):
        build_complex("AAB", [("A", "B")])
    with pytest.raises(ValueError):
        build_complex("AB", [()])


def test_homology_examples():
    tri = build_complex("ABC", [("A", "B"), ("B", "C"), ("C", "A")])
    assert betti(tri) == (0, 1)
    assert betti(OCTAHEDRON) == (0, 0, 1)
    assert betti(build_complex("AB", [])) == (1,)


def test_torsion_on_projective_plane():
    # 6-vertex triangulation of RP^2: H1 = Z/2, H2 = 0
    faces = ["123", "134", "145", "156", "162", "235", "346", "452", "563", "624"]
    rp2 = build_complex("123456", [tuple(f) for f in faces])
    h = homology(rp2)
    assert h.reduced_betti == (0, 0, 0) and h.torsion[1] == (2,)
    assert not certify_sphere(rp2, 2)


def test_suspension_examples():
    tri = build_complex("ABC", [("A", "B"), ("B", "C"), ("C", "A")])
    assert betti(suspension(tri, "x", "y")) == (0, 0, 1)
    assert betti(suspension(OCTAHEDRON, "x", "y")) == (0, 0, 0, 1)
    assert betti(suspension(build_complex("a", [("a",)]), "x", "y")) == (0, 0)
    with pytest.raises(ValueError, match="collide"):
        suspension(tri, "A", "y")


def test_boundary_complexes():
    n4, eq, full = boundary_complex("n4"), boundary_complex("n5_equator"), boundary_complex("n5-full")
    assert betti(n4) == (0, 1)
    assert eq.f_vector() == [8, 18, 12] and eq.euler_characteristic() == 2 and betti(eq) == (0, 0, 1)
    assert betti(full) == (0, 0, 0, 1)
    assert not full.has_face(["ex1", "ex2"])
    with pytest.raises(ValueError, match="unknown case"):
        boundary_complex("n6")


def test_certify_sphere():
    assert certify_sphere(boundary_complex("n4"), 1)
    assert certify_sphere(boundary_complex("n5_equator"), 2)
    assert certify_sphere(boundary_complex("n5_full"), 3)
    eq = boundary_complex("n5_equator")
    assert not certify_sphere(build_complex(eq.vertices, eq.labelled_facets()[1:]), 2)
    pendant = build_complex("ABCD", [("A", "B"), ("B", "C"), ("C", "A"), ("C", "D")])
    assert not certify_sphere(pendant, 1)
    assert not certify_sphere(boundary_complex("n4"), 2)


def test_every_vertex_link_of_full_complex_is_a_2_sphere():
    full = boundary_complex("n5_full")
    for v in range(len(full.vertices)):
        assert certify_sphere(full.link(v), 2)


def test_intersection_table_examples():
    assert intersection_status("n5", ["E1", "E4"]) == NONEMPTY
    assert intersection_status("n5", ["ex13p", "E4"]) == EMPTY
    assert intersection_status("n5", ["ex1", "ex2"]) == EMPTY
    assert intersection_status("n5", ["ex24m", "E1"]) == EMPTY
    assert intersection_status("n4", ["E1", "E2", "E3"]) == EMPTY
    assert table_consistent("n4") and table_consistent("n5")
    assert len([t for t in intersection_table("n5") if len(t[0]) == 2]) == 45


def test_json_round_trip():
    for case in ("n4", "n5_equator", "n5_full"):
        c = boundary_complex(case)
        assert SimplicialComplex.from_json(json.loads(json.dumps(c.to_json()))) == c
    with pytest.raises(ValueError):
        SimplicialComplex.from_json({"vertices": ["a"], "facets": [[0, 3]]})


@st.composite
def small_complexes(draw):
    n = draw(st.integers(1, 7))
    labels = [f"v{i}" for i in range(n)]
    facets = draw(st.lists(st.lists(st.sampled_from(labels), min_size=1, max_size=3, unique=True),
                           min_size=1, max_size=8))
    return build_complex(labels, facets)


@given(small_complexes())
def test_suspension_shifts_betti(c):
    s = suspension(c, "apex1", "apex2")
    b, bs = betti(c), betti(s)
    assert bs[0] == 0
    assert bs[1:] == b
    assert homology(s).torsion[1:] == homology(c).torsion


@given(small_complexes())
def test_euler_characteristic_matches_betti(c):
    h = homology(c)
    assert c.euler_characteristic() - 1 == sum((-1) ** k * b for k, b in enumerate(h.reduced_betti))
