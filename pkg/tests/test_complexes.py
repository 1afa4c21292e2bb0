"""Face descriptors, patch invariants, vertex figures, axiom validation."""

import pytest

from skelforge.complexes import (
    FaceDescriptor,
    Region,
    SkeletalComplex,
    graph_identify,
    validate,
    _CATALOG,
    _multigraph,
    _multigraph_isomorphic,
)
from skelforge.errors import BoundaryError, DegenerateFaceError


SQUARE = FaceDescriptor([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)])
ZIGZAG = FaceDescriptor([(0, 0, 0), (1, 0, 0)], period_vector=(1, 1, 0))


class TestFaceDescriptor:
    def test_finite_needs_three_distinct(self):
        with pytest.raises(DegenerateFaceError):
            FaceDescriptor([(0, 0, 0), (1, 0, 0)])
        with pytest.raises(DegenerateFaceError):
            FaceDescriptor([(0, 0, 0), (1, 0, 0), (0, 0, 0)])

    def test_infinite_rejects_zero_period(self):
        with pytest.raises(DegenerateFaceError):
            FaceDescriptor([(0, 0, 0)], period_vector=(0, 0, 0))

    def test_infinite_rejects_repeats_under_translation(self):
        with pytest.raises(DegenerateFaceError):
            FaceDescriptor([(0, 0, 0), (1, 1, 0)], period_vector=(1, 1, 0))

    def test_walk_indexing(self):
        assert ZIGZAG.vertex(2) == (1, 1, 0)
        assert ZIGZAG.vertex(-1) == (0, -1, 0)
        assert SQUARE.vertex(5) == (1, 0, 0)

    def test_canonical_key_rotation_reflection_invariant(self):
        rotations = [
            FaceDescriptor(SQUARE.vertices[i:] + SQUARE.vertices[:i])
            for i in range(4)
        ]
        rotations.append(SQUARE.reversed())
        keys = {f.canonical_key() for f in rotations}
        assert len(keys) == 1

    def test_canonical_key_infinite_anchor_and_direction(self):
        same = [
            ZIGZAG,
            FaceDescriptor([(1, 1, 0), (2, 1, 0)], period_vector=(1, 1, 0)),
            FaceDescriptor([(1, 0, 0), (0, 0, 0)], period_vector=(-1, -1, 0)),
            FaceDescriptor([(2, 2, 0), (3, 2, 0)], period_vector=(1, 1, 0)),
        ]
        keys = {f.canonical_key() for f in same}
        assert len(keys) == 1
        other = FaceDescriptor([(0, 0, 0), (0, 1, 0)], period_vector=(1, 1, 0))
        assert other.canonical_key() not in keys

    def test_window_covers_region(self):
        region = Region((0, 0, 0), 3)
        lo, hi = ZIGZAG.window(region)
        pts = [ZIGZAG.vertex(k) for k in range(lo, hi + 1)]
        inside = [p for p in pts if region.contains(p)]
        assert inside and region.contains(pts[1])
        assert not region.contains(ZIGZAG.vertex(lo - 1))
        assert not region.contains(ZIGZAG.vertex(hi + 1))

    def test_window_misses_region(self):
        far = Region((100, 100, 0), 2)
        assert SQUARE.window(far) is None
        aside = Region((10, -10, 0), 2)
        assert ZIGZAG.window(aside) is None

    def test_positions_of(self):
        assert SQUARE.positions_of((1, 1, 0)) == [2]
        assert ZIGZAG.positions_of((2, 1, 0)) == [3]
        assert ZIGZAG.positions_of((5, 5, 5)) == []


import itertools

from hypothesis import given, settings, strategies as st

from skelforge.geometry import Isometry

_PERMS = [
    tuple(tuple(s[i] if j == p[i] else 0 for j in range(3)) for i in range(3))
    for p in itertools.permutations(range(3))
    for s in itertools.product((1, -1), repeat=3)
]
_FACES = [
    SQUARE,
    ZIGZAG,
    FaceDescriptor([(0, 0, 0), (0, 0, -1), (0, -1, -1), (1, -1, -1),
                    (1, -1, 0), (1, 0, 0)]),
    FaceDescriptor([(0, 0, 0), (0, 1, -1), (1, 2, -1), (1, 3, 0)],
                   period_vector=(0, 4, 0)),
]


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(_FACES),
    st.sampled_from(_PERMS),
    st.tuples(*[st.integers(-3, 3)] * 3),
    st.integers(0, 7),
    st.booleans(),
)
def test_face_key_depends_only_on_the_point_set(face, m, t, rot, rev):
    # the canonical key must not see how the face was listed, only where it is
    g = Isometry(m, t, check=False)
    moved = face.transform(g)
    n = len(moved.vertices)
    relisted = FaceDescriptor(
        tuple(moved.vertex(rot % n + i) for i in range(n)),
        moved.period_vector,
        check=False,
    )
    if rev:
        relisted = relisted.reversed()
    assert relisted.canonical_key() == moved.canonical_key()


class TestSkeletalComplex:
    def test_face_edges_and_support_vertices_added(self):
        region = Region((0, 0, 0), 1)
        c = SkeletalComplex([], [], [SQUARE], region)
        assert c.counts() == (4, 4, 1)
        assert c.has_edge((0, 0, 0), (1, 0, 0))

    def test_duplicate_faces_collapse(self):
        region = Region((0, 0, 0), 2)
        c = SkeletalComplex([], [], [SQUARE, SQUARE.reversed()], region)
        assert c.counts()[2] == 1

    def test_vertex_figure_boundary_error(self, built):
        cube = built("cube")
        with pytest.raises(BoundaryError):
            cube.vertex_figure((9, 9, 9))

    def test_cube_vertex_figure_is_a_triangle_cycle(self, built):
        cube = built("cube")
        vf = cube.vertex_figure((1, 1, 1))
        assert len(vf.nodes) == 3
        assert vf.is_single_cycle()
        # triangles are deliberately outside the naming catalog
        assert graph_identify(vf) == "unknown"

    def test_chiral_hexagon_vertex_figure_matches_formula(self, built):
        # the neighbor cycle at the origin for parameters (1, 0)
        p10 = built("P:1,0")
        vf = p10.vertex_figure((0, 0, 0))
        assert vf.nodes == frozenset(
            [(1, 0, 0), (0, -1, 0), (0, 0, 1), (-1, 0, 0), (0, 1, 0), (0, 0, -1)]
        )
        assert vf.is_single_cycle()
        listed = [(1, 0, 0), (0, -1, 0), (0, 0, 1), (-1, 0, 0), (0, 1, 0), (0, 0, -1)]
        expected_edges = {
            frozenset((listed[i], listed[(i + 1) % 6])) for i in range(6)
        }
        assert set(vf.edges) == expected_edges
        assert all(m == 1 for m in vf.edges.values())


class TestValidation:
    def test_cube_is_a_polyhedron(self, built):
        rep = validate(built("cube"), "polyhedron")
        assert rep.passed and rep.r == 2
        assert rep.discreteness == "finite"

    def test_two_skeleton_is_a_complex_with_r4(self, built):
        rep = validate(built("skel2cubic", 3), "complex")
        assert rep.passed and rep.r == 4

    def test_two_skeleton_fails_polyhedron_mode(self, built):
        rep = validate(built("skel2cubic", 3), "polyhedron")
        assert not rep.passed
        assert "c:faces-per-edge" in rep.failed_axioms()

    def test_removing_a_face_breaks_constancy(self, built):
        skel = built("skel2cubic", 3)
        center_face = next(
            f for f in skel.faces if (0, 0, 0) in f.vertices and (1, 1, 0) in f.vertices
        )
        broken = SkeletalComplex(
            list(skel.vertices),
            list(skel.edge_points),
            [f for f in skel.faces if f is not center_face],
            skel.region,
        )
        rep = validate(broken, "complex")
        assert not rep.passed
        assert "c:faces-per-edge" in rep.failed_axioms()

    def test_periodic_discreteness_certificate(self, built):
        rep = validate(built("P:1,0"), "polyhedron")
        assert rep.passed
        assert rep.discreteness.startswith("periodic")


class TestGraphIdentify:
    def test_catalog_self_identification(self):
        for name, adj in _CATALOG.items():
            assert graph_identify(adj) == name

    def test_unknown_graph(self):
        assert graph_identify(_multigraph([(0, 1), (1, 2)])) == "unknown"
        # a single triangle is not in the catalog either
        assert graph_identify(_multigraph([(0, 1), (1, 2), (2, 0)])) == "unknown"

    def test_double_distinction(self):
        assert not _multigraph_isomorphic(
            _CATALOG["square"], _CATALOG["double square"]
        )

    def test_relabelled_cuboctahedron(self):
        adj = _CATALOG["cuboctahedron"]
        relabel = {n: f"x{n}" for n in adj}
        shuffled = {
            relabel[n]: {relabel[m]: c for m, c in nbrs.items()}
            for n, nbrs in adj.items()
        }
        assert graph_identify(shuffled) == "cuboctahedron"
