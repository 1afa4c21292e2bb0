"""Petrie duals, word traces, blends, and covering checks."""

import pytest

from skelforge.complexes import Region, validate
from skelforge.errors import (
    NotBipartiteError,
    NotPolyhedronError,
    ProjectionError,
    ZeroParameterError,
)
from skelforge.ops import (
    blend_with_apeirogon,
    blend_with_segment,
    covering_check,
    petrie_dual,
    trace,
)
from skelforge.classify import classify_polygon


class TestPetrieDual:
    def test_cube_dual_counts(self, built):
        pc = petrie_dual(built("cube"))
        assert pc.counts() == (8, 12, 4)
        assert all(classify_polygon(f).kind == "skew" for f in pc.faces)
        assert all(len(f) == 6 for f in pc.faces)

    def test_involution_on_cube_byte_identical(self, built):
        from skelforge.serialization import complex_to_json_text

        cube = built("cube")
        back = petrie_dual(petrie_dual(cube))
        a = complex_to_json_text(back).replace("petrie(petrie({4,3}))", "{4,3}")
        b = complex_to_json_text(cube)
        assert a == b

    def test_edge_and_vertex_sets_preserved(self, built):
        for name in ("cube", "tet", "oct"):
            patch = built(name)
            dual = petrie_dual(patch)
            assert dual.vertices == patch.vertices
            assert dual.edges == patch.edges

    def test_involution_on_infinite_presets(self, built):
        # support vertices outside the region are construction artifacts, so
        # the involution is asserted on everything the region pins down
        for name in ("sq44", "P:1,0"):
            patch = built(name)
            back = petrie_dual(petrie_dual(patch))
            region = patch.region
            assert {v for v in back.vertices if region.contains(v)} == {
                v for v in patch.vertices if region.contains(v)
            }
            assert {
                e for e in back.edge_points
                if region.contains(e[0]) and region.contains(e[1])
            } == {
                e for e in patch.edge_points
                if region.contains(e[0]) and region.contains(e[1])
            }
            safe = Region(region.center, region.radius - 2)
            orig = {f.canonical_key() for f in patch.faces if f.window(safe)}
            twice = {f.canonical_key() for f in back.faces if f.window(safe)}
            assert orig == twice

    def test_square_tessellation_dual_is_zigzag(self, built):
        psq = petrie_dual(built("sq44"))
        assert validate(psq, "polyhedron").passed
        kinds = {classify_polygon(f).kind for f in psq.faces}
        assert kinds == {"zigzag"}
        assert len(psq.faces_at_vertex((0, 0, 0))) == 4

    def test_complex_input_rejected(self, built):
        with pytest.raises(NotPolyhedronError):
            petrie_dual(built("skel2cubic", 3))

    def test_helix_faced_input_permitted(self, built):
        # traces through helical faces are periodic, so the dual exists
        p = built("P2:1,0")
        circuits = trace(p, "petrie", quotient_scale=2)
        assert circuits and all(not t.closed_up and t.length == 3 for t in circuits)
        dual = petrie_dual(p, quotient_scale=2)
        assert validate(dual, "polyhedron").passed
        assert {classify_polygon(f).kind for f in dual.faces} == {"helical"}


class TestTraces:
    def test_cube_petrie_length_six(self, built):
        circuits = trace(built("cube"), "petrie")
        assert len(circuits) == 4
        assert all(t.closed_up and t.length == 6 for t in circuits)

    def test_petrie_dual_of_cube_closes_after_four(self, built):
        pc = petrie_dual(built("cube"))
        circuits = trace(pc, "petrie")
        assert len(circuits) == 6
        assert all(t.closed_up and t.length == 4 for t in circuits)

    def test_petriecoxeter_holes_close_after_three(self, built):
        circuits = trace(built("P:1,1"), "hole", quotient_scale=2)
        assert circuits and all(t.closed_up and t.length == 3 for t in circuits)

    def test_skewfaced_regular_petrie_length_four(self, built):
        circuits = trace(built("P:1,-1"), "petrie", quotient_scale=2)
        assert circuits and all(t.closed_up and t.length == 4 for t in circuits)

    def test_zigzag_traces_report_periods(self, built):
        circuits = trace(built("sq44"), "petrie")
        assert circuits
        for t in circuits:
            assert not t.closed_up
            assert t.length == 2
            assert t.period_vector is not None

    def test_two_zigzag_word_runs(self, built):
        circuits = trace(built("cube"), "two_zigzag")
        assert circuits
        assert all(t.closed_up for t in circuits)

    def test_every_edge_lies_in_two_petrie_circuits(self, built):
        # Petrie circuits cover every quotient edge exactly twice
        from collections import Counter
        from skelforge.orbit import build_quotient
        from skelforge.ops import WORDS, _walk_circuit

        closed = build_quotient(built("cube"))
        counts = Counter()
        seen = set()
        for start in range(closed.dart_count()):
            if start in seen:
                continue
            steps, disp, orbit, _, edge_ids = _walk_circuit(
                closed, start, WORDS["petrie"]
            )
            seen.update(orbit)
            sig = frozenset(edge_ids)
            counts[sig] += 1
        per_edge = Counter()
        for sig, n in counts.items():
            for e in sig:
                per_edge[e] += 1  # both directions hit the same signature
        assert set(per_edge.values()) == {2}


class TestBlends:
    def test_segment_blend_lifts_to_two_planes(self, built):
        bs = blend_with_segment(built("sq44"), 1)
        assert {v[2] for v in bs.vertices} == {1, -1}
        assert validate(bs, "polyhedron").passed
        assert all(classify_polygon(f).kind == "skew" for f in bs.faces)

    def test_segment_blend_projections_recover_components(self, built):
        sq = built("sq44")
        bs = blend_with_segment(sq, 1)
        assert {(v[0], v[1], 0) for v in bs.vertices} == set(sq.vindex)
        assert {(0, 0, v[2]) for v in bs.vertices} == {(0, 0, 1), (0, 0, -1)}

    def test_apeirogon_blend_is_helical(self, built):
        ba = blend_with_apeirogon(built("sq44"), 1)
        assert validate(ba, "polyhedron").passed
        kinds = {classify_polygon(f).kind for f in ba.faces}
        assert kinds == {"helical"}
        assert {classify_polygon(f).k for f in ba.faces} == {4}

    def test_adjacent_helices_share_every_fourth_edge(self, built):
        ba = blend_with_apeirogon(built("sq44"), 1)
        for eid, slots in enumerate(ba.edge_faces):
            fids = sorted({f for f, _ in slots})
            if len(fids) != 2:
                continue
            f = ba.faces[fids[0]]
            slots_here = sorted(
                s for s, p, q in f.edge_slots(ba.window)
                if tuple(sorted((p, q))) in {
                    tuple(sorted(ba.edge_points[e]))
                    for e in range(len(ba.edges))
                    if sorted({g for g, _ in ba.edge_faces[e]}) == fids
                }
            )
            gaps = {slots_here[i + 1] - slots_here[i] for i in range(len(slots_here) - 1)}
            assert gaps == {4}
            break

    def test_triangle_segment_blend_not_bipartite(self, built):
        with pytest.raises(NotBipartiteError):
            blend_with_segment(built("tri36", 3), 1)

    def test_hexagon_apeirogon_blend_not_bipartite(self, built):
        with pytest.raises(NotBipartiteError):
            blend_with_apeirogon(built("hex63", 3), 1)

    def test_zero_parameters_rejected(self, built):
        with pytest.raises(ZeroParameterError):
            blend_with_segment(built("sq44"), 0)
        with pytest.raises(ZeroParameterError):
            blend_with_apeirogon(built("sq44"), 0)

    def test_other_valid_blends(self, built):
        assert validate(
            blend_with_segment(built("hex63", 3), 1), "polyhedron"
        ).passed
        assert validate(
            blend_with_apeirogon(built("tri36", 3), 1), "polyhedron"
        ).passed


class TestCovering:
    def test_helix_compresses_onto_cube(self, built):
        target = built("P2:0,1")
        ok, witness = covering_check(built("P2:1,1", 6), target)
        assert ok
        assert witness["kind"] == "compress"
        assert len(witness["class_map"]) == 8

    def test_regular_helix_also_covers(self, built):
        target = built("P2:0,1")
        ok, _ = covering_check(built("P2:1,0", 6), target)
        assert ok

    def test_identity_covering(self, built):
        cube = built("P2:0,1")
        ok, witness = covering_check(cube, cube, projection=lambda p: p)
        assert ok
        assert witness["kind"] == "point-map"

    def test_unrelated_structures_do_not_cover(self, built):
        ok, _ = covering_check(built("P:1,0"), built("P2:0,1"))
        assert not ok

    def test_projection_missing_vertices(self, built):
        cube = built("P2:0,1")
        with pytest.raises(ProjectionError):
            covering_check(cube, cube, projection=lambda p: (p[0] + 7, p[1], p[2]))
