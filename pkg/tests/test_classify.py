"""Polygon taxonomy, symmetry recovery, verdicts, Schlafli symbols, duality."""

from fractions import Fraction

import pytest

from skelforge.complexes import FaceDescriptor, Region
from skelforge.errors import (
    NotAPolygonError,
    NotEquivelarError,
    NotInvolutionError,
    RegionMismatchError,
)
from skelforge.classify import (
    _winding_number,
    classify_polygon,
    dual_congruence_check,
    edge_stabilizer,
    find_flag_symmetries,
    is_patch_symmetry,
    mirror_vector,
    schlafli,
    verdict,
)
from skelforge.geometry import (
    fixed_space_dim,
    half_turn,
    point_reflection,
    reflection_in_plane,
)
from skelforge.orbit import build_base_face
from skelforge.presets import finite_faced_chiral, helix_faced_chiral


class TestClassifyPolygon:
    def test_square_is_convex(self):
        f = FaceDescriptor([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)])
        c = classify_polygon(f)
        assert (c.kind, c.p) == ("convex", 4)
        assert c.witness is not None

    def test_petriecoxeter_faces_convex(self):
        face = build_base_face(finite_faced_chiral(1, 1))
        assert classify_polygon(face).kind == "convex"

    def test_chiral_faces_skew(self):
        face = build_base_face(finite_faced_chiral(1, 0))
        c = classify_polygon(face)
        assert (c.kind, c.p) == ("skew", 6)

    def test_helix_over_square(self):
        face = build_base_face(helix_faced_chiral(1, 0))
        c = classify_polygon(face)
        assert (c.kind, c.k) == ("helical", 4)

    def test_helix_rational_parameters(self):
        face = build_base_face(helix_faced_chiral(Fraction(1, 2), 3))
        assert classify_polygon(face).kind == "helical"

    def test_zigzag(self):
        f = FaceDescriptor([(0, 0, 0), (1, 0, 0)], period_vector=(1, 1, 0))
        assert classify_polygon(f).kind == "zigzag"

    def test_linear(self):
        f = FaceDescriptor([(0, 0, 0)], period_vector=(1, 0, 0))
        assert classify_polygon(f).kind == "linear"

    def test_winding_number_counts_turns(self):
        # a rational self-intersecting pentagon winding twice around center
        pts = [(4, 0), (-3, -3), (1, 4), (1, -4), (-3, 3)]
        assert abs(_winding_number(pts, (0, 0))) == 2

    def test_star_detection_on_winding_cycle(self):
        # same star-like cycle is not a *regular* polygon, so the taxonomy
        # rejects it, with the winding machinery having seen 2 loops
        f = FaceDescriptor(
            [(4, 0, 0), (-3, -3, 0), (1, 4, 0), (1, -4, 0), (-3, 3, 0)]
        )
        with pytest.raises(NotAPolygonError):
            classify_polygon(f)

    def test_irregular_quadrilateral_rejected(self):
        f = FaceDescriptor([(0, 0, 0), (2, 0, 0), (2, 1, 0), (0, 1, 0)])
        with pytest.raises(NotAPolygonError):
            classify_polygon(f)

    def test_isometry_invariance(self):
        from skelforge.geometry import Isometry

        g = Isometry(((0, -1, 0), (0, 0, 1), (1, 0, 0)), (5, -2, 3))
        for face in (
            build_base_face(finite_faced_chiral(1, 0)),
            build_base_face(helix_faced_chiral(1, 2)),
        ):
            a = classify_polygon(face)
            b = classify_polygon(face.transform(g))
            assert (a.kind, a.p, a.k) == (b.kind, b.p, b.k)


class TestMirrorVector:
    def test_coordinate_reflections(self):
        rs = [
            reflection_in_plane((1, 0, 0), (0, 0, 0)),
            reflection_in_plane((0, 1, 0), (0, 0, 0)),
            reflection_in_plane((0, 0, 1), (0, 0, 0)),
        ]
        assert mirror_vector(*rs) == (2, 2, 2)

    def test_half_turns_give_ones(self):
        rs = [
            half_turn((0, 0, 0), (1, 0, 0)),
            half_turn((0, 0, 0), (0, 1, 0)),
            half_turn((0, 0, 0), (0, 0, 1)),
        ]
        assert mirror_vector(*rs) == (1, 1, 1)

    def test_point_reflection_gives_zero(self):
        rs = [
            point_reflection((0, 0, 0)),
            reflection_in_plane((0, 1, 0), (0, 0, 0)),
            reflection_in_plane((0, 0, 1), (0, 0, 0)),
        ]
        assert mirror_vector(*rs) == (0, 2, 2)

    def test_non_involution_rejected(self):
        from skelforge.geometry import Isometry

        rot3 = Isometry(((0, 1, 0), (0, 0, 1), (1, 0, 0)))
        with pytest.raises(NotInvolutionError):
            mirror_vector(rot3, rot3, rot3)


class TestFindFlagSymmetries:
    def test_cube_three_plane_reflections(self, built):
        fam = find_flag_symmetries(built("cube"))
        assert fam["family"] == "R"
        assert mirror_vector(fam["R0"], fam["R1"], fam["R2"]) == (2, 2, 2)

    def test_petrie_cube_halfturn_r0(self, built):
        from skelforge.ops import petrie_dual

        fam = find_flag_symmetries(petrie_dual(built("cube")))
        assert fam["family"] == "R"
        assert mirror_vector(fam["R0"], fam["R1"], fam["R2"]) == (1, 2, 2)

    def test_petriecoxeter_mirror_vector(self, built):
        fam = find_flag_symmetries(built("P:1,1"))
        assert fam["family"] == "R"
        assert mirror_vector(fam["R0"], fam["R1"], fam["R2"]) == (2, 1, 2)

    def test_skewfaced_regular_mirror_vector(self, built):
        fam = find_flag_symmetries(built("P:1,-1"))
        assert fam["family"] == "R"
        assert mirror_vector(fam["R0"], fam["R1"], fam["R2"]) == (1, 2, 1)

    def test_regular_helix_mirror_vector(self, built):
        fam = find_flag_symmetries(built("P2:1,0"))
        assert fam["family"] == "R"
        assert mirror_vector(fam["R0"], fam["R1"], fam["R2"]) == (1, 1, 1)

    def test_chiral_family_is_rotatory(self, built):
        fam = find_flag_symmetries(built("P:1,0"))
        assert fam["family"] == "S"
        for key in ("S1", "S2"):
            g = fam[key]
            assert g.det() == -1
            assert fixed_space_dim(g) == 0  # rotatory reflections fix a point
        t = fam["S1"].then(fam["S2"])
        assert t.then(t).is_identity

    def test_verified_symmetry_actually_preserves_patch(self, built):
        p10 = built("P:1,0")
        gen = finite_faced_chiral(1, 0)
        assert is_patch_symmetry(p10, gen.generators["S1"])
        assert is_patch_symmetry(p10, gen.generators["S2"])
        bad = reflection_in_plane((1, 0, 0), (0, 0, 0))
        fam = find_flag_symmetries(p10)
        assert fam["family"] == "S"


class TestVerdicts:
    def test_cube_regular(self, built):
        cube = built("cube")
        fam = find_flag_symmetries(cube)
        v = verdict(cube, [fam["R0"], fam["R1"], fam["R2"]])
        assert v.kind == "regular" and v.orbit_count == 1

    def test_chiral_p10(self, built):
        gen = finite_faced_chiral(1, 0)
        v = verdict(built("P:1,0"), gen.isometries())
        assert v.kind == "chiral"
        assert v.orbit_count == 2 and v.adjacent_always_split

    def test_regular_p11_from_rotations(self, built):
        gen = finite_faced_chiral(1, 1)
        v = verdict(built("P:1,1"), gen.isometries(), quotient_scale=2)
        assert v.kind == "regular"
        assert v.extra_symmetry is not None

    def test_regular_p1m1(self, built):
        gen = finite_faced_chiral(1, -1)
        v = verdict(built("P:1,-1"), gen.isometries(), quotient_scale=2)
        assert v.kind == "regular"

    def test_chiral_helix(self, built):
        gen = helix_faced_chiral(1, 1)
        v = verdict(built("P2:1,1", 6), gen.isometries(), quotient_scale=2)
        assert v.kind == "chiral"

    def test_regular_helix(self, built):
        gen = helix_faced_chiral(1, 0)
        v = verdict(built("P2:1,0"), gen.isometries(), quotient_scale=2)
        assert v.kind == "regular"

    def test_two_face_classes_is_neither(self, built):
        # break transitivity by probing the square tessellation with a
        # translation subgroup only: many orbits, adjacent flags not split
        from skelforge.geometry import translation

        sq = built("sq44")
        v = verdict(sq, [translation((1, 0, 0)), translation((0, 1, 0))])
        assert v.kind == "neither"

    def test_rectangle_tiling_is_neither(self):
        # edges of two different lengths: no symmetry can be flag-transitive
        from skelforge.complexes import FaceDescriptor, SkeletalComplex
        from skelforge.geometry import half_turn, reflection_in_plane, translation

        region = Region((0, 0, 0), 4)
        faces = []
        for i in range(-3, 3):
            for j in range(-4, 4):
                x = 2 * i
                faces.append(FaceDescriptor(
                    [(x, j, 0), (x + 2, j, 0), (x + 2, j + 1, 0), (x, j + 1, 0)]
                ))
        bricks = SkeletalComplex([], [], faces, region)
        gens = [
            translation((2, 0, 0)),
            translation((0, 1, 0)),
            reflection_in_plane((1, 0, 0), (0, 0, 0)),
            reflection_in_plane((0, 1, 0), (0, 0, 0)),
            half_turn((0, 0, 0), (0, 0, 1)),
        ]
        v = verdict(bricks, gens, quotient_scale=2)
        assert v.kind == "neither"
        assert not v.adjacent_always_split

    def test_verdict_stable_across_scales(self, built):
        gen = finite_faced_chiral(1, 0)
        kinds = {
            verdict(built("P:1,0"), gen.isometries(), quotient_scale=s).kind
            for s in (2, 4)
        }
        assert kinds == {"chiral"}


class TestSchlafli:
    @pytest.mark.parametrize(
        "name,p,q,scale",
        [
            ("cube", 4, 3, 4),
            ("tet", 3, 3, 4),
            ("oct", 3, 4, 4),
            ("sq44", 4, 4, 4),
            ("tri36", 3, 6, 4),
            ("hex63", 6, 3, 4),
            ("P:1,0", 6, 6, 4),
            ("P:1,1", 6, 6, 2),
            ("P2:1,0", None, 3, 2),
        ],
    )
    def test_types(self, built, name, p, q, scale):
        radius = 3 if name in ("tri36", "hex63") else 4
        st = schlafli(built(name, radius), quotient_scale=scale)
        assert (st.p, st.q) == (p, q)

    def test_complex_mode_appends_r(self, built):
        st = schlafli(built("K1_12", 3), mode="complex", quotient_scale=2)
        assert (st.p, st.q, st.r) == (4, 24, 4)
        assert st.face_class.symbol == "4_s"

    def test_mixed_faces_not_equivelar(self, built):
        from skelforge.complexes import SkeletalComplex

        sq = FaceDescriptor([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)])
        tri = FaceDescriptor([(0, 0, 0), (1, 0, 0), (1, 1, 0)])
        c = SkeletalComplex([], [], [sq, tri], Region((0, 0, 0), 2))
        with pytest.raises(NotEquivelarError):
            schlafli(c)


class TestDualCongruence:
    def test_self_duality_pair(self, built):
        ok, g = dual_congruence_check(built("P:1,0"), built("P:0,1"))
        assert ok and g is not None
        # the witness carries face centers onto vertices
        from skelforge.classify import face_center

        a, b = built("P:1,0"), built("P:0,1")
        inner = a.region.shrunk(2)
        for f in a.faces[:40]:
            c = face_center(f)
            if inner.contains(g(c)):
                assert b.has_vertex(g(c))

    def test_self_dual_same_parameters(self, built):
        ok, _ = dual_congruence_check(built("P:1,1"), built("P:1,1"))
        assert ok

    def test_finite_vs_infinite_false(self, built):
        ok, _ = dual_congruence_check(built("P:1,0"), built("cube"))
        assert not ok

    def test_region_mismatch(self, built):
        with pytest.raises(RegionMismatchError):
            dual_congruence_check(built("P:1,0"), built("P:0,1", 3))


class TestEdgeStabilizer:
    @pytest.mark.parametrize(
        "name,order,dname",
        [("K1_12", 4, "D2"), ("K4_12", 4, "D2"), ("K5_12", 4, "D2"),
         ("skel2cubic", 8, "D4")],
    )
    def test_table_rows(self, built, name, order, dname):
        g2 = edge_stabilizer(built(name, 3))
        assert (g2.order, g2.name, g2.r) == (order, dname, 4)


class TestVertexFigureCongruence:
    def test_regular_preset_figures_congruent(self, built):
        # sample a few interior vertices and map one figure onto another
        for name in ("P:1,1", "sq44"):
            patch = built(name)
            ids = patch.interior_vertex_ids()[:6]
            figs = [patch.vertex_figure(patch.vertices[i]) for i in ids]
            ref = figs[0]
            ref_cycle = ref.cycle_order()
            for fig in figs[1:]:
                cyc = fig.cycle_order()
                n = len(cyc)
                found = None
                from skelforge.classify import _cycling_isometry

                for s in range(n):
                    for seq in (cyc[s:] + cyc[:s], (cyc[s:] + cyc[:s])[::-1]):
                        src = ref_cycle + [ref.center]
                        dst = list(seq) + [fig.center]
                        cands = _cycling_isometry(src, dst)
                        if cands:
                            found = cands[0]
                            break
                    if found:
                        break
                assert found is not None
