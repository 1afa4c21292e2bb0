"""Geometric and symmetry classification.

Polygon taxonomy is decided by exact predicates only: coplanarity through
determinants, convex versus star through an integer winding number, helical
regularity through equality of consecutive dot/cross pairs after projecting
along the period.  Symmetries are discovered by solving exact point
correspondences between flag walks and verifying the candidates against the
whole patch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import validate
from .errors import (
    NoFixedPointError,
    NotAPolygonError,
    NotEquivelarError,
    NotInvolutionError,
    NotPolyhedronError,
    PatchTooSmallError,
    RegionMismatchError,
    UnderdeterminedError,
)
from .geometry import (
    Fraction,
    Isometry,
    fixed_space_dim,
    matrix_rank,
    norm_inf,
    order_or_translation,
    scalar,
    solve_isometry,
    vadd,
    vcross,
    vdot,
    vscale,
    vsub,
)
from .orbit import build_quotient


# ---------------------------------------------------------------------------
# polygon taxonomy


@dataclass
class PolygonClass:
    kind: str  # convex | star | skew | linear | zigzag | helical
    p: int | None = None       # vertices per cycle (finite kinds)
    k: int | None = None       # winding (star) or base k-gon (helical)
    witness: Isometry | None = None

    @property
    def symbol(self):
        if self.kind == "convex":
            return f"{self.p}_c"
        if self.kind == "star":
            return f"{self.p}/{self.k}_star"
        if self.kind == "skew":
            return f"{self.p}_s"
        if self.kind == "linear":
            return "inf_1"
        if self.kind == "zigzag":
            return "inf_2"
        return f"inf_{self.k}"

    @property
    def is_planar(self):
        return self.kind in ("convex", "star", "zigzag", "linear")

    @property
    def is_finite(self):
        return self.kind in ("convex", "star", "skew")


def _winding_number(points2, center):
    w = 0
    n = len(points2)
    for i in range(n):
        px, py = points2[i][0] - center[0], points2[i][1] - center[1]
        qx, qy = points2[(i + 1) % n][0] - center[0], points2[(i + 1) % n][1] - center[1]
        cross = px * qy - py * qx
        if py <= 0 < qy and cross > 0:
            w += 1
        elif qy <= 0 < py and cross < 0:
            w -= 1
    return w


def _project_out(points, normal):
    drop = max(range(3), key=lambda i: abs(normal[i]))
    keep = [i for i in range(3) if i != drop]
    return [(p[keep[0]], p[keep[1]]) for p in points]


def _cycling_isometry(src, dst):
    """Isometries realizing the ordered correspondence src -> dst (0 to 2)."""
    pairs = list(zip(src, dst))
    try:
        iso = solve_isometry(pairs)
        return [iso] if iso is not None else []
    except UnderdeterminedError:
        pass
    p0, q0 = pairs[0]
    dsrc = [vsub(p, p0) for p, _ in pairs[1:]]
    ddst = [vsub(q, q0) for _, q in pairs[1:]]
    n_src = n_dst = None
    for i in range(len(dsrc)):
        for j in range(i + 1, len(dsrc)):
            c = vcross(dsrc[i], dsrc[j])
            if c != (0, 0, 0):
                n_src = c
                n_dst = vcross(ddst[i], ddst[j])
                break
        if n_src is not None:
            break
    if n_src is None:
        raise UnderdeterminedError("correspondence sources are collinear")
    out = []
    for sign in (1, -1):
        aug = pairs + [(vadd(p0, n_src), vadd(q0, vscale(sign, n_dst)))]
        iso = solve_isometry(aug)
        if iso is not None:
            out.append(iso)
    return out


def classify_polygon(face):
    """Exact classification of a (regular) polygon face.

    Finite faces come back convex, star, or skew; infinite ones linear,
    zigzag, or helical over a k-gon.  A face fitting no class exactly (or
    admitting no vertex-cycling isometry) raises NotAPolygonError.
    """
    pts = face.vertices
    n = len(pts)
    if face.period_vector is None:
        if n < 3:
            raise NotAPolygonError("fewer than 3 vertices")
        shifted = [pts[(i + 1) % n] for i in range(n)]
        witnesses = _cycling_isometry(pts, shifted)
        witness = witnesses[0] if witnesses else None
        diffs = [vsub(p, pts[0]) for p in pts[1:]]
        rank = matrix_rank(diffs)
        if rank == 3:
            if witness is None:
                raise NotAPolygonError("skew cycle admits no cycling isometry")
            return PolygonClass("skew", p=n, witness=witness)
        normal = None
        for i in range(len(diffs)):
            for j in range(i + 1, len(diffs)):
                c = vcross(diffs[i], diffs[j])
                if c != (0, 0, 0):
                    normal = c
                    break
            if normal:
                break
        if normal is None:
            raise NotAPolygonError("vertices are collinear")
        centroid = tuple(
            scalar(Fraction(sum(Fraction(p[i]) for p in pts), n)) for i in range(3)
        )
        pts2 = _project_out(pts, normal)
        c2 = _project_out([centroid], normal)[0]
        w = abs(_winding_number(pts2, c2))
        if witness is None:
            raise NotAPolygonError("planar cycle admits no cycling isometry")
        if w == 1:
            return PolygonClass("convex", p=n, witness=witness)
        if w >= 2:
            return PolygonClass("star", p=n, k=w, witness=witness)
        raise NotAPolygonError("degenerate winding")

    # infinite face
    t = face.period_vector
    walk = [face.vertex(k) for k in range(max(2 * n, 4) + 1)]
    d0 = vsub(walk[1], walk[0])
    if all(vcross(vsub(p, walk[0]), d0) == (0, 0, 0) for p in walk):
        from .geometry import translation

        steps = {vsub(walk[k + 1], walk[k]) for k in range(len(walk) - 1)}
        if len(steps) != 1:
            raise NotAPolygonError("linear apeirogon with uneven steps")
        return PolygonClass("linear", witness=translation(d0))
    shifted = walk[1:] + [face.vertex(len(walk))]
    witnesses = _cycling_isometry(walk, shifted)
    witness = witnesses[0] if witnesses else None
    even_anchor, odd_anchor = walk[0], walk[1]
    on_two_lines = all(
        vcross(vsub(walk[k], even_anchor if k % 2 == 0 else odd_anchor), t)
        == (0, 0, 0)
        for k in range(len(walk))
    )
    if on_two_lines:
        if witness is None:
            raise NotAPolygonError("zigzag admits no cycling isometry")
        return PolygonClass("zigzag", k=2, witness=witness)
    t2 = vdot(t, t)

    def proj(x):
        lam = Fraction(vdot(x, t), t2)
        return vsub(x, vscale(lam, t))

    images = [proj(p) for p in pts]
    distinct = []
    for im in images:
        if im not in distinct:
            distinct.append(im)
    k = len(distinct)
    if k < 3 or n % k != 0:
        raise NotAPolygonError("projection along the period is irregular")
    seq = [proj(face.vertex(i)) for i in range(k + 2)]
    if seq[k] != seq[0] or seq[k + 1] != seq[1]:
        raise NotAPolygonError("projected walk does not cycle")
    center = tuple(
        scalar(Fraction(sum(Fraction(q[i]) for q in distinct), k)) for i in range(3)
    )
    radii = {vdot(vsub(q, center), vsub(q, center)) for q in distinct}
    chords = [vsub(seq[i + 1], seq[i]) for i in range(k)]
    chord_lens = {vdot(c, c) for c in chords}
    dots = {vdot(chords[i], chords[(i + 1) % k]) for i in range(k)}
    crosses = {vcross(chords[i], chords[(i + 1) % k]) for i in range(k)}
    rises = {vdot(vsub(face.vertex(i + 1), face.vertex(i)), t) for i in range(n)}
    if (
        len(radii) == 1
        and len(chord_lens) == 1
        and len(dots) == 1
        and len(crosses) == 1
        and len(rises) == 1
    ):
        if witness is None:
            raise NotAPolygonError("helix admits no cycling isometry")
        return PolygonClass("helical", k=k, witness=witness)
    raise NotAPolygonError("no regular polygon class fits exactly")


# ---------------------------------------------------------------------------
# mirror vectors


def mirror_vector(r0, r1, r2):
    dims = []
    for name, g in (("R0", r0), ("R1", r1), ("R2", r2)):
        if not g.is_involution():
            raise NotInvolutionError(f"{name} is not an involution")
        d = fixed_space_dim(g)
        if d is None:
            raise NoFixedPointError(f"{name} has an empty fixed set")
        dims.append(d)
    return tuple(dims)


# ---------------------------------------------------------------------------
# flags on a patch, and symmetry discovery


class PatchFlag:
    """A concrete flag of a patch: vertex point, edge pair, face with walk."""

    def __init__(self, patch, vertex, edge, fid):
        self.patch = patch
        self.vertex = vertex
        self.edge = edge  # sorted point pair
        self.fid = fid
        face = patch.faces[fid]
        other = edge[1] if edge[0] == vertex else edge[0]
        pos = None
        for cand in face.positions_of(vertex):
            for d in (1, -1):
                if face.vertex(cand + d) == other:
                    pos, self.direction = cand, d
        if pos is None:
            raise ValueError("flag is not incident")
        self.pos = pos

    @property
    def face(self):
        return self.patch.faces[self.fid]

    def walk(self, count):
        """count points along the face, starting at the flag vertex."""
        f = self.face
        if f.period_vector is None:
            count = min(count, len(f))
        return [f.vertex(self.pos + self.direction * i) for i in range(count)]

    def other_end(self):
        return self.edge[1] if self.edge[0] == self.vertex else self.edge[0]


def base_flag(patch):
    center = patch.region.center
    vid = min(
        patch.interior_vertex_ids(),
        key=lambda i: (norm_inf(vsub(patch.vertices[i], center)), patch.vertices[i]),
    )
    v = patch.vertices[vid]
    eid = min(patch.vertex_edges[vid], key=lambda e: patch.edge_points[e])
    edge = patch.edge_points[eid]
    fid = min(f for f, _ in patch.edge_faces[eid])
    return PatchFlag(patch, v, edge, fid)


def _walk_length(flag, want=6):
    f = flag.face
    if f.period_vector is None:
        return min(max(want, 4), len(f))
    return max(want, len(f) + 2)


def is_patch_symmetry(patch, iso, min_evidence=4):
    """Verify that ``iso`` maps the patch onto itself wherever it can be seen.

    Every vertex, edge, or face whose image lies inside (or, for faces,
    touches) the region must land on a patch element.
    """
    region = patch.region
    hits = 0
    for v in patch.vertices:
        w = iso(v)
        if region.contains(w):
            if w not in patch.vindex:
                return False
            hits += 1
    if hits < min_evidence:
        return False
    for p, q in patch.edge_points:
        gp, gq = iso(p), iso(q)
        if region.contains(gp) and region.contains(gq):
            if tuple(sorted((gp, gq))) not in patch.eindex:
                return False
    for f in patch.faces:
        img = f.transform(iso)
        if img.window(region) is not None:
            if img.canonical_key() not in patch.face_keys:
                return False
    return True


def _solve_flag_map(src_pts, dst_pts):
    try:
        return _cycling_isometry(src_pts, dst_pts)
    except UnderdeterminedError:
        return []


def _adjacent_flag_targets(patch, flag):
    """The 0-, 1-, 2-adjacent flags of a patch flag."""
    v, edge, fid = flag.vertex, flag.edge, flag.fid
    targets = {}
    targets[0] = PatchFlag(patch, flag.other_end(), edge, fid)
    f = flag.face
    prev_pt = f.vertex(flag.pos - flag.direction)
    e1 = tuple(sorted((v, prev_pt)))
    targets[1] = PatchFlag(patch, v, e1, fid)
    eid = patch.eindex[edge]
    others = sorted({g for g, _ in patch.edge_faces[eid] if g != fid})
    targets[2] = [PatchFlag(patch, v, edge, g) for g in others]
    return targets


def flag_map_candidates(patch, flag, target):
    """Isometry candidates sending one flag's walk onto another's."""
    count = max(_walk_length(flag), _walk_length(target))
    return _solve_flag_map(flag.walk(count), target.walk(count))


def find_flag_symmetries(patch, flag=None):
    """Recover distinguished generators from the base flag, if any exist.

    Returns {"family": "R", "R0": ..., "R1": ..., "R2": ...} when symmetries
    to all three adjacent flags exist (the regular case), otherwise
    {"family": "S", "S1": ..., "S2": ...} when face and vertex rotations
    exist (the chiral case), otherwise None.
    """
    if flag is None:
        flag = base_flag(patch)
    targets = _adjacent_flag_targets(patch, flag)
    rs = {}
    for i in (0, 1):
        for cand in flag_map_candidates(patch, flag, targets[i]):
            if cand.is_involution() and is_patch_symmetry(patch, cand):
                rs[f"R{i}"] = cand
                break
    for tgt in targets[2]:
        if "R2" in rs:
            break
        for cand in flag_map_candidates(patch, flag, tgt):
            if cand.is_involution() and is_patch_symmetry(patch, cand):
                rs["R2"] = cand
                break
    if len(rs) == 3:
        return {"family": "R", **rs}

    s1 = s2 = None
    count = _walk_length(flag, 7)
    w = flag.walk(count + 1)
    for cand in _solve_flag_map(w[:count], w[1:count + 1]):
        if is_patch_symmetry(patch, cand):
            s1 = cand
            break
    if s1 is None:
        return None
    vid = patch.vindex[flag.vertex]
    q = len(patch.vertex_faces[vid])
    s2_options = []
    for eid in patch.vertex_edges[vid]:
        edge2 = patch.edge_points[eid]
        for fid2, _ in patch.edge_faces[eid]:
            tgt = PatchFlag(patch, flag.vertex, edge2, fid2)
            for cand in flag_map_candidates(patch, flag, tgt):
                power = order_or_translation(cand, q + 1)
                if (power.kind, power.n) != ("order", q):
                    continue
                if is_patch_symmetry(patch, cand):
                    s2_options.append(cand)
    for cand in s2_options:
        for s1_try in (s1, s1.inverse()):
            for s2_try in (cand, cand.inverse()):
                t = s1_try.then(s2_try)
                if t.then(t).is_identity and t(flag.vertex) == flag.other_end():
                    return {"family": "S", "S1": s1_try, "S2": s2_try}
    return None


def has_adjacent_flag_symmetry(patch, flag=None):
    """Does any symmetry of the patch map a flag to one of its neighbors?

    This is the certificate separating chiral structures (no) from regular
    ones probed with only their rotation subgroup (yes).
    """
    if flag is None:
        flag = base_flag(patch)
    targets = _adjacent_flag_targets(patch, flag)
    all_targets = [targets[0], targets[1], *targets[2]]
    for tgt in all_targets:
        for cand in flag_map_candidates(patch, flag, tgt):
            if is_patch_symmetry(patch, cand):
                return cand
    return None


# ---------------------------------------------------------------------------
# the regular / chiral verdict


@dataclass
class SymmetryVerdict:
    kind: str  # regular | chiral | neither
    orbit_count: int
    adjacent_always_split: bool
    extra_symmetry: Isometry | None = None

    def __str__(self):
        return (
            f"{self.kind} ({self.orbit_count} flag orbit"
            f"{'s' if self.orbit_count != 1 else ''})"
        )


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def verdict(patch, generators, quotient_scale=4):
    """Regular, chiral, or neither, from flag orbits plus a certificate.

    Orbits of the generated group are counted on the quotient.  One orbit
    means regular outright.  Two orbits with every adjacent pair split
    means chiral only if no symmetry to an adjacent flag exists; if one
    does, the generators were merely a rotation subgroup of a regular
    structure.
    """
    closed = build_quotient(patch, scale=quotient_scale)
    if closed.r != 2:
        raise NotPolyhedronError("verdict requires a polyhedron (r = 2)")
    n = closed.dart_count()
    uf = _UnionFind(n)
    for g in generators:
        perm = closed.dart_permutation(g)
        if perm is None:
            raise PatchTooSmallError(
                "generator does not map the quotient to itself"
            )
        for d in range(n):
            uf.union(d, perm[d])
    orbits = {uf.find(d) for d in range(n)}
    count = len(orbits)

    split = True
    for d in range(n):
        neighbors = [closed.rho0[d], closed.rho1[d], *closed.rho2_sets[d]]
        if any(uf.find(d) == uf.find(x) for x in neighbors):
            split = False
            break

    if count == 1:
        return SymmetryVerdict("regular", 1, split)
    if count == 2 and split:
        extra = has_adjacent_flag_symmetry(patch)
        if extra is None:
            return SymmetryVerdict("chiral", 2, True)
        return SymmetryVerdict("regular", 2, True, extra_symmetry=extra)
    return SymmetryVerdict("neither", count, split)


# ---------------------------------------------------------------------------
# Schlafli symbols


@dataclass
class SchlafliType:
    p: int | None  # None encodes infinity
    q: int
    r: int | None = None
    face_class: PolygonClass | None = None

    def __str__(self):
        p = "inf" if self.p is None else str(self.p)
        body = f"{{{p},{self.q}}}"
        return body if self.r is None else f"{body} r={self.r}"


def schlafli(patch, mode="polyhedron", quotient_scale=4):
    """The basic type {p, q}, with the face count r appended in complex mode."""
    report = validate(patch, mode)
    if report.r is None:
        raise NotEquivelarError("face count per edge is not constant")
    classes = {}
    for f in patch.faces:
        key = (f.period_vector is None, len(f))
        if key not in classes:
            classes[key] = classify_polygon(f)
    kinds = {(c.kind, c.p, c.k) for c in classes.values()}
    if len(kinds) != 1:
        raise NotEquivelarError(f"faces fall into {len(kinds)} classes")
    face_class = next(iter(classes.values()))
    p = face_class.p if face_class.is_finite else None

    degrees = set()
    closed = build_quotient(patch, scale=quotient_scale)
    per_vertex = [0] * len(closed.vreps)
    for f in closed.faces:
        for v in f.vclasses:
            per_vertex[v] += 1
    degrees = set(per_vertex)
    if len(degrees) != 1:
        raise NotEquivelarError(f"vertex face-degrees vary: {sorted(degrees)}")
    q = degrees.pop()
    r = report.r if mode == "complex" else None
    return SchlafliType(p, q, r, face_class)


# ---------------------------------------------------------------------------
# geometric duality check


_SIGNED_PERMS = None


def _signed_perms():
    global _SIGNED_PERMS
    if _SIGNED_PERMS is None:
        import itertools

        _SIGNED_PERMS = [
            tuple(
                tuple(s[i] if j == p[i] else 0 for j in range(3)) for i in range(3)
            )
            for p in itertools.permutations(range(3))
            for s in itertools.product((1, -1), repeat=3)
        ]
    return _SIGNED_PERMS


def face_center(face):
    n = len(face.vertices)
    return tuple(
        scalar(Fraction(sum(Fraction(p[i]) for p in face.vertices), n))
        for i in range(3)
    )


def dual_congruence_check(a, b, max_anchors=40):
    """Is b congruent to the face-center dual of a?

    Looks for a signed-permutation isometry (plus translation) sending the
    face centers of a onto the vertices of b and the center adjacency of a
    (faces sharing an edge) onto the edge set of b.  Returns (ok, witness).
    """
    if a.region.center != b.region.center or a.region.radius != b.region.radius:
        raise RegionMismatchError("inputs must be built over the same region")
    if any(f.period_vector is not None for f in a.faces) or any(
        f.period_vector is not None for f in b.faces
    ):
        return False, None
    if a.is_finite != b.is_finite:
        return False, None

    centers = [face_center(f) for f in a.faces]
    center_set = set(centers)
    dual_edges = set()
    for slots in a.edge_faces:
        fids = sorted({fid for fid, _ in slots})
        for i in range(len(fids)):
            for j in range(i + 1, len(fids)):
                dual_edges.add(
                    tuple(sorted((centers[fids[i]], centers[fids[j]])))
                )

    cmp_box = a.region.shrunk(2) if a.region.radius > 2 else a.region
    b_verts = {v for v in b.vertices if cmp_box.contains(v)}
    rc = a.region.center
    anchor_src = min(center_set, key=lambda c: (norm_inf(vsub(c, rc)), c))
    anchors_dst = sorted(
        b.vertices, key=lambda v: (norm_inf(vsub(v, rc)), v)
    )[:max_anchors]

    for m in _signed_perms():
        lin = Isometry(m, check=False)
        for w in anchors_dst:
            g = Isometry(m, vsub(w, lin(anchor_src)), check=False)
            mapped = {g(c) for c in centers}
            if {p for p in mapped if cmp_box.contains(p)} != b_verts:
                continue
            ok = True
            for c1, c2 in dual_edges:
                p1, p2 = g(c1), g(c2)
                if cmp_box.contains(p1) and cmp_box.contains(p2):
                    if not b.has_edge(p1, p2):
                        ok = False
                        break
            if ok:
                return True, g
    return False, None


# ---------------------------------------------------------------------------
# edge stabilizers (the G2 column of the complex tables)


@dataclass
class EdgeStabilizer:
    order: int
    dihedral: bool
    r: int

    @property
    def name(self):
        if self.dihedral:
            half = self.order // 2
            return f"D{half}"
        return f"C{self.order}"


def edge_stabilizer(patch, edge=None):
    """The pointwise stabilizer of a central edge, acting on its faces.

    Candidates come from wedge correspondences between the faces at the
    edge; each is verified against the patch, and the verified set is
    closed under composition.  Dihedral means some element reverses the
    orientation of the perpendicular plane.
    """
    if edge is None:
        center = patch.region.center
        eid = min(
            patch.interior_edge_ids(),
            key=lambda e: (
                norm_inf(vsub(patch.edge_points[e][0], center)),
                patch.edge_points[e],
            ),
        )
    else:
        eid = patch.eindex[tuple(sorted(edge))]
    u, v = patch.edge_points[eid]
    slots = patch.edge_faces[eid]

    wedges = []
    for fid, slot in slots:
        f = patch.faces[fid]
        pos_u = [k for k in f.positions_of(u) if f.vertex(k + 1) == v or f.vertex(k - 1) == v]
        k = pos_u[0]
        d = 1 if f.vertex(k + 1) == v else -1
        a = f.vertex(k - d)       # the walk point before u, on the u side
        b = f.vertex(k + 2 * d)   # the walk point after v, on the v side
        wedges.append((a, b))

    found = {}
    src = [u, v, wedges[0][0], wedges[0][1]]
    for a, b in wedges:
        for cand in _solve_flag_map(src, [u, v, a, b]):
            if cand not in found and is_patch_symmetry(patch, cand):
                found[cand] = True
    # close under composition (the group is small)
    group = set(found)
    changed = True
    while changed:
        changed = False
        for g in list(group):
            for h in list(group):
                gh = g.then(h)
                if gh not in group:
                    group.add(gh)
                    changed = True
        if len(group) > 4 * len(slots) + 8:
            raise PatchTooSmallError("edge stabilizer closure runaway")
    dihedral = any(g.det() == -1 for g in group)
    return EdgeStabilizer(len(group), dihedral, len(slots))
