"""Structural operations: Petrie duals, word traces, blends, coverings.

Word traces and Petrie duals walk flags geometrically on the finite quotient
while tracking the actual translation picked up in 3-space, so a circuit
that closes combinatorially but not geometrically is reported with its
period vector instead of pretending to be finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .complexes import FaceDescriptor, SkeletalComplex, validate
from .errors import (
    InvalidParametersError,
    NotBipartiteError,
    NotPolyhedronError,
    ProjectionError,
    ZeroParameterError,
)
from .geometry import (
    mat_inverse,
    mat_transpose,
    norm_inf,
    scalar,
    vadd,
    vcross,
    vdot,
    vscale,
    vsub,
)
from .orbit import build_quotient

WORDS = {
    "petrie": (0, 1, 2),
    "hole": (0, 1, 2, 1),
    "two_zigzag": (0, 1, 2, 1, 2),
}


# ---------------------------------------------------------------------------
# geometric flag walking on a closed complex


class GeomFlag:
    """A concrete flag: a face lift position plus an absolute translation."""

    __slots__ = ("closed", "fid", "pos", "side", "shift")

    def __init__(self, closed, fid, pos, side, shift=(0, 0, 0)):
        self.closed = closed
        self.fid = fid
        self.pos = pos
        self.side = side
        self.shift = shift

    @classmethod
    def from_dart(cls, closed, did):
        v, e, fid, j, side = closed.darts[did]
        return cls(closed, fid, j, side)

    def face(self):
        return self.closed.faces[self.fid]

    def vertex_point(self):
        return vadd(self.face().point(self.pos + self.side), self.shift)

    def edge_points(self):
        f = self.face()
        return (
            vadd(f.point(self.pos), self.shift),
            vadd(f.point(self.pos + 1), self.shift),
        )

    def dart(self):
        f = self.face()
        m = len(f.lift)
        v = f.vclasses[(self.pos + self.side) % m]
        e = f.eclasses[self.pos % m]
        return self.closed.dart_index[(v, e, self.fid)]

    def step(self, i):
        """The i-adjacent geometric flag (polyhedra only for i = 2)."""
        if i == 0:
            return GeomFlag(self.closed, self.fid, self.pos, 1 - self.side, self.shift)
        if i == 1:
            pos = self.pos + 1 if self.side == 1 else self.pos - 1
            return GeomFlag(self.closed, self.fid, pos, 1 - self.side, self.shift)
        f = self.face()
        m = len(f.lift)
        eid = f.eclasses[self.pos % m]
        slots = self.closed.edge_slots[eid]
        others = [s for s in slots if not (s[0] == self.fid and s[1] == self.pos % m)]
        if len(others) != 1:
            raise NotPolyhedronError(
                f"edge lies in {len(others) + 1} faces; flag walk needs exactly 2"
            )
        fid2, j2 = others[0]
        p, q = self.edge_points()
        f2 = self.closed.faces[fid2]
        a, b = f2.point(j2), f2.point(j2 + 1)
        if vadd(b, vsub(p, a)) == q:
            shift2 = vsub(p, a)
        else:
            shift2 = vsub(p, b)
            if vadd(a, shift2) != q:
                raise NotPolyhedronError("edge alignment failed across faces")
        side2 = 0 if vadd(f2.point(j2), shift2) == self.vertex_point() else 1
        return GeomFlag(self.closed, fid2, j2, side2, shift2)

    def apply_word(self, word):
        g = self
        for i in word:
            g = g.step(i)
        return g


@dataclass
class WordTrace:
    """One circuit of a flag word: its edge length and geometric closure."""

    word: str
    length: int
    closed_up: bool
    period_vector: tuple | None = None
    edge_cycle: tuple = ()

    def describe(self):
        if self.closed_up:
            return f"{self.word} circuit of length {self.length}"
        return (
            f"{self.word} path, period {self.length} steps, "
            f"translation {self.period_vector}"
        )


def trace_report(traces):
    """JSON-ready summary of a trace run: word, circuit count, lengths."""
    from .geometry import scalar_str

    out = {"word": traces[0].word if traces else None, "circuits": len(traces)}
    entries = []
    for t in traces:
        entry = {"length": t.length, "closed": t.closed_up}
        if t.period_vector is not None:
            entry["period_vector"] = [scalar_str(c) for c in t.period_vector]
        entries.append(entry)
    out["lengths"] = entries
    return out


def _walk_circuit(closed, start_dart, word):
    """Follow a word from a dart until the quotient flag recurs.

    Returns (steps, displacement, dart_orbit, vertex_path, edge_ids).
    """
    flag = GeomFlag.from_dart(closed, start_dart)
    v0 = flag.vertex_point()
    orbit = [start_dart]
    vertices = [v0]
    edge_ids = []
    cur = flag
    limit = closed.dart_count() + 1
    for _ in range(limit):
        f = cur.face()
        edge_ids.append(f.eclasses[cur.pos % len(f.lift)])
        cur = cur.apply_word(word)
        d = cur.dart()
        if d == start_dart:
            return len(orbit), vsub(cur.vertex_point(), v0), orbit, vertices, edge_ids
        orbit.append(d)
        vertices.append(cur.vertex_point())
    raise NotPolyhedronError("word orbit failed to close on the quotient")


def _primitive_walk(vertices, disp):
    """Reduce a quotient circuit to its primitive geometric period.

    ``vertices`` is one quotient circuit of the walk and ``disp`` the
    translation after the full circuit; the walk extends by v[i+L] = v[i] +
    disp.  Returns (period_vertices, period_vector), possibly the whole
    circuit when it is already primitive.
    """
    length = len(vertices)
    for k in range(1, length + 1):
        if length % k:
            continue
        tau = vsub(vertices[k], vertices[0]) if k < length else disp
        ok = True
        for i in range(length):
            j = i + k
            w = vertices[j] if j < length else vadd(vertices[j - length], disp)
            if w != vadd(vertices[i], tau):
                ok = False
                break
        if ok:
            return vertices[:k], tau
    return vertices, disp


def _cyclic_signature(seq, reversible=True):
    seqs = [tuple(seq)]
    if reversible:
        seqs.append(tuple(reversed(seq)))
    best = None
    for s in seqs:
        for k in range(len(s)):
            rot = s[k:] + s[:k]
            if best is None or rot < best:
                best = rot
    return best


def trace(patch, word_name, quotient_scale=4):
    """All distinct circuits of a flag word, with lengths or periods.

    A circuit that closes geometrically reports its edge length; one that
    only closes on the quotient reports its primitive step count and the
    translation it picks up per period.
    """
    if word_name not in WORDS:
        raise InvalidParametersError(f"unknown trace word {word_name!r}")
    word = WORDS[word_name]
    report = validate(patch, "polyhedron")
    if report.r != 2:
        raise NotPolyhedronError(f"faces per edge is {report.r}, not 2")
    closed = build_quotient(patch, scale=quotient_scale)
    seen = set()
    out = []
    sigs = set()
    for start in range(closed.dart_count()):
        if start in seen:
            continue
        steps, disp, orbit, vertices, edge_ids = _walk_circuit(closed, start, word)
        seen.update(orbit)
        closed_up = disp == (0, 0, 0)
        if closed_up:
            length, period = steps, None
        else:
            pts, period = _primitive_walk(vertices, disp)
            length = len(pts)
        sig = (_cyclic_signature(edge_ids), closed_up,
               None if period is None else min(period, vscale(-1, period)))
        if sig in sigs:
            continue
        sigs.add(sig)
        out.append(
            WordTrace(word_name, length, closed_up, period, _cyclic_signature(edge_ids))
        )
    out.sort(key=lambda t: (not t.closed_up, t.length))
    return out


# ---------------------------------------------------------------------------
# Petrie dual


def _lattice_translates_touching(lattice, face, region):
    """Lattice vectors whose translate of the face touches the region."""
    if lattice is None or lattice.rank == 0:
        return [(0, 0, 0)] if face.window(region) is not None else []
    pts = face.vertices
    spread = max(norm_inf(p) for p in pts)
    w = region.radius + spread + norm_inf(region.center)
    if face.period_vector is not None:
        w += norm_inf(face.period_vector)
    basis = lattice.basis
    if lattice.rank == 3:
        inv_rows = mat_inverse(mat_transpose(basis))
    else:
        ext = basis + (vcross(basis[0], basis[1]),)
        inv_rows = mat_inverse(mat_transpose(ext))
    out = []

    def rec(idx, acc):
        if idx == lattice.rank:
            if norm_inf(acc) <= w and face.translate(acc).window(region) is not None:
                out.append(acc)
            return
        bound = math.ceil(sum(abs(Fraction(c)) for c in inv_rows[idx]) * w)
        for c in range(-bound, bound + 1):
            rec(idx + 1, vadd(acc, vscale(c, basis[idx])))

    rec(0, (0, 0, 0))
    return out


def petrie_dual(patch, quotient_scale=4):
    """Same vertices and edges; the faces become the Petrie polygons.

    Requires a valid polyhedron.  On infinite structures the Petrie
    polygons are found as word circuits on the quotient, unrolled into
    concrete (possibly zigzag or helical) faces, and translated around the
    region by the structure's lattice.
    """
    report = validate(patch, "polyhedron")
    if report.r != 2 or not report.passed:
        raise NotPolyhedronError(
            f"input does not validate as a polyhedron: {report.failed_axioms()}"
        )
    word = WORDS["petrie"]
    closed = build_quotient(patch, scale=quotient_scale)
    seen = set()
    circuit_faces = []
    for start in range(closed.dart_count()):
        if start in seen:
            continue
        steps, disp, orbit, vertices, _ = _walk_circuit(closed, start, word)
        seen.update(orbit)
        if disp == (0, 0, 0):
            face = FaceDescriptor(vertices)
        else:
            pts, tau = _primitive_walk(vertices, disp)
            face = FaceDescriptor(pts, tau)
        circuit_faces.append(face)

    lattice = None if patch.is_finite else closed.lattice
    faces = {}
    for face in circuit_faces:
        for lam in _lattice_translates_touching(lattice, face, patch.region):
            cand = face.translate(lam)
            faces.setdefault(cand.canonical_key(), cand)
    margin = patch.window.radius - patch.region.radius
    return SkeletalComplex(
        list(patch.vertices),
        list(patch.edge_points),
        list(faces.values()),
        patch.region,
        window_margin=margin,
        name=f"petrie({patch.name})",
        lattice=patch._lattice,
    )


# ---------------------------------------------------------------------------
# blends


def _primitive_int_vector(v):
    denoms = [c.denominator if isinstance(c, Fraction) else 1 for c in v]
    d = math.lcm(*denoms)
    ints = [int(c * d) for c in v]
    g = math.gcd(*(abs(c) for c in ints))
    ints = [c // g for c in ints]
    for c in ints:
        if c != 0:
            if c < 0:
                ints = [-x for x in ints]
            break
    return tuple(ints)


def _patch_plane(patch):
    """Primitive integer normal of the plane containing all patch vertices."""
    vs = patch.vertices
    if len(vs) < 3:
        raise InvalidParametersError("too few vertices to determine a plane")
    p0 = vs[0]
    n = None
    for p in vs[1:]:
        for q in vs[1:]:
            n_try = vcross(vsub(p, p0), vsub(q, p0))
            if n_try != (0, 0, 0):
                n = n_try
                break
        if n is not None:
            break
    if n is None:
        raise InvalidParametersError("vertices are collinear")
    n = _primitive_int_vector(n)
    off = vdot(n, p0)
    for p in vs:
        if vdot(n, p) != off:
            raise InvalidParametersError("input complex is not planar")
    return n


def _two_color_vertices(patch):
    color = {}
    for start in sorted(patch.vertices):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            vid = patch.vindex[u]
            for eid in patch.vertex_edges[vid]:
                a, b = patch.edge_points[eid]
                w = b if a == u else a
                if w not in color:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    raise NotBipartiteError(
                        "no alternating 2-coloring of the vertices exists"
                    )
    base = min(patch.vertices)
    if color[base] == 1:
        color = {v: 1 - c for v, c in color.items()}
    return color


def blend_with_segment(patch, length):
    """Lift a planar polyhedron to two parallel planes, faces turning skew.

    Vertices move off the plane alternately by +-length along the primitive
    normal; the alternation is the 2-coloring forced by requiring every
    face to alternate, and its absence is an error, not patched over.
    """
    length = scalar(length)
    if length == 0:
        raise ZeroParameterError("segment blend with zero length degenerates")
    n = _patch_plane(patch)
    color = _two_color_vertices(patch)

    def lift(p):
        sign = 1 if color[p] == 0 else -1
        return vadd(p, vscale(sign * length, n))

    faces = []
    for f in patch.faces:
        pv = f.period_vector
        if pv is None:
            faces.append(FaceDescriptor([lift(p) for p in f.vertices], check=False))
        else:
            probe = f.vertices[0]
            shifted = vadd(probe, pv)
            if shifted in color and color[shifted] != color[probe]:
                doubled = list(f.vertices) + [vadd(p, pv) for p in f.vertices]
                faces.append(
                    FaceDescriptor([lift(p) for p in doubled], vscale(2, pv),
                                   check=False)
                )
            else:
                faces.append(
                    FaceDescriptor([lift(p) for p in f.vertices], pv, check=False)
                )
    verts = [lift(p) for p in patch.vertices]
    edges = [(lift(p), lift(q)) for p, q in patch.edge_points]
    margin = patch.window.radius - patch.region.radius + abs(length) * norm_inf(n)
    return SkeletalComplex(
        verts, edges, faces, patch.region, window_margin=margin,
        name=f"blend({patch.name},seg:{length})",
    )


def _orient_ccw(face, normal):
    area2 = (0, 0, 0)
    vs = face.vertices
    for i in range(len(vs)):
        area2 = vadd(area2, vcross(vs[i], vs[(i + 1) % len(vs)]))
    s = vdot(area2, normal)
    if s == 0:
        raise InvalidParametersError("degenerate face orientation")
    return face if s > 0 else face.reversed()


def _face_two_coloring(patch):
    color = [None] * len(patch.faces)
    adjacency = [[] for _ in patch.faces]
    for slots in patch.edge_faces:
        fids = sorted({fid for fid, _ in slots})
        if len(fids) == 2:
            adjacency[fids[0]].append(fids[1])
            adjacency[fids[1]].append(fids[0])
        elif len(fids) > 2:
            raise NotPolyhedronError("blend input has more than 2 faces at an edge")
    for start in range(len(patch.faces)):
        if color[start] is not None:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            fi = stack.pop()
            for fj in adjacency[fi]:
                if color[fj] is None:
                    color[fj] = 1 - color[fi]
                    stack.append(fj)
                elif color[fj] == color[fi]:
                    raise NotBipartiteError(
                        "face adjacency admits no alternating 2-coloring"
                    )
    return color


def blend_with_apeirogon(patch, step):
    """Helical faces rising over the faces of a planar tessellation.

    Faces 2-color by adjacency; helices over one color wind one way, over
    the other color the opposite way, all ascending by ``step`` per edge.
    Adjacent helices then share every p-th edge.
    """
    step = scalar(step)
    if step == 0:
        raise ZeroParameterError("apeirogon blend with zero step degenerates")
    n = _patch_plane(patch)
    if any(f.period_vector is not None for f in patch.faces):
        raise InvalidParametersError("apeirogon blend needs finite faces")
    sizes = {len(f) for f in patch.faces}
    if len(sizes) != 1:
        raise InvalidParametersError("apeirogon blend needs equal face sizes")
    p = sizes.pop()

    oriented = [_orient_ccw(f, n) for f in patch.faces]
    fcolor = _face_two_coloring(patch)

    # each edge ascends by one step in the direction its color-0 face
    # traverses it (equal to the direction the color-1 face descends)
    direction = {}
    for f, c in zip(oriented, fcolor):
        vs = f.vertices
        for i in range(len(vs)):
            u, w = vs[i], vs[(i + 1) % len(vs)]
            key = frozenset((u, w))
            d = (u, w) if c == 0 else (w, u)
            if key in direction and direction[key] != d:
                raise NotBipartiteError("inconsistent helix directions")
            direction[key] = d

    height = {}
    for start in sorted(patch.vertices):
        if start in height:
            continue
        height[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            vid = patch.vindex[u]
            for eid in patch.vertex_edges[vid]:
                a, b = patch.edge_points[eid]
                w = b if a == u else a
                d = direction.get(frozenset((u, w)))
                if d is None:
                    continue
                hw = height[u] + (1 if d == (u, w) else -1)
                if w in height:
                    if (height[w] - hw) % p != 0:
                        raise NotBipartiteError("height labeling inconsistent")
                else:
                    height[w] = hw
                    stack.append(w)

    lift_step = vscale(step, n)

    def lifted(v, h):
        return vadd(v, vscale(h, lift_step))

    faces = []
    for f, c in zip(oriented, fcolor):
        cyc = f.vertices if c == 0 else tuple(reversed(f.vertices))
        h0 = height[cyc[0]]
        pts = [lifted(cyc[i % p], h0 + i) for i in range(p)]
        faces.append(FaceDescriptor(pts, vscale(p, lift_step), check=False))

    region = patch.region
    verts = []
    per_height = norm_inf(lift_step)
    hmax = max(abs(height[v]) for v in height)
    span = region.radius + norm_inf(region.center) + hmax * per_height
    kmax = math.ceil(Fraction(span, p * per_height)) + 1
    for v in patch.vertices:
        for k in range(-kmax, kmax + 1):
            w = lifted(v, height[v] + k * p)
            if region.contains(w):
                verts.append(w)
    margin = patch.window.radius - patch.region.radius
    return SkeletalComplex(
        verts, [], faces, region, window_margin=margin,
        name=f"blend({patch.name},apeiro:{step})",
    )


# ---------------------------------------------------------------------------
# coverings


def covering_check(patch, target, projection="compress"):
    """Does the structure cover the target polyhedron?

    ``projection`` is either "compress", meaning quotient the structure by
    its full translation lattice and match flag systems (each helical face
    winding onto a finite face of the target), or a callable point map
    inducing the vertex map directly.  Returns (ok, witness).
    """
    target_closed = build_quotient(target)
    if callable(projection):
        return _covering_by_point_map(patch, target, projection)
    if projection != "compress":
        raise InvalidParametersError("projection must be callable or 'compress'")
    if patch.is_finite:
        candidates = [build_quotient(patch)]
    else:
        lat = patch.lattice
        if lat is None:
            raise ProjectionError("no translation lattice to compress by")
        # the full translation lattice can over-fold (extra symmetries of a
        # regular structure add translations); probe small-index sublattices,
        # pruning by a cheap vertex-class count before building incidence
        from .errors import SelfIdentificationError
        from .geometry import sublattices_of_index
        from .quotient import ClosedComplex

        want_v = target_closed.counts()[0]
        candidates = []
        for k in (1, 2, 3, 4):
            for sub in sublattices_of_index(lat, k):
                vcount = len({sub.reduce_key(v) for v in patch.vertices})
                if vcount != want_v:
                    continue
                try:
                    closed = ClosedComplex.from_patch(patch, sub, name=patch.name)
                except SelfIdentificationError:
                    continue
                if closed.counts() == target_closed.counts():
                    candidates.append(closed)
            if candidates:
                break
    for source_closed in candidates:
        iso = _flag_system_isomorphism(source_closed, target_closed)
        if iso is None:
            continue
        vmap = {}
        for did, (v, e, f, j, side) in enumerate(source_closed.darts):
            tv = target_closed.darts[iso[did]][0]
            vmap[source_closed.vreps[v]] = target_closed.vreps[tv]
        witness = {
            "kind": "compress",
            "lattice": list(source_closed.lattice.basis),
            "class_map": sorted(vmap.items()),
        }
        return True, witness
    return False, None


def _flag_system_isomorphism(a, b):
    """Dart bijection commuting with rho0, rho1, rho2 (r = 2 both sides)."""
    if a.dart_count() != b.dart_count() or a.counts() != b.counts():
        return None
    if a.r != 2 or b.r != 2:
        raise NotPolyhedronError("flag-system matching requires polyhedra")
    n = a.dart_count()
    for seed in range(n):
        mapping = {0: seed}
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            for i in (0, 1, 2):
                da = a.adjacent_flag(d, i)
                db = b.adjacent_flag(mapping[d], i)
                if da in mapping:
                    if mapping[da] != db:
                        ok = False
                        break
                else:
                    mapping[da] = db
                    stack.append(da)
        if ok and len(mapping) == n and len(set(mapping.values())) == n:
            return [mapping[i] for i in range(n)]
    return None


def _covering_by_point_map(patch, target, point_map):
    tverts = set(target.vindex)
    vmap = {}
    for v in patch.vertices:
        if not patch.region.contains(v):
            continue
        w = tuple(point_map(v))
        if w not in tverts:
            raise ProjectionError(f"image of {v} is not a target vertex")
        vmap[v] = w
    for vid in patch.interior_vertex_ids():
        v = patch.vertices[vid]
        nbrs = set()
        for eid in patch.vertex_edges[vid]:
            a, b = patch.edge_points[eid]
            nbrs.add(b if a == v else a)
        images = set()
        for u in nbrs:
            w = tuple(point_map(u))
            if not target.has_edge(vmap[v], w):
                return False, None
            images.add(w)
        if len(images) != len(nbrs):
            return False, None
        tdeg = len(target.vertex_edges[target.vindex[vmap[v]]])
        if len(images) != tdeg:
            return False, None
    for f in patch.faces:
        if f.period_vector is None:
            seq = [tuple(point_map(p)) for p in f.vertices]
            cyclic = True
        else:
            win = f.window(patch.region)
            if win is None:
                continue
            seq = [tuple(point_map(f.vertex(k))) for k in range(win[0], win[1] + 1)]
            cyclic = False
        if not _maps_onto_some_face(target, seq, cyclic):
            return False, None
    return True, {"kind": "point-map", "vertex_map": sorted(vmap.items())}


def _maps_onto_some_face(target, seq, cyclic):
    for tf in target.faces:
        if tf.period_vector is not None:
            continue
        cyc = tf.vertices
        m = len(cyc)
        if seq[0] not in cyc:
            continue
        i0 = cyc.index(seq[0])
        for direction in (1, -1):
            if all(cyc[(i0 + direction * k) % m] == p for k, p in enumerate(seq)):
                if cyclic and len(seq) % m != 0:
                    continue
                if set(seq) == set(cyc):
                    return True
    return False
