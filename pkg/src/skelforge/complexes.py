"""Skeletal complexes: vertices, edges, polygonal faces, vertex figures.

A patch (:class:`SkeletalComplex`) holds everything of a structure that
touches a bounded region.  Finite faces always carry their complete vertex
cycle even when it pokes out of the region; infinite faces carry one period
plus the period vector, which is likewise a complete description.  The only
thing a patch does not know is which elements *outside* it exist, so all
axiom checks restrict to elements whose incident data is guaranteed present
(anything touching the region proper).
"""

from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BoundaryError, DegenerateFaceError
from .geometry import scalar, vadd, vdot, vec_str, vneg, vscale, vsub


# ---------------------------------------------------------------------------
# regions


@dataclass(frozen=True)
class Region:
    """Axis-aligned cube |x - center|_inf <= radius."""

    center: tuple = (0, 0, 0)
    radius: object = 4

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("region radius must be positive")

    def contains(self, p):
        c = self.center
        r = self.radius
        return (
            abs(p[0] - c[0]) <= r and abs(p[1] - c[1]) <= r and abs(p[2] - c[2]) <= r
        )

    def expanded(self, margin):
        return Region(self.center, self.radius + margin)

    def shrunk(self, margin):
        return Region(self.center, self.radius - margin)

    def intervals(self):
        c, r = self.center, self.radius
        return tuple((c[i] - r, c[i] + r) for i in range(3))

    def intersects_segment_bbox(self, p, q):
        for i, (lo, hi) in enumerate(self.intervals()):
            if max(p[i], q[i]) < lo or min(p[i], q[i]) > hi:
                return False
        return True


def _lex_positive(v):
    for c in v:
        if c != 0:
            return c > 0
    return False


class FaceDescriptor:
    """A polygonal face: finite vertex cycle, or one period of an apeirogon.

    For infinite faces ``vertices`` lists one period in walk order and
    ``period_vector`` translates the walk onto the rest of the face; the
    k-th vertex of the full walk is ``vertices[k % n] + (k // n) * t``.
    """

    __slots__ = ("vertices", "period_vector", "_key")

    def __init__(self, vertices, period_vector=None, check=True):
        vertices = tuple(tuple(scalar(c) for c in p) for p in vertices)
        if period_vector is not None:
            period_vector = tuple(scalar(c) for c in period_vector)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "period_vector", period_vector)
        object.__setattr__(self, "_key", None)
        if check:
            self._validate()

    def __setattr__(self, *a):
        raise AttributeError("FaceDescriptor is immutable")

    def _validate(self):
        n = len(self.vertices)
        t = self.period_vector
        if t is None:
            if n < 3:
                raise DegenerateFaceError(f"finite face with {n} vertices")
            if len(set(self.vertices)) != n:
                raise DegenerateFaceError("repeated vertex in face cycle")
        else:
            if t == (0, 0, 0):
                raise DegenerateFaceError("zero period vector")
            if n < 1:
                raise DegenerateFaceError("empty period")
            # all translates of the listed period must be distinct points
            t2 = vdot(t, t)
            for i in range(n):
                for j in range(i + 1, n):
                    d = vsub(self.vertices[i], self.vertices[j])
                    lam = Fraction(vdot(d, t), t2)
                    if lam.denominator == 1 and vscale(lam, t) == d:
                        raise DegenerateFaceError("period vertices repeat under translation")

    @property
    def is_finite(self):
        return self.period_vector is None

    def __len__(self):
        return len(self.vertices)

    def vertex(self, k):
        """k-th vertex of the (bi-infinite or cyclic) walk."""
        n = len(self.vertices)
        if self.period_vector is None:
            return self.vertices[k % n]
        q, r = divmod(k, n)
        v = self.vertices[r]
        return v if q == 0 else vadd(v, vscale(q, self.period_vector))

    def transform(self, iso):
        pv = None if self.period_vector is None else iso.apply_vec(self.period_vector)
        return FaceDescriptor([iso(p) for p in self.vertices], pv, check=False)

    def translate(self, v):
        return FaceDescriptor(
            [vadd(p, v) for p in self.vertices], self.period_vector, check=False
        )

    def reversed(self):
        if self.period_vector is None:
            return FaceDescriptor(tuple(reversed(self.vertices)), None, check=False)
        return FaceDescriptor(
            tuple(reversed(self.vertices)), vneg(self.period_vector), check=False
        )

    def canonical_form(self):
        """Equivalent descriptor with a deterministic start and direction."""
        if self.period_vector is None:
            verts = self.vertices
            n = len(verts)
            best = None
            for seq in (verts, tuple(reversed(verts))):
                for s in range(n):
                    rot = seq[s:] + seq[:s]
                    if best is None or rot < best:
                        best = rot
            return FaceDescriptor(best, None, check=False)
        face = self if _lex_positive(self.period_vector) else self.reversed()
        t = face.period_vector
        t2 = vdot(t, t)
        n = len(face.vertices)
        reduced = []
        for j, v in enumerate(face.vertices):
            k = math.floor(Fraction(vdot(v, t), t2))
            reduced.append((vsub(v, vscale(k, t)), j, k))
        anchor_pt, j0, k0 = min(reduced)
        shift = vscale(-k0, t)
        verts = tuple(vadd(face.vertex(j0 + i), shift) for i in range(n))
        return FaceDescriptor(verts, t, check=False)

    def canonical_key(self):
        if self._key is None:
            form = self.canonical_form()
            if form.period_vector is None:
                key = ("fin",) + form.vertices
            else:
                key = ("inf", form.period_vector) + form.vertices
            object.__setattr__(self, "_key", key)
        return self._key

    def window(self, region):
        """Walk-index interval [lo, hi] covering every vertex inside region.

        Returns None when the face misses the region entirely.  For finite
        faces the window is the whole cycle (0 .. n-1) whenever any vertex
        lies inside.  The interval for infinite faces is padded by one step
        on each side so the in-region part is bracketed by its exits.
        """
        n = len(self.vertices)
        if self.period_vector is None:
            if any(region.contains(p) for p in self.vertices):
                return (0, n - 1)
            return None
        t = self.period_vector
        ivals = region.intervals()
        lo_k = hi_k = None
        for i, v in enumerate(self.vertices):
            klo, khi = None, None  # range of period counts keeping v + k t inside
            feasible = True
            for c in range(3):
                lo, hi = ivals[c]
                if t[c] == 0:
                    if not (lo <= v[c] <= hi):
                        feasible = False
                        break
                    continue
                a = Fraction(lo - v[c], t[c])
                b = Fraction(hi - v[c], t[c])
                if a > b:
                    a, b = b, a
                a, b = math.ceil(a), math.floor(b)
                klo = a if klo is None else max(klo, a)
                khi = b if khi is None else min(khi, b)
            if not feasible or (klo is not None and klo > khi):
                continue
            if klo is None:
                raise DegenerateFaceError("period vector is zero")
            jlo, jhi = i + klo * n, i + khi * n
            lo_k = jlo if lo_k is None else min(lo_k, jlo)
            hi_k = jhi if hi_k is None else max(hi_k, jhi)
        if lo_k is None:
            return None
        return (lo_k - 1, hi_k + 1)

    def edge_slots(self, region=None):
        """Yield (slot_index, p, q) for the face's edges.

        Finite faces yield all n edges (slot i joins vertex i to i+1 mod n);
        infinite faces yield the edges of the window over ``region``.
        """
        n = len(self.vertices)
        if self.period_vector is None:
            for i in range(n):
                yield i, self.vertices[i], self.vertices[(i + 1) % n]
        else:
            if region is None:
                raise ValueError("infinite faces need a region to enumerate edges")
            win = self.window(region)
            if win is None:
                return
            lo, hi = win
            p = self.vertex(lo)
            for j in range(lo, hi):
                q = self.vertex(j + 1)
                yield j, p, q
                p = q

    def neighbors_of(self, k):
        """The two walk points adjacent to walk position k."""
        return self.vertex(k - 1), self.vertex(k + 1)

    def positions_of(self, p, region=None):
        """Walk indices where point p occurs (0 or 1 for valid faces)."""
        n = len(self.vertices)
        if self.period_vector is None:
            return [i for i, v in enumerate(self.vertices) if v == p]
        t = self.period_vector
        t2 = vdot(t, t)
        out = []
        for i, v in enumerate(self.vertices):
            d = vsub(p, v)
            lam = Fraction(vdot(d, t), t2)
            if lam.denominator == 1 and vscale(lam, t) == d:
                out.append(i + int(lam) * n)
        return out

    def __repr__(self):
        kind = "fin" if self.period_vector is None else f"inf:{vec_str(self.period_vector)}"
        pts = " ".join(vec_str(p) for p in self.vertices)
        return f"Face[{kind}; {pts}]"


# ---------------------------------------------------------------------------
# the complex


class SkeletalComplex:
    """An immutable patch of a (possibly infinite) polyhedral structure."""

    def __init__(self, vertices, edges, faces, region, window_margin=2, name="",
                 lattice=None):
        self.name = name
        self.region = region
        self.window = region.expanded(window_margin)
        self._lattice = lattice  # translation lattice when known; else detected

        vset = {tuple(p) for p in vertices}
        eset = {frozenset((tuple(p), tuple(q))) for p, q in edges}
        face_map = {}
        for f in faces:
            face_map.setdefault(f.canonical_key(), f)
        faces = [face_map[k] for k in sorted(face_map)]

        for f in faces:
            for _, p, q in f.edge_slots(self.window):
                eset.add(frozenset((p, q)))
        for e in eset:
            vset.update(e)

        self.vertices = sorted(vset)
        self.vindex = {p: i for i, p in enumerate(self.vertices)}
        epairs = sorted(tuple(sorted(e)) for e in eset)
        self.edges = [(self.vindex[p], self.vindex[q]) for p, q in epairs]
        self.edge_points = epairs
        self.eindex = {e: i for i, e in enumerate(epairs)}
        self.faces = faces
        self.face_keys = {f.canonical_key(): i for i, f in enumerate(faces)}

        ne = len(self.edges)
        self.edge_faces = [[] for _ in range(ne)]
        self.vertex_edges = [[] for _ in range(len(self.vertices))]
        self.vertex_faces = [[] for _ in range(len(self.vertices))]
        for i, (a, b) in enumerate(self.edges):
            self.vertex_edges[a].append(i)
            self.vertex_edges[b].append(i)
        for fi, f in enumerate(faces):
            seen_v = set()
            for slot, p, q in f.edge_slots(self.window):
                ei = self.eindex[tuple(sorted((p, q)))]
                self.edge_faces[ei].append((fi, slot))
                for pt in (p, q):
                    vi = self.vindex[pt]
                    if vi not in seen_v:
                        seen_v.add(vi)
                        self.vertex_faces[vi].append(fi)

        self.in_region = [region.contains(p) for p in self.vertices]

    # -- basic queries ------------------------------------------------------

    def vertex_in_region(self, vid):
        return self.in_region[vid]

    def interior_vertex_ids(self):
        return [i for i, ok in enumerate(self.in_region) if ok]

    def interior_edge_ids(self):
        return [
            i
            for i, (a, b) in enumerate(self.edges)
            if self.in_region[a] and self.in_region[b]
        ]

    def face_is_truncated(self, fid):
        f = self.faces[fid]
        if f.period_vector is not None:
            return True
        return not all(self.region.contains(p) for p in f.vertices)

    def counts(self):
        return len(self.vertices), len(self.edges), len(self.faces)

    def region_counts(self):
        """Counts of elements whose vertex sets intersect the region proper.

        The raw tables also hold support vertices that faces drag in from
        just outside; those are excluded here.
        """
        nv = sum(self.in_region)
        ne = sum(
            1
            for a, b in self.edges
            if self.in_region[a] or self.in_region[b]
        )
        return nv, ne, len(self.faces)

    @property
    def is_finite(self):
        return all(f.is_finite for f in self.faces) and not any(
            self.face_is_truncated(i) for i in range(len(self.faces))
        )

    def has_vertex(self, p):
        return tuple(p) in self.vindex

    def has_edge(self, p, q):
        return tuple(sorted((tuple(p), tuple(q)))) in self.eindex

    def has_face(self, descriptor):
        return descriptor.canonical_key() in self.face_keys

    @property
    def lattice(self):
        if self._lattice is None:
            from .orbit import detect_translation_lattice

            self._lattice = detect_translation_lattice(self)
        return self._lattice

    # -- vertex figures -----------------------------------------------------

    def vertex_figure(self, p):
        """Graph on the neighbors of p, one edge per face passing through p.

        Raises BoundaryError outside the region, where incident faces may be
        missing from the patch.
        """
        p = tuple(p)
        vid = self.vindex.get(p)
        if vid is None or not self.in_region[vid]:
            raise BoundaryError(f"vertex {vec_str(p)} is not interior")
        edges = Counter()
        nodes = set()
        for eid in self.vertex_edges[vid]:
            a, b = self.edge_points[eid]
            nodes.add(b if a == p else a)
        for fid in self.vertex_faces[vid]:
            f = self.faces[fid]
            pos = f.positions_of(p)
            for k in pos:
                u, w = f.neighbors_of(k)
                edges[frozenset((u, w))] += 1
        return VertexFigureGraph(p, frozenset(nodes), dict(edges))

    def faces_at_vertex(self, p):
        p = tuple(p)
        vid = self.vindex.get(p)
        if vid is None or not self.in_region[vid]:
            raise BoundaryError(f"vertex {vec_str(p)} is not interior")
        return [self.faces[fid] for fid in self.vertex_faces[vid]]

    # -- serialization hook (full formats live in serialization.py) ---------

    def summary(self):
        nv, ne, nf = self.counts()
        return f"{self.name or 'complex'}: {nv} vertices, {ne} edges, {nf} faces"

    def __repr__(self):
        return f"<SkeletalComplex {self.summary()}>"


# ---------------------------------------------------------------------------
# vertex figures and the small catalog used to name them


class VertexFigureGraph:
    """Multigraph on the neighbors of a vertex; edges weighted by face count."""

    def __init__(self, center, nodes, edges):
        self.center = center
        self.nodes = frozenset(nodes)
        self.edges = dict(edges)  # frozenset({u, w}) -> multiplicity

    def multiplicity(self, u, w):
        return self.edges.get(frozenset((u, w)), 0)

    def total_edge_weight(self):
        return sum(self.edges.values())

    def simple_edge_count(self):
        return len(self.edges)

    def adjacency(self):
        adj = {n: Counter() for n in self.nodes}
        for e, m in self.edges.items():
            u, w = tuple(e)
            adj[u][w] += m
            adj[w][u] += m
        return adj

    def is_connected(self):
        if not self.nodes:
            return False
        adj = self.adjacency()
        seen = set()
        stack = [next(iter(self.nodes))]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(adj[u])
        return len(seen) == len(self.nodes)

    def is_single_cycle(self):
        adj = self.adjacency()
        return (
            self.is_connected()
            and all(sum(c.values()) == 2 for c in adj.values())
            and all(m == 1 for m in self.edges.values())
            and len(self.nodes) >= 3
        )

    def cycle_order(self):
        """Node sequence of the cycle (single-cycle figures only)."""
        if not self.is_single_cycle():
            raise ValueError("vertex figure is not a single cycle")
        adj = self.adjacency()
        start = min(self.nodes)
        order = [start]
        prev, cur = None, start
        while True:
            nxt = min(n for n in adj[cur] if n != prev)
            if nxt == start:
                break
            order.append(nxt)
            prev, cur = cur, nxt
        return order


def _multigraph(edge_list):
    """Adjacency-counter multigraph from (u, v) or (u, v, mult) tuples."""
    adj = {}
    for e in edge_list:
        u, v, m = e if len(e) == 3 else (*e, 1)
        adj.setdefault(u, Counter())[v] += m
        adj.setdefault(v, Counter())[u] += m
    return adj


def _cycle_graph(n, mult=1):
    return _multigraph([(i, (i + 1) % n, mult) for i in range(n)])


def _complete_graph(n, mult=1):
    return _multigraph([(i, j, mult) for i in range(n) for j in range(i + 1, n)])


def _cube_graph(mult=1):
    return _multigraph(
        [(u, u ^ b, mult) for u in range(8) for b in (1, 2, 4) if u < (u ^ b)]
    )


def _octahedron_graph(mult=1):
    # K_{2,2,2}: all pairs except the three antipodal ones
    pairs = [
        (i, j)
        for i in range(6)
        for j in range(i + 1, 6)
        if not (i % 2 == 0 and j == i + 1)
    ]
    return _multigraph([(u, v, mult) for u, v in pairs])


def _cuboctahedron_graph():
    coords = []
    for a in (-1, 1):
        for b in (-1, 1):
            coords += [(a, b, 0), (a, 0, b), (0, a, b)]
    edges = [
        (i, j)
        for i in range(12)
        for j in range(i + 1, 12)
        if vdot(vsub(coords[i], coords[j]), vsub(coords[i], coords[j])) == 2
    ]
    return _multigraph(edges)


_CATALOG = {
    "square": _cycle_graph(4),
    "hexagon": _cycle_graph(6),
    "double square": _cycle_graph(4, 2),
    "tetrahedron": _complete_graph(4),
    "double tetrahedron": _complete_graph(4, 2),
    "cube": _cube_graph(),
    "double cube": _cube_graph(2),
    "octahedron": _octahedron_graph(),
    "double octahedron": _octahedron_graph(2),
    "cuboctahedron": _cuboctahedron_graph(),
}


def _degree_signature(adj):
    return sorted(
        (sum(c.values()), sorted(c.values())) for c in adj.values()
    )


def _multigraph_isomorphic(a, b):
    if len(a) != len(b):
        return False
    if _degree_signature(a) != _degree_signature(b):
        return False
    nodes_a = sorted(a, key=lambda n: (sum(a[n].values()), str(n)))
    nodes_b = list(b)

    def extend(mapping, used):
        if len(mapping) == len(nodes_a):
            return True
        u = nodes_a[len(mapping)]
        for v in nodes_b:
            if v in used:
                continue
            ok = True
            for u2, v2 in mapping.items():
                if a[u].get(u2, 0) != b[v].get(v2, 0):
                    ok = False
                    break
            if ok and sum(a[u].values()) == sum(b[v].values()):
                mapping[u] = v
                used.add(v)
                if extend(mapping, used):
                    return True
                del mapping[u]
                used.remove(v)
        return False

    return extend({}, set())


def graph_identify(figure):
    """Name a vertex figure by multigraph isomorphism against the catalog.

    Accepts a VertexFigureGraph or a raw adjacency dict; returns the catalog
    name or "unknown".  The non-standard cuboctahedron realization has the
    same underlying graph as the cuboctahedron and is reported as such.
    """
    adj = figure.adjacency() if isinstance(figure, VertexFigureGraph) else figure
    for name, ref in _CATALOG.items():
        if _multigraph_isomorphic(adj, ref):
            return name
    return "unknown"


# ---------------------------------------------------------------------------
# axiom validation


@dataclass
class ValidationReport:
    mode: str
    entries: list = field(default_factory=list)  # (axiom, ok, detail)
    r: int | None = None
    discreteness: str = ""

    def add(self, axiom, ok, detail=""):
        self.entries.append((axiom, bool(ok), detail))

    @property
    def passed(self):
        return all(ok for _, ok, _ in self.entries)

    def failed_axioms(self):
        return [a for a, ok, _ in self.entries if not ok]

    def __str__(self):
        lines = [f"validation ({self.mode}): {'pass' if self.passed else 'FAIL'}"]
        for axiom, ok, detail in self.entries:
            lines.append(f"  [{'ok' if ok else 'XX'}] {axiom}: {detail}")
        return "\n".join(lines)


def validate(complex_, mode="polyhedron"):
    """Check the defining axioms on the patch; failures are report entries.

    (a) connected edge graph, (b) connected vertex figures, (c) a constant
    number r of faces per edge (r = 2 in polyhedron mode), (d) discreteness,
    certified by finiteness or by exhibiting the translation lattice.
    """
    report = ValidationReport(mode)
    interior_v = complex_.interior_vertex_ids()

    # (a) edge-graph connectivity over the patch
    if interior_v:
        seen = set()
        start = interior_v[0]
        queue = deque([start])
        adj = complex_.vertex_edges
        while queue:
            u = queue.popleft()
            if u in seen:
                continue
            seen.add(u)
            for eid in adj[u]:
                a, b = complex_.edges[eid]
                nxt = b if a == u else a
                if nxt not in seen:
                    queue.append(nxt)
        missing = [v for v in interior_v if v not in seen]
        report.add(
            "a:edge-graph-connected",
            not missing,
            f"{len(interior_v)} interior vertices, {len(missing)} unreachable",
        )
    else:
        report.add("a:edge-graph-connected", False, "no interior vertices")

    # (b) vertex-figure connectivity
    bad = []
    for vid in interior_v:
        vf = complex_.vertex_figure(complex_.vertices[vid])
        if not vf.is_connected():
            bad.append(vid)
    report.add(
        "b:vertex-figures-connected",
        not bad,
        f"{len(bad)} disconnected of {len(interior_v)}",
    )

    # (c) constant face count per edge
    counts = Counter()
    for eid in complex_.interior_edge_ids():
        counts[len(complex_.edge_faces[eid])] += 1
    if len(counts) == 1:
        r = next(iter(counts))
        report.r = r
        if mode == "polyhedron":
            report.add("c:faces-per-edge", r == 2, f"r = {r} (need 2)")
        else:
            report.add("c:faces-per-edge", r >= 2, f"r = {r}")
    else:
        report.add("c:faces-per-edge", False, f"nonconstant: {dict(counts)}")

    # (d) discreteness certificate
    if complex_.is_finite:
        report.discreteness = "finite"
        report.add("d:discrete", True, "finite complex")
    else:
        lat = complex_.lattice
        if lat is not None and lat.rank >= 2:
            report.discreteness = f"periodic rank {lat.rank}"
            basis = ", ".join(vec_str(b) for b in lat.basis)
            report.add("d:discrete", True, f"translation lattice [{basis}]")
        else:
            report.add("d:discrete", False, "no translation lattice found")

    return report
