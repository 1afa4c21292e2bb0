"""Orbit enumeration: the chiral variant of Wythoff's construction.

A generator set carries named isometries plus a base flag seed (base vertex,
the other end of the base edge, and the word stabilizing the base face).
The base face is the orbit of the base vertex under that word; the patch is
the triple orbit of base vertex, base edge and base face, pruned to a
bounded region.  BFS prunes against the region expanded by a margin; a
closure pass afterwards verifies that nothing reachable inside the region
was cut off, escalating the margin when it was.
"""

from __future__ import annotations

from collections import deque

from .errors import (
    DegenerateFaceError,
    ExplosionError,
    InvalidParametersError,
    NotPeriodicError,
    PatchTooSmallError,
)
from .complexes import FaceDescriptor, SkeletalComplex
from .geometry import (
    Lattice,
    lattice_basis_from,
    norm_inf,
    order_or_translation,
    vsub,
)
from .quotient import ClosedComplex


class GeneratorSet:
    """Named isometries plus the base-flag data driving the construction."""

    def __init__(self, generators, base_vertex, base_edge_other, face_word,
                 name=""):
        self.generators = dict(generators)
        self.base_vertex = tuple(base_vertex)
        self.base_edge_other = tuple(base_edge_other)
        if isinstance(face_word, str):
            face_word = tuple(face_word.split("*"))
        self.face_word = tuple(face_word)
        self.name = name
        if self.base_vertex == self.base_edge_other:
            raise InvalidParametersError("base edge endpoints coincide")
        for w in self.face_word:
            if w not in self.generators:
                raise InvalidParametersError(f"unknown face generator {w!r}")

    def face_generator(self):
        g = None
        for w in self.face_word:
            h = self.generators[w]
            g = h if g is None else g.then(h)
        return g

    def isometries(self):
        return list(self.generators.values())

    def __repr__(self):
        names = ",".join(self.generators)
        return f"<GeneratorSet {self.name or names} face={'*'.join(self.face_word)}>"


def build_base_face(gen):
    """Orbit of the base vertex under the face word, as a face descriptor."""
    g = gen.face_generator()
    v = gen.base_vertex
    if g(v) == v:
        raise DegenerateFaceError("base vertex is fixed by the face generator")
    power = order_or_translation(g, 48)
    if power.kind == "order":
        pts, p = [], v
        for _ in range(power.n):
            pts.append(p)
            p = g(p)
            if p == v:
                break
        if len(pts) < 3:
            raise DegenerateFaceError(f"face orbit has only {len(pts)} points")
        return FaceDescriptor(pts)
    if power.kind == "translation":
        pts, p = [], v
        for _ in range(power.n):
            pts.append(p)
            p = g(p)
        return FaceDescriptor(pts, power.vector)
    raise DegenerateFaceError("face generator has no finite order or translation power")


def _orbit_bfs(seed, gens, keep, key, cap, kind):
    seen = {}
    queue = deque()
    k0 = key(seed)
    seen[k0] = seed
    queue.append(seed)
    while queue:
        el = queue.popleft()
        for g in gens:
            img = _apply(g, el, kind)
            k = key(img)
            if k in seen or not keep(img):
                continue
            if len(seen) >= cap:
                raise ExplosionError(
                    f"{kind} orbit exceeded {cap} elements; generators are "
                    "probably not discrete"
                )
            seen[k] = img
            queue.append(img)
    return list(seen.values())


def _apply(g, el, kind):
    if kind == "vertex":
        return g(el)
    if kind == "edge":
        return tuple(sorted((g(el[0]), g(el[1]))))
    return el.transform(g)


def wythoff_patch(gen, region, cap=10**6, margin=None, name=None):
    """All vertex/edge/face orbit elements whose vertex sets touch the region.

    The margin defaults to the largest generator translation length plus 2
    and doubles (twice) if the closure check finds reachable elements that
    the pruning cut off.
    """
    gens = []
    for g in gen.generators.values():
        gens.append(g)
        gi = g.inverse()
        if gi not in gens:
            gens.append(gi)
    if margin is None:
        margin = max(norm_inf(g.t) for g in gens) + 2
    base_face = build_base_face(gen)
    base_edge = tuple(sorted((gen.base_vertex, gen.base_edge_other)))

    attempt = 0
    while True:
        box = region.expanded(margin)
        verts = _orbit_bfs(
            gen.base_vertex, gens, box.contains, lambda p: p, cap, "vertex"
        )
        edges = _orbit_bfs(
            base_edge,
            gens,
            lambda e: box.intersects_segment_bbox(*e),
            lambda e: e,
            cap,
            "edge",
        )
        faces = _orbit_bfs(
            base_face,
            gens,
            lambda f: f.window(box) is not None,
            lambda f: f.canonical_key(),
            cap,
            "face",
        )
        patch = SkeletalComplex(
            [v for v in verts if region.contains(v)],
            [e for e in edges if region.intersects_segment_bbox(*e)],
            [f for f in faces if f.window(region) is not None],
            region,
            window_margin=margin,
            name=name or gen.name,
        )
        if _closed_under(patch, gens) or attempt >= 2:
            return patch
        margin *= 2
        attempt += 1


def _closed_under(patch, gens):
    region = patch.region
    for g in gens:
        for v in patch.vertices:
            if not region.contains(v):
                continue
            w = g(v)
            if region.contains(w) and w not in patch.vindex:
                return False
        for p, q in patch.edge_points:
            if not (region.contains(p) and region.contains(q)):
                continue
            gp, gq = g(p), g(q)
            if region.contains(gp) and region.contains(gq):
                if tuple(sorted((gp, gq))) not in patch.eindex:
                    return False
        for f in patch.faces:
            if f.period_vector is None and all(region.contains(p) for p in f.vertices):
                img = f.transform(g)
                if all(region.contains(p) for p in img.vertices):
                    if img.canonical_key() not in patch.face_keys:
                        return False
    return True


# ---------------------------------------------------------------------------
# translation lattice detection


def detect_translation_lattice(patch, max_norm=None):
    """Translation symmetries of the patch, as a lattice (None when none).

    Candidate vectors are differences from a central vertex; each candidate
    is verified against the vertex, edge and face sets on a region shrunk by
    the candidate's own length.
    """
    if not patch.vertices:
        return None
    if max_norm is None:
        max_norm = patch.region.radius - 1
    center = patch.region.center
    origin = min(patch.vertices, key=lambda v: (norm_inf(vsub(v, center)), v))
    seen = set()
    verified = []
    for v in patch.vertices:
        tau = vsub(v, origin)
        if tau == (0, 0, 0) or tau in seen:
            continue
        seen.add(tau)
        if norm_inf(tau) > max_norm:
            continue
        if _is_translation_symmetry(patch, tau):
            verified.append(tau)
    if not verified:
        return None
    basis = lattice_basis_from(verified)
    if len(basis) < 2:
        return None
    return Lattice(basis)


def _is_translation_symmetry(patch, tau):
    if norm_inf(tau) >= patch.region.radius:
        return False
    safe = patch.region.shrunk(norm_inf(tau))
    checked = 0
    for v in patch.vertices:
        if safe.contains(v):
            w = (v[0] + tau[0], v[1] + tau[1], v[2] + tau[2])
            if w not in patch.vindex:
                return False
            checked += 1
    if checked == 0:
        return False
    for p, q in patch.edge_points:
        if safe.contains(p) and safe.contains(q):
            sp = (p[0] + tau[0], p[1] + tau[1], p[2] + tau[2])
            sq = (q[0] + tau[0], q[1] + tau[1], q[2] + tau[2])
            if tuple(sorted((sp, sq))) not in patch.eindex:
                return False
    for f in patch.faces:
        if f.period_vector is None:
            if not all(safe.contains(p) for p in f.vertices):
                continue
        else:
            if f.window(safe) is None:
                continue
        if f.translate(tau).canonical_key() not in patch.face_keys:
            return False
    return True


# ---------------------------------------------------------------------------
# quotients


def build_quotient(patch, sublattice=None, scale=4):
    """Finite quotient modulo ``scale`` times the structure's own lattice.

    An explicit sublattice overrides the scaled default; it must consist of
    translations of the structure.  Finite patches quotient by the trivial
    lattice, so the result is just the closed form of the patch.
    """
    cache = getattr(patch, "_quotient_cache", None)
    if cache is None:
        cache = patch._quotient_cache = {}
    cache_key = ("scale", scale) if sublattice is None else (
        "lattice", tuple(sublattice.basis)
    )
    if cache_key in cache:
        return cache[cache_key]

    if patch.is_finite:
        closed = ClosedComplex.from_finite(patch)
    else:
        lat = patch.lattice
        if lat is None:
            raise NotPeriodicError("no translation lattice found for the patch")
        if sublattice is None:
            sublattice = lat.scaled(scale)
        elif not sublattice.sublattice_of(lat):
            raise NotPeriodicError(
                "requested sublattice contains non-symmetry translations"
            )
        closed = ClosedComplex.from_patch(patch, sublattice, name=patch.name)
        if closed.r is None:
            raise PatchTooSmallError(
                "quotient classes are incomplete (nonconstant face count per "
                "edge); enlarge the region or lower the quotient scale"
            )
    cache[cache_key] = closed
    return closed
