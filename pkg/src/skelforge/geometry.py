"""Exact rational linear algebra for 3-space.

Scalars are Python ints or ``fractions.Fraction``; a value that is integral
is kept as an int (ints hash/compare equal to the same Fraction, and integer
arithmetic is an order of magnitude faster).  Points and vectors are plain
3-tuples of scalars; isometries pair an exactly orthogonal 3x3 matrix with a
translation vector.  Nothing in this module ever rounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    NotIsometryError,
    ParseError,
    UnderdeterminedError,
)

# ---------------------------------------------------------------------------
# scalars


def scalar(x):
    """Normalize to int when integral, Fraction otherwise.

    Accepts ints, Fractions, and strings like ``"-3/4"`` or ``"7"``.
    Floats are rejected: this library has no tolerances to hide behind.
    """
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        try:
            f = Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational literal {x!r}") from exc
        return f.numerator if f.denominator == 1 else f
    if isinstance(x, float):
        raise ParseError(f"floats are not exact: {x!r}")
    raise ParseError(f"cannot interpret {x!r} as a rational scalar")


def scalar_str(x):
    """Serialize as ``p/q``, omitting ``/q`` when the denominator is 1."""
    if isinstance(x, int):
        return str(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _floor_div(x):
    # exact floor for int or Fraction
    return x if isinstance(x, int) else math.floor(x)


def is_integer(x):
    return isinstance(x, int) or x.denominator == 1


# ---------------------------------------------------------------------------
# vectors (plain 3-tuples)

ZERO3 = (0, 0, 0)


def vec(x, y, z):
    return (scalar(x), scalar(y), scalar(z))


def vadd(a, b):
    return (a[0] + b[0], a[1] + b[1], a[2] + b[2])


def vsub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def vneg(a):
    return (-a[0], -a[1], -a[2])


def vscale(k, a):
    return (k * a[0], k * a[1], k * a[2])


def vdot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def vcross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def norm_inf(a):
    return max(abs(a[0]), abs(a[1]), abs(a[2]))


def dist2(a, b):
    d = vsub(a, b)
    return vdot(d, d)


def vec_str(a):
    return "(" + ",".join(scalar_str(c) for c in a) + ")"


# ---------------------------------------------------------------------------
# 3x3 matrices as row triples


def mat_vec(m, v):
    return (
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    )


def mat_mul(a, b):
    bt = mat_transpose(b)
    return tuple(tuple(vdot(row, col) for col in bt) for row in a)


def mat_transpose(m):
    return tuple(zip(*m))


def mat_det(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def mat_inverse(m):
    """Exact inverse via the adjugate; raises ZeroDivisionError if singular."""
    d = mat_det(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    cof = (
        (m[1][1] * m[2][2] - m[1][2] * m[2][1],
         m[0][2] * m[2][1] - m[0][1] * m[2][2],
         m[0][1] * m[1][2] - m[0][2] * m[1][1]),
        (m[1][2] * m[2][0] - m[1][0] * m[2][2],
         m[0][0] * m[2][2] - m[0][2] * m[2][0],
         m[0][2] * m[1][0] - m[0][0] * m[1][2]),
        (m[1][0] * m[2][1] - m[1][1] * m[2][0],
         m[0][1] * m[2][0] - m[0][0] * m[2][1],
         m[0][0] * m[1][1] - m[0][1] * m[1][0]),
    )
    inv = Fraction(1, 1) / d if not isinstance(d, int) else Fraction(1, d)
    return tuple(tuple(scalar(inv * e) for e in row) for row in cof)


IDENTITY3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def _is_orthogonal(m):
    mt = mat_transpose(m)
    return mat_mul(mt, m) == IDENTITY3


# ---------------------------------------------------------------------------
# isometries


class Isometry:
    """Affine isometry ``p -> M p + t`` with exactly orthogonal M.

    Immutable and hashable.  The linear part is validated at construction;
    the determinant is therefore +1 or -1 automatically.
    """

    __slots__ = ("m", "t")

    def __init__(self, m, t=ZERO3, check=True):
        m = tuple(tuple(scalar(e) for e in row) for row in m)
        t = tuple(scalar(e) for e in t)
        if check and not _is_orthogonal(m):
            raise NotIsometryError(f"linear part is not orthogonal: {m}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "t", t)

    def __setattr__(self, *a):
        raise AttributeError("Isometry is immutable")

    def __call__(self, p):
        m, t = self.m, self.t
        return (
            m[0][0] * p[0] + m[0][1] * p[1] + m[0][2] * p[2] + t[0],
            m[1][0] * p[0] + m[1][1] * p[1] + m[1][2] * p[2] + t[1],
            m[2][0] * p[0] + m[2][1] * p[1] + m[2][2] * p[2] + t[2],
        )

    def apply_vec(self, v):
        """Apply the linear part only (directions, period vectors)."""
        return mat_vec(self.m, v)

    def then(self, g):
        """The isometry 'self first, then g' (= g o self)."""
        return Isometry(mat_mul(g.m, self.m), vadd(mat_vec(g.m, self.t), g.t), check=False)

    def inverse(self):
        mt = mat_transpose(self.m)
        return Isometry(mt, vneg(mat_vec(mt, self.t)), check=False)

    def det(self):
        return mat_det(self.m)

    @property
    def is_identity(self):
        return self.m == IDENTITY3 and self.t == ZERO3

    @property
    def is_translation(self):
        return self.m == IDENTITY3

    def is_involution(self):
        return compose(self, self).is_identity

    def __eq__(self, other):
        return isinstance(other, Isometry) and self.m == other.m and self.t == other.t

    def __hash__(self):
        return hash((self.m, self.t))

    def __repr__(self):
        rows = "; ".join(" ".join(scalar_str(e) for e in row) for row in self.m)
        return f"Isometry([{rows}] + {vec_str(self.t)})"


def identity():
    return Isometry(IDENTITY3, ZERO3, check=False)


def translation(v):
    return Isometry(IDENTITY3, v, check=False)


def compose(g, h):
    """g o h: apply h first."""
    return h.then(g)


def word(isometries):
    """Product in left-to-right application order (first element acts first)."""
    acc = identity()
    for g in isometries:
        acc = acc.then(g)
    return acc


def reflection_in_plane(normal, point):
    """Reflection in the plane through ``point`` with rational ``normal``."""
    n2 = vdot(normal, normal)
    if n2 == 0:
        raise NotIsometryError("zero normal")
    two = Fraction(2, 1)
    m = tuple(
        tuple(
            scalar((1 if i == j else 0) - two * normal[i] * normal[j] / n2)
            for j in range(3)
        )
        for i in range(3)
    )
    iso_lin = Isometry(m, ZERO3, check=False)
    t = vsub(point, iso_lin(point))
    return Isometry(m, t, check=False)


def half_turn(point, direction):
    """Rotation by a half turn about the line ``point + R direction``."""
    d2 = vdot(direction, direction)
    if d2 == 0:
        raise NotIsometryError("zero axis direction")
    two = Fraction(2, 1)
    m = tuple(
        tuple(
            scalar(two * direction[i] * direction[j] / d2 - (1 if i == j else 0))
            for j in range(3)
        )
        for i in range(3)
    )
    iso_lin = Isometry(m, ZERO3, check=False)
    t = vsub(point, iso_lin(point))
    return Isometry(m, t, check=False)


def point_reflection(center):
    m = ((-1, 0, 0), (0, -1, 0), (0, 0, -1))
    return Isometry(m, vscale(2, center), check=False)


# ---------------------------------------------------------------------------
# linear solving


def _gauss(rows):
    """Row-reduce a list of row tuples (any width); returns (rref, pivots)."""
    rows = [[scalar(e) for e in r] for r in rows]
    n = len(rows)
    width = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = Fraction(rows[r][c])
        rows[r] = [scalar(Fraction(e) / pv) for e in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [scalar(a - f * b) for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return rows, pivots


def matrix_rank(rows):
    _, pivots = _gauss(rows)
    return len(pivots)


def solve_linear(a_rows, b):
    """Solve A x = b exactly.  Returns one solution or None if inconsistent.

    A is given as a list of rows (len-3 each), b as a same-length vector.
    When the system is underdetermined an arbitrary consistent solution is
    returned (free variables set to 0).
    """
    aug = [tuple(row) + (bi,) for row, bi in zip(a_rows, b)]
    rref, pivots = _gauss(aug)
    ncols = 3
    for row in rref:
        if all(e == 0 for e in row[:ncols]) and row[ncols] != 0:
            return None
    x = [0, 0, 0]
    for r, c in enumerate(pivots):
        if c < ncols:
            x[c] = rref[r][ncols]
    # pivot in the b column means inconsistency, caught above
    return tuple(x)


def fixed_space_dim(g):
    """Dimension of the fixed-point set of ``g``, or None when it is empty.

    Screw motions and glide reflections fix nothing; the distinct None
    return keeps them apart from point reflections (dimension 0).
    """
    a_rows = [tuple(g.m[i][j] - (1 if i == j else 0) for j in range(3)) for i in range(3)]
    b = vneg(g.t)
    if solve_linear(a_rows, b) is None:
        return None
    return 3 - matrix_rank(a_rows)


@dataclass(frozen=True)
class PowerResult:
    """Outcome of iterating an isometry: finite order, a translation, or neither."""

    kind: str  # "order" | "translation" | "exceeded"
    n: int = 0
    vector: tuple = ZERO3


def order_or_translation(g, max_n=48):
    """Smallest n <= max_n with g^n = 1, else with g^n a pure translation.

    Returns a :class:`PowerResult`; ``kind == "exceeded"`` when neither
    happens within ``max_n`` steps.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    acc = g
    for n in range(1, max_n + 1):
        if acc.m == IDENTITY3:
            if acc.t == ZERO3:
                return PowerResult("order", n)
            return PowerResult("translation", n, acc.t)
        acc = acc.then(g)
    return PowerResult("exceeded")


def solve_isometry(pairs):
    """The unique isometry mapping each source point to its target, or None.

    ``pairs`` is a sequence of (source, target) points; at least 4 pairs are
    required and the sources must affinely span 3-space, otherwise
    :class:`UnderdeterminedError` is raised.  Returns None when no exact
    isometry fits (the affine solution is non-orthogonal, or some pair
    disagrees).
    """
    pairs = list(pairs)
    if len(pairs) < 4:
        raise UnderdeterminedError("need at least 4 point pairs")
    p0, q0 = pairs[0]
    # pick three difference vectors forming a basis
    basis, images = [], []
    for p, q in pairs[1:]:
        dp = vsub(p, p0)
        if matrix_rank(basis + [dp]) > len(basis):
            basis.append(dp)
            images.append(vsub(q, q0))
        if len(basis) == 3:
            break
    if len(basis) < 3:
        raise UnderdeterminedError("source points do not affinely span 3-space")
    # M * basis_k = images_k  =>  M = [images as columns] * [basis as columns]^-1
    b_cols = mat_transpose(tuple(basis))
    i_cols = mat_transpose(tuple(images))
    m = mat_mul(i_cols, mat_inverse(b_cols))
    m = tuple(tuple(scalar(e) for e in row) for row in m)
    if not _is_orthogonal(m):
        return None
    iso = Isometry(m, vsub(q0, mat_vec(m, p0)), check=False)
    for p, q in pairs:
        if iso(p) != tuple(q):
            return None
    return iso


# ---------------------------------------------------------------------------
# lattices


def _hnf(rows):
    """Echelon basis of the integer row span (unimodular row reduction)."""
    work = [list(r) for r in rows if any(r)]
    basis = []
    for c in range(3):
        pool = [r for r in work if r[c] != 0]
        rest = [r for r in work if r[c] == 0]
        if not pool:
            work = rest
            continue
        while len(pool) > 1:
            pool.sort(key=lambda r: abs(r[c]))
            piv = pool[0]
            new_pool = [piv]
            for r in pool[1:]:
                q = r[c] // piv[c]
                rr = [a - q * b for a, b in zip(r, piv)]
                if rr[c] != 0:
                    new_pool.append(rr)
                elif any(rr):
                    rest.append(rr)
            pool = new_pool
        basis.append(pool[0])
        work = rest
    return basis


def lattice_basis_from(vectors):
    """A basis of the lattice generated by rational ``vectors`` (rank <= 3)."""
    if not vectors:
        return []
    denoms = [
        c.denominator if isinstance(c, Fraction) else 1 for v in vectors for c in v
    ]
    d = math.lcm(*denoms)
    int_rows = [[int(c * d) for c in v] for v in vectors]
    basis = _hnf(int_rows)
    return [tuple(scalar(Fraction(c, d)) for c in row) for row in basis]


class Lattice:
    """A rank-m lattice (m in 0..3) spanned by independent basis vectors."""

    __slots__ = ("basis", "name", "_ext", "_ext_inv", "rank")

    def __init__(self, basis, name=None):
        basis = [tuple(scalar(c) for c in b) for b in basis]
        if matrix_rank(basis) != len(basis):
            raise ValueError("lattice basis must be linearly independent")
        object.__setattr__(self, "basis", tuple(basis))
        object.__setattr__(self, "name", name)
        object.__setattr__(self, "rank", len(basis))
        ext = list(basis)
        if len(ext) == 2:
            ext.append(vcross(ext[0], ext[1]))
        elif len(ext) == 1:
            raise ValueError("rank-1 lattices are not supported")
        if ext:
            object.__setattr__(self, "_ext", tuple(ext))
            object.__setattr__(self, "_ext_inv", mat_inverse(mat_transpose(tuple(ext))))
        else:
            object.__setattr__(self, "_ext", None)
            object.__setattr__(self, "_ext_inv", None)

    def __setattr__(self, *a):
        raise AttributeError("Lattice is immutable")

    def coords(self, v):
        """Coordinates of v in the (extended) basis; lattice axes first."""
        if self._ext is None:
            return ()
        return tuple(scalar(c) for c in mat_vec(self._ext_inv, v))

    def member(self, v):
        if self.rank == 0:
            return v == ZERO3
        c = self.coords(v)
        for i in range(3):
            ci = c[i]
            if i < self.rank:
                if not is_integer(ci):
                    return False
            elif ci != 0:
                return False
        return True

    def reduce_key(self, p):
        """Translation-class key of point p modulo this lattice.

        The key is exact and identical for points differing by a lattice
        vector; for rank < 3 the transverse coordinates stay absolute.
        """
        if self.rank == 0:
            return p
        c = self.coords(p)
        out = []
        for i in range(3):
            ci = c[i]
            if i < self.rank:
                out.append(scalar(ci - _floor_div(ci)))
            else:
                out.append(ci)
        return tuple(out)

    def reduce_point(self, p):
        """The canonical representative of p's class (key mapped back to E3)."""
        if self.rank == 0:
            return p
        key = self.reduce_key(p)
        ext = self._ext
        return tuple(
            scalar(key[0] * ext[0][i] + key[1] * ext[1][i] + key[2] * ext[2][i])
            for i in range(3)
        )

    def offset_between(self, p, q):
        """The lattice vector q - p if the two points are congruent, else None."""
        d = vsub(q, p)
        return d if self.member(d) else None

    def scaled(self, k):
        return Lattice([vscale(k, b) for b in self.basis], name=self.name)

    def sublattice_of(self, other):
        return all(other.member(b) for b in self.basis)

    def __repr__(self):
        return f"Lattice({[vec_str(b) for b in self.basis]}, name={self.name!r})"


def finite_lattice():
    """Rank-0 lattice: the trivial translation group of a finite structure."""
    return Lattice([], name="trivial")


def sublattices_of_index(lattice, k):
    """All sublattices of the given index, via Hermite normal forms."""
    if lattice.rank != 3:
        raise ValueError("index enumeration implemented for rank 3 only")
    b = lattice.basis
    out = []
    for d1 in range(1, k + 1):
        if k % d1:
            continue
        for d2 in range(1, k // d1 + 1):
            if (k // d1) % d2:
                continue
            d3 = k // (d1 * d2)
            for s in range(d2):
                for t in range(d3):
                    for u in range(d3):
                        r1 = vscale(d1, b[0])
                        r2 = vadd(vscale(s, b[0]), vscale(d2, b[1]))
                        r3 = vadd(
                            vadd(vscale(t, b[0]), vscale(u, b[1])),
                            vscale(d3, b[2]),
                        )
                        out.append(Lattice([r1, r2, r3]))
    return out


LAMBDA_1 = Lattice([(1, 0, 0), (0, 1, 0), (0, 0, 1)], name="cubic")
LAMBDA_2 = Lattice([(1, 1, 0), (-1, 1, 0), (0, -1, 1)], name="fcc")
LAMBDA_3 = Lattice([(2, 0, 0), (0, 2, 0), (1, 1, 1)], name="bcc")


# ---------------------------------------------------------------------------
# vertex-set predicates


class VertexSetSpec:
    """Exact membership test for the vertex sets used by the catalog."""

    def __init__(self, name, kind, lattice=None, cosets=(), excluded=()):
        self.name = name
        self.kind = kind  # "lattice" | "difference" | "union"
        self.lattice = lattice
        self.cosets = tuple(cosets)      # (offset, lattice) pairs, union kind
        self.excluded = tuple(excluded)  # (offset, lattice) pairs, difference kind

    def member(self, v):
        if self.kind == "lattice":
            return self.lattice.member(v)
        if self.kind == "difference":
            if not self.lattice.member(v):
                return False
            return not any(lat.member(vsub(v, off)) for off, lat in self.excluded)
        if self.kind == "union":
            return any(lat.member(vsub(v, off)) for off, lat in self.cosets)
        raise ValueError(self.kind)

    def __repr__(self):
        return f"VertexSetSpec({self.name})"


LAMBDA_2_DOUBLED = Lattice([(2, 2, 0), (-2, 2, 0), (0, -2, 2)], name="2fcc")

SET_LAMBDA_1 = VertexSetSpec("Lambda1", "lattice", lattice=LAMBDA_1)
SET_LAMBDA_2 = VertexSetSpec("Lambda2", "lattice", lattice=LAMBDA_2)
SET_LAMBDA_3 = VertexSetSpec("Lambda3", "lattice", lattice=LAMBDA_3)
SET_V = VertexSetSpec(
    "V", "difference", lattice=LAMBDA_1, excluded=[((0, 0, 1), LAMBDA_3)]
)
SET_W = VertexSetSpec(
    "W", "union",
    cosets=[(ZERO3, LAMBDA_2_DOUBLED), ((1, -1, 1), LAMBDA_2_DOUBLED)],
)
