"""Exact polyhedral geometry over the rationals.

A polyhedron is given by integer inequality data ``a . p >= b``. This
module converts between that H-form and the vertex/ray/lineality V-form
with an incremental double description pass, answers face queries with
Fourier-Motzkin feasibility, enumerates faces through the generator
incidence structure, and lists lattice points of bounded polyhedra.

Everything is deterministic: inequalities are inserted in the order
given, generated rays are reduced to primitive integer vectors, and all
reported sets are sorted. No floating point is used anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as iproduct

from .errors import EmptyPolyhedron, LinealityPresent, Unbounded
from .lattice import primitive, rational_rank

Vector = tuple[int, ...]
Inequality = tuple[Vector, int]


@dataclass(frozen=True)
class Polyhedron:
    """H-polyhedron {p in R^dim : a . p >= b for each inequality (a, b)}."""

    dim: int
    inequalities: tuple[Inequality, ...]

    def __post_init__(self):
        norm = []
        for a, b in self.inequalities:
            a = tuple(int(x) for x in a)
            if len(a) != self.dim:
                raise ValueError("inequality normal has wrong length")
            norm.append((a, int(b)))
        object.__setattr__(self, "inequalities", tuple(norm))

    @property
    def n_inequalities(self) -> int:
        return len(self.inequalities)

    def with_inequality(self, a, b: int) -> "Polyhedron":
        return Polyhedron(self.dim, self.inequalities + ((tuple(a), int(b)),))


def polyhedron(dim: int, inequalities) -> Polyhedron:
    """Build a Polyhedron from any nested iterable of (a, b) pairs."""
    return Polyhedron(dim, tuple((tuple(a), b) for a, b in inequalities))


def interval(lo: int, hi: int) -> Polyhedron:
    """The segment [lo, hi] on the line: {p >= lo, -p >= -hi}."""
    return polyhedron(1, [((1,), lo), ((-1,), -hi)])


def positive_orthant(dim: int) -> Polyhedron:
    return polyhedron(dim, [(tuple(1 if j == i else 0 for j in range(dim)), 0) for i in range(dim)])


def half_line() -> Polyhedron:
    return positive_orthant(1)


def standard_simplex(dim: int) -> Polyhedron:
    ineqs = [(tuple(1 if j == i else 0 for j in range(dim)), 0) for i in range(dim)]
    ineqs.append((tuple(-1 for _ in range(dim)), -1))
    return polyhedron(dim, ineqs)


def unit_cube(dim: int) -> Polyhedron:
    p = Polyhedron(0, ())
    for _ in range(dim):
        p = product(p, interval(0, 1))
    return p


@dataclass(frozen=True)
class VRepresentation:
    """Vertices, rays, and lineality of a polyhedron.

    The polyhedron is conv(vertices) + cone(rays) + span(lineality).
    When lineality is present the ``vertices`` are base points of the
    minimal faces, kept so that the identity above still holds. Rays and
    lineality vectors are primitive; lineality vectors have their first
    nonzero coordinate positive. All three lists are sorted.
    """

    vertices: tuple[tuple[Fraction, ...], ...]
    rays: tuple[Vector, ...]
    lineality: tuple[Vector, ...]

    @property
    def is_empty(self) -> bool:
        return not (self.vertices or self.rays or self.lineality)

    @property
    def is_bounded(self) -> bool:
        return not (self.rays or self.lineality)


@dataclass(frozen=True)
class Face:
    """A nonempty face: its closed active set (1-based inequality indices),
    dimension, and a relative-interior witness point."""

    active: frozenset[int]
    dim: int
    witness: tuple[Fraction, ...]


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


class _Ray:
    """Mutable double-description ray: integer vector plus a bitmask of
    the constraints (by insertion index) it satisfies with equality."""

    __slots__ = ("vec", "tight")

    def __init__(self, vec, tight):
        self.vec = vec
        self.tight = tight


def _dd_pair(constraints, ambient: int):
    """Double description of the cone {x : c . x >= 0 for all c}.

    Processes constraints in the given order, maintaining extreme rays
    (modulo lineality) and a lineality basis. Returns (rays, lineality)
    where rays are _Ray records with primitive integer vectors.
    """
    lin = [tuple(1 if j == i else 0 for j in range(ambient)) for i in range(ambient)]
    rays: list[_Ray] = []
    for k, c in enumerate(constraints):
        lvals = [_dot(c, l) for l in lin]
        j0 = next((j for j, val in enumerate(lvals) if val != 0), None)
        if j0 is not None:
            # The constraint cuts the lineality space: one basis vector
            # becomes a ray, the rest are projected into the hyperplane.
            l0, v0 = lin[j0], lvals[j0]
            if v0 < 0:
                l0, v0 = tuple(-x for x in l0), -v0
            new_lin = []
            for j, l in enumerate(lin):
                if j == j0:
                    continue
                val = lvals[j]
                new_lin.append(primitive(tuple(v0 * x - val * y for x, y in zip(l, l0))) if val else l)
            for r in rays:
                val = _dot(c, r.vec)
                if val:
                    r.vec = primitive(tuple(v0 * x - val * y for x, y in zip(r.vec, l0)))
                r.tight |= 1 << k
            rays.append(_Ray(l0, (1 << k) - 1))
            lin = new_lin
        else:
            vals = [_dot(c, r.vec) for r in rays]
            plus = [i for i, v in enumerate(vals) if v > 0]
            zero = [i for i, v in enumerate(vals) if v == 0]
            minus = [i for i, v in enumerate(vals) if v < 0]
            new_rays = [rays[i] for i in plus]
            for i in zero:
                rays[i].tight |= 1 << k
                new_rays.append(rays[i])
            for ip in plus:
                for im in minus:
                    if not _adjacent(rays, ip, im):
                        continue
                    vp, vm = vals[ip], vals[im]
                    vec = primitive(tuple(vp * x - vm * y for x, y in zip(rays[im].vec, rays[ip].vec)))
                    tight = (rays[ip].tight & rays[im].tight) | (1 << k)
                    new_rays.append(_Ray(vec, tight))
            rays = new_rays
    return rays, lin


def _adjacent(rays, ip: int, im: int) -> bool:
    z = rays[ip].tight & rays[im].tight
    return not any(
        i != ip and i != im and (rays[i].tight & z) == z for i in range(len(rays))
    )


def _sign_normalize(v: Vector) -> Vector:
    lead = next((x for x in v if x != 0), 0)
    return tuple(-x for x in v) if lead < 0 else v


def _homogenized_constraints(p: Polyhedron):
    cons = [tuple(0 for _ in range(p.dim)) + (1,)]
    cons.extend(a + (-b,) for a, b in p.inequalities)
    return cons


def _split_generators(rays, lin):
    """Split homogenization-cone generators at height 1 / height 0."""
    vertices = []
    rec_rays = []
    for r in rays:
        h = r.vec[-1]
        if h > 0:
            vertices.append(tuple(Fraction(x, h) for x in r.vec[:-1]))
        else:
            rec_rays.append(primitive(r.vec[:-1]))
    lineality = [_sign_normalize(primitive(l[:-1])) for l in lin]
    return vertices, rec_rays, lineality


def vrep(p: Polyhedron) -> VRepresentation:
    """Vertex, ray, and lineality description of ``p``.

    Returns the empty representation when the polyhedron is empty.
    """
    rays, lin = _dd_pair(_homogenized_constraints(p), p.dim + 1)
    vertices, rec_rays, lineality = _split_generators(rays, lin)
    if not vertices:
        return VRepresentation((), (), ())
    return VRepresentation(
        tuple(sorted(set(vertices))),
        tuple(sorted(set(rec_rays))),
        tuple(sorted(set(lineality))),
    )


def is_empty(p: Polyhedron) -> bool:
    return vrep(p).is_empty


def is_bounded(p: Polyhedron) -> bool:
    return vrep(p).is_bounded


def _fm_feasible(rows, dim: int) -> bool:
    """Fourier-Motzkin feasibility for integer rows (a_0..a_{dim-1}, b)
    read as a . x >= b. Exact, with duplicate and tautology pruning."""
    cur = set()
    for row in rows:
        row = primitive(row)
        if not any(row[:dim]):
            if row[dim] > 0:
                return False
            continue
        cur.add(row)
    for var in range(dim):
        plus = [r for r in cur if r[var] > 0]
        minus = [r for r in cur if r[var] < 0]
        keep = {r for r in cur if r[var] == 0}
        for rp in plus:
            for rm in minus:
                cp, cm = rp[var], rm[var]
                new = primitive(tuple(cp * x - cm * y for x, y in zip(rm, rp)))
                if not any(new[:dim]):
                    if new[dim] > 0:
                        return False
                    continue
                keep.add(new)
        cur = keep
    return True


def _face_feasible(p: Polyhedron, tight: frozenset[int]) -> bool:
    rows = []
    for i, (a, b) in enumerate(p.inequalities, start=1):
        rows.append(a + (b,))
        if i in tight:
            rows.append(tuple(-x for x in a) + (-b,))
    return _fm_feasible(rows, p.dim)


def _check_indices(p: Polyhedron, s) -> frozenset[int]:
    s = frozenset(int(i) for i in s)
    if any(i < 1 or i > p.n_inequalities for i in s):
        raise ValueError("inequality index out of range (indices are 1-based)")
    return s


def face(p: Polyhedron, s) -> Face | None:
    """The face of ``p`` where the inequalities in ``s`` hold with equality.

    ``s`` contains 1-based inequality indices. Returns None when the face
    is empty. The returned active set is closed: it lists every inequality
    tight on the whole face, not only those in ``s``.
    """
    s = _check_indices(p, s)
    if not _face_feasible(p, s):
        return None
    cons = _homogenized_constraints(p)
    cons.extend(tuple(-x for x in p.inequalities[i - 1][0]) + (p.inequalities[i - 1][1],) for i in sorted(s))
    rays, lin = _dd_pair(cons, p.dim + 1)
    vertices, rec_rays, lineality = _split_generators(rays, lin)
    if not vertices:
        raise AssertionError("feasible face produced no points")
    n = len(vertices)
    witness = [Fraction(0)] * p.dim
    for v in vertices:
        for j, x in enumerate(v):
            witness[j] += Fraction(x, n)
    for r in rec_rays:
        for j, x in enumerate(r):
            witness[j] += x
    active = frozenset(
        i
        for i, (a, b) in enumerate(p.inequalities, start=1)
        if all(_dot(a, v) == b for v in vertices)
        and all(_dot(a, r) == 0 for r in rec_rays)
        and all(_dot(a, l) == 0 for l in lineality)
    )
    base = vertices[0]
    spanning = [tuple(x - y for x, y in zip(v, base)) for v in vertices[1:]]
    spanning.extend(rec_rays)
    spanning.extend(lineality)
    return Face(active, rational_rank(spanning), tuple(witness))


def _face_dim(vertices, rays) -> int:
    base = vertices[0]
    spanning = [tuple(x - y for x, y in zip(v, base)) for v in vertices[1:]]
    spanning.extend(rays)
    return rational_rank(spanning)


def f_vector(p: Polyhedron) -> tuple[tuple[int, ...], bool]:
    """Face counts (f_0, ..., f_d) with d = dim(p), and a simplicity flag.

    Counts every nonempty face including the polyhedron itself; unbounded
    faces count like any other. The flag reports whether each vertex lies
    on exactly dim(p) facets.
    """
    v = vrep(p)
    if v.is_empty:
        raise EmptyPolyhedron("f-vector of the empty polyhedron")
    if v.lineality:
        raise LinealityPresent("f-vector requires a pointed polyhedron")
    gens = [(vt, True) for vt in v.vertices] + [(r, False) for r in v.rays]
    masks = []
    for g, is_vertex in gens:
        mask = 0
        for i, (a, b) in enumerate(p.inequalities):
            val = _dot(a, g) - (b if is_vertex else 0)
            if val == 0:
                mask |= 1 << i
        masks.append(mask)
    m = p.n_inequalities
    top = frozenset(range(len(gens)))
    seen = {top}
    queue = [top]
    while queue:
        cur = queue.pop()
        for i in range(m):
            sub = frozenset(g for g in cur if masks[g] >> i & 1)
            if sub and sub != cur and sub not in seen:
                seen.add(sub)
                queue.append(sub)
    dims = {}
    for fs in seen:
        verts = [gens[g][0] for g in sorted(fs) if gens[g][1]]
        rays_ = [gens[g][0] for g in sorted(fs) if not gens[g][1]]
        dims[fs] = _face_dim(verts, rays_)
    d = dims[top]
    counts = [0] * (d + 1)
    for fs, fd in dims.items():
        counts[fd] += 1
    facets = [fs for fs, fd in dims.items() if fd == d - 1]
    simple = True
    for gi, (g, is_vertex) in enumerate(gens):
        if not is_vertex:
            continue
        if sum(1 for fs in facets if gi in fs) != d:
            simple = False
            break
    return tuple(counts), simple


def lattice_points(p: Polyhedron) -> list[Vector]:
    """All integer points of a bounded polyhedron, sorted lexicographically."""
    v = vrep(p)
    if v.rays or v.lineality:
        raise Unbounded("lattice points of an unbounded polyhedron")
    if not v.vertices:
        return []
    ranges = []
    for j in range(p.dim):
        coords = [vt[j] for vt in v.vertices]
        ranges.append(range(math.ceil(min(coords)), math.floor(max(coords)) + 1))
    out = []
    for pt in iproduct(*ranges):
        if all(_dot(a, pt) >= b for a, b in p.inequalities):
            out.append(pt)
    return out


def dilate(p: Polyhedron, m: int) -> Polyhedron:
    """The dilation m * p = {m x : x in p} for integer m >= 1."""
    if m < 1:
        raise ValueError("dilation factor must be a positive integer")
    return Polyhedron(p.dim, tuple((a, m * b) for a, b in p.inequalities))


def product(p: Polyhedron, q: Polyhedron) -> Polyhedron:
    """Cartesian product, with p's inequalities first."""
    zp = tuple(0 for _ in range(p.dim))
    zq = tuple(0 for _ in range(q.dim))
    ineqs = [(a + zq, b) for a, b in p.inequalities]
    ineqs.extend((zp + a, b) for a, b in q.inequalities)
    return Polyhedron(p.dim + q.dim, tuple(ineqs))


def recession_cone(p: Polyhedron) -> Polyhedron:
    """The recession cone {v : a . v >= 0} of a nonempty polyhedron."""
    if is_empty(p):
        raise EmptyPolyhedron("recession cone of the empty polyhedron")
    return Polyhedron(p.dim, tuple((a, 0) for a, b in p.inequalities))
