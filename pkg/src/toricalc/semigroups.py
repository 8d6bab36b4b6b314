"""Homogenization cones and graded semigroup rings.

The cone over a polyhedron P lives one dimension up, with the extra
coordinate as the grading. Its lattice points form a graded semigroup
whose minimal generators (the Hilbert basis, for pointed cones) give
the multiplicative generators of the associated graded ring, and whose
height-r slices have dimension ``hilbert_function(P, r)``.

The Hilbert basis computation triangulates the cone by placing its
extreme rays in sorted order, scans the half-open fundamental
parallelepiped of each simplicial piece over an exact bounding box, and
then discards every candidate that splits as a sum of two nonzero
semigroup elements.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product as iproduct

from .errors import NotPointed, Unbounded
from .lattice import rational_kernel, rational_rank, solve_rational
from .polyhedra import Polyhedron, dilate, lattice_points, vrep

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Cone:
    """Homogeneous cone {x in R^ambient : c . x >= 0 for each c}."""

    ambient: int
    inequalities: tuple[Vector, ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in c) for c in self.inequalities)
        if any(len(c) != self.ambient for c in rows):
            raise ValueError("cone inequality has wrong length")
        object.__setattr__(self, "inequalities", rows)

    def contains(self, x) -> bool:
        return all(sum(c * v for c, v in zip(row, x)) >= 0 for row in self.inequalities)


@dataclass(frozen=True)
class GradedPoint:
    """A lattice point of the cone over P, split as (point, degree)."""

    point: Vector
    degree: int


@dataclass(frozen=True)
class DegreeRelations:
    kernel_dim: int
    binomials: tuple[tuple[Vector, Vector], ...]


@dataclass(frozen=True)
class RingPresentation:
    """Graded generators plus, per degree, the dimension of the space of
    relations among degree-r monomials and spanning binomials for it."""

    generators: tuple[GradedPoint, ...]
    relations_by_degree: dict[int, DegreeRelations]


def homogenize(p: Polyhedron) -> Cone:
    """The cone over ``p``: each (a, b) becomes (a, -b), plus height >= 0."""
    rows = [a + (-b,) for a, b in p.inequalities]
    rows.append(tuple(0 for _ in range(p.dim)) + (1,))
    return Cone(p.dim + 1, tuple(rows))


def _cone_polyhedron(c: Cone) -> Polyhedron:
    return Polyhedron(c.ambient, tuple((row, 0) for row in c.inequalities))


def extreme_rays(c: Cone) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """(extreme rays, lineality basis) of the cone, primitive and sorted."""
    v = vrep(_cone_polyhedron(c))
    return v.rays, v.lineality


def _placing_triangulation(rays: list[Vector]) -> list[tuple[int, ...]]:
    """Simplicial subcones covering cone(rays), as index tuples.

    Rays are placed in list order. A ray that extends the linear span
    is joined to every current simplex; otherwise it is attached over
    each boundary facet visible from it. Input rays must be extreme,
    which for a pointed cone rules out a ray landing inside the old cone.
    """
    simplices: list[tuple[int, ...]] = []
    placed: list[int] = []
    span_basis: list[Vector] = []
    for i, r in enumerate(rays):
        if not placed:
            simplices = [(i,)]
            span_basis.append(r)
        elif rational_rank(span_basis + [r]) > len(span_basis):
            simplices = [s + (i,) for s in simplices]
            span_basis.append(r)
        else:
            k = len(simplices[0])
            facet_count = Counter()
            for s in simplices:
                for f in combinations(s, k - 1):
                    facet_count[f] += 1
            attached = []
            for s in simplices:
                for f in combinations(s, k - 1):
                    if facet_count[f] != 1:
                        continue
                    opp = next(j for j in s if j not in f)
                    normal = _facet_normal([rays[j] for j in f], span_basis, rays[opp])
                    if sum(n * x for n, x in zip(normal, r)) < 0:
                        attached.append(tuple(sorted(f + (i,))))
            simplices.extend(sorted(set(attached)))
        placed.append(i)
    return simplices


def _facet_normal(facet_rays, span_basis, inside_ray) -> tuple[Fraction, ...]:
    """Normal of the facet hyperplane within span(span_basis), oriented so
    the opposite ray of its simplex is on the positive side."""
    k = len(span_basis)
    rows = [[sum(Fraction(b * f) for b, f in zip(basis_vec, fr)) for basis_vec in span_basis] for fr in facet_rays]
    kernel = rational_kernel(rows) if rows else [tuple([Fraction(1)] * 1)]
    z = kernel[0]
    normal = tuple(sum(z[t] * Fraction(span_basis[t][j]) for t in range(k)) for j in range(len(inside_ray)))
    side = sum(n * x for n, x in zip(normal, inside_ray))
    if side < 0:
        normal = tuple(-n for n in normal)
    elif side == 0:
        raise AssertionError("degenerate simplex in triangulation")
    return normal


def _parallelepiped_points(rays: list[Vector]) -> list[Vector]:
    """Lattice points of {sum t_i r_i : 0 <= t_i < 1} for independent rays."""
    ambient = len(rays[0])
    ranges = []
    for j in range(ambient):
        lo = sum(min(r[j], 0) for r in rays)
        hi = sum(max(r[j], 0) for r in rays)
        ranges.append(range(lo, hi + 1))
    columns = [[r[j] for r in rays] for j in range(ambient)]
    out = []
    for x in iproduct(*ranges):
        t = solve_rational(columns, x)
        if t is not None and all(0 <= ti < 1 for ti in t):
            out.append(x)
    return out


def hilbert_basis(c: Cone) -> list[Vector]:
    """Minimal generating set of the semigroup of lattice points of a
    pointed cone, sorted lexicographically."""
    rays, lineality = extreme_rays(c)
    if lineality:
        raise NotPointed("the cone contains a line")
    if not rays:
        return []
    ray_list = list(rays)
    candidates = set(ray_list)
    for simplex in _placing_triangulation(ray_list):
        candidates.update(_parallelepiped_points([ray_list[i] for i in simplex]))
    zero = tuple(0 for _ in range(c.ambient))
    candidates.discard(zero)
    ordered = sorted(candidates)
    basis = []
    for g in ordered:
        reducible = any(
            h != g and c.contains(tuple(a - b for a, b in zip(g, h))) for h in ordered
        )
        if not reducible:
            basis.append(g)
    return basis


def graded_generators(p: Polyhedron) -> list[GradedPoint]:
    """Hilbert basis of the cone over ``p``, tagged with degrees and sorted
    by (degree, point)."""
    basis = hilbert_basis(homogenize(p))
    gens = [GradedPoint(v[:-1], v[-1]) for v in basis]
    gens.sort(key=lambda g: (g.degree, g.point))
    return gens


def hilbert_function(p: Polyhedron, r: int) -> int:
    """Number of lattice points of r * p (the degree-r slice of the cone).

    At r = 0 this counts lattice points of the recession cone of the
    inequality system, which is 1 exactly when that cone is bounded.
    """
    if r < 0:
        raise ValueError("degree must be nonnegative")
    if r == 0:
        height_zero = Polyhedron(p.dim, tuple((a, 0) for a, _ in p.inequalities))
        return len(lattice_points(height_zero))
    return len(lattice_points(dilate(p, r)))


def _exponent_vectors(degrees: list[int], total: int) -> list[Vector]:
    """All e >= 0 with sum e_i * degrees_i == total, lexicographically."""
    out: list[Vector] = []

    def rec(idx: int, remaining: int, prefix: tuple[int, ...]):
        if idx == len(degrees):
            if remaining == 0:
                out.append(prefix)
            return
        d = degrees[idx]
        top = remaining // d
        for e in range(top + 1):
            rec(idx + 1, remaining - e * d, prefix + (e,))

    rec(0, total, ())
    return out


def relation_space(p: Polyhedron, bound: int) -> RingPresentation:
    """Relations among graded generators in each degree up to ``bound``.

    The kernel dimension in degree r is the number of degree-r monomials
    in the generators minus ``hilbert_function(p, r)``; the binomials pair
    the exponent vectors with equal image, each fiber against its
    lexicographically first member.
    """
    if bound < 1:
        raise ValueError("degree bound must be at least 1")
    v = vrep(p)
    if v.rays or v.lineality:
        raise Unbounded("relations need a bounded polyhedron")
    gens = graded_generators(p)
    degrees = [g.degree for g in gens]
    relations: dict[int, DegreeRelations] = {}
    for r in range(1, bound + 1):
        exps = _exponent_vectors(degrees, r)
        fibers: dict[Vector, list[Vector]] = {}
        for e in exps:
            image = tuple(
                sum(ei * g.point[j] for ei, g in zip(e, gens)) for j in range(p.dim)
            )
            fibers.setdefault(image, []).append(e)
        kernel_dim = len(exps) - hilbert_function(p, r)
        binomials = []
        for key in sorted(fibers):
            members = fibers[key]
            ref = members[0]
            binomials.extend((ref, other) for other in members[1:])
        binomials.sort()
        relations[r] = DegreeRelations(kernel_dim, tuple(binomials))
    return RingPresentation(tuple(gens), relations)
