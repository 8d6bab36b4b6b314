"""Linearized subtorus actions on affine space and their quotient data.

A diagonal action of a subtorus G of the coordinate torus on C^n is
recorded by an integer weight matrix whose rows are one-parameter
subgroups generating G (column i gives the weight on the i-th
coordinate), together with an integer linearization vector alpha
describing how G scales an auxiliary degree variable t.

The projective quotient is read off a polyhedron attached to the
action: invariant monomials correspond bijectively to lattice points
of its homogenization cone, a coordinate support is semistable exactly
when the matching face is nonempty, and for simple polytopes the even
Betti numbers of the quotient are a binomial transform of the face
counts.

Supports and inequality indices are 1-based throughout; all
arithmetic is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import AllZero, NonSpanning, NotInSemigroup, NotSimple, TorsionQuotient
from .lattice import IntMatrix, integer_kernel_basis, invariant_factors, invariant_factors_from, snf
from .polyhedra import Polyhedron, f_vector, face, polyhedron
from .semigroups import graded_generators

Support = tuple[int, ...]


@dataclass(frozen=True)
class LinearizedAction:
    """A subtorus acting diagonally on C^n, plus a linearization.

    ``weights`` has one row per generating one-parameter subgroup; its
    column i is the weight on the i-th coordinate.  ``alpha`` gives the
    character by which the degree variable t transforms.
    """

    n: int
    weights: IntMatrix
    alpha: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(int(a) for a in self.alpha))
        if len(self.alpha) != self.n:
            raise ValueError("linearization length must equal n")
        if self.weights.ncols != self.n:
            raise ValueError("weight matrix must have n columns")


@dataclass(frozen=True)
class QuotientData:
    """Images of the coordinate characters in the quotient lattice.

    Row i of ``images`` is the image of the i-th standard character
    under a fixed isomorphism of the character quotient with Z^dim.
    """

    images: IntMatrix
    dim: int


def linearized_action(weight_rows: Iterable[Sequence[int]], alpha: Sequence[int]) -> LinearizedAction:
    """Build an action from weight rows and a linearization vector."""
    alpha = tuple(int(a) for a in alpha)
    rows = [tuple(int(x) for x in row) for row in weight_rows]
    return LinearizedAction(len(alpha), IntMatrix.from_rows(rows, len(alpha)), alpha)


def quotient_projection(action: LinearizedAction) -> QuotientData:
    """Project the coordinate characters to the quotient-torus lattice.

    The isomorphism with Z^dim is the one determined by the Smith
    decomposition of the weight matrix, so repeated calls agree.
    Raises TorsionQuotient when the weight rows span a non-saturated
    lattice (the acting group is then disconnected).
    """
    w = action.weights
    n = action.n
    if w.nrows == 0:
        return QuotientData(IntMatrix.identity(n), n)
    nf = snf(w)
    factors = invariant_factors_from(nf)
    if len(factors) < w.nrows:
        raise ValueError("weight rows must be linearly independent")
    if any(f != 1 for f in factors):
        raise TorsionQuotient(f"weight lattice has invariant factors {factors}")
    k = w.nrows
    rows = [tuple(nf.V.entries[i][j] for j in range(k, n)) for i in range(n)]
    return QuotientData(IntMatrix.from_rows(rows, n - k), n - k)


def delta(action: LinearizedAction) -> Polyhedron:
    """The polyhedron of the action: points p with p.a_i >= alpha_i.

    Inequality i is exactly (a_i, alpha_i), so supports index straight
    into the coordinates of C^n.
    """
    q = quotient_projection(action)
    ineqs = [(q.images.row(i), action.alpha[i]) for i in range(action.n)]
    return polyhedron(q.dim, ineqs)


def group_from_delta(p: Polyhedron) -> LinearizedAction:
    """Reverse the dictionary: recover an action whose polyhedron is p.

    Requires the inequality normals to span the ambient lattice over
    the integers (NonSpanning otherwise); the weight rows are then the
    saturated kernel of the transposed normal matrix, and the returned
    action's polyhedron agrees with p up to a unimodular change of
    coordinates.
    """
    a = IntMatrix.from_rows([ineq[0] for ineq in p.inequalities], p.dim)
    if p.dim > 0:
        factors = invariant_factors(a)
        if len(factors) < p.dim or any(f != 1 for f in factors):
            raise NonSpanning("inequality normals do not span the lattice")
    w = integer_kernel_basis(a.transpose())
    alpha = tuple(b for _, b in p.inequalities)
    return LinearizedAction(p.n_inequalities, w, alpha)


def invariant_monomial(action: LinearizedAction, p: Sequence[int], r: int) -> tuple[int, ...]:
    """Exponents (r_1..r_n, r) of the invariant monomial at (p, r).

    r_i = p.a_i - r*alpha_i; the map is a degree-preserving bijection
    from lattice points of the homogenization cone onto invariant
    monomials.  Raises NotInSemigroup when some r_i is negative.
    """
    if r < 0:
        raise ValueError("degree must be nonnegative")
    q = quotient_projection(action)
    p = tuple(int(x) for x in p)
    if len(p) != q.dim:
        raise ValueError(f"point has length {len(p)}, expected {q.dim}")
    exps = []
    for i in range(action.n):
        ri = sum(pj * aj for pj, aj in zip(p, q.images.row(i))) - r * action.alpha[i]
        if ri < 0:
            raise NotInSemigroup(f"coordinate {i + 1} gets exponent {ri}")
        exps.append(ri)
    return tuple(exps) + (r,)


def is_semistable(action: LinearizedAction, support: Iterable[int]) -> bool:
    """Whether points vanishing exactly on the given 1-based support
    are semistable: true iff the corresponding face of the polyhedron
    is nonempty."""
    return face(delta(action), support) is not None


def minimal_unstable_supports(action: LinearizedAction) -> list[Support]:
    """Minimal supports with empty face, sorted by size then entries.

    The unstable locus is the union of the coordinate subspaces
    determined by these supports; monotonicity prunes every superset
    of a support already found.
    """
    p = delta(action)
    found: list[frozenset[int]] = []
    out: list[Support] = []
    for size in range(action.n + 1):
        for combo in combinations(range(1, action.n + 1), size):
            s = frozenset(combo)
            if any(s >= m for m in found):
                continue
            if face(p, combo) is None:
                found.append(s)
                out.append(combo)
    return out


def betti(p: Polyhedron) -> tuple[int, ...]:
    """Even Betti numbers (b_0, b_2, ..., b_{2d}) of the quotient.

    Expands sum_i f_i (q-1)^i in powers of q; defined for simple
    polyhedra only (NotSimple otherwise).  For unbounded inputs the
    polynomial is still returned; whether it carries topological
    meaning is up to the caller.
    """
    counts, simple = f_vector(p)
    if not simple:
        raise NotSimple("face counts only determine Betti numbers for simple polyhedra")
    d = len(counts) - 1
    return tuple(
        sum(counts[i] * comb(i, j) * (-1) ** (i - j) for i in range(j, d + 1))
        for j in range(d + 1)
    )


def orbit_census(p: Polyhedron) -> dict[int, int]:
    """Count of torus orbits on the quotient by complex dimension.

    Orbits of complex dimension i correspond to faces of real
    dimension i, so this is the f-vector re-labeled.
    """
    counts, _ = f_vector(p)
    return dict(enumerate(counts))


def evaluate_invariants(
    action: LinearizedAction, point: Sequence, bound: int
) -> list[tuple[Fraction, int]]:
    """Evaluate the generating invariant monomials at a rational point.

    Returns (value, degree) per graded generator of degree <= bound,
    in generator order, with the degree variable t set to 1.  A point
    is semistable exactly when some positive-degree value is nonzero.
    """
    if bound < 0:
        raise ValueError("degree bound must be nonnegative")
    coords = tuple(Fraction(c) for c in point)
    if len(coords) != action.n:
        raise ValueError(f"point has length {len(coords)}, expected {action.n}")
    q = quotient_projection(action)
    p = delta(action)
    out = []
    for g in graded_generators(p):
        if g.degree > bound:
            continue
        value = Fraction(1)
        for i in range(action.n):
            e = sum(pj * aj for pj, aj in zip(g.point, q.images.row(i)))
            e -= g.degree * action.alpha[i]
            value *= coords[i] ** e
        out.append((value, g.degree))
    return out


def proj_equal(
    v: Sequence[tuple[Fraction, int]], w: Sequence[tuple[Fraction, int]]
) -> bool:
    """Whether two evaluation vectors give the same projective point.

    True iff some nonzero rational s has w_j = s^(deg_j) * v_j for all
    j.  Raises AllZero when either side has no nonzero positive-degree
    value (the point is unstable and has no image).  Scalars that
    exist only over an extension field are reported as unequal.
    """
    left = [(Fraction(val), int(d)) for val, d in v]
    right = [(Fraction(val), int(d)) for val, d in w]
    if [d for _, d in left] != [d for _, d in right]:
        raise ValueError("evaluations must come from the same generator list")
    pos_left = [(val, d) for val, d in left if d > 0]
    pos_right = [(val, d) for val, d in right if d > 0]
    if all(val == 0 for val, _ in pos_left) or all(val == 0 for val, _ in pos_right):
        raise AllZero("unstable point has no projective image")
    # Degree-0 values are scaling-invariant, so they must match exactly.
    for (a, d), (b, _) in zip(left, right):
        if d == 0 and a != b:
            return False
    for (a, _), (b, _) in zip(pos_left, pos_right):
        if (a == 0) != (b == 0):
            return False
    pairs = [(b / a, d) for (a, d), (b, _) in zip(pos_left, pos_right) if a != 0]
    degrees = [d for _, d in pairs]
    g, coeffs = _bezout(degrees)
    t = Fraction(1)
    for (ratio, _), c in zip(pairs, coeffs):
        t *= ratio**c
    if any(t ** (d // g) != ratio for ratio, d in pairs):
        return False
    return _rational_root(t, g) is not None


def _bezout(nums: Sequence[int]) -> tuple[int, list[int]]:
    """gcd g of nums plus coefficients c with sum(c_i * nums_i) = g."""
    g, coeffs = nums[0], [1]
    for x in nums[1:]:
        g2, u, vv = _ext_gcd(g, x)
        coeffs = [c * u for c in coeffs]
        coeffs.append(vv)
        g = g2
    return g, coeffs


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_s, s = s, old_s - quot * s
        old_t, t = t, old_t - quot * t
    return old_r, old_s, old_t


def _rational_root(t: Fraction, k: int) -> Fraction | None:
    """The rational k-th root of t, or None when no such root exists."""
    if k == 1:
        return t
    if t < 0 and k % 2 == 0:
        return None
    num = _perfect_root(abs(t.numerator), k)
    den = _perfect_root(t.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num if t > 0 else -num, den)


def _perfect_root(a: int, k: int) -> int | None:
    r = _iroot(a, k)
    return r if r**k == a else None


def _iroot(a: int, k: int) -> int:
    """Floor of the k-th root of a nonnegative integer, by Newton steps."""
    if a == 0:
        return 0
    x = 1 << -(-a.bit_length() // k)
    while True:
        y = ((k - 1) * x + a // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y
