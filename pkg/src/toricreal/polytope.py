"""Exact rational convex polytopes with dual descriptions.

A `RationalPolytope` always carries a consistent, canonical pair of
descriptions: the lexicographically sorted extreme points and the sorted
irredundant halfspaces, plus the affine-hull equations when the polytope is
not full-dimensional.  Canonicality makes equality plain componentwise
comparison, which the golden-file tests rely on.

Halfspaces are pairs (normal, offset) encoding <normal, m> + offset >= 0
with a primitive integer normal; equations encode <normal, m> + offset == 0.
"""

from fractions import Fraction

from .dd import dual_description, facets_from_generators, reduce_modulo_span
from .errors import EmptyPolytope, LowerDimensional, UnboundedPolyhedron
from .exactlinalg import (
    lcm,
    primitive_vector,
    rational_rank,
    vec_dot,
    vec_is_zero,
)


def _as_fraction_point(p):
    return tuple(Fraction(x) for x in p)


def _homogenize_point(v):
    """Primitive integer vector positively spanning (1, v)."""
    den = 1
    for x in v:
        den = lcm(den, x.denominator)
    return (den,) + tuple(int(x * den) for x in v)


def _canonical_halfspace(normal, offset):
    prim = primitive_vector(normal)
    # scale factor between the input normal and its primitive form
    idx = next(i for i, x in enumerate(prim) if x != 0)
    scale = Fraction(normal[idx], prim[idx])
    return prim, Fraction(offset) / scale


class RationalPolytope:
    """Immutable polytope; use the `from_*` constructors."""

    __slots__ = ("ambient_dim", "vertices", "halfspaces", "equations", "incidence")

    def __init__(self, ambient_dim, vertices, halfspaces, equations, incidence):
        self.ambient_dim = ambient_dim
        self.vertices = vertices
        self.halfspaces = halfspaces
        self.equations = equations
        self.incidence = incidence

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_vertices(points):
        """Convex hull of the given rational points."""
        pts = sorted({_as_fraction_point(p) for p in points})
        if not pts:
            raise EmptyPolytope("no points given")
        ambient = len(pts[0])
        if any(len(p) != ambient for p in pts):
            raise ValueError("points of mixed dimension")
        return _build_from_points(pts, ambient)

    @staticmethod
    def from_halfspaces(halfspaces, ambient_dim=None, equations=()):
        """Bounded intersection of halfspaces (normal, offset).

        Raises EmptyPolytope if infeasible and UnboundedPolyhedron if the
        intersection has a recession direction.
        """
        hs = [(tuple(n), Fraction(b)) for n, b in halfspaces]
        eqs = [(tuple(n), Fraction(b)) for n, b in equations]
        if ambient_dim is None:
            if not hs and not eqs:
                raise ValueError("need halfspaces or an explicit ambient dimension")
            ambient_dim = len((hs + eqs)[0][0])
        pts = _vertices_of_hrep(hs, eqs, ambient_dim)
        return _build_from_points(pts, ambient_dim)

    # -- basic queries ------------------------------------------------------

    @property
    def dim(self):
        return self.ambient_dim - len(self.equations)

    @property
    def n_vertices(self):
        return len(self.vertices)

    @property
    def n_facets(self):
        return len(self.halfspaces)

    def is_full_dimensional(self):
        return not self.equations

    def contains(self, point):
        p = _as_fraction_point(point)
        for n, b in self.equations:
            if vec_dot(n, p) + b != 0:
                return False
        return all(vec_dot(n, p) + b >= 0 for n, b in self.halfspaces)

    def __eq__(self, other):
        if not isinstance(other, RationalPolytope):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.vertices == other.vertices
            and self.halfspaces == other.halfspaces
            and self.equations == other.equations
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vertices, self.halfspaces, self.equations))

    def __repr__(self):
        return (
            f"RationalPolytope(dim {self.dim} in Q^{self.ambient_dim}, "
            f"{self.n_vertices} vertices, {self.n_facets} facets)"
        )

    # -- operations ----------------------------------------------------------

    def minkowski_sum(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        sums = {
            tuple(a + b for a, b in zip(v, w))
            for v in self.vertices
            for w in other.vertices
        }
        return RationalPolytope.from_vertices(sums)

    def intersect_halfspaces(self, extra):
        """Intersection with additional halfspaces, re-canonicalized."""
        hs = list(self.halfspaces) + [(tuple(n), Fraction(b)) for n, b in extra]
        return RationalPolytope.from_halfspaces(
            hs, self.ambient_dim, equations=self.equations
        )

    def slab(self, u, lo, hi):
        """Intersection with {lo <= <m, u> <= hi}."""
        lo, hi = Fraction(lo), Fraction(hi)
        if lo > hi:
            raise ValueError("slab needs lo <= hi")
        u = tuple(u)
        return self.intersect_halfspaces([(u, -lo), (tuple(-x for x in u), hi)])

    def support_value(self, normal):
        """min over the polytope of <normal, m>."""
        return min(vec_dot(normal, v) for v in self.vertices)

    def project_out(self, u):
        """Eliminate one lattice direction.

        `u` may be a coordinate index (shadow projection dropping that
        coordinate) or a primitive functional, in which case the image is
        taken in coordinates of a unimodular completion, so lattice structure
        is preserved.  Slices of the same polytope along the same functional
        land in a common coordinate system.
        """
        proj = projection_map(u, self.ambient_dim)
        imgs = {tuple(vec_dot(row, v) for row in proj) for v in self.vertices}
        return RationalPolytope.from_vertices(imgs)

    def scale(self, factor):
        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return RationalPolytope.from_vertices(
            [tuple(factor * x for x in v) for v in self.vertices]
        )

    def lattice_scale_factor(self):
        """Least positive integer m such that m*P has integer vertices."""
        m = 1
        for v in self.vertices:
            for x in v:
                m = lcm(m, x.denominator)
        return m

    def translate(self, shift):
        s = _as_fraction_point(shift)
        return RationalPolytope.from_vertices(
            [tuple(a + b for a, b in zip(v, s)) for v in self.vertices]
        )

    def normal_fan(self):
        """Complete fan with one maximal cone per vertex (inner facet normals)."""
        from .fan import Fan

        if not self.is_full_dimensional():
            raise LowerDimensional("normal fan needs a full-dimensional polytope")
        if self.dim == 0:
            raise LowerDimensional("normal fan of a point is not defined")
        rays = [n for n, _ in self.halfspaces]
        cones = []
        for j in range(self.n_vertices):
            cones.append(frozenset(i for i in range(self.n_facets) if self.incidence[i][j]))
        return Fan(rays, sorted(cones, key=sorted), validate=False)

    def combinatorially_equivalent(self, other):
        """Normal-fan equality (stricter than abstract face-lattice isomorphism)."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return self.normal_fan().same_fan(other.normal_fan())

    # -- face machinery -----------------------------------------------------

    def vertex_closure(self, vertex_indices):
        """Vertex set of the smallest face containing the given vertices."""
        idx = set(vertex_indices)
        common = [
            i
            for i in range(self.n_facets)
            if all(self.incidence[i][j] for j in idx)
        ]
        if len(common) == self.n_facets and not common:
            return frozenset(range(self.n_vertices))
        return frozenset(
            j
            for j in range(self.n_vertices)
            if all(self.incidence[i][j] for i in common)
        )

    def is_edge(self, i, j):
        return self.vertex_closure([i, j]) == frozenset((i, j))

    def edges(self):
        out = []
        for i in range(self.n_vertices):
            for j in range(i + 1, self.n_vertices):
                if self.is_edge(i, j):
                    out.append((i, j))
        return tuple(out)


def projection_map(u, ambient_dim):
    """Integer matrix mapping Q^d onto Q^(d-1), eliminating the direction `u`.

    For a coordinate index the map drops that coordinate.  For a primitive
    functional u it is the last d-1 rows of U^{-1} for a unimodular U whose
    columns start with a vector of u-pairing 1 followed by a basis of the
    u-kernel sublattice, so integer points map to integer points.
    """
    if isinstance(u, int):
        j = u % ambient_dim
        return tuple(
            tuple(1 if c == (i if i < j else i + 1) else 0 for c in range(ambient_dim))
            for i in range(ambient_dim - 1)
        )
    u = tuple(int(x) for x in u)
    if vec_is_zero(u):
        raise ValueError("functional must be nonzero")
    if primitive_vector(u) != u and primitive_vector(u) != tuple(-x for x in u):
        raise ValueError("functional must be primitive")
    # coordinate functionals reduce to coordinate drops
    nz = [i for i, x in enumerate(u) if x != 0]
    if len(nz) == 1 and abs(u[nz[0]]) == 1:
        return projection_map(nz[0], ambient_dim)
    from .exactlinalg import integer_kernel, smith_normal_form

    # columns: m_u with <m_u, u> = 1, then a kernel basis; U is unimodular
    D, U1, V = smith_normal_form((u,))
    # u * V = (1, 0, ..., 0) up to the 1x1 unit U1
    sign = U1[0][0]
    m_u = tuple(sign * V[i][0] for i in range(ambient_dim))
    kernel = integer_kernel((u,))
    cols = [m_u] + [tuple(k) for k in kernel]
    Umat = tuple(tuple(cols[c][r] for c in range(ambient_dim)) for r in range(ambient_dim))
    inv = _unimodular_inverse(Umat)
    return tuple(inv[i] for i in range(1, ambient_dim))


def _unimodular_inverse(U):
    from .exactlinalg import integer_det, mat_mul

    n = len(U)
    det = integer_det(U)
    if det not in (1, -1):
        raise ValueError("matrix is not unimodular")
    # adjugate via cofactors; n is small everywhere this is used
    inv = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = [
                [U[r][c] for c in range(n) if c != i]
                for r in range(n)
                if r != j
            ]
            cof = integer_det(minor) * (-1 if (i + j) % 2 else 1)
            row.append(cof * det)
        inv.append(tuple(row))
    return tuple(inv)


def _vertices_of_hrep(halfspaces, equations, ambient):
    """Extreme points of {m : halfspaces, equations}; errors if unbounded/empty."""
    hom = []
    for n, b in halfspaces:
        hom.append((Fraction(b),) + tuple(Fraction(x) for x in n))
    for n, b in equations:
        row = (Fraction(b),) + tuple(Fraction(x) for x in n)
        hom.append(row)
        hom.append(tuple(-x for x in row))
    hom.append((Fraction(1),) + (Fraction(0),) * ambient)
    int_rows = []
    for row in hom:
        if all(x == 0 for x in row):
            continue
        int_rows.append(primitive_vector(row))
    rays, lineality = dual_description(int_rows, ambient + 1)
    if lineality:
        raise UnboundedPolyhedron("halfspace system contains a line")
    verts = []
    recession = []
    for r in rays:
        if r[0] > 0:
            verts.append(tuple(Fraction(x, r[0]) for x in r[1:]))
        elif r[0] == 0:
            recession.append(r[1:])
    if recession:
        raise UnboundedPolyhedron("halfspace system has a recession direction")
    if not verts:
        raise EmptyPolytope("halfspace system is infeasible")
    return sorted(set(verts))


def _build_from_points(points, ambient):
    """Canonical polytope from a deduplicated sorted list of rational points."""
    gens = [_homogenize_point(v) for v in points]
    ineqs_h, eqs_h = facets_from_generators(gens, ambient + 1)

    equations = []
    if eqs_h:
        from .exactlinalg import rational_rref

        # order columns so pivots prefer the m-coordinates over the offset
        reordered = [row[1:] + (row[0],) for row in eqs_h]
        rref, _ = rational_rref(reordered)
        for row in rref:
            if all(x == 0 for x in row):
                continue
            normal, offset = _canonical_halfspace(row[:-1], row[-1])
            equations.append((normal, offset))
    equations = tuple(sorted(equations))

    halfspaces = []
    for row in ineqs_h:
        if all(x == 0 for x in row[1:]):
            continue  # pure-offset constraint, trivially slack
        normal, offset = _canonical_halfspace(row[1:], row[0])
        halfspaces.append((normal, offset))
    halfspaces = sorted(halfspaces)

    vertices = []
    for v in points:
        tight = [n for n, b in halfspaces if vec_dot(n, v) + b == 0]
        tight += [n for n, _ in equations]
        if rational_rank(tight) == ambient:
            vertices.append(v)
    vertices = tuple(vertices)

    # a genuine facet is tight on at least one vertex; anything else is a
    # supporting halfspace of the empty face (possible only in dimension 0)
    halfspaces = tuple(
        (n, b)
        for n, b in halfspaces
        if any(vec_dot(n, v) + b == 0 for v in vertices)
    )

    incidence = tuple(
        tuple(vec_dot(n, v) + b == 0 for v in vertices) for n, b in halfspaces
    )
    poly = RationalPolytope(ambient, vertices, halfspaces, equations, incidence)
    _check_consistency(poly)
    return poly


def _check_consistency(poly):
    for v in poly.vertices:
        for n, b in poly.equations:
            assert vec_dot(n, v) + b == 0
        for n, b in poly.halfspaces:
            assert vec_dot(n, v) + b >= 0
