"""Toric varieties, torus-invariant Q-divisors, and their moment polytopes.

A variety is a complete-or-not fan together with the Smith-form presentation
of its divisor class group Z^rays / (principal divisors).  Divisors are
coefficient vectors indexed by the fan's rays.
"""

from fractions import Fraction

from .errors import (
    EmptyPolytope,
    InconsistentRelations,
    NotCartier,
    NotComplete,
)
from .exactlinalg import (
    column_hermite,
    integer_kernel,
    mat_vec,
    smith_normal_form,
    solve_integer,
    solve_rational,
    vec_gcd,
)
from .fan import Fan
from .polytope import RationalPolytope


class TorusDivisor:
    """T-invariant Q-divisor as a coefficient vector over the fan's rays."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients):
        self.coefficients = tuple(Fraction(c) for c in coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    def __add__(self, other):
        other = as_divisor(other)
        return TorusDivisor(a + b for a, b in zip(self.coefficients, other.coefficients))

    def __sub__(self, other):
        other = as_divisor(other)
        return TorusDivisor(a - b for a, b in zip(self.coefficients, other.coefficients))

    def __mul__(self, scalar):
        return TorusDivisor(Fraction(scalar) * a for a in self.coefficients)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return TorusDivisor(a / Fraction(scalar) for a in self.coefficients)

    def __neg__(self):
        return TorusDivisor(-a for a in self.coefficients)

    def __eq__(self, other):
        if isinstance(other, TorusDivisor):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self):
        return hash(self.coefficients)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coefficients)

    def __repr__(self):
        return f"TorusDivisor({list(self.coefficients)})"


def as_divisor(d):
    return d if isinstance(d, TorusDivisor) else TorusDivisor(d)


class ToricVariety:
    """Treat instances as immutable; the only mutation is idempotent caching
    of the class-group presentation and flags, safe under concurrent use."""

    def __init__(self, fan):
        self.fan = fan
        self._snf = None
        self._flags = {}

    # -- class group ---------------------------------------------------------

    def _class_data(self):
        if self._snf is None:
            R = tuple(self.fan.rays)  # k x n
            self._snf = smith_normal_form(R)
        return self._snf

    @property
    def n_rays(self):
        return len(self.fan.rays)

    @property
    def dim(self):
        return self.fan.lattice_dim

    @property
    def class_rank(self):
        D, _, _ = self._class_data()
        r = min(len(D), len(D[0]) if D else 0)
        rank = sum(1 for i in range(r) if D[i][i] != 0)
        return self.n_rays - rank

    def torsion_invariants(self):
        D, _, _ = self._class_data()
        r = min(len(D), len(D[0]) if D else 0)
        return tuple(D[i][i] for i in range(r) if D[i][i] not in (0, 1))

    def divisor_class(self, divisor):
        """Numerical class: coordinates of the free part of [D] in Q^rank."""
        divisor = self._check_divisor(divisor)
        D, U, _ = self._class_data()
        r = min(len(D), len(D[0]) if D else 0)
        rank = sum(1 for i in range(r) if D[i][i] != 0)
        image = mat_vec(U, divisor.coefficients)
        return tuple(image[rank:])

    def divisor_with_class(self, cls):
        """Some Q-divisor with the given free-part class (a section of the quotient)."""
        D, U, _ = self._class_data()
        r = min(len(D), len(D[0]) if D else 0)
        rank = sum(1 for i in range(r) if D[i][i] != 0)
        target = tuple([Fraction(0)] * rank) + tuple(Fraction(c) for c in cls)
        return TorusDivisor(solve_rational(U, target))

    def linearly_equivalent(self, A, B):
        A, B = self._check_divisor(A), self._check_divisor(B)
        diff = (A - B).coefficients
        if any(c.denominator != 1 for c in diff):
            return False
        m = solve_integer(self.fan.rays, tuple(int(c) for c in diff))
        return m is not None

    # -- flags -----------------------------------------------------------------

    def is_complete(self):
        if "complete" not in self._flags:
            self._flags["complete"] = self.fan.is_complete()
        return self._flags["complete"]

    def is_simplicial(self):
        if "simplicial" not in self._flags:
            self._flags["simplicial"] = self.fan.is_simplicial()
        return self._flags["simplicial"]

    def is_smooth(self):
        if "smooth" not in self._flags:
            self._flags["smooth"] = self.fan.is_smooth()
        return self._flags["smooth"]

    def is_fano(self):
        if "fano" not in self._flags:
            self._flags["fano"] = self.is_ample(self.anticanonical())
        return self._flags["fano"]

    # -- divisors ---------------------------------------------------------------

    def _check_divisor(self, divisor):
        divisor = as_divisor(divisor)
        if len(divisor) != self.n_rays:
            raise ValueError(
                f"divisor has {len(divisor)} coefficients, fan has {self.n_rays} rays"
            )
        return divisor

    def anticanonical(self):
        return TorusDivisor([1] * self.n_rays)

    def moment_polytope(self, divisor):
        """P_D = {m : <ray_i, m> + b_i >= 0}; raises EmptyPolytope if D has no
        effective representative."""
        divisor = self._check_divisor(divisor)
        if not self.is_complete():
            raise NotComplete("moment polytopes need a complete fan")
        halfspaces = list(zip(self.fan.rays, divisor.coefficients))
        return RationalPolytope.from_halfspaces(halfspaces, self.dim)

    def is_big(self, divisor):
        try:
            return self.moment_polytope(divisor).is_full_dimensional()
        except EmptyPolytope:
            return False

    def is_cartier(self, divisor):
        divisor = self._check_divisor(divisor)
        if not divisor.is_integral():
            return False
        b = tuple(int(c) for c in divisor.coefficients)
        for c in self.fan.max_cones:
            idx = sorted(c)
            rows = [self.fan.rays[i] for i in idx]
            rhs = tuple(-b[i] for i in idx)
            if solve_integer(rows, rhs) is None:
                return False
        return True

    def is_q_cartier(self, divisor):
        divisor = self._check_divisor(divisor)
        from .errors import NoSolution

        for c in self.fan.max_cones:
            idx = sorted(c)
            rows = [self.fan.rays[i] for i in idx]
            rhs = tuple(-divisor.coefficients[i] for i in idx)
            try:
                solve_rational(rows, rhs)
            except NoSolution:
                return False
        return True

    def is_ample(self, divisor):
        """Q-Cartier with moment-polytope normal fan equal to the fan."""
        divisor = self._check_divisor(divisor)
        if not self.is_complete():
            raise NotComplete("ampleness needs a complete fan")
        if not self.is_q_cartier(divisor):
            return False
        try:
            poly = self.moment_polytope(divisor)
        except EmptyPolytope:
            return False
        if not poly.is_full_dimensional():
            return False
        return poly.normal_fan().same_fan(self.fan)

    def __repr__(self):
        return f"ToricVariety({self.fan!r})"


def from_normal_fan(polytope):
    """The toric variety whose fan is the normal fan of a full-dimensional polytope."""
    return ToricVariety(polytope.normal_fan())


def proj_rays(rays, rows):
    """Rays of the fan of P(O(D_1) + ... + O(D_t)) over the fan with the given
    rays, where `rows` lists the coefficient vectors of D_1..D_t.

    Base ray r lifts to (r, D_2(r)-D_1(r), ..., D_t(r)-D_1(r)); the fiber
    contributes the standard basis of the new Z^(t-1) factor and minus its
    sum.  The twist convention (differences against the first summand, with
    positive sign) is pinned by the projectivization of O + O(1) + O(1) on
    the projective plane, whose rays it reproduces verbatim.  Sorted
    lexicographically.
    """
    rays = [tuple(int(x) for x in r) for r in rays]
    t = len(rows)
    if t < 2:
        raise ValueError("need at least two summands")
    k = len(rays)
    mats = [tuple(Fraction(c) for c in row) for row in rows]
    if any(len(row) != k for row in mats):
        raise ValueError("divisor rows must have one coefficient per ray")
    twists = []
    for i in range(k):
        tw = tuple(mats[j][i] - mats[0][i] for j in range(1, t))
        if any(x.denominator != 1 for x in tw):
            raise NotCartier("summand differences must be integral divisors")
        twists.append(tuple(int(x) for x in tw))
    fiber_dim = t - 1
    lifted = [r + twists[i] for i, r in enumerate(rays)]
    fiber = [
        tuple(0 for _ in range(len(rays[0]))) + tuple(1 if j == i else 0 for j in range(fiber_dim))
        for i in range(fiber_dim)
    ]
    fiber.append(tuple(0 for _ in range(len(rays[0]))) + tuple(-1 for _ in range(fiber_dim)))
    return tuple(sorted(lifted + fiber))


def projective_bundle(variety, rows):
    """P_X(O(D_1) + ... + O(D_t)) as a toric variety.

    Maximal cones are products of the lifted base cones with the fiber cones
    omitting one fiber ray each.
    """
    base_fan = variety.fan
    n = base_fan.lattice_dim
    t = len(rows)
    all_rays = proj_rays(base_fan.rays, rows)
    index = {r: i for i, r in enumerate(all_rays)}

    mats = [tuple(Fraction(c) for c in row) for row in rows]
    lift = {}
    for i, r in enumerate(base_fan.rays):
        tw = tuple(int(mats[j][i] - mats[0][i]) for j in range(1, t))
        lift[i] = index[r + tw]
    fiber_dim = t - 1
    fiber_rays = []
    for i in range(fiber_dim):
        fiber_rays.append(index[(0,) * n + tuple(1 if j == i else 0 for j in range(fiber_dim))])
    fiber_rays.append(index[(0,) * n + (-1,) * fiber_dim])

    cones = []
    for base_cone in base_fan.max_cones:
        lifted = [lift[i] for i in base_cone]
        for omit in range(t):
            fiber_part = [fiber_rays[j] for j in range(t) if j != omit]
            cones.append(frozenset(lifted + fiber_part))
    return ToricVariety(Fan(all_rays, cones, validate=False))


def bundle_section_rays(variety, rows):
    """Positions in proj_rays order of the distinguished fiber rays.

    For a two-summand bundle these index the two disjoint sections: the ray
    (0,..,0,-1) (twisting summand side) first, then (0,..,0,1).
    """
    if len(rows) != 2:
        raise ValueError("section rays only defined for rank-two bundles")
    base_rays = variety.fan.rays
    all_rays = proj_rays(base_rays, rows)
    n = variety.fan.lattice_dim
    minus = (0,) * n + (-1,)
    plus = (0,) * n + (1,)
    return all_rays.index(minus), all_rays.index(plus)


def from_primitive_relations(relations):
    """Toric variety from primitive relations among abstract ray symbols.

    Each relation is a length-k integer vector of coefficients (right-hand
    side already moved left, so positive entries mark the primitive
    collection).  Rays are the rows of a Hermite-canonicalized saturated
    kernel basis; maximal cones are the n-subsets avoiding every primitive
    collection.
    """
    rel = tuple(tuple(int(c) for c in row) for row in relations)
    if not rel:
        raise InconsistentRelations("no relations given")
    k = len(rel[0])
    if any(len(row) != k for row in rel):
        raise InconsistentRelations("relations of mixed length")

    kernel = integer_kernel(rel)
    n = len(kernel)
    if n == 0 or n >= k:
        raise InconsistentRelations(f"kernel rank {n} leaves no fan dimension")
    # rays as rows; kernel vectors as columns
    ray_matrix = tuple(tuple(kernel[j][i] for j in range(n)) for i in range(k))
    canonical, _ = column_hermite(ray_matrix)
    rays = tuple(tuple(row) for row in canonical)
    for r in rays:
        if all(x == 0 for x in r):
            raise InconsistentRelations("a ray symbol receives the zero vector")
        if vec_gcd(r) != 1:
            raise InconsistentRelations(f"ray {r} is not primitive")
    if len(set(rays)) != k:
        raise InconsistentRelations("distinct symbols map to equal rays")

    collections = []
    for row in rel:
        support = frozenset(i for i, c in enumerate(row) if c > 0)
        if not support:
            raise InconsistentRelations("a relation has no positive part")
        collections.append(support)

    from itertools import combinations

    from .exactlinalg import integer_rank

    cones = []
    for subset in combinations(range(k), n):
        s = frozenset(subset)
        if any(pc <= s for pc in collections):
            continue
        if integer_rank([rays[i] for i in subset]) != n:
            continue
        cones.append(s)
    if not cones:
        raise NotComplete("no maximal cones survive the primitive collections")
    variety = ToricVariety(Fan(rays, cones, validate=True))
    if not variety.is_complete():
        raise NotComplete("primitive relations do not define a complete fan")
    return variety
