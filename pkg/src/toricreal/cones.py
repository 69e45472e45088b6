"""Pointed rational polyhedral cones with dual descriptions.

Used for fan cones and for chambers in divisor class space.  A `Cone` keeps
its extreme rays (primitive, sorted), its facet inequalities reduced
canonically modulo the span, and the span equations; equality is therefore
plain comparison of ray sets.
"""

from .dd import dual_description, facets_from_generators, reduce_modulo_span
from .exactlinalg import (
    primitive_vector,
    rational_rank,
    rational_rref,
    vec_dot,
    vec_is_zero,
)


def _canonical_equations(rows):
    if not rows:
        return ()
    rref, _ = rational_rref(rows)
    out = []
    for row in rref:
        if all(x == 0 for x in row):
            continue
        out.append(primitive_vector(row))
    return tuple(sorted(out))


class Cone:
    """Immutable pointed cone; use `from_rays` / `from_inequalities`."""

    __slots__ = ("ambient_dim", "rays", "facets", "equations")

    def __init__(self, ambient_dim, rays, facets, equations):
        self.ambient_dim = ambient_dim
        self.rays = rays
        self.facets = facets
        self.equations = equations

    @staticmethod
    def from_rays(generators, ambient_dim=None):
        gens = [primitive_vector(g) for g in generators if not vec_is_zero(g)]
        if ambient_dim is None:
            if not gens:
                raise ValueError("need generators or an ambient dimension")
            ambient_dim = len(gens[0])
        if not gens:
            return Cone(ambient_dim, (), (), _canonical_equations(
                [tuple(1 if i == j else 0 for j in range(ambient_dim)) for i in range(ambient_dim)]
            ))
        facets, equations = facets_from_generators(gens, ambient_dim)
        if not _is_pointed(facets, equations, ambient_dim):
            raise ValueError("cone is not pointed")
        rays = _extreme_rays(gens, facets, equations, ambient_dim)
        return Cone(ambient_dim, rays, facets, _canonical_equations(equations))

    @staticmethod
    def from_inequalities(ineqs, ambient_dim, equations=()):
        system = [tuple(a) for a in ineqs]
        for e in equations:
            system.append(tuple(e))
            system.append(tuple(-x for x in e))
        rays, lineality = dual_description(system, ambient_dim)
        if lineality:
            raise ValueError("cone is not pointed")
        return Cone.from_rays(rays, ambient_dim)

    @property
    def dim(self):
        return self.ambient_dim - len(self.equations)

    def is_full_dimensional(self):
        return not self.equations

    def contains(self, v):
        return all(vec_dot(e, v) == 0 for e in self.equations) and all(
            vec_dot(f, v) >= 0 for f in self.facets
        )

    def contains_in_relative_interior(self, v):
        return all(vec_dot(e, v) == 0 for e in self.equations) and all(
            vec_dot(f, v) > 0 for f in self.facets
        )

    def interior_point(self):
        """A canonical point of the relative interior (sum of extreme rays)."""
        if not self.rays:
            return (0,) * self.ambient_dim
        total = [0] * self.ambient_dim
        for r in self.rays:
            total = [a + b for a, b in zip(total, r)]
        return primitive_vector(total)

    def intersection(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimensions differ")
        return Cone.from_inequalities(
            tuple(self.facets) + tuple(other.facets),
            self.ambient_dim,
            equations=tuple(self.equations) + tuple(other.equations),
        )

    def is_subcone_of(self, other):
        return all(other.contains(r) for r in self.rays)

    def facet_ray_sets(self):
        """For each facet, the set of extreme rays lying on it."""
        out = []
        for f in self.facets:
            out.append(frozenset(r for r in self.rays if vec_dot(f, r) == 0))
        return tuple(out)

    def smallest_face_containing(self, vectors):
        """Extreme rays of the smallest face containing the given vectors."""
        tight = [f for f in self.facets if all(vec_dot(f, v) == 0 for v in vectors)]
        return frozenset(r for r in self.rays if all(vec_dot(f, r) == 0 for f in tight))

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rays == other.rays

    def __hash__(self):
        return hash((self.ambient_dim, self.rays))

    def __repr__(self):
        return f"Cone(dim {self.dim} in Q^{self.ambient_dim}, {len(self.rays)} rays)"


def _is_pointed(facets, equations, ambient_dim):
    rows = list(facets) + list(equations)
    if ambient_dim == 0:
        return True
    return rational_rank(rows) == ambient_dim


def _extreme_rays(gens, facets, equations, ambient_dim):
    """Filter generators down to the extreme rays (rank test per ray)."""
    target = ambient_dim - 1
    out = []
    for g in sorted(set(gens)):
        tight = [f for f in facets if vec_dot(f, g) == 0]
        tight += list(equations)
        if rational_rank(tight) == target:
            out.append(g)
    return tuple(out)
