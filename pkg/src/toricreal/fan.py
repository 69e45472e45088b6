"""Fans of strongly convex rational cones in a lattice.

Rays are stored in the order given (divisor coefficients index into it);
maximal cones are frozen sets of ray indices.  `same_fan` compares fans as
sets of maximal cones over ray vectors, independent of ordering.
"""

from .cones import Cone
from .errors import NotComplete
from .exactlinalg import integer_det, primitive_vector, vec_is_zero

_FULL_VALIDATION_LIMIT = 512  # pairwise face checks are quadratic in cone count


class Fan:
    __slots__ = ("lattice_dim", "rays", "max_cones", "_cones_cache")

    def __init__(self, rays, max_cones, validate=True):
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        if not rays:
            raise ValueError("fan needs at least one ray")
        self.lattice_dim = len(rays[0])
        for r in rays:
            if vec_is_zero(r):
                raise ValueError("zero ray")
            if primitive_vector(r) != r:
                raise ValueError(f"ray {r} is not primitive")
        if len(set(rays)) != len(rays):
            raise ValueError("duplicate rays")
        self.rays = rays
        cones = []
        for c in max_cones:
            idx = frozenset(int(i) for i in c)
            if not idx or max(idx) >= len(rays) or min(idx) < 0:
                raise ValueError("cone indices out of range")
            cones.append(idx)
        self.max_cones = tuple(sorted(cones, key=sorted))
        self._cones_cache = {}
        if validate:
            self._validate()

    # -- cone access ---------------------------------------------------------

    def cone(self, indices):
        key = frozenset(indices)
        if key not in self._cones_cache:
            self._cones_cache[key] = Cone.from_rays(
                [self.rays[i] for i in sorted(key)], self.lattice_dim
            )
        return self._cones_cache[key]

    def _validate(self):
        for c in self.max_cones:
            cone = self.cone(c)  # raises if not strongly convex
            if frozenset(cone.rays) != frozenset(self.rays[i] for i in c):
                raise ValueError(f"cone {sorted(c)} lists non-extreme rays")
        if len(self.max_cones) ** 2 <= _FULL_VALIDATION_LIMIT:
            self._check_face_to_face()

    def _check_face_to_face(self):
        for a in range(len(self.max_cones)):
            for b in range(a + 1, len(self.max_cones)):
                ca, cb = self.max_cones[a], self.max_cones[b]
                inter = self.cone(ca).intersection(self.cone(cb))
                common = [self.rays[i] for i in ca & cb]
                if frozenset(inter.rays) != frozenset(common):
                    raise ValueError(
                        f"cones {sorted(ca)} and {sorted(cb)} do not meet in a face"
                    )
                for c in (ca, cb):
                    face = self.cone(c).smallest_face_containing(inter.rays or [(0,) * self.lattice_dim])
                    if inter.rays and face != frozenset(inter.rays):
                        raise ValueError(
                            f"intersection of {sorted(ca)} and {sorted(cb)} is not a face"
                        )

    # -- predicates -----------------------------------------------------------

    def is_complete(self):
        """Wall pairing: every ridge of a maximal cone is shared by exactly two."""
        n = self.lattice_dim
        if not self.max_cones:
            return False
        wall_count = {}
        adjacency = {i: set() for i in range(len(self.max_cones))}
        wall_owner = {}
        for ci, c in enumerate(self.max_cones):
            cone = self.cone(c)
            if cone.dim != n:
                return False
            for wall in cone.facet_ray_sets():
                wall_count[wall] = wall_count.get(wall, 0) + 1
                if wall in wall_owner:
                    adjacency[ci].add(wall_owner[wall])
                    adjacency[wall_owner[wall]].add(ci)
                else:
                    wall_owner[wall] = ci
        if any(count != 2 for count in wall_count.values()):
            return False
        # connectivity through walls
        seen = {0}
        stack = [0]
        while stack:
            for nb in adjacency[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == len(self.max_cones)

    def is_simplicial(self):
        n = self.lattice_dim
        return all(
            len(c) == n and self.cone(c).dim == n for c in self.max_cones
        )

    def is_smooth(self):
        if not self.is_simplicial():
            return False
        for c in self.max_cones:
            mat = [self.rays[i] for i in sorted(c)]
            if abs(integer_det(mat)) != 1:
                return False
        return True

    # -- comparison ------------------------------------------------------------

    def cone_ray_sets(self):
        return frozenset(
            frozenset(self.rays[i] for i in c) for c in self.max_cones
        )

    def same_fan(self, other):
        return (
            self.lattice_dim == other.lattice_dim
            and self.cone_ray_sets() == other.cone_ray_sets()
        )

    def __repr__(self):
        return (
            f"Fan(dim {self.lattice_dim}, {len(self.rays)} rays, "
            f"{len(self.max_cones)} maximal cones)"
        )


def require_complete(fan):
    if not fan.is_complete():
        raise NotComplete("fan is not complete")
