"""Mori-chamber machinery in divisor class space.

The secondary fan is computed by slicing the effective cone along every
hyperplane spanned by class vectors of the rays and then merging adjacent
cells whose sample divisors are Mori equivalent.  Mori equivalence itself is
the moment-polytope test: A and B are equivalent exactly when the Minkowski
sum P_A + P_B is combinatorially equivalent (normal-fan equal) to both.

Wall crossings between distinct chambers are read off facet counts:
with f_S the facet count of the Minkowski sum,

  flip        <=>  f_A = f_B      and  f_S = f_A + 1
  divisorial  <=>  |f_A - f_B| = 1 and  f_S = max(f_A, f_B)

A flip leaves the ray set of the normal fan unchanged but the common
refinement gains exactly the circuit's crossing ray; at a divisorial wall
one fan refines the other, so the sum creates nothing new.  Non-adjacent
chambers differ by at least two such moves and overshoot both bounds.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .cones import Cone
from .errors import (
    ExhaustedAttempts,
    NotBig,
    NotComplete,
    NotSimplicial,
    SameChamber,
    TorsionClassGroup,
)
from .exactlinalg import (
    canonical_sign,
    integer_kernel,
    primitive_vector,
    rational_rank,
    vec_dot,
)
from .prng import SplitMix64


def ray_classes(variety):
    """Numerical classes of the ray divisors, as integer vectors."""
    k = variety.n_rays
    out = []
    for i in range(k):
        e = [0] * k
        e[i] = 1
        cls = variety.divisor_class(e)
        out.append(tuple(int(c) for c in cls))
    return tuple(out)


def _require_chamber_input(variety):
    if not variety.is_complete():
        raise NotComplete("chamber machinery needs a complete fan")
    if not variety.is_simplicial():
        raise NotSimplicial("chamber machinery needs a simplicial (Q-factorial) fan")
    if variety.torsion_invariants():
        raise TorsionClassGroup(
            f"class group torsion {variety.torsion_invariants()} unsupported"
        )


def effective_cone(variety):
    """Positive hull of the ray divisor classes."""
    _require_chamber_input(variety)
    return Cone.from_rays(ray_classes(variety), variety.class_rank)


def movable_cone(variety):
    """Intersection over rays r of the hulls of the classes of the other rays."""
    _require_chamber_input(variety)
    classes = ray_classes(variety)
    d = variety.class_rank
    result = None
    for drop in range(len(classes)):
        hull = Cone.from_rays(
            [c for i, c in enumerate(classes) if i != drop], d
        )
        result = hull if result is None else result.intersection(hull)
    return result


@dataclass(frozen=True)
class ChamberDecomposition:
    class_space_dim: int
    rays: tuple  # all secondary-fan rays
    chambers: tuple  # of Cone

    def chamber_containing(self, cls):
        for i, c in enumerate(self.chambers):
            if c.contains(cls):
                return i
        return None

    def adjacency_pairs(self):
        """Unordered chamber index pairs sharing a full wall."""
        out = set()
        d = self.class_space_dim
        for i, j in combinations(range(len(self.chambers)), 2):
            inter = self.chambers[i].intersection(self.chambers[j])
            if inter.dim == d - 1:
                out.add((i, j))
        return frozenset(out)


def secondary_fan(variety):
    """Maximal chambers of the GKZ decomposition of the effective cone."""
    _require_chamber_input(variety)
    classes = ray_classes(variety)
    d = variety.class_rank
    eff = Cone.from_rays(classes, d)

    if d == 1:
        return ChamberDecomposition(1, eff.rays, (eff,))

    hyperplanes = set()
    for subset in combinations(sorted(set(classes)), d - 1):
        if rational_rank(subset) != d - 1:
            continue
        kernel = integer_kernel(subset)
        if len(kernel) != 1:
            continue
        hyperplanes.add(canonical_sign(kernel[0]))

    cells = [eff]
    for h in sorted(hyperplanes):
        neg = tuple(-x for x in h)
        new_cells = []
        for cell in cells:
            above = Cone.from_inequalities(
                tuple(cell.facets) + (h,), d, equations=cell.equations
            )
            below = Cone.from_inequalities(
                tuple(cell.facets) + (neg,), d, equations=cell.equations
            )
            if above.dim == d and below.dim == d:
                new_cells.extend([above, below])
            else:
                new_cells.append(cell)
        cells = new_cells

    samples = [variety.divisor_with_class(c.interior_point()) for c in cells]

    parent = list(range(len(cells)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in combinations(range(len(cells)), 2):
        if cells[i].intersection(cells[j]).dim != d - 1:
            continue
        if same_chamber(variety, samples[i], samples[j]):
            parent[find(i)] = find(j)

    groups = {}
    for i in range(len(cells)):
        groups.setdefault(find(i), []).append(i)
    chambers = []
    for members in groups.values():
        gens = []
        for m in members:
            gens.extend(cells[m].rays)
        chamber = Cone.from_rays(gens, d)
        # merged cells must reassemble into a convex chamber: its interior
        # sample has to be Mori equivalent to every member's sample
        probe = variety.divisor_with_class(chamber.interior_point())
        for m in members:
            if not same_chamber(variety, probe, samples[m]):
                raise AssertionError(
                    "chamber merge produced a non-convex union; "
                    "Mori equivalence is inconsistent on the merged cells"
                )
        chambers.append(chamber)
    chambers.sort(key=lambda c: c.rays)

    rays = sorted({r for c in chambers for r in c.rays})
    return ChamberDecomposition(d, tuple(rays), tuple(chambers))


def same_chamber(variety, a, b):
    """Mori equivalence of two big divisors via the Minkowski-sum polytope."""
    pa = variety.moment_polytope(a)
    pb = variety.moment_polytope(b)
    if not pa.is_full_dimensional():
        raise NotBig("first divisor is not big")
    if not pb.is_full_dimensional():
        raise NotBig("second divisor is not big")
    s = pa.minkowski_sum(pb)
    return s.combinatorially_equivalent(pa) and s.combinatorially_equivalent(pb)


def modify(variety, a, seed):
    """A different Q-divisor in the same chamber as `a`, deterministically.

    Perturbs one randomly chosen coefficient by +-1 scaled down by powers of
    two (SplitMix64 stream from `seed`); rejection-samples until the chamber
    test passes, capped at 1000 attempts.
    """
    from .toric import as_divisor

    a = as_divisor(a)
    pa = variety.moment_polytope(a)
    if not pa.is_full_dimensional():
        raise NotBig("divisor is not big")
    rng = SplitMix64(seed)
    k = variety.n_rays
    for attempt in range(1000):
        i = rng.below(k)
        delta = Fraction(rng.sign(), 2 ** (attempt // 8))
        coeffs = list(a.coefficients)
        coeffs[i] += delta
        candidate = as_divisor(coeffs)
        if candidate == a:
            continue
        try:
            if same_chamber(variety, a, candidate):
                return candidate
        except NotBig:
            continue
    raise ExhaustedAttempts("modify gave up after 1000 attempts")


def _wall_counts(pa, pb):
    return pa.n_facets, pb.n_facets, pa.minkowski_sum(pb).n_facets


def is_wall_crossing(pa, pb):
    """Whether the chambers of two big divisors share a common wall."""
    if pa.combinatorially_equivalent(pb):
        raise SameChamber("polytopes are combinatorially equivalent")
    fa, fb, fs = _wall_counts(pa, pb)
    if fa == fb:
        return fs == fa + 1
    if abs(fa - fb) == 1:
        return fs == max(fa, fb)
    return False


def classify_wall(pa, pb):
    """flip / divisorial_contraction / divisorial_extraction by facet counts.

    The label depends only on the facet-count step, so chains of quotients
    get a classification even when the step is not an elementary wall
    crossing (`is_wall_crossing` is the elementary test).
    """
    if pa.combinatorially_equivalent(pb):
        raise SameChamber("polytopes are combinatorially equivalent")
    fa, fb = pa.n_facets, pb.n_facets
    if fa == fb:
        return "flip"
    return "divisorial_contraction" if fb < fa else "divisorial_extraction"


def chamber_report(variety):
    """Textual chamber decomposition: rays, chambers, adjacency, wall types."""
    dec = secondary_fan(variety)
    lines = ["chamber-report v1", f"class_space_dim: {dec.class_space_dim}"]
    lines.append("rays: " + "; ".join(",".join(str(x) for x in r) for r in dec.rays))
    samples = []
    for i, c in enumerate(dec.chambers):
        lines.append(
            f"chamber[{i}]: " + "; ".join(",".join(str(x) for x in r) for r in c.rays)
        )
        samples.append(variety.divisor_with_class(c.interior_point()))
    for i, j in sorted(dec.adjacency_pairs()):
        pa = variety.moment_polytope(samples[i])
        pb = variety.moment_polytope(samples[j])
        label = classify_wall(pa, pb)
        lines.append(f"wall: {i} {j} {label}")
    return "\n".join(lines) + "\n"
