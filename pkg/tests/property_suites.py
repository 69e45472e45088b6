"""Randomized property suites shared by the acceptance criteria.

Each suite runs `cases` independent seeded trials across dimensions 2-4 and
returns the number of trials executed.  Everything is deterministic: trial i
uses random.Random(base_seed + i).
"""

import random
from fractions import Fraction

from toricreal import (
    RationalPolytope,
    classify_wall,
    criticality,
    from_normal_fan,
    geometric_quotients,
    modify,
    pruning,
    same_chamber,
    weights,
)
from toricreal.errors import EmptyPolytope, SameChamber
from toricreal.exactlinalg import vec_dot

DIMS = (2, 3, 4)


def random_lattice_polytope(rng, dim, spread=3, max_points=None):
    max_points = max_points or (dim + 3)
    while True:
        pts = {
            tuple(rng.randint(-spread, spread) for _ in range(dim))
            for _ in range(rng.randint(dim + 1, max_points))
        }
        try:
            P = RationalPolytope.from_vertices(pts)
        except EmptyPolytope:
            continue
        if P.is_full_dimensional():
            return P


def ample_divisor_of(P):
    """The tight-offset divisor of P on the normal-fan variety (ample there)."""
    return tuple(b for _, b in P.halfspaces)


def suite_dual_roundtrip(cases, base_seed=1000):
    ran = 0
    for i in range(cases):
        rng = random.Random(base_seed + i)
        P = random_lattice_polytope(rng, DIMS[i % 3])
        Q = RationalPolytope.from_halfspaces(P.halfspaces, P.ambient_dim)
        assert Q.vertices == P.vertices
        assert Q == P
        ran += 1
    return ran


def suite_normal_fan_moment_roundtrip(cases, base_seed=2000):
    ran = 0
    for i in range(cases):
        rng = random.Random(base_seed + i)
        P = random_lattice_polytope(rng, DIMS[i % 3])
        X = from_normal_fan(P)
        D = ample_divisor_of(P)
        assert X.moment_polytope(D).normal_fan().same_fan(X.fan)
        ran += 1
    return ran


def suite_same_chamber_scaling(cases, base_seed=3000):
    ran = 0
    for i in range(cases):
        rng = random.Random(base_seed + i)
        P = random_lattice_polytope(rng, DIMS[i % 3])
        X = from_normal_fan(P)
        D = ample_divisor_of(P)
        q = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled = tuple(q * b for b in D)
        assert same_chamber(X, D, scaled)
        ran += 1
    return ran


def suite_pruning_composition(cases, base_seed=4000):
    ran = 0
    for i in range(cases):
        rng = random.Random(base_seed + i)
        dim = DIMS[i % 3]
        P = random_lattice_polytope(rng, dim)
        u = rng.randrange(dim)
        w = weights(P, u)
        lo, hi = w[0], w[-1]
        cuts = sorted(
            lo + (hi - lo) * Fraction(rng.randint(0, 8), 8) for _ in range(4)
        )
        a, b = cuts[0], cuts[2]
        a2, b2 = cuts[1], cuts[3]
        outer = pruning(P, u, a, b)
        try:
            twice = pruning(outer, u, a2, b2)
        except EmptyPolytope:
            with_raises = True
            try:
                pruning(P, u, max(a, a2), min(b, b2))
                with_raises = False
            except (EmptyPolytope, ValueError):
                pass
            assert with_raises
            ran += 1
            continue
        assert twice == pruning(P, u, max(a, a2), min(b, b2))
        ran += 1
    return ran


def suite_criticality_monotone(cases, base_seed=5000):
    ran = 0
    for i in range(cases):
        rng = random.Random(base_seed + i)
        dim = DIMS[i % 3]
        P = random_lattice_polytope(rng, dim)
        u = rng.randrange(dim)
        w = weights(P, u)
        r = criticality(P, u)
        a = w[0] + (w[-1] - w[0]) * Fraction(rng.randint(0, 4), 8)
        b = w[-1] - (w[-1] - w[0]) * Fraction(rng.randint(0, 3), 8)
        if a > b:
            a, b = b, a
        assert criticality(pruning(P, u, a, b), u) <= r
        ran += 1
    return ran


def suite_classify_wall_antisymmetry(cases, base_seed=6000):
    ran = 0
    swap = {
        "flip": "flip",
        "divisorial_contraction": "divisorial_extraction",
        "divisorial_extraction": "divisorial_contraction",
    }
    i = 0
    attempts = 0
    while ran < cases and attempts < cases * 10:
        attempts += 1
        rng = random.Random(base_seed + i)
        i += 1
        dim = DIMS[i % 3]
        P = random_lattice_polytope(rng, dim, spread=3, max_points=dim + 4)
        u = rng.randrange(dim)
        quots = geometric_quotients(P, u)
        for a, b in zip(quots, quots[1:]):
            if a.dim < 1 or b.dim < 1:
                continue
            try:
                forward = classify_wall(a, b)
            except SameChamber:
                continue
            assert classify_wall(b, a) == swap[forward]
            ran += 1
            if ran >= cases:
                break
    assert ran >= cases
    return ran


def suite_seeded_reports_identical(cases, base_seed=7000):
    from toricreal import Fan, ToricVariety

    p2 = ToricVariety(Fan([(1, 0), (0, 1), (-1, -1)], [{0, 1}, {0, 2}, {1, 2}]))
    ran = 0
    for i in range(cases):
        rng = random.Random(base_seed + i)
        D = tuple(rng.randint(1, 4) for _ in range(3))
        seed = rng.getrandbits(64)
        assert modify(p2, D, seed) == modify(p2, D, seed)
        ran += 1
    return ran


ALL_SUITES = (
    ("dual-description roundtrip", suite_dual_roundtrip),
    ("normal fan of ample moment polytope", suite_normal_fan_moment_roundtrip),
    ("same-chamber scaling invariance", suite_same_chamber_scaling),
    ("pruning composition law", suite_pruning_composition),
    ("criticality monotone under pruning", suite_criticality_monotone),
    ("classify_wall antisymmetry", suite_classify_wall_antisymmetry),
    ("seeded outputs byte-identical", suite_seeded_reports_identical),
)
