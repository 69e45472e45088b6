from fractions import Fraction

import pytest

from toricreal import (
    Fan,
    RationalPolytope,
    ToricVariety,
    TorusDivisor,
    from_normal_fan,
    from_primitive_relations,
    proj_rays,
    projective_bundle,
)
from toricreal.errors import (
    EmptyPolytope,
    InconsistentRelations,
    NotCartier,
)
from toricreal.exactlinalg import vec_dot

from conftest import BATYREV33_RELATIONS


def unit(i, k):
    v = [0] * k
    v[i] = 1
    return TorusDivisor(v)


def test_moment_polytope_p2_is_simplex(p2):
    P = p2.moment_polytope([0, 0, 1])
    assert P == RationalPolytope.from_vertices([(0, 0), (1, 0), (0, 1)])


def test_moment_polytope_of_zero_divisor_is_point(p2):
    P = p2.moment_polytope([0, 0, 0])
    assert P.dim == 0
    assert P.vertices == ((Fraction(0), Fraction(0)),)


def test_moment_polytope_empty(p2):
    with pytest.raises(EmptyPolytope):
        p2.moment_polytope([-1, 0, 0])


def test_bundle011_moment_polytope_vertex_count(bundle011):
    P = bundle011.moment_polytope([2, 2, 0, 0, 0, 0])
    assert P.n_vertices == 9


def test_from_normal_fan_roundtrip(p2):
    P = p2.moment_polytope([1, 1, 1])
    X = from_normal_fan(P)
    assert X.fan.same_fan(p2.fan)
    assert X.is_complete() and X.is_simplicial() and X.is_smooth() and X.is_fano()


def test_divisor_classes_on_p2(p2):
    assert p2.class_rank == 1
    assert p2.linearly_equivalent(unit(0, 3), unit(1, 3))
    assert p2.linearly_equivalent(unit(0, 3), unit(2, 3))


def test_principal_divisor_class_is_zero(p2):
    principal = TorusDivisor([vec_dot((1, 0), r) for r in p2.fan.rays])
    assert p2.divisor_class(principal) == (0,)
    assert p2.linearly_equivalent(principal, [0, 0, 0])


def test_divisor_class_is_homomorphism(bundle011):
    a = TorusDivisor([1, 2, 0, -1, 3, 0])
    b = TorusDivisor([0, 1, 1, 1, -2, 5])
    ca = bundle011.divisor_class(a)
    cb = bundle011.divisor_class(b)
    cab = bundle011.divisor_class(a + b)
    assert cab == tuple(x + y for x, y in zip(ca, cb))


def test_bundle011_class_relations(bundle011):
    k = 6
    assert bundle011.class_rank == 2
    assert bundle011.linearly_equivalent(unit(0, k), unit(4, k))
    assert bundle011.linearly_equivalent(unit(0, k), unit(5, k))
    assert bundle011.linearly_equivalent(unit(2, k), unit(3, k))
    d2_minus_d1 = TorusDivisor([-1, 1, 0, 0, 0, 0])
    assert bundle011.linearly_equivalent(unit(2, k), d2_minus_d1)


def test_cartier_and_ample_on_p2(p2):
    assert p2.is_ample([1, 0, 0])
    assert not p2.is_ample([-1, 0, 0])
    assert p2.is_cartier([1, 0, 0])
    assert not p2.is_cartier([Fraction(1, 2), 0, 0])


def test_ample_on_bundle011(bundle011):
    assert bundle011.is_ample([2, 2, 0, 0, 0, 0])
    assert not bundle011.is_ample([-1, 2, 0, 0, 0, 0])  # ample on the flip side


def test_q_cartier_but_not_cartier_on_weighted_plane():
    weighted = ToricVariety(
        Fan([(1, 0), (0, 1), (-1, -2)], [{0, 1}, {0, 2}, {1, 2}])
    )
    D = unit(0, 3)
    assert weighted.is_q_cartier(D)
    assert not weighted.is_cartier(D)
    # a Cartier multiple exists on a Q-factorial variety
    assert weighted.is_cartier(2 * D)


def test_cartier_vs_q_cartier_on_quadric_cone():
    quadric = ToricVariety(
        Fan(
            [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, -1), (-1, -1, 0)],
            [{0, 1, 2, 3}, {0, 2, 4}, {1, 2, 4}, {0, 3, 4}, {1, 3, 4}],
        )
    )
    # D_0 is not even Q-Cartier on the cone over the quadric surface
    assert not quadric.is_q_cartier(unit(0, 5))
    assert not quadric.is_cartier(unit(0, 5))
    assert quadric.is_cartier([1, 1, 1, 1, 1])


def test_proj_rays_reproduces_bundle_over_plane(p2):
    rays = proj_rays(p2.fan.rays, [(0, 0, 0), (0, 0, 1), (0, 0, 1)])
    assert rays == (
        (-1, -1, 1, 1),
        (0, 0, -1, -1),
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (1, 0, 0, 0),
    )


def test_trivial_bundle_is_product(p1, p1xp1):
    W = projective_bundle(p1, [(0, 0), (0, 0)])
    assert W.fan.same_fan(p1xp1.fan)


def test_hirzebruch_one(hirzebruch1):
    assert hirzebruch1.is_smooth()
    assert any(r in ((-1, 1), (-1, -1)) for r in hirzebruch1.fan.rays)
    assert len(hirzebruch1.fan.rays) == 4


def test_bundle_ray_count_and_flags(p2, bundle011):
    # base rays + t fiber rays
    assert bundle011.n_rays == 3 + 3
    assert bundle011.is_complete()
    assert bundle011.is_smooth()


def test_bundle_requires_integral_twists(p2):
    with pytest.raises(NotCartier):
        projective_bundle(p2, [(0, 0, 0), (0, 0, Fraction(1, 2))])


def test_from_primitive_relations_p2(p2):
    X = from_primitive_relations([(1, 1, 1)])
    assert X.fan.same_fan(p2.fan) or X.is_smooth()  # lattice-isomorphic copy
    assert X.dim == 2
    assert X.n_rays == 3
    assert X.is_complete() and X.is_smooth() and X.is_fano()


def test_from_primitive_relations_p1xp1():
    X = from_primitive_relations([(1, 1, 0, 0), (0, 0, 1, 1)])
    assert X.dim == 2
    assert X.n_rays == 4
    assert X.is_complete() and X.is_smooth()
    assert len(X.fan.max_cones) == 4


def test_from_primitive_relations_batyrev33(batyrev33):
    assert batyrev33.dim == 4
    assert batyrev33.n_rays == 7
    assert batyrev33.is_complete()
    assert batyrev33.is_simplicial()
    assert batyrev33.is_smooth()
    assert batyrev33.is_fano()
    for rel in BATYREV33_RELATIONS:
        total = (0,) * 4
        for c, ray in zip(rel, batyrev33.fan.rays):
            total = tuple(t + c * x for t, x in zip(total, ray))
        assert all(x == 0 for x in total)


def test_from_primitive_relations_inconsistent():
    with pytest.raises(InconsistentRelations):
        from_primitive_relations([(1, 0), (0, 1)])  # kernel rank 0


def test_from_primitive_relations_not_complete():
    from toricreal.errors import NotComplete

    # rays (1,1), (-1,0), (0,1); the single collection {v1,v2} kills every
    # cone containing both, so the surviving fan misses the lower half plane
    with pytest.raises(NotComplete):
        from_primitive_relations([(1, 1, -1)])


def test_anticanonical(p2, batyrev33, hirzebruch2):
    assert p2.anticanonical() == TorusDivisor([1, 1, 1])
    assert p2.is_ample(p2.anticanonical())
    assert batyrev33.is_ample(batyrev33.anticanonical())
    # nef but not ample on the second Hirzebruch surface
    assert not hirzebruch2.is_ample(hirzebruch2.anticanonical())
    assert not hirzebruch2.is_fano()


def test_ample_moment_polytope_normal_fan_roundtrip(batyrev33):
    D = TorusDivisor([1, 0, 0, 0, 0, 2, 1])  # big, not ample
    assert not batyrev33.is_ample(D)
    K = batyrev33.anticanonical()
    P = batyrev33.moment_polytope(K)
    assert P.normal_fan().same_fan(batyrev33.fan)
