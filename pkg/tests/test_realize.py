from fractions import Fraction

import pytest

from toricreal import (
    TorusDivisor,
    compute_m,
    fano_realization,
    geometric_quotients,
    geometric_realization,
    is_sharp,
    projective_bundle,
    quotient,
    render_action_report,
    secondary_fan,
    sharp_realization,
    unpruning,
    weights,
)
from toricreal.errors import NotBig, NotCartier, NotFano


A1 = [1, 0, 0, 0, 0, 2, 1]
B1 = [1, 2, 0, 0, 0, 0, 1]
A2 = [1, 0, 0, 0, 0, 6, 1]
B2 = [1, 6, 0, 0, 0, 0, 1]
H_FANO = [1, 0, 1, 0, -1, 0, 0]


def test_realization_run1_golden(batyrev33):
    G = geometric_realization(batyrev33, A1, B1, 1)
    assert G.scale == 12
    assert G.polytope.n_vertices == 18
    rep = G.report()
    assert rep.criticality == 3
    assert rep.weights == (0, 4, 9, 12)
    assert rep.fixed_vertex_counts == (8, 1, 1, 8)
    assert rep.wall_classes == ("flip", "flip")
    assert (rep.is_complete, rep.is_q_factorial, rep.is_smooth, rep.is_fano) == (
        True,
        True,
        False,
        True,
    )
    assert render_action_report(rep) == (
        "The criticality of the action is 3\n"
        "The weights are [0, 4, 9, 12]\n"
        "The polytopes of fixed point components have [8, 1, 1, 8] vertices\n"
        "The map GX_0 --> GX_1 is a flip\n"
        "The map GX_1 --> GX_2 is a flip\n"
        "The variety is complete, is Q-factorial, is not smooth, is Fano\n"
    )


def test_realization_run2_golden(batyrev33):
    G = geometric_realization(batyrev33, A2, B2, 1)
    assert G.polytope.n_vertices == 22
    rep = G.report()
    assert rep.criticality == 5
    assert rep.weights == (0, 2, 5, 7, 8, 12)
    assert rep.fixed_vertex_counts == (8, 2, 1, 1, 2, 8)
    assert rep.wall_classes == (
        "divisorial_extraction",
        "flip",
        "flip",
        "divisorial_contraction",
    )
    assert not rep.is_fano


def test_run2_steps_are_all_elementary(batyrev33):
    from toricreal import is_wall_crossing

    G = geometric_realization(batyrev33, A2, B2, 1)
    quots = G.quotients()
    for a, b in zip(quots, quots[1:]):
        assert is_wall_crossing(a, b)
    assert is_sharp(G)


def test_realization_weights_are_integral(batyrev33):
    for a, b, ell in ((A1, B1, 1), (A2, B2, 1)):
        G = geometric_realization(batyrev33, a, b, ell)
        assert all(Fraction(w).denominator == 1 for w in weights(G.polytope, G.u))


def test_realization_sink_source_match_input_models(batyrev33):
    G = geometric_realization(batyrev33, A1, B1, 1)
    w = weights(G.polytope, G.u)
    sink = quotient(G.polytope, G.u, w[0])
    source = quotient(G.polytope, G.u, w[-1])
    pa = batyrev33.moment_polytope(A1)
    pb = batyrev33.moment_polytope(B1)
    assert sink.combinatorially_equivalent(pa)
    assert source.combinatorially_equivalent(pb)
    quots = G.quotients()
    assert quots[0].combinatorially_equivalent(pa)
    assert quots[-1].combinatorially_equivalent(pb)


def test_realization_reversing_direction_swaps_wall_labels(batyrev33):
    G = geometric_realization(batyrev33, A2, B2, 1)
    rep = G.report()
    rev = geometric_realization(batyrev33, B2, A2, 1).report()
    # swapping A and B runs the same action backwards: mirrored weights,
    # reversed walls with contraction and extraction exchanged
    top = rep.weights[-1]
    assert rev.weights == tuple(sorted(top - w for w in rep.weights))
    swap = {
        "flip": "flip",
        "divisorial_contraction": "divisorial_extraction",
        "divisorial_extraction": "divisorial_contraction",
    }
    assert rev.wall_classes == tuple(swap[w] for w in reversed(rep.wall_classes))
    assert rev.fixed_vertex_counts == tuple(reversed(rep.fixed_vertex_counts))


def test_realization_requires_cartier_difference(batyrev33):
    with pytest.raises(NotCartier):
        geometric_realization(batyrev33, A1, B1, 3)


def test_realization_requires_nonempty_polytopes(p2):
    with pytest.raises(NotBig):
        geometric_realization(p2, [-1, 0, 0], [1, 0, 0], 1)


def test_realization_accepts_boundary_divisor(bundle011):
    # target on an extremal effective ray: source model is a segment
    G = geometric_realization(bundle011, [2, 2, 0, 0, 0, 0], [-2, 2, 0, 0, 0, 0], 4)
    rep = G.report()
    assert rep.weights == (0, 2, 4)
    assert rep.fixed_vertex_counts == (9, 1, 2)
    assert rep.wall_classes == ("flip",)
    assert rep.is_smooth and rep.is_fano


def test_bundle011_run1_golden(bundle011):
    G = geometric_realization(bundle011, [2, 2, 0, 0, 0, 0], [-1, 2, 0, 0, 0, 0], 3)
    rep = G.report()
    assert rep.criticality == 2
    assert rep.weights == (0, 2, 3)
    assert rep.fixed_vertex_counts == (9, 1, 8)
    assert rep.wall_classes == ("flip",)
    assert rep.is_smooth and not rep.is_fano
    assert is_sharp(G)


def test_is_sharp_criticality_one(p2):
    G = geometric_realization(p2, [1, 0, 0], [2, 0, 0], 1)
    assert G.criticality() == 1
    assert is_sharp(G)


def wall_route_divisors(batyrev33):
    """A, B whose class segment passes through a codimension-two stratum."""
    A = batyrev33.divisor_with_class((1, 3, 4))
    B = batyrev33.divisor_with_class((-1, -3, 4))
    return A, B


def test_is_sharp_false_through_codim_two(batyrev33):
    A, B = wall_route_divisors(batyrev33)
    G = geometric_realization(batyrev33, A, B, 1)
    assert G.criticality() == 2
    assert not is_sharp(G)


def test_sharp_realization_fixes_degenerate_route(batyrev33):
    A, B = wall_route_divisors(batyrev33)
    G = sharp_realization(batyrev33, A, B, seed=7)
    assert is_sharp(G)
    assert G.modifications >= 1


def test_sharp_realization_returns_sharp_input_unchanged(batyrev33):
    G = sharp_realization(batyrev33, A1, B1, seed=5)
    assert G.modifications == 0
    assert G.polytope == geometric_realization(batyrev33, A1, B1, 1).polytope


def test_sharp_realization_deterministic(batyrev33):
    A, B = wall_route_divisors(batyrev33)
    G1 = sharp_realization(batyrev33, A, B, seed=7)
    G2 = sharp_realization(batyrev33, A, B, seed=7)
    assert G1.polytope == G2.polytope
    assert render_action_report(G1.report()) == render_action_report(G2.report())


def test_unpruning_trivial_twist_is_p1_bundle(p2):
    E = TorusDivisor([1, 1, 1])
    G = unpruning(p2, E, E, 0, 0)
    W = projective_bundle(p2, [tuple(E), tuple(E)])
    assert G.polytope.normal_fan().same_fan(W.fan)
    base = p2.moment_polytope(E)
    assert G.polytope.n_vertices == 2 * base.n_vertices


def test_unpruning_contracts_zero_section_of_cubic_cone(p2):
    G = unpruning(p2, [0, 0, 0], [1, 1, 1], 0, 0)
    fan = G.polytope.normal_fan()
    W = projective_bundle(p2, [(0, 0, 0), (1, 1, 1)])
    assert set(fan.rays) == set(W.fan.rays) - {(0, 0, 1)}


def test_compute_m_trivial(p2):
    assert compute_m(p2, [0, 0, 0]) == 1


def test_compute_m_batyrev(batyrev33):
    m = compute_m(batyrev33, H_FANO)
    assert m == 4
    ones = batyrev33.anticanonical()
    for smaller in range(1, m):
        assert not batyrev33.is_ample(smaller * ones + TorusDivisor(H_FANO))


def test_compute_m_cap_exceeded(hirzebruch2):
    from toricreal.errors import NoSuchM

    # the anticanonical class is nef but never ample, so no multiple works
    with pytest.raises(NoSuchM):
        compute_m(hirzebruch2, [0, 0, 0, 0], cap=12)


def test_compute_m_prose_sign(batyrev33):
    code = compute_m(batyrev33, H_FANO)
    prose = compute_m(batyrev33, H_FANO, prose_sign=True)
    ones = batyrev33.anticanonical()
    assert batyrev33.is_ample(prose * ones - TorusDivisor(H_FANO))
    assert code >= 1 and prose >= 1


def test_fano_realization_golden(batyrev33):
    F = fano_realization(batyrev33, H_FANO)
    rep = F.report()
    assert rep.criticality == 4
    assert rep.weights == (-12, -1, 7, 9, 12)
    assert rep.fixed_vertex_counts == (12, 1, 2, 1, 8)
    assert rep.wall_classes == ("flip", "divisorial_contraction", "flip")
    assert (rep.is_complete, rep.is_q_factorial, rep.is_smooth, rep.is_fano) == (
        True,
        True,
        False,
        True,
    )


def test_fano_realization_requires_fano_base(hirzebruch2):
    with pytest.raises(NotFano):
        fano_realization(hirzebruch2, [0, 0, 0, 0])


def test_fano_realization_twists_inside_chambers(batyrev33):
    # the anticanonical twists by +-H land in the interiors of two divisorial
    # chambers, so both are big
    ones = batyrev33.anticanonical()
    H = TorusDivisor(H_FANO)
    assert batyrev33.is_big(ones - H)
    assert batyrev33.is_big(ones + H)
    dec = secondary_fan(batyrev33)
    minus = tuple(int(c) for c in batyrev33.divisor_class(ones - H))
    plus = tuple(int(c) for c in batyrev33.divisor_class(ones + H))
    cm, cp = dec.chamber_containing(minus), dec.chamber_containing(plus)
    assert cm is not None and cp is not None and cm != cp


def test_fano_realization_output_is_fano_whenever_preconditions_hold(batyrev33):
    F = fano_realization(batyrev33, H_FANO)
    assert F.report().is_fano
