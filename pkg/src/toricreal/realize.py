"""Geometric realizations of toric birational maps.

Given big divisors A, B on a Q-factorial projective toric Y, the realization
is the projectivization of the interpolating section ring: concretely, the
moment polytope over the P^1-bundle W = P(O + O(H)) with H = (B-A)/ell of
the divisor ell*L + pullback(A), scaled to a lattice polytope.  Slicing that
polytope at height t gives the moment polytope of A + t*H, so the induced
last-coordinate subtorus action has the models of A and B as sink and
source and factors the birational map between them through its geometric
quotients.
"""

from dataclasses import dataclass
from fractions import Fraction

from .chambers import is_wall_crossing, modify
from .cstar import (
    action_functional,
    action_info,
    criticality,
    geometric_quotients,
    weights,
)
from .errors import EmptyPolytope, ExhaustedAttempts, NoSuchM, NotBig, NotCartier, NotFano
from .exactlinalg import lcm
from .toric import as_divisor, projective_bundle


@dataclass(frozen=True)
class Realization:
    """A realization polytope with its action data and build provenance."""

    polytope: object
    u: tuple  # action functional (last coordinate)
    scale: int
    bundle_rays: tuple
    base_rays: tuple
    inputs: tuple  # ((name, value), ...) provenance, stringified
    modifications: int = 0

    def report(self):
        return action_info(self.polytope, self.u)

    def quotients(self):
        return geometric_quotients(self.polytope, self.u)

    def criticality(self):
        return criticality(self.polytope, self.u)


def _realization_scale(polytope, u):
    """Least integer clearing the denominators of the action weights."""
    m = 1
    for w in weights(polytope, u):
        m = lcm(m, Fraction(w).denominator)
    return m


def _bundle_divisor(w_variety, base_variety, rows, base_coeffs, minus_coeff, plus_coeff):
    """Coefficient vector on the bundle: base lifts carry `base_coeffs`, the
    two fiber rays carry the given values."""
    n = base_variety.fan.lattice_dim
    t = len(rows)
    lifted = {}
    for i, r in enumerate(base_variety.fan.rays):
        tw = tuple(
            int(Fraction(rows[j][i]) - Fraction(rows[0][i])) for j in range(1, t)
        )
        lifted[r + tw] = Fraction(base_coeffs[i])
    minus = (0,) * n + (-1,)
    plus = (0,) * n + (1,)
    coeffs = []
    for ray in w_variety.fan.rays:
        if ray == minus:
            coeffs.append(Fraction(minus_coeff))
        elif ray == plus:
            coeffs.append(Fraction(plus_coeff))
        else:
            coeffs.append(lifted[ray])
    return as_divisor(coeffs)


def geometric_realization(Y, A, B, ell=1):
    """Realization of the map between the models of A and B on Y.

    H = (B-A)/ell must be Cartier; A and B must have nonempty moment
    polytopes.  Boundary-chamber inputs (non-big but effective) are accepted.
    """
    A, B = Y._check_divisor(A), Y._check_divisor(B)
    ell = int(ell)
    if ell <= 0:
        raise ValueError("ell must be a positive integer")
    H = (B - A) / ell
    if not Y.is_cartier(H):
        raise NotCartier(f"(B - A)/{ell} is not Cartier")
    try:
        Y.moment_polytope(A)
    except EmptyPolytope as exc:
        raise NotBig("A has an empty moment polytope") from exc
    try:
        Y.moment_polytope(B)
    except EmptyPolytope as exc:
        raise NotBig("B has an empty moment polytope") from exc

    rows = ((0,) * Y.n_rays, tuple(H.coefficients))
    W = projective_bundle(Y, rows)
    D = _bundle_divisor(W, Y, rows, A.coefficients, minus_coeff=ell, plus_coeff=0)
    P = W.moment_polytope(D)
    u = action_functional(None, P.ambient_dim)
    m = _realization_scale(P, u)
    provenance = (
        ("A", _fmt_div(A)),
        ("B", _fmt_div(B)),
        ("ell", str(ell)),
        ("m", str(m)),
    )
    return Realization(
        polytope=P.scale(m),
        u=u,
        scale=m,
        bundle_rays=W.fan.rays,
        base_rays=Y.fan.rays,
        inputs=provenance,
    )


def unpruning(Y, E, F, a, b):
    """Realization polytope of the unpruning divisor L + a*D1 + b*D2 on
    P(O(E) + O(F)), where D1, D2 are the two sections and L = pullback(E) + D1
    is tautological."""
    E, F = Y._check_divisor(E), Y._check_divisor(F)
    a, b = int(a), int(b)
    if a < 0 or b < 0:
        raise ValueError("unpruning needs nonnegative integers a, b")
    if not Y.is_cartier(F - E):
        raise NotCartier("F - E is not Cartier")
    rows = (tuple(E.coefficients), tuple(F.coefficients))
    W = projective_bundle(Y, rows)
    D = _bundle_divisor(
        W, Y, rows, E.coefficients, minus_coeff=1 + a, plus_coeff=b
    )
    P = W.moment_polytope(D)
    u = action_functional(None, P.ambient_dim)
    m = _realization_scale(P, u)
    provenance = (
        ("E", _fmt_div(E)),
        ("F", _fmt_div(F)),
        ("a", str(a)),
        ("b", str(b)),
        ("m", str(m)),
    )
    return Realization(
        polytope=P.scale(m),
        u=u,
        scale=m,
        bundle_rays=W.fan.rays,
        base_rays=Y.fan.rays,
        inputs=provenance,
    )


def is_sharp(realization):
    """Every consecutive pair of geometric quotients is an elementary wall
    crossing (criticality <= 1 is vacuously sharp)."""
    if realization.criticality() <= 1:
        return True
    quots = realization.quotients()
    return all(
        is_wall_crossing(quots[i], quots[i + 1]) for i in range(len(quots) - 1)
    )


def sharp_realization(Y, A, B, seed, ell=1, max_rounds=64):
    """Adjust A inside its chamber (seeded) until the realization is sharp."""
    A = Y._check_divisor(A)
    current = A
    rng_seed = int(seed)
    for round_no in range(max_rounds):
        G = geometric_realization(Y, current, B, ell)
        if is_sharp(G):
            return Realization(
                polytope=G.polytope,
                u=G.u,
                scale=G.scale,
                bundle_rays=G.bundle_rays,
                base_rays=G.base_rays,
                inputs=G.inputs + (("seed", str(seed)),),
                modifications=round_no,
            )
        current = modify(Y, current, rng_seed + round_no)
    raise ExhaustedAttempts(f"no sharp realization after {max_rounds} adjustments")


def compute_m(Y, H, prose_sign=False, cap=4096):
    """Least m >= 1 with m*(anticanonical) + H ample (or - H with
    `prose_sign`)."""
    H = Y._check_divisor(H)
    signed = -H if prose_sign else H
    ones = Y.anticanonical()
    for m in range(1, cap + 1):
        if Y.is_ample(m * ones + signed):
            return m
    raise NoSuchM(f"no m <= {cap} makes the twisted anticanonical divisor ample")


def fano_realization(Y, H, prose_sign=False):
    """Anticanonical-model realization: unpruning of P(O(mK'-H) + O(mK'))
    with K' the anticanonical coefficient vector and m from `compute_m`."""
    H = Y._check_divisor(H)
    if not Y.is_fano():
        raise NotFano("base variety is not Fano")
    ones = Y.anticanonical()
    for D in (ones - H, ones + H):
        if not Y.is_big(D):
            raise NotBig("anticanonical twist by H is not big")
    m = compute_m(Y, H, prose_sign=prose_sign)
    G = unpruning(Y, m * ones - H, m * ones, m - 1, m)
    provenance = (("H", _fmt_div(H)), ("m_scan", str(m))) + G.inputs
    return Realization(
        polytope=G.polytope,
        u=G.u,
        scale=G.scale,
        bundle_rays=G.bundle_rays,
        base_rays=G.base_rays,
        inputs=provenance,
    )


def _fmt_div(d):
    out = []
    for c in as_divisor(d).coefficients:
        out.append(str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}")
    return ",".join(out)
