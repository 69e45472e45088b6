"""Incremental double description method over exact rationals.

The single primitive here is `dual_description`: given inequality normals
a_1..a_k it produces the extreme rays and the lineality space of the cone
{x : <a_i, x> >= 0}.  Facet enumeration of a cone spanned by generators is
the same computation run on the polar side.  Rays are kept as primitive
integer vectors and tight sets as bitmasks, so the whole pipeline stays in
integer arithmetic.

Adjacency of rays is decided combinatorially (two rays combine only if no
third ray is tight on every inequality tight on both), which is sound as
long as the maintained description is minimal -- an invariant of the
incremental insertion.
"""

from .exactlinalg import (
    identity_matrix,
    primitive_vector,
    rational_rref,
    vec_dot,
    vec_is_zero,
    vec_scale,
    vec_sub,
)


def _normalize_ineq(a):
    if vec_is_zero(a):
        return None
    return primitive_vector(a)


def dual_description(ineqs, dim):
    """Extreme rays and lineality of {x in Q^dim : <a, x> >= 0 for a in ineqs}.

    Returns (rays, lineality) as sorted tuples of primitive integer vectors.
    The rays are extreme modulo the lineality space.
    """
    rays = []  # [vector, tight bitmask]
    lineality = [tuple(row) for row in identity_matrix(dim)]
    processed_mask = 0

    for idx, raw in enumerate(ineqs):
        bit = 1 << idx
        a = _normalize_ineq(raw)
        if a is None:
            for entry in rays:
                entry[1] |= bit
            processed_mask |= bit
            continue

        pivot = None
        for i, l in enumerate(lineality):
            if vec_dot(a, l) != 0:
                pivot = i
                break

        if pivot is not None:
            piv = lineality[pivot]
            if vec_dot(a, piv) < 0:
                piv = tuple(-x for x in piv)
            dp = vec_dot(a, piv)
            new_lin = []
            for i, l in enumerate(lineality):
                if i == pivot:
                    continue
                dl = vec_dot(a, l)
                l2 = vec_sub(vec_scale(dp, l), vec_scale(dl, piv))
                new_lin.append(primitive_vector(l2))
            new_rays = []
            for v, mask in rays:
                dv = vec_dot(a, v)
                v2 = vec_sub(vec_scale(dp, v), vec_scale(dv, piv))
                if vec_is_zero(v2):
                    continue
                new_rays.append([primitive_vector(v2), mask | bit])
            # the surviving half of the old lineality direction; it is tight
            # on every previously processed inequality
            new_rays.append([piv, processed_mask])
            lineality = new_lin
            rays = new_rays
            processed_mask |= bit
            continue

        pos, zero, neg = [], [], []
        for v, mask in rays:
            d = vec_dot(a, v)
            if d > 0:
                pos.append([v, mask, d])
            elif d == 0:
                zero.append([v, mask | bit])
            else:
                neg.append([v, mask, d])

        if not neg:
            rays = [[v, m] for v, m, _ in pos] + zero
            processed_mask |= bit
            continue

        # global positions: pos block, then zero block, then neg block
        all_masks = (
            [mask for _, mask, _ in pos]
            + [m for _, m in zero]
            + [mask for _, mask, _ in neg]
        )
        neg_offset = len(pos) + len(zero)
        combined = []
        for ip, (vp, mp, dpos) in enumerate(pos):
            for jn, (vn, mn, dneg) in enumerate(neg):
                common = mp & mn
                adjacent = True
                for k, m3 in enumerate(all_masks):
                    if k == ip or k == neg_offset + jn:
                        continue
                    if m3 & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                v_new = vec_sub(vec_scale(dpos, vn), vec_scale(dneg, vp))
                combined.append([primitive_vector(v_new), common | bit])
        rays = [[v, m] for v, m, _ in pos] + zero + combined
        processed_mask |= bit

    ray_vectors = sorted({tuple(v) for v, _ in rays})
    lin_vectors = sorted(tuple(l) for l in lineality)
    return tuple(ray_vectors), tuple(lin_vectors)


def reduce_modulo_span(vector, span_rows):
    """Canonical representative of vector modulo the rational row span."""
    if not span_rows:
        return tuple(vector)
    rref, pivots = rational_rref(span_rows)
    v = [x for x in vector]
    from fractions import Fraction

    v = [Fraction(x) for x in v]
    for row, piv in zip(rref, pivots):
        c = v[piv]
        if c != 0:
            v = [a - c * b for a, b in zip(v, row)]
    return tuple(v)


def facets_from_generators(generators, dim):
    """H-description of cone(generators).

    Returns (inequalities, equations): the equations cut out the linear span
    of the cone, the inequalities are the facet normals reduced canonically
    modulo that span and primitivized.  Both sorted.
    """
    rays, lineality = dual_description(generators, dim)
    equations = tuple(lineality)
    ineqs = []
    for r in rays:
        red = reduce_modulo_span(r, equations)
        if vec_is_zero(red):
            continue
        ineqs.append(primitive_vector(red))
    return tuple(sorted(set(ineqs))), equations
