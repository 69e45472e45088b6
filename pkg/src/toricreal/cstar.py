"""One-parameter subgroup actions on polarized toric varieties, read off the
moment polytope.

The acting subtorus is a primitive functional u on the character lattice;
an integer selects a coordinate subtorus, with the last coordinate as the
default (the choice made implicitly throughout the realization pipeline).
Weights are the values of u on vertices; fixed components are the maximal
faces on which u is constant; GIT quotients are slices, geometric quotients
the slices at interval midpoints.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfRange, SameChamber
from .exactlinalg import primitive_vector, vec_dot, vec_is_zero
from .toric import from_normal_fan


def action_functional(u, ambient_dim):
    """Normalize a coordinate index or vector to a primitive functional."""
    if u is None:
        u = ambient_dim - 1
    if isinstance(u, int):
        j = u % ambient_dim
        return tuple(1 if i == j else 0 for i in range(ambient_dim))
    u = tuple(int(x) for x in u)
    if len(u) != ambient_dim:
        raise ValueError("functional has wrong dimension")
    if vec_is_zero(u):
        raise ValueError("functional must be nonzero")
    if primitive_vector(u) != u:
        raise ValueError("functional must be primitive")
    return u


def weights(polytope, u=None):
    """Sorted distinct pairing values of the vertices against u."""
    uf = action_functional(u, polytope.ambient_dim)
    return tuple(sorted({vec_dot(v, uf) for v in polytope.vertices}))


def criticality(polytope, u=None):
    return len(weights(polytope, u)) - 1


def bandwidth(polytope, u=None):
    w = weights(polytope, u)
    return w[-1] - w[0]


def fixed_components(polytope, u=None):
    """Connected components of the fixed locus, grouped by weight.

    Returns a tuple of (weight, component_vertex_counts) with counts sorted
    descending.  Components are the connected unions of the maximal faces on
    which u is constant; vertices of the polytope partition among them.
    """
    uf = action_functional(u, polytope.ambient_dim)
    by_weight = {}
    for i, v in enumerate(polytope.vertices):
        by_weight.setdefault(vec_dot(v, uf), []).append(i)
    out = []
    for w in sorted(by_weight):
        idx = by_weight[w]
        # union-find over edges of the polytope joining equal-weight vertices
        parent = {i: i for i in idx}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                i, j = idx[a], idx[b]
                if polytope.is_edge(i, j):
                    parent[find(i)] = find(j)
        sizes = {}
        for i in idx:
            r = find(i)
            sizes[r] = sizes.get(r, 0) + 1
        out.append((w, tuple(sorted(sizes.values(), reverse=True))))
    return tuple(out)


def fixed_vertex_counts(polytope, u=None):
    """Per-weight vertex totals, the shape printed in action reports."""
    return tuple(sum(counts) for _, counts in fixed_components(polytope, u))


def pruning(polytope, u=None, a=None, b=None):
    """Moment polytope of the pruned variety: the slab a <= <m,u> <= b."""
    if a is None or b is None:
        raise ValueError("pruning needs both bounds")
    a, b = Fraction(a), Fraction(b)
    if a > b:
        raise ValueError("pruning needs a <= b")
    uf = action_functional(u, polytope.ambient_dim)
    return polytope.slab(uf, a, b)


def quotient(polytope, u=None, a=None):
    """GIT quotient at level a: the slice {<m,u> = a} in one lower dimension."""
    if a is None:
        raise ValueError("quotient needs a level")
    a = Fraction(a)
    w = weights(polytope, u)
    if a < w[0] or a > w[-1]:
        raise OutOfRange(f"level {a} outside weight interval [{w[0]}, {w[-1]}]")
    uf = action_functional(u, polytope.ambient_dim)
    return polytope.slab(uf, a, a).project_out(uf)


def geometric_quotients(polytope, u=None):
    """One quotient per open weight interval, evaluated at its midpoint."""
    w = weights(polytope, u)
    return tuple(
        quotient(polytope, u, Fraction(w[i] + w[i + 1], 2)) for i in range(len(w) - 1)
    )


@dataclass(frozen=True)
class ActionReport:
    criticality: int
    weights: tuple
    fixed_vertex_counts: tuple
    components: tuple  # (weight, per-component vertex counts)
    wall_classes: tuple  # strings, length = criticality - 1
    is_complete: bool
    is_q_factorial: bool
    is_smooth: bool
    is_fano: bool


def action_info(polytope, u=None):
    """Assemble the full report for the action of u on the polytope."""
    from .chambers import classify_wall

    w = weights(polytope, u)
    comps = fixed_components(polytope, u)
    quots = geometric_quotients(polytope, u)
    walls = []
    for i in range(len(quots) - 1):
        try:
            walls.append(classify_wall(quots[i], quots[i + 1]))
        except SameChamber:
            walls.append("isomorphism")
    variety = from_normal_fan(polytope)
    return ActionReport(
        criticality=len(w) - 1,
        weights=w,
        fixed_vertex_counts=tuple(sum(c) for _, c in comps),
        components=comps,
        wall_classes=tuple(walls),
        is_complete=variety.is_complete(),
        is_q_factorial=variety.is_simplicial(),
        is_smooth=variety.is_smooth(),
        is_fano=variety.is_fano(),
    )


def _fmt_number(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt_list(values):
    return "[" + ", ".join(_fmt_number(v) for v in values) + "]"


def render_action_report(report):
    """The report in its canonical textual shape (golden-file stable)."""
    lines = [
        f"The criticality of the action is {report.criticality}",
        f"The weights are {_fmt_list(report.weights)}",
        "The polytopes of fixed point components have "
        f"{_fmt_list(report.fixed_vertex_counts)} vertices",
    ]
    for i, wall in enumerate(report.wall_classes):
        label = wall.replace("_", " ")
        lines.append(f"The map GX_{i} --> GX_{i + 1} is a {label}")
    flags = [
        "is complete" if report.is_complete else "is not complete",
        "is Q-factorial" if report.is_q_factorial else "is not Q-factorial",
        "is smooth" if report.is_smooth else "is not smooth",
        "is Fano" if report.is_fano else "is not Fano",
    ]
    lines.append("The variety " + ", ".join(flags))
    return "\n".join(lines) + "\n"


def render_action_report_structured(report):
    """Machine-readable key-value rendering (versioned)."""
    lines = ["action-report v1"]
    lines.append(f"criticality: {report.criticality}")
    lines.append("weights: " + ",".join(_fmt_number(w) for w in report.weights))
    lines.append(
        "fixed_vertex_counts: " + ",".join(str(c) for c in report.fixed_vertex_counts)
    )
    for w, counts in report.components:
        lines.append(
            f"components[{_fmt_number(w)}]: " + ",".join(str(c) for c in counts)
        )
    for i, wall in enumerate(report.wall_classes):
        lines.append(f"wall[{i}]: {wall}")
    lines.append(
        "flags: complete={} q_factorial={} smooth={} fano={}".format(
            str(report.is_complete).lower(),
            str(report.is_q_factorial).lower(),
            str(report.is_smooth).lower(),
            str(report.is_fano).lower(),
        )
    )
    return "\n".join(lines) + "\n"
