"""Textual, versioned file formats: fans, polytopes, primitive relations.

All numbers are exact fraction strings "p" or "p/q"; writers are
deterministic so golden files are byte-stable.
"""

import re
from fractions import Fraction

from .errors import ParseError
from .fan import Fan
from .polytope import RationalPolytope
from .toric import ToricVariety

FAN_HEADER = "fan v1"
POLYTOPE_HEADER = "polytope v1"
RELATIONS_HEADER = "primitive-relations v1"


def format_fraction(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(text):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad fraction {text!r}") from exc


def parse_divisor_literal(text, expected_len=None):
    """Comma-separated fractions ordered by ray index."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty divisor literal")
    coeffs = tuple(parse_fraction(p) for p in parts)
    if expected_len is not None and len(coeffs) != expected_len:
        raise ParseError(
            f"divisor has {len(coeffs)} coefficients, expected {expected_len}"
        )
    return coeffs


def parse_vector_literal(text):
    parts = [p for p in text.split(",") if p.strip()]
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad integer vector {text!r}") from exc


# -- fan files ----------------------------------------------------------------


def write_fan(fan, path=None):
    lines = [FAN_HEADER, f"dim {fan.lattice_dim}", f"rays {len(fan.rays)}"]
    for r in fan.rays:
        lines.append(" ".join(str(x) for x in r))
    lines.append(f"cones {len(fan.max_cones)}")
    for c in fan.max_cones:
        lines.append(" ".join(str(i) for i in sorted(c)))
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def _tokens(text, header, what):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or lines[0] != header:
        raise ParseError(f"{what}: expected header {header!r}")
    return lines[1:]


def read_fan(text):
    lines = _tokens(text, FAN_HEADER, "fan file")
    try:
        it = iter(lines)
        dim_line = next(it).split()
        if dim_line[0] != "dim":
            raise ParseError("fan file: expected 'dim N'")
        ray_line = next(it).split()
        if ray_line[0] != "rays":
            raise ParseError("fan file: expected 'rays N'")
        n_rays = int(ray_line[1])
        rays = [tuple(int(x) for x in next(it).split()) for _ in range(n_rays)]
        cone_line = next(it).split()
        if cone_line[0] != "cones":
            raise ParseError("fan file: expected 'cones N'")
        n_cones = int(cone_line[1])
        cones = [frozenset(int(x) for x in next(it).split()) for _ in range(n_cones)]
    except (StopIteration, ValueError, IndexError) as exc:
        raise ParseError(f"fan file: {exc}") from exc
    try:
        return Fan(rays, cones)
    except ValueError as exc:
        raise ParseError(f"fan file: {exc}") from exc


def read_fan_file(path):
    with open(path) as fh:
        return read_fan(fh.read())


def read_variety_file(path):
    return ToricVariety(read_fan_file(path))


# -- polytope files -----------------------------------------------------------


def write_polytope(poly, path=None):
    lines = [POLYTOPE_HEADER, f"ambient {poly.ambient_dim}"]
    lines.append(f"vertices {poly.n_vertices}")
    for v in poly.vertices:
        lines.append(" ".join(format_fraction(x) for x in v))
    lines.append(f"halfspaces {poly.n_facets}")
    for n, b in poly.halfspaces:
        lines.append(" ".join(str(x) for x in n) + " | " + format_fraction(b))
    lines.append(f"equations {len(poly.equations)}")
    for n, b in poly.equations:
        lines.append(" ".join(str(x) for x in n) + " | " + format_fraction(b))
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def read_polytope(text):
    lines = _tokens(text, POLYTOPE_HEADER, "polytope file")
    try:
        it = iter(lines)
        ambient = int(next(it).split()[1])
        n_verts = int(next(it).split()[1])
        verts = [
            tuple(parse_fraction(x) for x in next(it).split()) for _ in range(n_verts)
        ]
    except (StopIteration, ValueError, IndexError) as exc:
        raise ParseError(f"polytope file: {exc}") from exc
    if any(len(v) != ambient for v in verts):
        raise ParseError("polytope file: vertex of wrong dimension")
    # halfspaces/equations are re-derived; the stored ones are for readers
    poly = RationalPolytope.from_vertices(verts)
    return poly


def read_polytope_file(path):
    with open(path) as fh:
        return read_polytope(fh.read())


# -- primitive relations --------------------------------------------------------

_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*\*?\s*v(\d+)")


def parse_relations(text):
    """Relations like "v2 + v3 + v4 = v1" over symbols v1..vk.

    Returns a tuple of coefficient vectors with the right side moved left.
    """
    lines = _tokens(text, RELATIONS_HEADER, "relations file")
    raw = []
    max_sym = 0
    for ln in lines:
        if "=" not in ln:
            raise ParseError(f"relation {ln!r} has no '='")
        lhs, rhs = ln.split("=", 1)
        terms = {}

        def add_side(side, sign):
            nonlocal max_sym
            stripped = side.strip()
            if stripped == "0":
                return
            consumed = 0
            for match in _TERM_RE.finditer(stripped):
                coeff = int(match.group(2) or 1)
                if match.group(1) == "-":
                    coeff = -coeff
                sym = int(match.group(3))
                if sym < 1:
                    raise ParseError(f"bad symbol v{sym}")
                terms[sym] = terms.get(sym, 0) + sign * coeff
                max_sym = max(max_sym, sym)
                consumed += 1
            leftover = _TERM_RE.sub("", stripped).replace("+", "").replace("-", "").strip()
            if leftover or consumed == 0:
                raise ParseError(f"cannot parse relation side {side!r}")

        add_side(lhs, 1)
        add_side(rhs, -1)
        raw.append(terms)
    if max_sym == 0:
        raise ParseError("no symbols found")
    out = []
    for terms in raw:
        row = [0] * max_sym
        for sym, coeff in terms.items():
            row[sym - 1] = coeff
        out.append(tuple(row))
    return tuple(out)


def read_relations_file(path):
    with open(path) as fh:
        return parse_relations(fh.read())


def write_relations(relations, path=None):
    lines = [RELATIONS_HEADER]
    for row in relations:
        lhs = [(i + 1, c) for i, c in enumerate(row) if c > 0]
        rhs = [(i + 1, -c) for i, c in enumerate(row) if c < 0]

        def side(terms):
            if not terms:
                return "0"
            return " + ".join(
                (f"{c} v{i}" if c != 1 else f"v{i}") for i, c in terms
            )

        lines.append(f"{side(lhs)} = {side(rhs)}")
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


# -- OFF export -----------------------------------------------------------------


def write_off(poly, path=None):
    """OFF file for a 3-dimensional polytope (floats at the format boundary)."""
    if poly.ambient_dim != 3 or not poly.is_full_dimensional():
        raise ValueError("OFF export needs a full-dimensional 3-polytope")
    verts = poly.vertices
    faces = []
    for i in range(poly.n_facets):
        members = [j for j in range(poly.n_vertices) if poly.incidence[i][j]]
        faces.append(_order_facet_cycle(poly, i, members))
    lines = ["OFF", f"{len(verts)} {len(faces)} 0"]
    for v in verts:
        lines.append(" ".join(repr(float(x)) for x in v))
    for face in faces:
        lines.append(str(len(face)) + " " + " ".join(str(j) for j in face))
    text = "\n".join(lines) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def _order_facet_cycle(poly, facet_index, members):
    """Order a facet's vertices along its edge cycle."""
    if len(members) <= 3:
        return members
    adjacency = {m: [] for m in members}
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            i, j = members[a], members[b]
            if poly.is_edge(i, j):
                adjacency[i].append(j)
                adjacency[j].append(i)
    cycle = [members[0]]
    prev = None
    while len(cycle) < len(members):
        nxt = [x for x in adjacency[cycle[-1]] if x != prev]
        prev = cycle[-1]
        cycle.append(nxt[0])
    return cycle
