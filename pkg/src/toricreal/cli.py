"""Command-line front end.

Thin adapters over the library: load fans/divisors/polytopes, run one
operation, write reports and polytope files.  Exit codes: 0 success,
2 parse error, 3 precondition (domain) error, 4 internal error.
"""

import functools
import os
import sys

import click

from . import chambers as chambers_mod
from . import cstar, realize
from .errors import DomainError, ParseError
from .figures import render_polytope, render_quotient_figures
from .formats import (
    parse_divisor_literal,
    parse_vector_literal,
    read_polytope_file,
    read_relations_file,
    read_variety_file,
    write_fan,
    write_off,
    write_polytope,
)
from .toric import ToricVariety, from_primitive_relations, projective_bundle

EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


def _adapter(fn):
    @functools.wraps(fn)
    def wrapped(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except (ParseError, click.ClickException) as exc:
            click.echo(f"parse error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except (DomainError, ValueError) as exc:
            click.echo(f"precondition error: {exc}", err=True)
            sys.exit(EXIT_PRECONDITION)
        except OSError as exc:
            click.echo(f"io error: {exc}", err=True)
            sys.exit(EXIT_PARSE)
        except Exception as exc:  # pragma: no cover - defensive
            click.echo(f"internal error: {exc!r}", err=True)
            sys.exit(EXIT_INTERNAL)

    return wrapped


@click.group()
def main():
    """Exact toric geometry: moment polytopes, chambers, C*-action reports."""


def _load_variety(fan_path):
    return read_variety_file(fan_path)


def _divisor(variety, literal, name):
    try:
        return variety._check_divisor(parse_divisor_literal(literal, variety.n_rays))
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(f"divisor {name}: {exc}") from exc


def _functional_option(functional, coordinate, ambient):
    if functional is not None:
        return cstar.action_functional(parse_vector_literal(functional), ambient)
    if coordinate is not None:
        return cstar.action_functional(int(coordinate), ambient)
    return cstar.action_functional(None, ambient)


def _emit_report(report, fmt):
    if fmt == "text":
        click.echo(cstar.render_action_report(report), nl=False)
    else:
        click.echo(cstar.render_action_report_structured(report), nl=False)


def _write_figures(polytopes, directory, prefix):
    os.makedirs(directory, exist_ok=True)
    written = render_quotient_figures(polytopes, directory, prefix=prefix)
    for p in written:
        click.echo(f"wrote {p}")


def _report_realization(G, report_fmt, out, figures):
    rep = G.report()
    for key, value in G.inputs:
        click.echo(f"input {key}: {value}")
    click.echo(f"scale: {G.scale}")
    click.echo(f"modifications: {G.modifications}")
    _emit_report(rep, report_fmt)
    if out:
        write_polytope(G.polytope, out)
        click.echo(f"wrote {out}")
    if figures:
        polys = [q for q in G.quotients()]
        if G.polytope.ambient_dim <= 3:
            polys = [G.polytope] + polys
        _write_figures(polys, figures, "quotient")


_report_option = click.option(
    "--report", "report_fmt", type=click.Choice(["text", "structured"]), default="text"
)
_figures_option = click.option(
    "--figures", type=click.Path(file_okay=False), default=None,
    help="Directory for PNG renders of the <=3-dimensional polytopes involved.",
)


@main.command()
@click.option("--fan", "fan_path", required=True, type=click.Path(exists=True))
@click.option("--divisor", "divisor_literal", default=None)
@_adapter
def describe(fan_path, divisor_literal):
    """Flags of a toric variety (and of one divisor, if given)."""
    variety = _load_variety(fan_path)
    complete = variety.is_complete()
    click.echo(f"lattice_dim: {variety.dim}")
    click.echo(f"rays: {variety.n_rays}")
    click.echo(f"max_cones: {len(variety.fan.max_cones)}")
    click.echo(f"complete: {str(complete).lower()}")
    click.echo(f"q_factorial: {str(variety.is_simplicial()).lower()}")
    click.echo(f"smooth: {str(variety.is_smooth()).lower()}")
    click.echo(f"fano: {str(variety.is_fano()).lower() if complete else 'n/a'}")
    click.echo(f"class_rank: {variety.class_rank}")
    torsion = variety.torsion_invariants()
    click.echo(f"class_torsion: {','.join(str(t) for t in torsion) if torsion else 'none'}")
    if divisor_literal is not None:
        D = _divisor(variety, divisor_literal, "divisor")
        click.echo(f"divisor_class: {','.join(str(c) for c in variety.divisor_class(D))}")
        click.echo(f"cartier: {str(variety.is_cartier(D)).lower()}")
        click.echo(f"q_cartier: {str(variety.is_q_cartier(D)).lower()}")
        if complete:
            click.echo(f"ample: {str(variety.is_ample(D)).lower()}")
            click.echo(f"big: {str(variety.is_big(D)).lower()}")


@main.command(name="realize")
@click.option("--fan", "fan_path", required=True, type=click.Path(exists=True))
@click.option("--A", "a_literal", required=True)
@click.option("--B", "b_literal", required=True)
@click.option("--ell", default=1, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_report_option
@_figures_option
@_adapter
def realize_cmd(fan_path, a_literal, b_literal, ell, out, report_fmt, figures):
    """Geometric realization of the map between the models of A and B."""
    variety = _load_variety(fan_path)
    A = _divisor(variety, a_literal, "A")
    B = _divisor(variety, b_literal, "B")
    G = realize.geometric_realization(variety, A, B, ell)
    _report_realization(G, report_fmt, out, figures)


@main.command(name="sharp-realize")
@click.option("--fan", "fan_path", required=True, type=click.Path(exists=True))
@click.option("--A", "a_literal", required=True)
@click.option("--B", "b_literal", required=True)
@click.option("--ell", default=1, show_default=True)
@click.option("--seed", required=True, type=int)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_report_option
@_figures_option
@_adapter
def sharp_realize_cmd(fan_path, a_literal, b_literal, ell, seed, out, report_fmt, figures):
    """Sharp realization, adjusting A in its chamber with a seeded PRNG."""
    variety = _load_variety(fan_path)
    A = _divisor(variety, a_literal, "A")
    B = _divisor(variety, b_literal, "B")
    G = realize.sharp_realization(variety, A, B, seed, ell)
    _report_realization(G, report_fmt, out, figures)


@main.command(name="fano-realize")
@click.option("--fan", "fan_path", required=True, type=click.Path(exists=True))
@click.option("--H", "h_literal", required=True)
@click.option("--prose-sign", is_flag=True, default=False,
              help="Scan ampleness of m*(-K) - H instead of m*(-K) + H.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_report_option
@_figures_option
@_adapter
def fano_realize_cmd(fan_path, h_literal, prose_sign, out, report_fmt, figures):
    """Fano (anticanonical-model) realization from a twisting divisor H."""
    variety = _load_variety(fan_path)
    H = _divisor(variety, h_literal, "H")
    G = realize.fano_realization(variety, H, prose_sign=prose_sign)
    _report_realization(G, report_fmt, out, figures)


@main.command(name="action-info")
@click.option("--polytope", "poly_path", required=True, type=click.Path(exists=True))
@click.option("--functional", default=None, help="Integer vector, e.g. 1,1,1,1.")
@click.option("--coordinate", default=None, type=int,
              help="Coordinate index (default: last).")
@_report_option
@_figures_option
@_adapter
def action_info_cmd(poly_path, functional, coordinate, report_fmt, figures):
    """Weights, fixed components, criticality, wall types, variety flags."""
    poly = read_polytope_file(poly_path)
    u = _functional_option(functional, coordinate, poly.ambient_dim)
    rep = cstar.action_info(poly, u)
    _emit_report(rep, report_fmt)
    if figures:
        polys = list(cstar.geometric_quotients(poly, u))
        if poly.ambient_dim <= 3:
            polys = [poly] + polys
        _write_figures(polys, figures, "quotient")


@main.command(name="quotients")
@click.option("--polytope", "poly_path", required=True, type=click.Path(exists=True))
@click.option("--functional", default=None)
@click.option("--coordinate", default=None, type=int)
@click.option("--out-prefix", default=None,
              help="Write quotient_<i>.poly files with this path prefix.")
@_figures_option
@_adapter
def quotients_cmd(poly_path, functional, coordinate, out_prefix, figures):
    """All geometric quotients of the action, one per weight interval."""
    poly = read_polytope_file(poly_path)
    u = _functional_option(functional, coordinate, poly.ambient_dim)
    w = cstar.weights(poly, u)
    click.echo("weights: " + ",".join(cstar._fmt_number(x) for x in w))
    quots = cstar.geometric_quotients(poly, u)
    for i, q in enumerate(quots):
        click.echo(f"quotient[{i}]: dim {q.dim}, {q.n_vertices} vertices, {q.n_facets} facets")
        if out_prefix:
            path = f"{out_prefix}_{i}.poly"
            write_polytope(q, path)
            click.echo(f"wrote {path}")
    if figures:
        _write_figures(quots, figures, "quotient")


@main.command(name="pruning")
@click.option("--polytope", "poly_path", required=True, type=click.Path(exists=True))
@click.option("--functional", default=None)
@click.option("--coordinate", default=None, type=int)
@click.option("--a", "lo", required=True)
@click.option("--b", "hi", required=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@_adapter
def pruning_cmd(poly_path, functional, coordinate, lo, hi, out):
    """Slab of the moment polytope between two weight levels."""
    from .formats import parse_fraction

    poly = read_polytope_file(poly_path)
    u = _functional_option(functional, coordinate, poly.ambient_dim)
    pruned = cstar.pruning(poly, u, parse_fraction(lo), parse_fraction(hi))
    click.echo(f"pruning: dim {pruned.dim}, {pruned.n_vertices} vertices, {pruned.n_facets} facets")
    if out:
        write_polytope(pruned, out)
        click.echo(f"wrote {out}")


@main.command(name="chambers")
@click.option("--fan", "fan_path", required=True, type=click.Path(exists=True))
@_adapter
def chambers_cmd(fan_path):
    """Secondary-fan chamber report with adjacency and wall types."""
    variety = _load_variety(fan_path)
    click.echo(chambers_mod.chamber_report(variety), nl=False)


@main.command(name="movable-cone")
@click.option("--fan", "fan_path", required=True, type=click.Path(exists=True))
@_adapter
def movable_cone_cmd(fan_path):
    """Generators of the movable cone in class space."""
    variety = _load_variety(fan_path)
    cone = chambers_mod.movable_cone(variety)
    for r in cone.rays:
        click.echo(",".join(str(x) for x in r))


@main.command(name="wall-test")
@click.option("--polytope-a", "path_a", required=True, type=click.Path(exists=True))
@click.option("--polytope-b", "path_b", required=True, type=click.Path(exists=True))
@_adapter
def wall_test_cmd(path_a, path_b):
    """Facet-count wall test between two moment polytopes."""
    pa = read_polytope_file(path_a)
    pb = read_polytope_file(path_b)
    crossing = chambers_mod.is_wall_crossing(pa, pb)
    click.echo(f"wall_crossing: {str(crossing).lower()}")
    click.echo(f"class: {chambers_mod.classify_wall(pa, pb)}")


@main.command(name="from-pr")
@click.argument("relations_path", type=click.Path(exists=True))
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_adapter
def from_pr_cmd(relations_path, out):
    """Build a fan file from a primitive-relations file."""
    relations = read_relations_file(relations_path)
    variety = from_primitive_relations(relations)
    write_fan(variety.fan, out)
    click.echo(f"wrote {out} ({variety.n_rays} rays, {len(variety.fan.max_cones)} cones)")


@main.command(name="bundle")
@click.option("--fan", "fan_path", required=True, type=click.Path(exists=True))
@click.option("--rows", required=True,
              help="Divisor rows separated by ';', e.g. '0,0,0;0,0,1;0,0,1'.")
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_adapter
def bundle_cmd(fan_path, rows, out):
    """Fan file of a projectivized sum of line bundles."""
    variety = _load_variety(fan_path)
    parsed = [
        parse_divisor_literal(part, variety.n_rays) for part in rows.split(";") if part
    ]
    W = projective_bundle(variety, parsed)
    write_fan(W.fan, out)
    click.echo(f"wrote {out} ({W.n_rays} rays, {len(W.fan.max_cones)} cones)")


@main.command(name="export-off")
@click.option("--polytope", "poly_path", required=True, type=click.Path(exists=True))
@click.option("--out", type=click.Path(dir_okay=False), required=True)
@_adapter
def export_off_cmd(poly_path, out):
    """OFF export of a 3-dimensional polytope."""
    poly = read_polytope_file(poly_path)
    write_off(poly, out)
    click.echo(f"wrote {out}")


if __name__ == "__main__":
    main()
