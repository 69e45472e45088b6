import os

from click.testing import CliRunner

from toricreal import RationalPolytope
from toricreal.cli import main
from toricreal.figures import render_polytope, render_quotient_figures
from toricreal.formats import write_polytope


def test_render_cube(tmp_path):
    cube = RationalPolytope.from_vertices(
        [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    )
    path = tmp_path / "cube.png"
    render_polytope(cube, str(path))
    assert path.exists() and path.stat().st_size > 0


def test_render_polygon_and_segment(tmp_path):
    tri = RationalPolytope.from_vertices([(0, 0), (2, 0), (0, 2)])
    seg = RationalPolytope.from_vertices([(0,), (1,)])
    render_polytope(tri, str(tmp_path / "tri.png"))
    render_polytope(seg, str(tmp_path / "seg.png"))
    assert (tmp_path / "tri.png").stat().st_size > 0
    assert (tmp_path / "seg.png").stat().st_size > 0


def test_quotient_figures_skip_high_dimensions(tmp_path):
    cube4 = RationalPolytope.from_vertices(
        [(x, y, z, w) for x in (0, 1) for y in (0, 1) for z in (0, 1) for w in (0, 1)]
    )
    tri = RationalPolytope.from_vertices([(0, 0), (1, 0), (0, 1)])
    written = render_quotient_figures([cube4, tri], str(tmp_path))
    assert len(written) == 1
    assert written[0].endswith("quotient_1.png")


def test_cli_figures_for_cremona_quotients(tmp_path):
    hs = []
    for i in range(4):
        e = [0] * 4
        e[i] = 1
        hs.append((tuple(e), 0))
        hs.append((tuple(-x for x in e), 3))
    hs.append(((1, 1, 1, 1), -1))
    hs.append(((-1, -1, -1, -1), 11))
    P = RationalPolytope.from_halfspaces(hs)
    poly_path = tmp_path / "cremona.poly"
    write_polytope(P, poly_path)
    figdir = tmp_path / "figs"
    runner = CliRunner()
    res = runner.invoke(
        main,
        ["action-info", "--polytope", str(poly_path), "--functional", "1,1,1,1",
         "--figures", str(figdir)],
    )
    assert res.exit_code == 0, res.output
    pngs = sorted(os.listdir(figdir))
    assert pngs == [f"quotient_{i}.png" for i in range(4)]
