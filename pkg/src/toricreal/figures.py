"""Matplotlib rendering of low-dimensional polytopes to image files.

Presentation layer only: exact coordinates are converted to floats here and
nowhere else.  Polytopes of dimension 3 are drawn as edge wireframes, 2 as
filled polygons, 1 as segments.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_polytope(poly, path, title=None):
    """Write a PNG for a polytope of ambient dimension <= 3."""
    if poly.ambient_dim == 3:
        _render_3d(poly, path, title)
    elif poly.ambient_dim == 2:
        _render_2d(poly, path, title)
    elif poly.ambient_dim == 1:
        _render_1d(poly, path, title)
    else:
        raise ValueError(
            f"cannot render ambient dimension {poly.ambient_dim} (max 3)"
        )
    return path


def _float_vertices(poly):
    return [[float(x) for x in v] for v in poly.vertices]


def _render_3d(poly, path, title):
    from mpl_toolkits.mplot3d import Axes3D  # noqa: F401  (registers 3d proj)

    verts = _float_vertices(poly)
    fig = plt.figure(figsize=(5, 5))
    ax = fig.add_subplot(111, projection="3d")
    for i, j in poly.edges():
        xs, ys, zs = zip(verts[i], verts[j])
        ax.plot(xs, ys, zs, color="steelblue", linewidth=1.2)
    ax.scatter(
        [v[0] for v in verts],
        [v[1] for v in verts],
        [v[2] for v in verts],
        color="firebrick",
        s=12,
    )
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_2d(poly, path, title):
    verts = _float_vertices(poly)
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    if poly.dim == 2:
        # walk the boundary via edges
        order = _boundary_cycle(poly)
        xs = [verts[i][0] for i in order] + [verts[order[0]][0]]
        ys = [verts[i][1] for i in order] + [verts[order[0]][1]]
        ax.fill(xs, ys, alpha=0.25, color="steelblue")
        ax.plot(xs, ys, color="steelblue")
    else:
        for i, j in poly.edges():
            ax.plot(
                [verts[i][0], verts[j][0]],
                [verts[i][1], verts[j][1]],
                color="steelblue",
            )
    ax.scatter([v[0] for v in verts], [v[1] for v in verts], color="firebrick", s=16)
    ax.set_aspect("equal")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _render_1d(poly, path, title):
    verts = _float_vertices(poly)
    fig, ax = plt.subplots(figsize=(4.5, 1.5))
    xs = sorted(v[0] for v in verts)
    ax.plot([xs[0], xs[-1]], [0, 0], color="steelblue", linewidth=2)
    ax.scatter(xs, [0] * len(xs), color="firebrick", s=16)
    ax.set_yticks([])
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _boundary_cycle(poly):
    edges = poly.edges()
    adjacency = {}
    for i, j in edges:
        adjacency.setdefault(i, []).append(j)
        adjacency.setdefault(j, []).append(i)
    start = 0
    cycle = [start]
    prev = None
    while True:
        nxt = [x for x in adjacency[cycle[-1]] if x != prev]
        prev = cycle[-1]
        if nxt[0] == start:
            break
        cycle.append(nxt[0])
        if len(cycle) > len(poly.vertices):
            break
    return cycle


def render_quotient_figures(polytopes, directory, prefix="quotient"):
    """Render each listed polytope that fits in dimension <= 3; returns paths."""
    import os

    written = []
    for idx, poly in enumerate(polytopes):
        if poly.ambient_dim > 3:
            continue
        path = os.path.join(directory, f"{prefix}_{idx}.png")
        render_polytope(poly, path, title=f"{prefix} {idx}")
        written.append(path)
    return written
