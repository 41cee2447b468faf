"""Figure rendering for rank-2 T-root systems (one image per class).

Matplotlib is imported lazily so the library works headless without it;
the Agg backend is forced for file output.
"""

from __future__ import annotations

from pathlib import Path

from ._linalg import sort_counterclockwise
from .invariants import hull_vertices, rank2_area_invariant


def _plt():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def render_rank2_classes(records_by_group, outdir) -> list[Path]:
    """One PNG per rank-2 class family: the vectors, hull outline, and the
    (d, a) label.  Returns the written paths."""
    plt = _plt()
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    seen: dict[tuple, list[str]] = {}
    reps = {}
    for group in sorted(records_by_group):
        for rec in records_by_group[group]:
            if rec.tuple.k != 2:
                continue
            seen.setdefault(rec.tuple.key, []).append(
                f"{group.label}/{rec.isotropy_name}")
            reps.setdefault(rec.tuple.key, rec)
    paths = []
    for key in sorted(seen):
        rec = reps[key]
        omega = rec.system()
        verts = sort_counterclockwise(hull_vertices(omega))
        a = rank2_area_invariant(omega)
        _, d, c, v, w = key
        fig, ax = plt.subplots(figsize=(4, 4))
        ring = list(verts) + [verts[0]]
        ax.plot([p[0] for p in ring], [p[1] for p in ring],
                "-", color="0.6", linewidth=1)
        xs = [p[0] for p in omega.vectors]
        ys = [p[1] for p in omega.vectors]
        ax.scatter(xs, ys, s=28, color="tab:blue", zorder=3)
        ax.scatter([0], [0], s=10, color="0.3", marker="x")
        ax.set_aspect("equal")
        ax.set_title(f"d={d}, c={c}, v={v}, w={w}, a={a}", fontsize=9)
        ax.text(0.02, 0.02, "\n".join(seen[key]), fontsize=6,
                transform=ax.transAxes, va="bottom")
        path = outdir / f"rank2_d{d}_c{c}_v{v}_w{w}.png"
        fig.savefig(path, dpi=110)
        plt.close(fig)
        paths.append(path)
    return paths
