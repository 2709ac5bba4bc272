"""Command-line surface.

Subcommands cover the whole pipeline: ``verify`` runs the invariant
battery, ``orbit``/``fvector`` generate a polytope and report counts,
``branch-b4``/``branch-b3a1`` print the branching tables in the same
notation as the published appendices, ``project`` prints the exact 3D
layer decomposition, ``dual`` reports dual scales/shells/cell and
``export`` writes the dual cell as an OFF mesh.

Output is deterministic: identical invocations produce byte-identical
text.  Labels are given as four comma-separated scalar literals, e.g.
``1,0,0,1`` or ``1+sqrt2,0,1/2,0``.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import refdata
from .branching import (branch_b3a1, branch_b4, project_3d,
                        render_b3a1_slices, render_b4_branching)
from .duals import dual_cell, dual_polytope
from .orbits import f_vector, generate_orbit
from .rootsys import format_labels, f4_system
from .scalar import FieldScalar, parse_scalar
from .verify import DEFAULT_SEED, format_report, run_all

Triple = Tuple[FieldScalar, FieldScalar, FieldScalar]


def parse_label(text: str) -> Tuple[FieldScalar, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError(
            f"label {text!r} must have four comma-separated entries")
    try:
        return tuple(parse_scalar(p.strip()) for p in parts)
    except ValueError as exc:
        raise ValueError(f"label {text!r}: {exc}") from None


# ---------------------------------------------------------------------------
# OFF meshes


def _cross(a: Triple, b: Triple) -> Triple:
    return (a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0])


def _dot3(a: Triple, b: Triple) -> FieldScalar:
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _sub3(a: Triple, b: Triple) -> Triple:
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def convex_faces(points: Sequence[Triple]) -> List[Tuple[int, ...]]:
    """Faces of the convex hull of exact 3D points, as index cycles.

    Supporting planes are found exactly: a triple spans a face when
    every point lies weakly on one side of its plane.  Each face's
    vertices are then ordered counter-clockwise as seen from outside
    (float angles around the centroid only break ties that the convex
    position already makes strict).  Intended for the small dual cells
    (at most ten vertices), where the cubic scan is instant.
    """
    pts = list(points)
    n = len(pts)
    if n == 0:
        raise ValueError("empty geometry")
    if len(set(pts)) != n:
        raise ValueError("duplicate points")
    planes: Dict[frozenset, Triple] = {}
    for i, j, k in combinations(range(n), 3):
        normal = _cross(_sub3(pts[j], pts[i]), _sub3(pts[k], pts[i]))
        if all(c.is_zero() for c in normal):
            continue
        dots = [_dot3(_sub3(pts[m], pts[i]), normal) for m in range(n)]
        signs = {d.sign() for d in dots} - {0}
        if len(signs) > 1:
            continue
        members = frozenset(m for m, d in enumerate(dots) if d.is_zero())
        if signs == {1}:  # flip so the normal points away from the body
            normal = tuple(-c for c in normal)
        planes[members] = normal
    if not planes or len(pts) < 4 or any(len(m) == n for m in planes):
        raise ValueError("degenerate (flat) geometry")
    faces = [_order_face(pts, members, normal)
             for members, normal in planes.items()]
    faces.sort()
    return faces


def _order_face(pts: Sequence[Triple], members: frozenset,
                normal: Triple) -> Tuple[int, ...]:
    idx = sorted(members)
    nf = [float(c) for c in normal]
    centroid = [sum(float(pts[m][a]) for m in idx) / len(idx)
                for a in range(3)]
    base = None
    for m in idx:
        off = [float(pts[m][a]) - centroid[a] for a in range(3)]
        if sum(x * x for x in off) > 1e-18:
            base = off
            break
    u = base
    v = [nf[1] * u[2] - nf[2] * u[1],
         nf[2] * u[0] - nf[0] * u[2],
         nf[0] * u[1] - nf[1] * u[0]]

    def angle(m: int) -> float:
        off = [float(pts[m][a]) - centroid[a] for a in range(3)]
        return math.atan2(sum(a * b for a, b in zip(off, v)),
                          sum(a * b for a, b in zip(off, u)))

    cycle = sorted(idx, key=angle)
    start = cycle.index(min(cycle))
    return tuple(cycle[start:] + cycle[:start])


def export_off(points: Sequence[Triple]) -> str:
    """Render exact 3D points as OFF text (17 significant digits)."""
    pts = sorted(points)
    faces = convex_faces(pts)
    edges = {frozenset((cycle[i - 1], cycle[i]))
             for cycle in faces for i in range(len(cycle))}
    lines = ["OFF", f"{len(pts)} {len(faces)} {len(edges)}"]
    for p in pts:
        lines.append(" ".join("%.17g" % float(c) for c in p))
    for cycle in faces:
        lines.append(" ".join([str(len(cycle))] + [str(m) for m in cycle]))
    return "\n".join(lines) + "\n"


def _dual_cell_points(labels) -> List[Triple]:
    """Dual-cell vertex coordinates at the published row scale."""
    cell = dual_cell(f4_system(), labels)
    pattern = tuple(1 if a.sign() > 0 else 0 for a in cell.source)
    row_scale = FieldScalar(1)
    if pattern in refdata.DUAL_CELL_PRINTED:
        row_scale = refdata.DUAL_CELL_PRINTED[pattern][0]
    return [tuple(u * row_scale for u in triple) for _, triple in cell.coords]


# ---------------------------------------------------------------------------
# command renderers (each returns the full output text)


def _cmd_verify(args) -> Tuple[str, int]:
    results = run_all(seed=args.seed)
    code = 0 if all(r.ok for r in results) else 1
    if args.format == "json":
        payload = {
            "seed": args.seed,
            "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail}
                       for r in results],
            "ok": code == 0,
        }
        return json.dumps(payload, indent=2) + "\n", code
    return format_report(results) + "\n", code


def _inventory(entries) -> List[dict]:
    return [{"nodes": list(e.nodes), "name": e.name, "count": e.count}
            for e in entries]


def _cmd_fvector(args) -> Tuple[str, int]:
    fv = f_vector(f4_system(), args.label)
    if args.format == "json":
        payload = {
            "label": format_labels(fv.labels),
            "N0": fv.n0, "N1": fv.n1, "N2": fv.n2, "N3": fv.n3,
            "face_inventory": _inventory(fv.faces),
            "cell_inventory": _inventory(fv.cells),
        }
        return json.dumps(payload, indent=2) + "\n", 0
    lines = [f"{format_labels(fv.labels)}  "
             f"N0={fv.n0} N1={fv.n1} N2={fv.n2} N3={fv.n3}"]
    lines.append("faces:")
    for e in fv.faces:
        lines.append(f"  {e.count} x {e.name}  "
                     f"(nodes {','.join(map(str, e.nodes))})")
    lines.append("cells:")
    for e in fv.cells:
        lines.append(f"  {e.count} x {e.name}  "
                     f"(nodes {','.join(map(str, e.nodes))})")
    return "\n".join(lines) + "\n", 0


def _cmd_orbit(args) -> Tuple[str, int]:
    sys_f4 = f4_system()
    orbit = generate_orbit(sys_f4, args.label)
    fv = f_vector(sys_f4, args.label)
    verts = sorted(orbit.vertices)
    if args.format == "json":
        payload = {
            "label": format_labels(orbit.labels),
            "N0": fv.n0, "N1": fv.n1, "N2": fv.n2, "N3": fv.n3,
            "face_inventory": _inventory(fv.faces),
            "cell_inventory": _inventory(fv.cells),
            "vertices": [[str(c) for c in v.components()] for v in verts],
        }
        return json.dumps(payload, indent=2) + "\n", 0
    lines = [f"{format_labels(orbit.labels)}  {orbit.size} vertices"]
    lines.extend(str(v) for v in verts)
    return "\n".join(lines) + "\n", 0


def _cmd_branch_b4(args) -> Tuple[str, int]:
    if args.format == "json":
        parts = branch_b4(args.label)
        payload = {
            "label": format_labels(f4_system().coerce_labels(args.label)),
            "parts": [{"labels": format_labels(p.labels), "size": p.size}
                      for p in parts],
        }
        return json.dumps(payload, indent=2) + "\n", 0
    return render_b4_branching(args.label) + "\n", 0


def _cmd_branch_b3a1(args) -> Tuple[str, int]:
    labels = f4_system().coerce_labels(args.label)
    if args.format == "json":
        slices = branch_b3a1(args.label)
        payload = {
            "label": format_labels(labels),
            "slices": [{"labels": format_labels(s.labels),
                        "height": str(s.height),
                        "size": s.size,
                        "paired": s.paired} for s in slices],
        }
        return json.dumps(payload, indent=2) + "\n", 0
    lines = [format_labels(labels) + "_F4 ="]
    lines.extend("  " + line for line in render_b3a1_slices(args.label))
    return "\n".join(lines) + "\n", 0


def _cmd_project(args) -> Tuple[str, int]:
    scale = parse_scalar(args.scale)
    layers = project_3d(args.label, scale)
    label_text = format_labels(f4_system().coerce_labels(args.label))
    if args.format == "json":
        payload = {
            "label": label_text,
            "scale": str(scale),
            "layers": [{"height": str(h),
                        "points": [[str(c) for c in p]
                                   for p in sorted(pts)]}
                       for h, pts in layers],
        }
        return json.dumps(payload, indent=2) + "\n", 0
    lines = [f"{label_text} at scale {scale}: {len(layers)} layers"]
    for h, pts in layers:
        noun = "point" if len(pts) == 1 else "points"
        lines.append(f"h = {h}  ({len(pts)} {noun})")
        for p in sorted(pts):
            lines.append("  (" + ",".join(str(c) for c in p) + ")")
    return "\n".join(lines) + "\n", 0


def _cmd_dual(args) -> Tuple[str, int]:
    sys_f4 = f4_system()
    dual = dual_polytope(sys_f4, args.label)
    cell = dual_cell(sys_f4, args.label)
    pattern = tuple(1 if a.sign() > 0 else 0 for a in cell.source)
    row_scale = FieldScalar(1)
    if pattern in refdata.DUAL_CELL_PRINTED:
        row_scale = refdata.DUAL_CELL_PRINTED[pattern][0]
    label_text = format_labels(dual.source)
    if args.format == "json":
        payload = {
            "label": label_text,
            "vertex_count": len(dual.vertices),
            "cell_count": dual.cell_count,
            "scales": [{"node": node, "scale": str(s)}
                       for node, s in cell.scales],
            "shells": [{"node": s.node, "size": s.size,
                        "radius_sq": str(s.radius_sq),
                        "radius": math.sqrt(float(s.radius_sq))}
                       for s in dual.shells],
            "cell": {
                "row_scale": str(row_scale),
                "vertices": [{"node": node,
                              "coords": [str(u * row_scale) for u in triple]}
                             for node, triple in cell.coords],
            },
        }
        return json.dumps(payload, indent=2) + "\n", 0
    lines = [f"dual of {label_text}: {len(dual.vertices)} vertices, "
             f"{dual.cell_count} cells"]
    lines.append("scales: " + ", ".join(
        f"node{node} = {s}" for node, s in cell.scales))
    lines.append("shells:")
    for s in dual.shells:
        lines.append(f"  node {s.node}: {s.size} vertices, radius^2 = "
                     f"{s.radius_sq} ({math.sqrt(float(s.radius_sq)):.6f})")
    lines.append(f"cell vertices (rows scaled by {row_scale}):")
    for node, triple in cell.coords:
        lines.append(f"  node {node}: ("
                     + ",".join(str(u * row_scale) for u in triple) + ")")
    return "\n".join(lines) + "\n", 0


def _cmd_export(args) -> Tuple[str, int]:
    return export_off(_dual_cell_points(args.label)), 0


COMMANDS = {
    "verify": _cmd_verify,
    "orbit": _cmd_orbit,
    "fvector": _cmd_fvector,
    "branch-b4": _cmd_branch_b4,
    "branch-b3a1": _cmd_branch_b3a1,
    "project": _cmd_project,
    "dual": _cmd_dual,
    "export": _cmd_export,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="f4weyl",
        description="exact F4 orbit polytopes, branchings and duals")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full invariant battery")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                   help="seed for the randomized property checks")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)

    for name, help_text in (
            ("orbit", "orbit vertices and counts"),
            ("fvector", "vertex/edge/face/cell counts and inventories"),
            ("branch-b4", "split into signed-permutation orbits"),
            ("branch-b3a1", "slice into octahedral orbits by height"),
            ("project", "exact 3D layer decomposition"),
            ("dual", "dual polytope: scales, shells, cell"),
            ("export", "OFF mesh of the dual cell")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("label", help="four comma-separated scalars, "
                                     "e.g. 1,0,0,1")
        if name == "export":
            p.add_argument("--format", choices=("off",), default="off")
        else:
            p.add_argument("--format", choices=("text", "json"),
                           default="text")
        if name == "project":
            p.add_argument("--scale", default="1",
                           help="positive scalar applied to the orbit")
        p.add_argument("--output", default=None)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "label", None) is not None:
        try:
            args.label = parse_label(args.label)
        except ValueError as exc:
            parser.error(str(exc))
    try:
        text, code = COMMANDS[args.command](args)
    except (ValueError, ArithmeticError) as exc:
        label = getattr(args, "label", None)
        where = f" for label {format_labels(label)}" if label else ""
        print(f"error{where}: {exc}", file=sys.stderr)
        return 1
    if args.output:
        try:
            with open(args.output, "w") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.output}: {exc}",
                  file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return code
