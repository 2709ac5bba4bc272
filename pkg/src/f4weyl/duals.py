"""Dual polytopes via cell centers.

The vertices of the dual are the cell centers of the source polytope.
At the dominant vertex, the centers of the incident cells of one
combinatorial type form a single small orbit (under the subgroup fixing
the vertex), all proportional to one fundamental weight; the dual is
then a union of rescaled single-node orbits.  The scale factors are
fixed by requiring all centers incident to a vertex to lie in one
hyperplane, which makes the dual cell flat.

Local coordinates inside that hyperplane use the frame built from the
vertex vector Lambda: ``u_a(c) = (c, e_a * Lambda)``.  The three frame
vectors are mutually orthogonal with squared norm ``(Lambda, Lambda)``,
so squared distances in u-space are true squared distances multiplied
by ``(Lambda, Lambda)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import refdata
from .orbits import f_vector, generate_orbit, parabolic_elements
from .quat import E1, E2, E3, Quaternion
from .rootsys import (LabelLike, Labels, RootSystem, f4_system,
                      format_labels)
from .scalar import FieldScalar

Triple = Tuple[FieldScalar, FieldScalar, FieldScalar]


@dataclass(frozen=True)
class CellFamily:
    """All cells of one type incident to the dominant vertex."""

    nodes: Tuple[int, ...]          # defining sub-diagram, 1-based
    name: str
    center_node: int                # the complementary node, 1-based
    centers: Tuple[Quaternion, ...]  # unscaled centers (weight-vector orbit)


def _pattern(labels: Labels) -> Tuple[int, ...]:
    return tuple(1 if a.sign() > 0 else 0 for a in labels)


def cells_at_vertex(sys: RootSystem, labels: Sequence[LabelLike]) -> Tuple[CellFamily, ...]:
    """Cell families around the dominant vertex, with their center vectors.

    The centers of the type-S cells through the vertex are the images of
    the complementary fundamental weight under the vertex stabilizer.
    """
    complex_ = f_vector(sys, labels)
    labels = sys.coerce_labels(labels)
    inactive = frozenset(i for i, a in enumerate(labels) if a.is_zero())
    stab = parabolic_elements(sys.name, inactive)
    families: List[CellFamily] = []
    for entry in complex_.cells:
        nodes0 = set(i - 1 for i in entry.nodes)
        (j,) = set(range(len(labels))) - nodes0
        weight = sys.weights[j]
        centers = sorted({g.apply(weight) for g in stab})
        families.append(CellFamily(entry.nodes, entry.name, j + 1,
                                   tuple(centers)))
    return tuple(families)


def solve_scales(sys: RootSystem, labels: Sequence[LabelLike]) -> Dict[int, FieldScalar]:
    """Scale factor per center node making all incident centers coplanar.

    The center of the type-S cell is proportional to the complementary
    weight; scaling node j by ``(w_ref, L) / (w_j, L)`` puts every center
    into the hyperplane of the reference one.  The reference node (scale
    exactly 1) follows the frozen table where defined, else the smallest
    participating node.
    """
    labels = sys.coerce_labels(labels)
    families = cells_at_vertex(sys, labels)
    present = sorted({fam.center_node for fam in families})
    ref = refdata.DUAL_REFERENCE.get(_pattern(labels))
    if ref is None or ref not in present:
        ref = present[0]
    lam = sys.label_to_vector(labels)
    ref_dot = sys.weights[ref - 1].dot(lam)
    scales: Dict[int, FieldScalar] = {}
    for j in present:
        denom = sys.weights[j - 1].dot(lam)
        if denom.sign() == 0:
            raise ArithmeticError("degenerate center direction for node %d" % j)
        scales[j] = ref_dot / denom
    return scales


@dataclass(frozen=True)
class Shell:
    """One rescaled single-node orbit contributing dual vertices."""

    node: int
    scale: FieldScalar
    radius_sq: FieldScalar
    size: int


@dataclass(frozen=True)
class DualPolytope:
    source: Labels
    shells: Tuple[Shell, ...]
    vertices: FrozenSet[Quaternion]
    cell_count: int
    f_tuple: Tuple[int, int, int, int]


def dual_polytope(sys: RootSystem, labels: Sequence[LabelLike]) -> DualPolytope:
    """The dual as a union of rescaled single-node orbits.

    Its vertex count equals the source cell count and vice versa; the
    dual f-vector is the reversed source f-vector.
    """
    labels = sys.coerce_labels(labels)
    scales = solve_scales(sys, labels)
    source = f_vector(sys, labels)
    shells: List[Shell] = []
    vertices: set = set()
    for j, s in sorted(scales.items()):
        single = tuple(s if i == j - 1 else FieldScalar(0)
                       for i in range(len(labels)))
        orb = generate_orbit(sys, single)
        w = sys.weights[j - 1]
        shells.append(Shell(j, s, w.dot(w) * s * s, orb.size))
        vertices.update(orb.vertices)
    return DualPolytope(labels, tuple(shells), frozenset(vertices),
                        source.n0,
                        (source.n3, source.n2, source.n1, source.n0))


# ---------------------------------------------------------------------------
# local coordinates of the dual cell at the dominant vertex


def frame_vectors(lam: Quaternion) -> Tuple[Quaternion, Quaternion, Quaternion]:
    """Three mutually orthogonal vectors spanning the hyperplane normal
    to ``lam``, each of squared norm (lam, lam)."""
    return (E1 * lam, E2 * lam, E3 * lam)


def local_coordinates(lam: Quaternion, c: Quaternion) -> Triple:
    f1, f2, f3 = frame_vectors(lam)
    return (c.dot(f1), c.dot(f2), c.dot(f3))


@dataclass(frozen=True)
class DualCell:
    """The dual cell at the dominant vertex in local u-coordinates."""

    source: Labels
    families: Tuple[CellFamily, ...]
    scales: Tuple[Tuple[int, FieldScalar], ...]
    coords: Tuple[Tuple[int, Triple], ...]  # (center node, u-triple) per vertex


def dual_cell(sys: RootSystem, labels: Sequence[LabelLike]) -> DualCell:
    labels = sys.coerce_labels(labels)
    lam = sys.label_to_vector(labels)
    scales = solve_scales(sys, labels)
    families = cells_at_vertex(sys, labels)
    coords: List[Tuple[int, Triple]] = []
    for fam in families:
        s = scales[fam.center_node]
        for c in fam.centers:
            coords.append((fam.center_node, local_coordinates(lam, c * s)))
    return DualCell(labels, families, tuple(sorted(scales.items())),
                    tuple(coords))


def cell_metrics(sys: RootSystem, labels: Sequence[LabelLike],
                 scale_sq: Optional[FieldScalar] = None) -> Dict[FieldScalar, int]:
    """Multiset of squared distances between dual-cell vertices.

    With the default scale the distances are true 4-space distances
    (u-distances divided by |Lambda|^2); pass an explicit ``scale_sq``
    to use another convention, e.g. the square of a quoted overall
    coordinate factor.
    """
    labels = sys.coerce_labels(labels)
    lam = sys.label_to_vector(labels)
    if scale_sq is None:
        scale_sq = FieldScalar(1) / lam.dot(lam)
    cell = dual_cell(sys, labels)
    pts = [u for _, u in cell.coords]
    out: Dict[FieldScalar, int] = {}
    for i in range(len(pts)):
        for k in range(i + 1, len(pts)):
            d = sum(((pts[i][a] - pts[k][a]) ** 2 for a in range(3)),
                    FieldScalar(0)) * scale_sq
            out[d] = out.get(d, 0) + 1
    return out


def _dist_sq(p: Triple, q: Triple) -> FieldScalar:
    return sum(((p[a] - q[a]) ** 2 for a in range(3)), FieldScalar(0))


def kite_face(sys: RootSystem, labels: Sequence[LabelLike],
              scale: Optional[FieldScalar] = None) -> Dict[str, object]:
    """Exact geometry of one kite face of a trapezohedral dual cell.

    Works for labels whose dual cell is an apex / 4-ring / 4-ring / apex
    arrangement (the (1,0,0,1) pattern).  Returns squared side lengths,
    squared diagonals and the exact squared area, plus a float area
    computed independently by triangulation as a cross-check.
    """
    labels = sys.coerce_labels(labels)
    cell = dual_cell(sys, labels)
    by_node: Dict[int, List[Triple]] = {}
    for node, u in cell.coords:
        by_node.setdefault(node, []).append(u)
    apex_nodes = sorted(n for n, us in by_node.items() if len(us) == 1)
    ring_nodes = sorted(n for n, us in by_node.items() if len(us) == 4)
    if len(apex_nodes) != 2 or len(ring_nodes) != 2:
        raise ValueError("dual cell is not a trapezohedron for %s"
                         % format_labels(labels))
    if scale is None:
        scale = FieldScalar(1)
    apex = by_node[apex_nodes[0]][0]
    near_ring = min(ring_nodes,
                    key=lambda n: min(_dist_sq(apex, u) for u in by_node[n]))
    far_ring = ring_nodes[0] if near_ring == ring_nodes[1] else ring_nodes[1]
    w = sorted(by_node[far_ring])[0]
    v1, v2 = sorted(by_node[near_ring], key=lambda u: _dist_sq(u, w))[:2]

    def scaled(p: Triple) -> Triple:
        return tuple(x * scale for x in p)

    a, b1, c, b2 = scaled(apex), scaled(v1), scaled(w), scaled(v2)
    sides = (_dist_sq(a, b1), _dist_sq(b1, c), _dist_sq(c, b2), _dist_sq(b2, a))
    d_axis = _dist_sq(a, c)
    d_cross = _dist_sq(b1, b2)
    # planarity: the three edge vectors from the apex are linearly dependent
    rows = [tuple(p[i] - a[i] for i in range(3)) for p in (b1, c, b2)]
    det = (rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
           - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
           + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]))
    if not det.is_zero():
        raise ArithmeticError("kite is not planar")
    # the diagonals must be perpendicular for the half-product area rule
    diag1 = tuple(c[i] - a[i] for i in range(3))
    diag2 = tuple(b2[i] - b1[i] for i in range(3))
    dot = sum((diag1[i] * diag2[i] for i in range(3)), FieldScalar(0))
    if not dot.is_zero():
        raise ArithmeticError("kite diagonals are not perpendicular")
    area_sq = d_axis * d_cross / 4

    def fl(p: Triple) -> Tuple[float, float, float]:
        return (float(p[0]), float(p[1]), float(p[2]))

    def tri_area(p, q, r) -> float:
        ux = [q[i] - p[i] for i in range(3)]
        vx = [r[i] - p[i] for i in range(3)]
        cx = (ux[1] * vx[2] - ux[2] * vx[1],
              ux[2] * vx[0] - ux[0] * vx[2],
              ux[0] * vx[1] - ux[1] * vx[0])
        return 0.5 * (cx[0] ** 2 + cx[1] ** 2 + cx[2] ** 2) ** 0.5

    fa, fb1, fc, fb2 = fl(a), fl(b1), fl(c), fl(b2)
    area_float = tri_area(fa, fb1, fc) + tri_area(fa, fc, fb2)
    return {
        "sides_sq": sides,
        "axis_diagonal_sq": d_axis,
        "cross_diagonal_sq": d_cross,
        "area_sq": area_sq,
        "area_float": area_float,
    }


# ---------------------------------------------------------------------------
# cell recovery from supporting hyperplanes (used for self-duality checks)


def cell_vertices_for_center(vertices: Sequence[Quaternion],
                             center: Quaternion) -> FrozenSet[Quaternion]:
    """Vertices of the cell supported by the hyperplane of ``center``:
    the orbit points maximizing the scalar product with it."""
    best: Optional[FieldScalar] = None
    out: List[Quaternion] = []
    for v in vertices:
        d = v.dot(center)
        if best is None or (d - best).sign() > 0:
            best = d
            out = [v]
        elif (d - best).sign() == 0:
            out.append(v)
    return frozenset(out)
