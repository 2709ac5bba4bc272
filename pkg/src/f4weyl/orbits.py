"""Weight orbits, stabilizers, f-vectors and face/cell inventories.

Counting scheme.  For a dominant label the vertices are the orbit of
``sum(a_i omega_i)``; their number is the index of the parabolic
subgroup on the zero-label nodes.  Higher faces come from sub-diagrams:
a subset S of nodes spans a face type exactly when every connected
component of S touches a nonzero label, and the number of those faces
is ``|W| / |W(S + halo(S))|`` where halo(S) collects the zero-label
nodes that are neither in S nor adjacent to it (they stabilize the face
without moving it).  Face and cell names follow the standard polygon /
polyhedron names of the corresponding rank-2/rank-3 orbit.

The geometric edge oracle recounts N1 with no group theory at all:
vertices are scaled to integer pairs (x + y*sqrt2), all pairwise
squared distances are formed with numpy int64 arithmetic, and pairs
attaining the exact minimum are counted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from math import lcm
from typing import Dict, FrozenSet, List, Sequence, Tuple

import numpy as np

from .binocta import GroupElement, build_group, generate_from
from .quat import Quaternion
from .rootsys import LabelLike, Labels, RootSystem, get_system
from .scalar import FieldScalar

#: rank-3 orbit names keyed by 0/1 activity pattern, double-bond end first
_B3_CELL_NAMES = {
    (1, 0, 0): "cube",
    (0, 1, 0): "cuboctahedron",
    (0, 0, 1): "octahedron",
    (1, 1, 0): "truncated cube",
    (0, 1, 1): "truncated octahedron",
    (1, 0, 1): "small rhombicuboctahedron",
    (1, 1, 1): "great rhombicuboctahedron",
}

#: linear-diagram rank-3 names (pattern and its reversal coincide)
_A3_CELL_NAMES = {
    (1, 0, 0): "tetrahedron",
    (0, 0, 1): "tetrahedron",
    (0, 1, 0): "octahedron",
    (1, 1, 0): "truncated tetrahedron",
    (0, 1, 1): "truncated tetrahedron",
    (1, 0, 1): "cuboctahedron",
    (1, 1, 1): "truncated octahedron",
}

_PRISM_NAMES = {
    "triangle": "triangular prism",
    "hexagon": "hexagonal prism",
    "square": "square prism",
    "octagon": "octagonal prism",
}


@dataclass(frozen=True)
class FaceEntry:
    """One face/cell type: 1-based diagram nodes, polygon/polyhedron name, count."""
    nodes: Tuple[int, ...]
    name: str
    count: int


@dataclass(frozen=True)
class Orbit:
    system: str
    labels: Labels
    vertices: Tuple[Quaternion, ...]

    @property
    def size(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> FrozenSet[Quaternion]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class PolytopeComplex:
    system: str
    labels: Labels
    n0: int
    n1: int
    n2: int
    n3: int
    faces: Tuple[FaceEntry, ...]
    cells: Tuple[FaceEntry, ...]

    def euler_ok(self) -> bool:
        return self.n0 - self.n1 + self.n2 - self.n3 == 0

    def f_tuple(self) -> Tuple[int, int, int, int]:
        return (self.n0, self.n1, self.n2, self.n3)


def _validated(sys: RootSystem, labels: Sequence[LabelLike],
               require_nonzero: bool = True) -> Labels:
    lab = sys.coerce_labels(labels)
    if not sys.is_dominant(lab):
        raise ValueError(f"label {lab} is not dominant (negative entry)")
    if require_nonzero and all(a.is_zero() for a in lab):
        raise ValueError("the zero label spans no polytope")
    return lab


@lru_cache(maxsize=None)
def _orbit_cached(sys_name: str, labels: Labels) -> Orbit:
    sys = get_system(sys_name)
    start = sys.label_to_vector(labels)
    seen = {start}
    frontier = [start]
    while frontier:
        new: List[Quaternion] = []
        for v in frontier:
            for r in sys.reflections:
                w = r.apply(v)
                if w not in seen:
                    seen.add(w)
                    new.append(w)
        frontier = new
    return Orbit(sys_name, labels, tuple(sorted(seen)))


def generate_orbit(sys: RootSystem, labels: Sequence[LabelLike]) -> Orbit:
    """All images of the labelled weight vector, sorted deterministically."""
    return _orbit_cached(sys.name, _validated(sys, labels))


@lru_cache(maxsize=None)
def parabolic_elements(sys_name: str, nodes: FrozenSet[int]) -> FrozenSet[GroupElement]:
    """Elements of the subgroup generated by the given simple reflections (0-based)."""
    sys = get_system(sys_name)
    if not nodes:
        return frozenset([GroupElement.identity()])
    return generate_from([sys.reflections[i] for i in sorted(nodes)])


def parabolic_order(sys_name: str, nodes: FrozenSet[int]) -> int:
    """Order of the subgroup generated by the given simple reflections (0-based)."""
    return len(parabolic_elements(sys_name, nodes))


def weyl_order(sys: RootSystem) -> int:
    return len(build_group(sys.weyl_group))


def stabilizer_order(sys: RootSystem, labels: Sequence[LabelLike]) -> int:
    lab = _validated(sys, labels, require_nonzero=False)
    inactive = frozenset(i for i, a in enumerate(lab) if a.is_zero())
    return parabolic_order(sys.name, inactive)


def orbit_size(sys: RootSystem, labels: Sequence[LabelLike]) -> int:
    return weyl_order(sys) // stabilizer_order(sys, labels)


# ---------------------------------------------------------------------------
# sub-diagram bookkeeping


def _adjacent(sys: RootSystem, i: int, j: int) -> bool:
    return not sys.cartan[i][j].is_zero()


def _components(sys: RootSystem, nodes: Sequence[int]) -> List[List[int]]:
    remaining = set(nodes)
    comps = []
    while remaining:
        stack = [remaining.pop()]
        comp = {stack[0]}
        while stack:
            cur = stack.pop()
            for other in list(remaining):
                if _adjacent(sys, cur, other):
                    remaining.remove(other)
                    comp.add(other)
                    stack.append(other)
        comps.append(sorted(comp))
    return comps


def _halo(sys: RootSystem, nodes: Tuple[int, ...], active: FrozenSet[int]) -> FrozenSet[int]:
    out = set(nodes)
    for j in range(sys.rank):
        if j in out or j in active:
            continue
        if not any(_adjacent(sys, j, s) for s in nodes):
            out.add(j)
    return frozenset(out)


def _is_double_bond(sys: RootSystem, i: int, j: int) -> bool:
    return sys.cartan[i][j] * sys.cartan[j][i] == 2


def _polygon_name(sys: RootSystem, pair: Tuple[int, int],
                  active: FrozenSet[int]) -> str:
    i, j = pair
    both = i in active and j in active
    if not _adjacent(sys, i, j):
        return "square"  # A1 x A1 (both must be active for validity)
    if _is_double_bond(sys, i, j):
        return "octagon" if both else "square"
    return "hexagon" if both else "triangle"


def _chain_order(sys: RootSystem, comp: List[int]) -> List[int]:
    """Order a connected rank-3 component along its path."""
    ends = [i for i in comp if sum(_adjacent(sys, i, j) for j in comp if j != i) == 1]
    start = ends[0]
    middle = next(j for j in comp if j not in ends)
    other = next(e for e in ends if e != start)
    return [start, middle, other]


def _cell_name(sys: RootSystem, comps: List[List[int]],
               active: FrozenSet[int]) -> str:
    if len(comps) == 1:
        chain = _chain_order(sys, comps[0])
        doubles = [_is_double_bond(sys, chain[0], chain[1]),
                   _is_double_bond(sys, chain[1], chain[2])]
        pattern = tuple(1 if i in active else 0 for i in chain)
        if doubles[1] and not doubles[0]:
            chain.reverse()
            pattern = pattern[::-1]
            doubles = [True, False]
        if doubles[0]:
            return _B3_CELL_NAMES[pattern]
        return _A3_CELL_NAMES[pattern]
    # a polygon component plus an isolated active node: a prism
    pair = next(c for c in comps if len(c) == 2)
    base = _polygon_name(sys, (pair[0], pair[1]), active)
    return _PRISM_NAMES[base]


def f_vector(sys: RootSystem, labels: Sequence[LabelLike]) -> PolytopeComplex:
    """Counts of vertices/edges/faces/cells plus named inventories."""
    if sys.rank != 4:
        raise ValueError("f_vector needs a rank-4 system")
    lab = _validated(sys, labels)
    active = frozenset(i for i, a in enumerate(lab) if not a.is_zero())
    order = weyl_order(sys)

    def count_for(nodes: Tuple[int, ...]) -> int:
        return order // parabolic_order(sys.name, _halo(sys, nodes, active))

    def valid(nodes: Tuple[int, ...]) -> bool:
        return all(any(i in active for i in comp)
                   for comp in _components(sys, nodes))

    n0 = order // parabolic_order(
        sys.name, frozenset(i for i in range(4) if i not in active))
    n1 = sum(count_for((i,)) for i in sorted(active))

    faces: List[FaceEntry] = []
    for i in range(4):
        for j in range(i + 1, 4):
            pair = (i, j)
            if not valid(pair):
                continue
            faces.append(FaceEntry((i + 1, j + 1),
                                   _polygon_name(sys, pair, active),
                                   count_for(pair)))
    cells: List[FaceEntry] = []
    for skip in range(3, -1, -1):
        nodes = tuple(i for i in range(4) if i != skip)
        if not valid(nodes):
            continue
        comps = _components(sys, nodes)
        cells.append(FaceEntry(tuple(i + 1 for i in nodes),
                               _cell_name(sys, comps, active),
                               count_for(nodes)))
    cells.sort(key=lambda e: e.nodes)

    return PolytopeComplex(
        sys.name, lab, n0, n1,
        sum(f.count for f in faces), sum(c.count for c in cells),
        tuple(faces), tuple(cells))


# ---------------------------------------------------------------------------
# geometric edge oracle


@lru_cache(maxsize=32)
def geometric_edge_check(orbit: Orbit) -> int:
    """Count vertex pairs at the minimal nonzero squared distance.

    Exact: coordinates are scaled to integer pairs (rational and sqrt2
    parts), pair distances accumulate in int64, a float image picks the
    approximate minimum and the exact winner is confirmed among the
    shortlisted (P, Q) classes.
    """
    verts = orbit.vertices
    n = len(verts)
    if n < 2:
        return 0
    scale = 1
    for v in verts:
        for c in v.components():
            scale = lcm(scale, c.a.denominator, c.b.denominator)
    rat = np.array([[int(c.a * scale) for c in v.components()] for v in verts],
                   dtype=np.int64)
    surd = np.array([[int(c.b * scale) for c in v.components()] for v in verts],
                    dtype=np.int64)
    p = np.zeros((n, n), dtype=np.int64)
    q = np.zeros((n, n), dtype=np.int64)
    for k in range(4):
        da = rat[:, k][:, None] - rat[:, k][None, :]
        db = surd[:, k][:, None] - surd[:, k][None, :]
        p += da * da
        p += 2 * (db * db)
        q += 2 * (da * db)
    iu = np.triu_indices(n, 1)
    pv, qv = p[iu], q[iu]
    approx = pv.astype(np.float64) + qv.astype(np.float64) * math.sqrt(2.0)
    positive = approx > 1e-9
    if not positive.any():
        return 0
    mn = approx[positive].min()
    short = positive & (approx <= mn * (1 + 1e-9) + 1e-9)
    best = None
    for pi, qi in {(int(a), int(b)) for a, b in zip(pv[short], qv[short])}:
        if best is None or FieldScalar(pi - best[0], qi - best[1]).sign() < 0:
            best = (pi, qi)
    return int(np.count_nonzero((pv == best[0]) & (qv == best[1])))
