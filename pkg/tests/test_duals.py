import random
from fractions import Fraction

from f4weyl import refdata
from f4weyl.duals import (cell_metrics, cell_vertices_for_center,
                          cells_at_vertex, dual_cell, dual_polytope,
                          frame_vectors, kite_face, local_coordinates,
                          solve_scales)
from f4weyl.orbits import f_vector, generate_orbit
from f4weyl.quat import E1, E2, E3, ONE_Q, Quaternion
from f4weyl.rootsys import f4_system
from f4weyl.scalar import SQRT2, FieldScalar

F4 = f4_system()

NINE = ((1, 0, 0, 0), (0, 1, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0),
        (1, 0, 0, 1), (0, 1, 1, 0), (1, 1, 1, 0), (1, 1, 0, 1),
        (1, 1, 1, 1))

# (pattern, {center node: count of incident cells of that family})
CENTER_COUNTS = {
    (1, 0, 0, 0): {4: 6},
    (0, 1, 0, 0): {4: 3, 1: 2},
    (1, 1, 0, 0): {4: 3, 1: 1},
    (1, 0, 1, 0): {4: 2, 2: 2, 1: 1},
    (1, 0, 0, 1): {4: 1, 3: 4, 2: 4, 1: 1},
    (0, 1, 1, 0): {4: 2, 1: 2},
    (1, 1, 1, 0): {4: 2, 2: 1, 1: 1},
    (1, 1, 0, 1): {4: 1, 3: 2, 2: 1, 1: 1},
    (1, 1, 1, 1): {4: 1, 3: 1, 2: 1, 1: 1},
}


def test_center_orbit_sizes():
    for pat, want in CENTER_COUNTS.items():
        fams = cells_at_vertex(F4, pat)
        got = {f.center_node: len(f.centers) for f in fams}
        assert got == want, pat
        # center nodes are exactly the complements of the cell diagrams
        for f in fams:
            assert f.center_node not in f.nodes


def test_scale_factors_golden():
    for pat, want in refdata.DUAL_SCALES_GOLDEN.items():
        assert solve_scales(F4, pat) == want, pat


def test_scaled_centers_coplanar():
    # after rescaling, every center incident to the vertex has the same
    # scalar product with the vertex vector
    for pat in NINE:
        lam = F4.label_to_vector(F4.coerce_labels(pat))
        scales = solve_scales(F4, pat)
        values = set()
        for fam in cells_at_vertex(F4, pat):
            s = scales[fam.center_node]
            for c in fam.centers:
                values.add((c * s).dot(lam))
        assert len(values) == 1, pat


def test_frame_orthogonality():
    rng = random.Random(7)
    for _ in range(40):
        lam = Quaternion(*[FieldScalar(rng.randrange(-3, 4),
                                       Fraction(rng.randrange(-2, 3)))
                           for _ in range(4)])
        if lam.is_zero():
            continue
        f1, f2, f3 = frame_vectors(lam)
        nsq = lam.dot(lam)
        assert f1.dot(f1) == nsq and f2.dot(f2) == nsq and f3.dot(f3) == nsq
        assert f1.dot(f2).is_zero() and f2.dot(f3).is_zero() and f3.dot(f1).is_zero()
        assert lam.dot(f1).is_zero() and lam.dot(f2).is_zero() and lam.dot(f3).is_zero()


def test_local_norm_identity():
    # sum of squared frame coordinates = |c|^2 |L|^2 - (c, L)^2
    rng = random.Random(8)
    for _ in range(30):
        comps = [FieldScalar(rng.randrange(-2, 3), Fraction(rng.randrange(-1, 2)))
                 for _ in range(8)]
        lam = Quaternion(*comps[:4])
        c = Quaternion(*comps[4:])
        if lam.is_zero():
            continue
        u = local_coordinates(lam, c)
        lhs = sum((x * x for x in u), FieldScalar(0))
        rhs = c.dot(c) * lam.dot(lam) - c.dot(lam) ** 2
        assert lhs == rhs


def test_printed_cell_rows():
    # the quoted local coordinate tables, with the documented corrections
    for pat, (s, rows) in refdata.DUAL_CELL_PRINTED.items():
        cell = dual_cell(F4, pat)
        got = sorted(tuple(x * s for x in u) for _, u in cell.coords)
        want = sorted(r[0] for r in rows)
        assert got == want, pat


def test_printed_row_errata_differ():
    # rows carrying a quoted variant really differ from the computed one
    flagged = 0
    for pat, (_, rows) in refdata.DUAL_CELL_PRINTED.items():
        for correct, quoted in rows:
            if quoted is not None:
                assert quoted != correct
                flagged += 1
    assert flagged == 3


def test_dual_counts_match_source():
    for pat in NINE:
        src = f_vector(F4, pat)
        d = dual_polytope(F4, pat)
        assert len(d.vertices) == src.n3, pat
        assert d.cell_count == src.n0, pat
        assert d.f_tuple == (src.n3, src.n2, src.n1, src.n0)
        assert sum(sh.size for sh in d.shells) == len(d.vertices)


def test_dual_radii():
    # quoted radii: two-shell cases with exact ratios, and the
    # equal-radius union for (0,1,1,0)
    d = dual_polytope(F4, (0, 1, 0, 0))
    by_node = {sh.node: sh for sh in d.shells}
    ratio_sq = by_node[4].radius_sq / by_node[1].radius_sq
    assert ratio_sq == FieldScalar(Fraction(9, 8))  # (3/(2 sqrt2))^2

    d = dual_polytope(F4, (1, 1, 0, 0))
    by_node = {sh.node: sh for sh in d.shells}
    ratio_sq = by_node[4].radius_sq / by_node[1].radius_sq
    assert ratio_sq == FieldScalar(Fraction(25, 18))  # (5 sqrt2/6)^2

    d = dual_polytope(F4, (0, 1, 1, 0))
    assert all(sh.radius_sq == FieldScalar(2) for sh in d.shells)

    d = dual_polytope(F4, (1, 0, 0, 1))
    by_node = {sh.node: sh for sh in d.shells}
    assert by_node[1].radius_sq == by_node[4].radius_sq == FieldScalar(3, 2)
    assert by_node[2].radius_sq == by_node[3].radius_sq == FieldScalar(6)
    assert abs(float(by_node[1].radius_sq) ** 0.5 - 2.414) < 1e-3
    assert abs(float(by_node[2].radius_sq) ** 0.5 - 2.449) < 1e-3


def test_cell_metric_golden():
    for pat, (mode, want) in refdata.DUAL_METRIC_GOLDEN.items():
        if mode == "unit":
            got = cell_metrics(F4, pat)
        else:
            s = refdata.DUAL_CELL_PRINTED[pat][0]
            got = cell_metrics(F4, pat, scale_sq=s * s)
        for dist_sq, count in want.items():
            assert got.get(dist_sq) == count, (pat, str(dist_sq))


def test_kite_face_exact():
    s = refdata.DUAL_CELL_PRINTED[(1, 0, 0, 1)][0]
    kite = kite_face(F4, (1, 0, 0, 1), scale=s)
    g = refdata.KITE_GOLDEN
    assert sorted(kite["sides_sq"]) == sorted([g["long_side_sq"],
                                               g["long_side_sq"],
                                               g["short_side_sq"],
                                               g["short_side_sq"]])
    assert kite["axis_diagonal_sq"] == g["axis_diagonal_sq"]
    assert kite["cross_diagonal_sq"] == g["cross_diagonal_sq"]
    assert kite["area_sq"] == g["area_sq"]
    # independent float route agrees with the exact area
    exact = float(kite["area_sq"]) ** 0.5
    assert abs(kite["area_float"] - exact) < 1e-9
    # and the quoted area value does not (documented misprint)
    assert abs(exact - g["quoted_area"]) > 0.25


def test_kite_shape_sanity():
    # kite sides pair up adjacent around the quad: (a,b,b,a) order
    s = refdata.DUAL_CELL_PRINTED[(1, 0, 0, 1)][0]
    kite = kite_face(F4, (1, 0, 0, 1), scale=s)
    a, b, c, d = kite["sides_sq"]
    assert a == d and b == c and a != b


def test_self_dual_24cell():
    # the dual of the (1,0,0,0) orbit is the (0,0,0,1) orbit at scale 1
    d = dual_polytope(F4, (1, 0, 0, 0))
    other = generate_orbit(F4, (0, 0, 0, 1))
    assert d.vertices == other.vertex_set()
    # and vice versa
    d2 = dual_polytope(F4, (0, 0, 0, 1))
    assert d2.vertices == generate_orbit(F4, (1, 0, 0, 0)).vertex_set()


def test_self_dual_cell_table():
    # the six cells at the dominant vertex: centers 1 +/- e_k, vertex
    # sets matching the frozen table after the sqrt2 re-scale
    (fam,) = cells_at_vertex(F4, (1, 0, 0, 0))
    table_centers = frozenset(c for c, _ in refdata.SELF_DUAL_CELL_TABLE)
    assert frozenset(fam.centers) == table_centers
    orbit = generate_orbit(F4, (1, 0, 0, 0))
    for center, verts in refdata.SELF_DUAL_CELL_TABLE:
        got = cell_vertices_for_center(orbit.vertices, center)
        assert got == frozenset(v * SQRT2 for v in verts)


def test_diagram_symmetry_on_dual_cell():
    # the outer symmetry acts on the (1,1,1,1) dual cell as the frame
    # map (u1,u2,u3) -> (-u1,u3,u2), swapping nodes 1<->4 and 2<->3
    cell = dual_cell(F4, (1, 1, 1, 1))
    scales = dict(cell.scales)
    swap = {1: 4, 2: 3, 3: 2, 4: 1}
    source = {(node, tuple(x * scales[node] for x in u))
              for node, u in cell.coords}
    mapped = {(swap[node], (-u[0], u[2], u[1])) for node, u in source}
    assert mapped == source


def test_solve_scales_general_labels():
    # a non-unit dominant label reuses the pattern's reference node
    scales = solve_scales(F4, (2, 1, 0, 0))
    assert scales[4] == FieldScalar(1)
    lam = F4.label_to_vector(F4.coerce_labels((2, 1, 0, 0)))
    for j, s in scales.items():
        assert s * F4.weights[j - 1].dot(lam) == F4.weights[3].dot(lam)


def test_degenerate_dual_rejected():
    try:
        dual_polytope(F4, (0, 0, 0, 0))
    except ValueError:
        pass
    else:
        assert False
