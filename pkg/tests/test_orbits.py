from itertools import product

from f4weyl.binocta import build_subsets
from f4weyl.orbits import (f_vector, generate_orbit, geometric_edge_check,
                           orbit_size, parabolic_order, stabilizer_order,
                           weyl_order)
from f4weyl.refdata import FVECTOR_GOLDEN
from f4weyl.rootsys import b4_system, f4_system
from f4weyl.scalar import SQRT2

F4 = f4_system()

ALL_PATTERNS = [p for p in product((0, 1), repeat=4) if any(p)]

# the ten labels worked out in detail downstream, with golden f-vectors
GOLDEN_FVECTORS = FVECTOR_GOLDEN

GOLDEN_CELLS = {
    (1, 0, 0, 0): {("octahedron", 24)},
    (0, 1, 0, 0): {("cuboctahedron", 24), ("cube", 24)},
    (0, 0, 1, 0): {("cube", 24), ("cuboctahedron", 24)},
    (1, 1, 0, 0): {("truncated octahedron", 24), ("cube", 24)},
    (1, 0, 1, 0): {("small rhombicuboctahedron", 24), ("cuboctahedron", 24),
                   ("triangular prism", 96)},
    (1, 0, 0, 1): {("octahedron", 24), ("triangular prism", 96)},
    (0, 1, 1, 0): {("truncated cube", 24)},
    (1, 1, 1, 0): {("great rhombicuboctahedron", 24), ("truncated cube", 24),
                   ("triangular prism", 96)},
    (1, 1, 0, 1): {("truncated octahedron", 24),
                   ("small rhombicuboctahedron", 24),
                   ("hexagonal prism", 96), ("triangular prism", 96)},
    (1, 1, 1, 1): {("great rhombicuboctahedron", 24),
                   ("hexagonal prism", 96)},
}

GOLDEN_FACES = {
    (1, 0, 0, 0): [("triangle", 96)],
    (0, 1, 0, 0): [("triangle", 96), ("square", 144)],
    (0, 0, 1, 0): [("square", 144), ("triangle", 96)],
    (1, 1, 0, 0): [("hexagon", 96), ("square", 144)],
    (1, 0, 1, 0): [("triangle", 96), ("square", 288), ("square", 144),
                   ("triangle", 192)],
    (1, 0, 0, 1): [("triangle", 192), ("square", 288), ("triangle", 192)],
    (0, 1, 1, 0): [("triangle", 96), ("octagon", 144), ("triangle", 96)],
    (1, 1, 1, 0): [("hexagon", 96), ("square", 288), ("octagon", 144),
                   ("triangle", 192)],
    (1, 1, 0, 1): [("hexagon", 192), ("square", 288), ("square", 144),
                   ("square", 288), ("triangle", 192)],
    (1, 1, 1, 1): [("hexagon", 192), ("square", 288), ("square", 288),
                   ("octagon", 144), ("square", 288), ("hexagon", 192)],
}


def test_small_orbits_are_scaled_binocta_sets():
    sets = build_subsets()
    orbit1 = generate_orbit(F4, (1, 0, 0, 0))
    assert orbit1.size == 24
    assert orbit1.vertex_set() == {t * SQRT2 for t in sets["T"]}
    orbit4 = generate_orbit(F4, (0, 0, 0, 1))
    assert orbit4.size == 24
    assert orbit4.vertex_set() == {t * SQRT2 for t in sets["T'"]}


def test_orbit_stabilizer_identity():
    for pattern in ALL_PATTERNS:
        orbit = generate_orbit(F4, pattern)
        assert orbit.size * stabilizer_order(F4, pattern) == weyl_order(F4)
        assert orbit.size == orbit_size(F4, pattern)


def test_one_sphere_property():
    for pattern in ALL_PATTERNS:
        orbit = generate_orbit(F4, pattern)
        norms = {v.norm_sq() for v in orbit.vertices}
        assert len(norms) == 1


def test_degenerate_labels_rejected():
    try:
        generate_orbit(F4, (0, 0, 0, 0))
        assert False, "expected ValueError"
    except ValueError:
        pass
    try:
        generate_orbit(F4, (1, -1, 0, 0))
        assert False, "expected ValueError"
    except ValueError:
        pass


def test_stabilizer_orders():
    assert stabilizer_order(F4, (1, 0, 0, 0)) == 48
    assert stabilizer_order(F4, (0, 1, 0, 0)) == 12
    assert stabilizer_order(F4, (1, 1, 1, 1)) == 1
    assert parabolic_order("F4", frozenset()) == 1
    assert parabolic_order("F4", frozenset({1, 2})) == 8  # the double bond


def test_golden_f_vectors_and_euler():
    for pattern, expected in GOLDEN_FVECTORS.items():
        complex_ = f_vector(F4, pattern)
        assert complex_.f_tuple() == expected, pattern
        assert complex_.euler_ok(), pattern


def test_remaining_patterns_euler_and_size():
    sizes = {(0, 0, 0, 1): 24, (0, 1, 0, 1): 288, (0, 0, 1, 1): 192,
             (1, 0, 1, 1): 576, (0, 1, 1, 1): 576}
    for pattern, n0 in sizes.items():
        complex_ = f_vector(F4, pattern)
        assert complex_.n0 == n0, pattern
        assert complex_.euler_ok(), pattern


def test_golden_inventories():
    for pattern, expected in GOLDEN_CELLS.items():
        cells = {(c.name, c.count) for c in f_vector(F4, pattern).cells}
        assert cells == expected, pattern
    for pattern, expected in GOLDEN_FACES.items():
        faces = [(f.name, f.count) for f in f_vector(F4, pattern).faces]
        assert faces == expected, pattern


def test_b4_f_vector_cross_check():
    # same counting rules on the other rank-4 diagram in play
    b4 = b4_system()
    complex_ = f_vector(b4, (0, 1, 0, 0))
    assert complex_.n0 == 24 and complex_.n1 == 96
    assert complex_.euler_ok()
    # the 24 octahedral cells of this 24-cell split 16 + 8 here
    assert {(c.name, c.count) for c in complex_.cells} == \
        {("octahedron", 16), ("octahedron", 8)}
    assert sorted(c.count for c in complex_.cells) == [8, 16]
    assert [(f.name, f.count) for f in complex_.faces] == \
        [("triangle", 32), ("triangle", 64)]


def test_edge_oracle_small():
    assert geometric_edge_check(generate_orbit(F4, (1, 0, 0, 0))) == 96
    assert geometric_edge_check(generate_orbit(F4, (0, 0, 0, 1))) == 96
    assert geometric_edge_check(generate_orbit(F4, (0, 1, 1, 0))) == 576
