"""Simple roots, Cartan matrices and fundamental weights for F4, B4, B3.

Normalization.  All simple roots here carry squared norm 2, so the Gram
matrix (alpha_i, alpha_j) IS the (symmetrized) Cartan matrix, with the
off-diagonal -sqrt2 entries at each double bond, and the fundamental
weights satisfy (alpha_i, omega_j) = delta_ij together with
(omega_i, omega_j) = (C^-1)_ij.  Reflections are insensitive to root
scaling, so the generated Weyl groups agree with the unit-quaternion
versions used by :mod:`f4weyl.binocta`.

The three systems:

* F4  -- rank 4, double bond between nodes 2 and 3.
* B4  -- rank 4, double bond between nodes 3 and 4.
* B3R -- rank 3, acting on the imaginary subspace span(e1, e2, e3);
         its "weights" are the dual-basis vectors v1, v2, v3 and its
         Weyl group fixes the real axis pointwise.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple, Union

from .binocta import GroupElement, reflection_element
from .quat import E1, E2, E3, ONE_Q, Quaternion
from .scalar import FieldScalar, INV_SQRT2, SQRT2

LabelLike = Union[FieldScalar, int, Fraction]
Labels = Tuple[FieldScalar, ...]

_MAX_DOMINANCE_STEPS = 10_000


def _fs(x: LabelLike) -> FieldScalar:
    return x if isinstance(x, FieldScalar) else FieldScalar(x)


def _matrix_inverse(m: Sequence[Sequence[FieldScalar]]) -> Tuple[Tuple[FieldScalar, ...], ...]:
    """Exact Gauss-Jordan inverse of a small FieldScalar matrix."""
    n = len(m)
    aug: List[List[FieldScalar]] = [
        list(row) + [FieldScalar(1 if i == j else 0) for j in range(n)]
        for i, row in enumerate(m)
    ]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()),
                     None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = FieldScalar(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


class RootSystem:
    """Immutable bundle of simple roots, weights and simple reflections."""

    def __init__(self, name: str, simple_roots: Sequence[Quaternion],
                 weights: Sequence[Quaternion], weyl_group: str) -> None:
        self.name = name
        self.rank = len(simple_roots)
        self.simple_roots = tuple(simple_roots)
        self.weights = tuple(weights)
        self.weyl_group = weyl_group
        self.cartan = tuple(
            tuple(a.dot(b) for b in self.simple_roots) for a in self.simple_roots
        )
        self.cartan_inv = _matrix_inverse(self.cartan)
        self.reflections = tuple(reflection_element(a) for a in self.simple_roots)

    def __repr__(self) -> str:
        return f"RootSystem({self.name})"

    def coerce_labels(self, labels: Sequence[LabelLike]) -> Labels:
        if len(labels) != self.rank:
            raise ValueError(
                f"{self.name} takes {self.rank} labels, got {len(labels)}")
        return tuple(_fs(a) for a in labels)

    def label_to_vector(self, labels: Sequence[LabelLike]) -> Quaternion:
        """Sum a_i * omega_i as an exact quaternion."""
        labels = self.coerce_labels(labels)
        v = Quaternion(0, 0, 0, 0)
        for a, w in zip(labels, self.weights):
            v = v + w * a
        return v

    def vector_to_label(self, v: Quaternion) -> Labels:
        """Coordinates in the weight basis: a_i = (v, alpha_i)."""
        return tuple(v.dot(a) for a in self.simple_roots)

    def is_dominant(self, labels: Sequence[LabelLike]) -> bool:
        return all(_fs(a).sign() >= 0 for a in labels)

    def dominant_representative(self, v: Quaternion) -> Tuple[Labels, GroupElement]:
        """Dominant label of the orbit of v plus a witness g with g(v) dominant.

        Standard dominance walk: reflect on the lowest-index negative
        label until none is left.
        """
        witness = GroupElement.identity()
        current = v
        for _ in range(_MAX_DOMINANCE_STEPS):
            labels = self.vector_to_label(current)
            neg = next((i for i, a in enumerate(labels) if a.sign() < 0), None)
            if neg is None:
                return labels, witness
            r = self.reflections[neg]
            current = r.apply(current)
            witness = r.compose(witness)
        raise ArithmeticError("dominance walk failed to terminate")


@lru_cache(maxsize=1)
def f4_system() -> RootSystem:
    h = Fraction(1, 2)
    roots = (
        Quaternion(h, -h, -h, -h) * SQRT2,   # (1 - e1 - e2 - e3)/sqrt2
        E3 * SQRT2,
        E2 - E3,
        E1 - E2,
    )
    weights = (
        ONE_Q * SQRT2,                                   # (sqrt2, 0, 0, 0)
        Quaternion(3, 1, 1, 1) * INV_SQRT2,
        Quaternion(2, 1, 1, 0),
        Quaternion(1, 1, 0, 0),
    )
    return RootSystem("F4", roots, weights, "WF4")


@lru_cache(maxsize=1)
def b4_system() -> RootSystem:
    roots = (ONE_Q - E1, E1 - E2, E2 - E3, E3 * SQRT2)
    weights = (
        ONE_Q,
        Quaternion(1, 1, 0, 0),
        Quaternion(1, 1, 1, 0),
        Quaternion(1, 1, 1, 1) * INV_SQRT2,
    )
    return RootSystem("B4", roots, weights, "WB4")


@lru_cache(maxsize=1)
def b3r_system() -> RootSystem:
    roots = (E3 * SQRT2, E2 - E3, E1 - E2)
    duals = (
        (E1 + E2 + E3) * INV_SQRT2,
        E1 + E2,
        E1,
    )
    return RootSystem("B3R", roots, duals, "WB3R")


def get_system(name: str) -> RootSystem:
    key = name.upper()
    if key == "F4":
        return f4_system()
    if key == "B4":
        return b4_system()
    if key in ("B3", "B3R"):
        return b3r_system()
    raise ValueError(f"unknown root system {name!r}")


def format_labels(labels: Sequence[FieldScalar]) -> str:
    return "(" + ",".join(str(a) for a in labels) + ")"
