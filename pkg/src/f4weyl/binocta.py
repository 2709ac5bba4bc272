"""Binary octahedral quaternions and the finite groups built from them.

The 48 unit quaternions of the binary octahedral group O split into six
8-element subsets V0, V+, V-, V1, V2, V3; T = V0 + V+ + V- is the binary
tetrahedral subgroup and T' = V1 + V2 + V3 its complement.  Orthogonal
transformations of 4-space are encoded as pairs::

    [p, q]  : v -> p v q          (rotation)
    [p, q]* : v -> p conj(v) q    (rotary reflection)

with p, q unit quaternions.  [p, q] and [-p, -q] act identically, so
every stored element is sign-normalized on its first half.  The groups
assembled here (orders in parentheses): WF4 (1152), AutF4 (2304),
WB4 (384), WB3R (48), WB3R_C2 (96), WB3L_C2 (96).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .quat import E1, E2, E3, ONE_Q, Quaternion
from .scalar import FieldScalar, INV_SQRT2

SUBSET_ORDER = ("V0", "V+", "V-", "V1", "V2", "V3")

GROUP_NAMES = ("WF4", "AutF4", "WB4", "WB3R", "WB3R_C2", "WB3L_C2")

#: order-3 element of T used for triple coset splittings: (1+e1+e2+e3)/2
OMEGA0 = Quaternion(*([Fraction(1, 2)] * 4))


@lru_cache(maxsize=1)
def build_subsets() -> Dict[str, Tuple[Quaternion, ...]]:
    """The nine named quaternion sets, each sorted deterministically."""
    units = (ONE_Q, E1, E2, E3)
    v0 = [u * s for u in units for s in (1, -1)]

    vplus: List[Quaternion] = []
    vminus: List[Quaternion] = []
    for signs in product((1, -1), repeat=4):
        q = Quaternion(*[Fraction(s, 2) for s in signs])
        # parity convention: even number of + signs lands in V+
        (vplus if signs.count(1) % 2 == 0 else vminus).append(q)

    def mix(a: Quaternion, b: Quaternion) -> List[Quaternion]:
        return [(a * sa + b * sb) * INV_SQRT2
                for sa, sb in product((1, -1), repeat=2)]

    v1 = mix(ONE_Q, E1) + mix(E2, E3)
    v2 = mix(ONE_Q, E2) + mix(E3, E1)
    v3 = mix(ONE_Q, E3) + mix(E1, E2)

    sets = {"V0": v0, "V+": vplus, "V-": vminus, "V1": v1, "V2": v2, "V3": v3}
    sets["T"] = sets["V0"] + sets["V+"] + sets["V-"]
    sets["T'"] = sets["V1"] + sets["V2"] + sets["V3"]
    sets["O"] = sets["T"] + sets["T'"]
    return {name: tuple(sorted(els)) for name, els in sets.items()}


@lru_cache(maxsize=1)
def subset_product_table() -> Tuple[Tuple[str, ...], ...]:
    """6x6 multiplication table of the V-subsets.

    Entry (i, j) names the single subset equal to ``{x*y : x in row_i,
    y in col_j}``; anything else raises, since it would mean the subset
    conventions are broken.
    """
    sets = build_subsets()
    lookup = {frozenset(sets[name]): name for name in SUBSET_ORDER}
    table = []
    for row in SUBSET_ORDER:
        entries = []
        for col in SUBSET_ORDER:
            prod = frozenset(x * y for x in sets[row] for y in sets[col])
            name = lookup.get(prod)
            if name is None:
                raise ArithmeticError(
                    f"{row} * {col} is not a single named subset")
            entries.append(name)
        table.append(tuple(entries))
    return tuple(table)


class GroupElement:
    """Canonicalized pair element [p, q] or [p, q]*."""

    __slots__ = ("p", "q", "star", "_hash")

    def __init__(self, p: Quaternion, q: Quaternion, star: bool = False) -> None:
        sign = 0
        for comp in p.components():
            sign = comp.sign()
            if sign != 0:
                break
        if sign == 0:
            raise ValueError("group element needs a nonzero first half")
        if sign < 0:
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "star", star)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("GroupElement is immutable")

    @staticmethod
    def identity() -> "GroupElement":
        return GroupElement(ONE_Q, ONE_Q, False)

    def apply(self, v: Quaternion) -> Quaternion:
        if self.star:
            return self.p * v.conj() * self.q
        return self.p * v * self.q

    def compose(self, other: "GroupElement") -> "GroupElement":
        """self after other: (self.compose(other))(v) = self(other(v))."""
        p, q = self.p, self.q
        r, s = other.p, other.q
        if not self.star:
            # [p,q][r,s] = [pr, sq], star carried through from other
            return GroupElement(p * r, s * q, other.star)
        # [p,q]* [r,s]   = [p conj(s), conj(r) q]*
        # [p,q]* [r,s]*  = [p conj(s), conj(r) q]
        return GroupElement(p * s.conj(), r.conj() * q, not other.star)

    def inverse(self) -> "GroupElement":
        if self.star:
            return GroupElement(self.q, self.p, True)
        return GroupElement(self.p.conj(), self.q.conj(), False)

    def order(self) -> int:
        ident = GroupElement.identity()
        g = self
        for n in range(1, 100):
            if g == ident:
                return n
            g = g.compose(self)
        raise ArithmeticError("element order exceeds sanity bound")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.star == other.star and self.p == other.p
                and self.q == other.q)

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash((self.star, self.p, self.q))
            object.__setattr__(self, "_hash", h)
        return h

    def key(self) -> tuple:
        return (self.star, self.p.key(), self.q.key())

    def __lt__(self, other: "GroupElement") -> bool:
        return self.key() < other.key()

    def __repr__(self) -> str:
        return f"GroupElement({self.p!r}, {self.q!r}, star={self.star})"

    def __str__(self) -> str:
        tail = "]*" if self.star else "]"
        return f"[{self.p}, {self.q}{tail}"


def reflection_element(alpha: Quaternion) -> GroupElement:
    """The reflection in the hyperplane orthogonal to alpha, as [-a, a]*.

    alpha is unit-normalized first, so its squared norm must be a square
    in Q(sqrt2) (true for every root used here: norms 1 and 2).
    """
    n = alpha.norm_sq().sqrt()
    if n is None:
        raise ValueError("root norm is not a square in Q(sqrt2)")
    if n.is_zero():
        raise ValueError("cannot reflect in a zero root")
    unit = alpha / n
    return GroupElement(-unit, unit, star=True)


@lru_cache(maxsize=1)
def f4_generators() -> Tuple[GroupElement, ...]:
    """The four simple reflections r1..r4 of the F4 diagram."""
    h = Fraction(1, 2)
    roots = (
        Quaternion(h, -h, -h, -h),        # (1 - e1 - e2 - e3)/2
        E3,
        (E2 - E3) * INV_SQRT2,
        (E1 - E2) * INV_SQRT2,
    )
    return tuple(reflection_element(a) for a in roots)


def diagram_symmetry() -> GroupElement:
    """The order-2 outer symmetry swapping r1<->r4 and r2<->r3."""
    return GroupElement(-(E2 + E3) * INV_SQRT2, E2, False)


def generate_from(generators: Iterable[GroupElement]) -> FrozenSet[GroupElement]:
    """Closure of the generators under composition (breadth-first)."""
    gens = list(generators)
    seen = {GroupElement.identity()}
    frontier = list(seen)
    while frontier:
        new: List[GroupElement] = []
        for g in frontier:
            for r in gens:
                h = g.compose(r)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        frontier = new
    return frozenset(seen)


def _block(left: Sequence[Quaternion], right: Sequence[Quaternion],
           star: bool) -> Iterable[GroupElement]:
    return (GroupElement(p, q, star) for p in left for q in right)


@lru_cache(maxsize=None)
def build_group(name: str) -> FrozenSet[GroupElement]:
    """One of the named groups as a frozen set of canonical elements."""
    sets = build_subsets()
    t, tp = sets["T"], sets["T'"]
    elems: set = set()
    if name == "WF4":
        for star in (False, True):
            elems.update(_block(t, t, star))
            elems.update(_block(tp, tp, star))
    elif name == "AutF4":
        for star in (False, True):
            elems.update(_block(sets["O"], sets["O"], star))
    elif name == "WB4":
        pairs = (("V0", "V0"), ("V+", "V-"), ("V-", "V+"),
                 ("V1", "V1"), ("V2", "V2"), ("V3", "V3"))
        for star in (False, True):
            for a, b in pairs:
                elems.update(_block(sets[a], sets[b], star))
    elif name == "WB3R":
        for star in (False, True):
            for x in t + tp:
                elems.add(GroupElement(x, x.conj(), star))
    elif name == "WB3R_C2":
        for star in (False, True):
            for x in t + tp:
                for sgn in (1, -1):
                    elems.add(GroupElement(x, x.conj() * sgn, star))
    elif name == "WB3L_C2":
        axis = (ONE_Q + E1) * INV_SQRT2
        for x in t + tp:
            for sgn in (1, -1):
                elems.add(GroupElement(x, axis.conj() * x.conj() * axis * sgn,
                                       False))
                elems.add(GroupElement(x, axis * x.conj() * axis * sgn, True))
    else:
        raise ValueError(f"unknown group {name!r}")
    return frozenset(elems)


def group_order(name: str) -> int:
    return len(build_group(name))


def sorted_elements(group: Iterable[GroupElement]) -> List[GroupElement]:
    return sorted(group, key=GroupElement.key)


def coset_decompose(big: FrozenSet[GroupElement], small: FrozenSet[GroupElement],
                    side: str = "right") -> List[GroupElement]:
    """Deterministic coset representatives of small inside big.

    side="right" partitions big into sets ``small . g``; side="left"
    into ``g . small``.  Each representative is the least canonical
    element of its coset.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if not small <= big:
        raise ValueError("small is not contained in big")
    if len(big) % len(small):
        raise ValueError("small cannot be a subgroup (order mismatch)")
    remaining = set(big)
    reps: List[GroupElement] = []
    for g in sorted_elements(big):
        if g not in remaining:
            continue
        if side == "right":
            coset = {s.compose(g) for s in small}
        else:
            coset = {g.compose(s) for s in small}
        if not coset <= remaining:
            raise ValueError("small is not a subgroup of big")
        remaining -= coset
        reps.append(g)
    return reps


def quaternion_cosets(ambient: Sequence[Quaternion],
                      subgroup: Sequence[Quaternion]) -> List[Tuple[Quaternion, FrozenSet[Quaternion]]]:
    """Left cosets x.H of a quaternion subgroup inside a finite set.

    Returns (representative, coset) pairs; the representative is the
    least element of its coset under the deterministic sort order.
    """
    remaining = set(ambient)
    out = []
    for x in sorted(ambient):
        if x not in remaining:
            continue
        coset = frozenset(x * h for h in subgroup)
        if not coset <= remaining:
            raise ValueError("subgroup does not partition the ambient set")
        remaining -= coset
        out.append((x, coset))
    return out
