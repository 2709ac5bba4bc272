"""Quaternions with FieldScalar components.

The multiplication rule follows the convention ``e1*e2 = e3`` (cyclic),
``e_i**2 = -1``.  Quaternions double as vectors of 4-space here: the
Euclidean scalar product is ``(p, q) = (p.conj()*q + q.conj()*p)/2``,
which works out to the componentwise dot product.

Reflections come in two equivalent forms (kept separate on purpose so
they can be cross-checked against each other):

* ``reflect``          -- the quaternionic form  -a * conj(v) * a / (a,a)
* ``reflect_classical`` -- the hyperplane form    v - 2 (v,a)/(a,a) * a
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Tuple, Union

from .scalar import FieldScalar, Rational

ScalarLike = Union[FieldScalar, int, Fraction]


def _fs(x: ScalarLike) -> FieldScalar:
    return x if isinstance(x, FieldScalar) else FieldScalar(x)


class Quaternion:
    """A quaternion ``q0 + q1*e1 + q2*e2 + q3*e3`` over Q(sqrt2)."""

    __slots__ = ("q0", "q1", "q2", "q3", "_hash")

    def __init__(self, q0: ScalarLike = 0, q1: ScalarLike = 0,
                 q2: ScalarLike = 0, q3: ScalarLike = 0) -> None:
        object.__setattr__(self, "q0", _fs(q0))
        object.__setattr__(self, "q1", _fs(q1))
        object.__setattr__(self, "q2", _fs(q2))
        object.__setattr__(self, "q3", _fs(q3))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Quaternion is immutable")

    # -- containers ------------------------------------------------------

    def components(self) -> Tuple[FieldScalar, FieldScalar, FieldScalar, FieldScalar]:
        return (self.q0, self.q1, self.q2, self.q3)

    @classmethod
    def from_components(cls, comps: Iterable[ScalarLike]) -> "Quaternion":
        c = list(comps)
        if len(c) != 4:
            raise ValueError("need exactly 4 components")
        return cls(*c)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components())

    # -- algebra ---------------------------------------------------------

    def __add__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.q0 + other.q0, self.q1 + other.q1,
                          self.q2 + other.q2, self.q3 + other.q3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.q0 - other.q0, self.q1 - other.q1,
                          self.q2 - other.q2, self.q3 - other.q3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.q0, -self.q1, -self.q2, -self.q3)

    def __mul__(self, other: Union["Quaternion", ScalarLike]) -> "Quaternion":
        if isinstance(other, Quaternion):
            p, q = self, other
            return Quaternion(
                p.q0 * q.q0 - p.q1 * q.q1 - p.q2 * q.q2 - p.q3 * q.q3,
                p.q0 * q.q1 + p.q1 * q.q0 + p.q2 * q.q3 - p.q3 * q.q2,
                p.q0 * q.q2 + p.q2 * q.q0 + p.q3 * q.q1 - p.q1 * q.q3,
                p.q0 * q.q3 + p.q3 * q.q0 + p.q1 * q.q2 - p.q2 * q.q1,
            )
        if isinstance(other, (FieldScalar, int, Fraction)):
            s = _fs(other)
            return Quaternion(self.q0 * s, self.q1 * s, self.q2 * s, self.q3 * s)
        return NotImplemented

    def __rmul__(self, other: ScalarLike) -> "Quaternion":
        if isinstance(other, (FieldScalar, int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other: ScalarLike) -> "Quaternion":
        if isinstance(other, (FieldScalar, int, Fraction)):
            s = _fs(other)
            return Quaternion(self.q0 / s, self.q1 / s, self.q2 / s, self.q3 / s)
        return NotImplemented

    def conj(self) -> "Quaternion":
        return Quaternion(self.q0, -self.q1, -self.q2, -self.q3)

    def dot(self, other: "Quaternion") -> FieldScalar:
        """Euclidean scalar product, a FieldScalar."""
        return (self.q0 * other.q0 + self.q1 * other.q1 +
                self.q2 * other.q2 + self.q3 * other.q3)

    def norm_sq(self) -> FieldScalar:
        return self.dot(self)

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if n.is_zero():
            raise ZeroDivisionError("zero quaternion has no inverse")
        return self.conj() / n

    # -- identity / ordering ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return (self.q0 == other.q0 and self.q1 == other.q1 and
                self.q2 == other.q2 and self.q3 == other.q3)

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(self.components())
            object.__setattr__(self, "_hash", h)
        return h

    def key(self) -> tuple:
        """Sort key: lexicographic over exact components."""
        return ((self.q0.a, self.q0.b), (self.q1.a, self.q1.b),
                (self.q2.a, self.q2.b), (self.q3.a, self.q3.b))

    def __lt__(self, other: "Quaternion") -> bool:
        return self.key() < other.key()

    # -- formatting --------------------------------------------------------

    def __float__(self):  # pragma: no cover - guard
        raise TypeError("quaternions have no single float value; use floats()")

    def floats(self) -> Tuple[float, float, float, float]:
        return tuple(float(c) for c in self.components())  # type: ignore[return-value]

    def __repr__(self) -> str:
        return f"Quaternion({self.q0!r}, {self.q1!r}, {self.q2!r}, {self.q3!r})"

    def __str__(self) -> str:
        names = ("", "e1", "e2", "e3")
        parts = []
        for comp, name in zip(self.components(), names):
            if comp.is_zero():
                continue
            text = str(comp)
            if name:
                if text == "1":
                    text = name
                elif text == "-1":
                    text = "-" + name
                else:
                    needs_parens = ("+" in text[1:]) or ("-" in text[1:])
                    text = (f"({text}){name}" if needs_parens else f"{text}{name}")
            if parts and not text.startswith("-"):
                parts.append("+" + text)
            else:
                parts.append(text)
        return "".join(parts) if parts else "0"

    def json_obj(self) -> list:
        return [str(c) for c in self.components()]


ZERO_Q = Quaternion(0, 0, 0, 0)
ONE_Q = Quaternion(1, 0, 0, 0)
E1 = Quaternion(0, 1, 0, 0)
E2 = Quaternion(0, 0, 1, 0)
E3 = Quaternion(0, 0, 0, 1)


def reflect(alpha: Quaternion, v: Quaternion) -> Quaternion:
    """Reflect v in the hyperplane orthogonal to alpha (quaternionic form)."""
    nsq = alpha.norm_sq()
    if nsq.is_zero():
        raise ValueError("cannot reflect in a zero vector")
    return -(alpha * v.conj() * alpha) / nsq


def reflect_classical(alpha: Quaternion, v: Quaternion) -> Quaternion:
    """Reflect v in the hyperplane orthogonal to alpha (linear-algebra form)."""
    nsq = alpha.norm_sq()
    if nsq.is_zero():
        raise ValueError("cannot reflect in a zero vector")
    t = (v.dot(alpha) * 2) / nsq
    return v - alpha * t
