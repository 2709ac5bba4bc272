"""Exact-arithmetic toolkit for the F4 reflection group and its polytopes.

Quaternionic construction of the order-1152 reflection group of type F4,
its extension by the diagram symmetry, and the subgroups of types B4 and
B3 x A1 / B3 x C2 that sit inside it.  On top of the group layer the
package builds vertex orbits of the sixteen Wythoff polytopes, their face
and cell inventories, branchings of the vertex sets under the subgroups,
and exact dual polytopes with cell geometry in the field Q(sqrt2).
"""

from .scalar import FieldScalar, parse_scalar
from .quat import Quaternion

__all__ = ["FieldScalar", "parse_scalar", "Quaternion"]

__version__ = "0.1.0"
