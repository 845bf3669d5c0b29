"""Substitution of the second and third subsystem bases into the first.

When the bases of different subsystems are declared identical (up to sign
and a swap of the two in-plane axes), the joint algebra collapses: every
generator becomes a signed vector of one shared copy and cross-subsystem
factors genuinely anticommute where the single-copy algebra says so.  An
:class:`IdentityMap` records such a declaration for the in-plane axes 1 and
2 of subsystems 2 (letter f) and 3 (letter g); subsystem 1 keeps its own
basis.

Under any such map, the four-line single-particle system reduces line by
line to a signed basis vector, the four reduced values always multiply to
-1, and for every signed in-plane target x some map produces the column
(x, x, x, -x).  The module also provides the commutator witness showing why
identified bases cannot commute, and the orientation reading that compares
the three subsystems' plane orientations induced by a map.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .constraints import AXIS_INDEX, ObservableProduct, VectorAssignment
from .ga import EXACT, Multivector, basis_vector

IN_PLANE_AXES = (1, 2)


@dataclass(frozen=True, order=True)
class SignedAxisVector:
    """A signed in-plane basis vector of the shared copy, e.g. ``-e1``."""

    sign: int
    axis: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.axis not in IN_PLANE_AXES:
            raise ValueError(f"axis {self.axis} outside the identified plane")

    @classmethod
    def parse(cls, label: str) -> "SignedAxisVector":
        text = label.replace("−", "-").strip()
        sign = 1
        if text.startswith(("-", "+")):
            sign = -1 if text[0] == "-" else 1
            text = text[1:]
        if len(text) == 2 and text[0] in "efg" and text[1] in "12":
            return cls(sign, int(text[1]))
        raise ValueError(f"cannot parse signed in-plane vector {label!r}")

    @property
    def label(self) -> str:
        return f"{'-' if self.sign < 0 else ''}e{self.axis}"

    def to_multivector(self) -> Multivector:
        return basis_vector(self.axis).scale(self.sign)

    def __neg__(self) -> "SignedAxisVector":
        return SignedAxisVector(-self.sign, self.axis)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class IdentityMap:
    """Signed-permutation images of the f and g in-plane generators.

    Per subsystem the two images use distinct axes, so each substitution is
    an orthonormality-preserving signed permutation of the plane.
    """

    f1: SignedAxisVector
    f2: SignedAxisVector
    g1: SignedAxisVector
    g2: SignedAxisVector

    def __post_init__(self):
        if self.f1.axis == self.f2.axis:
            raise ValueError("f images must use distinct axes")
        if self.g1.axis == self.g2.axis:
            raise ValueError("g images must use distinct axes")

    @classmethod
    def parse(cls, mapping: dict) -> "IdentityMap":
        return cls(
            SignedAxisVector.parse(mapping["f1"]),
            SignedAxisVector.parse(mapping["f2"]),
            SignedAxisVector.parse(mapping["g1"]),
            SignedAxisVector.parse(mapping["g2"]),
        )

    def image(self, system: int, axis: int) -> SignedAxisVector:
        """Where the in-plane generator of a subsystem lands in the shared copy."""
        if axis not in IN_PLANE_AXES:
            raise ValueError(f"axis {axis} outside the identified plane")
        if system == 1:
            return SignedAxisVector(1, axis)
        if system == 2:
            return self.f1 if axis == 1 else self.f2
        if system == 3:
            return self.g1 if axis == 1 else self.g2
        raise ValueError(f"system index {system} out of range 1..3")

    def handedness(self, system: int) -> int:
        """Sign of the induced plane orientation: permutation parity times
        the product of the image signs.  +1 means the substituted axis-order
        bivector equals +e12, -1 means it equals -e12."""
        first = self.image(system, 1)
        second = self.image(system, 2)
        permutation = 1 if first.axis == 1 else -1
        return permutation * first.sign * second.sign

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    def as_dict(self) -> dict:
        return {
            "f1": self.f1.label,
            "f2": self.f2.label,
            "g1": self.g1.label,
            "g2": self.g2.label,
        }

    @classmethod
    def from_json(cls, text: str) -> "IdentityMap":
        return cls.parse(json.loads(text))


def _signed_permutations():
    for axes in ((1, 2), (2, 1)):
        for s1, s2 in itertools.product((1, -1), repeat=2):
            yield SignedAxisVector(s1, axes[0]), SignedAxisVector(s2, axes[1])


def all_identity_maps() -> tuple:
    """All 64 valid maps, in a fixed lexicographic order."""
    return tuple(
        IdentityMap(f1, f2, g1, g2)
        for f1, f2 in _signed_permutations()
        for g1, g2 in _signed_permutations()
    )


#: f = g = e verbatim; the column pattern has its sign on the second line.
UNIFORM_MAP = IdentityMap(
    SignedAxisVector(1, 1),
    SignedAxisVector(1, 2),
    SignedAxisVector(1, 1),
    SignedAxisVector(1, 2),
)

#: f1 negated, everything else aligned; gives the column (e1, e1, e1, -e1).
NEGATED_F1_MAP = IdentityMap(
    SignedAxisVector(-1, 1),
    SignedAxisVector(1, 2),
    SignedAxisVector(1, 1),
    SignedAxisVector(1, 2),
)


#: The four product lines, in the fixed (xyy, yxy, yyx, xxx) order.
COLUMN_LINES = tuple(
    ObservableProduct.parse(label)
    for label in ("x1*y2*y3", "y1*x2*y3", "y1*y2*x3", "x1*x2*x3")
)


def substitute_and_reduce(
    imap: IdentityMap, line: ObservableProduct, signs: VectorAssignment | None = None
) -> Multivector:
    """Map each factor's value into the shared copy and reduce the word.

    Within-line factors now multiply in one algebra, so distinct-axis images
    anticommute; nothing commutes by fiat.  Axis z has no image: the
    identification covers only the plane of axes 1 and 2.
    """
    if signs is None:
        signs = VectorAssignment.all_positive(3)
    result = Multivector.scalar(1, EXACT)
    for factor in line.factors:
        if factor.axis == "z":
            raise ValueError("axis z does not occur in the identified plane")
        image = imap.image(factor.system, AXIS_INDEX[factor.axis])
        result = result * image.to_multivector().scale(signs.sign(factor))
    return result


@dataclass(frozen=True)
class ColumnResult:
    """The four reduced line values, in (xyy, yxy, yyx, xxx) order."""

    entries: tuple
    product: Multivector

    def labels(self) -> tuple:
        return tuple(str(entry) for entry in self.entries)


def bell_ghz_column(imap: IdentityMap, signs: VectorAssignment | None = None) -> ColumnResult:
    entries = tuple(
        substitute_and_reduce(imap, line, signs) for line in COLUMN_LINES
    )
    product = Multivector.scalar(1, EXACT)
    for entry in entries:
        product = product * entry
    return ColumnResult(entries, product)


def find_identity_maps(target: SignedAxisVector) -> tuple:
    """All maps whose column is (x, x, x, -x) for the given target x.

    Exhausts the 64 signed-permutation maps; the result is nonempty for
    every signed in-plane target.
    """
    wanted = (
        target.to_multivector(),
        target.to_multivector(),
        target.to_multivector(),
        (-target).to_multivector(),
    )
    found = []
    for imap in all_identity_maps():
        if bell_ghz_column(imap).entries == wanted:
            found.append(imap)
    return tuple(found)


def check_a3_incompatibility(i: int, j: int) -> Multivector:
    """Commutator witness for identified bases.

    With the second basis identified with the first, the commutator of e_i
    with the bivector e_i e_j is 2 e_j, never zero, so a generator cannot
    commute with the identified pair it now overlaps.
    """
    if i == j:
        raise ValueError("axes must be distinct")
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ValueError("axes must lie in 1..3")
    ei = basis_vector(i)
    bivector = ei * basis_vector(j)
    return ei * bivector - bivector * ei


# -- orientation reading ----------------------------------------------------


@dataclass(frozen=True)
class OrientationReading:
    """The three subsystems' plane orientations induced by a map.

    Reading rule: subsystem 1 is assigned the orientation e1*e2.  Walking
    the column lines top-down, subsystem 2's generators are determined in
    the order (axis 2, axis 1), so its orientation is the image of f2*f1.
    The lines fix no determination order for subsystem 3 (its axis-2
    generator sits in the first two lines), so its orientation is the image
    of g1*g2 in axis order.
    """

    orientations: tuple

    @property
    def first(self) -> Multivector:
        return self.orientations[0]

    def identical(self, a: int, b: int) -> bool:
        return self.orientations[a - 1] == self.orientations[b - 1]

    def verdicts(self) -> dict:
        return {
            "1-2": self.identical(1, 2),
            "1-3": self.identical(1, 3),
            "2-3": self.identical(2, 3),
        }


def orientation_reading(imap: IdentityMap) -> OrientationReading:
    base = basis_vector(1) * basis_vector(2)
    second = (
        imap.image(2, 2).to_multivector() * imap.image(2, 1).to_multivector()
    )
    third = (
        imap.image(3, 1).to_multivector() * imap.image(3, 2).to_multivector()
    )
    return OrientationReading((base, second, third))
