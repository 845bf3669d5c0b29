"""Exact arithmetic in the geometric algebra of Euclidean 3-space.

The algebra is spanned by eight basis blades indexed by bitmasks 0..7: bit i
of a mask is set when the basis vector e(i+1) divides the blade.  Products of
blades reduce through the orthonormality rules (a repeated factor squares to
1, swapping two distinct factors flips the sign), so every element is a
linear combination of the canonical blades

    1, e1, e2, e3, e12, e13, e23, e123.

Coefficients are either exact rationals (``fractions.Fraction``) or floats.
A multivector is homogeneous in one of the two modes and the mode never mixes
inside an operation: the exact mode makes identity checking decidable, the
float mode exists for trigonometric sweeps.  Multivectors are immutable
values and every operation is a pure function.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Union

Coefficient = Union[Fraction, float]

EXACT = "exact"
APPROX = "approx"
MODES = (EXACT, APPROX)

DEFAULT_TOLERANCE = 1e-12

BLADE_COUNT = 8

#: Blade names per mask; ascending axis order inside a blade is canonical.
BLADE_NAMES = ("1", "e1", "e2", "e12", "e3", "e13", "e23", "e123")
_NAME_TO_MASK = {name: mask for mask, name in enumerate(BLADE_NAMES)}

#: Masks sorted by grade then by axes, the order used for rendering.
DISPLAY_ORDER = (0, 1, 2, 4, 3, 5, 6, 7)


def blade_grade(mask: int) -> int:
    """Number of basis-vector factors of the blade (0 for the scalar)."""
    return bin(mask).count("1")


def blade_product(mask_a: int, mask_b: int) -> tuple[int, int]:
    """Product of two canonical blades as ``(sign, result_mask)``.

    The result blade is the symmetric difference of the factor sets.  The
    sign counts the transpositions needed to sort the concatenation of the
    two ascending factor lists: each bit of ``mask_a`` above a bit of
    ``mask_b`` contributes one swap.  Repeated factors then cancel with a
    positive square.
    """
    swaps = 0
    a = mask_a >> 1
    while a:
        swaps += bin(a & mask_b).count("1")
        a >>= 1
    sign = -1 if swaps & 1 else 1
    return sign, mask_a ^ mask_b


#: Precomputed 8 x 8 table of blade products: CAYLEY[a][b] = (sign, mask).
CAYLEY = tuple(
    tuple(blade_product(a, b) for b in range(BLADE_COUNT)) for a in range(BLADE_COUNT)
)


def _zero(mode: str) -> Coefficient:
    return Fraction(0) if mode == EXACT else 0.0


def _coerce(value, mode: str) -> Coefficient:
    """Check and normalize a raw coefficient for the given mode."""
    if mode == EXACT:
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise ValueError(f"exact mode needs int or Fraction coefficients, got {value!r}")
        return Fraction(value)
    if isinstance(value, Fraction):
        raise ValueError("approx mode does not accept Fraction coefficients")
    return float(value)


@dataclass(frozen=True, slots=True)
class Multivector:
    """A dense multivector: one coefficient per canonical blade."""

    coeffs: tuple
    mode: str

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown coefficient mode {self.mode!r}")
        if len(self.coeffs) != BLADE_COUNT:
            raise ValueError("a multivector carries exactly 8 blade coefficients")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, mode: str = EXACT) -> "Multivector":
        z = _zero(mode)
        return cls((z,) * BLADE_COUNT, mode)

    @classmethod
    def scalar(cls, value, mode: str = EXACT) -> "Multivector":
        return cls.from_blades({0: value}, mode)

    @classmethod
    def from_blades(cls, blade_coeffs: dict, mode: str = EXACT) -> "Multivector":
        """Build a multivector from a mask -> coefficient mapping."""
        out = [_zero(mode)] * BLADE_COUNT
        for mask, value in blade_coeffs.items():
            if not 0 <= mask < BLADE_COUNT:
                raise ValueError(f"blade mask {mask} out of range 0..7")
            out[mask] = out[mask] + _coerce(value, mode)
        return cls(tuple(out), mode)

    # -- mode plumbing ------------------------------------------------

    def _require_same_mode(self, other: "Multivector") -> None:
        if self.mode != other.mode:
            raise ValueError(f"mixed coefficient modes: {self.mode} vs {other.mode}")

    # -- linear structure ---------------------------------------------

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        self._require_same_mode(other)
        return Multivector(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.mode
        )

    def __sub__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Multivector":
        return Multivector(tuple(-a for a in self.coeffs), self.mode)

    def scale(self, factor) -> "Multivector":
        c = _coerce(factor, self.mode)
        return Multivector(tuple(a * c for a in self.coeffs), self.mode)

    # -- geometric product ----------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._require_same_mode(other)
            right = [(j, b) for j, b in enumerate(other.coeffs) if b]
            acc = [_zero(self.mode)] * BLADE_COUNT
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                row = CAYLEY[i]
                for j, b in right:
                    sign, mask = row[j]
                    acc[mask] = acc[mask] + a * b * sign
            return Multivector(tuple(acc), self.mode)
        if isinstance(other, (int, Fraction, float)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, float)):
            return self.scale(other)
        return NotImplemented

    # -- projections ---------------------------------------------------

    def grade_projection(self, grade: int) -> "Multivector":
        """Keep only the blades of the given grade (0..3)."""
        if not 0 <= grade <= 3:
            raise ValueError(f"grade {grade} out of range 0..3")
        z = _zero(self.mode)
        return Multivector(
            tuple(a if blade_grade(m) == grade else z for m, a in enumerate(self.coeffs)),
            self.mode,
        )

    def scalar_part(self) -> Coefficient:
        return self.coeffs[0]

    def coefficient(self, mask: int) -> Coefficient:
        return self.coeffs[mask]

    def grades(self) -> set:
        return {blade_grade(m) for m, a in enumerate(self.coeffs) if a}

    def is_zero(self, tolerance: float | None = None) -> bool:
        if self.mode == EXACT:
            return not any(self.coeffs)
        tol = DEFAULT_TOLERANCE if tolerance is None else tolerance
        return all(abs(a) <= tol for a in self.coeffs)

    # -- comparison -----------------------------------------------------

    def equals(self, other: "Multivector", tolerance: float | None = None) -> bool:
        """Coefficientwise equality; approx mode compares within a tolerance."""
        self._require_same_mode(other)
        if self.mode == EXACT:
            return self.coeffs == other.coeffs
        tol = DEFAULT_TOLERANCE if tolerance is None else tolerance
        return all(abs(a - b) <= tol for a, b in zip(self.coeffs, other.coeffs))

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        return render_multivector(self)

    def __repr__(self) -> str:
        return f"Multivector({render_multivector(self)!r}, mode={self.mode!r})"


def basis_vector(axis: int, mode: str = EXACT) -> Multivector:
    """The grade-1 basis element e1, e2 or e3."""
    if axis not in (1, 2, 3):
        raise ValueError(f"axis index {axis} out of range 1..3")
    return Multivector.from_blades({1 << (axis - 1): 1}, mode)


def pseudoscalar(mode: str = EXACT) -> Multivector:
    """The unit trivector e123."""
    return Multivector.from_blades({7: 1}, mode)


def random_multivector(rng: Random, mode: str = EXACT, span: int = 3) -> Multivector:
    """A multivector with small integer coefficients drawn from ``rng``."""
    values = [rng.randint(-span, span) for _ in range(BLADE_COUNT)]
    if mode == EXACT:
        return Multivector(tuple(Fraction(v) for v in values), EXACT)
    return Multivector(tuple(float(v) for v in values), APPROX)


# -- text format ---------------------------------------------------------

def _format_coefficient(value: Coefficient) -> str:
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return str(value)


def render_multivector(mv: Multivector) -> str:
    """Render as a signed blade sum, e.g. ``1 + 2*e12 - e123``."""
    parts: list[str] = []
    for mask in DISPLAY_ORDER:
        value = mv.coeffs[mask]
        if not value:
            continue
        negative = value < 0
        magnitude = -value if negative else value
        name = BLADE_NAMES[mask]
        if mask == 0:
            body = _format_coefficient(magnitude)
        elif magnitude == 1:
            body = name
        else:
            body = f"{_format_coefficient(magnitude)}*{name}"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)\s*"
    r"(?:(?P<coeff>\d*\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+(?:/\d+)?)\s*\*?\s*)?"
    r"(?P<blade>e1(?:2(?:3)?|3)?|e2(?:3)?|e3|1)?"
)


def parse_multivector(text: str, mode: str = EXACT) -> Multivector:
    """Parse the rendering grammar back into a multivector.

    Accepts ASCII and typographic signs/multiplication dots, integer,
    fractional and (in approx mode) decimal coefficients.
    """
    source = text.replace("−", "-").replace("·", "*").strip()
    if not source:
        raise ValueError("empty multivector literal")
    if source == "0":
        return Multivector.zero(mode)
    blades: dict[int, Coefficient] = {}
    pos = 0
    first = True
    while pos < len(source):
        match = _TERM_RE.match(source, pos)
        if match is None or (match.group("coeff") is None and match.group("blade") is None):
            raise ValueError(f"cannot parse multivector term at {source[pos:]!r}")
        if not first and not match.group("sign"):
            raise ValueError(f"missing sign before term at {source[pos:]!r}")
        first = False
        sign = -1 if match.group("sign") == "-" else 1
        coeff_text = match.group("coeff")
        blade_text = match.group("blade")
        if coeff_text is None:
            value: Coefficient = Fraction(1) if mode == EXACT else 1.0
        elif "/" in coeff_text:
            value = Fraction(coeff_text)
        elif "." in coeff_text or "e" in coeff_text.lower():
            if mode == EXACT:
                raise ValueError(f"decimal coefficient {coeff_text!r} needs approx mode")
            value = float(coeff_text)
        else:
            value = Fraction(coeff_text) if mode == EXACT else float(coeff_text)
        mask = _NAME_TO_MASK[blade_text] if blade_text else 0
        if mode == APPROX and isinstance(value, Fraction):
            value = float(value)
        previous = blades.get(mask, _zero(mode))
        blades[mask] = previous + sign * value
        pos = match.end()
        while pos < len(source) and source[pos] in " \t":
            pos += 1
    return Multivector.from_blades(blades, mode) if mode == EXACT else Multivector(
        tuple(float(blades.get(m, 0.0)) for m in range(BLADE_COUNT)), APPROX
    )
