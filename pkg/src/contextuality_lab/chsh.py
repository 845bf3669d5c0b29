"""The coplanar four-direction correlation sweep.

Four measurement directions a, b, a', b' lie in one plane, parametrized by
an angle phi: a and b coincide, a' sits at 2*phi from b' and at phi from
both a and b.  The scalar combination a*b + a*b' + a'*b - a'*b' is bounded
by 2 when the four symbols take values in {+1, -1}; that bound is checked
here by enumerating all 16 assignments.  When the symbols instead take the
direction vectors themselves as values and multiply geometrically, the
combination becomes an even multivector whose scalar magnitude traces the
curve F(phi) = |1 + 2 cos(phi) - cos(2 phi)|, peaking at 5/2 for
phi = pi/3.  The same curve comes out of matrix mechanics through the
singlet-state correlations, which is the cross-check wired into
:func:`quantum_lhs`.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .ga import APPROX, DEFAULT_TOLERANCE, Multivector
from .quantum import singlet_correlation

CLASSICAL_BOUND = 2.0
VECTOR_BOUND = 2.5

CSV_HEADER = ("phi", "F", "qm_lhs", "classical_bound", "qm_bound")


def _plane_vector(angle: float) -> Multivector:
    """Unit vector e1*cos(angle) + e3*sin(angle) as a float multivector."""
    return Multivector(
        (0.0, math.cos(angle), 0.0, 0.0, math.sin(angle), 0.0, 0.0, 0.0), APPROX
    )


_FIRST_AXIS = _plane_vector(0.0)


@dataclass(frozen=True)
class CoplanarConfig:
    """The four coplanar directions for one sweep angle."""

    phi: float
    a: Multivector
    b: Multivector
    a_prime: Multivector
    b_prime: Multivector

    @classmethod
    def at(cls, phi: float) -> "CoplanarConfig":
        a = _plane_vector(phi)
        return cls(
            phi=phi,
            a=a,
            b=a,
            a_prime=_plane_vector(2.0 * phi),
            b_prime=_FIRST_AXIS,
        )

    def direction_components(self, name: str) -> tuple:
        """The (x, y, z) float components of one direction."""
        mv = getattr(self, name)
        return (mv.coeffs[1], mv.coeffs[2], mv.coeffs[4])


def classical_gamma_enumeration() -> tuple:
    """All 16 sign assignments with their combination value; each is +-2."""
    rows = []
    for a, ap, b, bp in itertools.product((1, -1), repeat=4):
        gamma = a * b + a * bp + ap * b - ap * bp
        rows.append(((a, ap, b, bp), gamma))
    return tuple(rows)


def gamma_vector(config: CoplanarConfig) -> Multivector:
    """The vector-valued combination a*b + a*b' + a'*b - a'*b'.

    All four summands are geometric products of in-plane unit vectors, so
    the result is even: a scalar plus an e13 bivector component.
    """
    return (
        config.a * config.b
        + config.a * config.b_prime
        + config.a_prime * config.b
        - config.a_prime * config.b_prime
    )


def F(phi: float) -> float:
    """Magnitude of the scalar part of the vector-valued combination."""
    return abs(gamma_vector(CoplanarConfig.at(phi)).scalar_part())


@dataclass(frozen=True)
class ScanResult:
    argmax: float
    maximum: float
    steps: int


def scan_F(steps: int, start: float = 0.0, end: float = math.pi) -> ScanResult:
    """Maximum of F over an inclusive grid of ``steps`` points."""
    if steps < 3:
        raise ValueError("grid needs at least 3 points")
    if not 0.0 <= start < end <= math.pi + 1e-9:
        raise ValueError(f"bad angle range [{start}, {end}]")
    spacing = (end - start) / (steps - 1)
    best_phi = start
    best_value = -math.inf
    for k in range(steps):
        phi = start + k * spacing
        value = F(phi)
        if value > best_value:
            best_value = value
            best_phi = phi
    return ScanResult(best_phi, best_value, steps)


def quantum_lhs(phi: float) -> float:
    """The same four-term combination evaluated through singlet-state
    matrix correlations of the config's directions."""
    config = CoplanarConfig.at(phi)
    a = config.direction_components("a")
    b = config.direction_components("b")
    ap = config.direction_components("a_prime")
    bp = config.direction_components("b_prime")
    return abs(
        singlet_correlation(a, b)
        + singlet_correlation(a, bp)
        + singlet_correlation(ap, b)
        - singlet_correlation(ap, bp)
    )


def non_collinearity_witness(phi: float, tolerance: float = DEFAULT_TOLERANCE) -> bool:
    """For interior angles, neither b + b' nor b - b' vanishes, which is
    what blocks the factored scalar argument for the value 2 bound."""
    config = CoplanarConfig.at(phi)
    plus = config.b + config.b_prime
    minus = config.b - config.b_prime
    return not plus.is_zero(tolerance) and not minus.is_zero(tolerance)


def csv_rows(start: float, end: float, steps: int):
    """Yield (phi, F, qm_lhs, classical_bound, qm_bound) over the grid."""
    if steps < 3:
        raise ValueError("grid needs at least 3 points")
    spacing = (end - start) / (steps - 1)
    for k in range(steps):
        phi = start + k * spacing
        yield (phi, F(phi), quantum_lhs(phi), CLASSICAL_BOUND, VECTOR_BOUND)
