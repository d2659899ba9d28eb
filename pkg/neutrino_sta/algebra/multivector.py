"""Multivector value type and the algebra operations of Cl(1,3)"""

import math
from typing import Tuple, Union

import numpy as np

from neutrino_sta.algebra import blades
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import GradeError

Scalar = Union[float, np.ndarray]


class Multivector:
    """Immutable element of Cl(1,3), optionally batched over leading axes.

    ``coeffs`` has shape ``(..., 16)`` in the order of ``blades.BLADES``.
    Leading axes index sample points so a whole grid is one value.
    """

    __slots__ = ('_coeffs',)
    __array_ufunc__ = None

    def __init__(self, coeffs):
        arr = np.array(coeffs, dtype=float)
        if arr.ndim == 0 or arr.shape[-1] != blades.DIMENSION:
            raise ValueError(f"Expected trailing axis of length 16, got shape {arr.shape}")
        arr.setflags(write=False)
        self._coeffs = arr

    @classmethod
    def from_scalar(cls, value: Scalar) -> 'Multivector':
        value = np.asarray(value, dtype=float)
        coeffs = np.zeros(value.shape + (blades.DIMENSION,))
        coeffs[..., 0] = value
        return cls(coeffs)

    @classmethod
    def from_blade(cls, name: str, value: Scalar = 1.0) -> 'Multivector':
        value = np.asarray(value, dtype=float)
        coeffs = np.zeros(value.shape + (blades.DIMENSION,))
        coeffs[..., blades.BLADE_NAMES.index(name)] = value
        return cls(coeffs)

    @classmethod
    def zeros(cls, shape: Tuple[int, ...] = ()) -> 'Multivector':
        return cls(np.zeros(tuple(shape) + (blades.DIMENSION,)))

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def shape(self) -> Tuple[int, ...]:
        return self._coeffs.shape[:-1]

    @property
    def scalar(self) -> Scalar:
        return self._coeffs[..., 0]

    @property
    def pseudoscalar(self) -> Scalar:
        return self._coeffs[..., 15]

    def __getitem__(self, index) -> 'Multivector':
        if not isinstance(index, tuple):
            index = (index,)
        return Multivector(self._coeffs[index + (slice(None),)])

    def __add__(self, other) -> 'Multivector':
        if isinstance(other, Multivector):
            return Multivector(self._coeffs + other._coeffs)
        return self + Multivector.from_scalar(other)

    __radd__ = __add__

    def __sub__(self, other) -> 'Multivector':
        return self + (-other)

    def __rsub__(self, other) -> 'Multivector':
        return (-self) + other

    def __neg__(self) -> 'Multivector':
        return Multivector(-self._coeffs)

    def __mul__(self, other) -> 'Multivector':
        if isinstance(other, Multivector):
            return gp(self, other)
        return Multivector(self._coeffs * _factor(other))

    def __rmul__(self, other) -> 'Multivector':
        return Multivector(self._coeffs * _factor(other))

    def __truediv__(self, other) -> 'Multivector':
        return Multivector(self._coeffs / _factor(other))

    def __xor__(self, other: 'Multivector') -> 'Multivector':
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return np.array_equal(self._coeffs, other._coeffs)

    __hash__ = None

    def isclose(self, other: 'Multivector', atol: float = Settings.TOLERANCE_ABS,
                rtol: float = Settings.TOLERANCE_REL) -> bool:
        other = other if isinstance(other, Multivector) else Multivector.from_scalar(other)
        return bool(np.allclose(self._coeffs, other._coeffs, atol=atol, rtol=rtol))

    def __repr__(self) -> str:
        if self.shape:
            return f"Multivector(shape={self.shape})"
        terms = [f"{c:+.6g}*{name}" for c, name in zip(self._coeffs, blades.BLADE_NAMES) if c != 0.0]
        return f"Multivector({' '.join(terms) or '0'})"


def _factor(value) -> np.ndarray:
    return np.asarray(value, dtype=float)[..., None]


def _apply(a: Multivector, b: Multivector, table) -> Multivector:
    gather, weight = table
    return Multivector(np.einsum('...i,...ki,ki->...k', a.coeffs, b.coeffs[..., gather], weight))


def gp(a: Multivector, b: Multivector) -> Multivector:
    """Geometric product"""
    return _apply(a, b, blades.GEOMETRIC)


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Outer product, grade(ab, r+s) extended bilinearly over grades"""
    return _apply(a, b, blades.WEDGE)


def contract_left(a: Multivector, b: Multivector) -> Multivector:
    """Left contraction, grade(ab, s-r) and zero when s < r"""
    return _apply(a, b, blades.LEFT_CONTRACTION)


def inner(a: Multivector, b: Multivector) -> Multivector:
    """Grade-wise inner product: sum over grade pairs of grade(a_r b_s, |r-s|)"""
    return _apply(a, b, blades.INNER)


def grade(a: Multivector, k: int) -> Multivector:
    """Projection onto grade k"""
    if not 0 <= k <= 4:
        raise GradeError(f"Grade must lie in 0..4, got {k}")
    return Multivector(a.coeffs * (blades.GRADES == k))


def even(a: Multivector) -> Multivector:
    return Multivector(a.coeffs * (blades.GRADES % 2 == 0))


def odd(a: Multivector) -> Multivector:
    return Multivector(a.coeffs * (blades.GRADES % 2 == 1))


def reverse(a: Multivector) -> Multivector:
    """Reversion: grade-k part scaled by (-1)^(k(k-1)/2)"""
    return Multivector(a.coeffs * blades.REVERSE_SIGNS)


def hodge(a: Multivector) -> Multivector:
    """Hodge star, reverse(a) * gamma5"""
    return gp(reverse(a), G5)


def scalar_product(a: Multivector, b: Multivector) -> Scalar:
    """Scalar part of the geometric product"""
    return gp(a, b).scalar


def norm(a: Multivector) -> Scalar:
    """Euclidean norm of the coefficient vector (not the metric norm)"""
    return np.linalg.norm(a.coeffs, axis=-1)


def grades_present(a: Multivector, tol: float = Settings.TOLERANCE_ABS) -> frozenset:
    """Grades carrying a coefficient above tol anywhere in the batch"""
    magnitude = np.abs(a.coeffs).reshape(-1, blades.DIMENSION).max(axis=0)
    return frozenset(int(k) for k in range(5) if np.any(magnitude[blades.GRADES == k] > tol))


def is_pure_grade(a: Multivector, k: int, tol: float = Settings.TOLERANCE_ABS) -> bool:
    rest = a.coeffs * (blades.GRADES != k)
    scale = 1.0 + float(np.max(np.abs(a.coeffs), initial=0.0))
    return bool(np.all(np.abs(rest) <= tol * scale))


def exp_g5(chi: Scalar) -> Multivector:
    """cos(chi) + gamma5 sin(chi), the duality rotation"""
    chi = np.asarray(chi, dtype=float)
    coeffs = np.zeros(chi.shape + (blades.DIMENSION,))
    coeffs[..., 0] = np.cos(chi)
    coeffs[..., 15] = np.sin(chi)
    return Multivector(coeffs)


def exp_bivector(b2: Multivector) -> Multivector:
    """Exponential of a bivector.

    Closed form when b2 squares to a scalar; otherwise a scaled Taylor series
    truncated once terms drop below ``Settings.EXP_SERIES_TOLERANCE`` relative
    to the running sum, followed by repeated squaring.
    """
    if not is_pure_grade(b2, 2):
        raise GradeError("exp_bivector requires a pure bivector")
    square = gp(b2, b2)
    s, p = square.scalar, square.pseudoscalar
    if np.all(np.abs(p) <= 1e-14 * (1.0 + np.abs(s))):
        theta = np.sqrt(np.abs(s))
        circular = s < 0
        cos_part = np.where(circular, np.cos(theta), np.cosh(theta))
        sin_over = np.where(circular, np.sinc(theta / math.pi), _sinhc(theta))
        return cos_part * ONE + b2 * sin_over
    return _exp_series(b2)


def _sinhc(theta: np.ndarray) -> np.ndarray:
    safe = np.where(theta > 1e-8, theta, 1.0)
    return np.where(theta > 1e-8, np.sinh(safe) / safe, 1.0 + theta ** 2 / 6.0)


def _exp_series(x: Multivector) -> Multivector:
    size = float(np.max(norm(x), initial=0.0))
    squarings = max(0, int(math.ceil(math.log2(size))) + 1) if size > 0 else 0
    x = x / 2.0 ** squarings
    total = ONE + Multivector.zeros(x.shape)
    term = total
    for order in range(1, Settings.EXP_SERIES_TERMS + 1):
        term = gp(term, x) / order
        total = total + term
        if np.max(norm(term), initial=0.0) <= Settings.EXP_SERIES_TOLERANCE * np.max(norm(total)):
            break
    for _ in range(squarings):
        total = gp(total, total)
    return total


def basis_vector(mu: int) -> Multivector:
    """Upper-index generator gamma^mu"""
    return Multivector.from_blade(blades.blade_name(1 << mu))


ONE = Multivector.from_scalar(1.0)
G0, G1, G2, G3 = (basis_vector(mu) for mu in range(4))
GAMMA = (G0, G1, G2, G3)
GAMMA_LOWER = (G0, -G1, -G2, -G3)
G5 = Multivector.from_blade('g0g1g2g3')
# Relative (Pauli) vectors of the gamma^0 frame: sigma_i = gamma^0 gamma^i = gamma_i gamma_0
SIGMA = tuple(gp(G0, GAMMA[i]) for i in (1, 2, 3))


def lower(mu: int) -> Multivector:
    """Lower-index generator gamma_mu"""
    return GAMMA_LOWER[mu]
