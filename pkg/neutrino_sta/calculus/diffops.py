"""Finite-difference differential operators on FieldMaps.

All derivatives are central differences of an analytic evaluator. With
``richardson=True`` the steps h and h/2 are combined, raising the order from
two to four.
"""

from typing import FrozenSet

import numpy as np

from neutrino_sta.algebra.multivector import GAMMA, Multivector, contract_left, gp, wedge
from neutrino_sta.algebra.spacetime import SpacetimePoint, relative_vector
from neutrino_sta.calculus.fieldmap import FieldMap
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import GradeError, TimeDependentFieldError

# Minkowski signs of the wave operator: box = d_t^2 - d_x^2 - d_y^2 - d_z^2
_BOX_SIGNS = (1.0, -1.0, -1.0, -1.0)


def _check_step(h: float) -> None:
    if not h > 0:
        raise ValueError(f"Finite-difference step must be positive, got {h}")


def _richardson(estimate, h: float, richardson: bool):
    if not richardson:
        return estimate(h)
    return (4.0 * estimate(h / 2.0) - estimate(h)) / 3.0


def partial_mu(f: FieldMap, mu: int, p: SpacetimePoint, h: float,
               richardson: bool = False) -> Multivector:
    """Coordinate derivative d f / d x^mu"""
    _check_step(h)

    def central(step: float) -> Multivector:
        return (f(p.shifted(mu, step)) - f(p.shifted(mu, -step))) / (2.0 * step)

    return _richardson(central, h, richardson)


def second_partial(f: FieldMap, mu: int, p: SpacetimePoint, h: float,
                   richardson: bool = False, center: Multivector = None) -> Multivector:
    """Second coordinate derivative by the three-point stencil"""
    _check_step(h)
    center = f(p) if center is None else center

    def stencil(step: float) -> Multivector:
        return (f(p.shifted(mu, step)) - 2.0 * center + f(p.shifted(mu, -step))) / step ** 2

    return _richardson(stencil, h, richardson)


def dirac(f: FieldMap, p: SpacetimePoint, h: float, richardson: bool = False) -> Multivector:
    """Dirac operator gamma^mu d_mu"""
    return sum(gp(GAMMA[mu], partial_mu(f, mu, p, h, richardson)) for mu in range(4))


def _homogeneous_grade(f: FieldMap) -> int:
    if len(f.grades) != 1:
        raise GradeError(f"Field '{f.name}' must be homogeneous, declared grades {sorted(f.grades)}")
    return next(iter(f.grades))


def d_wedge(f: FieldMap, p: SpacetimePoint, h: float, richardson: bool = False) -> Multivector:
    """Exterior derivative gamma^mu ^ d_mu f"""
    _homogeneous_grade(f)
    return sum(wedge(GAMMA[mu], partial_mu(f, mu, p, h, richardson)) for mu in range(4))


def codiff(f: FieldMap, p: SpacetimePoint, h: float, richardson: bool = False) -> Multivector:
    """Codifferential -gamma^mu _| d_mu f, signed so that dirac = d - delta"""
    _homogeneous_grade(f)
    return -sum(contract_left(GAMMA[mu], partial_mu(f, mu, p, h, richardson)) for mu in range(4))


def box(f: FieldMap, p: SpacetimePoint, h: float, richardson: bool = False) -> Multivector:
    """Wave operator from second differences, not nested first differences"""
    center = f(p)
    return sum(
        sign * second_partial(f, mu, p, h, richardson, center)
        for mu, sign in enumerate(_BOX_SIGNS)
    )


def _shift_grades(grades: FrozenSet[int], offsets) -> FrozenSet[int]:
    return frozenset(g + o for g in grades for o in offsets if 0 <= g + o <= 4)


def dirac_field(f: FieldMap, h: float, richardson: bool = False) -> FieldMap:
    return FieldMap(lambda p: dirac(f, p, h, richardson), f"dirac({f.name})",
                    _shift_grades(f.grades, (-1, 1)), f.static)


def d_field(f: FieldMap, h: float, richardson: bool = False) -> FieldMap:
    grade = _homogeneous_grade(f)
    return FieldMap(lambda p: d_wedge(f, p, h, richardson), f"d({f.name})",
                    frozenset({grade + 1}), f.static)


def codiff_field(f: FieldMap, h: float, richardson: bool = False) -> FieldMap:
    grade = _homogeneous_grade(f)
    return FieldMap(lambda p: codiff(f, p, h, richardson), f"delta({f.name})",
                    frozenset({grade - 1}), f.static)


def box_field(f: FieldMap, h: float, richardson: bool = False) -> FieldMap:
    return FieldMap(lambda p: box(f, p, h, richardson), f"box({f.name})", f.grades, f.static)


def negated(f: FieldMap) -> FieldMap:
    return FieldMap(lambda p: -f(p), f"-{f.name}", f.grades, f.static)


def assert_static(f: FieldMap, p: SpacetimePoint, dt: float = Settings.STATIC_PROBE_DT,
                  tol: float = Settings.TOLERANCE_ABS) -> None:
    """Compare two time slices; raise when the field changes between them"""
    now, later = f(p), f(p.shifted(0, dt))
    scale = 1.0 + float(np.max(np.abs(now.coeffs), initial=0.0))
    if np.max(np.abs(now.coeffs - later.coeffs), initial=0.0) > tol * scale:
        raise TimeDependentFieldError(f"Field '{f.name}' changes between t and t + {dt}")


def _vector_partial(v: FieldMap, axis: int, p: SpacetimePoint, h: float, richardson: bool) -> np.ndarray:
    return relative_vector(partial_mu(v, axis, p, h, richardson))


def div3(v: FieldMap, p: SpacetimePoint, h: float, richardson: bool = False,
         static: bool = False) -> np.ndarray:
    """Divergence of a relative vector field"""
    if static:
        assert_static(v, p)
    return sum(_vector_partial(v, i + 1, p, h, richardson)[..., i] for i in range(3))


def curl3(v: FieldMap, p: SpacetimePoint, h: float, richardson: bool = False,
          static: bool = False) -> np.ndarray:
    """Curl of a relative vector field, components along sigma_1..sigma_3"""
    if static:
        assert_static(v, p)
    d = [_vector_partial(v, i + 1, p, h, richardson) for i in range(3)]
    return np.stack([
        d[1][..., 2] - d[2][..., 1],
        d[2][..., 0] - d[0][..., 2],
        d[0][..., 1] - d[1][..., 0],
    ], axis=-1)


def lap3(v: FieldMap, p: SpacetimePoint, h: float, richardson: bool = False,
         static: bool = False) -> np.ndarray:
    """Componentwise 3-D Laplacian of a relative vector field"""
    if static:
        assert_static(v, p)
    center = v(p)
    return sum(relative_vector(second_partial(v, i + 1, p, h, richardson, center)) for i in range(3))


__all__ = [
    'partial_mu', 'second_partial', 'dirac', 'd_wedge', 'codiff', 'box',
    'dirac_field', 'd_field', 'codiff_field', 'box_field', 'negated', 'assert_static',
    'div3', 'curl3', 'lap3',
]
