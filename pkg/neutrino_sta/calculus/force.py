"""Lorentz force densities of a current in a bivector field"""

from typing import Tuple

import numpy as np

from neutrino_sta.algebra.multivector import G0, Multivector, gp, hodge, inner
from neutrino_sta.algebra.spacetime import relative_vector
from neutrino_sta.calculus.fieldmap import FieldMap


def lorentz_force(current: Multivector, field: Multivector, dual: bool = True) -> Multivector:
    """Force density J . *F, or J . F when ``dual`` is False.

    The dual form is the force a magnetic current feels; with the grade-wise
    inner product a vector current and a bivector field give a vector.
    """
    target = hodge(field) if dual else field
    return inner(current, target)


def relative_current(current: Multivector) -> Tuple[np.ndarray, np.ndarray]:
    """Density and relative flux (rho, j) defined by J gamma^0 = rho + j"""
    split = gp(current, G0)
    return split.scalar, relative_vector(split)


def relative_force(current: Multivector, field: Multivector, dual: bool = True) -> Tuple[np.ndarray, np.ndarray]:
    """Power and relative force of the Lorentz force density in the gamma^0 frame.

    For the dual form these equal j . B and rho B - j x E.
    """
    split = gp(lorentz_force(current, field, dual), G0)
    return split.scalar, relative_vector(split)


def force_field(current: FieldMap, field: FieldMap, dual: bool = True) -> FieldMap:
    return FieldMap(
        lambda p: lorentz_force(current(p), field(p), dual),
        f"force({current.name}, {field.name})",
        frozenset({1}),
        current.static and field.static,
    )
