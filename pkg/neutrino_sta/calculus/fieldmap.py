"""Analytic fields and sampling grids"""

from dataclasses import dataclass, field
from typing import Callable, FrozenSet, Optional, Tuple

import numpy as np

from neutrino_sta.algebra.multivector import Multivector, grades_present
from neutrino_sta.algebra.spacetime import SpacetimePoint
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import DegenerateGridError, NonFiniteEvaluationError

ALL_GRADES = frozenset(range(5))


@dataclass(frozen=True)
class FieldMap:
    """Pure map from spacetime points to multivectors.

    Evaluators must be deterministic and side-effect free: grid sweeps call
    them concurrently and in any order.
    """

    evaluator: Callable[[SpacetimePoint], Multivector]
    name: str = 'field'
    grades: FrozenSet[int] = ALL_GRADES
    static: bool = False

    def __call__(self, p: SpacetimePoint) -> Multivector:
        value = self.evaluator(p)
        if not np.all(np.isfinite(value.coeffs)):
            raise NonFiniteEvaluationError(f"Field '{self.name}' is not finite at the requested points")
        return value

    def renamed(self, name: str) -> 'FieldMap':
        return FieldMap(self.evaluator, name, self.grades, self.static)

    def grades_consistent(self, p: SpacetimePoint, tol: float = Settings.TOLERANCE_ABS) -> bool:
        """Whether samples at p only carry the declared grades"""
        return grades_present(self(p), tol) <= self.grades


def constant_field(value: Multivector, name: str = 'constant') -> FieldMap:
    grades = grades_present(value) or frozenset({0})
    return FieldMap(lambda p: value + Multivector.zeros(p.shape), name, grades, static=True)


@dataclass(frozen=True)
class GridSpec:
    """Sample lattice: counts[mu] points spread over extents[mu] from origin.

    Sampling is periodic (no end point), so a lattice over one wavelength
    does not repeat its first plane. ``h`` is the finite-difference step.
    """

    origin: SpacetimePoint = field(default_factory=SpacetimePoint)
    extents: Tuple[float, float, float, float] = (Settings.DEFAULT_WAVELENGTH,) * 4
    counts: Tuple[int, int, int, int] = (Settings.DEFAULT_GRID_COUNT,) * 4
    h: float = Settings.DEFAULT_WAVELENGTH / Settings.DEFAULT_STEP_DIVISOR

    def __post_init__(self):
        if len(self.extents) != 4 or len(self.counts) != 4:
            raise DegenerateGridError("Grid needs four extents and four counts")
        if any(int(n) < 1 for n in self.counts):
            raise DegenerateGridError(f"Grid counts must be positive, got {self.counts}")
        if any(e < 0 or not np.isfinite(e) for e in self.extents):
            raise DegenerateGridError(f"Grid extents must be finite and non-negative, got {self.extents}")
        if not (self.h > 0 and np.isfinite(self.h)):
            raise DegenerateGridError(f"Finite-difference step must be positive, got {self.h}")

    @classmethod
    def default(cls, wavelength: float = Settings.DEFAULT_WAVELENGTH,
                count: int = Settings.DEFAULT_GRID_COUNT,
                origin: Optional[SpacetimePoint] = None) -> 'GridSpec':
        return cls(
            origin=origin or SpacetimePoint(),
            extents=(wavelength,) * 4,
            counts=(count,) * 4,
            h=wavelength / Settings.DEFAULT_STEP_DIVISOR,
        )

    @property
    def size(self) -> int:
        return int(np.prod(self.counts))

    def with_step(self, h: float) -> 'GridSpec':
        return GridSpec(self.origin, self.extents, self.counts, h)

    def points(self) -> SpacetimePoint:
        """All lattice points as one batched SpacetimePoint"""
        axes = [
            start + extent * np.arange(int(n)) / int(n)
            for start, extent, n in zip(self.origin.as_tuple(), self.extents, self.counts)
        ]
        mesh = np.meshgrid(*axes, indexing='ij')
        return SpacetimePoint(*(m.ravel() for m in mesh))

    def chunks(self, size: int = Settings.SWEEP_CHUNK):
        """Lattice points split into batches of at most ``size`` points"""
        pts = self.points()
        total = self.size
        for start in range(0, total, size):
            stop = min(start + size, total)
            yield SpacetimePoint(*(c[start:stop] for c in pts.as_tuple()))
