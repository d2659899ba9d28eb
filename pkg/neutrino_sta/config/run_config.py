"""Run configuration for the verification suite, loaded from one JSON document"""

import os
from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from neutrino_sta.calculus.fieldmap import GridSpec
from neutrino_sta.config.settings import Settings
from neutrino_sta.exceptions import ConfigError


class RunConfig(BaseModel):
    model_config = ConfigDict(extra='forbid')

    tolerance_abs: float = Field(default=Settings.TOLERANCE_ABS, gt=0.0)
    tolerance_rel: float = Field(default=Settings.TOLERANCE_REL, gt=0.0)
    wavelength: float = Field(default=Settings.DEFAULT_WAVELENGTH, gt=0.0)
    grid_count: int = Field(default=Settings.DEFAULT_GRID_COUNT, ge=1)
    hertz_grid_count: int = Field(default=Settings.HERTZ_GRID_COUNT, ge=1)
    step_divisor: int = Field(default=Settings.DEFAULT_STEP_DIVISOR, ge=2)
    seed: int = Settings.DEFAULT_SEED
    property_samples: int = Field(default=Settings.PROPERTY_SAMPLES, ge=1)
    coupling: float = Field(default=Settings.DEFAULT_COUPLING, gt=0.0)
    boost_speed: float = Field(default=Settings.DEFAULT_BOOST_SPEED, gt=-1.0, lt=1.0)
    workers: int = Field(default=Settings.SWEEP_WORKERS, ge=1)
    output_dir: str = Settings.DEFAULT_OUTPUT_DIR
    unit_system: Literal['natural', 'gaussian-symbolic'] = Settings.DEFAULT_UNIT_SYSTEM

    @classmethod
    def load(cls, path: Optional[str] = None, **overrides: Any) -> 'RunConfig':
        """File values, then non-None overrides, then the output-dir environment variable"""
        data = {}
        if path:
            try:
                data = cls.model_validate_json(Path(path).read_text(encoding='utf-8')).model_dump(exclude_unset=True)
            except OSError as e:
                raise ConfigError(f"Cannot read config file {path}: {e}") from e
            except ValidationError as e:
                raise ConfigError(f"Invalid config file {path}: {e}") from e

        data.update({key: value for key, value in overrides.items() if value is not None})
        env_dir = os.environ.get(Settings.OUTPUT_DIR_ENV)
        if env_dir:
            data['output_dir'] = env_dir
        try:
            return cls(**data)
        except ValidationError as e:
            raise ConfigError(f"Invalid configuration: {e}") from e

    def grid(self, count: Optional[int] = None) -> GridSpec:
        count = count or self.grid_count
        return GridSpec(
            extents=(self.wavelength,) * 4,
            counts=(count,) * 4,
            h=self.wavelength / self.step_divisor,
        )

    @property
    def unit_prefactor(self) -> float:
        return Settings.UNIT_PREFACTORS[self.unit_system]
