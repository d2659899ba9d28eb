"""Configuration settings for the spacetime-algebra toolkit"""

import math


class Settings:
    """Application settings"""

    # Identity-suite tolerances
    TOLERANCE_ABS = 1e-10
    TOLERANCE_REL = 1e-8
    # Observed finite-difference order that separates discretisation error
    # from a failing identity
    MIN_CONVERGENCE_ORDER = 1.8
    # Residuals below this are float noise: no order is estimated from them,
    # and a convergence study that never rises above it is exact
    RESIDUAL_FLOOR = 1e-12

    # Default sampling grid: one wavelength per axis, h = wavelength / 64
    DEFAULT_WAVELENGTH = 2.0 * math.pi
    DEFAULT_GRID_COUNT = 9
    DEFAULT_STEP_DIVISOR = 64
    # Step of pointwise precision checks (Richardson differences)
    PRECISION_STEP = 1e-3
    # Pointwise agreement of the free and monopole residuals
    EQUIVALENCE_TOLERANCE = 1e-9
    # Hertz-chain sweeps: a unit cell around the origin, where the exponential
    # profile stays O(1), with Richardson steps through the nested derivatives
    HERTZ_GRID_COUNT = 4
    HERTZ_EXTENT = 1.0
    HERTZ_STEP = 2e-2
    # Hertz residuals relative to the largest differentiated field sample
    HERTZ_TOLERANCE_REL = 1e-5
    # Time offset used to confirm that a field is static
    STATIC_PROBE_DT = 0.37

    # Concurrent grid sweeps
    SWEEP_WORKERS = 4
    SWEEP_CHUNK = 2048

    # Randomised property checks
    DEFAULT_SEED = 20111
    PROPERTY_SAMPLES = 1000

    # Bivector exponential series
    EXP_SERIES_TERMS = 30
    EXP_SERIES_TOLERANCE = 1e-15

    # Field construction: curl E = CURL_FACTOR * g * E is the factor the
    # monopole equation implies; the printed force-free equation carries 2
    CURL_FACTOR = 1.0
    STATED_CURL_FACTOR = 2.0
    DEFAULT_BELTRAMI_AMPLITUDES = (1.0, 1.0, 1.0)

    # Precision checks of the identity suite
    FORCE_FREE_TOLERANCE = 1e-6
    DIVERGENCE_TOLERANCE = 1e-8
    AUTO_FORCE_WITNESS_BOUND = 1e-3
    ALGEBRA_REL_TOLERANCE = 1e-12
    WELL_CONDITIONED_RATIO = 1e-3

    # Spectrum defaults
    FINE_STRUCTURE = 7.2973525693e-3  # CODATA 2018
    DEFAULT_N = 3.0
    DEFAULT_N_SET = [0, 1, 2]
    DEFAULT_SUM_BOUND_EV = 0.28

    # Unit conversion table (eV based)
    HBAR_C_EV_M = 1.973269804e-7
    HBAR_EV_S = 6.582119569e-16

    # Gaussian-unit prefactors of the spinor field map and source term;
    # set to 1 in natural-unit runs
    UNIT_SYSTEMS = ['natural', 'gaussian-symbolic']
    DEFAULT_UNIT_SYSTEM = 'natural'
    # Overall factor 2 pi e hbar / m c of the spinor field map per unit system
    UNIT_PREFACTORS = {'natural': 1.0, 'gaussian-symbolic': 2.0 * math.pi}
    DEFAULT_COUPLING = 1.0
    DEFAULT_BOOST_SPEED = 0.6

    # Output
    SCHEMA_VERSION = 1
    DEFAULT_OUTPUT_DIR = 'neutrino_sta_output'
    OUTPUT_DIR_ENV = 'NEUTRINO_STA_OUTPUT_DIR'
    LOG_FILE = 'neutrino_sta.log'
    FIELD_CSV_HEADERS = ['t', 'x', 'y', 'z'] + [f'blade_{i}' for i in range(16)]
    SPECTRUM_CSV_HEADERS = ['n', 'mass_eV']
    SUITE_HEADERS = ['Check', 'Group', 'Status', 'Expected', 'Max abs', 'Tolerance', 'Order', 'Detail']
    SUITE_SHEET_NAME = 'Checks'
    SPECTRUM_SHEET_NAME = 'Spectrum'
    SUITE_REPORT_NAME = 'suite_report.json'
    SUITE_WORKBOOK_NAME = 'suite_report.xlsx'
    SPECTRUM_REPORT_NAME = 'spectrum.json'

    # MCP
    SERVER_NAME = 'neutrino-sta'
    SERVER_VERSION = '1.0.0'

    # Published values, kept for comparison
    PUBLISHED_SQUARED_DIFFERENCES_EV2 = {
        (0, 1): 4.4e-5,
        (1, 2): 6.86e-3,
        (0, 2): 16.46e-3,
    }
    PUBLISHED_MASSES_EV = {0: 0.12, 1: 0.10, 2: 0.056}
    FITTED_MASS_SCALE_EV = 1.97e-4
    FITTED_MASS_SCALE_TOLERANCE_EV = 2e-6
    MASS_TOLERANCE_EV = 0.005
    DEGENERACY_RATIO = 2.2
    LIGHTEST_MASS_BOUND_EV = 0.056 * 1.05
