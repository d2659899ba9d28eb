"""Exception hierarchy for the spacetime-algebra toolkit"""


class NeutrinoStaError(Exception):
    """Base class for every error raised by the package"""


class GradeError(NeutrinoStaError):
    """Operand does not have the grade an operation requires"""


class SingularSpinorError(NeutrinoStaError):
    """psi * reverse(psi) vanishes, so the polar decomposition does not exist"""


class OffShellError(NeutrinoStaError):
    """Frequency, wave number and mass violate the required dispersion relation"""


class MissingInputError(NeutrinoStaError):
    """A residual evaluation was requested without all the inputs it references"""


class DegenerateGridError(NeutrinoStaError):
    """Sampling grid has no usable points or a non-positive step"""


class NonFiniteEvaluationError(NeutrinoStaError):
    """A field evaluator produced NaN or infinity"""


class TimeDependentFieldError(NeutrinoStaError):
    """A static check was requested on a field that depends on time"""


class ProfileMismatchError(NeutrinoStaError):
    """Hertz profile kind is inconsistent with the dispersion branch"""


class InvalidPlaneError(NeutrinoStaError):
    """Bivector selector is not one of the supported spinor planes"""


class NegativeMassError(NeutrinoStaError):
    """Flavour index exceeds N, which would produce a negative mass"""


class DegenerateInputError(NeutrinoStaError):
    """Inputs for which a closed-form expression is undefined"""


class ConfigError(NeutrinoStaError):
    """Invalid run configuration"""
