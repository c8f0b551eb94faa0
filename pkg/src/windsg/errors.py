"""Exception types raised across the windsg pipeline."""


class WindSGError(Exception):
    """Base class for all windsg errors."""


class ConfigError(WindSGError):
    """Bad configuration value or unknown configuration key."""


# --- container / file errors -------------------------------------------------

class MalformedHeader(WindSGError):
    """Container header missing, unparseable, or carrying wrong fields."""


class DimensionMismatch(WindSGError):
    """Declared dimensions do not match the payload length."""


class NonFiniteValue(WindSGError):
    """NaN or infinity found where finite values are required."""


class VersionMismatch(WindSGError):
    """Model file written by an incompatible format version."""


class ChecksumFailure(WindSGError):
    """Model file checksum does not match (truncation or corruption)."""


# --- statistical preconditions ----------------------------------------------

class SingleRun(WindSGError):
    """Operation requires at least two ensemble runs."""


class DegenerateSeries(WindSGError):
    """Time series too short for the requested smoother."""


class TooShort(WindSGError):
    """Time series too short for the autoregressive fit."""


class ZeroVariance(WindSGError):
    """Constant series: autoregressive fit undefined."""


class NonStationaryParams(WindSGError):
    """AR coefficients outside the stationary region."""


class NonPositiveRange(WindSGError):
    """Taper range below the minimum of one grid cell."""


class SingularCovariance(WindSGError):
    """Band covariance numerically singular (condition bound exceeded)."""


class IllConditionedTransform(WindSGError):
    """Spectral transform matrix too ill-conditioned to invert."""


class BadPartition(WindSGError):
    """Wavenumber block partition too fine for the banded coupling."""


class OptimizerFailure(WindSGError):
    """Derivative-free search found no usable point within its budget."""


class NonConvergence(WindSGError):
    """Fit did not converge; details carried per band."""


class TooLargeForDense(WindSGError):
    """Instance exceeds the dense-likelihood safety cap."""


class InvalidModel(WindSGError):
    """Model violates an invariant required for generation."""


class GridMismatch(WindSGError):
    """Operands live on different grids."""


class RangeError(WindSGError):
    """Requested year range falls outside the grid's time axis."""


class NegativeSpeed(WindSGError):
    """Wind speed must be non-negative."""
