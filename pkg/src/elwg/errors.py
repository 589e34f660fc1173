"""Exception types raised across the package.

Every failure mode that callers are expected to handle gets its own class;
plain ValueError is reserved for programming errors (bad argument types,
malformed arrays) that no caller should catch.
"""


class ElwgError(Exception):
    """Base class for all package-specific errors."""


class OutOfBandError(ElwgError):
    """Wavelength outside a material's validated dispersion band."""


class DomainError(ElwgError):
    """Physical parameter outside its admissible range (e.g. beta not in (0,1))."""


class NoGuidedModeError(ElwgError):
    """Eigensolve found no mode above the substrate light line."""


class ConvergenceFailureError(ElwgError):
    """Sparse eigensolver did not converge."""


class InsufficientSamplesError(ElwgError):
    """Not enough frequency samples for a finite-difference derivative."""


class AmbiguousTrackingError(ElwgError):
    """Mode tracking between adjacent frequencies found no overlap above threshold."""


class BandTruncatedError(ElwgError):
    """A coupling band is not fully contained in the frequency grid."""


class SupportViolationError(ElwgError):
    """Transverse beam density overlaps a material region."""


class QuadratureFailureError(ElwgError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class SingularPointError(ElwgError):
    """Stationary-phase kernel evaluated at its singular point."""


class DegeneratePhaseMatchingError(ElwgError):
    """Waveform delta-kernel root with vanishing walk-off Jacobian."""


class GridMismatchError(ElwgError):
    """Waveform overlap could not resample onto a common grid."""


class UnderResolvedCombError(ElwgError):
    """Frequency grid too coarse to resolve resonator linewidths."""


class DegenerateDispersionError(ElwgError):
    """Mode-count estimate undefined because n_g equals n_eff."""


class ConfigError(ElwgError):
    """Run configuration failed validation; message names the offending field."""


class CacheCorruptError(ElwgError):
    """A cache entry could not be deserialized."""
