"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument is outside the physically meaningful domain."""


class DegenerateStateError(ValueError):
    """An operation produced an all-zero state vector."""


class UndefinedPhaseError(ValueError):
    """Phase of a zero reflection amplitude was requested."""


class ImpossibleConditionError(ValueError):
    """Conditioning on an event of probability zero."""


class ConfigError(ValueError):
    """Invalid or incomplete run configuration; message names the field."""


class SpectrumFormatError(ValueError):
    """Malformed spectrum file; message cites the offending row."""


class FitError(RuntimeError):
    """Nonlinear fit failed to converge; carries diagnostics in the message."""


class FitUnderdeterminedError(FitError):
    """Data cannot constrain the requested fit parameters."""


class DegenerateDataError(FitError):
    """Data has no usable structure (e.g. constant spectrum)."""


class InsufficientStatisticsError(RuntimeError):
    """Monte Carlo run produced no counts to condition on."""
