"""Exception types shared by every module."""


class QuantumnessError(ValueError):
    """Base class for all library errors."""


class InvalidInputError(QuantumnessError):
    """A parameter is outside its documented domain."""


class InvalidStateError(QuantumnessError):
    """A matrix fails the density-matrix contract (Hermitian, trace one, PSD)."""


class NotPSDError(QuantumnessError):
    """A matrix required to be positive semidefinite has a significantly negative eigenvalue."""


class InternalConsistencyError(QuantumnessError):
    """Two redundant computation paths that must agree disagreed beyond tolerance."""


class ConfigError(QuantumnessError):
    """A scenario configuration file could not be parsed or validated."""
