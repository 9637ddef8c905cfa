"""Exception types shared across the package."""


class HybridWaveError(Exception):
    """Base class for all package errors."""


class ConfigurationError(HybridWaveError, ValueError):
    """Bad or inconsistent configuration input."""


class DomainError(HybridWaveError, ValueError):
    """Physical or numerical argument outside its valid domain."""


class DataError(HybridWaveError, ValueError):
    """Malformed data file (site tables, traces, records)."""


class NumericalError(HybridWaveError, ArithmeticError):
    """Numerical failure (singular system, non-finite result)."""


class BudgetExhausted(HybridWaveError):
    """Raised internally when an optimizer's evaluation budget is used up."""
