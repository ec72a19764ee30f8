"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An operation was called with arguments outside its contract
    (shape mismatch, rank out of range, bad threshold)."""


class InputError(ValueError):
    """Data handed to an operation is unusable: non-finite entries,
    labels out of range."""


class ConfigError(ValueError):
    """A run configuration is invalid or internally inconsistent."""
