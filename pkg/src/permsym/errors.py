"""Exception types shared across the package."""


class PermsymError(Exception):
    """Base class for package errors."""


class InputError(PermsymError):
    """Bad user input or violated precondition (CLI exit code 2)."""


class VerificationError(PermsymError):
    """An internal consistency check failed; indicates a bug (CLI exit code 3)."""
