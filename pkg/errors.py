# файл errors.py


class GadicError(Exception):
    """
    Base error of the package.

    Attributes:
        detail (str): Human-readable description printed by the CLI.
        exit_code (int): Process exit status the CLI returns for this error.
    """

    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class UsageError(GadicError):
    """Malformed command line or configuration."""

    exit_code = 1


class InvalidArgument(GadicError, ValueError):
    """An operation was called outside its precondition."""

    exit_code = 1


class ComputationError(GadicError):
    """A computation could not finish."""

    exit_code = 2


class OracleError(ComputationError):
    """The BFS oracle left part of its window unreached."""


class FactorizationError(ComputationError):
    """Pollard rho ran out of its iteration budget."""


class GoldbachError(ComputationError):
    """No Goldbach decomposition was found."""


class SelfCheckError(ComputationError):
    """A closed form disagreed with the digit expansion."""
