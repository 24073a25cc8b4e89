import pytest

from config import MAX_DETERMINISTIC_LIMIT, Settings, load_settings
from errors import ComputationError, InvalidArgument, OracleError, UsageError


def test_defaults():
    """Test the default configuration."""
    settings = load_settings({})
    assert settings == Settings()
    assert settings.deterministic_limit == 2 ** 64
    assert settings.bfs_margin == 4
    assert (settings.two_power_cap, settings.sieve_two_power_cap) == (64, 40)
    assert settings.rho_budget == 10 ** 7


def test_environment_overrides():
    """Test reading values from environment variables."""
    settings = load_settings({
        "GADIC_THREADS": "8",
        "GADIC_OUTPUT_FORMAT": "csv",
        "DATABASE_URL": "sqlite://",
        "GADIC_PRP_ROUNDS": "",
    })
    assert settings.threads == 8
    assert settings.output_format == "csv"
    assert settings.database_url == "sqlite://"
    assert settings.prp_rounds == 64


@pytest.mark.parametrize("environ", [
    {"GADIC_THREADS": "0"},
    {"GADIC_BFS_MARGIN": "-1"},
    {"GADIC_OUTPUT_FORMAT": "xml"},
    {"GADIC_RHO_BUDGET": "many"},
    {"GADIC_DETERMINISTIC_LIMIT": str(MAX_DETERMINISTIC_LIMIT + 1)},
])
def test_invalid_environment(environ):
    """Test that invalid values raise a usage error."""
    with pytest.raises(UsageError):
        load_settings(environ)


def test_error_exit_codes():
    """Test the exit status carried by each error class."""
    assert UsageError("x").exit_code == 1
    assert InvalidArgument("x").exit_code == 1
    assert ComputationError("x").exit_code == 2
    assert OracleError("x").exit_code == 2
    assert isinstance(InvalidArgument("x"), ValueError)
    assert OracleError("unreached").detail == "unreached"
