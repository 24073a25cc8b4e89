# файл config.py

import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from errors import UsageError

load_dotenv()  # picks up a local .env file if one exists

# Largest bound for which the first twelve primes form a proven Miller-Rabin witness set
MAX_DETERMINISTIC_LIMIT = 3317044064679887385961981


class Settings(BaseModel):
    """
    Runtime configuration shared by every module.

    Attributes:
        deterministic_limit (int): Below this bound primality verdicts are deterministic.
        prp_rounds (int): Strong probable-prime rounds used above the deterministic bound.
        bfs_margin (int): Default exploration margin of the BFS oracle.
        two_power_cap (int): Default exponent cap J for single length-2 queries.
        sieve_two_power_cap (int): Default exponent cap J for the bulk length-3 sieve.
        rho_budget (int): Iteration budget of one Pollard-rho split.
        trial_division_bound (int): Trial division runs up to this bound before rho.
        prime_power_bound (int): Search bound for even length-2 forms.
        sieve_table_limit (int): Largest dense prime-power table the bulk sieve builds.
        sieve_chunk (int): Odd integers per sieve work item.
        oracle_term_limit (int): Largest term sent to the BFS oracle by the restricted length routine.
        output_format (str): Default table format (text, csv or json).
        threads (int): Worker threads for the bulk sieve.
        database_url (str): SQLAlchemy URL of the sieve-run ledger.
        log_level (str): Logging level name.
    """

    deterministic_limit: int = Field(2 ** 64, gt=0)
    prp_rounds: int = Field(64, gt=0)
    bfs_margin: int = Field(4, gt=0)
    two_power_cap: int = Field(64, gt=0)
    sieve_two_power_cap: int = Field(40, gt=0)
    rho_budget: int = Field(10 ** 7, gt=0)
    trial_division_bound: int = Field(10 ** 4, gt=0)
    prime_power_bound: int = Field(10 ** 5, gt=0)
    sieve_table_limit: int = Field(2 ** 25, gt=0)
    sieve_chunk: int = Field(2 ** 18, gt=0)
    oracle_term_limit: int = Field(2000, gt=0)
    output_format: Literal["text", "csv", "json"] = "text"
    threads: int = Field(4, ge=1)
    database_url: str = "sqlite:///gadic.db"
    log_level: str = "WARNING"

    @field_validator("deterministic_limit")
    @classmethod
    def check_deterministic_limit(cls, value: int) -> int:
        if value > MAX_DETERMINISTIC_LIMIT:
            raise ValueError(f"deterministic_limit must not exceed {MAX_DETERMINISTIC_LIMIT}")
        return value


# environment variable -> Settings field
ENVIRONMENT = {
    "GADIC_DETERMINISTIC_LIMIT": "deterministic_limit",
    "GADIC_PRP_ROUNDS": "prp_rounds",
    "GADIC_BFS_MARGIN": "bfs_margin",
    "GADIC_TWO_POWER_CAP": "two_power_cap",
    "GADIC_SIEVE_TWO_POWER_CAP": "sieve_two_power_cap",
    "GADIC_RHO_BUDGET": "rho_budget",
    "GADIC_TRIAL_DIVISION_BOUND": "trial_division_bound",
    "GADIC_PRIME_POWER_BOUND": "prime_power_bound",
    "GADIC_SIEVE_TABLE_LIMIT": "sieve_table_limit",
    "GADIC_SIEVE_CHUNK": "sieve_chunk",
    "GADIC_ORACLE_TERM_LIMIT": "oracle_term_limit",
    "GADIC_OUTPUT_FORMAT": "output_format",
    "GADIC_THREADS": "threads",
    "DATABASE_URL": "database_url",
    "GADIC_LOG_LEVEL": "log_level",
}


def load_settings(environ=None) -> Settings:
    """
    Builds settings from environment variables.

    Args:
        environ (Mapping[str, str], optional): Source of variables. Defaults to os.environ.

    Raises:
        UsageError: If a variable holds an invalid value.

    Returns:
        Settings: The validated configuration.
    """
    environ = os.environ if environ is None else environ
    values = {field: environ[name] for name, field in ENVIRONMENT.items() if environ.get(name)}
    try:
        return Settings(**values)
    except ValidationError as exc:
        raise UsageError(f"invalid configuration: {exc.errors()[0]['msg']}") from exc


@lru_cache
def get_settings() -> Settings:
    """Process-wide settings, read once."""
    return load_settings()
