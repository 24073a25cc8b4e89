# файл models.py

from datetime import datetime, timezone

from sqlalchemy import BigInteger, Column, DateTime, Float, ForeignKey, Integer
from sqlalchemy.orm import relationship

from database import Base


def utc_now() -> datetime:
    return datetime.now(timezone.utc)


class SieveRun(Base):
    """
    A finished run of the bulk length-3 sieve.

    Attributes:
        id (int): Unique identifier for the run, serves as the primary key.
        lo (int): First odd integer sieved.
        hi (int): Last odd integer sieved.
        two_power_cap (int): Exponent cap J of the run.
        survivor_count (int): Number of survivors found.
        elapsed_seconds (float): Wall-clock duration.
        created_at (datetime): When the run was stored.
        candidates (relationship): The survivors of the run.
    """

    __tablename__ = "sieve_runs"

    id = Column(Integer, primary_key=True, index=True)
    lo = Column(BigInteger, index=True)
    hi = Column(BigInteger, index=True)
    two_power_cap = Column(Integer, index=True)
    survivor_count = Column(Integer, default=0)
    elapsed_seconds = Column(Float, default=0.0)
    created_at = Column(DateTime(timezone=True), default=utc_now)
    candidates = relationship("Candidate", back_populates="run", cascade="all, delete-orphan")


class Candidate(Base):
    """
    An odd integer with no length-2 witness within the cap of its run.

    Attributes:
        id (int): Unique identifier, serves as the primary key.
        run_id (int): The run that found it, foreign key to sieve_runs.
        n (int): The candidate.
        two_power_cap (int): Exponent cap J under which it survived.
    """

    __tablename__ = "candidates"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("sieve_runs.id"))
    n = Column(BigInteger, index=True)
    two_power_cap = Column(Integer)
    run = relationship("SieveRun", back_populates="candidates")
