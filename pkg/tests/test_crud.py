from datetime import datetime, timedelta, timezone

import pytest
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

import crud
import schemas
from database import Base


@pytest.fixture
def db():
    engine = create_engine("sqlite://")
    Base.metadata.create_all(bind=engine)
    session = sessionmaker(autocommit=False, autoflush=False, bind=engine)()
    try:
        yield session
    finally:
        session.close()


def store(db, lo, hi, cap, survivors=()):
    return crud.create_sieve_run(db, schemas.SieveRunCreate(
        lo=lo, hi=hi, two_power_cap=cap, elapsed_seconds=0.5, survivors=list(survivors),
    ))


def test_create_sieve_run(db):
    """Test storing a run with its survivors."""
    run = store(db, 3, 2001, 8, [93, 1077])
    assert run.id is not None
    assert run.survivor_count == 2
    assert sorted(c.n for c in run.candidates) == [93, 1077]
    assert all(c.two_power_cap == 8 for c in run.candidates)

    stored = schemas.SieveRun.model_validate(run)
    assert (stored.lo, stored.hi, stored.two_power_cap) == (3, 2001, 8)
    assert stored.created_at is not None
    now = datetime.now(timezone.utc).replace(tzinfo=None)
    assert abs(stored.created_at.replace(tzinfo=None) - now) < timedelta(minutes=5)


def test_get_sieve_runs_ordered_and_paged(db):
    """Test retrieval order and pagination of runs."""
    store(db, 1001, 1999, 40)
    store(db, 3, 999, 40)
    store(db, 2001, 2999, 40)
    assert [run.lo for run in crud.get_sieve_runs(db)] == [3, 1001, 2001]
    assert [run.lo for run in crud.get_sieve_runs(db, skip=1, limit=1)] == [1001]


def test_get_candidates(db):
    """Test that candidates come back in ascending order."""
    store(db, 101, 199, 40, [151, 107])
    store(db, 3, 99, 40, [51])
    assert [c.n for c in crud.get_candidates(db)] == [51, 107, 151]
    stored = schemas.Candidate.model_validate(crud.get_candidates(db, limit=1)[0])
    assert stored.n == 51


def test_frontier_empty(db):
    """Test the frontier with no runs."""
    frontier = crud.sieve_frontier(db, 40)
    assert frontier.covered_through == 1
    assert frontier.first_candidate is None


def test_frontier_contiguous_runs(db):
    """Test that adjacent runs extend the covered prefix and a gap stops it."""
    store(db, 3, 999, 40)
    store(db, 1001, 1999, 64)
    store(db, 2003, 2999, 40)
    assert crud.sieve_frontier(db, 40).covered_through == 1999
    assert crud.sieve_frontier(db, 64).covered_through == 1


def test_frontier_ignores_smaller_caps(db):
    """Test that runs below the requested cap do not count."""
    store(db, 3, 999, 20)
    store(db, 3, 499, 40)
    frontier = crud.sieve_frontier(db, 40)
    assert frontier.covered_through == 499


def test_frontier_candidates(db):
    """Test that a survivor stands only if every covering run lists it."""
    store(db, 3, 99, 40, [51])
    store(db, 3, 99, 64, [])
    store(db, 101, 199, 40, [151])
    store(db, 301, 399, 40, [351])

    frontier = crud.sieve_frontier(db, 40)
    assert frontier.covered_through == 199
    assert frontier.first_candidate == 151

    frontier = crud.sieve_frontier(db, 64)
    assert frontier.covered_through == 99
    assert frontier.first_candidate is None
