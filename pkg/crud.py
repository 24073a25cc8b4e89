# файл crud.py

from sqlalchemy.orm import Session

import models
import schemas


def create_sieve_run(db: Session, run: schemas.SieveRunCreate):
    """
    Stores a finished sieve run and its survivors.

    Args:
        db (Session): The database session.
        run (schemas.SieveRunCreate): The run, including the survivor list.

    Returns:
        models.SieveRun: The stored run.
    """

    db_run = models.SieveRun(
        lo=run.lo,
        hi=run.hi,
        two_power_cap=run.two_power_cap,
        survivor_count=len(run.survivors),
        elapsed_seconds=run.elapsed_seconds,
    )
    db_run.candidates = [models.Candidate(n=n, two_power_cap=run.two_power_cap) for n in run.survivors]
    db.add(db_run)
    db.commit()
    db.refresh(db_run)
    return db_run


def get_sieve_runs(db: Session, skip: int = 0, limit: int = 100):
    """
    Retrieves stored runs ordered by their lower end, with optional pagination.

    Args:
        db (Session): The database session.
        skip (int): The number of results to skip (for pagination).
        limit (int): The maximum number of results to return.

    Returns:
        List[models.SieveRun]: The runs.
    """

    return db.query(models.SieveRun).order_by(models.SieveRun.lo, models.SieveRun.id).offset(skip).limit(limit).all()


def get_candidates(db: Session, skip: int = 0, limit: int = 100):
    """
    Retrieves stored survivors in ascending order, with optional pagination.

    Args:
        db (Session): The database session.
        skip (int): The number of results to skip (for pagination).
        limit (int): The maximum number of results to return.

    Returns:
        List[models.Candidate]: The candidates.
    """

    return db.query(models.Candidate).order_by(models.Candidate.n, models.Candidate.id).offset(skip).limit(limit).all()


def sieve_frontier(db: Session, two_power_cap: int) -> schemas.SieveFrontier:
    """
    Computes how far the stored runs cover the odd integers from 3 upward.

    Only runs with a cap of at least two_power_cap count. A survivor is reported only if every
    such run whose range contains it also lists it.

    Args:
        db (Session): The database session.
        two_power_cap (int): The smallest acceptable cap.

    Returns:
        schemas.SieveFrontier: The covered prefix and its first candidate.
    """

    runs = (
        db.query(models.SieveRun)
        .filter(models.SieveRun.two_power_cap >= two_power_cap)
        .order_by(models.SieveRun.lo)
        .all()
    )
    covered = 1
    for run in runs:
        if run.lo > covered + 2:
            break
        covered = max(covered, run.hi)

    survivors = {run.id: {c.n for c in run.candidates} for run in runs}
    standing = sorted(
        n
        for run in runs
        for n in survivors[run.id]
        if n <= covered and all(n in survivors[other.id] for other in runs if other.lo <= n <= other.hi)
    )
    return schemas.SieveFrontier(
        two_power_cap=two_power_cap,
        covered_through=covered,
        first_candidate=standing[0] if standing else None,
    )
