# файл database.py

import os
from contextlib import contextmanager

from sqlalchemy import create_engine
from sqlalchemy.orm import declarative_base, sessionmaker

from config import Settings

# only DATABASE_URL is read at import; the other variables are validated when a command runs
DATABASE_URL = os.getenv("DATABASE_URL") or Settings().database_url

engine = create_engine(DATABASE_URL)
SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)

Base = declarative_base()


@contextmanager
def get_db():
    """
    Produces a new SQLAlchemy session from the session factory (SessionLocal).

    Yields:
        A session that is closed when the block exits.
    """

    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()
