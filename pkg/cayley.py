# файл cayley.py

"""
Breadth-first word lengths on Cayley graphs of the integers with power-closed generating sets.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from config import Settings, get_settings
from errors import InvalidArgument, OracleError
from primes import prime_power_mask, probably_prime
from schemas import GeneratingSetDescriptor, LengthTable

logger = logging.getLogger(__name__)


def _powers(a: int, bound: int) -> List[int]:
    if a == 1:
        return [1]
    result, power = [], 1
    while power <= bound:
        result.append(power)
        power *= a
    return result


def enumerate_generators(descriptor: GeneratingSetDescriptor, magnitude_bound: int) -> List[int]:
    """
    Positive elements of the generating set up to a magnitude bound.

    Args:
        descriptor (GeneratingSetDescriptor): The generating set.
        magnitude_bound (int): Largest generator to return, at least 1.

    Raises:
        InvalidArgument: If the bound is below 1, the descriptor is empty or lists a non-prime
            as a prime.

    Returns:
        List[int]: Sorted, deduplicated generators; 1 is always present.
    """
    if magnitude_bound < 1:
        raise InvalidArgument(f"magnitude bound must be at least 1, got {magnitude_bound}")

    if descriptor.kind == "base":
        return _powers(descriptor.base, magnitude_bound)

    if descriptor.kind == "list":
        if not descriptor.elements:
            raise InvalidArgument("empty generating set")
        found = set()
        for a in descriptor.elements:
            found.update(_powers(a, magnitude_bound))
        return sorted(found)

    if descriptor.primes is not None:
        if not descriptor.primes:
            raise InvalidArgument("empty generating set")
        bad = [p for p in descriptor.primes if not probably_prime(p)]
        if bad:
            raise InvalidArgument(f"not prime: {bad}")
        found = {1}
        for p in descriptor.primes:
            found.update(_powers(p, magnitude_bound))
        return sorted(found)

    mask = prime_power_mask(magnitude_bound)
    for p in descriptor.excluded:
        for power in _powers(p, magnitude_bound)[1:]:
            mask[power] = False
    return np.flatnonzero(mask).tolist()


def bfs_lengths(
    descriptor: GeneratingSetDescriptor,
    window: Tuple[int, int],
    margin: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> LengthTable:
    """
    Word lengths of every integer in a window, by level-synchronous breadth-first search from 0.

    States are restricted to |x| <= margin * max(|lo|, |hi|) and only generators up to that
    radius are used, so lengths are exact for the restricted graph and upper bounds for the
    full one.

    Args:
        descriptor (GeneratingSetDescriptor): The generating set.
        window (Tuple[int, int]): The interval [lo, hi]; must contain 0.
        margin (int, optional): Exploration multiplier; defaults to ``settings.bfs_margin``.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If the window does not contain 0 or margin < 1.
        OracleError: If some integer of the window was not reached.

    Returns:
        LengthTable: Lengths for the window.
    """
    settings = settings or get_settings()
    margin = settings.bfs_margin if margin is None else margin
    lo, hi = window
    if not lo <= 0 <= hi:
        raise InvalidArgument(f"window [{lo}, {hi}] must contain 0")
    if margin < 1:
        raise InvalidArgument(f"margin must be at least 1, got {margin}")

    radius = max(margin * max(abs(lo), abs(hi)), 1)
    generators = enumerate_generators(descriptor, radius)
    size = 2 * radius + 1

    # index i holds the state i - radius
    distances = np.full(size, -1, dtype=np.int32)
    frontier = np.zeros(size, dtype=bool)
    frontier[radius] = True
    distances[radius] = 0
    level = 0
    while frontier.any():
        reached = np.zeros(size, dtype=bool)
        for step in generators:
            if step >= size:
                break
            reached[step:] |= frontier[:-step]
            reached[:-step] |= frontier[step:]
        reached &= distances < 0
        level += 1
        distances[reached] = level
        frontier = reached
        logger.debug("%s level %d: %d new states", descriptor, level, int(reached.sum()))

    window_distances = distances[lo + radius:hi + radius + 1].copy()
    missing = np.flatnonzero(window_distances < 0)
    if missing.size:
        raise OracleError(
            f"{missing.size} integers of [{lo}, {hi}] were not reached with margin {margin}, "
            f"first {lo + int(missing[0])}"
        )
    return LengthTable(lo=lo, hi=hi, margin=margin, distances=window_distances)


def oracle_lambda(
    descriptor: GeneratingSetDescriptor,
    k: int,
    search_bound: int,
    margin: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Optional[int]:
    """
    Smallest positive n <= search_bound whose oracle length is exactly k.

    Args:
        descriptor (GeneratingSetDescriptor): The generating set.
        k (int): The target length, at least 1.
        search_bound (int): Largest n searched, at least 1.
        margin (int, optional): Exploration multiplier.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If k < 1 or search_bound < 1.
        OracleError: As bfs_lengths.

    Returns:
        Optional[int]: The integer, or None when no n in range has length k.
    """
    if k < 1 or search_bound < 1:
        raise InvalidArgument(f"oracle_lambda needs k >= 1 and a positive bound, got k={k}, bound={search_bound}")
    table = bfs_lengths(descriptor, (0, search_bound), margin, settings)
    hits = np.flatnonzero(table.distances[1:] == k)
    return int(hits[0]) + 1 if hits.size else None


def ball_sizes(table: LengthTable) -> List[int]:
    """
    Number of window integers at each distance.

    Args:
        table (LengthTable): A BFS result.

    Returns:
        List[int]: Entry d counts the window integers at distance exactly d.
    """
    return np.bincount(table.distances).tolist()
