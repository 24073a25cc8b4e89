# файл primes.py

"""
Primality, prime powers, integer roots, factorization and prime enumeration.
"""

import logging
import math
import random
from collections import Counter
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

import gmpy2
import numpy as np

from config import Settings, get_settings
from errors import FactorizationError, InvalidArgument
from schemas import PrimalityStatus, PrimalityVerdict, PrimePowerWitness

logger = logging.getLogger(__name__)

# Miller-Rabin with these bases is deterministic below 3317044064679887385961981
WITNESS_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _strong_prp_all(n: int, bases) -> bool:
    return all(gmpy2.is_strong_prp(n, a) for a in bases)


def _random_bases(n: int, count: int) -> List[int]:
    # seeded by n so repeated runs agree
    rng = random.Random(n)
    return [rng.randrange(2, n - 1) for _ in range(count)]


def _classify(n: int, settings: Settings) -> Tuple[PrimalityStatus, str]:
    if n < 2:
        return PrimalityStatus.composite, "below 2"
    for p in WITNESS_PRIMES:
        if n == p:
            return PrimalityStatus.prime, "small prime"
        if n % p == 0:
            return PrimalityStatus.composite, f"divisible by {p}"

    if n < settings.deterministic_limit:
        if _strong_prp_all(n, WITNESS_PRIMES):
            return PrimalityStatus.prime, "deterministic Miller-Rabin"
        return PrimalityStatus.composite, "Miller-Rabin witness"

    if gmpy2.is_square(n):
        return PrimalityStatus.composite, "perfect square"
    extra = max(settings.prp_rounds - len(WITNESS_PRIMES), 0)
    if not _strong_prp_all(n, WITNESS_PRIMES + tuple(_random_bases(n, extra))):
        return PrimalityStatus.composite, "Miller-Rabin witness"
    if not gmpy2.is_strong_selfridge_prp(n):
        return PrimalityStatus.composite, "strong Lucas test"
    rounds = len(WITNESS_PRIMES) + extra
    return PrimalityStatus.probable_prime, f"{rounds} strong rounds and a strong Lucas test"


def is_prime(n: int, settings: Optional[Settings] = None) -> PrimalityVerdict:
    """
    Tests n for primality.

    Below ``settings.deterministic_limit`` the verdict is exact. Above it, n is reported as
    probable-prime after ``settings.prp_rounds`` strong rounds and a strong Lucas test.

    Args:
        n (int): A nonnegative integer.
        settings (Settings, optional): Configuration; defaults to the process settings.

    Raises:
        InvalidArgument: If n is negative.

    Returns:
        PrimalityVerdict: composite, prime or probable-prime, with a note.
    """
    if n < 0:
        raise InvalidArgument(f"primality is defined for n >= 0, got {n}")
    status, note = _classify(n, settings or get_settings())
    return PrimalityVerdict(status=status, note=note)


def probably_prime(n: int, settings: Optional[Settings] = None) -> bool:
    """True when is_prime(n) would report prime or probable-prime; negative n gives False."""
    if n < 2:
        return False
    status, _ = _classify(n, settings or get_settings())
    return status is not PrimalityStatus.composite


def integer_kth_root(n: int, k: int) -> int:
    """
    Exact floor of the k-th root of n.

    Args:
        n (int): A nonnegative integer.
        k (int): The root index, at least 1.

    Raises:
        InvalidArgument: If n < 0 or k < 1.

    Returns:
        int: The largest r with r ** k <= n.
    """
    if n < 0 or k < 1:
        raise InvalidArgument(f"integer_kth_root needs n >= 0 and k >= 1, got n={n}, k={k}")
    root, _ = gmpy2.iroot(n, k)
    return int(root)


def prime_power_base(n: int, settings: Optional[Settings] = None) -> Optional[Tuple[int, int]]:
    """
    Finds (p, k) with p prime, k >= 1 and p ** k == n.

    Exponents are tried from floor(log2 n) down, so the first exact root is the primitive
    one and decides the answer.

    Returns:
        Optional[Tuple[int, int]]: The base and exponent, or None.
    """
    if n < 2:
        return None
    if not gmpy2.is_power(n):
        return (n, 1) if probably_prime(n, settings) else None
    for k in range(n.bit_length() - 1, 1, -1):
        root, exact = gmpy2.iroot(n, k)
        if exact:
            root = int(root)
            return (root, k) if probably_prime(root, settings) else None
    return None


def is_prime_power(n: int, settings: Optional[Settings] = None) -> Optional[PrimePowerWitness]:
    """
    Decides whether n is 1 or a prime power.

    Args:
        n (int): A positive integer.
        settings (Settings, optional): Configuration for the primality test.

    Raises:
        InvalidArgument: If n < 1.

    Returns:
        Optional[PrimePowerWitness]: The unit for n = 1, (p, k) for n = p^k, otherwise None.
    """
    if n < 1:
        raise InvalidArgument(f"prime powers are positive, got {n}")
    if n == 1:
        return PrimePowerWitness.unit()
    found = prime_power_base(n, settings)
    if found is None:
        return None
    return PrimePowerWitness(base=found[0], exponent=found[1])


def pollard_rho(n: int, budget: int, rng: random.Random) -> int:
    """
    Pollard's rho with Brent's cycle detection.

    Args:
        n (int): An odd composite that is not a perfect power.
        budget (int): Total iterations allowed across restarts.
        rng (random.Random): Source of the polynomial constants.

    Raises:
        FactorizationError: If no factor is found within the budget.

    Returns:
        int: A nontrivial factor of n.
    """
    used = 0
    while used < budget:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        power = lam = 1
        x = y
        d = 1
        while d == 1 and used < budget:
            if power == lam:
                x = y
                power *= 2
                lam = 0
            y = (y * y + c) % n
            lam += 1
            used += 1
            d = int(gmpy2.gcd(abs(x - y), n))
        if 1 < d < n:
            return d
        logger.debug("rho cycle closed without a factor of %d after %d iterations, restarting", n, used)
    raise FactorizationError(f"Pollard rho exhausted its budget of {budget} iterations on {n}")


def factor(n: int, settings: Optional[Settings] = None) -> Dict[int, int]:
    """
    Complete factorization of n.

    Trial division runs up to ``settings.trial_division_bound``; the cofactor is split by
    Pollard rho, recursively.

    Args:
        n (int): An integer >= 2.
        settings (Settings, optional): Configuration; rho_budget bounds each split.

    Raises:
        InvalidArgument: If n < 2.
        FactorizationError: If a split exceeds the rho budget.

    Returns:
        Dict[int, int]: Prime -> exponent, in ascending order of primes.
    """
    if n < 2:
        raise InvalidArgument(f"factor needs n >= 2, got {n}")
    settings = settings or get_settings()
    factors = Counter()

    for p in small_primes(settings.trial_division_bound):
        if p * p > n:
            break
        while n % p == 0:
            factors[p] += 1
            n //= p

    rng = random.Random(n)
    pending = [(n, 1)]
    while pending:
        m, multiplicity = pending.pop()
        if m == 1:
            continue
        if probably_prime(m, settings):
            factors[m] += multiplicity
            continue
        if gmpy2.is_power(m):
            for k in range(m.bit_length() - 1, 1, -1):
                root, exact = gmpy2.iroot(m, k)
                if exact:
                    pending.append((int(root), multiplicity * k))
                    break
            continue
        d = pollard_rho(m, settings.rho_budget, rng)
        pending.append((d, multiplicity))
        pending.append((m // d, multiplicity))
    return dict(sorted(factors.items()))


def prime_mask(limit: int) -> np.ndarray:
    """Boolean array of length limit + 1, True at the primes."""
    is_prime_arr = np.ones(max(limit + 1, 2), dtype=bool)
    is_prime_arr[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime_arr[p]:
            is_prime_arr[p * p::p] = False
    return is_prime_arr[:limit + 1]


@lru_cache(maxsize=8)
def small_primes(limit: int) -> Tuple[int, ...]:
    """All primes up to limit, cached."""
    return tuple(np.flatnonzero(prime_mask(limit)).tolist())


def primes_up_to(limit: int, segment_size: int = 1 << 20) -> Iterator[int]:
    """
    Streams the primes <= limit in ascending order with an odd-only segmented sieve.

    Args:
        limit (int): Upper bound, at least 2.
        segment_size (int): Odd integers per segment.

    Raises:
        InvalidArgument: If limit < 2.

    Yields:
        int: The next prime.
    """
    if limit < 2:
        raise InvalidArgument(f"primes_up_to needs a bound >= 2, got {limit}")
    base = np.flatnonzero(prime_mask(math.isqrt(limit) + 1))
    yield 2

    span = 2 * segment_size
    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)  # exclusive
        mask = np.ones((high - low + 1) // 2, dtype=bool)
        for p in base[1:]:
            p = int(p)
            if p * p >= high:
                break
            start = max(p * p, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start < high:
                mask[(start - low) // 2::p] = False
        for offset in np.flatnonzero(mask).tolist():
            yield low + 2 * offset
        low = high if high % 2 else high + 1


def prime_power_mask(limit: int) -> np.ndarray:
    """
    Boolean array of length limit + 1, True at 1 and at every prime power.

    Args:
        limit (int): Largest index, at least 1.

    Returns:
        np.ndarray: The membership table.
    """
    mask = prime_mask(limit)
    for p in np.flatnonzero(mask[:math.isqrt(limit) + 1]).tolist():
        power = p * p
        while power <= limit:
            mask[power] = True
            power *= p
    if limit >= 1:
        mask[1] = True
    return mask


@lru_cache(maxsize=8)
def prime_powers_up_to(limit: int) -> Tuple[int, ...]:
    """1 and all prime powers up to limit, ascending, cached."""
    return tuple(np.flatnonzero(prime_power_mask(limit)).tolist())
