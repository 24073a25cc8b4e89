# файл plength.py

"""
Lengths over the generating set of all signed prime powers (1 = p^0 included).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Optional, Tuple

import gmpy2
import numpy as np

from cayley import bfs_lengths
from config import Settings, get_settings
from errors import FactorizationError, GoldbachError, InvalidArgument
from primes import factor, is_prime, prime_power_base, prime_power_mask, prime_powers_up_to, probably_prime
from schemas import GeneratingSetDescriptor, PLengthReport, PrimePowerWitness, SignedTerm, SunCheck, SunConstants, SunReport

logger = logging.getLogger(__name__)

SUN = SunConstants()
SUN_THIRD_MEMBER = 133014037665409087128068994259
SUN_THIRD_MEMBER_FACTORS = {23: 1, 299723: 1, 19295212676140402555471: 1}


def _witness(n: int, settings: Optional[Settings] = None) -> Optional[PrimePowerWitness]:
    if n == 1:
        return PrimePowerWitness.unit()
    found = prime_power_base(n, settings)
    return None if found is None else PrimePowerWitness(base=found[0], exponent=found[1])


def _term(value: int, settings: Optional[Settings] = None) -> SignedTerm:
    power = _witness(abs(value), settings)
    if power is None:
        raise InvalidArgument(f"{abs(value)} is not a prime power")
    return SignedTerm(sign=1 if value > 0 else -1, power=power)


def _two_power_term(sign: int, j: int) -> SignedTerm:
    power = PrimePowerWitness(base=2, exponent=j) if j else PrimePowerWitness.unit()
    return SignedTerm(sign=sign, power=power)


def _negate(terms: List[SignedTerm]) -> List[SignedTerm]:
    return [SignedTerm(sign=-term.sign, power=term.power) for term in terms]


def is_signed_prime_power(value: int, settings: Optional[Settings] = None) -> bool:
    """True when |value| is 1 or a prime power."""
    return value != 0 and (abs(value) == 1 or prime_power_base(abs(value), settings) is not None)


def length1_witness(n: int, settings: Optional[Settings] = None) -> Optional[SignedTerm]:
    """
    A single signed prime power equal to n.

    Args:
        n (int): A nonzero integer.
        settings (Settings, optional): Configuration for the primality test.

    Raises:
        InvalidArgument: If n is 0.

    Returns:
        Optional[SignedTerm]: +-p^a equal to n, or None when |n| is neither 1 nor a prime power.
    """
    if n == 0:
        raise InvalidArgument("0 has length 0 and no witness")
    power = _witness(abs(n), settings)
    if power is None:
        return None
    return SignedTerm(sign=1 if n > 0 else -1, power=power)


def length2_witness(
    n: int,
    two_power_cap: Optional[int] = None,
    prime_power_bound: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> Optional[List[SignedTerm]]:
    """
    Two signed prime powers summing to n, searched within caps.

    For odd n one term must be even, hence +-2^j (2^0 = 1 included): the search runs over
    0 <= j <= two_power_cap, trying n - 2^j and then n + 2^j. For even n the search runs over
    sums a + (n - a) and differences (n + b) - b with a, b prime powers (or 1) up to
    ``prime_power_bound``.

    Args:
        n (int): A nonzero integer.
        two_power_cap (int, optional): Exponent cap J; defaults to ``settings.two_power_cap``.
        prime_power_bound (int, optional): Bound for even n; defaults to ``settings.prime_power_bound``.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If n is 0 or the cap is below 1.

    Returns:
        Optional[List[SignedTerm]]: Two terms summing to n, or None when nothing was found within the
        caps. None is not a proof that the length exceeds 2.
    """
    settings = settings or get_settings()
    cap = settings.two_power_cap if two_power_cap is None else two_power_cap
    bound = settings.prime_power_bound if prime_power_bound is None else prime_power_bound
    if n == 0:
        raise InvalidArgument("0 has length 0 and no witness")
    if cap < 1:
        raise InvalidArgument(f"two-power cap must be at least 1, got {cap}")
    if n < 0:
        found = length2_witness(-n, cap, bound, settings)
        return None if found is None else _negate(found)

    if n % 2:
        for j in range(cap + 1):
            power = 1 << j
            rest = n - power
            if rest and is_signed_prime_power(rest, settings):
                return [_two_power_term(1, j), _term(rest, settings)]
            if is_signed_prime_power(n + power, settings):
                return [_term(n + power, settings), _two_power_term(-1, j)]
        return None

    powers = prime_powers_up_to(bound)
    for a in powers:
        if 2 * a > n:
            break
        if is_signed_prime_power(n - a, settings):
            return [_term(a, settings), _term(n - a, settings)]
    for b in powers:
        if is_signed_prime_power(n + b, settings):
            return [_term(n + b, settings), _term(-b, settings)]
    return None


def goldbach_pair(n: int, settings: Optional[Settings] = None) -> Tuple[int, int]:
    """
    Primes p <= q with p + q = n and p as small as possible.

    Beyond the deterministic primality range the pair consists of probable primes.

    Args:
        n (int): An even integer >= 4.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If n is odd or below 4.
        GoldbachError: If no pair exists, which would contradict verified Goldbach.

    Returns:
        Tuple[int, int]: The pair (p, q).
    """
    settings = settings or get_settings()
    if n < 4 or n % 2:
        raise InvalidArgument(f"goldbach_pair needs an even n >= 4, got {n}")
    if n >= settings.deterministic_limit:
        logger.warning("Goldbach pair for %d uses probable primes", n)
    p = 2
    while 2 * p <= n:
        if probably_prime(n - p, settings):
            return p, n - p
        p = int(gmpy2.next_prime(p))
    raise GoldbachError(f"no Goldbach pair found for {n}")


def three_prime_decomposition(n: int, settings: Optional[Settings] = None) -> Tuple[int, int, int]:
    """
    Primes p <= q <= r summing to an odd n > 5.

    The smallest odd prime p with n - p >= 4 is taken and n - p is split by goldbach_pair.

    Args:
        n (int): An odd integer greater than 5.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If n is even or at most 5.
        GoldbachError: As goldbach_pair.

    Returns:
        Tuple[int, int, int]: The sorted primes.
    """
    if n <= 5 or n % 2 == 0:
        raise InvalidArgument(f"three_prime_decomposition needs an odd n > 5, got {n}")
    p = 3
    while n - p >= 4:
        try:
            q, r = goldbach_pair(n - p, settings)
        except GoldbachError:
            p = int(gmpy2.next_prime(p))
            continue
        return tuple(sorted((p, q, r)))
    raise GoldbachError(f"no three-prime decomposition found for {n}")


def _three_terms(n: int, settings: Settings) -> List[SignedTerm]:
    return [_term(p, settings) for p in three_prime_decomposition(n, settings)]


def sun_class_member(x: int, constants: SunConstants = SUN) -> bool:
    """
    True iff x = M (mod N) for the residue class none of whose members is |p^a +- q^b|.

    Args:
        x (int): Any integer.
        constants (SunConstants): M and N.

    Returns:
        bool: Class membership.
    """
    return (x - constants.m) % constants.n == 0


def plength_upper(
    n: int,
    two_power_cap: Optional[int] = None,
    prime_power_bound: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> PLengthReport:
    """
    Upper bound, with witness, for the length of n over all signed prime powers.

    Lengths 1 and 2 are tried first. Odd n then falls back to three primes; even n tries
    t + (two-term odd witness) for small prime powers t and finally 1 + three primes (4).

    Args:
        n (int): A nonzero integer.
        two_power_cap (int, optional): Exponent cap J for odd length-2 searches.
        prime_power_bound (int, optional): Bound for even length-2 searches.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If n is 0.

    Returns:
        PLengthReport: Bound <= 4 with a witness. exact is set for bounds 1 and 2 and for bound 3
        inside Sun's class; an odd bound-3 report outside the class is a candidate.
    """
    settings = settings or get_settings()
    cap = settings.two_power_cap if two_power_cap is None else two_power_cap
    bound = settings.prime_power_bound if prime_power_bound is None else prime_power_bound
    if n == 0:
        raise InvalidArgument("0 has length 0 and no witness")

    def report(terms: List[SignedTerm], **flags) -> PLengthReport:
        if n < 0:
            terms = _negate(terms)
        return PLengthReport(
            n=n, upper_bound=len(terms), terms=terms,
            two_power_cap=cap, prime_power_bound=bound, **flags,
        )

    m = abs(n)
    single = length1_witness(m, settings)
    if single is not None:
        return report([single], exact=True)
    pair = length2_witness(m, cap, bound, settings)
    if pair is not None:
        return report(pair, exact=True)

    if m % 2:
        exact = sun_class_member(m)
        return report(_three_terms(m, settings), exact=exact, candidate=not exact)

    for t in prime_powers_up_to(64):
        for sign in (1, -1):
            rest = m - sign * t
            if rest % 2 == 0 or rest == 0:
                continue
            pair = length2_witness(rest, cap, bound, settings)
            if pair is not None:
                return report([_term(sign * t, settings)] + pair)
    logger.info("falling back to 1 + three primes for %d", m)
    return report([_term(1, settings)] + _three_terms(m - 1, settings))


def sieve_length3_candidates(
    lo: int,
    hi: int,
    two_power_cap: Optional[int] = None,
    threads: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> List[int]:
    """
    Odd n in [lo, hi] with no signed prime-power witness of length 1 or 2 within the cap.

    A survivor is not 1 or a prime power, and neither |n - 2^j| nor n + 2^j is 1 or a prime
    power for 0 <= j <= J. A dense prime-power table covers the small powers of two; larger
    ones fall back to direct tests. Chunks of the range run on a thread pool and the
    survivors come back in ascending order whatever the thread count.

    Args:
        lo (int): First odd integer, at least 1.
        hi (int): Last odd integer, at least lo.
        two_power_cap (int, optional): Exponent cap J; defaults to ``settings.sieve_two_power_cap``.
        threads (int, optional): Worker threads; defaults to ``settings.threads``.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If lo or hi is even, lo < 1, lo > hi, J < 1 or threads < 1.

    Returns:
        List[int]: The length-3 candidates, ascending.
    """
    settings = settings or get_settings()
    cap = settings.sieve_two_power_cap if two_power_cap is None else two_power_cap
    threads = settings.threads if threads is None else threads
    if lo % 2 == 0 or hi % 2 == 0 or lo < 1 or lo > hi:
        raise InvalidArgument(f"sieve range must be odd integers 1 <= lo <= hi, got [{lo}, {hi}]")
    if cap < 1 or threads < 1:
        raise InvalidArgument(f"cap and threads must be at least 1, got cap={cap}, threads={threads}")

    # largest j whose shifts stay inside a table of at most sieve_table_limit entries
    table_j = -1
    while table_j < cap and hi + (1 << (table_j + 1)) <= settings.sieve_table_limit:
        table_j += 1
    table = prime_power_mask(hi + (1 << table_j)) if table_j >= 0 else None
    logger.debug("sieve [%d, %d]: table covers j <= %d", lo, hi, table_j)

    def sieve_chunk(bounds: Tuple[int, int]) -> List[int]:
        start, stop = bounds
        if table is None:
            alive = [n for n in range(start, stop + 1, 2) if not is_signed_prime_power(n, settings)]
        else:
            candidates = np.arange(start, stop + 1, 2, dtype=np.int64)
            candidates = candidates[~table[candidates]]
            for j in range(table_j + 1):
                if not candidates.size:
                    break
                power = 1 << j
                hit = table[np.abs(candidates - power)] | table[candidates + power]
                candidates = candidates[~hit]
            alive = candidates.tolist()
        survivors = [n for n in alive if not _has_two_power_partner(n, table_j + 1, cap, settings)]
        logger.debug("chunk [%d, %d]: %d survivors", start, stop, len(survivors))
        return survivors

    step = 2 * settings.sieve_chunk
    chunks = [(start, min(start + step - 2, hi)) for start in range(lo, hi + 1, step)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        results = list(pool.map(sieve_chunk, chunks))
    survivors = [n for chunk in results for n in chunk]
    logger.info("sieve [%d, %d] with cap %d: %d survivors", lo, hi, cap, len(survivors))
    return survivors


def _has_two_power_partner(n: int, first_j: int, cap: int, settings: Settings) -> bool:
    for j in range(first_j, cap + 1):
        power = 1 << j
        if is_signed_prime_power(n - power, settings) or is_signed_prime_power(n + power, settings):
            return True
    return False


def verify_sun_example(
    constants: SunConstants = SUN,
    expected_value: int = SUN_THIRD_MEMBER,
    expected_factors: Optional[Dict[int, int]] = None,
    settings: Optional[Settings] = None,
) -> SunReport:
    """
    Checks the length-3 example from Sun's residue class.

    The checks are: (a) M and M + N are probable primes, (b) M + 2N equals the printed value,
    (c) its factorization matches the printed one, (d) it is not a prime power. Each check is
    reported on its own.

    Args:
        constants (SunConstants): M and N.
        expected_value (int): The printed value of M + 2N.
        expected_factors (Dict[int, int], optional): The printed factorization.
        settings (Settings, optional): Configuration.

    Returns:
        SunReport: One entry per check.
    """
    settings = settings or get_settings()
    expected_factors = SUN_THIRD_MEMBER_FACTORS if expected_factors is None else expected_factors
    m, modulus = constants.m, constants.n
    third = m + 2 * modulus
    checks = []

    verdicts = [is_prime(m, settings), is_prime(m + modulus, settings)]
    checks.append(SunCheck(
        name="m_and_m_plus_n_prime",
        passed=all(v.passed for v in verdicts),
        detail="; ".join(f"{v.status.value} ({v.note})" for v in verdicts),
    ))

    checks.append(SunCheck(
        name="m_plus_2n_value",
        passed=third == expected_value,
        detail=f"M + 2N = {third}",
    ))

    try:
        factors = factor(third, settings)
        checks.append(SunCheck(
            name="m_plus_2n_factorization",
            passed=factors == expected_factors,
            detail=" * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in factors.items()),
        ))
    except FactorizationError as exc:
        checks.append(SunCheck(name="m_plus_2n_factorization", passed=False, detail=str(exc)))

    power = prime_power_base(third, settings)
    checks.append(SunCheck(
        name="m_plus_2n_not_prime_power",
        passed=power is None,
        detail="not a prime power" if power is None else f"{power[0]}^{power[1]}",
    ))

    report = SunReport(checks=checks)
    logger.info("Sun example verification: %s", "passed" if report.passed else "failed")
    return report


def _restricted_term_cost(value: int, excluded: frozenset, settings: Settings) -> int:
    found = _witness(value, settings)
    if found is not None and (found.is_unit or found.base not in excluded):
        return 1

    if value <= settings.oracle_term_limit:
        descriptor = GeneratingSetDescriptor.prime_set(excluded=tuple(excluded))
        return bfs_lengths(descriptor, (0, value), settings=settings)[value]

    def allowed(x: int) -> bool:
        if x == 1:
            return True
        power = prime_power_base(x, settings)
        return power is not None and power[0] not in excluded

    for a in prime_powers_up_to(settings.prime_power_bound):
        if 2 * a > value:
            break
        if allowed(a) and allowed(value - a):
            return 2
    if value % 2:
        for p in _allowed_odd_primes(excluded, value):
            rest = value - p
            if rest < 4:
                break
            pair = _allowed_goldbach_pair(rest, excluded, settings)
            if pair is not None:
                return 3
    elif value > 7:
        return 1 + _restricted_term_cost(value - 1, excluded, settings)
    raise GoldbachError(f"no decomposition of {value} avoiding {sorted(excluded)}")


def _allowed_odd_primes(excluded: frozenset, limit: int) -> Iterable[int]:
    p = 3
    while p <= limit:
        if p not in excluded:
            yield p
        p = int(gmpy2.next_prime(p))


def _allowed_goldbach_pair(n: int, excluded: frozenset, settings: Settings) -> Optional[Tuple[int, int]]:
    p = 2
    while 2 * p <= n:
        q = n - p
        if p not in excluded and q not in excluded and probably_prime(q, settings):
            return p, q
        p = int(gmpy2.next_prime(p))
    return None


def restricted_prime_length(
    n: int,
    excluded_primes: Iterable[int] = (),
    two_power_cap: Optional[int] = None,
    prime_power_bound: Optional[int] = None,
    settings: Optional[Settings] = None,
) -> int:
    """
    Upper bound for the length of n when the powers of finitely many primes are removed.

    A witness over all primes is computed first; every term whose prime is excluded is
    replaced by its own decomposition over the remaining prime powers, found by the BFS
    oracle for small terms and by sum-of-two or three-prime searches avoiding the excluded
    primes otherwise.

    Args:
        n (int): A nonzero integer.
        excluded_primes (Iterable[int]): The finite set of removed primes.
        two_power_cap (int, optional): Exponent cap J for odd length-2 searches.
        prime_power_bound (int, optional): Bound for even length-2 searches.
        settings (Settings, optional): Configuration.

    Raises:
        InvalidArgument: If n is 0 or an excluded value is not prime.

    Returns:
        int: The upper bound.
    """
    settings = settings or get_settings()
    excluded = frozenset(excluded_primes)
    bad = sorted(p for p in excluded if not probably_prime(p, settings))
    if bad:
        raise InvalidArgument(f"excluded values must be primes, got {bad}")
    report = plength_upper(n, two_power_cap, prime_power_bound, settings)
    if not excluded:
        return report.upper_bound
    return sum(_restricted_term_cost(abs(term.value), excluded, settings) for term in report.terms)
