# файл schemas.py

from datetime import datetime
from enum import Enum
from typing import Dict, Iterator, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from errors import UsageError

DEFAULT_BASES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


class GAdicExpansion(BaseModel):
    """
    A signed-digit expansion of an integer in base g.

    Attributes:
        base (int): The base g.
        digits (List[int]): Digits from the least significant one upward; empty for zero.
        value (int): The represented integer, the sum of digit * base ** index.
    """

    base: int
    digits: List[int] = Field(default_factory=list)
    value: int = 0

    @classmethod
    def from_digits(cls, base: int, digits: List[int]) -> "GAdicExpansion":
        """Builds an expansion and computes its value from the digits."""
        value = 0
        for digit in reversed(digits):
            value = value * base + digit
        return cls(base=base, digits=list(digits), value=value)

    @property
    def length(self) -> int:
        """Sum of the absolute digit values."""
        return sum(abs(digit) for digit in self.digits)


class LambdaParams(BaseModel):
    """
    Quantities derived from (g, k) by the closed forms for the smallest integer of length k.

    Attributes:
        g (int): The base.
        k (int): The target length.
        half (int): (g - 1) / 2 for odd g, g / 2 for even g.
        quotient (int): Number of repeated low blocks.
        remainder (int): k reduced modulo (g - 1) / 2 (odd g) or g - 1 (even g).
        low_coefficient (int): Coefficient of the second highest block.
        high_coefficient (int): Coefficient of the highest position.
    """

    g: int
    k: int
    half: int
    quotient: int
    remainder: int
    low_coefficient: int
    high_coefficient: int


class GeneratingSetDescriptor(BaseModel):
    """
    Declarative description of a symmetric, power-closed generating set of the integers.

    Attributes:
        kind (str): ``base`` for S_g, ``primes`` for a set of primes, ``list`` for an
            arbitrary finite set of positive integers.
        base (Optional[int]): The base g when kind is ``base``.
        primes (Optional[List[int]]): Explicit primes; None means all primes.
        excluded (List[int]): Primes removed from the all-primes set.
        elements (List[int]): Positive integers whose powers generate, when kind is ``list``.
    """

    kind: Literal["base", "primes", "list"]
    base: Optional[int] = None
    primes: Optional[List[int]] = None
    excluded: List[int] = Field(default_factory=list)
    elements: List[int] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_parameters(self):
        if self.kind == "base" and (self.base is None or self.base < 2):
            raise ValueError("a single-base set needs a base g >= 2")
        if any(value < 1 for value in (self.primes or []) + self.excluded + self.elements):
            raise ValueError("generating set parameters must be positive")
        return self

    @classmethod
    def single_base(cls, g: int) -> "GeneratingSetDescriptor":
        return cls(kind="base", base=g)

    @classmethod
    def prime_set(cls, primes: Optional[List[int]] = None, excluded: Tuple[int, ...] = ()) -> "GeneratingSetDescriptor":
        return cls(kind="primes", primes=primes, excluded=sorted(set(excluded)))

    @classmethod
    def explicit(cls, elements: List[int]) -> "GeneratingSetDescriptor":
        return cls(kind="list", elements=elements)

    @classmethod
    def parse(cls, text: str) -> "GeneratingSetDescriptor":
        """
        Parses the descriptor syntax used on the command line.

        Accepted forms are ``g:5``, ``primes:all``, ``primes:all-2,7``, ``primes:2,3,7`` and
        ``list:1,2,9``.

        Args:
            text (str): The descriptor.

        Raises:
            UsageError: If the descriptor is malformed.

        Returns:
            GeneratingSetDescriptor: The parsed descriptor.
        """
        kind, _, body = text.partition(":")
        try:
            if kind == "g":
                return cls.single_base(int(body))
            if kind == "primes" and body == "all":
                return cls.prime_set()
            if kind == "primes" and body.startswith("all-"):
                return cls.prime_set(excluded=tuple(_int_list(body[4:])))
            if kind == "primes":
                return cls.prime_set(primes=_int_list(body))
            if kind == "list":
                return cls.explicit(_int_list(body))
        except (ValueError, ValidationError) as exc:
            raise UsageError(f"malformed generating set descriptor: {text!r}") from exc
        raise UsageError(f"unknown generating set descriptor: {text!r}")

    def __str__(self) -> str:
        if self.kind == "base":
            return f"g:{self.base}"
        if self.kind == "list":
            return "list:" + ",".join(map(str, self.elements))
        if self.primes is not None:
            return "primes:" + ",".join(map(str, self.primes))
        if self.excluded:
            return "primes:all-" + ",".join(map(str, self.excluded))
        return "primes:all"


def _int_list(body: str) -> List[int]:
    values = [int(part) for part in body.split(",") if part.strip()]
    if not values:
        raise ValueError("empty list")
    return values


class LengthTable(BaseModel):
    """
    Word-metric lengths of the integers in a window, as found by breadth-first search.

    Attributes:
        lo (int): Lower end of the window.
        hi (int): Upper end of the window.
        margin (int): The exploration radius was margin * max(|lo|, |hi|).
        distances (np.ndarray): distances[n - lo] is the length of n, -1 when unreached.
    """

    lo: int
    hi: int
    margin: int
    distances: np.ndarray

    class Config:
        arbitrary_types_allowed = True

    def __contains__(self, n: int) -> bool:
        return self.lo <= n <= self.hi and self.distances[n - self.lo] >= 0

    def __getitem__(self, n: int) -> int:
        if n not in self:
            raise KeyError(n)
        return int(self.distances[n - self.lo])

    def get(self, n: int, default: Optional[int] = None) -> Optional[int]:
        return self[n] if n in self else default

    def items(self) -> Iterator[Tuple[int, int]]:
        for offset, distance in enumerate(self.distances.tolist()):
            if distance >= 0:
                yield self.lo + offset, distance

    def as_dict(self) -> Dict[int, int]:
        return dict(self.items())


class PrimePowerWitness(BaseModel):
    """
    A witness n = p^k with p prime and k >= 1, or the unit 1 = p^0.

    Attributes:
        base (Optional[int]): The prime p; None for the unit.
        exponent (int): The exponent k; 0 for the unit.
    """

    base: Optional[int] = None
    exponent: int = 0

    @classmethod
    def unit(cls) -> "PrimePowerWitness":
        return cls()

    @property
    def is_unit(self) -> bool:
        return self.base is None

    @property
    def value(self) -> int:
        return 1 if self.base is None else self.base ** self.exponent

    def __str__(self) -> str:
        if self.base is None:
            return "1"
        if self.exponent == 1:
            return str(self.base)
        return f"{self.base}^{self.exponent}"


class PrimalityStatus(str, Enum):
    composite = "composite"
    prime = "prime"
    probable_prime = "probable-prime"


class PrimalityVerdict(BaseModel):
    """
    Outcome of a primality test.

    Attributes:
        status (PrimalityStatus): composite, prime or probable-prime.
        note (str): How the verdict was reached.
    """

    status: PrimalityStatus
    note: str = ""

    @property
    def passed(self) -> bool:
        """True for prime and probable-prime verdicts."""
        return self.status is not PrimalityStatus.composite


class SignedTerm(BaseModel):
    """
    A term +p^a or -p^a of a P-length witness.

    Attributes:
        sign (int): +1 or -1.
        power (PrimePowerWitness): The prime power p^a.
    """

    sign: Literal[1, -1]
    power: PrimePowerWitness

    @property
    def value(self) -> int:
        return self.sign * self.power.value

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "+") + str(self.power)


class PLengthReport(BaseModel):
    """
    Upper bound for the length of n over all signed prime powers, with a witness.

    Attributes:
        n (int): The integer.
        upper_bound (int): Number of terms in the witness.
        terms (List[SignedTerm]): Signed prime powers summing to n.
        two_power_cap (int): Largest power of two tried when ruling out length 2 for odd n.
        prime_power_bound (int): Largest prime power tried when ruling out length 2 for even n.
        exact (bool): The bound is known to equal the length.
        candidate (bool): Odd n with no length-2 witness within the caps; the bound may not be exact.
    """

    n: int
    upper_bound: int
    terms: List[SignedTerm]
    two_power_cap: int
    prime_power_bound: int
    exact: bool = False
    candidate: bool = False

    @property
    def status(self) -> str:
        if self.exact:
            return "exact"
        return "candidate" if self.candidate else "upper-bound"

    def total(self) -> int:
        return sum(term.value for term in self.terms)


class SunConstants(BaseModel):
    """
    The residue class x = M (mod N) none of whose members is |p^a +- q^b|.

    Attributes:
        m (int): The residue M.
        n (int): The modulus N, with the corrected digits.
    """

    m: int = 47867742232066880047611079
    n: int = 66483084961588510124010691590

    class Config:
        frozen = True


class SunCheck(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SunReport(BaseModel):
    """Outcome of the individual checks on M, M + N and M + 2N."""

    checks: List[SunCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class TableSpec(BaseModel):
    """
    What table of smallest-integer-of-length values to emit.

    Attributes:
        bases (List[int]): Column bases, each at least 2.
        k_max (int): Rows k = 1 .. k_max.
        output_format (str): csv, json or text.
    """

    bases: List[int] = Field(default_factory=lambda: list(DEFAULT_BASES))
    k_max: int = Field(20, ge=1)
    output_format: Literal["csv", "json", "text"] = "text"

    @field_validator("bases")
    @classmethod
    def check_bases(cls, bases: List[int]) -> List[int]:
        if not bases or any(g < 2 for g in bases):
            raise ValueError("bases must be a non-empty list of integers >= 2")
        return bases


class BFileRecord(BaseModel):
    index: int
    value: int


class SieveRunBase(BaseModel):
    """
    Common attributes of a bulk length-3 sieve run.

    Attributes:
        lo (int): First odd integer sieved.
        hi (int): Last odd integer sieved.
        two_power_cap (int): Exponent cap J used.
        elapsed_seconds (float): Wall-clock time of the run.
    """

    lo: int
    hi: int
    two_power_cap: int
    elapsed_seconds: float = 0.0


class SieveRunCreate(SieveRunBase):
    """A finished run together with its survivors."""

    survivors: List[int] = Field(default_factory=list)


class SieveRun(SieveRunBase):
    """
    A stored run.

    Attributes:
        id (int): Primary key.
        survivor_count (int): Number of stored candidates.
        created_at (datetime): When the run was stored.
    """

    id: int
    survivor_count: int
    created_at: datetime

    class Config:
        from_attributes = True


class Candidate(BaseModel):
    id: int
    run_id: int
    n: int
    two_power_cap: int

    class Config:
        from_attributes = True


class SieveFrontier(BaseModel):
    """
    How far the stored runs cover the odd integers from 3 upward.

    Attributes:
        two_power_cap (int): Only runs with at least this cap count.
        covered_through (int): Every odd n in [3, covered_through] was sieved; 1 when nothing is covered.
        first_candidate (Optional[int]): Smallest stored survivor inside the covered prefix.
    """

    two_power_cap: int
    covered_through: int
    first_candidate: Optional[int] = None
