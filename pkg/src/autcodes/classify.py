"""Cycle-type admissibility and Burnside order candidates for a putative
extremal self-dual [72,36,16] code."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from autcodes.errors import InputError
from autcodes.permaction import CycleType, Permutation, cycle_type, is_prime

DEFAULT_TYPES = frozenset({CycleType(2, 36, 0), CycleType(3, 24, 0), CycleType(5, 14, 2)})


@dataclass(frozen=True)
class ClassifyParams:
    n: int = 72
    admissible: frozenset[CycleType] = DEFAULT_TYPES
    f5: int = 2
    delta: frozenset[int] = frozenset({0, 1})
    five_cap: int = 1
    max_two: int = 10
    max_three: int = 6

    def __post_init__(self):
        for t in self.admissible:
            if t.p * t.c + t.f != self.n:
                raise InputError(f"admissible type {t} does not partition n = {self.n}")
        if self.five_cap < 0 or any(d < 0 for d in self.delta):
            raise InputError("exponents must be non-negative")


class Admissibility(NamedTuple):
    admissible: bool
    reason: str

    def __bool__(self) -> bool:
        return self.admissible


def admissible_type_filter(
    sigma: Permutation | CycleType, params: ClassifyParams = ClassifyParams()
) -> Admissibility:
    if isinstance(sigma, Permutation):
        order = sigma.order
        if order == 1:
            return Admissibility(False, "identity")
        if not is_prime(order):
            return Admissibility(False, "composite order")
        ctype = cycle_type(sigma, order)
    else:
        ctype = sigma
        if ctype.composite:
            return Admissibility(False, "composite order")
    if ctype in params.admissible:
        return Admissibility(True, f"type {ctype} is admissible")
    return Admissibility(False, f"type {ctype} is not admissible")


def prime_cycle_types(n: int) -> list[CycleType]:
    """Every type p-(c,f) with p prime, c >= 1 and p*c + f = n."""
    return [
        CycleType(p, c, n - p * c)
        for p in range(2, n + 1)
        if is_prime(p)
        for c in range(1, n // p + 1)
    ]


def burnside_order_list(params: ClassifyParams = ClassifyParams()) -> list[int]:
    """Orders m = 2^a 3^b 5^c for which the fixed-point average is an integer.

    The identity fixes n points, each order-5 element fixes ``f5`` points and
    every other element is fixed point free.  With ``c >= 1`` there are
    ``N5 = 4m / (2^delta 5)`` elements of order 5 for some ``delta``.
    """
    out = set()
    fives = range(params.five_cap + 1)
    for a in range(params.max_two + 1):
        for b in range(params.max_three + 1):
            for c in fives:
                m = 2**a * 3**b * 5**c
                if c == 0:
                    if params.n % m == 0:
                        out.add(m)
                    continue
                for d in params.delta:
                    n5 = Fraction(4 * m, 2**d * 5)
                    if n5.denominator != 1 or n5 <= 0:
                        continue
                    avg = Fraction(params.n + params.f5 * n5, m)
                    if avg.denominator == 1 and avg >= 1:
                        out.add(m)
                        break
    return sorted(out)


@dataclass
class ClassifySummary:
    params: ClassifyParams
    orders: list[int] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "n": self.params.n,
            "f5": self.params.f5,
            "delta": sorted(self.params.delta),
            "five_cap": self.params.five_cap,
            "orders": self.orders,
        }
