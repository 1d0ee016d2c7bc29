"""Coordinate permutations, cycle types and their action on vectors and codes.

Conventions (fixed once, used everywhere):

* ``a * b`` applies ``a`` first, then ``b``.
* Vectors are acted on from the right: the entry at coordinate ``i`` moves to
  ``sigma(i)``, so ``(v^a)^b == v^(a*b)``.
* Conjugation is ``tau ^ sigma = sigma**-1 * tau * sigma``.
"""

from __future__ import annotations

import math
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from autcodes.errors import CycleTypeError, DomainError, InputError, ParseError
from autcodes.gf2linalg import BinaryCode, kernel_combinations, combine, rref


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{0..n-1}``; printed and parsed 1-indexed."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise InputError(f"not a permutation: {self.image}")

    @property
    def degree(self) -> int:
        return len(self.image)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> Permutation:
        """Build from 1-indexed cycles; omitted points are fixed."""
        image = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for a in cyc:
                if not 1 <= a <= n:
                    raise ParseError(f"entry {a} out of range 1..{n}")
                if a in seen:
                    raise ParseError(f"repeated element {a}")
                seen.add(a)
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                image[a - 1] = b - 1
        return cls(tuple(image))

    @classmethod
    def parse(cls, text: str, n: int) -> Permutation:
        """Cycle notation ``(1,2,3)(4,5)`` or a space-separated 1-indexed image list."""
        text = text.strip()
        if not text or text == "()":
            return cls.identity(n)
        if text.startswith("("):
            body = re.sub(r"\s+", "", text)
            if not re.fullmatch(r"(\(\d+(,\d+)*\))+", body):
                raise ParseError(f"bad cycle notation {text!r}")
            cycles = [[int(a) for a in grp.split(",")] for grp in re.findall(r"\(([^)]*)\)", body)]
            return cls.from_cycles(cycles, n)
        try:
            entries = [int(a) for a in text.split()]
        except ValueError as exc:
            raise ParseError(f"bad image list {text!r}") from exc
        if len(entries) != n:
            raise ParseError(f"image list has {len(entries)} entries, expected {n}")
        if sorted(entries) != list(range(1, n + 1)):
            raise ParseError(f"image list is not a bijection of 1..{n}")
        return cls(tuple(a - 1 for a in entries))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def _check(self, other: Permutation) -> None:
        if self.degree != other.degree:
            raise InputError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __mul__(self, other: Permutation) -> Permutation:
        self._check(other)
        return Permutation(tuple(other.image[i] for i in self.image))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, j in enumerate(self.image):
            inv[j] = i
        return Permutation(tuple(inv))

    def __pow__(self, e: int) -> Permutation:
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = Permutation.identity(self.degree)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __xor__(self, sigma: Permutation) -> Permutation:
        """Conjugate ``self ^ sigma = sigma**-1 * self * sigma``."""
        return sigma.inverse() * self * sigma

    def commutes_with(self, other: Permutation) -> bool:
        return self * other == other * self

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.image))

    @cached_property
    def cycles(self) -> tuple[tuple[int, ...], ...]:
        """All cycles (fixed points included), 0-indexed, each started at its minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.image[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.image[j]
            out.append(tuple(cyc))
        return tuple(out)

    @property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles)) if self.degree else 1

    @property
    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i, j in enumerate(self.image) if i == j)

    def __str__(self) -> str:
        parts = ["(" + ",".join(str(a + 1) for a in c) + ")" for c in self.cycles if len(c) > 1]
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Permutation({self}, n={self.degree})"


# ---------------------------------------------------------------------------
# orbits and cycle types


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of a permutation in projection order.

    Non-trivial orbits come first, sorted by minimal element and traversed by
    successive application of the permutation; fixed points follow in
    ascending order.  Entries are 0-indexed.
    """

    orbits: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, sigma: Permutation) -> OrbitPartition:
        moving = [c for c in sigma.cycles if len(c) > 1]
        fixed = [c for c in sigma.cycles if len(c) == 1]
        return cls(tuple(moving + fixed))

    def __len__(self) -> int:
        return len(self.orbits)

    @property
    def n_cycles(self) -> int:
        return sum(1 for o in self.orbits if len(o) > 1)

    def index(self) -> dict[int, int]:
        """Map each coordinate to the position of its orbit."""
        return {a: k for k, orb in enumerate(self.orbits) for a in orb}


@dataclass(frozen=True)
class CycleType:
    """``p-(c,f)`` for prime order, or ``pq-(a,b,c;f)`` for order ``p*q``."""

    p: int
    c: int
    f: int
    q: int | None = None
    a: int = 0
    b: int = 0

    @property
    def composite(self) -> bool:
        return self.q is not None

    @property
    def degree(self) -> int:
        if self.q is None:
            return self.p * self.c + self.f
        return self.p * self.a + self.q * self.b + self.p * self.q * self.c + self.f

    def __str__(self) -> str:
        if self.q is None:
            return f"{self.p}-({self.c},{self.f})"
        return f"{self.p * self.q}-({self.a},{self.b},{self.c};{self.f})"


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    return all(m % d for d in range(2, math.isqrt(m) + 1))


def cycle_type(sigma: Permutation, primes: int | Sequence[int]) -> CycleType:
    """Cycle type with respect to one prime ``p`` or a pair ``(p, q)``."""
    if isinstance(primes, int):
        primes = (primes,)
    primes = tuple(primes)
    if not 1 <= len(primes) <= 2 or not all(is_prime(r) for r in primes):
        raise InputError(f"expected one or two primes, got {primes}")
    lengths = [len(c) for c in sigma.cycles]
    if len(primes) == 1:
        (p,) = primes
        if any(ell not in (1, p) for ell in lengths):
            raise CycleTypeError(f"{sigma} has order {sigma.order}, not {p}")
        return CycleType(p, lengths.count(p), lengths.count(1))
    p, q = primes
    if p == q:
        raise InputError("composite cycle types need two distinct primes")
    if any(ell not in (1, p, q, p * q) for ell in lengths):
        raise CycleTypeError(f"{sigma} has order {sigma.order}, not dividing {p * q}")
    return CycleType(
        p, lengths.count(p * q), lengths.count(1), q=q, a=lengths.count(p), b=lengths.count(q)
    )


# ---------------------------------------------------------------------------
# action on vectors and codes


def act(v: int, sigma: Permutation) -> int:
    """``v^sigma``: coordinate ``sigma(i)`` of the result is coordinate ``i`` of ``v``."""
    out = 0
    i = 0
    image = sigma.image
    while v:
        if v & 1:
            out |= 1 << image[i]
        v >>= 1
        i += 1
    return out


def act_code(C: BinaryCode, sigma: Permutation) -> BinaryCode:
    if C.n != sigma.degree:
        raise InputError(f"code length {C.n} != permutation degree {sigma.degree}")
    return rref([act(b, sigma) for b in C.basis], C.n)


def is_automorphism(C: BinaryCode, sigma: Permutation) -> bool:
    if C.n != sigma.degree:
        raise InputError(f"code length {C.n} != permutation degree {sigma.degree}")
    return all(act(b, sigma) in C for b in C.basis)


def fixed_code(C: BinaryCode, sigma: Permutation) -> BinaryCode:
    """``C(sigma)``: codewords with ``c^sigma = c``, as the kernel of ``c + c^sigma``."""
    if C.n != sigma.degree:
        raise InputError(f"code length {C.n} != permutation degree {sigma.degree}")
    diffs = [b ^ act(b, sigma) for b in C.basis]
    combos = kernel_combinations(diffs, C.n)
    return rref([combine(lam, C.basis) for lam in combos], C.n)


def group_poly_action(v: int, sigma: Permutation, poly: int) -> int:
    """``v . f(sigma) = sum_k f_k v^(sigma^k)`` for ``f`` given as a bit-packed polynomial."""
    out = 0
    w = v
    while poly:
        if poly & 1:
            out ^= w
        poly >>= 1
        w = act(w, sigma)
    return out


def group_poly_image(C: BinaryCode, sigma: Permutation, poly: int) -> BinaryCode:
    return rref([group_poly_action(b, sigma, poly) for b in C.basis], C.n)


# ---------------------------------------------------------------------------
# projections


def project(v: int, orbits: OrbitPartition) -> int:
    """Read one coordinate per orbit (its first entry)."""
    out = 0
    for k, orb in enumerate(orbits.orbits):
        if (v >> orb[0]) & 1:
            out |= 1 << k
    return out


def lift(u: int, orbits: OrbitPartition) -> int:
    """Inverse of :func:`project` on orbit-constant vectors."""
    out = 0
    for k, orb in enumerate(orbits.orbits):
        if (u >> k) & 1:
            for a in orb:
                out |= 1 << a
    return out


def projected_fixed_code(C: BinaryCode, sigma: Permutation) -> BinaryCode:
    """``pi_sigma(C(sigma))`` of length = number of orbits."""
    orbits = OrbitPartition.of(sigma)
    fixed = fixed_code(C, sigma)
    return rref([project(b, orbits) for b in fixed.basis], len(orbits))


def eta_projection(tau: Permutation, sigma: Permutation) -> Permutation:
    """Permutation of the orbits of ``sigma`` induced by a commuting ``tau``."""
    tau._check(sigma)
    if not tau.commutes_with(sigma):
        raise DomainError(f"{tau} does not commute with {sigma}")
    orbits = OrbitPartition.of(sigma)
    where = orbits.index()
    return Permutation(tuple(where[tau(orb[0])] for orb in orbits.orbits))


def group_closure(gens: Sequence[Permutation], limit: int = 100_000) -> list[Permutation]:
    """All elements of the group generated by ``gens`` (breadth-first, identity first)."""
    if not gens:
        raise InputError("need at least one generator")
    n = gens[0].degree
    ident = Permutation.identity(n)
    elements = [ident]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    elements.append(h)
                    nxt.append(h)
                    if len(elements) > limit:
                        raise DomainError(f"group exceeds {limit} elements")
        frontier = nxt
    return elements
