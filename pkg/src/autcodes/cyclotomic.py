"""The ring Q = F2[x]/(x^p + 1) for an odd prime p.

Polynomials are bit-packed ints (bit ``i`` = coefficient of ``x^i``), the same
encoding as vectors, so a length-``p`` block of a codeword *is* its image
under the cycle-wise identification with Q.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property

from autcodes.errors import DomainError, InputError
from autcodes.gf2linalg import echelon
from autcodes.permaction import Permutation, is_prime

MAX_P = 64


# ---------------------------------------------------------------------------
# F2[x] arithmetic


def deg(a: int) -> int:
    return a.bit_length() - 1


def pmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def pdivmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    q = 0
    db = deg(b)
    while a and deg(a) >= db:
        shift = deg(a) - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def pmod(a: int, b: int) -> int:
    return pdivmod(a, b)[1]


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def pext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, u, v)`` with ``u*a + v*b = g = gcd(a, b)``."""
    r0, r1 = a, b
    u0, u1 = 1, 0
    v0, v1 = 0, 1
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 ^ pmul(q, u1)
        v0, v1 = v1, v0 ^ pmul(q, v1)
    return r0, u0, v0


def poly_str(a: int, var: str = "x") -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(deg(a) + 1):
        if (a >> i) & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return "+".join(terms)


def coeff_str(a: int, p: int) -> str:
    return "".join("1" if (a >> i) & 1 else "0" for i in range(p))


# ---------------------------------------------------------------------------
# the quotient ring


def _check_p(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise InputError(f"{p} is not an odd prime")
    if p > MAX_P:
        raise InputError(f"p = {p} exceeds the supported bound {MAX_P}")


def xp1(p: int) -> int:
    return (1 << p) | 1


def qmul(a: int, b: int, p: int) -> int:
    """Product in F2[x]/(x^p + 1): a cyclic convolution."""
    mask = (1 << p) - 1
    out = 0
    k = 0
    while b:
        if b & 1:
            out ^= ((a << k) | (a >> (p - k))) & mask
        b >>= 1
        k += 1
    return out


def qpow(a: int, e: int, p: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = qmul(result, a, p)
        a = qmul(a, a, p)
        e >>= 1
    return result


def reciprocal(a: int, p: int) -> int:
    """``a(x^-1)``: keep coefficient 0, reverse coefficients 1..p-1."""
    out = a & 1
    for i in range(1, p):
        if (a >> i) & 1:
            out |= 1 << (p - i)
    return out


def ord2_mod_p(p: int) -> int:
    """Multiplicative order of 2 modulo the odd prime ``p``."""
    if p % 2 == 0 or not is_prime(p):
        raise InputError(f"{p} is not an odd prime")
    m, r = 1, 2 % p
    while r != 1:
        r = (2 * r) % p
        m += 1
    return m


def cyclotomic_cosets(p: int) -> list[tuple[int, ...]]:
    """2-cyclotomic cosets mod p, each sorted, ordered by minimum."""
    seen: set[int] = set()
    out = []
    for i in range(p):
        if i in seen:
            continue
        coset = []
        j = i
        while j not in coset:
            coset.append(j)
            j = (2 * j) % p
        seen.update(coset)
        out.append(tuple(sorted(coset)))
    return out


def _primitive_idempotents(p: int) -> list[int]:
    # Idempotents of Q are exactly the polynomials constant on cyclotomic
    # cosets (e(x)^2 = e(x^2)); the primitive ones are the atoms of that
    # Boolean algebra, i.e. nonzero e with e*g in {0, e} for every coset sum g.
    coset_sums = [sum(1 << i for i in K) for K in cyclotomic_cosets(p)]
    m = len(coset_sums)
    atoms = []
    for mask in range(1, 1 << m):
        e = 0
        for i in range(m):
            if (mask >> i) & 1:
                e ^= coset_sums[i]
        if e == 0:
            continue
        if all(qmul(e, g, p) in (0, e) for g in coset_sums):
            atoms.append(e)
    if len(atoms) != m:
        raise AssertionError(f"found {len(atoms)} primitive idempotents, expected {m}")
    return atoms


def _factor_key(q: int) -> tuple[int, ...]:
    return tuple((q >> i) & 1 for i in range(deg(q) + 1))


def factor_xp1(p: int) -> tuple[int, ...]:
    """Irreducible factors of x^p + 1 over GF(2): ``x+1`` first, the rest in
    lexicographic order of their coefficient vectors ``(c_0, c_1, ...)``.

    Each factor is read off a primitive idempotent ``e`` as
    ``(x^p+1) / gcd(e, x^p+1)``; no extension-field arithmetic is needed.
    """
    _check_p(p)
    full = xp1(p)
    factors = [pdivmod(full, pgcd(e, full))[0] for e in _primitive_idempotents(p)]
    rest = sorted((f for f in factors if f != 0b11), key=_factor_key)
    return (0b11, *rest)


def crt_idempotents(p: int, factors: tuple[int, ...]) -> tuple[int, ...]:
    """``e_j = 1 mod q_j`` and ``0 mod q_i`` (i != j), by extended Euclid on (q_j, Q_j)."""
    full = xp1(p)
    out = []
    for qj in factors:
        Qj, r = pdivmod(full, qj)
        if r:
            raise InputError(f"{poly_str(qj)} does not divide x^{p}+1")
        g, _, v = pext_gcd(qj, Qj)
        if g != 1:
            raise InputError(f"{poly_str(qj)} is not coprime to its cofactor")
        out.append(pmod(pmul(v, Qj), full))
    return tuple(out)


@dataclass(frozen=True)
class IdealDecomposition:
    """x^p + 1 = q_0 q_1 ... q_t and the matching CRT idempotents.

    ``generators[j] = (x^p+1)/q_j`` generates the ideal ``I_j``; it is *not*
    idempotent in general, which is why ``idempotents`` are stored separately.
    """

    p: int
    s: int
    factors: tuple[int, ...]
    idempotents: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.factors) - 1

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(pdivmod(xp1(self.p), q)[0] for q in self.factors)

    def field_order(self, j: int) -> int:
        return 1 << deg(self.factors[j])

    def in_ideal(self, a: int, j: int) -> bool:
        return qmul(a, self.idempotents[j], self.p) == a

    def ideal_elements(self, j: int) -> list[int]:
        """Every element of ``I_j`` (enumerated from the F2-basis ``x^k e_j``)."""
        basis = self.ideal_basis(j)
        out = [0]
        for b in basis:
            out += [a ^ b for a in out]
        return out

    def ideal_basis(self, j: int) -> list[int]:
        e = self.idempotents[j]
        return echelon(qmul(e, 1 << k, self.p) for k in range(self.p))

    def reciprocal_index(self, j: int) -> int:
        """Index of the ideal whose factor is the reciprocal of ``q_j``."""
        e = reciprocal(self.idempotents[j], self.p)
        return self.idempotents.index(e)

    @cached_property
    def big_ideal(self) -> int:
        """Index of the unique non-trivial ideal when s(p) = p - 1."""
        if self.s != self.p - 1:
            raise DomainError(f"s({self.p}) = {self.s} < p-1: more than one non-trivial ideal")
        return 1

    def elem(self, value: int, j: int | None = None) -> ExtFieldElem:
        j = self.big_ideal if j is None else j
        return ExtFieldElem(self, j, value)


@cache
def ideal_decomposition(p: int) -> IdealDecomposition:
    factors = factor_xp1(p)
    return IdealDecomposition(p, ord2_mod_p(p), factors, crt_idempotents(p, factors))


# ---------------------------------------------------------------------------
# the fields inside the ideals


@dataclass(frozen=True)
class ExtFieldElem:
    """Element of the field ``I_j`` whose identity is the idempotent ``e_j``."""

    parent: IdealDecomposition
    j: int
    value: int

    def __post_init__(self):
        if not self.parent.in_ideal(self.value, self.j):
            raise DomainError(f"{poly_str(self.value)} is not in ideal I_{self.j}")

    def _same(self, other: ExtFieldElem) -> None:
        if self.parent.p != other.parent.p or self.j != other.j:
            raise DomainError("elements live in different fields")

    @property
    def p(self) -> int:
        return self.parent.p

    def __add__(self, other: ExtFieldElem) -> ExtFieldElem:
        self._same(other)
        return ExtFieldElem(self.parent, self.j, self.value ^ other.value)

    __sub__ = __add__

    def __mul__(self, other: ExtFieldElem) -> ExtFieldElem:
        self._same(other)
        return ExtFieldElem(self.parent, self.j, qmul(self.value, other.value, self.p))

    def __pow__(self, e: int) -> ExtFieldElem:
        if e < 0:
            return self.inverse() ** (-e)
        result = self.parent.idempotents[self.j]
        base = self.value
        while e:
            if e & 1:
                result = qmul(result, base, self.p)
            base = qmul(base, base, self.p)
            e >>= 1
        return ExtFieldElem(self.parent, self.j, result)

    def __bool__(self) -> bool:
        return self.value != 0

    def one(self) -> ExtFieldElem:
        return ExtFieldElem(self.parent, self.j, self.parent.idempotents[self.j])

    def inverse(self) -> ExtFieldElem:
        if not self.value:
            raise DomainError("zero has no inverse")
        return self ** (self.parent.field_order(self.j) - 2)

    def frobenius(self) -> ExtFieldElem:
        return ExtFieldElem(self.parent, self.j, qmul(self.value, self.value, self.p))

    def multiplicative_order(self) -> int:
        if not self.value:
            raise DomainError("zero has no multiplicative order")
        e = self.parent.idempotents[self.j]
        a, k = self.value, 1
        while a != e:
            a = qmul(a, self.value, self.p)
            k += 1
        return k

    def __repr__(self) -> str:
        return f"ExtFieldElem(I_{self.j}, {poly_str(self.value)})"


def field_generator(dec: IdealDecomposition, j: int) -> ExtFieldElem:
    """Smallest (as an int) generator of the multiplicative group of ``I_j``."""
    target = dec.field_order(j) - 1
    for a in dec.ideal_elements(j)[1:]:
        el = ExtFieldElem(dec, j, a)
        if el.multiplicative_order() == target:
            return el
    raise AssertionError(f"I_{j} has no generator")


# ---------------------------------------------------------------------------
# conjugation a -> a^(2^((p-1)/2))


@dataclass(frozen=True)
class FrobeniusHalf:
    """The involutive Frobenius of F_{2^{p-1}} and its coordinate form.

    Because 2^((p-1)/2) = -1 mod p, raising to that power sends ``x^i`` to
    ``x^-i``; on coefficient vectors this reverses positions 2..p.
    """

    p: int

    def __post_init__(self):
        if ord2_mod_p(self.p) != self.p - 1:
            raise DomainError(f"s({self.p}) != {self.p}-1: no single big ideal")

    @property
    def exponent(self) -> int:
        return 1 << ((self.p - 1) // 2)

    @property
    def coordinate_permutation(self) -> Permutation:
        p = self.p
        return Permutation.from_cycles([(i, p + 2 - i) for i in range(2, (p + 1) // 2 + 1)], p)

    def __call__(self, a: ExtFieldElem) -> ExtFieldElem:
        return frobenius_half(a)


def frobenius_half(a: ExtFieldElem) -> ExtFieldElem:
    """``a ** 2^((p-1)/2)``, the conjugation of the Hermitian forms."""
    p = a.p
    if a.parent.s != p - 1:
        raise DomainError(f"s({p}) != {p}-1")
    return a ** (1 << ((p - 1) // 2))


def trace_half(a: ExtFieldElem) -> ExtFieldElem:
    """``a + conj(a)``, which lies in the half-degree subfield."""
    return a + frobenius_half(a)


def conj(value: int, p: int) -> int:
    """Fast conjugation on raw ideal elements (coefficient reversal)."""
    return reciprocal(value, p)
