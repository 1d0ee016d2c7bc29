"""Decomposition of a code under an automorphism of odd prime order.

For ``sigma`` of type p-(c,f) the code splits as ``C = C(sigma) ⊕ E(sigma)``
where ``E(sigma)`` holds the codewords of even weight on every orbit.  Each
p-cycle of ``sigma`` is read as an element of F2[x]/(x^p+1) starting at the
cycle's minimal coordinate, so ``sigma`` itself acts as multiplication by x.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from typing import NamedTuple

from autcodes.cyclotomic import (
    IdealDecomposition,
    conj,
    ideal_decomposition,
    qmul,
)
from autcodes.errors import DomainError, InputError
from autcodes.gf2linalg import (
    BinaryCode,
    combine,
    echelon,
    intersection,
    is_self_dual,
    kernel_combinations,
    rank,
    rref,
)
from autcodes.permaction import (
    CycleType,
    OrbitPartition,
    Permutation,
    cycle_type,
    fixed_code,
    group_poly_image,
    is_automorphism,
    is_prime,
    lift,
    project,
)

# A vector over Q^c: one bit-packed polynomial per p-cycle.
QVector = tuple[int, ...]


def _prime_order(sigma: Permutation) -> int:
    p = sigma.order
    if p == 1 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"{sigma} has order {p}, not an odd prime")
    return p


def _check_aut(C: BinaryCode, sigma: Permutation) -> None:
    if not is_automorphism(C, sigma):
        raise DomainError(f"{sigma} is not an automorphism of the code")


def orbit_parities(v: int, orbits: OrbitPartition) -> int:
    """Bit ``k`` is the parity of ``v`` on orbit ``k``."""
    out = 0
    for k, orb in enumerate(orbits.orbits):
        par = 0
        for a in orb:
            par ^= (v >> a) & 1
        out |= par << k
    return out


def even_subcode(C: BinaryCode, sigma: Permutation) -> BinaryCode:
    """``E(sigma)``: kernel of the orbit-parity functionals restricted to C."""
    orbits = OrbitPartition.of(sigma)
    parities = [orbit_parities(b, orbits) for b in C.basis]
    combos = kernel_combinations(parities, len(orbits))
    return rref([combine(lam, C.basis) for lam in combos], C.n)


def even_space(sigma: Permutation) -> BinaryCode:
    """``V(sigma)^perp``: vectors of even weight on every orbit."""
    rows = []
    for orb in OrbitPartition.of(sigma).orbits:
        rows += [(1 << a) | (1 << b) for a, b in zip(orb, orb[1:])]
    return rref(rows, sigma.degree)


def phi_vector(v: int, orbits: OrbitPartition, p: int) -> QVector:
    """Cycle-wise map to Q^c (fixed points dropped)."""
    out = []
    for orb in orbits.orbits:
        if len(orb) != p:
            continue
        a = 0
        for i, coord in enumerate(orb):
            a |= ((v >> coord) & 1) << i
        out.append(a)
    return tuple(out)


def phi_inverse(u: Sequence[int], orbits: OrbitPartition, p: int) -> int:
    """Pull a Q^c vector back to GF(2)^n (zero on fixed points)."""
    cycles = [orb for orb in orbits.orbits if len(orb) == p]
    if len(u) != len(cycles):
        raise InputError(f"expected {len(cycles)} entries, got {len(u)}")
    v = 0
    for a, orb in zip(u, cycles):
        for i, coord in enumerate(orb):
            if (a >> i) & 1:
                v |= 1 << coord
    return v


def flatten(u: Sequence[int], p: int) -> int:
    """Concatenate coefficient vectors into one bit string (for F2 ranks)."""
    v = 0
    for i, a in enumerate(u):
        v |= a << (i * p)
    return v


@dataclass(frozen=True)
class PrimeAutDecomposition:
    code: BinaryCode
    sigma: Permutation
    ctype: CycleType
    orbits: OrbitPartition
    fixed: BinaryCode
    even: BinaryCode
    projected: BinaryCode

    @property
    def p(self) -> int:
        return self.ctype.p

    @property
    def c(self) -> int:
        return self.ctype.c


def decompose(C: BinaryCode, sigma: Permutation) -> PrimeAutDecomposition:
    p = _prime_order(sigma)
    _check_aut(C, sigma)
    ctype = cycle_type(sigma, p)
    orbits = OrbitPartition.of(sigma)
    fixed = fixed_code(C, sigma)
    even = even_subcode(C, sigma)
    if intersection(fixed, even).k or fixed.k + even.k != C.k:
        raise AssertionError("C(sigma) ⊕ E(sigma) != C")
    projected = rref([project(b, orbits) for b in fixed.basis], len(orbits))
    return PrimeAutDecomposition(C, sigma, ctype, orbits, fixed, even, projected)


def project_fixed(d: PrimeAutDecomposition) -> BinaryCode:
    return d.projected


def phi_p_image(d: PrimeAutDecomposition) -> list[QVector]:
    """F2-basis of ``phi_p(E(sigma)*)``; every entry lies in the big ideal."""
    dec = ideal_decomposition(d.p)
    dec.big_ideal  # raises unless s(p) = p - 1
    image = [phi_vector(b, d.orbits, d.p) for b in d.even.basis]
    for u in image:
        if not all(dec.in_ideal(a, 1) for a in u):
            raise AssertionError("phi_p image left the ideal I_1")
    return image


def component_dims(C: BinaryCode, sigma: Permutation) -> list[tuple[int, int]]:
    """``(j, dim_F2 E(sigma) . e_j(sigma))`` for every non-trivial ideal ``j``."""
    d = decompose(C, sigma)
    dec = ideal_decomposition(d.p)
    return [
        (j, group_poly_image(d.even, sigma, dec.idempotents[j]).k) for j in range(1, dec.t + 1)
    ]


# ---------------------------------------------------------------------------
# Hermitian forms over the big ideal


def hermitian_form(u: Sequence[int], v: Sequence[int], p: int) -> int:
    """``sum_i u_i * conj(v_i)`` computed in Q."""
    out = 0
    for a, b in zip(u, v):
        out ^= qmul(a, conj(b, p), p)
    return out


def ideal_span(vectors: Sequence[QVector], p: int) -> list[QVector]:
    """F2-basis of the I_1-span: shifts by x^k already span the field over F2."""
    c = len(vectors[0]) if vectors else 0
    e1 = ideal_decomposition(p).idempotents[1]
    rows = []
    for u in vectors:
        w = tuple(qmul(a, e1, p) for a in u)
        for _ in range(p):
            rows.append(flatten(w, p))
            w = tuple(qmul(a, 0b10, p) for a in w)
    return [unflatten(r, c, p) for r in echelon(rows)]


def unflatten(v: int, c: int, p: int) -> QVector:
    mask = (1 << p) - 1
    return tuple((v >> (i * p)) & mask for i in range(c))


def hermitian_self_dual(vectors: Sequence[QVector], p: int, c: int) -> bool:
    """Hermitian self-duality of the I_1-linear code spanned by ``vectors``."""
    dec = ideal_decomposition(p)
    dec.big_ideal
    if any(len(u) != c for u in vectors):
        raise InputError(f"vectors must have {c} entries")
    if c % 2:
        return False
    if any(not dec.in_ideal(a, 1) for u in vectors for a in u):
        raise InputError("entries must lie in the ideal I_1")
    basis = ideal_span(vectors, p)
    if len(basis) != (p - 1) * c // 2:
        return False
    return all(hermitian_form(u, v, p) == 0 for i, u in enumerate(basis) for v in basis[i:])


class YorgovResult(NamedTuple):
    a: bool
    b: bool


def yorgov_check(C: BinaryCode, sigma: Permutation) -> YorgovResult:
    """Evaluate "C self-dual" and "projection self-dual and phi image Hermitian
    self-dual" independently."""
    d = decompose(C, sigma)
    image = phi_p_image(d)
    a = is_self_dual(C)
    b = is_self_dual(d.projected) and hermitian_self_dual(image, d.p, d.c)
    return YorgovResult(a, b)


# ---------------------------------------------------------------------------
# assembling codes from their pieces


def canonical_prime_perm(p: int, c: int, f: int = 0) -> Permutation:
    """``(1..p)(p+1..2p)...`` with ``f`` trailing fixed points."""
    cycles = [range(k * p + 1, (k + 1) * p + 1) for k in range(c)]
    return Permutation.from_cycles([list(cyc) for cyc in cycles], p * c + f)


def assemble(p: int, A: BinaryCode, H: Sequence[QVector], c: int) -> BinaryCode:
    """``pi^-1(A) ⊕ phi_p^-1(I_1-span of H)`` for the canonical type p-(c, f)."""
    f = A.n - c
    if f < 0:
        raise InputError("A must have length c + f >= c")
    sigma = canonical_prime_perm(p, c, f)
    orbits = OrbitPartition.of(sigma)
    rows = [lift(a, orbits) for a in A.basis]
    rows += [phi_inverse(u, orbits, p) for u in (ideal_span(H, p) if H else [])]
    return rref(rows, p * c + f)


def ideal_dimension(vectors: Sequence[QVector], p: int) -> int:
    """Dimension over F_{2^{p-1}} of an I_1-linear code."""
    return rank(flatten(u, p) for u in vectors) // (p - 1)


__all__ = [
    "IdealDecomposition",
    "PrimeAutDecomposition",
    "YorgovResult",
    "assemble",
    "canonical_prime_perm",
    "component_dims",
    "decompose",
    "even_space",
    "even_subcode",
    "hermitian_form",
    "hermitian_self_dual",
    "ideal_dimension",
    "ideal_span",
    "phi_inverse",
    "phi_p_image",
    "phi_vector",
    "project_fixed",
    "yorgov_check",
]
