"""Self-dual codes carrying a dihedral group <sigma_p, sigma_2> of order 2p.

Both permutations are fixed point free and in canonical position:
``sigma_p = (1..p)(p+1..2p)...`` and ``sigma_2`` swaps blocks ``2k-1`` and
``2k``, sending the first coordinate of a block to the first coordinate of
its partner and coordinate ``i >= 2`` to coordinate ``p + 2 - i``.  On the
cycle-wise ring picture ``sigma_2`` then reads
``(e1, e2, ..., e_{c-1}, e_c) -> (conj e2, conj e1, ..., conj e_c, conj e_{c-1})``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from autcodes.cyclotomic import conj, ideal_decomposition, ord2_mod_p, qmul
from autcodes.errors import DomainError, HypothesisNotMetError, InputError
from autcodes.gf2linalg import BinaryCode, echelon, is_self_dual, rank, rref
from autcodes.permaction import (
    OrbitPartition,
    Permutation,
    fixed_code,
    is_automorphism,
    is_prime,
    lift,
    projected_fixed_code,
)
from autcodes.primedecomp import (
    QVector,
    decompose,
    flatten,
    ideal_span,
    phi_inverse,
    phi_vector,
    unflatten,
)


@dataclass(frozen=True)
class DihedralContext:
    p: int
    n: int
    sigma_p: Permutation
    sigma_2: Permutation

    @property
    def c(self) -> int:
        return self.n // self.p


@dataclass(frozen=True)
class DihedralPair:
    A: BinaryCode
    B: tuple[QVector, ...]


def canonical_perms(p: int, n: int) -> DihedralContext:
    if p % 2 == 0 or not is_prime(p):
        raise InputError(f"{p} is not an odd prime")
    if ord2_mod_p(p) != p - 1:
        raise InputError(f"s({p}) != {p}-1")
    if n <= 0 or n % (2 * p):
        raise InputError(f"2p = {2 * p} does not divide n = {n}")
    c = n // p
    sigma_p = Permutation.from_cycles(
        [list(range(k * p + 1, (k + 1) * p + 1)) for k in range(c)], n
    )
    image = list(range(n))
    for blk in range(0, c, 2):
        left, right = blk * p, (blk + 1) * p
        image[left], image[right] = right, left
        for i in range(1, p):
            image[left + i] = right + p - i
            image[right + i] = left + p - i
    sigma_2 = Permutation(tuple(image))
    if sigma_2 * sigma_p * sigma_2 != sigma_p.inverse():
        raise AssertionError("canonical permutations violate the dihedral relation")
    return DihedralContext(p, n, sigma_p, sigma_2)


def trace_hermitian_form(u: Sequence[int], v: Sequence[int], p: int) -> int:
    """``sum_i (u_i conj(v_i) + conj(u_i) v_i)``."""
    out = 0
    for a, b in zip(u, v):
        out ^= qmul(a, conj(b, p), p) ^ qmul(conj(a, p), b, p)
    return out


def subfield_basis(p: int) -> list[int]:
    """F2-basis of the conjugation-fixed subfield of I_1 (order 2^((p-1)/2)),
    taken as the image of ``a -> a + conj(a)``."""
    dec = ideal_decomposition(p)
    return echelon(b ^ conj(b, p) for b in dec.ideal_basis(1))


def _b_basis(B: Sequence[QVector], p: int, half: int) -> list[QVector]:
    if any(len(u) != half for u in B):
        raise InputError(f"B vectors must have c/2 = {half} entries")
    return [unflatten(r, half, p) for r in echelon(flatten(u, p) for u in B)]


def trace_hermitian_self_dual(B: Sequence[QVector], p: int, c: int) -> bool:
    half = c // 2
    basis = _b_basis(B, p, half)
    if 4 * len(basis) != (p - 1) * c:
        return False
    return all(
        trace_hermitian_form(u, v, p) == 0 for i, u in enumerate(basis) for v in basis[i:]
    )


def is_subfield_linear(B: Sequence[QVector], p: int) -> bool:
    span = echelon(flatten(u, p) for u in B)
    for u in B:
        for lam in subfield_basis(p):
            scaled = flatten(tuple(qmul(lam, a, p) for a in u), p)
            if rank(span + [scaled]) != len(span):
                return False
    return True


def lift_b(beta: QVector, p: int) -> QVector:
    """``(b1, ..., b_{c/2}) -> (b1, conj b1, ..., b_{c/2}, conj b_{c/2})``."""
    out: list[int] = []
    for a in beta:
        out += [a, conj(a, p)]
    return tuple(out)


def sigma2_on_phi(u: QVector, p: int) -> QVector:
    """Action of the canonical ``sigma_2`` on Q^c."""
    out: list[int] = []
    for k in range(0, len(u), 2):
        out += [conj(u[k + 1], p), conj(u[k], p)]
    return tuple(out)


def validate_pair(pair: DihedralPair, ctx: DihedralContext) -> None:
    if pair.A.n != ctx.c or not is_self_dual(pair.A):
        raise DomainError(f"A must be a self-dual code of length c = {ctx.c}")
    dec = ideal_decomposition(ctx.p)
    if any(not dec.in_ideal(a, 1) for u in pair.B for a in u):
        raise DomainError("entries of B must lie in the ideal I_1")
    if not trace_hermitian_self_dual(pair.B, ctx.p, ctx.c):
        raise DomainError("B is not trace-Hermitian self-dual")
    if not is_subfield_linear(pair.B, ctx.p):
        raise DomainError("B is not linear over the half-degree subfield")


def construct(pair: DihedralPair, ctx: DihedralContext) -> BinaryCode:
    """``pi^-1(A) ⊕ phi_p^-1(<lift(B)> over F_{2^{p-1}})``."""
    validate_pair(pair, ctx)
    orbits = OrbitPartition.of(ctx.sigma_p)
    rows = [lift(a, orbits) for a in pair.A.basis]
    lifted = [lift_b(beta, ctx.p) for beta in pair.B]
    rows += [phi_inverse(u, orbits, ctx.p) for u in ideal_span(lifted, ctx.p)]
    C = rref(rows, ctx.n)
    if not is_self_dual(C):
        raise DomainError("lifted B does not span a Hermitian self-dual code")
    if not (is_automorphism(C, ctx.sigma_p) and is_automorphism(C, ctx.sigma_2)):
        raise AssertionError("constructed code lost the dihedral action")
    return C


def extract_pair(
    C: BinaryCode, ctx: DihedralContext, require_projective: bool = False
) -> DihedralPair:
    """Recover ``(A, B)`` from a self-dual code with the canonical dihedral action.

    The extraction only needs ``E(sigma_p)`` to be free under ``sigma_2``
    (equivalently ``dim B = (p-1)c/4``); that is always checked.  With
    ``require_projective`` the stronger condition "projected fixed code of
    ``sigma_2`` is self-dual" is enforced as well.
    """
    if C.n != ctx.n:
        raise InputError(f"code length {C.n} != context length {ctx.n}")
    if not is_self_dual(C):
        raise HypothesisNotMetError("the code is not self-dual")
    if not (is_automorphism(C, ctx.sigma_p) and is_automorphism(C, ctx.sigma_2)):
        raise HypothesisNotMetError("the canonical permutations are not automorphisms")
    if require_projective and not is_self_dual(projected_fixed_code(C, ctx.sigma_2)):
        raise HypothesisNotMetError("projected fixed code of sigma_2 is not self-dual")
    d = decompose(C, ctx.sigma_p)
    fixed_even = fixed_code(d.even, ctx.sigma_2)
    half = ctx.c // 2
    B = [phi_vector(v, d.orbits, ctx.p)[::2] for v in fixed_even.basis]
    B = _b_basis(B, ctx.p, half)
    if 4 * len(B) != (ctx.p - 1) * ctx.c:
        raise HypothesisNotMetError(
            f"dim B = {len(B)} but the construction needs {(ctx.p - 1) * ctx.c // 4}"
        )
    return DihedralPair(d.projected, tuple(B))


def diagonal_pair(p: int, c: int, A: BinaryCode) -> DihedralPair:
    """Pair with ``B`` = all vectors ``(a1, a1, a2, a2, ...)``, ``a_k`` in I_1.

    Each repeated entry contributes ``2 * trace`` = 0 to the form, so B is
    trace-Hermitian self-dual whenever ``c/2`` is even.
    """
    half = c // 2
    if half % 2:
        raise InputError("diagonal B needs c/2 even")
    dec = ideal_decomposition(p)
    rows = []
    for blk in range(0, half, 2):
        for b in dec.ideal_basis(1):
            u = [0] * half
            u[blk] = u[blk + 1] = b
            rows.append(tuple(u))
    return DihedralPair(A, tuple(rows))
