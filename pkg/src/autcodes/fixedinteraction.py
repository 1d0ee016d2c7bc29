"""How fixed codes of different automorphisms fit together.

Covers sums of fixed codes over an elementary abelian normal subgroup, the
quotient module ``D^perp / D`` built from such a sum, and the projections
induced by two commuting automorphisms of prime order.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from autcodes.errors import DomainError, HypothesisNotMetError, InputError
from autcodes.gf2linalg import (
    BinaryCode,
    contains,
    dual,
    echelon,
    kernel_combinations,
    reduce,
    rref,
)
from autcodes.permaction import (
    CycleType,
    OrbitPartition,
    Permutation,
    act,
    act_code,
    cycle_type,
    eta_projection,
    fixed_code,
    group_closure,
    is_automorphism,
    is_prime,
    projected_fixed_code,
)


def _require_auts(C: BinaryCode, perms: Sequence[Permutation]) -> None:
    for g in perms:
        if not is_automorphism(C, g):
            raise DomainError(f"{g} is not an automorphism of the code")


def sum_fixed_codes(C: BinaryCode, elements: Sequence[Permutation]) -> BinaryCode:
    """``sum_g C(g)`` over the given permutations."""
    if not elements:
        raise InputError("need at least one permutation")
    _require_auts(C, elements)
    rows: list[int] = []
    for g in elements:
        rows += fixed_code(C, g).basis
    return rref(rows, C.n)


@dataclass(frozen=True)
class SubgroupGens:
    """Generators of ``E ⋊ H`` (``E`` elementary abelian, ``H`` acting on it)."""

    e_gens: tuple[Permutation, ...]
    h_gens: tuple[Permutation, ...] = ()

    def e_elements(self) -> list[Permutation]:
        return group_closure(self.e_gens)

    def h_elements(self) -> list[Permutation]:
        if not self.h_gens:
            return [Permutation.identity(self.e_gens[0].degree)]
        return group_closure(self.h_gens)


def _check_elementary_abelian(elems: Sequence[Permutation]) -> int:
    orders = {g.order for g in elems if not g.is_identity()}
    if len(orders) != 1 or not is_prime(next(iter(orders))):
        raise HypothesisNotMetError("E is not an elementary abelian p-group")
    for i, g in enumerate(elems):
        for h in elems[i + 1 :]:
            if not g.commutes_with(h):
                raise HypothesisNotMetError("E is not abelian")
    return orders.pop()


@dataclass(frozen=True)
class Theorem6Result:
    holds: bool
    lhs: BinaryCode
    rhs: BinaryCode


def theorem6_check(
    C: BinaryCode,
    e_gens: Sequence[Permutation],
    h_gens: Sequence[Permutation],
    eps0: Permutation,
) -> Theorem6Result:
    """Compare ``sum_{e in E^x} C(e)`` with ``sum_{k in H} C(eps0)^k``.

    ``H`` must act transitively by conjugation on the non-identity elements
    of ``E``; that is verified here rather than assumed.
    """
    group = SubgroupGens(tuple(e_gens), tuple(h_gens))
    E = group.e_elements()
    H = group.h_elements()
    _require_auts(C, list(e_gens) + list(h_gens))
    _check_elementary_abelian(E)
    nontrivial = {g for g in E if not g.is_identity()}
    if eps0 not in nontrivial:
        raise HypothesisNotMetError(f"{eps0} is not a non-identity element of E")
    orbit_of_eps0 = {eps0 ^ k for k in H}
    if orbit_of_eps0 != nontrivial:
        raise HypothesisNotMetError("H does not act transitively on the non-identity elements of E")
    lhs = sum_fixed_codes(C, sorted(nontrivial, key=lambda g: g.image))
    base = fixed_code(C, eps0)
    rows: list[int] = []
    for k in H:
        rows += act_code(base, k).basis
    rhs = rref(rows, C.n)
    return Theorem6Result(lhs == rhs, lhs, rhs)


@dataclass(frozen=True)
class QuotientProfile:
    D: BinaryCode
    dim_D: int
    dim_D_perp: int
    dim_quotient: int
    sigma_p_fixed_dim: int

    def as_dict(self) -> dict:
        return {
            "dim_D": self.dim_D,
            "dim_D_perp": self.dim_D_perp,
            "dim_quotient": self.dim_quotient,
            "sigma_p_fixed_dim": self.sigma_p_fixed_dim,
        }


def quotient_profile(
    C: BinaryCode, elements: Sequence[Permutation], sigma_p: Permutation
) -> QuotientProfile:
    """Dimensions of ``Q = D^perp / D`` and of its ``sigma_p``-fixed part.

    ``Q`` is represented by coset representatives: the ``D^perp`` basis
    reduced modulo ``D`` and re-echelonised.
    """
    D = sum_fixed_codes(C, elements)
    perp = dual(D)
    if not contains(perp, D):
        raise DomainError("D is not self-orthogonal")
    if act_code(D, sigma_p) != D:
        raise DomainError(f"{sigma_p} does not preserve D")
    reps = echelon(reduce(v, D.basis) for v in perp.basis)
    # Matrix of (sigma_p + 1) on Q in the representative basis, then its kernel.
    images = [reduce(act(r, sigma_p) ^ r, D.basis) for r in reps]
    coords = [_coordinates(v, reps) for v in images]
    fixed_dim = len(kernel_combinations(coords, len(reps)))
    return QuotientProfile(D, D.k, perp.k, len(reps), fixed_dim)


def _coordinates(v: int, basis: Sequence[int]) -> int:
    """Coordinates of ``v`` in an RREF basis (bit i selects basis[i])."""
    out = 0
    for i, b in enumerate(basis):
        piv = (b & -b).bit_length() - 1
        if (v >> piv) & 1:
            v ^= b
            out |= 1 << i
    if v:
        raise AssertionError("vector outside the span of the quotient representatives")
    return out


# ---------------------------------------------------------------------------
# commuting automorphisms of prime order


def double_projection(C: BinaryCode, sigma: Permutation, tau: Permutation) -> tuple[BinaryCode, list[frozenset[int]]]:
    """``pi_eta(pi_sigma(C(sigma))(eta))`` with ``eta = eta_sigma(tau)``.

    Also returns, for every coordinate of the result, the set of original
    coordinates it stands for (an orbit of ``<sigma, tau>``).
    """
    outer = OrbitPartition.of(sigma)
    proj = projected_fixed_code(C, sigma)
    eta = eta_projection(tau, sigma)
    inner = OrbitPartition.of(eta)
    twice = projected_fixed_code(proj, eta)
    blocks = [frozenset(a for k in orb for a in outer.orbits[k]) for orb in inner.orbits]
    return twice, blocks


def _reorder(C: BinaryCode, blocks: Sequence[frozenset[int]]) -> BinaryCode:
    # Sort coordinates by the minimal original coordinate they represent.
    order = sorted(range(len(blocks)), key=lambda k: min(blocks[k]))
    rows = []
    for b in C.basis:
        v = 0
        for new, old in enumerate(order):
            if (b >> old) & 1:
                v |= 1 << new
        rows.append(v)
    return rref(rows, C.n)


@dataclass(frozen=True)
class Remark7Report:
    a: bool
    b: bool
    c: bool
    d: bool | None
    eta_p_of_q: Permutation
    eta_q_of_p: Permutation
    eta_p_type: CycleType | None
    eta_q_type: CycleType | None
    product_type: CycleType | None
    left: BinaryCode
    right: BinaryCode

    def as_dict(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "eta_p_of_q": str(self.eta_p_of_q),
            "eta_q_of_p": str(self.eta_q_of_p),
            "eta_p_of_q_type": str(self.eta_p_type) if self.eta_p_type else None,
            "eta_q_of_p_type": str(self.eta_q_type) if self.eta_q_type else None,
            "product_type": str(self.product_type) if self.product_type else None,
            "double_projection": self.left.rows(),
            "double_projection_length": self.left.n,
        }


def remark7_check(C: BinaryCode, sigma_p: Permutation, sigma_q: Permutation) -> Remark7Report:
    """Flags a-d for commuting automorphisms of prime orders p and q.

    d) is only evaluated for distinct primes: there ``eta_p(sigma_q)`` must
    have type q-(c+b, a+f) and ``eta_q(sigma_p)`` type p-(c+a, b+f) where
    ``sigma_p sigma_q`` has type pq-(a,b,c;f).
    """
    p, q = sigma_p.order, sigma_q.order
    if not (is_prime(p) and is_prime(q)):
        raise DomainError("both permutations must have prime order")
    _require_auts(C, [sigma_p, sigma_q])
    if not sigma_p.commutes_with(sigma_q):
        raise DomainError("the permutations do not commute")
    eta_pq = eta_projection(sigma_q, sigma_p)
    eta_qp = eta_projection(sigma_p, sigma_q)
    flag_a = is_automorphism(projected_fixed_code(C, sigma_p), eta_pq)
    flag_b = is_automorphism(projected_fixed_code(C, sigma_q), eta_qp)
    left, left_blocks = double_projection(C, sigma_p, sigma_q)
    right, right_blocks = double_projection(C, sigma_q, sigma_p)
    flag_c = (
        sorted(map(min, left_blocks)) == sorted(map(min, right_blocks))
        and _reorder(left, left_blocks) == _reorder(right, right_blocks)
    )
    flag_d = None
    t_pq = t_qp = prod = None
    if p != q:
        prod = cycle_type(sigma_p * sigma_q, (p, q))
        t_pq = cycle_type(eta_pq, q)
        t_qp = cycle_type(eta_qp, p)
        flag_d = (t_pq.c, t_pq.f) == (prod.c + prod.b, prod.a + prod.f) and (t_qp.c, t_qp.f) == (
            prod.c + prod.a,
            prod.b + prod.f,
        )
    return Remark7Report(
        flag_a,
        flag_b,
        flag_c,
        flag_d,
        eta_pq,
        eta_qp,
        t_pq,
        t_qp,
        prod,
        _reorder(left, left_blocks),
        _reorder(right, right_blocks),
    )
