"""Self-dual codes with an automorphism of order 2p (p an odd prime).

The involution ``sigma_2 = sigma_2p^p`` must act without fixed points, so
``sigma_2p`` has type 2p-(w,0,x;0): ``w`` transpositions, ``x`` cycles of
length 2p, and ``n = 2px + 2w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from autcodes.cyclotomic import IdealDecomposition, ideal_decomposition
from autcodes.errors import DomainError
from autcodes.gf2linalg import BinaryCode, contains, dual, is_self_dual, rref
from autcodes.permaction import (
    OrbitPartition,
    Permutation,
    act,
    cycle_type,
    fixed_code,
    group_poly_image,
    is_automorphism,
    is_prime,
    projected_fixed_code,
)


@dataclass(frozen=True)
class TwoPContext:
    code: BinaryCode
    sigma: Permutation
    p: int
    w: int
    x: int

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def sigma_2(self) -> Permutation:
        return self.sigma**self.p

    @property
    def sigma_p(self) -> Permutation:
        return self.sigma**2

    @property
    def decomposition(self) -> IdealDecomposition:
        return ideal_decomposition(self.p)


def make_context(C: BinaryCode, sigma_2p: Permutation) -> TwoPContext:
    """Validate ``(C, sigma_2p)`` and read off ``w`` and ``x``."""
    order = sigma_2p.order
    if order % 2 or not is_prime(order // 2) or order == 4:
        raise DomainError(f"{sigma_2p} has order {order}, not 2p for an odd prime p")
    p = order // 2
    if not is_self_dual(C):
        raise DomainError("the code must be self-dual")
    if not is_automorphism(C, sigma_2p):
        raise DomainError(f"{sigma_2p} is not an automorphism of the code")
    ct = cycle_type(sigma_2p, (2, p))
    if ct.b or ct.f:
        raise DomainError(f"type {ct} is not of the form 2p-(w,0,x;0)")
    return TwoPContext(C, sigma_2p, p, ct.a, ct.c)


def _fixed_point_free_involution(sigma_2: Permutation) -> None:
    if sigma_2.order != 2 or sigma_2.fixed_points:
        raise DomainError(f"{sigma_2} is not a fixed-point-free involution")


def phi_fold(C: BinaryCode, sigma_2: Permutation) -> BinaryCode:
    """Sum the two coordinates of each ``sigma_2``-orbit."""
    _fixed_point_free_involution(sigma_2)
    orbits = OrbitPartition.of(sigma_2).orbits
    rows = []
    for b in C.basis:
        v = 0
        for k, (i, j) in enumerate(orbits):
            if ((b >> i) ^ (b >> j)) & 1:
                v |= 1 << k
        rows.append(v)
    return rref(rows, len(orbits))


class ChainResult(NamedTuple):
    holds: bool
    dim_phi: int
    dim_proj: int


def bouyuklieva_chain(C: BinaryCode, sigma_2: Permutation) -> ChainResult:
    """Check ``phi(C) <= pi(C(sigma_2)) = phi(C)^perp``."""
    _fixed_point_free_involution(sigma_2)
    if not is_self_dual(C) or not is_automorphism(C, sigma_2):
        raise DomainError("needs a self-dual code with sigma_2 as automorphism")
    folded = phi_fold(C, sigma_2)
    proj = projected_fixed_code(C, sigma_2)
    holds = contains(proj, folded) and proj == dual(folded)
    return ChainResult(holds, folded.k, proj.k)


class Projectivity(NamedTuple):
    criterion: bool
    oracle: bool


def is_projective(ctx: TwoPContext) -> Projectivity:
    """Criterion: the projected fixed code of sigma_2 is self-dual.  Oracle:
    the code is free over the order-2 subgroup, i.e. ``dim C(sigma_2) = k/2``."""
    s2 = ctx.sigma_2
    criterion = is_self_dual(projected_fixed_code(ctx.code, s2))
    oracle = 2 * fixed_code(ctx.code, s2).k == ctx.code.k
    return Projectivity(criterion, oracle)


@dataclass(frozen=True)
class ModuleProfile:
    """Multiplicities ``y_i`` (uniserial V_i/V_i summands) and ``z_i`` (simple V_i)."""

    p: int
    s: int
    y: tuple[int, ...]
    z: tuple[int, ...]

    def block_size(self, i: int) -> int:
        return 1 if i == 0 else self.s

    def total_dim(self) -> int:
        return sum(self.block_size(i) * (2 * y + z) for i, (y, z) in enumerate(zip(self.y, self.z)))

    def as_dict(self) -> dict:
        return {"p": self.p, "s": self.s, "y": list(self.y), "z": list(self.z)}


def module_profile(ctx: TwoPContext) -> ModuleProfile:
    """Split ``C`` by the CRT idempotents of ``sigma_p`` and measure ``1 + sigma_2``.

    ``1 + sigma_2`` kills the simple summands and maps each non-split
    extension onto its socle, so its rank on a component counts the ``y_i``.
    """
    dec = ctx.decomposition
    sp, s2 = ctx.sigma_p, ctx.sigma_2
    ys, zs = [], []
    for i, e in enumerate(dec.idempotents):
        comp = group_poly_image(ctx.code, sp, e)
        size = 1 if i == 0 else dec.s
        folded = rref([b ^ act(b, s2) for b in comp.basis], ctx.n)
        if comp.k % size or folded.k % size:
            raise AssertionError("component dimensions are not multiples of the field degree")
        y = folded.k // size
        ys.append(y)
        zs.append(comp.k // size - 2 * y)
    return ModuleProfile(ctx.p, dec.s, tuple(ys), tuple(zs))


@dataclass(frozen=True)
class ConstraintCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ConstraintReport:
    checks: tuple[ConstraintCheck, ...]
    pairing: str

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def get(self, name: str) -> ConstraintCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]


def check_profile_constraints(profile: ModuleProfile, ctx: TwoPContext) -> ConstraintReport:
    """Evaluate the multiplicity constraints applicable to ``profile``.

    For odd ``s(p)`` the ideal paired with ``i`` is the one whose factor is
    the reciprocal of ``q_i`` (inverse cyclotomic coset).
    """
    y, z, x, w = profile.y, profile.z, ctx.x, ctx.w
    t = len(y) - 1
    checks = [
        ConstraintCheck("a", 2 * y[0] + z[0] == x + w, f"2*{y[0]}+{z[0]} vs x+w={x + w}"),
    ]
    if profile.s % 2 == 0:
        for i in range(1, t + 1):
            checks.append(
                ConstraintCheck(f"b1[{i}]", 2 * y[i] + z[i] == x, f"2*{y[i]}+{z[i]} vs x={x}")
            )
        checks.append(
            ConstraintCheck(
                "parity",
                all((z[i] - x) % 2 == 0 for i in range(1, t + 1)),
                f"x={x}, z={list(z[1:])}",
            )
        )
        pairing = "self (every factor is self-reciprocal)"
    else:
        dec = ideal_decomposition(profile.p)
        pairs = []
        for i in range(1, t + 1):
            j = dec.reciprocal_index(i)
            pairs.append(f"{i}<->{j}")
            ok = z[i] == z[j] and y[i] + y[j] + z[i] == x
            checks.append(
                ConstraintCheck(
                    f"b2[{i}]", ok, f"z_{i}={z[i]}, z_{j}={z[j]}, y_{i}+y_{j}+z_{i}={y[i] + y[j] + z[i]} vs x={x}"
                )
            )
        pairing = "reciprocal: " + ", ".join(pairs)
    return ConstraintReport(tuple(checks), pairing)


class Corollary1Result(NamedTuple):
    applicable: bool
    bound_holds: bool


def corollary1_check(ctx: TwoPContext) -> Corollary1Result:
    """When ``n = 0 mod 4``, ``s(p)`` even and ``w`` odd:
    ``dim C(sigma_2) >= n/4 + (p-1)/2`` and the projection is not self-dual."""
    applicable = ctx.n % 4 == 0 and ctx.decomposition.s % 2 == 0 and ctx.w % 2 == 1
    if not applicable:
        return Corollary1Result(False, False)
    fixed = fixed_code(ctx.code, ctx.sigma_2)
    bound = 4 * fixed.k >= ctx.n + 2 * (ctx.p - 1)
    not_sd = not is_self_dual(projected_fixed_code(ctx.code, ctx.sigma_2))
    return Corollary1Result(True, bound and not_sd)
