import itertools
import random

import pytest

from autcodes.errors import DomainError, HypothesisNotMetError, InputError
from autcodes.fixedinteraction import (
    double_projection,
    quotient_profile,
    remark7_check,
    sum_fixed_codes,
    theorem6_check,
)
from autcodes.gf2linalg import BinaryCode, dual, rref
from autcodes.instances import affine_perm, random_invariant_code, random_permutation_of_type
from autcodes.permaction import (
    OrbitPartition,
    Permutation,
    act,
    act_code,
    fixed_code,
    is_automorphism,
)

T1 = affine_perm([1, 2, 4], 1)
T2 = affine_perm([1, 2, 4], 2)
M3 = affine_perm([2, 3, 4])


def test_a4_generators(h8):
    for g in (T1, T2, M3):
        assert is_automorphism(h8, g)
    assert T1 ^ M3 in {T2, T1 * T2}
    assert M3.order == 3 and T1.order == 2 and T1.commutes_with(T2)


def test_sum_fixed_codes_trivial_cases(h8):
    assert sum_fixed_codes(h8, [Permutation.identity(8)]) == h8
    assert sum_fixed_codes(h8, [T1]) == fixed_code(h8, T1)
    with pytest.raises(DomainError):
        sum_fixed_codes(h8, [Permutation.parse("(1,2)", 8)])
    with pytest.raises(InputError):
        sum_fixed_codes(h8, [])


def test_sum_fixed_codes_order_independent(h8):
    klein = [T1, T2, T1 * T2]
    base = sum_fixed_codes(h8, klein)
    for perm in itertools.permutations(klein):
        assert sum_fixed_codes(h8, list(perm)) == base


def test_theorem6_on_a4(h8):
    res = theorem6_check(h8, [T1, T2], [M3], T1)
    assert res.holds
    assert res.lhs == sum_fixed_codes(h8, [T1, T2, T1 * T2])


def test_theorem6_cyclic_e(h8):
    res = theorem6_check(h8, [T1], [], T1)
    assert res.holds and res.lhs == res.rhs == fixed_code(h8, T1)


def test_theorem6_needs_transitivity(h8):
    with pytest.raises(HypothesisNotMetError):
        theorem6_check(h8, [T1, T2], [], T1)


def test_theorem6_on_a4_conjugates(h8):
    rng = random.Random(31)
    for _ in range(10):
        s = Permutation(tuple(rng.sample(range(8), 8)))
        C = act_code(h8, s)
        assert theorem6_check(C, [T1 ^ s, T2 ^ s], [M3 ^ s], T1 ^ s).holds


# --- quotient ------------------------------------------------------------------


def brute_quotient_fixed_dim(D, sigma):
    """log2 of the number of sigma-fixed cosets of D in D^perp."""
    perp = dual(D)
    reps = {}
    dwords = list(D.codewords())
    for v in perp.codewords():
        key = min(v ^ d for d in dwords)
        reps[key] = v
    fixed = sum(1 for v in reps.values() if act(v, sigma) ^ v in D)
    return fixed.bit_length() - 1


def test_quotient_self_dual_d(h8):
    q = quotient_profile(h8, [T1, T2, T1 * T2], M3)
    assert (q.dim_D, q.dim_D_perp, q.dim_quotient, q.sigma_p_fixed_dim) == (4, 4, 0, 0)


def test_quotient_zero_d():
    C = BinaryCode.zero(6)
    s = Permutation.parse("(1,2,3)(4,5,6)", 6)
    q = quotient_profile(C, [Permutation.identity(6)], s)
    assert (q.dim_D, q.dim_quotient, q.sigma_p_fixed_dim) == (0, 6, 2)


def test_quotient_against_brute_force(h8):
    q = quotient_profile(h8, [T1], T2)
    assert q.dim_quotient == q.dim_D_perp - q.dim_D == 2
    assert q.sigma_p_fixed_dim == brute_quotient_fixed_dim(q.D, T2)


def test_quotient_against_brute_force_random():
    rng = random.Random(32)
    checked = 0
    for _ in range(200):
        g = random_permutation_of_type([6, 6], 12, rng)
        s2, s3 = g**3, g**2
        C = random_invariant_code(g, rng)
        try:
            q = quotient_profile(C, [s2], s3)
        except DomainError:
            continue
        assert q.sigma_p_fixed_dim == brute_quotient_fixed_dim(q.D, s3)
        checked += 1
    assert checked >= 10


def test_quotient_errors(h8):
    with pytest.raises(DomainError):
        quotient_profile(rref(["111000"], 6), [Permutation.identity(6)], Permutation.identity(6))
    with pytest.raises(DomainError):
        quotient_profile(h8, [T1], M3)


# --- commuting automorphisms of two primes -------------------------------------------


S2 = Permutation.parse("(1,2)(3,4)(5,6)", 6)
S3 = Permutation.parse("(1,3,5)(2,4,6)", 6)


def test_remark7_six_three(c63):
    C, _ = c63
    rep = remark7_check(C, S2, S3)
    assert (rep.a, rep.b, rep.c, rep.d) == (True, True, True, True)
    assert str(rep.product_type) == "6-(0,0,1;0)"
    assert str(rep.eta_p_type) == "3-(1,0)"  # eta_{sigma_2}(sigma_3)
    assert str(rep.eta_q_type) == "2-(1,0)"  # eta_{sigma_3}(sigma_2)


def test_double_projection_is_one_coordinate(c63):
    C, _ = c63
    left, blocks = double_projection(C, S2, S3)
    assert left.n == 1 and left.rows() == ["1"]
    assert blocks == [frozenset(range(6))]


def test_remark7_same_prime(c63):
    C, _ = c63
    rep = remark7_check(C, S2, S2)
    assert rep.a and rep.b and rep.d is None


def test_remark7_errors(c63):
    C, _ = c63
    with pytest.raises(DomainError):
        remark7_check(C, Permutation.parse("(1,2)", 6), S3)
    with pytest.raises(DomainError):
        remark7_check(C, Permutation.parse("(1,2,3,4,5,6)", 6), S3)


@pytest.mark.parametrize("lengths", [[6, 6], [6, 2, 3], [6, 3, 3, 2], [10, 5, 2], [6, 6, 1]])
def test_remark7_on_random_commuting_pairs(lengths):
    rng = random.Random(sum(lengths))
    n = sum(lengths)
    for _ in range(20):
        g = random_permutation_of_type(lengths, n, rng)
        order = g.order
        p, q = sorted({r for r in (2, 3, 5) if order % r == 0})
        sp, sq = g ** (order // p), g ** (order // q)
        C = random_invariant_code(g, rng)
        rep = remark7_check(C, sp, sq)
        assert rep.a and rep.b and rep.c and rep.d
        prod = rep.product_type
        assert q * (prod.c + prod.b) + (prod.a + prod.f) == len(OrbitPartition.of(sp))


def test_double_projection_blocks_against_orbits():
    rng = random.Random(33)
    g = random_permutation_of_type([6, 6, 2, 3], 17, rng)
    sp, sq = g**3, g**2
    C = random_invariant_code(g, rng)
    _, blocks = double_projection(C, sp, sq)
    seen = set()
    for b in blocks:
        assert not seen & b
        seen |= b
        # each block is an orbit of <sp, sq>
        start = min(b)
        orbit = {start}
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for s in (sp, sq):
                if s(i) not in orbit:
                    orbit.add(s(i))
                    frontier.append(s(i))
        assert orbit == b
    assert seen == set(range(17))
