import random

import pytest

from autcodes.errors import DomainError
from autcodes.gf2linalg import dual, is_self_dual, rref
from autcodes.instances import (
    all_self_dual_codes,
    involutions,
    random_invariant_self_dual,
    random_permutation_of_type,
)
from autcodes.permaction import Permutation, fixed_code, is_automorphism, projected_fixed_code
from autcodes.twopmodule import (
    ModuleProfile,
    bouyuklieva_chain,
    check_profile_constraints,
    corollary1_check,
    is_projective,
    make_context,
    module_profile,
    phi_fold,
)


def random_context(p, x, w, rng):
    n = 2 * p * x + 2 * w
    sigma = random_permutation_of_type([2 * p] * x + [2] * w, n, rng)
    C = random_invariant_self_dual(sigma, rng)
    assert C is not None
    return make_context(C, sigma)


# --- the fold map and the chain --------------------------------------------------


def test_phi_fold_examples():
    s = Permutation.parse("(1,2)(3,4)", 4)
    assert phi_fold(rref(["1100"], 4), s).k == 0
    assert phi_fold(rref(["1011"], 4), s) == rref(["10"], 2)
    with pytest.raises(DomainError):
        phi_fold(rref(["1100"], 4), Permutation.parse("(1,2)", 4))


def test_fold_kills_fixed_vectors(h8):
    s = Permutation.parse("(1,2)(3,4)(5,6)(7,8)", 8)
    assert phi_fold(fixed_code(h8, s), s).k == 0


def test_chain_small_cases():
    assert bouyuklieva_chain(rref(["11"], 2), Permutation.parse("(1,2)", 2)) == (True, 0, 1)
    s = Permutation.parse("(1,2)(3,4)", 4)
    found = 0
    for C in all_self_dual_codes(4):
        if is_automorphism(C, s):
            assert bouyuklieva_chain(C, s).holds
            found += 1
    assert found >= 1


def test_chain_on_hamming_involutions(h8):
    count = 0
    for s in involutions(8):
        if not s.fixed_points and is_automorphism(h8, s):
            res = bouyuklieva_chain(h8, s)
            assert res.holds and res.dim_phi + res.dim_proj == 4
            count += 1
    assert count > 0


def test_chain_on_all_length8_codes():
    s = Permutation.parse("(1,2)(3,4)(5,6)(7,8)", 8)
    checked = 0
    for C in all_self_dual_codes(8):
        if is_automorphism(C, s):
            assert bouyuklieva_chain(C, s).holds
            checked += 1
    assert checked > 0


# --- projectivity -------------------------------------------------------------------


def test_six_three_instance(c63):
    C, s = c63
    ctx = make_context(C, s)
    assert (ctx.p, ctx.w, ctx.x) == (3, 0, 1)
    assert fixed_code(C, ctx.sigma_2).k == 3
    assert is_projective(ctx) == (False, False)


def test_projective_instance_found_by_search():
    rng = random.Random(11)
    for _ in range(200):
        ctx = random_context(3, 2, 0, rng)
        res = is_projective(ctx)
        assert res.criterion == res.oracle
        if res.criterion:
            assert fixed_code(ctx.code, ctx.sigma_2).k == 3
            return
    pytest.fail("no projective [12,6] instance found")


def test_make_context_errors(h8, c63):
    C, s = c63
    with pytest.raises(DomainError):
        make_context(C, Permutation.parse("(1,2,3)(4,5,6)", 6))
    with pytest.raises(DomainError):
        make_context(rref(["110000"], 6), s)
    with pytest.raises(DomainError):
        make_context(h8, Permutation.parse("(1,2,3,4,5,6)", 8))  # fixed points


# --- module profile -------------------------------------------------------------------


def test_profile_of_six_three(c63):
    C, s = c63
    ctx = make_context(C, s)
    prof = module_profile(ctx)
    assert (prof.y[0], prof.z[0], prof.y[1], prof.z[1]) == (0, 1, 0, 1)
    assert 2 * prof.y[0] + prof.z[0] == ctx.x + ctx.w
    assert prof.total_dim() == C.k
    report = check_profile_constraints(prof, ctx)
    assert report.names() == ["a", "b1[1]", "parity"]
    assert report.all_passed


def test_violating_profile(c63):
    ctx = make_context(*c63)
    fake = ModuleProfile(3, 2, (0, 1), (1, 0))
    report = check_profile_constraints(fake, ctx)
    assert not report.get("b1[1]").passed


def test_profile_p7_reciprocal_pairing():
    rng = random.Random(12)
    ctx = random_context(7, 2, 0, rng)
    assert ctx.n == 28 and ctx.code.k == 14
    prof = module_profile(ctx)
    assert prof.s == 3 and len(prof.y) == 3
    report = check_profile_constraints(prof, ctx)
    assert report.names() == ["a", "b2[1]", "b2[2]"]
    assert "1<->2" in report.pairing
    assert report.all_passed
    assert prof.total_dim() == 14


@pytest.mark.parametrize("p,x,w", [(3, 1, 1), (3, 1, 2), (3, 2, 1), (5, 1, 1), (5, 1, 2), (7, 1, 0)])
def test_profile_accounting_and_theorem(p, x, w):
    rng = random.Random(p * 100 + x * 10 + w)
    for _ in range(10):
        ctx = random_context(p, x, w, rng)
        prof = module_profile(ctx)
        assert prof.total_dim() == ctx.code.k
        assert check_profile_constraints(prof, ctx).all_passed
        res = is_projective(ctx)
        assert res.criterion == res.oracle
        assert bouyuklieva_chain(ctx.code, ctx.sigma_2).holds


# --- corollary -----------------------------------------------------------------------


def test_corollary_not_applicable(c63):
    assert corollary1_check(make_context(*c63)) == (False, False)
    rng = random.Random(13)
    ctx = random_context(3, 2, 2, rng)  # w even
    assert ctx.n % 4 == 0
    assert not corollary1_check(ctx).applicable
    ctx = random_context(7, 2, 0, rng)  # s(7) odd
    assert not corollary1_check(ctx).applicable


@pytest.mark.parametrize("p,x,w", [(3, 1, 1), (3, 1, 3), (3, 3, 1), (5, 1, 1)])
def test_corollary_bound(p, x, w):
    rng = random.Random(p + x + w)
    for _ in range(10):
        ctx = random_context(p, x, w, rng)
        res = corollary1_check(ctx)
        assert res.applicable and res.bound_holds
        fixed = fixed_code(ctx.code, ctx.sigma_2)
        assert 4 * fixed.k >= ctx.n + 2 * (p - 1)
        assert not is_projective(ctx).criterion


def test_dual_of_fold_is_projection(c63):
    C, s = c63
    ctx = make_context(C, s)
    assert projected_fixed_code(C, ctx.sigma_2) == dual(phi_fold(C, ctx.sigma_2))
    assert not is_self_dual(projected_fixed_code(C, ctx.sigma_2))
