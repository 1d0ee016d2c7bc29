import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from autcodes.errors import DomainError, InputError
from autcodes.cyclotomic import (
    ExtFieldElem,
    FrobeniusHalf,
    conj,
    crt_idempotents,
    cyclotomic_cosets,
    factor_xp1,
    field_generator,
    frobenius_half,
    ideal_decomposition,
    ord2_mod_p,
    pdivmod,
    pext_gcd,
    pmul,
    poly_str,
    qmul,
    trace_half,
    xp1,
)
from autcodes.permaction import act

PRIMES = [3, 5, 7, 11, 13, 17, 23]


def poly(*exps):
    return sum(1 << e for e in exps)


# --- plain polynomial arithmetic -------------------------------------------


@given(st.integers(0, 2**12), st.integers(1, 2**8))
def test_divmod_roundtrip(a, b):
    q, r = pdivmod(a, b)
    assert pmul(q, b) ^ r == a
    assert r == 0 or r.bit_length() < b.bit_length()


@given(st.integers(1, 2**10), st.integers(1, 2**10))
def test_ext_gcd_bezout(a, b):
    g, u, v = pext_gcd(a, b)
    assert pmul(u, a) ^ pmul(v, b) == g
    assert pdivmod(a, g)[1] == 0 and pdivmod(b, g)[1] == 0


def test_poly_str():
    assert poly_str(poly(0, 1, 3)) == "1+x+x^3"
    assert poly_str(0) == "0"


@given(st.integers(0, 2**7 - 1), st.integers(0, 2**7 - 1))
def test_qmul_against_oracle(a, b):
    p = 7
    got = qmul(a, b, p)
    want = oracles.ring_mul(oracles.bits(a, p), oracles.bits(b, p), p)
    assert oracles.bits(got, p) == tuple(want)


# --- s(p) ------------------------------------------------------------------


@pytest.mark.parametrize("p,s", [(3, 2), (5, 4), (7, 3), (11, 10), (13, 12), (17, 8), (23, 11)])
def test_ord2(p, s):
    assert ord2_mod_p(p) == s == oracles.ord2(p)


@pytest.mark.parametrize("bad", [1, 2, 9, 15])
def test_ord2_rejects_non_odd_primes(bad):
    with pytest.raises(InputError):
        ord2_mod_p(bad)


def test_cosets_partition():
    for p in PRIMES:
        cos = cyclotomic_cosets(p)
        assert sorted(i for K in cos for i in K) == list(range(p))
        assert all(len(K) == ord2_mod_p(p) for K in cos[1:])


# --- factorisation -----------------------------------------------------------


def test_factor_examples():
    assert factor_xp1(3) == (poly(0, 1), poly(0, 1, 2))
    assert factor_xp1(5) == (poly(0, 1), poly(0, 1, 2, 3, 4))
    assert set(factor_xp1(7)) == {poly(0, 1), poly(0, 1, 3), poly(0, 2, 3)}
    assert factor_xp1(7)[0] == poly(0, 1)


@pytest.mark.parametrize("p", PRIMES)
def test_factors_multiply_back_and_are_irreducible(p):
    factors = factor_xp1(p)
    prod = 1
    for q in factors:
        prod = pmul(prod, q)
        assert oracles.is_irreducible(oracles.poly_from_int(q))
    assert prod == xp1(p)
    s = ord2_mod_p(p)
    assert all(q.bit_length() - 1 == s for q in factors[1:])
    assert len(factors) == 1 + (p - 1) // s


# --- idempotents -------------------------------------------------------------


def test_idempotent_examples():
    d3 = ideal_decomposition(3)
    assert d3.idempotents == (poly(0, 1, 2), poly(1, 2))
    assert ideal_decomposition(5).idempotents[1] == poly(1, 2, 3, 4)


@pytest.mark.parametrize("p", PRIMES)
def test_idempotent_identities(p):
    dec = ideal_decomposition(p)
    es = dec.idempotents
    total = 0
    for i, e in enumerate(es):
        eb = oracles.bits(e, p)
        assert tuple(oracles.ring_mul(eb, eb, p)) == eb
        for j in range(i + 1, len(es)):
            assert qmul(e, es[j], p) == 0
        total ^= e
        # e_j = 1 mod q_j, 0 mod the others
        for k, q in enumerate(dec.factors):
            assert pdivmod(e, q)[1] == (1 if k == i else 0)
    assert total == 1


def test_generators_are_not_idempotent_in_general():
    dec = ideal_decomposition(3)
    Q1 = dec.generators[1]
    assert Q1 == poly(0, 1)
    assert qmul(Q1, Q1, 3) != Q1
    assert dec.in_ideal(Q1, 1)


def test_crt_rejects_non_factor():
    with pytest.raises(InputError):
        crt_idempotents(5, (poly(0, 1), poly(0, 1, 2)))


# --- field arithmetic ----------------------------------------------------------


def test_gf4_examples():
    dec = ideal_decomposition(3)
    w = dec.elem(poly(0, 1))
    assert (w * w).value == poly(0, 2)
    assert (w * dec.elem(poly(0, 2))).value == poly(1, 2) == dec.idempotents[1]
    for a in dec.ideal_elements(1):
        assert qmul(a, dec.idempotents[1], 3) == a


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_ideals_are_fields(p):
    dec = ideal_decomposition(p)
    for j in range(1, dec.t + 1):
        g = field_generator(dec, j)
        assert g.multiplicative_order() == dec.field_order(j) - 1
        assert len(dec.ideal_elements(j)) == dec.field_order(j)
        for a in dec.ideal_elements(j)[1:]:
            x = ExtFieldElem(dec, j, a)
            assert (x * x.inverse()).value == dec.idempotents[j]


def test_field_errors():
    dec = ideal_decomposition(5)
    with pytest.raises(DomainError):
        dec.elem(0).inverse()
    with pytest.raises(DomainError):
        dec.elem(1)  # 1 is not in I_1
    with pytest.raises(DomainError):
        ideal_decomposition(7).big_ideal


# --- conjugation -----------------------------------------------------------------


def test_frobenius_examples():
    dec = ideal_decomposition(3)
    w = dec.elem(poly(0, 1))
    assert frobenius_half(w).value == poly(0, 2)
    fh = FrobeniusHalf(3)
    assert str(fh.coordinate_permutation) == "(2,3)"
    assert act(poly(0, 1), fh.coordinate_permutation) == poly(0, 2)
    assert str(FrobeniusHalf(5).coordinate_permutation) == "(2,5)(3,4)"
    assert trace_half(w).value == dec.idempotents[1]
    assert trace_half(dec.elem(0)).value == 0
    with pytest.raises(DomainError):
        FrobeniusHalf(7)


@pytest.mark.parametrize("p", [3, 5, 11, 13])
def test_frobenius_is_coefficient_reversal(p):
    dec = ideal_decomposition(p)
    perm = FrobeniusHalf(p).coordinate_permutation
    rng = random.Random(p)
    elems = dec.ideal_elements(1) if p <= 7 else [rng.choice(dec.ideal_elements(1)) for _ in range(300)]
    for a in elems:
        x = dec.elem(a)
        img = frobenius_half(x)
        assert img.value == act(a, perm) == conj(a, p)
        assert frobenius_half(img) == x
        t = trace_half(x)
        assert frobenius_half(t) == t
