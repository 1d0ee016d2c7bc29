"""Deliberately naive reference implementations used to cross-check the
library.  Everything here works on explicit sets of 0/1 tuples or plain
coefficient lists, never on the packed-int machinery under test."""

from __future__ import annotations

import itertools


def bits(v: int, n: int) -> tuple[int, ...]:
    return tuple((v >> i) & 1 for i in range(n))


def span(rows, n):
    """All codewords as a set of tuples (exponential, fine for k <= 16)."""
    rows = [bits(r, n) if isinstance(r, int) else tuple(r) for r in rows]
    words = {tuple([0] * n)}
    for r in rows:
        words |= {tuple(a ^ b for a, b in zip(w, r)) for w in words}
    return words


def brute_dual(words, n):
    return {
        v
        for v in itertools.product((0, 1), repeat=n)
        if all(sum(a & b for a, b in zip(v, w)) % 2 == 0 for w in words)
    }


def weight_distribution(words, n):
    out = [0] * (n + 1)
    for w in words:
        out[sum(w)] += 1
    return out


def permute_word(w, image):
    """Right action: coordinate i (0-based) moves to image[i]."""
    out = [0] * len(w)
    for i, a in enumerate(w):
        out[image[i]] = a
    return tuple(out)


# --- polynomials as coefficient lists (index = power) ----------------------


def poly_from_int(a):
    return [(a >> i) & 1 for i in range(max(a.bit_length(), 1))]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] ^= y
    return out


def poly_mod(a, m):
    a = list(a)
    dm = max(i for i, c in enumerate(m) if c)
    for i in range(len(a) - 1, dm - 1, -1):
        if a[i]:
            for j, c in enumerate(m):
                if c:
                    a[i - dm + j] ^= 1
    return a[:dm] + [0] * max(0, dm - len(a))


def is_irreducible(a):
    """Trial division by every polynomial of degree 1..deg/2."""
    d = max(i for i, c in enumerate(a) if c)
    for dd in range(1, d // 2 + 1):
        for tail in range(1 << dd):
            cand = [(tail >> i) & 1 for i in range(dd)] + [1]
            if not any(poly_mod(a, cand)):
                return False
    return True


def ring_mul(a, b, p):
    """Product in F2[x]/(x^p + 1) on length-p coefficient lists."""
    out = [0] * p
    for i in range(p):
        if a[i]:
            for j in range(p):
                if b[j]:
                    out[(i + j) % p] ^= 1
    return out


def ring_pow(a, e, p):
    out = [1] + [0] * (p - 1)
    for _ in range(e):
        out = ring_mul(out, a, p)
    return out


def ord2(p):
    k, v = 1, 2 % p
    while v != 1:
        v = (v * 2) % p
        k += 1
    return k
