"""Named codes and random generators of codes with planted automorphisms."""

from __future__ import annotations

import random
from collections.abc import Iterator, Sequence

from autcodes.errors import InputError
from autcodes.gf2linalg import BinaryCode, dual, echelon, is_self_orthogonal, rref
from autcodes.permaction import Permutation, act, is_automorphism


def repetition(n: int) -> BinaryCode:
    return rref([(1 << n) - 1], n)


def even_weight(n: int) -> BinaryCode:
    return dual(repetition(n))


def hamming8() -> BinaryCode:
    """Extended Hamming [8,4,4] as RM(1,3): coordinate ``i+1`` is the point ``i`` of F2^3."""
    rows = [0xFF]
    for bit in range(3):
        rows.append(sum(1 << x for x in range(8) if (x >> bit) & 1))
    return rref(rows, 8)


def affine_perm(matrix: Sequence[int], shift: int = 0) -> Permutation:
    """``x -> M x + b`` on F2^3, with ``matrix`` given as column images of e1, e2, e3."""
    def apply(x: int) -> int:
        y = shift
        for bit, col in enumerate(matrix):
            if (x >> bit) & 1:
                y ^= col
        return y

    return Permutation(tuple(apply(x) for x in range(8)))


GOLAY_GENERATOR = 0b110001110101  # 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11


def golay24() -> BinaryCode:
    """Extended Golay [24,12,8]: cyclic [23,12] code plus an overall parity bit.

    Coordinates 1..23 carry the residues 0..22, coordinate 24 is infinity.
    """
    rows = []
    for k in range(12):
        g = GOLAY_GENERATOR << k
        parity = g.bit_count() & 1
        rows.append(g | (parity << 23))
    return rref(rows, 24)


def _projective_map(a: int, b: int, c: int, d: int, q: int = 23) -> Permutation:
    """``z -> (a z + b) / (c z + d)`` on the projective line over F_q (infinity = index q)."""
    inf = q
    image = []
    for z in range(q + 1):
        if z == inf:
            num, den = a, c
        else:
            num, den = (a * z + b) % q, (c * z + d) % q
        image.append(inf if den == 0 else num * pow(den, -1, q) % q)
    return Permutation(tuple(image))


def golay_order3_automorphism() -> Permutation:
    """``z -> -1/(z+1)``: an element of order 3 in PSL(2,23), type 3-(8,0)."""
    return _projective_map(0, -1 % 23, 1, 1)


# ---------------------------------------------------------------------------
# random instances


def orbit(v: int, sigma: Permutation) -> list[int]:
    out = [v]
    w = act(v, sigma)
    while w != v:
        out.append(w)
        w = act(w, sigma)
    return out


def random_invariant_code(
    sigma: Permutation, rng: random.Random, n_gens: int | None = None
) -> BinaryCode:
    """Span of the ``sigma``-orbits of a few random vectors."""
    n = sigma.degree
    n_gens = rng.randint(1, max(1, n // 3)) if n_gens is None else n_gens
    rows = []
    for _ in range(n_gens):
        rows += orbit(rng.getrandbits(n), sigma)
    return rref(rows, n)


def random_invariant_self_dual(
    gens: Sequence[Permutation] | Permutation,
    rng: random.Random,
    restarts: int = 200,
    patience: int = 400,
) -> BinaryCode | None:
    """Random self-dual code with every permutation in ``gens`` as automorphism.

    Grows an invariant self-orthogonal code one module at a time, drawing
    candidates from the current dual; returns ``None`` if every restart stalls.
    """
    if isinstance(gens, Permutation):
        gens = [gens]
    n = gens[0].degree
    if n % 2:
        raise InputError("self-dual codes need even length")
    for _ in range(restarts):
        D = BinaryCode.zero(n)
        misses = 0
        while D.k < n // 2 and misses < patience:
            perp = dual(D)
            v = 0
            for b in perp.basis:
                if rng.getrandbits(1):
                    v ^= b
            if v in D:
                continue
            module = _module_span(v, gens, n)
            cand = rref(D.basis + tuple(module), n)
            if is_self_orthogonal(cand):
                D = cand
            else:
                misses += 1
        if D.k == n // 2:
            return D
    return None


def _module_span(v: int, gens: Sequence[Permutation], n: int) -> list[int]:
    frontier = [v]
    seen = {v}
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                u = act(w, g)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return echelon(seen)


def involutions(n: int) -> Iterator[Permutation]:
    """Every involution of S_n (fixed-point-free or not), via perfect partial matchings."""

    def matchings(points: tuple[int, ...]) -> Iterator[list[tuple[int, int]]]:
        if not points:
            yield []
            return
        first, rest = points[0], points[1:]
        yield from matchings(rest)
        for i, other in enumerate(rest):
            remaining = rest[:i] + rest[i + 1 :]
            for m in matchings(remaining):
                yield [(first, other), *m]

    for m in matchings(tuple(range(n))):
        if not m:
            continue
        image = list(range(n))
        for a, b in m:
            image[a], image[b] = b, a
        yield Permutation(tuple(image))


def order2_automorphisms(C: BinaryCode) -> list[Permutation]:
    return [s for s in involutions(C.n) if is_automorphism(C, s)]


def all_self_dual_codes(n: int) -> list[BinaryCode]:
    """Every self-dual code of length ``n``, grown level by level (n <= 10)."""
    if n % 2 or n > 10:
        raise InputError("exhaustive self-dual enumeration is limited to even n <= 10")
    level = {BinaryCode.zero(n)}
    for _ in range(n // 2):
        nxt = set()
        for D in level:
            for v in dual(D).codewords():
                if v.bit_count() % 2 == 0 and v not in D:
                    nxt.add(rref(D.basis + (v,), n))
        level = nxt
    return sorted(level, key=lambda C: C.basis)


def random_permutation_of_type(cycle_lengths: Sequence[int], n: int, rng: random.Random) -> Permutation:
    """Random permutation of S_n with the given cycle lengths (rest fixed)."""
    if sum(cycle_lengths) > n:
        raise InputError("cycle lengths exceed the degree")
    points = list(range(1, n + 1))
    rng.shuffle(points)
    cycles = []
    pos = 0
    for ell in cycle_lengths:
        cycles.append(points[pos : pos + ell])
        pos += ell
    return Permutation.from_cycles(cycles, n)


def block_permutation(cycle_lengths: Sequence[int], n: int) -> Permutation:
    """Consecutive cycles ``(1..l1)(l1+1..l1+l2)...``."""
    cycles = []
    pos = 1
    for ell in cycle_lengths:
        cycles.append(list(range(pos, pos + ell)))
        pos += ell
    if pos - 1 > n:
        raise InputError("cycle lengths exceed the degree")
    return Permutation.from_cycles(cycles, n)


__all__ = [
    "affine_perm",
    "all_self_dual_codes",
    "block_permutation",
    "even_weight",
    "golay24",
    "golay_order3_automorphism",
    "hamming8",
    "involutions",
    "order2_automorphisms",
    "orbit",
    "random_invariant_code",
    "random_invariant_self_dual",
    "random_permutation_of_type",
    "repetition",
]

