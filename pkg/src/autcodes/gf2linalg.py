"""Bit-level linear algebra over GF(2) and the :class:`BinaryCode` value type.

A vector of length ``n`` is an ``int`` whose bit ``i - 1`` holds coordinate
``i``.  Row-echelon pivots are the *lowest* set bit of each row, so "pivot
columns strictly increasing" reads left to right in the printed form.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from autcodes.errors import CapacityError, DomainError, InputError, ParseError

DEFAULT_CAP = 28


# ---------------------------------------------------------------------------
# vectors


def weight(v: int) -> int:
    return v.bit_count()


def dot(u: int, v: int) -> int:
    """Standard inner product over GF(2)."""
    return (u & v).bit_count() & 1


def vec_from_str(s: str) -> int:
    s = s.strip()
    if any(ch not in "01" for ch in s):
        raise ParseError(f"not a binary string: {s!r}")
    v = 0
    for i, ch in enumerate(s):
        if ch == "1":
            v |= 1 << i
    return v


def vec_to_str(v: int, n: int) -> str:
    return "".join("1" if (v >> i) & 1 else "0" for i in range(n))


def vec_from_support(support: Iterable[int]) -> int:
    """Vector with ones at the given 1-indexed coordinates."""
    v = 0
    for i in support:
        v |= 1 << (i - 1)
    return v


def support(v: int) -> list[int]:
    """1-indexed coordinates where ``v`` is nonzero."""
    out = []
    i = 0
    while v:
        if v & 1:
            out.append(i + 1)
        v >>= 1
        i += 1
    return out


def _pivot(v: int) -> int:
    return (v & -v).bit_length() - 1


def echelon(rows: Iterable[int]) -> list[int]:
    """Reduced row-echelon basis of the span of ``rows``, sorted by pivot."""
    basis: dict[int, int] = {}
    for v in rows:
        for p, b in basis.items():
            if (v >> p) & 1:
                v ^= b
        if not v:
            continue
        p = _pivot(v)
        for q in list(basis):
            if (basis[q] >> p) & 1:
                basis[q] ^= v
        basis[p] = v
    return [basis[p] for p in sorted(basis)]


def rank(rows: Iterable[int]) -> int:
    return len(echelon(rows))


def reduce(v: int, basis: Sequence[int]) -> int:
    """Reduce ``v`` modulo an RREF basis (the result has zeros on all pivots)."""
    for b in basis:
        if (v >> _pivot(b)) & 1:
            v ^= b
    return v


def kernel_combinations(rows: Sequence[int], width: int) -> list[int]:
    """Basis of ``{lam : sum_i lam_i rows[i] = 0}``; bit ``i`` of ``lam`` selects ``rows[i]``."""
    tagged = [r | (1 << (width + i)) for i, r in enumerate(rows)]
    mask = (1 << width) - 1
    return [r >> width for r in echelon(tagged) if not (r & mask)]


def combine(lam: int, rows: Sequence[int]) -> int:
    v = 0
    i = 0
    while lam:
        if lam & 1:
            v ^= rows[i]
        lam >>= 1
        i += 1
    return v


# ---------------------------------------------------------------------------
# codes


@dataclass(frozen=True)
class BinaryCode:
    """Linear subspace of GF(2)^n held by its canonical RREF basis.

    Build instances with :func:`rref` (or :meth:`from_strings`); the
    constructor trusts that ``basis`` is already canonical.
    """

    n: int
    basis: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_pivot(b) for b in self.basis)

    @classmethod
    def from_strings(cls, rows: Iterable[str], n: int | None = None) -> BinaryCode:
        rows = [r.strip() for r in rows]
        if n is None:
            if not rows:
                raise InputError("length required for an empty generator list")
            n = len(rows[0])
        return rref(rows, n)

    @classmethod
    def zero(cls, n: int) -> BinaryCode:
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> BinaryCode:
        return cls(n, tuple(1 << i for i in range(n)))

    def __contains__(self, v: int) -> bool:
        return reduce(v, self.basis) == 0

    def __le__(self, other: BinaryCode) -> bool:
        return contains(other, self)

    def __add__(self, other: BinaryCode) -> BinaryCode:
        return code_sum(self, other)

    def __and__(self, other: BinaryCode) -> BinaryCode:
        return intersection(self, other)

    def rows(self) -> list[str]:
        return [vec_to_str(b, self.n) for b in self.basis]

    def codewords(self) -> Iterator[int]:
        """All 2^k codewords in Gray-code order, starting with 0."""
        v = 0
        yield v
        for i in range(1, 1 << self.k):
            v ^= self.basis[(i & -i).bit_length() - 1]
            yield v

    def __repr__(self) -> str:
        return f"BinaryCode(n={self.n}, k={self.k}, basis={self.rows()})"


def _check_row(v: int, n: int) -> int:
    if v < 0 or v >> n:
        raise InputError(f"row {v:#x} does not fit in length {n}")
    return v


def rref(rows: Iterable[int | str], n: int) -> BinaryCode:
    """Canonical RREF code spanned by ``rows`` (ints or 0/1 strings)."""
    if n < 1:
        raise InputError("length must be positive")
    vecs = []
    for r in rows:
        if isinstance(r, str):
            if len(r.strip()) != n:
                raise InputError(f"row {r!r} has length {len(r.strip())}, expected {n}")
            vecs.append(vec_from_str(r))
        else:
            vecs.append(_check_row(int(r), n))
    return BinaryCode(n, tuple(echelon(vecs)))


def dual(C: BinaryCode) -> BinaryCode:
    """Euclidean dual; built directly from the RREF (one row per free column)."""
    pivots = C.pivots
    pivot_set = set(pivots)
    rows = []
    for j in range(C.n):
        if j in pivot_set:
            continue
        v = 1 << j
        for p, b in zip(pivots, C.basis):
            if (b >> j) & 1:
                v |= 1 << p
        rows.append(v)
    return rref(rows, C.n)


def _same_length(C: BinaryCode, D: BinaryCode) -> None:
    if C.n != D.n:
        raise InputError(f"length mismatch: {C.n} vs {D.n}")


def code_sum(C: BinaryCode, D: BinaryCode) -> BinaryCode:
    _same_length(C, D)
    return rref(C.basis + D.basis, C.n)


def intersection(C: BinaryCode, D: BinaryCode) -> BinaryCode:
    """Zassenhaus: reduce rows (c | c) and (d | 0); rows with empty left half span C ∩ D."""
    _same_length(C, D)
    n = C.n
    rows = [c | (c << n) for c in C.basis] + list(D.basis)
    mask = (1 << n) - 1
    meet = [r >> n for r in echelon(rows) if not (r & mask)]
    return rref(meet, n)


def contains(C: BinaryCode, D: BinaryCode) -> bool:
    """True iff D ⊆ C."""
    _same_length(C, D)
    return all(d in C for d in D.basis)


def is_direct_sum(C: BinaryCode, D: BinaryCode) -> bool:
    return intersection(C, D).k == 0


# ---------------------------------------------------------------------------
# enumeration


def _pack(vectors: Sequence[int], words: int) -> np.ndarray:
    out = np.zeros((len(vectors), words), dtype=np.uint64)
    for i, v in enumerate(vectors):
        for w in range(words):
            out[i, w] = (v >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return out


def _span_table(rows: np.ndarray) -> np.ndarray:
    table = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows:
        table = np.concatenate([table, table ^ r])
    return table


def _weight_histogram(C: BinaryCode, cap: int) -> np.ndarray:
    if C.k > cap:
        raise CapacityError(f"dimension {C.k} exceeds enumeration cap {cap}")
    words = max(1, (C.n + 63) // 64)
    rows = _pack(C.basis, words)
    half = C.k // 2
    left = _span_table(rows[:half])
    right = _span_table(rows[half:])
    hist = np.zeros(C.n + 1, dtype=np.int64)
    block = max(1, (1 << 20) // len(right))
    for start in range(0, len(left), block):
        chunk = left[start : start + block, None, :] ^ right[None, :, :]
        w = np.bitwise_count(chunk).sum(axis=-1, dtype=np.int64).ravel()
        hist += np.bincount(w, minlength=C.n + 1)
    return hist


def weight_enumerator(C: BinaryCode, cap: int = DEFAULT_CAP) -> list[int]:
    """Coefficients ``A_0..A_n`` of the weight distribution."""
    return [int(a) for a in _weight_histogram(C, cap)]


def min_distance(C: BinaryCode, cap: int = DEFAULT_CAP) -> int:
    if C.k == 0:
        raise DomainError("minimum distance of the zero code is undefined")
    hist = _weight_histogram(C, cap)
    return int(np.flatnonzero(hist[1:])[0]) + 1


# ---------------------------------------------------------------------------
# derived codes


def puncture(C: BinaryCode, positions: Iterable[int]) -> BinaryCode:
    """Delete the given 1-indexed coordinates."""
    drop = set(positions)
    if any(p < 1 or p > C.n for p in drop):
        raise InputError(f"positions out of range 1..{C.n}: {sorted(drop)}")
    keep = [j for j in range(C.n) if j + 1 not in drop]
    if not keep:
        raise InputError("cannot puncture every coordinate")
    rows = []
    for b in C.basis:
        v = 0
        for new, old in enumerate(keep):
            if (b >> old) & 1:
                v |= 1 << new
        rows.append(v)
    return rref(rows, len(keep))


class SelfDuality(NamedTuple):
    self_orthogonal: bool
    self_dual: bool


def is_self_orthogonal(C: BinaryCode) -> bool:
    basis = C.basis
    return all(dot(u, v) == 0 for i, u in enumerate(basis) for v in basis[i:])


def self_duality(C: BinaryCode) -> SelfDuality:
    orth = is_self_orthogonal(C)
    return SelfDuality(orth, orth and 2 * C.k == C.n)


def is_self_dual(C: BinaryCode) -> bool:
    return self_duality(C).self_dual


# ---------------------------------------------------------------------------
# MAT files


def parse_mat(text: str) -> BinaryCode:
    """Parse the ``n k`` header + ``k`` rows format; ``#`` lines and blanks ignored."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty MAT input")
    header = lines[0].split()
    if len(header) != 2 or not all(h.isdigit() for h in header):
        raise ParseError(f"bad MAT header {lines[0]!r}")
    n, k = map(int, header)
    rows = lines[1:]
    if len(rows) != k:
        raise ParseError(f"header announces {k} rows, found {len(rows)}")
    for r in rows:
        if len(r) != n or any(ch not in "01" for ch in r):
            raise ParseError(f"bad MAT row {r!r} for length {n}")
    return rref(rows, n)


def format_mat(C: BinaryCode) -> str:
    return "\n".join([f"{C.n} {C.k}", *C.rows()]) + "\n"


def read_mat(path: str | Path) -> BinaryCode:
    return parse_mat(Path(path).read_text())


def write_mat(C: BinaryCode, path: str | Path) -> None:
    Path(path).write_text(format_mat(C))
