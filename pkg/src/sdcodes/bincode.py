"""Bit-packed binary linear codes: RREF, self-duality, full enumeration.

Rows are Python ints used as bitsets (bit j = column j).  Minimum distance
and weight distribution walk all 2^k codewords: a doubling table covers the
first block of generator rows and the remaining rows are folded in by a
Gray-code walk, so each step costs one vectorized XOR + popcount over the
block.  Partitioning the walk across threads cannot change the result; the
histogram merge is a plain integer sum.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence, TextIO

import numpy as np

from .constructions import RingGenerator
from .errors import BadEncoding, BadShape, BudgetExceeded, InternalError
from .gray import to_binary
from .rings import RingElement, RingId, ring_mul

_BLOCK_BITS = 22
DEFAULT_BUDGET = 34

_SCALARS = {
    RingId.F2: (1,),
    RingId.F2U: (1, 2),
    RingId.F4U: (1, 2, 4, 8),
}


def bits_to_int(bits: Sequence[int]) -> int:
    x = 0
    for j, b in enumerate(bits):
        if b:
            x |= 1 << j
    return x


def int_to_bits(x: int, n: int) -> list[int]:
    return [(x >> j) & 1 for j in range(n)]


def _rref(rows: Sequence[int], n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; returns (rows sorted by pivot, pivot cols)."""
    work = [r for r in rows if r]
    out: list[int] = []
    pivots: list[int] = []
    for col in range(n):
        pivot_row = None
        for idx, r in enumerate(work):
            if (r >> col) & 1:
                pivot_row = work.pop(idx)
                break
        if pivot_row is None:
            continue
        out = [r ^ pivot_row if (r >> col) & 1 else r for r in out]
        work = [r ^ pivot_row if (r >> col) & 1 else r for r in work]
        work = [r for r in work if r]
        out.append(pivot_row)
        pivots.append(col)
        if not work:
            break
    return out, pivots


@dataclass(frozen=True)
class PackedBinaryCode:
    n: int
    k: int
    rows: tuple[int, ...]
    standard: bool = False
    column_permutation: tuple[int, ...] | None = None


def packed_code(n: int, rows: Sequence[int]) -> PackedBinaryCode:
    """Wrap generator rows, enforcing full rank."""
    rows = [int(r) for r in rows]
    for r in rows:
        if r < 0 or r >> n:
            raise BadShape(f"row does not fit in {n} columns")
    reduced, _ = _rref(rows, n)
    if len(reduced) != len(rows):
        raise BadShape("generator rows are linearly dependent")
    return PackedBinaryCode(n, len(rows), tuple(rows))


def from_ring_generator(g: RingGenerator) -> PackedBinaryCode:
    """Binary image of a ring generator's row space.

    Each ring row r is mapped together with u*r (and w*r, uw*r over F4+uF4)
    so the binary rows span the full image; the result is stored in RREF.
    """
    scalars = [RingElement(g.ring, b) for b in _SCALARS[g.ring]]
    bin_rows = []
    for row in g.rows():
        for s in scalars:
            scaled = [ring_mul(s, e) for e in row]
            bin_rows.append(bits_to_int(to_binary(scaled)))
    n = g.m * g.ring.binary_image_len
    reduced, _ = _rref(bin_rows, n)
    expected = g.k * g.ring.binary_image_len
    if len(reduced) != expected:
        raise InternalError(
            f"binary image rank {len(reduced)} != {expected}; generator is degenerate"
        )
    return PackedBinaryCode(n, expected, tuple(reduced))


def standard_form(code: PackedBinaryCode) -> PackedBinaryCode:
    """RREF with identity moved onto the first k columns.

    When the leading k columns are not all pivots the minimal left-to-right
    pivot permutation is applied and recorded: new column p holds old column
    column_permutation[p].
    """
    reduced, pivots = _rref(code.rows, code.n)
    if len(reduced) != code.k:
        raise BadShape("rank-deficient code object")
    if pivots == list(range(code.k)):
        return PackedBinaryCode(code.n, code.k, tuple(reduced), True, None)
    pivot_set = set(pivots)
    perm = list(pivots) + [j for j in range(code.n) if j not in pivot_set]
    permuted = [
        bits_to_int([(r >> perm[p]) & 1 for p in range(code.n)]) for r in reduced
    ]
    return PackedBinaryCode(code.n, code.k, tuple(permuted), True, tuple(perm))


def permute_columns(code: PackedBinaryCode, perm: Sequence[int]) -> PackedBinaryCode:
    rows = [bits_to_int([(r >> perm[p]) & 1 for p in range(code.n)]) for r in code.rows]
    return packed_code(code.n, rows)


def is_self_dual(code: PackedBinaryCode) -> bool:
    if code.n != 2 * code.k:
        return False
    rows = code.rows
    for i, ri in enumerate(rows):
        for rj in rows[i:]:
            if (ri & rj).bit_count() & 1:
                return False
    return True


def contains(code: PackedBinaryCode, x: int | Sequence[int]) -> bool:
    """Membership via reduction against the RREF of the generator."""
    if not isinstance(x, int):
        if len(x) != code.n:
            raise BadShape(f"vector length {len(x)} != {code.n}")
        x = bits_to_int(x)
    elif x >> code.n:
        raise BadShape(f"vector does not fit in {code.n} columns")
    reduced, pivots = _rref(code.rows, code.n)
    for row, p in zip(reduced, pivots):
        if (x >> p) & 1:
            x ^= row
    return x == 0


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.counts[i]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    def total(self) -> int:
        return sum(self.counts)

    def min_distance(self) -> int:
        for i in range(1, len(self.counts)):
            if self.counts[i]:
                return i
        raise BadShape("zero code has no minimum distance")

    def nonzero_pairs(self) -> list[tuple[int, int]]:
        return [(i, a) for i, a in enumerate(self.counts) if a]


def _word_layout(n: int) -> list[tuple[int, int, type]]:
    """(bit offset, bit width, numpy dtype) per packed word; short tails use uint8."""
    layout: list[tuple[int, int, type]] = []
    off = 0
    while n - off >= 64:
        layout.append((off, 64, np.uint64))
        off += 64
    tail = n - off
    if tail:
        layout.append((off, tail, np.uint8 if tail <= 8 else np.uint64))
    return layout


def _row_words(row: int, layout) -> tuple[int, ...]:
    return tuple((row >> off) & ((1 << width) - 1) for off, width, _ in layout)


def _prefix_tables(rows: Sequence[int], layout) -> list[np.ndarray]:
    tabs = [np.zeros(1, dtype=dt) for _, _, dt in layout]
    for row in rows:
        words = _row_words(row, layout)
        tabs = [
            np.concatenate([t, t ^ dt(w)])
            for t, w, (_, _, dt) in zip(tabs, words, layout)
        ]
    return tabs


def _suffix_state(suffix_words: list[tuple[int, ...]], index: int, nwords: int) -> list[int]:
    state = [0] * nwords
    g = index ^ (index >> 1)
    for j, words in enumerate(suffix_words):
        if (g >> j) & 1:
            for t in range(nwords):
                state[t] ^= words[t]
    return state


class _HistAccum:
    """Histogram of uint8 weights; large blocks use a 2-in-uint16 packed
    bincount, which beats the plain uint8 bincount by ~6x."""

    def __init__(self, n: int, size: int):
        self.n = n
        self.size = size
        self.hist = np.zeros(n + 1, dtype=np.int64)
        self.packed = size >= 4096 and size % 2 == 0
        if self.packed:
            half = size >> 1
            self._lo = np.empty(half, dtype=np.uint16)
            self._hi = np.empty(half, dtype=np.uint16)

    def add(self, w: np.ndarray) -> None:
        n = self.n
        if not self.packed:
            self.hist += np.bincount(w, minlength=n + 1)[: n + 1]
            return
        half = self.size >> 1
        np.copyto(self._lo, w[:half])
        np.copyto(self._hi, w[half:])
        np.left_shift(self._hi, 8, out=self._hi)
        np.bitwise_or(self._lo, self._hi, out=self._lo)
        grid = np.bincount(self._lo, minlength=(n + 1) * 256)[: (n + 1) * 256]
        grid = grid.reshape(n + 1, 256)
        self.hist += grid.sum(axis=1)
        self.hist += grid.sum(axis=0)[: n + 1]


def _hist_chunk(
    prefix: list[np.ndarray],
    suffix_words: list[tuple[int, ...]],
    lo: int,
    hi: int,
    n: int,
    layout,
) -> np.ndarray:
    nwords = len(prefix)
    size = prefix[0].shape[0]
    accum = _HistAccum(n, size)
    tmps = [np.empty(size, dtype=dt) for _, _, dt in layout]
    w = np.empty(size, dtype=np.uint8)
    w2 = np.empty(size, dtype=np.uint8) if nwords > 1 else None
    state = _suffix_state(suffix_words, lo, nwords)
    i = lo
    while True:
        np.bitwise_xor(prefix[0], layout[0][2](state[0]), out=tmps[0])
        np.bitwise_count(tmps[0], out=w)
        for t in range(1, nwords):
            np.bitwise_xor(prefix[t], layout[t][2](state[t]), out=tmps[t])
            np.bitwise_count(tmps[t], out=w2)
            w += w2
        accum.add(w)
        i += 1
        if i >= hi:
            break
        flip = (i & -i).bit_length() - 1
        for t in range(nwords):
            state[t] ^= suffix_words[flip][t]
    return accum.hist


def _enumerate_histogram(rows: Sequence[int], n: int, threads: int) -> np.ndarray:
    k = len(rows)
    layout = _word_layout(n)
    bbits = min(k, _BLOCK_BITS)
    prefix = _prefix_tables(rows[:bbits], layout)
    suffix_words = [_row_words(r, layout) for r in rows[bbits:]]
    total = 1 << (k - bbits)
    threads = max(1, min(threads, total))
    if threads == 1:
        return _hist_chunk(prefix, suffix_words, 0, total, n, layout)
    bounds = [total * i // threads for i in range(threads + 1)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = pool.map(
            lambda ab: _hist_chunk(prefix, suffix_words, ab[0], ab[1], n, layout),
            zip(bounds, bounds[1:]),
        )
        return sum(parts, np.zeros(n + 1, dtype=np.int64))


def _complement_free_rows(code: PackedBinaryCode) -> list[int] | None:
    """Rows of a codimension-1 subcode C0 with C = C0 + {0, all-ones}.

    Every binary self-dual code contains the all-ones word, so its weight
    distribution is complement-symmetric; enumerating C0 halves the walk and
    the mirror supplies the other half.  Returns None when all-ones is absent.
    """
    reduced, pivots = _rref(code.rows, code.n)
    x = (1 << code.n) - 1
    used = []
    for i, (row, p) in enumerate(zip(reduced, pivots)):
        if (x >> p) & 1:
            x ^= row
            used.append(i)
    if x or not used:
        return None
    drop = used[0]
    return [r for i, r in enumerate(reduced) if i != drop]


def _full_histogram(code: PackedBinaryCode, threads: int = 1) -> list[int]:
    n = code.n
    half_rows = _complement_free_rows(code) if code.k >= 1 else None
    if half_rows is not None:
        h0 = _enumerate_histogram(half_rows, n, threads)
        hist = h0 + h0[::-1]
    else:
        hist = _enumerate_histogram(code.rows, n, threads)
    return [int(x) for x in hist]


def weight_distribution(
    code: PackedBinaryCode,
    budget: int = DEFAULT_BUDGET,
    force: bool = False,
    threads: int = 1,
) -> WeightDistribution:
    """Exact counts A_0..A_n over all 2^k codewords."""
    if code.k > budget and not force:
        raise BudgetExceeded(
            f"k = {code.k} exceeds enumeration budget {budget}; pass force to override"
        )
    return WeightDistribution(tuple(_full_histogram(code, threads=threads)))


def min_distance(code: PackedBinaryCode, threads: int = 1) -> int:
    """Minimum weight over the 2^k - 1 nonzero codewords."""
    if code.k < 1:
        raise BadShape("minimum distance needs k >= 1")
    hist = _full_histogram(code, threads=threads)
    for i in range(1, len(hist)):
        if hist[i]:
            return i
    raise InternalError("no nonzero codeword found")


def has_nonzero_weight_below(code: PackedBinaryCode, bound: int) -> bool:
    """Early-abort scan: does some nonzero codeword have weight < bound?"""
    n, k = code.n, code.k
    layout = _word_layout(n)
    nwords = len(layout)
    bbits = min(k, _BLOCK_BITS)
    prefix = _prefix_tables(code.rows[:bbits], layout)
    suffix_words = [_row_words(r, layout) for r in code.rows[bbits:]]
    size = prefix[0].shape[0]
    tmps = [np.empty(size, dtype=dt) for _, _, dt in layout]
    w = np.empty(size, dtype=np.uint8)
    w2 = np.empty(size, dtype=np.uint8) if nwords > 1 else None
    state = [0] * nwords
    for i in range(1 << (k - bbits)):
        if i:
            flip = (i & -i).bit_length() - 1
            for t in range(nwords):
                state[t] ^= suffix_words[flip][t]
        np.bitwise_xor(prefix[0], layout[0][2](state[0]), out=tmps[0])
        np.bitwise_count(tmps[0], out=w)
        for t in range(1, nwords):
            np.bitwise_xor(prefix[t], layout[t][2](state[t]), out=tmps[t])
            np.bitwise_count(tmps[t], out=w2)
            w += w2
        if i == 0:
            w[0] = n + 1  # the zero codeword does not count
        if int(w.min()) < bound:
            return True
    return False


def write_binary_generator(fh: TextIO, code: PackedBinaryCode) -> None:
    """Text format: header 'n k', then k rows of {0,1} characters."""
    fh.write(f"{code.n} {code.k}\n")
    for r in code.rows:
        fh.write("".join(str((r >> j) & 1) for j in range(code.n)) + "\n")


def read_binary_generator(fh: TextIO) -> PackedBinaryCode:
    header = fh.readline().split()
    if len(header) != 2:
        raise BadEncoding("expected 'n k' header")
    n, k = int(header[0]), int(header[1])
    rows = []
    for _ in range(k):
        line = fh.readline().strip()
        if len(line) != n or set(line) - {"0", "1"}:
            raise BadEncoding("generator row must be n characters of {0,1}")
        rows.append(bits_to_int([int(c) for c in line]))
    return packed_code(n, rows)
