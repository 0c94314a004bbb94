"""Threshold graphs generated by binary strings.

A string generates a graph on its symbols: symbols x to the left of y are
adjacent exactly when y is 1. The generating string is unique up to its
first symbol, so normalization rewrites the first symbol to match the
second, making the first block of length at least 2. Maximal runs of equal
symbols (blocks) drive both the power-dominating-set characterization and
the quadratic-time coefficient algorithm: appending a 0-block multiplies the
polynomial by x^b (new isolates), and appending a 1-block joins a clique,
which adds b_prev shifted copies plus a binomial correction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotConnectedForm, TooShort
from .graphs import Graph, mask_of
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class BlockString:
    bits: str
    blocks: tuple[tuple[int, int], ...]  # (symbol, length) for each maximal run
    normalized: bool

    @property
    def n(self) -> int:
        return len(self.bits)


def _block_partition(bits: str) -> tuple[tuple[int, int], ...]:
    blocks = []
    run_sym, run_len = bits[0], 0
    for ch in bits:
        if ch == run_sym:
            run_len += 1
        else:
            blocks.append((int(run_sym), run_len))
            run_sym, run_len = ch, 1
    blocks.append((int(run_sym), run_len))
    return tuple(blocks)


def normalize(bits: str) -> BlockString:
    """Rewrite the first symbol to match the second and split into blocks."""
    if any(ch not in "01" for ch in bits):
        raise ValueError("threshold strings contain only 0 and 1")
    if len(bits) < 2:
        raise TooShort("threshold strings need at least two symbols")
    fixed = bits[1] + bits[1:]
    return BlockString(fixed, _block_partition(fixed), True)


def _coerce(b) -> BlockString:
    if isinstance(b, BlockString):
        return b if b.normalized else normalize(b.bits)
    return normalize(b)


def threshold_graph(b) -> Graph:
    """Graph on the string's symbols; vertex j is adjacent to all i < j iff
    symbol j is 1."""
    b = _coerce(b)
    bits = b.bits
    n = len(bits)
    adj = [0] * n
    earlier = 0
    for j, ch in enumerate(bits):
        if ch == "1":
            adj[j] |= earlier
            m = earlier
            while m:
                lo = m & -m
                adj[lo.bit_length() - 1] |= 1 << j
                m ^= lo
        earlier |= 1 << j
    return Graph(n, adj)


def _require_connected_form(b: BlockString):
    if b.blocks[-1][0] != 1:
        raise NotConnectedForm("string ends in a 0-block; its graph has isolates")


def is_threshold_pds(b, s) -> bool:
    """Power domination test straight from the block structure.

    A set works exactly when it contains a vertex v that sees every
    1-vertex, such that each 0-block at or after v's block misses at most
    one vertex of the set. Vertices seeing every 1-vertex are the 1-vertices
    themselves plus, when the string starts with a 0-block, that first
    block's vertices.
    """
    b = _coerce(b)
    _require_connected_form(b)
    n = len(b.bits)
    mask = s if isinstance(s, int) else mask_of(s, n)
    if mask >> n:
        raise ValueError("set mask exceeds the string length")
    # block index and vertex range per block
    starts = []
    pos = 0
    for _, length in b.blocks:
        starts.append(pos)
        pos += length
    zero_first = b.blocks[0][0] == 0

    def observing_block(v: int) -> int | None:
        # v's block index when v sees all 1-vertices, else None
        bi = next(i for i, st in enumerate(starts) if st <= v < st + b.blocks[i][1])
        if b.blocks[bi][0] == 1:
            return bi
        if zero_first and bi == 0:
            return bi
        return None

    m = mask
    while m:
        lo = m & -m
        v = lo.bit_length() - 1
        m ^= lo
        bi = observing_block(v)
        if bi is None:
            continue
        ok = True
        for j in range(bi, len(b.blocks)):
            sym, length = b.blocks[j]
            if sym != 0:
                continue
            block_mask = ((1 << length) - 1) << starts[j]
            if (block_mask & ~mask).bit_count() > 1:
                ok = False
                break
        if ok:
            return True
    return False


class _PascalRow:
    """Binomial row C(size, .) grown one degree at a time so the whole run of
    the coefficient algorithm stays within quadratically many updates."""

    def __init__(self, counter):
        self.row = [1]
        self.size = 0
        self.counter = counter

    def extend_to(self, t: int):
        while self.size < t:
            self.row.append(1)
            for j in range(self.size, 0, -1):
                self.row[j] += self.row[j - 1]
            self.counter.ops += self.size + 1
            self.size += 1

    def snapshot(self) -> list[int]:
        return self.row[:]


class _OpCounter:
    __slots__ = ("ops",)

    def __init__(self):
        self.ops = 0


def _core_coefficients(b: BlockString, counter: _OpCounter, intermediates=None):
    """Coefficient array for a normalized string ending in a 1-block.

    Blocks are consumed in (0-block, 1-block) pairs after the initial block
    or two: the 0-block shifts the array up by its length, and the 1-block
    adds b_prev down-shifted copies plus the difference of two binomial
    rows. All updates are in-place on unbounded integers.
    """
    blocks = b.blocks
    omega = len(blocks)
    n = len(b.bits)
    a = [0] * (n + 1)  # a[j] is the coefficient of x^j; a[0] stays 0
    pascal = _PascalRow(counter)

    def record(block_index):
        if intermediates is not None:
            intermediates.append((block_index, IntPolynomial(a)))

    if blocks[0][0] == 1:
        b1 = blocks[0][1]
        pascal.extend_to(b1)
        for j in range(1, b1 + 1):
            a[j] = pascal.row[j]
        counter.ops += b1
        record(1)
        i = 2
    else:
        b1, b2 = blocks[0][1], blocks[1][1]
        a[b1] = 1
        record(1)
        a[b1 - 1] = b1
        counter.ops += 2
        pascal.extend_to(b1)
        low = pascal.snapshot()
        pascal.extend_to(b1 + b2)
        for j in range(1, b1 + b2 + 1):
            a[j] += pascal.row[j]
        for j in range(1, b1 + 1):
            a[j] -= low[j]
        counter.ops += b2 + 2 * b1
        record(2)
        i = 3

    while i <= omega - 1:
        s = sum(blocks[t][1] for t in range(i - 1))
        bi = blocks[i - 1][1]
        for j in range(s + bi, bi, -1):
            a[j] = a[j - bi]
        for j in range(1, bi + 1):
            a[j] = 0
        counter.ops += s + bi
        record(i)
        i += 1
        s = sum(blocks[t][1] for t in range(i - 1))
        bprev = blocks[i - 2][1]
        bi = blocks[i - 1][1]
        for j in range(1, s):
            a[j] += a[j + 1] * bprev
        pascal.extend_to(s)
        low = pascal.snapshot()
        pascal.extend_to(s + bi)
        for j in range(1, s + bi + 1):
            a[j] += pascal.row[j]
        for j in range(1, s + 1):
            a[j] -= low[j]
        counter.ops += 3 * s + bi - 1
        record(i)
        i += 1

    return a


def _split_trailing_zeros(b: BlockString) -> tuple[BlockString | None, int]:
    if b.blocks[-1][0] == 1:
        return b, 0
    tail = b.blocks[-1][1]
    core_bits = b.bits[: len(b.bits) - tail]
    if not core_bits:
        return None, len(b.bits)  # the whole string is 0s
    # normalization forces the first block to length >= 2, so a nonempty
    # core keeps at least two symbols and stays normalized
    return normalize(core_bits), tail


def threshold_pd_polynomial(b) -> IntPolynomial:
    """Power domination polynomial of the threshold graph of any string.

    Trailing 0-blocks are isolates and contribute a plain x^b factor, so the
    core algorithm only ever sees strings ending in a 1-block.
    """
    b = _coerce(b)
    core, shift = _split_trailing_zeros(b)
    if core is None:
        return IntPolynomial.monomial(len(b.bits))  # no edges at all
    poly = IntPolynomial(_core_coefficients(core, _OpCounter()))
    return poly.shift(shift)


def threshold_algorithm_stats(b) -> tuple[IntPolynomial, int]:
    """Polynomial plus the number of coefficient operations performed.

    Used to confirm the quadratic growth of the algorithm's work empirically.
    """
    b = _coerce(b)
    _require_connected_form(b)
    counter = _OpCounter()
    coeffs = _core_coefficients(b, counter)
    return IntPolynomial(coeffs), counter.ops


def threshold_algorithm_intermediates(b) -> list[tuple[int, IntPolynomial]]:
    """Polynomial of every block prefix as the algorithm computes it."""
    b = _coerce(b)
    _require_connected_form(b)
    store: list[tuple[int, IntPolynomial]] = []
    _core_coefficients(b, _OpCounter(), intermediates=store)
    return store
