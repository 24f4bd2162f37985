"""Dense linear algebra and codeword combinatorics over GF(2).

Matrix rows are bit-packed into Python integers.  Column 0 is the leftmost
column and lives in the most significant bit of a row, so the natural
ordering of row integers coincides with the lexicographic ordering of their
``'0'/'1'`` renderings.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from math import comb

import numpy as np
import numpy.typing as npt

from qrm.errors import CapExceeded, EmptyCode, NonIntegerResult

DEFAULT_ENUM_CAP = 26
ENUM_CAP_ENV = "QRM_ENUM_CAP"

# Low block of the vectorised enumerator holds at most 2^16 codewords.
_LOW_BLOCK = 16


def default_enum_cap() -> int:
    """Return the enumeration cap (log2 of codewords), honouring ``QRM_ENUM_CAP``."""
    raw = os.environ.get(ENUM_CAP_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_ENUM_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"{ENUM_CAP_ENV} must be positive, got {cap}")
    return cap


def resolve_cap(cap: int | None) -> int:
    return default_enum_cap() if cap is None else cap


def bits_to_int(bits: str) -> int:
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"not a bit string: {bits!r}")
    return int(bits, 2)


def int_to_bits(value: int, n: int) -> str:
    return format(value, f"0{n}b")


def as_word(word: int | str, n: int) -> int:
    """Coerce a bit string or packed integer into a packed length-``n`` word."""
    if isinstance(word, str):
        if len(word) != n:
            raise ValueError(f"expected {n} bits, got {len(word)}")
        return bits_to_int(word)
    if not 0 <= word < (1 << n):
        raise ValueError(f"word {word} does not fit in {n} bits")
    return word


def hamming_weight(word: int) -> int:
    return word.bit_count()


def inner_product(u: int, v: int) -> int:
    """GF(2) inner product: parity of the bitwise AND."""
    return (u & v).bit_count() & 1


@dataclass(frozen=True)
class BitMatrix:
    """Immutable binary matrix with bit-packed rows.

    Attributes:
        rows: One integer per row; bit ``ncols - 1 - j`` holds column ``j``.
        ncols: Number of columns (at least 1).
    """

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 1:
            raise ValueError("a BitMatrix needs at least one column")
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        limit = 1 << self.ncols
        for r in self.rows:
            if not 0 <= r < limit:
                raise ValueError(f"row value {r} does not fit in {self.ncols} columns")

    @classmethod
    def empty(cls, ncols: int) -> BitMatrix:
        return cls((), ncols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(tuple(1 << (n - 1 - i) for i in range(n)), n)

    @classmethod
    def from_strings(cls, lines: Iterable[str], ncols: int | None = None) -> BitMatrix:
        lines = [line.strip() for line in lines if line.strip()]
        if ncols is None:
            if not lines:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(lines[0])
        return cls(tuple(as_word(line, ncols) for line in lines), ncols)

    @classmethod
    def from_array(cls, array: npt.ArrayLike) -> BitMatrix:
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        if np.any((arr != 0) & (arr != 1)):
            raise ValueError("entries must be 0 or 1")
        ncols = arr.shape[1]
        return cls(tuple(int("".join(map(str, row)), 2) for row in arr.tolist()), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not 0 <= j < self.ncols:
            raise IndexError(j)
        return (self.rows[i] >> (self.ncols - 1 - j)) & 1

    def row_bits(self, i: int) -> str:
        return int_to_bits(self.rows[i], self.ncols)

    def to_array(self) -> npt.NDArray[np.uint8]:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i in range(self.nrows):
            out[i] = np.frombuffer(self.row_bits(i).encode(), dtype=np.uint8) - ord("0")
        return out

    def to_text(self) -> str:
        """Render one ``'0'/'1'`` line per row, newline terminated."""
        return "".join(self.row_bits(i) + "\n" for i in range(self.nrows))

    def vstack(self, other: BitMatrix) -> BitMatrix:
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return BitMatrix(self.rows + other.rows, self.ncols)

    def mul_transpose(self, other: BitMatrix) -> BitMatrix:
        """Return ``self @ other.T`` over GF(2)."""
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        ncols = max(other.nrows, 1)
        out = []
        for a in self.rows:
            acc = 0
            for b in other.rows:
                acc = (acc << 1) | inner_product(a, b)
            out.append(acc)
        return BitMatrix(tuple(out), ncols)

    def is_zero(self) -> bool:
        return not any(self.rows)


def _reduce(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Gauss-Jordan elimination; returns (nonzero RREF rows, pivot columns)."""
    basis: list[int] = []
    pivots: list[int] = []
    pivot_bits: list[int] = []
    for row in rows:
        for b, pb in zip(basis, pivot_bits):
            if row & pb:
                row ^= b
        if not row:
            continue
        top = row.bit_length() - 1
        pb = 1 << top
        basis = [b ^ row if b & pb else b for b in basis]
        basis.append(row)
        pivot_bits.append(pb)
        pivots.append(ncols - 1 - top)
    order = sorted(range(len(basis)), key=pivots.__getitem__)
    return [basis[i] for i in order], [pivots[i] for i in order]


def rank_and_rref(matrix: BitMatrix) -> tuple[int, BitMatrix]:
    """GF(2) rank and reduced row-echelon form.

    Zero rows are placed at the bottom so the RREF keeps the input's shape.
    """
    reduced, _ = _reduce(matrix.rows, matrix.ncols)
    padding = (0,) * (matrix.nrows - len(reduced))
    return len(reduced), BitMatrix(tuple(reduced) + padding, matrix.ncols)


def rank(matrix: BitMatrix) -> int:
    return len(_reduce(matrix.rows, matrix.ncols)[0])


def row_space_contains(matrix: BitMatrix, word: int | str) -> bool:
    reduced, _ = _reduce(matrix.rows, matrix.ncols)
    return _in_span(reduced, as_word(word, matrix.ncols))


def _in_span(reduced: Sequence[int], word: int) -> bool:
    # ``reduced`` is in RREF, so each pivot bit is cleared at most once.
    for b in reduced:
        if word & (1 << (b.bit_length() - 1)):
            word ^= b
    return word == 0


def row_space_subset(inner: BitMatrix, outer: BitMatrix) -> bool:
    """True iff every row of ``inner`` lies in the row space of ``outer``."""
    if inner.ncols != outer.ncols:
        raise ValueError("column counts differ")
    reduced, _ = _reduce(outer.rows, outer.ncols)
    return all(_in_span(reduced, row) for row in inner.rows)


def same_row_space(a: BitMatrix, b: BitMatrix) -> bool:
    return row_space_subset(a, b) and row_space_subset(b, a)


def nullspace_generator(matrix: BitMatrix) -> BitMatrix:
    """Full-rank generator of ``{x : matrix @ x.T = 0}``."""
    n = matrix.ncols
    reduced, pivots = _reduce(matrix.rows, n)
    pivot_set = set(pivots)
    out = []
    for f in range(n):
        if f in pivot_set:
            continue
        fbit = 1 << (n - 1 - f)
        x = fbit
        for row, p in zip(reduced, pivots):
            if row & fbit:
                x |= 1 << (n - 1 - p)
        out.append(x)
    return BitMatrix(tuple(out), n)


@dataclass(frozen=True)
class LinearCode:
    """Binary linear code held as a full-row-rank generator matrix.

    ``d`` caches the minimum distance when known.
    """

    generator: BitMatrix
    d: int | None = None

    def __post_init__(self) -> None:
        if rank(self.generator) != self.generator.nrows:
            raise ValueError("generator matrix must have full row rank")
        if self.d is not None and (self.d < 1 or self.k == 0):
            raise ValueError(f"invalid cached distance {self.d} for a k={self.k} code")

    @classmethod
    def zero(cls, n: int) -> LinearCode:
        return cls(BitMatrix.empty(n))

    @classmethod
    def full(cls, n: int) -> LinearCode:
        return cls(BitMatrix.identity(n), d=1)

    @property
    def n(self) -> int:
        return self.generator.ncols

    @property
    def k(self) -> int:
        return self.generator.nrows

    def __contains__(self, word: int | str) -> bool:
        return row_space_contains(self.generator, word)

    def dual(self) -> LinearCode:
        return LinearCode(nullspace_generator(self.generator))

    def params(self) -> str:
        return f"({self.n},{self.k},{'?' if self.d is None else self.d})"


def _check_cap(code: LinearCode, cap: int | None, what: str) -> None:
    cap = resolve_cap(cap)
    if code.k > cap:
        raise CapExceeded(what, code.k, cap)


def enumerate_codewords(code: LinearCode, cap: int | None = None) -> Iterator[int]:
    """Yield every codeword as a packed integer.

    Messages are visited in binary reflected Gray code order, so each word
    differs from the previous one by a single generator row.  The first word
    is always zero.

    Raises:
        CapExceeded: if ``code.k`` exceeds ``cap`` (defaults to
            :func:`default_enum_cap`).
    """
    _check_cap(code, cap, f"enumerating a k={code.k} code")
    return span_gray(code.generator.rows)


def span_gray(rows: Sequence[int]) -> Iterator[int]:
    word = 0
    yield word
    for i in range(1, 1 << len(rows)):
        word ^= rows[(i & -i).bit_length() - 1]
        yield word


def _pack_words(row: int, nwords: int) -> npt.NDArray[np.uint64]:
    return np.frombuffer(row.to_bytes(8 * nwords, "big"), dtype=">u8").astype(np.uint64)


def _weight_histogram(rows: Sequence[int], n: int) -> npt.NDArray[np.int64]:
    """Histogram of Hamming weights over the span of ``rows``.

    The span is split into a table of all combinations of the first few rows
    and a Gray-code walk over the rest; each step XORs the whole table with
    one offset and popcounts it.
    """
    hist = np.zeros(n + 1, dtype=np.int64)
    nwords = (n + 63) // 64
    low, high = rows[:_LOW_BLOCK], rows[_LOW_BLOCK:]
    table = np.zeros((1, nwords), dtype=np.uint64)
    for r in low:
        table = np.concatenate([table, table ^ _pack_words(r, nwords)])
    high_words = [_pack_words(r, nwords) for r in high]
    offset = np.zeros(nwords, dtype=np.uint64)
    for i in range(1 << len(high)):
        if i:
            offset = offset ^ high_words[(i & -i).bit_length() - 1]
        weights = np.bitwise_count(table ^ offset).sum(axis=1, dtype=np.int64)
        hist += np.bincount(weights, minlength=n + 1)
    return hist


def min_weight_bruteforce(code: LinearCode, cap: int | None = None) -> int:
    """Minimum Hamming weight over all nonzero codewords, by exhaustion."""
    if code.k == 0:
        raise EmptyCode("the zero code has no nonzero codewords")
    _check_cap(code, cap, f"brute-force distance of a k={code.k} code")
    hist = _weight_histogram(code.generator.rows, code.n)
    return int(np.flatnonzero(hist[1:])[0]) + 1


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients ``A_0 .. A_n``: number of codewords of each weight."""

    n: int
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(int(a) for a in self.coefficients))
        if len(self.coefficients) != self.n + 1:
            raise ValueError("need exactly n + 1 coefficients")
        if any(a < 0 for a in self.coefficients):
            raise ValueError("coefficients must be nonnegative")

    @property
    def size(self) -> int:
        return sum(self.coefficients)

    def min_distance(self) -> int | None:
        return next((j for j, a in enumerate(self.coefficients) if j and a), None)


def weight_enumerator(code: LinearCode, cap: int | None = None) -> WeightEnumerator:
    """Exact weight distribution by enumerating all ``2^k`` codewords."""
    _check_cap(code, cap, f"weight enumerator of a k={code.k} code")
    hist = _weight_histogram(code.generator.rows, code.n)
    return WeightEnumerator(code.n, tuple(int(a) for a in hist))


def weight_enumerator_by_syndrome(code: LinearCode, cap: int | None = None) -> WeightEnumerator:
    """Exact weight distribution by counting zero-syndrome words.

    Runs a dynamic program over the columns of a parity-check matrix, tracking
    (syndrome, weight) counts.  Cost grows with ``2^(n-k)`` instead of
    ``2^k``, which makes it the practical route for high-rate codes.
    """
    n = code.n
    checks = nullspace_generator(code.generator)
    s = checks.nrows
    cap = resolve_cap(cap)
    if s > cap:
        raise CapExceeded(f"syndrome table for n-k={s}", s, cap)
    column_syndromes = [
        sum(((row >> (n - 1 - j)) & 1) << i for i, row in enumerate(checks.rows)) for j in range(n)
    ]
    # counts fit in int64 only while C(n, n/2) < 2^63
    dtype = np.int64 if n <= 62 else object
    counts = np.zeros((1 << s, n + 1), dtype=dtype)
    counts[0, 0] = 1
    index = np.arange(1 << s)
    for h in column_syndromes:
        shifted = np.zeros_like(counts)
        shifted[:, 1:] = counts[index ^ h, :-1]
        counts = counts + shifted
    return WeightEnumerator(n, tuple(int(a) for a in counts[0]))


def krawtchouk_row(n: int, i: int) -> list[int]:
    """Values ``K_j(i)`` for ``j = 0..n``: coefficients of ``(1-z)^i (1+z)^(n-i)``."""
    out = [1]
    if n == 0:
        return out
    out.append(n - 2 * i)
    for j in range(1, n):
        nxt = (n - 2 * i) * out[j] - (n - j + 1) * out[j - 1]
        out.append(nxt // (j + 1))
    return out


def macwilliams_transform(enumerator: WeightEnumerator, k: int) -> WeightEnumerator:
    """Weight enumerator of the dual of a dimension-``k`` code.

    Uses ``A'_j = 2^-k * sum_i A_i K_j(i)`` in exact integer arithmetic.

    Raises:
        NonIntegerResult: if any transformed coefficient is fractional or
            negative, or the input does not describe ``2^k`` codewords.
    """
    n = enumerator.n
    if enumerator.size != 1 << k:
        raise NonIntegerResult(
            f"enumerator counts {enumerator.size} words, expected 2^{k} = {1 << k}"
        )
    totals = [0] * (n + 1)
    for i, a in enumerate(enumerator.coefficients):
        if not a:
            continue
        for j, kj in enumerate(krawtchouk_row(n, i)):
            totals[j] += a * kj
    out = []
    for j, total in enumerate(totals):
        q, rem = divmod(total, 1 << k)
        if rem or q < 0:
            raise NonIntegerResult(f"coefficient {j} is {total}/2^{k}")
        out.append(q)
    return WeightEnumerator(n, tuple(out))


def binomial_enumerator(n: int) -> WeightEnumerator:
    """Weight enumerator of the full space ``F_2^n``."""
    return WeightEnumerator(n, tuple(comb(n, j) for j in range(n + 1)))
