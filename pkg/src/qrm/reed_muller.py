"""Reed-Muller codes RM(r, m), their partitions and the squaring construction."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import comb

from qrm.errors import InvalidOrder, InvalidPartition, MismatchedLength
from qrm.gf2 import BitMatrix, LinearCode, rank, row_space_subset


@dataclass(frozen=True)
class RmSpec:
    """Order/length pair of a Reed-Muller code.

    ``r = -1`` is accepted as the zero code of length ``2^m``; it is the
    bottom of every partition chain.
    """

    r: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise InvalidOrder(f"m must be nonnegative, got m={self.m}")
        if not -1 <= self.r <= self.m:
            raise InvalidOrder(f"order r={self.r} outside [-1, {self.m}] for m={self.m}")

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return sum(comb(self.m, l) for l in range(self.r + 1))

    @property
    def d(self) -> int | None:
        """Minimum distance ``2^(m-r)``; ``None`` for the zero code."""
        return None if self.r < 0 else 1 << (self.m - self.r)

    def __str__(self) -> str:
        return f"RM({self.r},{self.m})"


def _spec(spec: RmSpec | tuple[int, int]) -> RmSpec:
    return spec if isinstance(spec, RmSpec) else RmSpec(*spec)


def _coordinate_rows(m: int) -> list[int]:
    """Rows of G_1 as packed ints.

    Column ``j`` holds the binary expansion of ``j`` with the low-order bit
    in the bottom row, so the top row is the most significant bit of ``j``.
    """
    n = 1 << m
    rows = []
    for i in range(m):
        bit = m - 1 - i
        row = 0
        for j in range(n):
            row = (row << 1) | ((j >> bit) & 1)
        rows.append(row)
    return rows


@functools.lru_cache(maxsize=None)
def _block_rows(m: int, l: int) -> tuple[int, ...]:
    """Rows of G_l: products of ``l`` distinct G_1 rows, index sets in lex order."""
    n = 1 << m
    ones = (1 << n) - 1
    coords = _coordinate_rows(m)
    out = []
    for subset in itertools.combinations(range(m), l):
        row = ones
        for i in subset:
            row &= coords[i]
        out.append(row)
    return tuple(out)


def rm_generator(spec: RmSpec | tuple[int, int]) -> BitMatrix:
    """Generator matrix ``[G_0; G_1; ...; G_r]`` of RM(r, m).

    Example:
        >>> print(rm_generator((1, 2)).to_text(), end="")
        1111
        0011
        0101
    """
    spec = _spec(spec)
    rows: tuple[int, ...] = ()
    for l in range(spec.r + 1):
        rows += _block_rows(spec.m, l)
    return BitMatrix(rows, spec.n)


@functools.lru_cache(maxsize=None)
def _rm_code(r: int, m: int) -> LinearCode:
    spec = RmSpec(r, m)
    return LinearCode(rm_generator(spec), d=spec.d)


def rm_code(spec: RmSpec | tuple[int, int]) -> LinearCode:
    """RM(r, m) as a :class:`LinearCode` with its analytic distance cached.

    Full row rank is checked when the code is built.
    """
    spec = _spec(spec)
    code = _rm_code(spec.r, spec.m)
    if code.k != spec.k:
        raise AssertionError(f"{spec}: generator has {code.k} rows, expected {spec.k}")
    return code


def rm_dual_spec(spec: RmSpec | tuple[int, int]) -> RmSpec:
    """The dual of RM(r, m) is RM(m - r - 1, m); RM(m, m) maps to the zero code."""
    spec = _spec(spec)
    if spec.r < 0:
        raise InvalidOrder("the dual of the zero code is the full space RM(m, m); pass r >= 0")
    return RmSpec(spec.m - spec.r - 1, spec.m)


def check_nesting(inner: RmSpec | tuple[int, int], outer: RmSpec | tuple[int, int]) -> bool:
    inner, outer = _spec(inner), _spec(outer)
    if inner.m != outer.m:
        raise MismatchedLength(f"{inner} and {outer} have different lengths")
    return row_space_subset(rm_generator(inner), rm_generator(outer))


@dataclass(frozen=True)
class Partition:
    """A code split into a subcode and a set of coset representatives.

    Attributes:
        parent: The larger code.
        child: A subcode of ``parent``.
        transversal: Rows that extend ``child``'s generator to one of ``parent``.
    """

    parent: LinearCode
    child: LinearCode
    transversal: BitMatrix

    def validate(self) -> None:
        if self.child.n != self.parent.n or self.transversal.ncols != self.parent.n:
            raise InvalidPartition("partition members have different lengths")
        if not row_space_subset(self.child.generator, self.parent.generator):
            raise InvalidPartition("child is not a subcode of parent")
        joint = self.child.generator.vstack(self.transversal)
        if rank(joint) != joint.nrows or joint.nrows != self.parent.k:
            raise InvalidPartition("child and transversal do not jointly generate parent")
        if not row_space_subset(joint, self.parent.generator):
            raise InvalidPartition("transversal leaves the parent code")


def partition(spec: RmSpec | tuple[int, int]) -> Partition:
    """One-level partition RM(r, m) / RM(r-1, m) with the G_r rows as transversal."""
    spec = _spec(spec)
    if spec.r < 0:
        raise InvalidOrder("partition needs r >= 0")
    parent = rm_code(spec)
    child = rm_code(RmSpec(spec.r - 1, spec.m))
    transversal = BitMatrix(_block_rows(spec.m, spec.r), spec.n)
    return Partition(parent, child, transversal)


def squaring_construct(p: Partition) -> LinearCode:
    """The squaring construction ``{(t1 + c, t2 + c)}`` of a partition.

    ``t1, t2`` range over the child and ``c`` over the span of the
    transversal.  The generator used is ``{(g, g)}`` for parent rows ``g``
    together with ``{(h, 0)}`` for child rows ``h``.  The cached distance
    follows ``min(d_child, 2 d_parent)``.

    Raises:
        InvalidPartition: if the child is not contained in the parent.
    """
    p.validate()
    n = p.parent.n
    rows = [(g << n) | g for g in p.parent.generator.rows]
    rows += [h << n for h in p.child.generator.rows]
    d = None
    if p.parent.d is not None and p.child.k == 0:
        d = 2 * p.parent.d
    elif p.parent.d is not None and p.child.d is not None:
        d = min(p.child.d, 2 * p.parent.d)
    return LinearCode(BitMatrix(tuple(rows), 2 * n), d=d)


def rm_code_by_squaring(r: int, m: int) -> LinearCode:
    """Build RM(r, m) recursively from the length-1 boundary codes.

    RM(r, 0) is the full length-1 space for ``r >= 0`` and the zero code
    otherwise.  Orders above ``m`` saturate to the full space.
    """
    if m < 0:
        raise InvalidOrder(f"m must be nonnegative, got {m}")
    if r < 0:
        return LinearCode.zero(1 << m)
    if m == 0:
        return LinearCode.full(1)
    parent = rm_code_by_squaring(min(r, m - 1), m - 1)
    child = rm_code_by_squaring(r - 1, m - 1)
    # coset representatives: rows completing child's basis to parent's
    transversal = _complete_basis(child.generator, parent.generator)
    return squaring_construct(Partition(parent, child, transversal))


def _complete_basis(sub: BitMatrix, full: BitMatrix) -> BitMatrix:
    current = sub
    picked: list[int] = []
    for row in full.rows:
        trial = current.vstack(BitMatrix((row,), full.ncols))
        if rank(trial) == trial.nrows:
            current = trial
            picked.append(row)
    return BitMatrix(tuple(picked), full.ncols)


def dual_partition(r: int, m: int) -> Partition:
    """Partition RM⊥(r-1, m) / RM⊥(r, m), i.e. RM(m-r, m) / RM(m-r-1, m)."""
    spec = RmSpec(r, m)
    if spec.r < 0:
        raise InvalidOrder("dual partition needs r >= 0")
    return partition(RmSpec(m - r, m))


def check_dual_partition_orthogonality(r: int, m: int) -> bool:
    """Check that the squaring of a partition and of its dual partition are orthogonal.

    Every generator row of ``|RM(r,m)/RM(r-1,m)|^2`` must be orthogonal to
    every generator row of ``|RM⊥(r-1,m)/RM⊥(r,m)|^2``, and the two
    dimensions must add up to the doubled length.
    """
    a = squaring_construct(partition(RmSpec(r, m)))
    b = squaring_construct(dual_partition(r, m))
    return a.generator.mul_transpose(b.generator).is_zero() and a.k + b.k == a.n


@dataclass(frozen=True)
class TableRow:
    m: int
    r: int
    n: int
    k: int
    d: int


def classical_table(max_m: int, include_full_space: bool = False) -> list[TableRow]:
    """Parameters of RM(r, m) for ``2 <= m <= max_m``.

    Orders run over ``0 <= r < m``; the trivial ``r = m`` code (the whole
    space, distance 1) is added only with ``include_full_space``.  Rows are
    grouped by ``m`` and ordered by increasing distance within a length.
    """
    if max_m < 2:
        raise ValueError("max_m must be at least 2")
    rows = []
    for m in range(2, max_m + 1):
        top = m if include_full_space else m - 1
        for r in range(top, -1, -1):
            spec = RmSpec(r, m)
            rows.append(TableRow(m, r, spec.n, spec.k, spec.d))
    return rows
