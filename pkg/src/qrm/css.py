"""Quantum Reed-Muller codes built as CSS pairs ``C1 = RM(r, m)``, ``C2 = C1^⊥``.

Encoded basis states are kept unnormalised: a state is a map from ``n``-bit
strings to signs in ``{+1, -1}``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from qrm.errors import CapExceeded, InvalidOrder, NotInCodespace, NotSelfDualNested
from qrm.gf2 import (
    BitMatrix,
    LinearCode,
    span_gray,
    as_word,
    enumerate_codewords,
    inner_product,
    int_to_bits,
    nullspace_generator,
    rank,
    resolve_cap,
)
from qrm.reed_muller import RmSpec, check_nesting, rm_code, rm_dual_spec

DEFAULT_LEADER_CAP = 16


@dataclass(frozen=True)
class CssCode:
    """CSS code from ``C1 = RM(r, m)`` and ``C2 = RM(m - r - 1, m)``."""

    c1: RmSpec

    @property
    def c2(self) -> RmSpec:
        return rm_dual_spec(self.c1)

    @property
    def n(self) -> int:
        return self.c1.n

    @property
    def k(self) -> int:
        return 2 * self.c1.k - self.n

    @property
    def d(self) -> int:
        return 1 << (self.c1.m - self.c1.r)

    @property
    def t(self) -> int:
        return (self.d - 1) // 2

    @property
    def rate(self) -> float:
        return self.k / self.n

    @property
    def code1(self) -> LinearCode:
        return rm_code(self.c1)

    @property
    def code2(self) -> LinearCode:
        return rm_code(self.c2)

    def __str__(self) -> str:
        return f"[[{self.n},{self.k},{self.d}]]"


def css_from_rm(r: int, m: int) -> CssCode:
    """Build the quantum code with ``C1 = RM(r, m)`` and ``C2 = C1^⊥``.

    The nesting ``C2 ⊆ C1`` is checked on the generator matrices.

    Raises:
        InvalidOrder: unless ``0 <= r <= m``.
        NotSelfDualNested: if ``m - r - 1 > r``.
    """
    if m < 0 or not 0 <= r <= m:
        raise InvalidOrder(f"need 0 <= r <= m, got r={r}, m={m}")
    if m - r - 1 > r:
        raise NotSelfDualNested(
            f"RM({r},{m})^⊥ = RM({m - r - 1},{m}) is not contained in RM({r},{m})"
        )
    code = CssCode(RmSpec(r, m))
    if not check_nesting(code.c2, code.c1):
        raise AssertionError(f"nesting failed for {code}")
    return code


def logical_dimension_from_ranks(code: CssCode) -> int:
    """``dim(C2^⊥) - dim(C1^⊥)`` computed from nullspace ranks."""
    dual2 = nullspace_generator(code.code2.generator)
    dual1 = nullspace_generator(code.code1.generator)
    return rank(dual2) - rank(dual1)


@dataclass(frozen=True)
class SparseState:
    """Unnormalised superposition of computational basis states.

    Attributes:
        n: Number of qubits.
        basis: 1 for the computational basis, 2 for the conjugate basis.
        terms: Maps each ``n``-bit string in the support to its sign.
        w: Label of the encoded logical word.
        k: Logical qubit count of the originating code.
    """

    n: int
    basis: int
    terms: dict[str, int]
    w: str = field(default="", compare=False)
    k: int = field(default=0, compare=False)

    @functools.cached_property
    def packed(self) -> tuple[tuple[int, int], ...]:
        """Support words as integers paired with their signs."""
        return tuple((int(v, 2), sign) for v, sign in self.terms.items())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "basis": self.basis,
            "w": self.w,
            "terms": [{"v": v, "sign": self.terms[v]} for v in sorted(self.terms)],
        }

    @classmethod
    def from_json(cls, payload: dict) -> SparseState:
        terms = {t["v"]: int(t["sign"]) for t in payload["terms"]}
        return cls(payload["n"], payload["basis"], terms, payload.get("w", ""), payload.get("k", 0))


def _dual_code(code: CssCode) -> LinearCode:
    return rm_code(code.c2)


def _quotient_basis(code: CssCode) -> list[int]:
    """Rows of C1's generator that extend a basis of C1^⊥ to one of C1."""
    picked = []
    current = _dual_code(code).generator
    for row in code.code1.generator.rows:
        trial = current.vstack(BitMatrix((row,), code.n))
        if rank(trial) == trial.nrows:
            current = trial
            picked.append(row)
    return picked


def coset_leaders(
    code: CssCode, leader_cap: int = DEFAULT_LEADER_CAP, cap: int | None = None
) -> list[str]:
    """One leader per coset of ``C1^⊥`` in ``C1``, sorted lexicographically.

    Each leader is the minimum-weight word of its coset, with ties broken
    towards the lexicographically smallest string.

    Raises:
        CapExceeded: if ``k > leader_cap`` or if exhausting all ``2^k(C1)``
            words of C1 exceeds the enumeration cap.
    """
    cap = resolve_cap(cap)
    if code.k > leader_cap:
        raise CapExceeded(f"coset leaders of {code}", code.k, leader_cap, "leader cap")
    if code.c1.k > cap:
        raise CapExceeded(f"coset search in {code}", code.c1.k, cap)
    quotient = _quotient_basis(code)
    dual_words = list(span_gray(_dual_code(code).generator.rows))
    leaders = []
    for shift in span_gray(quotient):
        # string order equals integer order for fixed-width words
        leaders.append(min((v ^ shift for v in dual_words), key=lambda x: (x.bit_count(), x)))
    return sorted(int_to_bits(w, code.n) for w in leaders)


def _check_in_c1(code: CssCode, w: int | str) -> int:
    word = as_word(w, code.n)
    if word not in code.code1:
        raise NotInCodespace(f"{int_to_bits(word, code.n)} is not a codeword of {code.c1}")
    return word


def encode_basis1(code: CssCode, w: int | str, cap: int | None = None) -> SparseState:
    """Computational-basis encoding: ``sum over v in C1 of (-1)^(v.w) |v>``."""
    word = _check_in_c1(code, w)
    terms = {
        int_to_bits(v, code.n): -1 if inner_product(v, word) else 1
        for v in enumerate_codewords(code.code1, cap)
    }
    return SparseState(code.n, 1, terms, int_to_bits(word, code.n), code.k)


def encode_basis2(code: CssCode, w: int | str, cap: int | None = None) -> SparseState:
    """Conjugate-basis encoding: the coset ``w + C1^⊥`` with all signs ``+1``."""
    word = _check_in_c1(code, w)
    terms = {int_to_bits(v ^ word, code.n): 1 for v in enumerate_codewords(_dual_code(code), cap)}
    return SparseState(code.n, 2, terms, int_to_bits(word, code.n), code.k)


def hadamard_amplitude(state: SparseState, u: int | str) -> int:
    """Unnormalised amplitude of ``|u>`` after a Hadamard on every qubit."""
    uu = as_word(u, state.n)
    return sum(-sign if (v & uu).bit_count() & 1 else sign for v, sign in state.packed)


@dataclass(frozen=True)
class QuantumTableRow:
    m: int
    r: int
    n: int
    k: int
    d: int


def constructible_orders(m: int) -> list[int]:
    """Orders ``r`` giving a quantum code of length ``2^m`` with ``{0} ⊊ C2 ⊆ C1``."""
    return [r for r in range(m) if m - r - 1 <= r]


@functools.lru_cache(maxsize=None)
def _quantum_rows(max_m: int) -> tuple[QuantumTableRow, ...]:
    rows = []
    for m in range(2, max_m + 1):
        for r in sorted(constructible_orders(m), reverse=True):
            c = CssCode(RmSpec(r, m))
            rows.append(QuantumTableRow(m, r, c.n, c.k, c.d))
    return tuple(rows)


def quantum_table(max_m: int) -> list[QuantumTableRow]:
    """Parameters of every constructible quantum RM code with ``2 <= m <= max_m``.

    The ``r = m`` case is left out: there ``C2`` is the zero code.
    """
    if max_m < 2:
        raise ValueError("max_m must be at least 2")
    return list(_quantum_rows(max_m))
