"""Self-check suite behind ``qrm verify``.

Each check returns a :class:`CheckResult`; enumeration-heavy checks report
``SKIP`` when a code is above the configured caps instead of failing.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Callable, Iterator
from dataclasses import dataclass

import numpy as np

from qrm import css, error_analysis, gf2, reed_muller
from qrm.errors import CapExceeded
from qrm.reed_muller import RmSpec

PASS, FAIL, SKIP = "PASS", "FAIL", "SKIP"

SQUARING_MAX_M = 6
MACWILLIAMS_MAX_N = 256
MACWILLIAMS_MAX_SIDE = 20
STATE_MAX_N = 16
STATE_SAMPLE = 16


@dataclass(frozen=True)
class CheckResult:
    status: str
    name: str
    detail: str = ""

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")


def _specs(max_m: int) -> Iterator[RmSpec]:
    for m in range(2, max_m + 1):
        for r in range(m + 1):
            yield RmSpec(r, m)


def _result(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(PASS if ok else FAIL, name, detail)


def check_dimensions(max_m: int) -> Iterator[CheckResult]:
    bad = [str(s) for s in _specs(max_m) if gf2.rank(reed_muller.rm_generator(s)) != s.k]
    yield _result("rank(G(r,m)) = sum C(m,l)", not bad, ", ".join(bad))


def check_nesting(max_m: int) -> Iterator[CheckResult]:
    bad = [
        str(s)
        for s in _specs(max_m)
        if s.r < s.m and not reed_muller.check_nesting(s, RmSpec(s.r + 1, s.m))
    ]
    yield _result("RM(r,m) ⊂ RM(r+1,m)", not bad, ", ".join(bad))


def check_duality(max_m: int) -> Iterator[CheckResult]:
    bad = []
    for s in _specs(max_m):
        if s.m - s.r - 1 < 0:
            continue
        dual = reed_muller.rm_dual_spec(s)
        product = reed_muller.rm_generator(s).mul_transpose(reed_muller.rm_generator(dual))
        if not product.is_zero() or s.k + dual.k != s.n:
            bad.append(str(s))
    yield _result("RM(r,m)^⊥ = RM(m-r-1,m)", not bad, ", ".join(bad))


def check_distances(max_m: int, cap: int) -> Iterator[CheckResult]:
    checked, skipped, bad = 0, 0, []
    for s in _specs(max_m):
        if s.k > cap:
            skipped += 1
            continue
        checked += 1
        if gf2.min_weight_bruteforce(reed_muller.rm_code(s), cap) != s.d:
            bad.append(str(s))
    yield _result("brute-force d = 2^(m-r)", not bad, f"{checked} codes" + (f"; bad {bad}" if bad else ""))
    if skipped:
        yield CheckResult(SKIP, "brute-force d = 2^(m-r)", f"{skipped} codes above cap 2^{cap}")


def check_distance_recursion(max_m: int) -> Iterator[CheckResult]:
    bad = []
    for s in _specs(max_m):
        if s.r == 0:
            continue
        if s.d != min(RmSpec(s.r - 1, s.m - 1).d, 2 * RmSpec(min(s.r, s.m - 1), s.m - 1).d):
            bad.append(str(s))
    yield _result("d(r,m) = min(d(r-1,m-1), 2 d(r,m-1))", not bad, ", ".join(bad))


def check_squaring(max_m: int) -> Iterator[CheckResult]:
    top = min(max_m - 1, SQUARING_MAX_M)
    bad_sq, bad_orth, bad_rec = [], [], []
    for m in range(0, top + 1):
        for r in range(m + 1):
            built = reed_muller.squaring_construct(reed_muller.partition((r, m)))
            if not gf2.same_row_space(built.generator, reed_muller.rm_generator((r, m + 1))):
                bad_sq.append(f"({r},{m})")
            if not reed_muller.check_dual_partition_orthogonality(r, m):
                bad_orth.append(f"({r},{m})")
            recursive = reed_muller.rm_code_by_squaring(r, m + 1)
            if not gf2.same_row_space(recursive.generator, reed_muller.rm_generator((r, m + 1))):
                bad_rec.append(f"({r},{m + 1})")
    if top < 0:
        yield CheckResult(SKIP, "squaring construction", "max_m too small")
        return
    yield _result("|RM(r,m)/RM(r-1,m)|^2 = RM(r,m+1)", not bad_sq, ", ".join(bad_sq))
    yield _result("dual partition squarings are orthogonal", not bad_orth, ", ".join(bad_orth))
    yield _result("recursive squaring from RM(r,0)", not bad_rec, ", ".join(bad_rec))


def _enumerator(code: gf2.LinearCode, cap: int) -> gf2.WeightEnumerator:
    if code.k <= min(cap, MACWILLIAMS_MAX_SIDE):
        return gf2.weight_enumerator(code, cap)
    return gf2.weight_enumerator_by_syndrome(code, cap)


def check_macwilliams(max_m: int, cap: int) -> Iterator[CheckResult]:
    checked, skipped, bad = 0, 0, []
    for s in _specs(max_m):
        if s.n > MACWILLIAMS_MAX_N or min(s.k, s.n - s.k) > min(cap, MACWILLIAMS_MAX_SIDE):
            skipped += 1
            continue
        code = reed_muller.rm_code(s)
        dual = code.dual()
        w, w_dual = _enumerator(code, cap), _enumerator(dual, cap)
        checked += 1
        if gf2.macwilliams_transform(w, code.k) != w_dual:
            bad.append(str(s))
    yield _result("MacWilliams(W_C) = W_C⊥", not bad, f"{checked} codes" + (f"; bad {bad}" if bad else ""))
    if skipped:
        yield CheckResult(SKIP, "MacWilliams(W_C) = W_C⊥", f"{skipped} codes too large")


def check_quantum_parameters(max_m: int) -> Iterator[CheckResult]:
    bad = []
    for m in range(2, max_m + 1):
        for r in css.constructible_orders(m):
            code = css.css_from_rm(r, m)
            d2 = RmSpec(m - r - 1, m).d
            if css.logical_dimension_from_ranks(code) != code.k or min(code.d, d2) != code.d:
                bad.append(str(code))
    yield _result("k = dim(C2^⊥) - dim(C1^⊥), d = min(d1, d2)", not bad, ", ".join(bad))


def walsh_hadamard(signs: np.ndarray) -> np.ndarray:
    """Unnormalised fast Walsh-Hadamard transform of a length-2^n vector."""
    a = signs.astype(np.int64).copy()
    h = 1
    while h < a.size:
        a = a.reshape(-1, 2, h)
        a = np.stack([a[:, 0] + a[:, 1], a[:, 0] - a[:, 1]], axis=1).reshape(-1)
        h *= 2
    return a


def _dense(state: css.SparseState) -> np.ndarray:
    vec = np.zeros(1 << state.n, dtype=np.int64)
    for v, sign in state.terms.items():
        vec[int(v, 2)] = sign
    return vec


def check_states(max_m: int, leader_cap: int, cap: int, seed: int = 0) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    for m in range(2, max_m + 1):
        if 1 << m > STATE_MAX_N:
            break
        for r in css.constructible_orders(m):
            code = css.css_from_rm(r, m)
            name = f"states of {code}"
            try:
                leaders = css.coset_leaders(code, leader_cap, cap)
            except CapExceeded as exc:
                yield CheckResult(SKIP, name, str(exc))
                continue
            problems = []
            if len(leaders) != 1 << code.k:
                problems.append(f"{len(leaders)} leaders")
            seen: set[str] = set()
            for w in leaders:
                support = set(css.encode_basis2(code, w, cap).terms)
                if seen & support:
                    problems.append(f"basis-2 overlap at {w}")
                seen |= support
            sample = leaders if len(leaders) <= STATE_SAMPLE else rng.sample(leaders, STATE_SAMPLE)
            size = 1 << code.c1.k
            dense = {}
            for w in sample:
                state1 = css.encode_basis1(code, w, cap)
                expected = size * np.abs(_dense(css.encode_basis2(code, w, cap)))
                if not np.array_equal(walsh_hadamard(_dense(state1)), expected):
                    problems.append(f"Hadamard relation at {w}")
                dense[w] = _dense(state1)
            for a, b in itertools.combinations(sample, 2):
                if int(dense[a] @ dense[b]) != 0:
                    problems.append(f"overlap <{a}|{b}>")
            detail = f"{len(leaders)} leaders, {len(sample)} states transformed"
            yield _result(name, not problems, "; ".join(problems[:3]) or detail)


def check_bounds(seed: int = 0) -> Iterator[CheckResult]:
    flagship = css.css_from_rm(5, 10)
    pe = error_analysis.block_error_bound(flagship.n, flagship.t, 0.003)
    pq = error_analysis.qubit_error_rate(pe, flagship.n)
    yield _result(f"{flagship} P_q(0.003) <= 1e-9", pq <= 1e-9, f"P_q = {pq:.3e}")
    exact = float(error_analysis.block_error_exact(flagship.n, flagship.t, 0.003))
    rel = abs(pe - exact) / exact
    yield _result("log-domain tail vs exact rational", rel <= 1e-9, f"rel err {rel:.1e}")
    mc = error_analysis.monte_carlo_block_error(13, 2, 0.05, 200_000, seed)
    analytic = error_analysis.block_error_bound(13, 2, 0.05)
    yield _result(
        "Monte Carlo (13,2,0.05) within 4 stderr",
        abs(mc.estimate - analytic) <= 4 * mc.stderr,
        f"{mc.estimate:.5f} vs {analytic:.5f}",
    )


def run_checks(
    max_m: int, cap: int | None = None, leader_cap: int = css.DEFAULT_LEADER_CAP, seed: int = 0
) -> Iterator[CheckResult]:
    """Run the full suite, yielding results as they complete."""
    if max_m < 2:
        raise ValueError("max_m must be at least 2")
    cap = gf2.resolve_cap(cap)
    groups: list[Callable[[], Iterator[CheckResult]]] = [
        lambda: check_dimensions(max_m),
        lambda: check_nesting(max_m),
        lambda: check_duality(max_m),
        lambda: check_distance_recursion(max_m),
        lambda: check_distances(max_m, cap),
        lambda: check_squaring(max_m),
        lambda: check_macwilliams(max_m, cap),
        lambda: check_quantum_parameters(max_m),
        lambda: check_states(max_m, leader_cap, cap, seed),
        lambda: check_bounds(seed),
    ]
    for group in groups:
        yield from group()
