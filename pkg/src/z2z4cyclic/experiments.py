"""Seeded experiments over the probability space of even-weight pairs (a, b).

Randomness contract
-------------------
The only PRNG is splitmix64 (64-bit state stepped by the golden-ratio
increment, output mixed by the standard finalizer). A run with master
seed S uses W = 16 fixed logical streams; stream w is seeded as
``mix64(S ^ mix64(w + 1))`` and trial t is served by stream t mod W, in
increasing t within each stream. Each draw from the even-weight set
consumes ceil((m-1)/64) words from its stream. Results therefore depend
only on (m, delta, trials, seed), never on the physical worker count,
which merely distributes whole streams across threads.

Uniformity of draws: the low m-1 bits are random and the top coefficient
is set to their XOR, a bijection from {0,1}^(m-1) onto the even-weight
polynomials, hence exactly uniform.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import bounds, codes, poly2
from .bounds import AdmissibleDelta
from .errors import DomainError

MASK64 = (1 << 64) - 1
N_STREAMS = 16
RNG_NAME = "splitmix64-w16"

#: Default census cap: full pair enumeration runs 4**(m-1) deep.
DEFAULT_CENSUS_MAX_M = 11


def _mix64(z: int) -> int:
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """splitmix64 word stream."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & MASK64

    def next64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & MASK64
        return _mix64(self._state)

    def bits(self, k: int) -> int:
        """k uniform random bits as an int."""
        v = 0
        got = 0
        while got < k:
            v |= self.next64() << got
            got += 64
        return v & ((1 << k) - 1)


def stream_for(master_seed: int, worker_index: int) -> SplitMix64:
    """The fixed logical stream ``worker_index`` of a run seeded with ``master_seed``."""
    return SplitMix64(_mix64((master_seed & MASK64) ^ _mix64(worker_index + 1)))


def sample_augmentation_ideal(rng: SplitMix64, m: int) -> int:
    """One uniform draw from the even-weight residue polynomials mod X^m - 1."""
    poly2.check_modulus(m)
    if m < 3:
        raise DomainError("invalid-modulus", "sampling needs m >= 3")
    k = rng.bits(m - 1)
    return k | ((k.bit_count() & 1) << (m - 1))


@dataclass(frozen=True)
class ExperimentReport:
    """One experiment outcome; identical inputs reproduce it bit-for-bit except elapsed_ms."""

    kind: str
    m: int
    delta: float | None
    trials: int | None
    seed: int | None
    estimate: float
    stderr: float
    exact_reference: Fraction | None = None
    bound_reference: float | None = None
    vacuous: bool | None = None
    exact_full_dim: Fraction | None = None
    zero_pairs: int | None = None
    rng: str | None = None
    elapsed_ms: int = 0


CSV_HEADER = "kind,m,delta,trials,seed,estimate,stderr,exact,bound,vacuous,elapsed_ms"


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return f"{x:.12g}"
    return str(x)


def report_csv_rows(r: ExperimentReport, include_timing: bool = False) -> list[str]:
    """Data rows under CSV_HEADER; a census yields a dim row then a distance row."""
    elapsed = r.elapsed_ms if include_timing else None
    rows = []
    if r.exact_full_dim is not None:
        rows.append(
            [r.kind, r.m, None, r.trials, r.seed, float(r.exact_full_dim), 0.0,
             r.exact_full_dim, None, None, elapsed]
        )
    if r.delta is not None or r.exact_full_dim is None:
        rows.append(
            [r.kind, r.m, r.delta, r.trials, r.seed, r.estimate, r.stderr,
             r.exact_reference, r.bound_reference, r.vacuous, elapsed]
        )
    return [",".join(_cell(c) for c in row) for row in rows]


def report_json_dict(r: ExperimentReport, include_timing: bool = False) -> dict:
    out: dict = {
        "kind": r.kind,
        "m": r.m,
        "delta": _round12(r.delta),
        "trials": r.trials,
        "seed": r.seed,
        "estimate": _round12(r.estimate),
        "stderr": _round12(r.stderr),
        "exact": None if r.exact_reference is None else str(r.exact_reference),
        "bound": _round12(r.bound_reference),
        "vacuous": r.vacuous,
    }
    if r.exact_full_dim is not None:
        out["exact_full_dim"] = str(r.exact_full_dim)
    if r.zero_pairs is not None:
        out["zero_pairs"] = r.zero_pairs
    if r.rng is not None:
        out["rng"] = r.rng
    if include_timing:
        out["elapsed_ms"] = r.elapsed_ms
    return out


def _round12(x):
    # floats carry 12 significant digits in machine output
    return None if x is None else float(f"{x:.12g}")


def _check_trials(trials) -> None:
    if not isinstance(trials, int) or isinstance(trials, bool) or trials < 1:
        raise DomainError("invalid-argument", f"trials must be a positive integer, got {trials!r}")


def _stream_trial_counts(trials: int) -> list[int]:
    return [len(range(s, trials, N_STREAMS)) for s in range(N_STREAMS)]


def _run_streams(worker_fn, trials: int, workers: int) -> list:
    counts = _stream_trial_counts(trials)
    args = [(s, counts[s]) for s in range(N_STREAMS) if counts[s]]
    if workers <= 1:
        return [worker_fn(s, n) for s, n in args]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda sn: worker_fn(*sn), args))


def monte_carlo_full_dim(m: int, trials: int, seed: int, workers: int = 1) -> ExperimentReport:
    """Estimate Pr(dim = m - 1) by uniform sampling of even-weight pairs."""
    poly2.check_modulus(m)
    if m < 3:
        raise DomainError("invalid-modulus", "needs m >= 3")
    _check_trials(trials)
    t0 = time.perf_counter()
    xm1 = poly2.cycle_poly(m)
    top = m - 1

    def one_stream(s: int, n: int) -> int:
        rng = stream_for(seed, s)
        hits = 0
        for _ in range(n):
            ka = rng.bits(top)
            a = ka | ((ka.bit_count() & 1) << top)
            kb = rng.bits(top)
            b = kb | ((kb.bit_count() & 1) << top)
            if poly2._gcd(poly2._gcd(a, b), xm1) == 0b11:
                hits += 1
        return hits

    hits = sum(_run_streams(one_stream, trials, workers))
    est = hits / trials
    stderr = math.sqrt(est * (1.0 - est) / trials)
    return ExperimentReport(
        kind="monte-carlo",
        m=m,
        delta=None,
        trials=trials,
        seed=seed,
        estimate=est,
        stderr=stderr,
        exact_reference=bounds.exact_pr_full_dim(m),
        rng=RNG_NAME,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


def monte_carlo_distance(
    m: int,
    delta: AdmissibleDelta,
    trials: int,
    seed: int,
    cap: int = codes.DEFAULT_ENUM_CAP,
    workers: int = 1,
) -> ExperimentReport:
    """Estimate Pr(relative distance > delta), with exact per-sample minimum weight.

    Zero-code draws (a = b = 0) are excluded from the estimate and
    tallied in ``zero_pairs``. The estimate is cross-checked against the
    union bound: 1 - estimate must stay within min(1, bound) + 4*stderr.
    """
    poly2.check_modulus(m)
    if m < 3:
        raise DomainError("invalid-modulus", "needs m >= 3")
    _check_trials(trials)
    if m - 1 > cap:
        raise DomainError("cap-exceeded", f"dim can reach {m - 1} > enumeration cap {cap}")
    t0 = time.perf_counter()
    threshold = 3.0 * m * delta.delta
    top = m - 1

    def one_stream(s: int, n: int) -> tuple[int, int]:
        rng = stream_for(seed, s)
        hits = zeros = 0
        for _ in range(n):
            ka = rng.bits(top)
            a = ka | ((ka.bit_count() & 1) << top)
            kb = rng.bits(top)
            b = kb | ((kb.bit_count() & 1) << top)
            if a == 0 and b == 0:
                zeros += 1
                continue
            if codes.min_weight(codes.build_code(m, a, b), cap=cap) > threshold:
                hits += 1
        return hits, zeros

    parts = _run_streams(one_stream, trials, workers)
    hits = sum(p[0] for p in parts)
    zeros = sum(p[1] for p in parts)
    nonzero = trials - zeros
    est = hits / nonzero if nonzero else 0.0
    stderr = math.sqrt(est * (1.0 - est) / trials)
    db = bounds.pr_delta_bound(m, delta)
    if nonzero and 1.0 - est > min(1.0, db.value) + 4.0 * stderr:
        raise DomainError(
            "bound-violation",
            f"observed Pr(distance <= delta) = {1.0 - est:.6g} exceeds "
            f"min(1, {db.value:.6g}) + 4*stderr at m={m}",
        )
    return ExperimentReport(
        kind="monte-carlo",
        m=m,
        delta=delta.delta,
        trials=trials,
        seed=seed,
        estimate=est,
        stderr=stderr,
        bound_reference=db.value,
        vacuous=db.vacuous,
        zero_pairs=zeros,
        rng=RNG_NAME,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


def _even_poly(idx: int, m: int) -> int:
    return idx | ((idx.bit_count() & 1) << (m - 1))


def _census_full_dim(m: int) -> Fraction:
    # histogram over gcd(a, X^m - 1); pairs are full-dimensional exactly
    # when their two gcds meet in X + 1
    n = 1 << (m - 1)
    xm1 = poly2.cycle_poly(m)
    hist: dict[int, int] = {}
    for i in range(n):
        a = _even_poly(i, m)
        d = poly2._gcd(a, xm1) if a else xm1
        hist[d] = hist.get(d, 0) + 1
    count = 0
    for d1, n1 in hist.items():
        for d2, n2 in hist.items():
            if poly2._gcd(d1, d2) == 0b11:
                count += n1 * n2
    return Fraction(count, n * n)


def _census_delta_chunk(m: int, threshold: float, c_lo: int, c_hi: int) -> list[int]:
    # bad-pair masks: acc[ia] bit ib set <=> some multiplier in the index
    # range produces a nonzero codeword of weight <= threshold for (a, b)
    n = 1 << (m - 1)
    basis = [_even_poly(1 << j, m) for j in range(m - 1)]
    acc = [0] * n
    for ci in range(max(c_lo, 1), c_hi):
        c = _even_poly(ci, m)
        prods = [poly2.poly_mul_mod(c, bj, m) for bj in basis]
        warr = [0] * n
        wmask = [0] * (m + 1)
        wmask[0] = 1  # index 0 is the zero polynomial
        cur = 0
        for t in range(1, n):
            cur ^= prods[(t & -t).bit_length() - 1]
            idx = t ^ (t >> 1)
            w = cur.bit_count()
            warr[idx] = w
            wmask[w] |= 1 << idx
        prefix = []
        run = 0
        for v in range(m + 1):
            run |= wmask[v]
            prefix.append(run)
        row = [0] * (m + 1)
        for x in range(m + 1):
            rem = threshold - x
            if rem >= 0:
                row[x] = prefix[min(int(rem // 2), m)]
        row0 = row[0] & ~wmask[0]  # zero left image: require c*b != 0
        for idx in range(n):
            x = warr[idx]
            rm = row0 if x == 0 else row[x]
            if rm:
                acc[idx] |= rm
    return acc


def exhaustive_census(
    m: int,
    delta: AdmissibleDelta,
    max_m: int = DEFAULT_CENSUS_MAX_M,
    workers: int = 1,
) -> ExperimentReport:
    """Exact Pr(dim = m - 1) and Pr(distance <= delta) over all even-weight pairs.

    The lone zero pair (the zero code, where distance is undefined) is
    excluded from the distance statistic and reported in ``zero_pairs``.
    """
    poly2.check_modulus(m)
    if m < 3:
        raise DomainError("invalid-modulus", "needs m >= 3")
    if m > max_m:
        raise DomainError("cap-exceeded", f"census at m = {m} exceeds cap {max_m}")
    t0 = time.perf_counter()
    n = 1 << (m - 1)
    threshold = 3.0 * m * delta.delta
    if workers <= 1 or n < 4:
        acc = _census_delta_chunk(m, threshold, 0, n)
    else:
        step = max(n // workers, 1)
        spans = [(lo, min(lo + step, n)) for lo in range(0, n, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda s: _census_delta_chunk(m, threshold, *s), spans))
        acc = [0] * n
        for part in parts:
            for i, v in enumerate(part):
                acc[i] |= v
    bad = sum(v.bit_count() for v in acc)
    pr_delta = Fraction(bad, n * n - 1)
    full_dim = _census_full_dim(m)
    db = bounds.pr_delta_bound(m, delta)
    return ExperimentReport(
        kind="census",
        m=m,
        delta=delta.delta,
        trials=n * n,
        seed=None,
        estimate=float(pr_delta),
        stderr=0.0,
        exact_reference=pr_delta,
        bound_reference=db.value,
        vacuous=db.vacuous,
        exact_full_dim=full_dim,
        zero_pairs=1,
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


class ScanRow(NamedTuple):
    m: int
    ell_m: int
    ratio: float


def scan_lengths(m_max: int, threshold: float) -> tuple[ScanRow, ...]:
    """Odd cycle lengths m <= m_max with log2(m) / min_factor_degree(m) <= threshold."""
    if not isinstance(m_max, int) or m_max < 3:
        raise DomainError("invalid-argument", f"m_max must be an integer >= 3, got {m_max!r}")
    if not threshold > 0:
        raise DomainError("invalid-argument", f"threshold must be positive, got {threshold!r}")
    rows = []
    for m in range(3, m_max + 1, 2):
        ell = poly2.min_factor_degree(m)
        ratio = math.log2(m) / ell
        if ratio <= threshold:
            rows.append(ScanRow(m, ell, ratio))
    return tuple(rows)


SCAN_CSV_HEADER = "m,ell_m,ratio"


def scan_csv_rows(rows) -> list[str]:
    return [f"{r.m},{r.ell_m},{r.ratio:.12g}" for r in rows]
