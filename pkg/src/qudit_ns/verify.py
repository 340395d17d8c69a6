"""Invariant sweeps, each comparing an implementation against an independent route."""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .optimizer import (
    QUTRIT_CONDITIONS,
    ClosedFormMismatch,
    check_local_optimality,
    maximize_brute,
    maximize_qubit_closed,
    maximize_qutrit_closed,
    maximum_chain,
    move_ratio,
)
from .partitions import iter_partition_tuples, predecessors
from .radicals import qutrit_thresholds
from .rates import balanced_rate_series
from .schur_weyl import (
    BRUTE_FORCE_CAP,
    frobenius,
    qubit_multiplicity,
    ssyt_count_brute,
    syt_count_hook,
    weyl_dimension,
)

Counterexample = tuple[str, str, str]


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    params: dict
    counterexamples: tuple[Counterexample, ...]
    elapsed: float

    @property
    def status(self) -> str:
        return "pass" if not self.counterexamples else "fail"


def _fmt(p) -> str:
    if isinstance(p, (tuple, list)):
        return "(" + ";".join(_fmt(x) for x in p) + ")"
    return str(p)


def _opt_str(opt) -> str:
    return f"{opt.max_multiplicity}@" + "|".join(_fmt(p.parts) for p in opt.argmax)


def _sweep(fn: Callable, items, jobs: int) -> list:
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    else:
        chunks = [fn(x) for x in items]
    return [c for chunk in chunks for c in chunk]


# -- per-item workers (module level so they pickle) ---------------------------


def _dimension_sum(dn):
    d, n = dn
    total = sum(frobenius(t) * weyl_dimension(t) for t in iter_partition_tuples(n, d))
    return [] if total == d**n else [(_fmt(dn), str(d**n), str(total))]


def _hook(dn):
    d, n = dn
    out = []
    for t in iter_partition_tuples(n, d):
        f, h = frobenius(t), syt_count_hook(t)
        if f != h:
            out.append((_fmt(t), str(h), str(f)))
    return out


def _ssyt(dnc):
    d, n, cap = dnc
    out = []
    for t in iter_partition_tuples(n, d):
        g, s = weyl_dimension(t), ssyt_count_brute(t, d, cap=cap)
        if g != s:
            out.append((_fmt(t), str(s), str(g)))
    return out


def _closed_d2(n):
    closed, brute = maximize_qubit_closed(n), maximize_brute(2, n)
    if closed.max_multiplicity != brute.max_multiplicity or closed.partition not in brute.argmax:
        return [(f"n={n}", _opt_str(brute), _opt_str(closed))]
    if not closed.same_result(brute):
        return [(f"n={n} argmax", _opt_str(brute), _opt_str(closed))]
    return []


def _closed_d3(n):
    try:
        closed = maximize_qutrit_closed(n)
    except ClosedFormMismatch as exc:
        return [(f"n={n}", "consistent case analysis", str(exc))]
    brute = maximize_brute(3, n)
    if not closed.same_result(brute):
        return [(f"n={n}", _opt_str(brute), _opt_str(closed))]
    return []


def _thresholds(k):
    t = qutrit_thresholds(k)
    out = []
    if k >= 1 and t.r0_integral:
        out.append((f"k={k}", "r0 not an integer", "r0 integral"))
    if not t.ordering_holds:
        out.append((f"k={k}", "ceil ordering r1<r3<r0<r0_hat<r1+1", _fmt((t.ceil_r1, t.ceil_r3, t.ceil_r0, t.ceil_r0_hat))))
    return out


def _local(dn):
    d, n = dn
    out = []
    for p in maximize_brute(d, n).argmax:
        report = check_local_optimality(p)
        if not report.optimal:
            out.append((f"d={d} {p}", "locally optimal", "improving move exists"))
        if d == 3:
            out.extend(_condition_signs(p.parts))
    return out


def _condition_signs(parts):
    out = []
    by_move = {(m.to_row, m.from_row): m for m in check_local_optimality(parts).moves}
    for cond, (i, j) in QUTRIT_CONDITIONS.items():
        m = by_move.get((i, j))
        if m is None:
            continue
        ratio = move_ratio(parts, i, j)
        expected = (ratio < 1) - (ratio > 1)
        if m.sign != expected:
            out.append((f"{_fmt(parts)} condition ({cond})", str(expected), str(m.sign)))
    return out


def _quadratic(n):
    out = []
    for r in range(2, n // 2 + 1):
        diff = qubit_multiplicity(n, r) - qubit_multiplicity(n, r - 1)
        quad = (n + 1) * (n + 2) - 4 * (n + 2) * r + 4 * r * r
        if (diff > 0) - (diff < 0) != (quad > 0) - (quad < 0):
            out.append((f"n={n} r={r}", str(quad), str(diff)))
    return out


def _brute3(n):
    return [maximize_brute(3, n)]


# -- checks -------------------------------------------------------------------


def tie_family_ns(n_max: int) -> set[int]:
    """n <= n_max (n >= 3) where the qutrit maximum is predicted to be tied."""
    out = set()
    q = 0
    while 6 * q * q <= n_max:
        for k in (1 + 8 * q + 6 * q * q, 9 + 16 * q + 6 * q * q):
            out.add(3 * k + 1)
        for k in (5 + 13 * q + 6 * q * q, 10 + 17 * q + 6 * q * q, 7 * q + 6 * q * q, 3 + 11 * q + 6 * q * q):
            out.add(3 * k + 2)
        q += 1
    return {n for n in out if 3 <= n <= n_max}


def check_dimension_sum(d=None, nmax=10, jobs=1, **_):
    ds = [d] if d else [2, 3, 4]
    items = [(dd, n) for dd in ds for n in range(1, nmax + 1)]
    return {"d": ds, "n": [1, nmax]}, _sweep(_dimension_sum, items, jobs)


def check_hook_oracle(d=None, nmax=12, jobs=1, **_):
    ds = [d] if d else [1, 2, 3, 4]
    items = [(dd, n) for dd in ds for n in range(1, nmax + 1)]
    return {"d": ds, "n": [1, nmax]}, _sweep(_hook, items, jobs)


def check_ssyt_oracle(d=None, nmax=BRUTE_FORCE_CAP, jobs=1, **_):
    ds = [d] if d else [1, 2, 3, 4]
    cap = max(nmax, BRUTE_FORCE_CAP)
    items = [(dd, n, cap) for dd in ds for n in range(1, nmax + 1)]
    return {"d": ds, "n": [1, nmax]}, _sweep(_ssyt, items, jobs)


def check_closed_form_d2(nmax=1000, jobs=1, **_):
    return {"d": [2], "n": [2, nmax]}, _sweep(_closed_d2, range(2, nmax + 1), jobs)


def check_closed_form_d3(nmax=500, jobs=1, **_):
    bad = _sweep(_closed_d3, range(3, nmax + 1), jobs)
    bad += _sweep(_thresholds, range(0, nmax // 3 + 2), jobs)
    return {"d": [3], "n": [3, nmax]}, bad


def check_local_optimality_sweep(d=None, nmax=60, jobs=1, **_):
    ds = [d] if d else [2, 3, 4]
    items = [(dd, n) for dd in ds for n in range(1, nmax + 1)]
    return {"d": ds, "n": [1, nmax]}, _sweep(_local, items, jobs)


def check_mbm_chain(nmax=300, jobs=1, **_):
    brute = dict(zip(range(3, nmax + 1), _sweep(_brute3, range(3, nmax + 1), jobs)))
    bad = []
    prev = None
    try:
        for opt in maximum_chain(3, nmax, verify=True):
            ref = brute[opt.n]
            if not opt.same_result(ref):
                bad.append((f"n={opt.n}", _opt_str(ref), _opt_str(opt)))
            if prev is not None and prev.tie:
                q = tuple(max(x, y) for x, y in zip(*(p.parts for p in prev.argmax)))
                if frobenius(q) != ref.max_multiplicity:
                    bad.append((f"n={opt.n} componentwise max", str(ref.max_multiplicity), str(frobenius(q))))
            prev = opt
    except ClosedFormMismatch as exc:
        bad.append(("chain", "consistent", str(exc)))
    # every optimum at n+1 shrinks to an optimum at n
    for n in range(3, nmax):
        target = brute[n].max_multiplicity
        for p in brute[n + 1].argmax:
            got = max(frobenius(q.parts) for q in predecessors(p))
            if got != target:
                bad.append((f"shrink {p}", str(target), str(got)))
    return {"d": [3], "n": [3, nmax]}, bad


def check_tie_families(nmax=300, jobs=1, **_):
    opts = _sweep(_brute3, range(3, nmax + 1), jobs)
    seen = {o.n for o in opts if o.tie}
    predicted = tie_family_ns(nmax)
    bad = [(f"n={n}", "tie" if n in predicted else "unique", "tie" if n in seen else "unique") for n in sorted(seen ^ predicted)]
    bad += [(f"n={o.n}", "at most 2 maximizers", str(len(o.argmax))) for o in opts if len(o.argmax) > 2]
    return {"d": [3], "n": [3, nmax], "tie_n": sorted(seen)}, bad


def check_rate_bounds(d=None, kmax=50, **_):
    ds = [d] if d else [2, 3]
    bad = []
    for dd in ds:
        entries = balanced_rate_series(dd, kmax).entries
        for e in entries:
            lo_ok = e.rate > 0 if e.k >= 2 else e.rate >= 0
            if not (lo_ok and e.rate <= 1):
                bad.append((f"d={dd} k={e.k}", "rate in (0,1]", repr(e.rate)))
        gaps = [1 - e.rate for e in entries if e.k >= 5]
        for e, a, b in zip(entries[5:], gaps, gaps[1:]):
            if not b < a:
                bad.append((f"d={dd} k={e.k}", "1-rate decreasing", f"{a!r}->{b!r}"))
        floors = {2: (50, 0.90), 3: (30, 0.85)}
        if dd in floors and kmax >= floors[dd][0]:
            k, lo = floors[dd]
            if entries[k - 1].rate < lo:
                bad.append((f"d={dd} k={k}", f">= {lo}", repr(entries[k - 1].rate)))
    return {"d": ds, "k": [1, kmax]}, bad


def check_quadratic_sign_d2(nmax=200, jobs=1, **_):
    return {"d": [2], "n": [4, nmax]}, _sweep(_quadratic, range(4, nmax + 1), jobs)


CHECKS: dict[str, Callable] = {
    "dimension-sum": check_dimension_sum,
    "hook-oracle": check_hook_oracle,
    "ssyt-oracle": check_ssyt_oracle,
    "closed-form-d2": check_closed_form_d2,
    "closed-form-d3": check_closed_form_d3,
    "local-optimality": check_local_optimality_sweep,
    "mbm-chain": check_mbm_chain,
    "tie-families": check_tie_families,
    "rate-bounds": check_rate_bounds,
    "quadratic-sign-d2": check_quadratic_sign_d2,
}


def run_check(name: str, **params) -> VerificationReport:
    """Run one named sweep; ``None`` parameters fall back to the check's defaults."""
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    params = {k: v for k, v in params.items() if v is not None}
    start = time.perf_counter()
    used, bad = CHECKS[name](**params)
    return VerificationReport(name, used, tuple(bad), time.perf_counter() - start)
