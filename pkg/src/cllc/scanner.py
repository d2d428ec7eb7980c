"""Sweep all partitions, certify every F_lambda, and cross-check the identities.

A log-concavity or real-rootedness failure is a finding: the scan finishes
and the record says so.  A failed cross-check means an identity that must
hold did not, which is reported separately.
"""

from __future__ import annotations

import json
import math
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from . import __version__
from .analysis import certify_real_rooted, is_log_concave
from .errors import ConsistencyError, UsageError
from .iopoly import (
    ENUMERATION_GUARD,
    cycle_histogram,
    f_from_g,
    f_of_partition,
    io_polynomials,
    parity_theorem_holds,
    reduce_partition,
    type_invariance_check,
)
from .perm import (
    Partition,
    Permutation,
    canonical_permutation,
    enumerate_n_cycles,
    parity,
    partitions,
    random_permutation,
)
from .polynomial import IntPolynomial, from_json, to_json, to_text
from .stirling import (
    az_hultman_recurrence_check,
    f_cyclic_closed,
    f_cyclic_recurrence,
    g_cyclic_closed,
    hultman,
    hultman_brute,
    rec_f_as_printed_residual,
)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_CONSISTENCY = 3

__all__ = [
    "ScanRecord", "partitions", "scan", "scan_status", "known_type", "verify_identities",
    "VerifyReport", "IdentityResult", "write_jsonl", "format_table",
]


def known_type(lam: Partition) -> str | None:
    """Name of the previously settled family lam belongs to, if any."""
    parts = lam.parts
    n = lam.n
    core = [x for x in parts if x > 1]
    if n % 2 == 0 and parts and all(x == 2 for x in parts):
        return "2^(n/2)"
    if core == [2]:
        return "2 1^(n-2)"
    if core == [3]:
        return "3 1^(n-3)"
    if core == [4]:
        return "4 1^(n-4)"
    if core == [2, 2]:
        return "2^2 1^(n-4)"
    return None


@dataclass
class ScanRecord:
    partition: Partition
    f_poly: IntPolynomial
    reduced_from: Partition | None
    log_concave: bool
    contiguous_support: bool
    real_rooted: bool
    cross_checks: dict[str, bool] = field(default_factory=dict)
    elapsed: float = 0.0
    products: int = 0

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def conjecture_ok(self) -> bool:
        return self.log_concave and self.real_rooted

    @property
    def checks_ok(self) -> bool:
        return all(self.cross_checks.values())

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "n": self.n,
            "partition": list(self.partition.parts),
            "coeffs": to_json(self.f_poly),
            "lc": self.log_concave,
            "contiguous": self.contiguous_support,
            "rr": self.real_rooted,
            "checks": dict(sorted(self.cross_checks.items())),
            "ms": int(round(self.elapsed * 1000)) if timing else 0,
            "reduced_from": list(self.reduced_from.parts) if self.reduced_from else None,
            "products": self.products,
        }
        return out


# core evaluation: one enumeration per partition without unit parts (or per
# partition when reduction is off), shared by every partition reducing to it

def _evaluate_core(parts: tuple[int, ...], samples: int, guard: int | None) -> dict:
    start = time.perf_counter()
    lam = Partition(parts)
    pi = canonical_permutation(lam)
    hist = cycle_histogram(pi, guard=guard)
    f = IntPolynomial(_floor_map(hist))
    g = IntPolynomial(hist)
    checks = {}
    checks["parity_theorem"] = parity_theorem_holds(pi, hist)
    try:
        checks["fg_bridge"] = f_from_g(g, parity(pi)) == f
    except ConsistencyError:
        checks["fg_bridge"] = False
    checks["mass"] = sum(f.coeffs) == math.factorial(lam.n - 1)
    if samples:
        checks["type_invariance"] = type_invariance_check(lam, samples, reference=f, guard=guard).ok
    if len(parts) == 1:
        checks["closed_form"] = f == f_cyclic_closed(lam.n)
        checks["stanley_g"] = g == g_cyclic_closed(lam.n)
    return {
        "key": str(lam),
        "version": __version__,
        "f": to_json(f),
        "g": to_json(g),
        "checks": checks,
        "seconds": time.perf_counter() - start,
        "products": math.factorial(lam.n - 1) * (1 + samples),
    }


def _floor_map(hist):
    out = [0] * (len(hist) // 2 + 1)
    for c, v in enumerate(hist):
        if v:
            out[(c - 1) // 2] += v
    return out


def _load_cache(path: Path | None) -> dict[str, dict]:
    if path is None or not path.exists():
        return {}
    entries = {}
    with path.open() as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                entry = json.loads(line)
            except json.JSONDecodeError:
                continue
            if entry.get("version") == __version__ and "key" in entry:
                entries[entry["key"]] = entry
    return entries


def _append_cache(path: Path, entries: Iterable[dict]) -> None:
    with path.open("a") as fh:
        for e in entries:
            e = {k: v for k, v in e.items() if k != "seconds"}
            fh.write(json.dumps(e, sort_keys=True) + "\n")


def scan(n_min: int, n_max: int, reduce: bool = True, workers: int = 1, samples: int = 1,
         cache: str | os.PathLike | None = None, guard: int | None = None) -> list[ScanRecord]:
    """One record per partition of every n in [n_min, n_max], in a fixed order.

    Order: n ascending, partitions reverse-lexicographic.  ``samples`` random
    conjugates per enumerated partition feed the type-invariance check.
    """
    if n_min < 1 or n_max < n_min:
        raise UsageError(f"need 1 <= min <= max, got {n_min}..{n_max}")
    limit = ENUMERATION_GUARD if guard is None else guard
    lams = [lam for n in range(n_min, n_max + 1) for lam in partitions(n)]
    plan = []
    for lam in lams:
        if reduce:
            red = reduce_partition(lam)
            plan.append((lam, red.core, red.multiplier))
        else:
            plan.append((lam, lam, 1))
    cores = sorted({core for _, core, _ in plan}, key=lambda p: (p.n, [-x for x in p.parts]))
    for core in cores:
        if core.n > limit:
            raise UsageError(f"effective n = {core.n} exceeds the enumeration guard n <= {limit}")

    cache_path = Path(cache) if cache is not None else None
    cached = _load_cache(cache_path)
    todo = [c for c in cores if str(c) not in cached]
    args = [(c.parts, samples, guard) for c in todo]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            fresh = list(pool.map(_evaluate_core, *zip(*args)))
    else:
        fresh = [_evaluate_core(*a) for a in args]
    if cache_path is not None and fresh:
        _append_cache(cache_path, fresh)
    results = dict(cached)
    results.update({e["key"]: e for e in fresh})

    records = []
    for lam, core, mult in plan:
        entry = results[str(core)]
        start = time.perf_counter()
        f = from_json(entry["f"]).scale(mult)
        lc = is_log_concave(f)
        cert = certify_real_rooted(f)
        checks = dict(entry["checks"])
        checks["newton"] = (not cert.real_rooted) or lc.log_concave
        checks["mass"] = checks.get("mass", True) and sum(f.coeffs) == math.factorial(lam.n - 1)
        if known_type(lam):
            checks["known_type"] = lc.log_concave
        records.append(ScanRecord(
            partition=lam,
            f_poly=f,
            reduced_from=core if core != lam else None,
            log_concave=lc.log_concave,
            contiguous_support=lc.contiguous,
            real_rooted=cert.real_rooted,
            cross_checks=checks,
            elapsed=entry.get("seconds", 0.0) + time.perf_counter() - start,
            products=entry["products"],
        ))
    return records


def scan_status(records: Iterable[ScanRecord]) -> int:
    """Exit code: 3 if any cross-check failed, else 1 on any counterexample, else 0."""
    records = list(records)
    if any(not r.checks_ok for r in records):
        return EXIT_CONSISTENCY
    if any(not r.conjecture_ok for r in records):
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


def write_jsonl(records: Iterable[ScanRecord], fh, timing: bool = True) -> None:
    for r in records:
        fh.write(json.dumps(r.to_json(timing), sort_keys=True) + "\n")


def format_table(records: Iterable[ScanRecord], timing: bool = True) -> str:
    rows = [("n", "partition", "F", "lc", "contig", "rr", "checks", "ms")]
    for r in records:
        failed = [k for k, v in r.cross_checks.items() if not v]
        rows.append((
            str(r.n),
            r.partition.exponent_form(),
            to_text(r.f_poly),
            "yes" if r.log_concave else "NO",
            "yes" if r.contiguous_support else "no",
            "yes" if r.real_rooted else "NO",
            "ok" if not failed else "FAIL " + ",".join(failed),
            str(int(round(r.elapsed * 1000))) if timing else "-",
        ))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


# identity verification

@dataclass
class IdentityResult:
    name: str
    ok: bool
    checked: int
    counterexample: str | None = None
    expected_fail: bool = False

    @property
    def as_expected(self) -> bool:
        return self.ok != self.expected_fail

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "expected_fail": self.expected_fail,
            "as_expected": self.as_expected,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


@dataclass
class VerifyReport:
    n_max: int
    results: list[IdentityResult]

    @property
    def ok(self) -> bool:
        return all(r.as_expected for r in self.results)

    def to_json(self) -> dict:
        return {"n_max": self.n_max, "ok": self.ok, "identities": [r.to_json() for r in self.results]}

    def format(self) -> str:
        lines = []
        for r in self.results:
            if r.expected_fail:
                status = "EXPECTED-FAIL" if not r.ok else "UNEXPECTED-PASS"
            else:
                status = "PASS" if r.ok else "FAIL"
            line = f"{status:<16} {r.name} ({r.checked} cases)"
            if r.counterexample:
                line += f": {r.counterexample}"
            lines.append(line)
        return "\n".join(lines)


class _Tally:
    def __init__(self, name, expected_fail=False):
        self.result = IdentityResult(name, True, 0, expected_fail=expected_fail)

    def check(self, cond: bool, describe) -> None:
        self.result.checked += 1
        if not cond and self.result.ok:
            self.result.ok = False
            self.result.counterexample = describe() if callable(describe) else describe


VERIFY_MAX_N = 9


def verify_identities(n_max: int, seed: int = 0, random_perms: int = 20, rec_max: int = 30,
                      az_max: int = 20) -> VerifyReport:
    """Run every exact identity up to n_max and collect the first counterexample of each.

    Also records the three-term recurrence with the unshifted index, which is
    expected to fail at n = 3.
    """
    if not 1 <= n_max <= VERIFY_MAX_N:
        raise UsageError(f"verify needs 1 <= max <= {VERIFY_MAX_N}")
    rng = random.Random(seed)
    results = []

    # parity theorem and F/G bridge on random pi
    par = _Tally("parity_theorem")
    bridge = _Tally("fg_bridge")
    mass = _Tally("mass_conservation")
    for n in range(1, n_max + 1):
        for _ in range(random_perms):
            pi = random_permutation(n, rng)
            hist = cycle_histogram(pi)
            par.check(parity_theorem_holds(pi, hist), lambda: f"pi={pi}")
            f = IntPolynomial(_floor_map(hist))
            try:
                ok = f_from_g(IntPolynomial(hist), parity(pi)) == f
            except ConsistencyError:
                ok = False
            bridge.check(ok, lambda: f"pi={pi}")
            mass.check(sum(f.coeffs) == math.factorial(n - 1), lambda: f"pi={pi}")
    results += [par.result, bridge.result, mass.result]

    # fixed-point insertion: F_{mu 1} = m F_mu, both enumerated
    fp = _Tally("fixed_point")
    for m in range(1, n_max):
        for mu in partitions(m):
            lhs = f_of_partition(Partition(mu.parts + (1,)), reduce=False)
            rhs = f_of_partition(mu, reduce=False).scale(m)
            fp.check(lhs == rhs, lambda: f"mu={mu}: {to_text(lhs)} vs {to_text(rhs)}")
    results.append(fp.result)

    red = _Tally("unit_reduction")
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            if 1 in lam.parts:
                a = f_of_partition(lam, reduce=True)
                b = f_of_partition(lam, reduce=False)
                red.check(a == b, lambda: f"lambda={lam}: {to_text(a)} vs {to_text(b)}")
    results.append(red.result)

    inv = _Tally("type_invariance")
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            rep = type_invariance_check(lam, samples=2, seed=f"{seed}:{lam}")
            inv.check(rep.ok, lambda: f"lambda={lam}: {rep.mismatches[0][0]}")
    results.append(inv.result)

    closed_f = _Tally("closed_form_F")
    stanley = _Tally("stanley_G")
    for n in range(1, n_max + 1):
        f, g = io_polynomials(Permutation.rho(n))
        cf, cg = f_cyclic_closed(n), g_cyclic_closed(n)
        closed_f.check(f == cf, lambda: f"n={n}: {to_text(f)} vs {to_text(cf)}")
        stanley.check(g == cg, lambda: f"n={n}: {to_text(g)} vs {to_text(cg)}")
    results += [closed_f.result, stanley.result]

    hult = _Tally("hultman_vs_brute")
    for n in range(0, n_max):
        for k in range(1, n + 2):
            a, b = hultman(n, k), hultman_brute(n, k)
            hult.check(a == b, lambda: f"H({n},{k}): closed {a} vs brute {b}")
    results.append(hult.result)

    rec = _Tally("rec_F_shifted")
    try:
        seq = f_cyclic_recurrence(rec_max)
        for n in range(1, rec_max + 1):
            a, b = seq[n - 1], f_cyclic_closed(n)
            rec.check(a == b, lambda: f"n={n}: {to_text(a)} vs {to_text(b)}")
    except ConsistencyError as exc:
        rec.check(False, str(exc))
    results.append(rec.result)

    printed = _Tally("rec_F_as_printed", expected_fail=True)
    known = {0: IntPolynomial([1])}
    known.update({n: f_cyclic_closed(n) for n in range(1, rec_max + 1)})
    for n in range(3, rec_max + 1):
        lhs, rhs = rec_f_as_printed_residual(n, known)
        printed.check(lhs == rhs, lambda: f"n={n}: LHS {to_text(lhs)} vs RHS {to_text(rhs)}")
    results.append(printed.result)

    az = az_hultman_recurrence_check(az_max)
    fv = az.first_violation
    results.append(IdentityResult("alexeev_zograf", az.ok, az.checked,
                                  None if fv is None else json.dumps(fv)))

    qn = _Tally("q_n_enumeration")
    for n in range(1, n_max + 1):
        seen = set()
        for zeta in enumerate_n_cycles(n):
            seen.add(zeta)
            qn.check(len(zeta.cycles()) == 1, lambda: f"n={n}: {zeta}")
        qn.check(len(seen) == math.factorial(n - 1), f"n={n}: {len(seen)} distinct")
    results.append(qn.result)

    return VerifyReport(n_max, results)
