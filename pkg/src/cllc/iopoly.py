"""IO-polynomials F_pi and their floor-free companions G_pi, by enumeration.

For a permutation pi of {1..n}, both polynomials are read off one histogram:
the number of n-cycles zeta with c(zeta pi) = c, for c = 0..n.  G puts that
count at degree c, F at degree floor((c-1)/2).
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ConsistencyError, UsageError
from .perm import (
    Partition,
    Permutation,
    batch_cycle_counts,
    canonical_permutation,
    chunk_prefixes,
    n_cycle_array,
    parity,
    random_of_type,
)
from .polynomial import IntPolynomial

ENUMERATION_GUARD = 12


def _check_guard(n: int, guard: int | None) -> None:
    guard = ENUMERATION_GUARD if guard is None else guard
    if n > guard:
        raise UsageError(f"enumeration over Q_{n} exceeds the guard n <= {guard}")


def _chunk_histogram(images: tuple[int, ...], prefix: tuple[int, ...]) -> list[int]:
    n = len(images)
    pi = np.asarray(images, dtype=np.int64) - 1
    zetas = n_cycle_array(n, prefix=prefix)
    # zeta pi, left to right: zeta first, then pi
    counts = batch_cycle_counts(pi[zetas])
    return [int(c) for c in np.bincount(counts, minlength=n + 1)]


def cycle_histogram(pi: Permutation, workers: int = 1, guard: int | None = None) -> list[int]:
    """hist[c] = #{zeta in Q_n : c(zeta pi) = c}, for c = 0..n.

    Chunks of Q_n are histogrammed independently and summed, so the result
    does not depend on ``workers``.
    """
    _check_guard(pi.n, guard)
    prefixes = chunk_prefixes(pi.n)
    args = [(pi.images, p) for p in prefixes]
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_chunk_histogram, *zip(*args)))
    else:
        parts = [_chunk_histogram(*a) for a in args]
    total = [0] * (pi.n + 1)
    for h in parts:
        for c, v in enumerate(h):
            total[c] += v
    return total


def _f_from_histogram(hist: Sequence[int]) -> IntPolynomial:
    out = [0] * (len(hist) // 2 + 1)
    for c, v in enumerate(hist):
        if v:
            out[(c - 1) // 2] += v
    return IntPolynomial(out)


def io_polynomials(pi: Permutation, workers: int = 1, guard: int | None = None) -> tuple[IntPolynomial, IntPolynomial]:
    """(F_pi, G_pi) from a single pass over Q_n."""
    hist = cycle_histogram(pi, workers, guard)
    return _f_from_histogram(hist), IntPolynomial(hist)


def g_poly(pi: Permutation, workers: int = 1, guard: int | None = None) -> IntPolynomial:
    """G_pi(z) = sum over zeta in Q_n of z^c(zeta pi)."""
    return IntPolynomial(cycle_histogram(pi, workers, guard))


def f_poly(pi: Permutation, workers: int = 1, guard: int | None = None) -> IntPolynomial:
    """F_pi(z) = sum over zeta in Q_n of z^floor((c(zeta pi) - 1)/2)."""
    return _f_from_histogram(cycle_histogram(pi, workers, guard))


def f_from_g(g: IntPolynomial, p: int) -> IntPolynomial:
    """Rewrite G into F given the parity p of pi: degree k goes to (k - p - 1)/2.

    Every k carrying weight must satisfy k = p + 1 (mod 2); a violation means
    the parity theorem failed and raises :class:`ConsistencyError`.
    """
    if p not in (0, 1):
        raise UsageError("parity must be 0 or 1")
    shift = p + 1
    out = [0] * (max(g.degree, 0) // 2 + 1)
    for k, c in enumerate(g.coeffs):
        if not c:
            continue
        if (k - shift) % 2 or k < shift:
            raise ConsistencyError(f"G has weight at degree {k}, incompatible with parity {p}")
        out[(k - shift) // 2] += c
    return IntPolynomial(out)


def parity_theorem_holds(pi: Permutation, hist: Sequence[int] | None = None) -> bool:
    """True when c(zeta pi) + p(pi) is odd for every zeta in Q_n."""
    if hist is None:
        hist = cycle_histogram(pi)
    p = parity(pi)
    return all(v == 0 or (c + p) % 2 == 1 for c, v in enumerate(hist))


def fixed_point_multiplier(n: int, k: int) -> int:
    """(n-1)(n-2)...(n-k)."""
    return math.perm(n - 1, k)


@dataclass(frozen=True)
class Reduction:
    """lam = core . 1^k, so F_lam = multiplier * F_core."""

    partition: Partition
    core: Partition
    units: int
    multiplier: int


def reduce_partition(lam: Partition) -> Reduction:
    core, k = lam.unit_reduction()
    return Reduction(lam, core, k, fixed_point_multiplier(lam.n, k))


def f_of_partition(lam: Partition | Sequence[int], reduce: bool = True, workers: int = 1,
                   guard: int | None = None) -> IntPolynomial:
    """F_lam; with ``reduce`` the unit parts are stripped and replaced by a factorial-type factor."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not reduce:
        return f_poly(canonical_permutation(lam), workers, guard)
    red = reduce_partition(lam)
    limit = ENUMERATION_GUARD if guard is None else guard
    if red.core.n > limit:
        raise UsageError(f"effective n = {red.core.n} for {lam} exceeds the guard n <= {limit}")
    return f_poly(canonical_permutation(red.core), workers, guard).scale(red.multiplier)


@dataclass
class InvarianceReport:
    partition: Partition
    reference: IntPolynomial
    samples: list[Permutation] = field(default_factory=list)
    mismatches: list[tuple[Permutation, IntPolynomial]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def type_invariance_check(lam: Partition, samples: int = 3, seed: int | str | None = None,
                          reference: IntPolynomial | None = None, guard: int | None = None) -> InvarianceReport:
    """Compare F of random conjugates of the canonical permutation of type lam.

    The seed defaults to the partition string, so repeated runs sample the
    same permutations.
    """
    rng = random.Random(str(lam) if seed is None else seed)
    if reference is None:
        reference = f_poly(canonical_permutation(lam), guard=guard)
    report = InvarianceReport(lam, reference)
    for _ in range(samples):
        pi = random_of_type(lam, rng)
        report.samples.append(pi)
        f = f_poly(pi, guard=guard)
        if f != reference:
            report.mismatches.append((pi, f))
    return report
