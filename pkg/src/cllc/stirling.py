"""Stirling numbers of the first kind, Hultman numbers, and closed forms for F_n.

Everything here is exact integer arithmetic.  Any division that a formula
claims is exact is checked and raises :class:`ConsistencyError` otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import ConsistencyError, UsageError
from .perm import Permutation, batch_cycle_counts, n_cycle_array
from .polynomial import IntPolynomial

HULTMAN_BRUTE_MAX_N = 11


class StirlingTable:
    """Row-by-row memo of the unsigned Stirling numbers of the first kind.

    Grows on demand; rows already built are never modified, so concurrent
    readers only ever see complete rows.
    """

    def __init__(self):
        self._rows: list[tuple[int, ...]] = [(1,)]

    def row(self, n: int) -> tuple[int, ...]:
        if n < 0:
            raise UsageError("n must be >= 0")
        while len(self._rows) <= n:
            m = len(self._rows)
            prev = self._rows[-1]
            # s(m, k) = s(m-1, k-1) + (m-1) s(m-1, k)
            new = [0] * (m + 1)
            for k in range(1, m + 1):
                left = prev[k - 1]
                right = prev[k] if k < m else 0
                new[k] = left + (m - 1) * right
            self._rows.append(tuple(new))
        return self._rows[n]

    def __call__(self, n: int, k: int) -> int:
        if k < 0 or k > n:
            raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")
        return self.row(n)[k]


STIRLING = StirlingTable()


def stirling_first(n: int, k: int) -> int:
    """Number of permutations of n letters with exactly k cycles."""
    return STIRLING(n, k)


def stirling_gf(n: int) -> IntPolynomial:
    """S_n(z) = z(z+1)...(z+n-1)."""
    if n < 1:
        raise UsageError("n must be >= 1")
    return IntPolynomial(STIRLING.row(n))


@dataclass(frozen=True)
class HultmanValue:
    n: int
    k: int
    value: int


def hultman(n: int, k: int) -> int:
    """Number of (n+1)-cycles zeta with c(rho_{n+1} zeta) = k.

    Closed form: Stirling(n+2, k) / C(n+2, 2) when n - k is odd, else 0.
    """
    if n < 0:
        raise UsageError("n must be >= 0")
    if not 1 <= k <= n + 1:
        raise UsageError(f"need 1 <= k <= n+1, got n={n}, k={k}")
    if (n - k) % 2 == 0:
        return 0
    q, r = divmod(stirling_first(n + 2, k), math.comb(n + 2, 2))
    if r:
        raise ConsistencyError(f"C({n + 2},2) does not divide Stirling({n + 2},{k})")
    return q


def hultman_value(n: int, k: int) -> HultmanValue:
    return HultmanValue(n, k, hultman(n, k))


def h_genus(g: int, n: int) -> int:
    """h_g(n) = H(n, n+1-2g), zero outside the valid index range."""
    k = n + 1 - 2 * g
    if n < 0 or g < 0 or not 1 <= k <= n + 1:
        return 0
    return hultman(n, k)


@lru_cache(maxsize=None)
def hultman_brute_row(n: int) -> tuple[int, ...]:
    """Histogram over zeta in Q_{n+1} of c(rho_{n+1} zeta); index k holds the count."""
    if n < 0:
        raise UsageError("n must be >= 0")
    if n > HULTMAN_BRUTE_MAX_N:
        raise UsageError(f"brute-force Hultman numbers are limited to n <= {HULTMAN_BRUTE_MAX_N}")
    m = n + 1
    zetas = n_cycle_array(m)
    rho = np.array(Permutation.rho(m).images, dtype=np.int64) - 1
    # left-to-right product rho*zeta: apply rho first, then zeta
    products = np.take_along_axis(zetas, np.broadcast_to(rho, zetas.shape), axis=1)
    counts = np.bincount(batch_cycle_counts(products), minlength=m + 2)
    return tuple(int(c) for c in counts)


def hultman_brute(n: int, k: int) -> int:
    """Count of (n+1)-cycles zeta with exactly k cycles in rho_{n+1} zeta, by enumeration."""
    row = hultman_brute_row(n)
    return row[k] if 0 <= k < len(row) else 0


def f_cyclic_closed(n: int) -> IntPolynomial:
    """F_n from C(n+1,2) F_n(z) = sum over k = n (mod 2) of Stirling(n+1,k) z^floor((k-1)/2)."""
    if n < 1:
        raise UsageError("n must be >= 1")
    acc = [0] * (n // 2 + 1)
    for k in range(n % 2 or 2, n + 2, 2):
        acc[(k - 1) // 2] += stirling_first(n + 1, k)
    return IntPolynomial(acc).exact_div(math.comb(n + 1, 2))


def g_cyclic_closed(n: int) -> IntPolynomial:
    """G_n = sum_i Stirling(n+1, n-2i) z^(n-2i) / C(n+1, 2)."""
    if n < 1:
        raise UsageError("n must be >= 1")
    acc = [0] * (n + 1)
    for i in range((n - 1) // 2 + 1):
        acc[n - 2 * i] = stirling_first(n + 1, n - 2 * i)
    return IntPolynomial(acc).exact_div(math.comb(n + 1, 2))


def _evenness(n: int) -> int:
    return 1 if n % 2 == 0 else 0


def rec_f_step(n: int, f_prev: IntPolynomial, f_prev2: IntPolynomial) -> IntPolynomial:
    """(n+2) F_{n+1} = (2n+1) z^e(n) F_n + (n-1)(n^2 - z) F_{n-1}; returns F_{n+1}."""
    rhs = f_prev.shift(_evenness(n)).scale(2 * n + 1) + (IntPolynomial([n * n, -1]) * f_prev2).scale(n - 1)
    return rhs.exact_div(n + 2)


def f_cyclic_recurrence(n_max: int) -> list[IntPolynomial]:
    """[F_1, ..., F_{n_max}] from the index-shifted three-term recurrence, seeds F_1 = F_2 = 1."""
    if n_max < 2:
        raise UsageError("n_max must be >= 2")
    seq = [IntPolynomial([1]), IntPolynomial([1])]
    for n in range(2, n_max):
        seq.append(rec_f_step(n, seq[-1], seq[-2]))
    return seq


def rec_f_as_printed_residual(n: int, f: dict[int, IntPolynomial]) -> tuple[IntPolynomial, IntPolynomial]:
    """Both sides of (n+2) F_n = (2n+1) z^e(n) F_{n-1} + (n-1)(n^2-z) F_{n-2}, unshifted.

    ``f`` maps indices to known F polynomials (index 0 taken as the seed 1).
    """
    lhs = f[n].scale(n + 2)
    rhs = f[n - 1].shift(_evenness(n)).scale(2 * n + 1) + (IntPolynomial([n * n, -1]) * f[n - 2]).scale(n - 1)
    return lhs, rhs


@dataclass
class RecurrenceReport:
    ok: bool
    checked: int = 0
    first_violation: dict | None = None
    details: list = field(default_factory=list)


def az_hultman_recurrence_check(n_max: int) -> RecurrenceReport:
    """Check (n+2)h_g(n) = (2n+1)h_g(n-1) - (n-1)h_g(n-2) + n^2(n-1)h_{g-1}(n-2)."""
    if n_max < 2:
        raise UsageError("n_max must be >= 2")
    report = RecurrenceReport(ok=True)
    for n in range(2, n_max + 1):
        for g in range(0, n // 2 + 2):
            lhs = (n + 2) * h_genus(g, n)
            rhs = ((2 * n + 1) * h_genus(g, n - 1) - (n - 1) * h_genus(g, n - 2)
                   + n * n * (n - 1) * h_genus(g - 1, n - 2))
            report.checked += 1
            if lhs != rhs and report.first_violation is None:
                report.ok = False
                report.first_violation = {"n": n, "g": g, "lhs": lhs, "rhs": rhs}
    return report
