"""Scanner for the reducibility pattern of x^j + x^{j-1} + ... + x + m.

For each k there is a distinguished odd exponent t = 2*ceil((k+1)/2) + 1 and
constant m = 2*(2^t + 1)/3.  The conjectured pattern is that the polynomial
is reducible exactly at j = t, where x + 2 divides it (an alternating
geometric sum makes -2 a root).  The scanner verifies every j in a window
and flags deviations as findings rather than errors: the "only if" half is
open, and evidence either way is the point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certify import IrreducibilityVerdict, decide_irreducible
from .polyz import Polynomial

DEFAULT_EXTRA = 8


@dataclass(frozen=True)
class ConjectureParams:
    k: int
    t: int
    m: int


def conjecture_params(k: int) -> ConjectureParams:
    if k < 1:
        raise ValueError("k must be at least 1")
    t = 2 * ((k + 2) // 2) + 1
    power = 2**t + 1
    if t % 2 == 0 or power % 3:
        raise AssertionError("t must be odd with 3 | 2^t + 1")
    return ConjectureParams(k, t, 2 * (power // 3))


def conjecture_poly(j: int, m: int) -> Polynomial:
    """x^j + x^{j-1} + ... + x + m."""
    if j < 1:
        raise ValueError("j must be at least 1")
    return Polynomial([m] + [1] * j)


@dataclass(frozen=True)
class ScanEntry:
    j: int
    poly: Polynomial
    verdict: IrreducibilityVerdict
    expected_reducible: bool

    @property
    def deviates(self) -> bool:
        return self.verdict.is_reducible != self.expected_reducible


@dataclass(frozen=True)
class ConjectureScan:
    params: ConjectureParams
    entries: tuple[ScanEntry, ...]

    @property
    def deviations(self) -> tuple[ScanEntry, ...]:
        return tuple(e for e in self.entries if e.deviates)

    @property
    def matches_conjecture(self) -> bool:
        return not self.deviations


def conjecture_scan(k: int, extra: int = DEFAULT_EXTRA) -> ConjectureScan:
    """Verdicts for j = t-k .. t+extra; reducible entries carry witnesses.

    The window's lower end t-k comes with the conjecture statement; verdicts
    below it are outside what the pattern claims.
    """
    if extra < 0:
        raise ValueError("extra must be nonnegative")
    params = conjecture_params(k)
    entries = []
    for j in range(params.t - k, params.t + extra + 1):
        f = conjecture_poly(j, params.m)
        entries.append(ScanEntry(j, f, decide_irreducible(f), j == params.t))
    return ConjectureScan(params, tuple(entries))
