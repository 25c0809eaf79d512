"""Polynomial chain engine: seed families, chain reports, proof gadgets.

A chain iterates f -> x*f + eps.  The two seed families here have chain
length exactly k by construction: the (k+1)-th term factors while every
other term up the window stays irreducible.  The auxiliary quadrinomial and
quadratic gadget mirror the structure arguments used to prove that, so they
can be machine-checked on a grid.
"""

from __future__ import annotations

from dataclasses import dataclass

from .certify import IrreducibilityVerdict, decide_irreducible
from .polyz import Polynomial
from .primes import is_probable_prime
from .roots import aberth_roots


@dataclass(frozen=True)
class FamilyParams:
    """kind 1 steps with eps=+1 (needs m >= 2, k >= 1); kind 2 with eps=-1
    (needs m >= 1, k >= 1, m*m > k+1)."""

    kind: int
    m: int
    k: int

    def __post_init__(self):
        if self.kind not in (1, 2):
            raise ValueError("kind must be 1 or 2")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.kind == 1 and self.m < 2:
            raise ValueError("kind 1 requires m >= 2")
        if self.kind == 2 and (self.m < 1 or self.m * self.m <= self.k + 1):
            raise ValueError("kind 2 requires m*m > k+1")

    @property
    def eps(self) -> int:
        return 1 if self.kind == 1 else -1


@dataclass(frozen=True)
class ChainEntry:
    index: int
    poly: Polynomial
    verdict: IrreducibilityVerdict


@dataclass(frozen=True)
class ChainReport:
    seed: Polynomial
    eps: int
    entries: tuple[ChainEntry, ...]

    def reducible_indices(self) -> list[int]:
        return [e.index for e in self.entries if e.verdict.is_reducible]


@dataclass(frozen=True)
class ChainLength:
    """Exact length, or a lower bound when the scan cap was reached."""

    value: int
    exact: bool

    def __str__(self) -> str:
        return str(self.value) if self.exact else f">= {self.value}"


def family_seed(params: FamilyParams) -> Polynomial:
    m, k = params.m, params.k
    if params.kind == 1:
        return Polynomial([1] + [m] * (k + 2) + [m * m])
    return Polynomial([k - m * m, m * m])


def closed_form_term(params: FamilyParams, n: int) -> Polynomial:
    """Direct formula for the n-th term; equals n-1 chain steps from the seed."""
    if n < 1:
        raise ValueError("term index starts at 1")
    m, k = params.m, params.k
    if params.kind == 1:
        return Polynomial([1] * n + [m] * (k + 2) + [m * m])
    return Polynomial([-1] * (n - 1) + [k - m * m, m * m])


def _check_seed(seed: Polynomial, eps: int) -> None:
    if eps not in (-1, 1):
        raise ValueError("eps must be -1 or +1")
    if seed.is_zero or seed.leading <= 0:
        # mirror trick: run (-seed, -eps) and negate, identical verdicts
        raise ValueError("seed must have a positive leading coefficient")


def chain_report(seed: Polynomial, eps: int, through: int) -> ChainReport:
    """Verdicts for terms 1..through of the chain started at seed."""
    _check_seed(seed, eps)
    if through < 1:
        raise ValueError("need at least one term")
    entries = []
    f = seed
    for i in range(1, through + 1):
        if i > 1:
            f = f.chain_step(eps)
        entries.append(ChainEntry(i, f, decide_irreducible(f)))
    return ChainReport(seed, eps, tuple(entries))


def chain_length(seed: Polynomial, eps: int, cap: int) -> ChainLength:
    """Least k with term k+1 reducible, scanning successor terms up to index cap."""
    _check_seed(seed, eps)
    if cap < 2:
        raise ValueError("cap must be at least 2")
    f = seed
    for i in range(2, cap + 1):
        f = f.chain_step(eps)
        if decide_irreducible(f).is_reducible:
            return ChainLength(i - 1, True)
    return ChainLength(cap, False)


def product_formula_kind1(m: int, k: int) -> tuple[Polynomial, Polynomial]:
    """The two factors of the kind-1 term k+1: (m*x^{k+1}+x^k+...+1, m*x^{k+2}+1)."""
    if m < 2 or k < 1:
        raise ValueError("requires m >= 2 and k >= 1")
    return Polynomial([1] * (k + 1) + [m]), Polynomial([1] + [0] * (k + 1) + [m])


def auxiliary_F(params: FamilyParams, n: int) -> Polynomial:
    """The quadrinomial (+/-)(x-1) * reciprocal(term n), in closed form.

    Kind 1: x^{n+k+3} + (m-1)x^{k+3} + (m^2-m)x - m^2.
    Kind 2: x^{n+1} + (m^2-k-1)x^2 - (2m^2-k)x + m^2 (terms merge at n=1).
    """
    if n < 1:
        raise ValueError("term index starts at 1")
    m, k = params.m, params.k
    if params.kind == 1:
        pairs = [(n + k + 3, 1), (k + 3, m - 1), (1, m * m - m), (0, -m * m)]
    else:
        pairs = [(n + 1, 1), (2, m * m - k - 1), (1, -(2 * m * m - k)), (0, m * m)]
    return Polynomial.from_terms(pairs)


def proof_gadget_g(m: int, k: int) -> Polynomial:
    """Palindromic quadratic whose roots bound the kind-2 positive root pair."""
    if m * m <= k + 1:
        raise ValueError("requires m*m > k+1")
    outer = m**4 - m * m * k - m * m
    middle = 2 * m**4 - 2 * m * m * k + k * k + k
    return Polynomial([outer, -middle, outer])


class RootModulus(float):
    """A minimum root modulus; carries the residual the root finder achieved."""

    residual: float
    roots: tuple[complex, ...]


def min_root_modulus(f: Polynomial, tol: float = 1e-12) -> RootModulus:
    """Smallest |z| over the complex roots of f, found by simultaneous iteration."""
    records = aberth_roots(f, tol)
    out = RootModulus(min(abs(r.value) for r in records))
    out.residual = max(r.residual for r in records)
    out.roots = tuple(r.value for r in records)
    return out


def infinite_seed(eps: int, param: int) -> Polynomial:
    """Seeds conjectured to start never-terminating chains: p*x+1 (eps=+1, p
    prime) and x-c (eps=-1, c >= 1)."""
    if eps == 1:
        if not is_probable_prime(param):
            raise ValueError("eps=+1 seeds need a prime parameter")
        return Polynomial([1, param])
    if eps == -1:
        if param < 1:
            raise ValueError("eps=-1 seeds need a positive integer parameter")
        return Polynomial([-param, 1])
    raise ValueError("eps must be -1 or +1")
