"""Irreducibility certificates and the staged decision pipeline.

decide_irreducible tries cheap sufficient conditions in a fixed order and
falls back to complete factorization only when everything else is silent.
Each verdict records which stage decided it, with enough data to replay the
check independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import factorize, gfp
from .polyz import Polynomial
from .primes import factor_int, primes

# budgets for the fast-path stages
MOD_P_BUDGET = 10
DEGREE_SET_PRIMES = 5
_DEGREE_SET_CANDIDATE_CAP = 25

DEGREE_ONE = "degree_one"
RATIONAL_ROOT_ABSENCE = "rational_root_absence"
EISENSTEIN = "eisenstein"
BRAUER = "brauer"
MOD_P_IRREDUCIBLE = "mod_p_irreducible"
DEGREE_SET_SINGLETON = "degree_set_singleton"
FULL_FACTORIZATION = "full_factorization"


@dataclass(frozen=True)
class Certificate:
    kind: str
    prime: int | None = None
    primes: tuple[int, ...] = ()


@dataclass(frozen=True)
class IrreducibilityVerdict:
    status: str  # "irreducible" | "reducible" | "constant"
    certificate: Certificate | None = None
    witness: factorize.Factorization | None = None

    @property
    def is_irreducible(self) -> bool:
        return self.status == "irreducible"

    @property
    def is_reducible(self) -> bool:
        return self.status == "reducible"


def eisenstein_check(f: Polynomial) -> int | None:
    """A prime satisfying Eisenstein's criterion for primitive f, or None.

    Candidates are the prime divisors of the gcd of the non-leading
    coefficients; the square-free-constant condition is enforced in full.
    """
    if f.is_zero or f.degree < 1 or f.constant_term == 0:
        return None
    g = 0
    for c in f.coeffs[:-1]:
        g = math.gcd(g, c)
    if g <= 1:
        return None
    for p in factor_int(g):
        if f.leading % p and f.constant_term % (p * p):
            return p
    return None


def brauer_check(f: Polynomial) -> bool:
    """x^n - a_{n-1}x^{n-1} - ... - a_0 with a_{n-1} >= ... >= a_0 > 0, exactly.

    That shape is sufficient for irreducibility; False makes no claim.
    """
    if f.is_zero or f.degree < 1 or f.leading != 1:
        return False
    drops = [-c for c in f.coeffs[:-1]]
    if drops[0] <= 0:
        return False
    return all(later >= earlier > 0 for earlier, later in zip(drops, drops[1:]))


def mod_p_certificate(f: Polynomial, prime_budget: int = MOD_P_BUDGET) -> int | None:
    """First prime among the first `prime_budget` not dividing the leading
    coefficient for which f stays irreducible mod p."""
    if f.is_zero or f.degree < 1:
        return None
    budget = prime_budget
    for p in primes(2):
        if budget == 0:
            return None
        if f.leading % p == 0:
            continue
        budget -= 1
        if gfp.is_irreducible_mod_p(f, p):
            return p
    raise AssertionError("unreachable")


def degree_set_prune(f: Polynomial, prime_list) -> set[int]:
    """Intersection over primes of the subset sums of modular factor degrees.

    The result contains every degree a rational factor of f could have;
    {0, deg f} alone certifies irreducibility.  Every prime must be suitable:
    squarefree image of full degree.
    """
    multisets = []
    for p in prime_list:
        ms = gfp.modular_degree_multiset(f, p)
        if ms is None:
            raise ValueError(f"prime {p} is unsuitable (image not squarefree of full degree)")
        multisets.append(ms)
    return factorize.feasible_degree_set(multisets)


def _usable_degree_set_primes(f: Polynomial) -> list[int]:
    usable: list[int] = []
    for i, p in enumerate(primes(2)):
        if i >= _DEGREE_SET_CANDIDATE_CAP or len(usable) == DEGREE_SET_PRIMES:
            break
        if gfp.modular_degree_multiset(f, p) is not None:
            usable.append(p)
    return usable


def decide_irreducible(f: Polynomial) -> IrreducibilityVerdict:
    """Staged verdict: degree checks, rational roots (decisive through degree
    3), Eisenstein, the monic-negative-shape test, mod-p irreducibility,
    modular degree-set pruning, then full factorization."""
    if f.is_zero:
        raise ValueError("the zero polynomial has no irreducibility verdict")
    if f.degree == 0:
        return IrreducibilityVerdict("constant")
    if f.degree == 1:
        return IrreducibilityVerdict("irreducible", Certificate(DEGREE_ONE))
    if factorize.rational_roots(f):
        return IrreducibilityVerdict("reducible", witness=factorize.factor_over_rationals(f))
    if f.degree <= 3:
        return IrreducibilityVerdict("irreducible", Certificate(RATIONAL_ROOT_ABSENCE))
    prim = f.primitive()
    p = eisenstein_check(prim)
    if p is not None:
        return IrreducibilityVerdict("irreducible", Certificate(EISENSTEIN, prime=p))
    if brauer_check(prim):
        return IrreducibilityVerdict("irreducible", Certificate(BRAUER))
    p = mod_p_certificate(prim)
    if p is not None:
        return IrreducibilityVerdict("irreducible", Certificate(MOD_P_IRREDUCIBLE, prime=p))
    used = _usable_degree_set_primes(prim)
    if used and not degree_set_prune(prim, used) - {0, prim.degree}:
        return IrreducibilityVerdict(
            "irreducible", Certificate(DEGREE_SET_SINGLETON, primes=tuple(used))
        )
    fac = factorize.factor_over_rationals(f)
    if fac.is_irreducible:
        return IrreducibilityVerdict("irreducible", Certificate(FULL_FACTORIZATION))
    return IrreducibilityVerdict("reducible", witness=fac)


def recheck(f: Polynomial, verdict: IrreducibilityVerdict) -> bool:
    """Replay a verdict's certificate or witness from its recorded data."""
    if verdict.status == "constant":
        return f.degree == 0
    if verdict.status == "reducible":
        w = verdict.witness
        return w is not None and not w.is_irreducible and w.expand() == f
    cert = verdict.certificate
    if cert is None:
        return False
    prim = f.primitive()
    if cert.kind == DEGREE_ONE:
        return f.degree == 1
    if cert.kind == RATIONAL_ROOT_ABSENCE:
        return f.degree <= 3 and not factorize.rational_roots(f)
    if cert.kind == EISENSTEIN:
        p = cert.prime
        return (
            p is not None
            and prim.leading % p != 0
            and all(c % p == 0 for c in prim.coeffs[:-1])
            and prim.constant_term % (p * p) != 0
        )
    if cert.kind == BRAUER:
        return brauer_check(prim)
    if cert.kind == MOD_P_IRREDUCIBLE:
        return cert.prime is not None and gfp.is_irreducible_mod_p(prim, cert.prime)
    if cert.kind == DEGREE_SET_SINGLETON:
        return bool(cert.primes) and not degree_set_prune(prim, cert.primes) - {0, prim.degree}
    if cert.kind == FULL_FACTORIZATION:
        return factorize.factor_over_rationals(f).is_irreducible
    return False
