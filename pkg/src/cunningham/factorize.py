"""Factorization over the rationals and quadrinomial structure checks.

The factoring pipeline is classical Zassenhaus: content/sign split, Yun
squarefree decomposition, factorization modulo a well-chosen prime,
quadratic Hensel lifting past twice the Mignotte bound, then subset
recombination confirmed by exact trial division over the integers.
"""

from __future__ import annotations

import functools
import itertools
import math
import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import gfp
from .polyz import X, Polynomial, divmod_exact_lc, exact_div
from .polyz import gcd as poly_gcd
from .primes import divisors, primes


@dataclass(frozen=True)
class Factorization:
    """sign * content * prod(factor**multiplicity), factors primitive irreducible.

    Factors are sorted by (degree, coefficients) and have positive leading
    coefficients; content is a positive integer.  Constants factor into an
    empty multiset.
    """

    sign: int
    content: int
    factors: tuple[tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.sign * self.content)
        for g, e in self.factors:
            out = out * g**e
        return out

    @property
    def is_irreducible(self) -> bool:
        """Irreducible over the rationals: exactly one factor, multiplicity 1."""
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def factor_count(self) -> int:
        return sum(e for _, e in self.factors)


@dataclass(frozen=True)
class Quadrinomial:
    """a*x^m + b*x^n + c*x^p + d with four nonzero terms and m > n > p > 0."""

    a: int
    b: int
    c: int
    d: int
    m: int
    n: int
    p: int

    def __post_init__(self):
        if 0 in (self.a, self.b, self.c, self.d):
            raise ValueError("quadrinomial coefficients must be nonzero")
        if not self.m > self.n > self.p > 0:
            raise ValueError("quadrinomial exponents must satisfy m > n > p > 0")

    def to_polynomial(self) -> Polynomial:
        return Polynomial.from_terms({self.m: self.a, self.n: self.b, self.p: self.c, 0: self.d})

    @staticmethod
    def from_polynomial(f: Polynomial) -> Quadrinomial:
        terms = [(i, c) for i, c in enumerate(f.coeffs) if c]
        if len(terms) != 4 or terms[0][0] != 0:
            raise ValueError("not a quadrinomial with nonzero constant term")
        (_, d), (p, c), (n, b), (m, a) = terms
        return Quadrinomial(a, b, c, d, m, n, p)


def rational_roots(f: Polynomial) -> set[Fraction]:
    """All rational roots, via divisor pairs of the constant and leading terms."""
    if f.is_zero:
        raise ValueError("the zero polynomial has every root")
    shift = 0
    while f.coeffs[shift] == 0:
        shift += 1
    roots: set[Fraction] = set()
    if shift:
        roots.add(Fraction(0))
    coeffs = f.coeffs[shift:]
    if len(coeffs) == 1:
        return roots
    g = Polynomial(coeffs)
    for num in divisors(coeffs[0]):
        for den in divisors(coeffs[-1]):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand not in roots and g(cand) == 0:
                    roots.add(cand)
    return roots


def squarefree_decompose(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun decomposition of primitive f: [(g, m)] with f = prod g**m.

    Parts are squarefree, pairwise coprime, listed with strictly increasing
    multiplicities.
    """
    if f.is_zero:
        raise ValueError("cannot decompose the zero polynomial")
    if f.degree == 0:
        return []
    out: list[tuple[Polynomial, int]] = []
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return [(f, 1)]
    b = _must_divide(f, g)
    c = _must_divide(f.derivative(), g)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = _must_divide(b, a)
        c = _must_divide(d, a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, i))
        i += 1
    return out


def _must_divide(f: Polynomial, g: Polynomial) -> Polynomial:
    q = exact_div(f, g)
    if q is None:
        raise ArithmeticError("expected exact division")
    return q


def mignotte_bound(f: Polynomial) -> int:
    """2**deg(f) * ceil(euclidean norm): bounds any integer factor's coefficients."""
    if f.is_zero:
        raise ValueError("no bound for the zero polynomial")
    s = sum(c * c for c in f.coeffs)
    r = math.isqrt(s)
    if r * r < s:
        r += 1
    return (1 << f.degree) * r


def _trunc_sym(f: Polynomial, m: int) -> Polynomial:
    """Coefficients reduced into the symmetric range (-m/2, m/2]."""
    half = m // 2
    return Polynomial((c % m) - m if c % m > half else c % m for c in f.coeffs)


def _trunc_nonneg(f: Polynomial, m: int) -> Polynomial:
    return Polynomial(c % m for c in f.coeffs)


def _sym_lift(a: gfp.Gf, p: int) -> Polynomial:
    return Polynomial(c - p if c > p // 2 else c for c in a)


def _hensel_step(
    m: int, f: Polynomial, g: Polynomial, h: Polynomial, s: Polynomial, t: Polynomial
) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """One quadratic lift: f = g*h and s*g + t*h = 1 pass from mod m to mod m**2.

    Requires h monic; g carries f's leading coefficient.
    """
    big = m * m
    e = _trunc_sym(f - g * h, big)
    q, r = divmod_exact_lc(s * e, h)
    q, r = _trunc_sym(q, big), _trunc_sym(r, big)
    lifted_g = _trunc_sym(g + t * e + q * g, big)
    lifted_h = _trunc_sym(h + r, big)
    b = _trunc_sym(s * lifted_g + t * lifted_h - 1, big)
    c, d = divmod_exact_lc(s * b, lifted_h)
    c, d = _trunc_sym(c, big), _trunc_sym(d, big)
    lifted_s = _trunc_sym(s - d, big)
    lifted_t = _trunc_sym(t - t * b - c * lifted_g, big)
    return lifted_g, lifted_h, lifted_s, lifted_t


def hensel_lift(
    f: Polynomial, modular_factors: Sequence[Polynomial], p: int, target_exponent: int
) -> list[Polynomial]:
    """Lift a coprime monic factorization of f mod p to mod p**target_exponent.

    Returns monic factors congruent to the inputs mod p whose product, times
    f's leading coefficient, reconstructs f mod p**target_exponent (so for
    monic f the product alone does).  Output coefficients sit in
    [0, p**target_exponent).
    """
    if target_exponent < 1:
        raise ValueError("target exponent must be positive")
    if f.is_zero or f.leading % p == 0:
        raise ValueError("p must not divide the leading coefficient")
    big = p**target_exponent
    steps = (target_exponent - 1).bit_length()

    def lift(f: Polynomial, facts: Sequence[Polynomial]) -> list[Polynomial]:
        if len(facts) == 1:
            return [_trunc_nonneg(f * pow(f.leading, -1, big), big)]
        k = len(facts) // 2
        g0: gfp.Gf = [f.leading % p]
        for q in facts[:k]:
            g0 = gfp.gf_mul(g0, gfp.from_int_poly(q, p), p)
        h0: gfp.Gf = [1]
        for q in facts[k:]:
            h0 = gfp.gf_mul(h0, gfp.from_int_poly(q, p), p)
        s0, _, unit = gfp.gf_gcdex(g0, h0, p)
        if unit != [1]:
            raise ValueError("modular factors are not pairwise coprime mod p")
        # renormalize so deg s < deg h and deg t < deg g, as the lift assumes
        s0 = gfp.gf_rem(s0, h0, p)
        t0 = gfp.gf_div(gfp.gf_sub([1], gfp.gf_mul(s0, g0, p), p), h0, p)
        g, h = _sym_lift(g0, p), _sym_lift(h0, p)
        s, t = _sym_lift(s0, p), _sym_lift(t0, p)
        m = p
        for _ in range(steps):
            g, h, s, t = _hensel_step(m, f, g, h, s, t)
            m = m * m
        return lift(g, facts[:k]) + lift(h, facts[k:])

    return lift(f, list(modular_factors))


def subset_degree_mask(degrees: Iterable[int]) -> int:
    """Bitmask of all subset sums of a degree multiset (bit d set iff reachable)."""
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask


def feasible_degree_set(multisets: Iterable[Iterable[int]]) -> set[int]:
    """Degrees not ruled out by any modular degree multiset (0 and n always stay)."""
    masks = [subset_degree_mask(ms) for ms in multisets]
    if not masks:
        raise ValueError("need at least one degree multiset")
    combined = functools.reduce(operator.and_, masks)
    return {i for i in range(combined.bit_length()) if combined >> i & 1}


def _select_prime(f: Polynomial) -> tuple[int, list[Polynomial], list[list[int]]]:
    """First-8-usable-primes rule: p >= 3, p coprime to lc, squarefree image;
    keep the one with the fewest modular factors."""
    tried: list[tuple[int, int, list[Polynomial]]] = []
    multisets: list[list[int]] = []
    for p in primes(3):
        if f.leading % p == 0:
            continue
        a = gfp.from_int_poly(f, p)
        if len(gfp.gf_gcd(a, gfp.gf_diff(a, p), p)) != 1:
            continue
        fac = [g for g, _ in gfp.factor_mod_p(f, p)]
        tried.append((len(fac), p, fac))
        multisets.append(sorted(g.degree for g in fac))
        if len(tried) == 8:
            break
    count, p, fac = min(tried, key=lambda t: (t[0], t[1]))
    return p, fac, multisets


def _recombine(f: Polynomial, lifted: list[Polynomial], big: int, feasible: set[int]) -> list[Polynomial]:
    """Zassenhaus subset search over lifted factors, smallest subsets first.

    Candidates are lc(f) * prod(subset) in symmetric residues, made primitive,
    then confirmed by exact division; f must be primitive squarefree.
    """
    out: list[Polynomial] = []
    pool = list(lifted)
    size = 1
    while 2 * size <= len(pool):
        for combo in itertools.combinations(range(len(pool)), size):
            if sum(pool[i].degree for i in combo) not in feasible:
                continue
            cand = Polynomial.constant(f.leading)
            for i in combo:
                cand = _trunc_sym(cand * pool[i], big)
            cand = cand.primitive()
            quot = exact_div(f, cand)
            if quot is not None:
                out.append(cand)
                f = quot
                chosen = set(combo)
                pool = [g for i, g in enumerate(pool) if i not in chosen]
                break
        else:
            size += 1
    out.append(f)
    return out


def _factor_squarefree(f: Polynomial) -> list[Polynomial]:
    """Irreducible factors of primitive squarefree f with positive leading coeff."""
    out: list[Polynomial] = []
    if f.constant_term == 0:
        out.append(X)
        f = Polynomial(f.coeffs[1:])
    if f.degree == 0:
        return out
    if f.degree == 1:
        return out + [f]
    p, modular, multisets = _select_prime(f)
    if len(modular) == 1:
        return out + [f]
    feasible = feasible_degree_set(multisets)
    if not feasible - {0, f.degree}:
        return out + [f]
    bound = 2 * mignotte_bound(f) * abs(f.leading)
    exponent = 1
    while p**exponent <= bound:
        exponent += 1
    lifted = hensel_lift(f, modular, p, exponent)
    return out + _recombine(f, lifted, p**exponent, feasible)


def factor_over_rationals(f: Polynomial) -> Factorization:
    """Complete factorization into primitive irreducibles over the rationals."""
    if f.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    content, sign, prim = f.content_and_primitive()
    factors: list[tuple[Polynomial, int]] = []
    if prim.degree > 0:
        for part, mult in squarefree_decompose(prim):
            factors += [(g, mult) for g in _factor_squarefree(part)]
    factors.sort(key=lambda fe: (fe[0].degree, fe[0].coeffs))
    return Factorization(sign, content, tuple(factors))


def split_reciprocal_parts(f: Polynomial) -> tuple[Polynomial, Polynomial]:
    """(reciprocal part, nonreciprocal part) of f, by classifying its factors.

    A factor counts as reciprocal when it equals plus or minus its own
    reciprocal.  Residual sign and content ride on the reciprocal part; both
    outputs otherwise have positive leading coefficients.
    """
    if f.is_zero or f.constant_term == 0:
        raise ValueError("defined only for f with nonzero constant term")
    fac = factor_over_rationals(f)
    rec = Polynomial.constant(fac.sign * fac.content)
    nonrec = Polynomial.one()
    for g, e in fac.factors:
        if g.is_reciprocal():
            rec = rec * g**e
        else:
            nonrec = nonrec * g**e
    return rec, nonrec


def is_binomial_product(q: Quadrinomial) -> tuple[Polynomial, Polynomial] | None:
    """A pair of integer binomials multiplying to q, if any exist.

    Writing q = (s*x^n + u)(t*x^p + v) forces the exponent split n + p = m;
    the coefficient system is solved by enumerating signed divisors of a.
    """
    if q.n + q.p != q.m:
        return None
    for s in divisors(q.a):
        for s in (s, -s):
            t, rem = divmod(q.a, s)
            if rem or q.b % s or q.c % t:
                continue
            v, u = q.b // s, q.c // t
            if u * v == q.d:
                pair = (Polynomial.monomial(s, q.n) + u, Polynomial.monomial(t, q.p) + v)
                return tuple(sorted(pair, key=lambda g: (g.degree, g.coeffs)))
    return None


@dataclass(frozen=True)
class SplitReport:
    """One two-term/two-term split of a quadrinomial and its common factors."""

    left: Polynomial
    right: Polynomial
    common_factors: tuple[tuple[Polynomial, bool], ...]  # (irreducible factor, is_reciprocal)

    @property
    def has_nonreciprocal_common(self) -> bool:
        return any(not rec for _, rec in self.common_factors)


def two_part_split_check(q: Quadrinomial) -> tuple[SplitReport, SplitReport, SplitReport]:
    """Examine the three pairings of q's four terms into two binomial parts.

    Each part is stripped of its power-of-x content before taking the gcd;
    nonconstant gcd factors are reported with a reciprocal/nonreciprocal flag.
    """
    terms = [
        Polynomial.monomial(q.a, q.m),
        Polynomial.monomial(q.b, q.n),
        Polynomial.monomial(q.c, q.p),
        Polynomial.constant(q.d),
    ]
    reports = []
    for j in (1, 2, 3):
        left = terms[0] + terms[j]
        right = sum((t for i, t in enumerate(terms) if i not in (0, j)), Polynomial())
        g = poly_gcd(_strip_x_power(left), _strip_x_power(right))
        common: list[tuple[Polynomial, bool]] = []
        if g.degree > 0:
            for factor, _ in factor_over_rationals(g).factors:
                common.append((factor, factor.is_reciprocal()))
        reports.append(SplitReport(left, right, tuple(common)))
    return tuple(reports)


def _strip_x_power(f: Polynomial) -> Polynomial:
    shift = 0
    while f.coeffs[shift] == 0:
        shift += 1
    return Polynomial(f.coeffs[shift:])


def exponent_gcd_reduce(f: Polynomial) -> tuple[int, Polynomial]:
    """(v, g) with g(x**v) = f and v the gcd of exponents with nonzero coeffs."""
    if f.is_zero:
        raise ValueError("undefined for the zero polynomial")
    exps = [i for i, c in enumerate(f.coeffs) if c and i]
    v = math.gcd(*exps) if exps else 1
    if v <= 1:
        return 1, f
    return v, Polynomial(f.coeffs[::v])
