"""Arithmetic and factorization in GF(p)[x] for prime p.

Polynomials over GF(p) are plain lists of ints in [0, p), ascending degree,
trailing zeros stripped.  This keeps the modular kernel free of the exact
integer Polynomial type; conversions happen at the boundary.
"""

from __future__ import annotations

import random

from .polyz import Polynomial
from .primes import factor_int

Gf = list[int]


def _strip(a: Gf) -> Gf:
    while a and a[-1] == 0:
        a.pop()
    return a


def from_int_poly(f: Polynomial, p: int) -> Gf:
    return _strip([c % p for c in f.coeffs])


def to_int_poly(a: Gf) -> Polynomial:
    """Lift with coefficients kept in [0, p)."""
    return Polynomial(a)


def gf_add(a: Gf, b: Gf, p: int) -> Gf:
    if len(a) < len(b):
        a, b = b, a
    out = a[:]
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _strip(out)


def gf_sub(a: Gf, b: Gf, p: int) -> Gf:
    out = a[:] + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _strip(out)


def gf_mul(a: Gf, b: Gf, p: int) -> Gf:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip([c % p for c in out])


def gf_scale(a: Gf, k: int, p: int) -> Gf:
    k %= p
    return _strip([c * k % p for c in a])


def gf_monic(a: Gf, p: int) -> Gf:
    if not a:
        return []
    return gf_scale(a, pow(a[-1], -1, p), p)


def gf_divmod(a: Gf, b: Gf, p: int) -> tuple[Gf, Gf]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    inv = pow(b[-1], -1, p)
    rem = a[:]
    db = len(b) - 1
    quot = [0] * max(len(rem) - db, 0)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] * inv % p
        if c:
            quot[i - db] = c
            for j, bc in enumerate(b):
                rem[i - db + j] = (rem[i - db + j] - c * bc) % p
    return _strip(quot), _strip(rem)


def gf_rem(a: Gf, b: Gf, p: int) -> Gf:
    return gf_divmod(a, b, p)[1]


def gf_div(a: Gf, b: Gf, p: int) -> Gf:
    q, r = gf_divmod(a, b, p)
    if r:
        raise ValueError("not an exact division in GF(p)[x]")
    return q


def gf_gcd(a: Gf, b: Gf, p: int) -> Gf:
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_gcdex(a: Gf, b: Gf, p: int) -> tuple[Gf, Gf, Gf]:
    """Extended Euclid: (s, t, g) with s*a + t*b = g, g the monic gcd."""
    r0, r1 = a[:], b[:]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if not r0:
        raise ValueError("gcdex of two zero polynomials")
    inv = pow(r0[-1], -1, p)
    return gf_scale(s0, inv, p), gf_scale(t0, inv, p), gf_monic(r0, p)


def gf_pow_mod(a: Gf, n: int, mod: Gf, p: int) -> Gf:
    result: Gf = [1]
    base = gf_rem(a, mod, p)
    while n:
        if n & 1:
            result = gf_rem(gf_mul(result, base, p), mod, p)
        base = gf_rem(gf_mul(base, base, p), mod, p)
        n >>= 1
    return result


def gf_diff(a: Gf, p: int) -> Gf:
    return _strip([i * c % p for i, c in enumerate(a) if i][: len(a) - 1] if a else [])


def _pth_root(a: Gf, p: int) -> Gf:
    # In GF(p) every scalar is its own p-th root, so sample every p-th slot.
    return _strip(a[::p])


def gf_squarefree(f: Gf, p: int) -> list[tuple[Gf, int]]:
    """Yun-style decomposition mod p: [(g_i, m_i)] with f ~ prod g_i**m_i.

    Factors are monic, squarefree, pairwise coprime.  Handles the p-th power
    collapse (f' = 0) by recursing on the p-th root.
    """
    out: list[tuple[Gf, int]] = []
    f = gf_monic(f, p)
    scale = 1
    while len(f) > 1:
        df = gf_diff(f, p)
        if not df:
            f = _pth_root(f, p)
            scale *= p
            continue
        g = gf_gcd(f, df, p)
        w = gf_div(f, g, p)
        i = 1
        while len(w) > 1:
            y = gf_gcd(w, g, p)
            z = gf_div(w, y, p)
            if len(z) > 1:
                out.append((z, i * scale))
            w = y
            g = gf_div(g, y, p)
            i += 1
        f = g
    return out


def _ddf(f: Gf, p: int) -> list[tuple[Gf, int]]:
    """Distinct-degree split of monic squarefree f: [(product, degree)]."""
    out: list[tuple[Gf, int]] = []
    x: Gf = [0, 1]
    h = x[:]
    d = 1
    while len(f) - 1 >= 2 * d:
        h = gf_pow_mod(h, p, f, p)
        g = gf_gcd(gf_sub(h, x, p), f, p)
        if len(g) > 1:
            out.append((g, d))
            f = gf_div(f, g, p)
            h = gf_rem(h, f, p)
        d += 1
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _edf(f: Gf, d: int, p: int, rng: random.Random) -> list[Gf]:
    """Cantor-Zassenhaus split of monic f into irreducibles of degree d."""
    pending = [f]
    done: list[Gf] = []
    while pending:
        f = pending.pop()
        n = len(f) - 1
        if n == d:
            done.append(f)
            continue
        while True:
            r = _strip([rng.randrange(p) for _ in range(n)])
            if len(r) < 2:
                continue
            if p == 2:
                # trace map over GF(2^d)
                g = r[:]
                acc = r[:]
                for _ in range(d - 1):
                    acc = gf_rem(gf_mul(acc, acc, p), f, p)
                    g = gf_add(g, acc, p)
            else:
                g = gf_sub(gf_pow_mod(r, (p**d - 1) // 2, f, p), [1], p)
            g = gf_gcd(g, f, p)
            if 1 < len(g) < len(f):
                pending += [g, gf_div(f, g, p)]
                break
    return done


def factor_mod_p(f: Polynomial, p: int) -> list[tuple[Polynomial, int]]:
    """Monic irreducible factors of f mod p with multiplicities.

    The leading unit is dropped; factors come back sorted by degree then
    coefficients so results are deterministic (the internal splitting RNG is
    fixed-seeded).
    """
    a = from_int_poly(f, p)
    if len(a) < 2:
        raise ValueError("need a nonconstant polynomial mod p")
    rng = random.Random(0)
    out: list[tuple[Polynomial, int]] = []
    for sqf, mult in gf_squarefree(a, p):
        for prod, d in _ddf(sqf, p):
            for g in _edf(prod, d, p, rng):
                out.append((to_int_poly(g), mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    return out


def is_irreducible_mod_p(f: Polynomial, p: int) -> bool:
    """Rabin's test on f reduced mod p.

    False also when reduction drops the degree or gcd(f, f') is nontrivial;
    callers treat True as a certificate of irreducibility over Z.
    """
    a = from_int_poly(f, p)
    n = f.degree
    if len(a) - 1 != n or n < 1:
        return False
    if n == 1:
        return True
    a = gf_monic(a, p)
    x: Gf = [0, 1]
    for q in factor_int(n):
        h = gf_pow_mod(x, p ** (n // q), a, p)
        if len(gf_gcd(gf_sub(h, x, p), a, p)) != 1:
            return False
    return gf_pow_mod(x, p**n, a, p) == x


def modular_degree_multiset(f: Polynomial, p: int) -> list[int] | None:
    """Degrees of the mod-p factors of squarefree f, or None if p is unusable.

    Unusable means p divides the leading coefficient or f mod p is not
    squarefree; either way mod-p degrees say nothing about degrees over Z.
    """
    if f.leading % p == 0:
        return None
    a = from_int_poly(f, p)
    if len(gf_gcd(a, gf_diff(a, p), p)) != 1:
        return None
    return sorted(d for g, mult in factor_mod_p(f, p) for d in [g.degree] * mult)
