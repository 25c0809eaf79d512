"""Primality testing and integer factorization helpers.

Primality is Miller-Rabin: deterministic below 2**64 using a known-complete
witness set, probabilistic above with rounds drawn from a seeded generator so
runs are reproducible.  Set CUNNINGHAM_SEED to vary the witness stream.
"""

from __future__ import annotations

import math
import os
import random
from itertools import count
from typing import Iterator

# Complete deterministic witness set for n < 2**64 (Sinclair).
_SMALL_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_LARGE_ROUNDS = 40

_TINY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _seed() -> str:
    return os.environ.get("CUNNINGHAM_SEED", "0")


def _mr_round(n: int, a: int, d: int, s: int) -> bool:
    """One Miller-Rabin round; True means 'a does not witness compositeness'."""
    x = pow(a, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _TINY_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if n < 1 << 64:
        witnesses: tuple[int, ...] | list[int] = _SMALL_WITNESSES
    else:
        rng = random.Random(f"{_seed()}:{n}")
        witnesses = [rng.randrange(2, n - 1) for _ in range(_LARGE_ROUNDS)]
    return all(_mr_round(n, a % n, d, s) for a in witnesses if a % n)


def primes(start: int = 2) -> Iterator[int]:
    """Primes >= start in increasing order."""
    n = max(start, 2)
    if n == 2:
        yield 2
        n = 3
    if n % 2 == 0:
        n += 1
    while True:
        if is_probable_prime(n):
            yield n
        n += 2


def sieve(limit: int) -> bytearray:
    """Byte-per-number sieve; index i is 1 iff i is prime, for 0 <= i <= limit."""
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return flags


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(f"{_seed()}:rho:{n}")
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_int(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: multiplicity}; rejects 0."""
    if n == 0:
        raise ValueError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in _TINY_PRIMES:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack += [root, root]
            continue
        d = _pollard_rho(m)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    """All positive divisors of |n| in increasing order."""
    if n == 0:
        raise ValueError("zero has infinitely many divisors")
    divs = [1]
    for p, e in factor_int(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def prime_range(lo: int, hi: int) -> Iterator[int]:
    """Primes p with lo <= p < hi."""
    for p in primes(lo):
        if p >= hi:
            return
        yield p
