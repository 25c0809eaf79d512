"""Integer chains p -> 2p + eps of primes, searched and validated.

A chain is reported from its initial prime only: the predecessor (p-eps)/2
must not be prime (or not an integer), so each maximal chain appears once.
"Length k" is exact; the value after the last member is composite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .primes import is_probable_prime, sieve


@dataclass(frozen=True)
class IntChain:
    eps: int
    primes: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.primes)

    @property
    def start(self) -> int:
        return self.primes[0]

    @property
    def next_value(self) -> int:
        return 2 * self.primes[-1] + self.eps

    def revalidate(self) -> bool:
        """Members prime, recurrence holds, terminator composite, predecessor not prime."""
        if self.eps not in (-1, 1) or not self.primes:
            return False
        if not all(is_probable_prime(q) for q in self.primes):
            return False
        if any(b != 2 * a + self.eps for a, b in zip(self.primes, self.primes[1:])):
            return False
        if is_probable_prime(self.next_value):
            return False
        return not _has_prime_predecessor(self.start, self.eps)


def _has_prime_predecessor(p: int, eps: int) -> bool:
    q, r = divmod(p - eps, 2)
    return r == 0 and is_probable_prime(q)


def int_chain_length(p: int, eps: int) -> tuple[int, IntChain]:
    """Extend p by the recurrence until the next value is composite."""
    if eps not in (-1, 1):
        raise ValueError("eps must be -1 or +1")
    if not is_probable_prime(p):
        raise ValueError("chain start must be prime")
    members = [p]
    while is_probable_prime(2 * members[-1] + eps):
        members.append(2 * members[-1] + eps)
    chain = IntChain(eps, tuple(members))
    return chain.length, chain


def search_int_chains(target_length: int, eps: int, bound: int) -> list[IntChain]:
    """All chain-initial chains of exactly target_length starting below bound."""
    if target_length < 1:
        raise ValueError("target length must be at least 1")
    if bound < 2:
        raise ValueError("bound must be at least 2")
    if eps not in (-1, 1):
        raise ValueError("eps must be -1 or +1")
    flags = sieve(bound)
    out = []
    for p in range(2, bound):
        if not flags[p]:
            continue
        q, r = divmod(p - eps, 2)
        if r == 0 and flags[q]:  # predecessor prime: not chain-initial
            continue
        length, chain = int_chain_length(p, eps)
        if length == target_length:
            out.append(chain)
    return out
