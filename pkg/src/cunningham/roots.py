"""Simultaneous complex root approximation for exact integer polynomials.

All roots are iterated together (Ehrlich/Aberth corrections) from points on
a Cauchy-bound circle.  Convergence is judged by a scale-free residual
|f(z)| / sum(|a_i| |z|^i), so the reported roots come with an explicit
quality figure instead of a blind iteration count.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .polyz import Polynomial

_MAX_ITERATIONS = 400


@dataclass(frozen=True)
class RootRecord:
    value: complex
    residual: float


class NonConvergenceError(RuntimeError):
    """Raised when residuals stay above tolerance; carries the partial roots."""

    def __init__(self, message: str, partial: list[RootRecord]):
        super().__init__(message)
        self.partial_roots = partial


def _horner(coeffs: list[float], z: complex) -> complex:
    acc: complex = 0.0
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _residual(coeffs: list[float], z: complex, fz: complex) -> float:
    scale = 0.0
    azp = 1.0
    az = abs(z)
    for c in coeffs:
        scale += abs(c) * azp
        azp *= az
    return abs(fz) / scale if scale else abs(fz)


def aberth_roots(f: Polynomial, tol: float = 1e-12, max_iterations: int = _MAX_ITERATIONS) -> list[RootRecord]:
    """All complex roots of f with residuals below tol, multiplicity-aware only
    in count (a root of multiplicity r shows up as r nearby points)."""
    if f.is_zero or f.degree < 1:
        raise ValueError("need a nonconstant polynomial")
    top = max(abs(c) for c in f.coeffs)
    coeffs = [c / top for c in f.coeffs]  # exact int ratios round once to float
    while coeffs and abs(coeffs[-1]) == 0.0:
        coeffs.pop()
    n = len(coeffs) - 1
    dcoeffs = [i * c for i, c in enumerate(coeffs)][1:]

    radius = 1.0 + max(abs(c / coeffs[-1]) for c in coeffs[:-1])
    zs = [
        radius * cmath.exp(1j * (2 * cmath.pi * j / n + 0.4))
        for j in range(n)
    ]

    for _ in range(max_iterations):
        settled = True
        new_zs: list[complex] = []
        for j, z in enumerate(zs):
            fz = _horner(coeffs, z)
            if _residual(coeffs, z, fz) < tol:
                new_zs.append(z)
                continue
            settled = False
            dfz = _horner(dcoeffs, z)
            if dfz == 0:
                new_zs.append(z + 1e-8 * (1 + abs(z)) * cmath.exp(1j * 0.9))
                continue
            ratio = fz / dfz
            correction = 0.0 + 0.0j
            for i, zk in enumerate(zs):
                if i != j and z != zk:
                    correction += 1 / (z - zk)
            denom = 1 - ratio * correction
            if denom == 0:
                new_zs.append(z + 1e-8 * (1 + abs(z)) * cmath.exp(1j * 0.9))
                continue
            new_zs.append(z - ratio / denom)
        zs = new_zs
        if settled:
            break

    records = [RootRecord(z, _residual(coeffs, z, _horner(coeffs, z))) for z in zs]
    if any(r.residual >= tol for r in records):
        raise NonConvergenceError(
            f"root iteration did not reach residual {tol:g} within {max_iterations} rounds",
            records,
        )
    return records
