"""Independent reference constructions used to cross-check the library.

Everything here is built from first principles (explicit dense matrices,
integer bit arithmetic, np.kron) rather than through the library's own fast
paths, so agreement is evidence and not tautology.
"""

from __future__ import annotations

import numpy as np

from bellrsp import SQRT_HALF, TargetSpec, canonicalize_target


def dense_cnot(n: int, control: int, target: int) -> np.ndarray:
    """Explicit 2^n x 2^n CNOT permutation matrix, big-endian qubit order."""
    dim = 2**n
    matrix = np.zeros((dim, dim), dtype=complex)
    control_shift = n - 1 - control
    target_shift = n - 1 - target
    for i in range(dim):
        control_bit = (i >> control_shift) & 1
        j = i ^ (control_bit << target_shift)
        matrix[j, i] = 1.0
    return matrix


def kron_chain(*factors: np.ndarray) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    for factor in factors:
        out = np.kron(out, factor)
    return out


def random_state_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return amps / np.linalg.norm(amps)


def random_pair(rng: np.random.Generator) -> tuple[float, complex]:
    """Normalized (alpha >= 0 real, beta complex), away from degenerate zero."""
    while True:
        parts = rng.normal(size=3)
        alpha = abs(parts[0])
        beta = complex(parts[1], parts[2])
        norm = np.sqrt(alpha**2 + abs(beta) ** 2)
        if norm > 1e-6:
            return alpha / norm, beta / norm


def random_real_pair(rng: np.random.Generator) -> tuple[float, complex]:
    while True:
        parts = rng.normal(size=2)
        alpha = abs(parts[0])
        beta = complex(parts[1], 0.0)
        norm = np.sqrt(alpha**2 + abs(beta) ** 2)
        if norm > 1e-6:
            return alpha / norm, beta / norm


def random_equatorial_pair(rng: np.random.Generator) -> tuple[float, complex]:
    # keep theta away from 0 and pi so the pair never classifies as real
    theta = rng.uniform(0.05, np.pi - 0.05) * rng.choice([-1.0, 1.0])
    return SQRT_HALF, SQRT_HALF * np.exp(1j * theta)


def random_general_pair(rng: np.random.Generator) -> tuple[float, complex]:
    """A pair that is clearly neither real nor equatorial."""
    while True:
        alpha, beta = random_pair(rng)
        if abs(beta.imag) > 1e-4 and abs(alpha - SQRT_HALF) > 1e-3:
            return alpha, beta


def random_target(
    rng: np.random.Generator, kind: str, m: int | None = None
) -> TargetSpec:
    draw = {
        "real": random_real_pair,
        "equatorial": random_equatorial_pair,
        "general": random_general_pair,
    }[kind]
    alpha, beta = draw(rng)
    if m is None:
        m = int(rng.integers(2, 11))
    return canonicalize_target(alpha, beta, m)
