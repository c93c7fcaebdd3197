"""Minimal dense statevector engine for small qubit registers.

Index convention is big endian: qubit 0 is the most significant bit of the
amplitude index, so reshaping a 2**n vector to [2]*n puts qubit k on axis k.
Measuring a qubit removes it from the register. States are immutable values;
every operation returns a new state, which makes them safe to share across
threads or worker processes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateTarget,
    NegativeAlpha,
    NonNormalizedTarget,
    NonUnitary,
    SameQubit,
    ZeroProbabilityBranch,
)

NORM_TOL = 1e-12       # internal identities: norms, orthogonality, probabilities
INPUT_TOL = 1e-9       # user-supplied coefficients arrive as lossy decimals
UNITARY_TOL = 1e-10    # max elementwise deviation of U†U from I
MIN_BRANCH_PROB = 1e-14  # forcing a branch below this is physically meaningless

SQRT_HALF = 1.0 / np.sqrt(2.0)

# 2x2 gates used by the protocol and its tests.
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
ROT90 = np.array([[0, -1], [1, 0]], dtype=complex)  # maps (b, -a) to (a, b)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) * SQRT_HALF
IDENTITY2 = np.eye(2, dtype=complex)


class Outcome(enum.Enum):
    """The two results of a projective measurement in a {psi, psi_perp} basis."""

    PSI = "psi"
    PSI_PERP = "psi_perp"


def _freeze(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class StateVector:
    """2**n_qubits complex amplitudes over an ordered qubit register.

    Amplitudes must be finite and normalized within ``INPUT_TOL``; they are
    rescaled to exact unit norm on construction so every downstream identity
    holds at ``NORM_TOL`` even when coefficients were entered as decimals.
    """

    n_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.n_qubits < 0:
            raise ValueError(f"n_qubits must be >= 0, got {self.n_qubits}")
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != 2**self.n_qubits:
            raise ValueError(
                f"expected {2**self.n_qubits} amplitudes for {self.n_qubits} "
                f"qubits, got {amps.size}"
            )
        if not np.isfinite(amps).all():
            raise ValueError("amplitudes must be finite (no NaN/Inf)")
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > INPUT_TOL:
            raise ValueError(f"state norm {float(norm)!r} is not 1 within {INPUT_TOL}")
        # divide (or copy) so the frozen buffer is never shared with the caller
        amps = amps / norm if norm != 1.0 else amps.copy()
        object.__setattr__(self, "amplitudes", _freeze(amps))

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def to_json_dict(self) -> dict:
        """JSON form: n_qubits plus amplitudes as [re, im] pairs."""
        return {
            "n_qubits": self.n_qubits,
            "amplitudes": [[z.real, z.imag] for z in self.amplitudes],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> StateVector:
        amps = np.array([complex(re, im) for re, im in data["amplitudes"]])
        return cls(int(data["n_qubits"]), amps)


@dataclass(frozen=True, eq=False)
class MeasurementBasis:
    """Orthonormal single-qubit basis pair {psi, psi_perp}."""

    psi: np.ndarray
    psi_perp: np.ndarray

    def __post_init__(self) -> None:
        psi = np.asarray(self.psi, dtype=complex).reshape(-1)
        perp = np.asarray(self.psi_perp, dtype=complex).reshape(-1)
        if psi.shape != (2,) or perp.shape != (2,):
            raise ValueError("basis vectors must have exactly 2 components")
        for name, vec in (("psi", psi), ("psi_perp", perp)):
            if abs(np.linalg.norm(vec) - 1.0) > NORM_TOL:
                raise ValueError(f"{name} is not unit norm")
        if abs(np.vdot(psi, perp)) > NORM_TOL:
            raise ValueError("basis vectors are not orthogonal")
        object.__setattr__(self, "psi", _freeze(psi))
        object.__setattr__(self, "psi_perp", _freeze(perp))

    def vector(self, outcome: Outcome) -> np.ndarray:
        return self.psi if outcome is Outcome.PSI else self.psi_perp


def make_bell() -> StateVector:
    """The shared two-qubit channel (|00> + |11>)/sqrt(2)."""
    return _BELL


def basis_from_target(alpha: float, beta: complex) -> MeasurementBasis:
    """Measurement basis {psi = (alpha, beta), psi_perp = (conj(beta), -alpha)}.

    ``alpha`` must be real and nonnegative (canonicalize the target first) and
    the pair normalized within ``INPUT_TOL``. Both vectors are rescaled to
    exact unit norm so Born probabilities obey the ``NORM_TOL`` identities.
    """
    alpha = float(alpha)
    beta = complex(beta)
    if alpha < 0:
        raise NegativeAlpha(f"alpha must be >= 0, got {alpha}")
    norm = np.sqrt(alpha * alpha + abs(beta) ** 2)
    if abs(norm - 1.0) > INPUT_TOL:
        raise NonNormalizedTarget(
            f"alpha**2 + |beta|**2 = {float(norm * norm)!r}, not 1 within {INPUT_TOL}"
        )
    psi = np.array([alpha, beta], dtype=complex) / norm
    psi_perp = np.array([beta.conjugate(), -alpha], dtype=complex) / norm
    return MeasurementBasis(psi, psi_perp)


def measure_in_basis(
    state: StateVector,
    qubit: int,
    basis: MeasurementBasis,
    select: Outcome | np.random.Generator,
) -> tuple[Outcome, float, StateVector]:
    """Projective measurement of one qubit in an arbitrary orthonormal basis.

    ``select`` is either a forced :class:`Outcome` (exact branch enumeration)
    or a numpy ``Generator`` supplying the Born-rule draw. The measured qubit
    is removed from the register and the remainder renormalized.

    Returns ``(outcome, probability of that outcome, collapsed state)``.
    """
    if not 0 <= qubit < state.n_qubits:
        raise IndexError(f"qubit {qubit} out of range for {state.n_qubits} qubits")
    tensor = np.moveaxis(state.amplitudes.reshape([2] * state.n_qubits), qubit, 0)
    branch_psi = np.tensordot(basis.psi.conj(), tensor, axes=([0], [0]))
    branch_perp = np.tensordot(basis.psi_perp.conj(), tensor, axes=([0], [0]))
    p_psi = float(np.vdot(branch_psi, branch_psi).real)
    p_perp = float(np.vdot(branch_perp, branch_perp).real)
    if isinstance(select, Outcome):
        outcome = select
    elif isinstance(select, np.random.Generator):
        outcome = Outcome.PSI if select.random() < p_psi else Outcome.PSI_PERP
    else:
        raise TypeError("select must be an Outcome or a numpy random Generator")
    prob = p_psi if outcome is Outcome.PSI else p_perp
    if prob < MIN_BRANCH_PROB:
        raise ZeroProbabilityBranch(
            f"branch {outcome.value} has probability {prob!r}"
        )
    branch = branch_psi if outcome is Outcome.PSI else branch_perp
    collapsed = StateVector(
        state.n_qubits - 1, branch.reshape(-1) / np.sqrt(prob)
    )
    return outcome, prob, collapsed


def apply_1q(state: StateVector, qubit: int, u: np.ndarray) -> StateVector:
    """Apply a 2x2 unitary to one qubit."""
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {u.shape}")
    _require_unitary(u)
    if not 0 <= qubit < state.n_qubits:
        raise IndexError(f"qubit {qubit} out of range for {state.n_qubits} qubits")
    tensor = np.moveaxis(state.amplitudes.reshape([2] * state.n_qubits), qubit, 0)
    out = np.moveaxis(np.tensordot(u, tensor, axes=([1], [0])), 0, qubit)
    return StateVector(state.n_qubits, out.reshape(-1))


def apply_cnot(state: StateVector, control: int, target: int) -> StateVector:
    """CNOT: flips the target bit of amplitudes whose control bit is set."""
    if control == target:
        raise SameQubit(f"control and target are both qubit {control}")
    for q in (control, target):
        if not 0 <= q < state.n_qubits:
            raise IndexError(f"qubit {q} out of range for {state.n_qubits} qubits")
    n = state.n_qubits
    tensor = state.amplitudes.reshape([2] * n).copy()
    sel10: list = [slice(None)] * n
    sel11: list = [slice(None)] * n
    sel10[control], sel10[target] = 1, 0
    sel11[control], sel11[target] = 1, 1
    tensor[tuple(sel10)], tensor[tuple(sel11)] = (
        tensor[tuple(sel11)].copy(),
        tensor[tuple(sel10)].copy(),
    )
    return StateVector(n, tensor.reshape(-1))


def append_ancillas(state: StateVector, k: int) -> StateVector:
    """Tensor k fresh |0> qubits onto the low-order end of the register."""
    if k < 0:
        raise ValueError(f"ancilla count must be >= 0, got {k}")
    if k == 0:
        return state
    zeros = np.zeros(2**k, dtype=complex)
    zeros[0] = 1.0
    return StateVector(state.n_qubits + k, np.kron(state.amplitudes, zeros))


def cnot_fanout(state: StateVector, control: int, targets) -> StateVector:
    """Sequential CNOTs from one control onto each target qubit, in order.

    On alpha|0>+beta|1> tensored with |0...0> this produces the GHZ-class
    correlation alpha|00...0> + beta|11...1>.
    """
    targets = list(targets)
    if len(set(targets)) != len(targets):
        raise DuplicateTarget(f"fan-out targets contain duplicates: {targets}")
    out = state
    for target in targets:
        out = apply_cnot(out, control, target)
    return out


def fidelity_mod_phase(a: StateVector, b: StateVector) -> float:
    """|<a|b>|**2, insensitive to any global phase on either state."""
    if a.n_qubits != b.n_qubits:
        raise DimensionMismatch(
            f"cannot compare {a.n_qubits}-qubit and {b.n_qubits}-qubit states"
        )
    return float(abs(np.vdot(a.amplitudes, b.amplitudes)) ** 2)


def check_decomposition(alpha: float, beta: complex) -> float:
    """Max deviation of the two-branch reconstruction from the Bell channel.

    Rebuilds (psi_perp (x) (beta, -alpha) + psi (x) (alpha, conj(beta))) /
    sqrt(2) and compares it elementwise against ``make_bell()``. The result
    is below ``NORM_TOL`` for every normalized target pair.
    """
    basis = basis_from_target(alpha, beta)
    # reuse the exactly rescaled coefficients stored in the basis
    a = basis.psi[0].real
    b = complex(basis.psi[1])
    branch_perp = np.array([b, -a], dtype=complex)
    branch_psi = np.array([a, b.conjugate()], dtype=complex)
    recon = (
        np.kron(basis.psi_perp, branch_perp) + np.kron(basis.psi, branch_psi)
    ) * SQRT_HALF
    return float(np.max(np.abs(recon - make_bell().amplitudes)))


def _require_unitary(u: np.ndarray) -> None:
    deviation = np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))
    if deviation > UNITARY_TOL:
        raise NonUnitary(f"U†U deviates from identity by {deviation!r}")


_BELL = StateVector(2, np.array([SQRT_HALF, 0.0, 0.0, SQRT_HALF], dtype=complex))
