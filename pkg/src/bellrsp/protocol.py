"""Remote preparation of alpha|0...0> + beta|1...1> over one Bell pair.

The sender knows the target pair (alpha, beta). She measures her half of the
shared Bell state in a target-dependent basis and reports the outcome over a
classical channel using a tiny codec ("0", "10", "11", or an explicit ABORT).
The receiver applies a corrective unitary selected by the message, then fans
the corrected qubit out over m-1 fresh ancillas with CNOTs.

For a general target only the psi_perp branch is correctable, so the protocol
succeeds with probability 1/2 at an average forward cost of 0.5 bits. When
both coefficients are real, or when the target is equatorial (both moduli
1/sqrt(2)), the psi branch is correctable too: success probability 1 at an
average cost of 1.5 bits.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadQubitCount,
    MalformedMessage,
    NegativeAlpha,
    NonNormalizedTarget,
)
from .statevector import (
    INPUT_TOL,
    PAULI_X,
    ROT90,
    SQRT_HALF,
    MeasurementBasis,
    Outcome,
    StateVector,
    append_ancillas,
    apply_1q,
    basis_from_target,
    cnot_fanout,
    fidelity_mod_phase,
    make_bell,
    measure_in_basis,
)

CASE_TOL = 1e-9     # case classification works on user-entered decimals
SUCCESS_TOL = 1e-9  # success means fidelity >= 1 - SUCCESS_TOL

ABORT_WIRE = "ABORT"

# every payload the codec admits; anything else is malformed by definition
_VALID_PAYLOADS = frozenset({(0,), (1, 0), (1, 1)})


class TargetCase(enum.Enum):
    """Which correction regime a canonical target pair falls into."""

    GENERAL = "general"
    REAL = "real"              # both coefficients real: psi branch needs no gate
    EQUATORIAL = "equatorial"  # both moduli 1/sqrt(2): psi branch fixed by a flip


@dataclass(frozen=True)
class TargetSpec:
    """Canonical target: alpha real >= 0, unit norm, m >= 2, classified case."""

    alpha: float
    beta: complex
    m: int
    case_tag: TargetCase

    def __post_init__(self) -> None:
        if self.m < 2:
            raise BadQubitCount(f"target needs at least 2 qubits, got m={self.m}")
        if self.alpha < 0:
            raise NegativeAlpha(f"alpha must be >= 0, got {self.alpha}")
        norm_sq = self.alpha**2 + abs(self.beta) ** 2
        if abs(np.sqrt(norm_sq) - 1.0) > INPUT_TOL:
            raise NonNormalizedTarget(
                f"alpha**2 + |beta|**2 = {float(norm_sq)!r}, not 1 within {INPUT_TOL}"
            )
        if self.case_tag is not classify_case(self.alpha, self.beta):
            raise ValueError(
                f"case_tag {self.case_tag.value!r} does not match the "
                f"coefficients (expected {classify_case(self.alpha, self.beta).value!r})"
            )

    @property
    def theta(self) -> float:
        """Relative phase arg(beta); the free parameter of equatorial targets."""
        return float(cmath.phase(self.beta))

    def to_json_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": [self.beta.real, self.beta.imag],
            "m": self.m,
            "case_tag": self.case_tag.value,
        }


def classify_case(alpha: float, beta: complex) -> TargetCase:
    """Classify a canonical pair; REAL wins when both special tests pass."""
    if abs(complex(beta).imag) <= CASE_TOL:
        return TargetCase.REAL
    if (
        abs(alpha - SQRT_HALF) <= CASE_TOL
        and abs(abs(beta) - SQRT_HALF) <= CASE_TOL
    ):
        return TargetCase.EQUATORIAL
    return TargetCase.GENERAL


def canonicalize_target(
    alpha_raw: complex,
    beta_raw: complex,
    m: int,
    normalize: bool = False,
) -> TargetSpec:
    """Bring a raw coefficient pair into canonical form and classify it.

    Multiplies both coefficients by a unit-modulus global phase so alpha
    becomes real and nonnegative (the state itself is unchanged), rescales to
    exact unit norm, and tags the case. Pass ``normalize=True`` to accept a
    pair of any nonzero norm; otherwise the norm must already be 1 within
    ``INPUT_TOL``.
    """
    if m < 2:
        raise BadQubitCount(f"target needs at least 2 qubits, got m={m}")
    a = complex(alpha_raw)
    b = complex(beta_raw)
    if not (cmath.isfinite(a) and cmath.isfinite(b)):
        raise NonNormalizedTarget("coefficients must be finite")
    norm = np.sqrt(abs(a) ** 2 + abs(b) ** 2)
    if norm == 0.0:
        raise NonNormalizedTarget("coefficients are both zero")
    if not normalize and abs(norm - 1.0) > INPUT_TOL:
        raise NonNormalizedTarget(
            f"alpha**2 + |beta|**2 = {float(norm * norm)!r}, not 1 within {INPUT_TOL}; "
            "pass normalize=True to rescale"
        )
    a /= norm
    b /= norm
    # phase away arg(alpha); for alpha = 0 make beta real positive instead
    reference = a if abs(a) > 0 else b
    phase = reference.conjugate() / abs(reference)
    alpha = abs(a)
    beta = b * phase
    return TargetSpec(alpha, beta, m, classify_case(alpha, beta))


@dataclass(frozen=True)
class ClassicalMessage:
    """Payload bits from the sender, or ``bits=None`` for an explicit abort."""

    bits: tuple[int, ...] | None

    def __post_init__(self) -> None:
        if self.bits is None:
            return
        bits = tuple(int(bit) for bit in self.bits)
        if bits not in _VALID_PAYLOADS:
            raise MalformedMessage(f"payload {bits!r} is outside the codec")
        object.__setattr__(self, "bits", bits)

    @property
    def is_abort(self) -> bool:
        return self.bits is None

    @property
    def bit_count(self) -> int:
        return 0 if self.bits is None else len(self.bits)

    def to_wire(self) -> str:
        """Bit-exact wire form: "0", "10", "11", or the literal "ABORT"."""
        if self.bits is None:
            return ABORT_WIRE
        return "".join(str(bit) for bit in self.bits)

    @classmethod
    def from_wire(cls, text: str) -> ClassicalMessage:
        if text == ABORT_WIRE:
            return cls(None)
        if not text or set(text) - {"0", "1"}:
            raise MalformedMessage(f"wire form {text!r} is outside the codec")
        return cls(tuple(int(ch) for ch in text))


def alice_encode(outcome: Outcome, case_tag: TargetCase) -> ClassicalMessage:
    """Message for a measurement outcome: psi_perp is always correctable ("0");
    psi is correctable only in the special cases ("10" real, "11" equatorial)
    and otherwise aborts the run."""
    if outcome is Outcome.PSI_PERP:
        return ClassicalMessage((0,))
    if case_tag is TargetCase.REAL:
        return ClassicalMessage((1, 0))
    if case_tag is TargetCase.EQUATORIAL:
        return ClassicalMessage((1, 1))
    return ClassicalMessage(None)


def bob_act(
    message: ClassicalMessage, collapsed: StateVector, m: int
) -> StateVector | None:
    """Receiver's response: corrective gate selected by the message, then
    CNOT fan-out of the corrected qubit over m-1 fresh ancillas.

    Payload (0,) applies the rotation taking (beta, -alpha) to (alpha, beta);
    (1, 0) applies no gate (a real pair needs none); (1, 1) applies a bit flip,
    which fixes an equatorial pair up to global phase. Abort returns None.
    """
    if m < 2:
        raise BadQubitCount(f"target needs at least 2 qubits, got m={m}")
    if message.bits is None:
        return None
    if collapsed.n_qubits != 1:
        raise ValueError(
            f"expected a 1-qubit collapsed state, got {collapsed.n_qubits} qubits"
        )
    if message.bits == (0,):
        corrected = apply_1q(collapsed, 0, ROT90)
    elif message.bits == (1, 0):
        corrected = collapsed
    elif message.bits == (1, 1):
        corrected = apply_1q(collapsed, 0, PAULI_X)
    else:  # unreachable for messages built by this codec
        raise MalformedMessage(f"payload {message.bits!r} is outside the codec")
    extended = append_ancillas(corrected, m - 1)
    return cnot_fanout(extended, control=0, targets=range(1, m))


def build_target_state(target: TargetSpec) -> StateVector:
    """The m-qubit goal state alpha|00...0> + beta|11...1>."""
    amps = np.zeros(2**target.m, dtype=complex)
    amps[0] = target.alpha
    amps[-1] = target.beta
    return StateVector(target.m, amps)


@dataclass(frozen=True)
class TrialRecord:
    """Everything observable about one protocol run."""

    outcome: Outcome
    message: ClassicalMessage
    bob_state: StateVector | None
    fidelity: float
    success: bool
    bits_sent: int

    def to_json_dict(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "message": self.message.to_wire(),
            "bob_state": None if self.bob_state is None else self.bob_state.to_json_dict(),
            "fidelity": self.fidelity,
            "success": self.success,
            "bits_sent": self.bits_sent,
        }


def run_trial(
    target: TargetSpec, select: Outcome | np.random.Generator
) -> TrialRecord:
    """One full protocol run against a fresh Bell pair.

    ``select`` either forces the sender's measurement branch (for exact
    enumeration) or supplies the random draw. Fidelity is computed against
    ``build_target_state`` modulo global phase; an aborted run scores 0.
    """
    basis = basis_from_target(target.alpha, target.beta)
    outcome, _, collapsed = measure_in_basis(make_bell(), 0, basis, select)
    message = alice_encode(outcome, target.case_tag)
    bob_state = bob_act(message, collapsed, target.m)
    if bob_state is None:
        fidelity = 0.0
    else:
        fidelity = fidelity_mod_phase(bob_state, build_target_state(target))
    return TrialRecord(
        outcome=outcome,
        message=message,
        bob_state=bob_state,
        fidelity=fidelity,
        success=fidelity >= 1.0 - SUCCESS_TOL,
        bits_sent=message.bit_count,
    )


def target_basis(target: TargetSpec) -> MeasurementBasis:
    """The sender's measurement basis for this target."""
    return basis_from_target(target.alpha, target.beta)
