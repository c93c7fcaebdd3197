"""Protocol layer: canonicalization, codec, corrections, full trials."""

import numpy as np
import pytest

from bellrsp import (
    BadQubitCount,
    ClassicalMessage,
    MalformedMessage,
    NegativeAlpha,
    NonNormalizedTarget,
    Outcome,
    SQRT_HALF,
    StateVector,
    TargetCase,
    TargetSpec,
    alice_encode,
    bob_act,
    build_target_state,
    canonicalize_target,
    classify_case,
    fidelity_mod_phase,
    run_trial,
)
from oracles import (
    random_equatorial_pair,
    random_general_pair,
    random_pair,
    random_real_pair,
    random_target,
)

ATOL = 1e-12


class TestClassifyCase:
    def test_real_pair(self):
        assert classify_case(0.6, 0.8) is TargetCase.REAL

    def test_equatorial_pair(self):
        assert classify_case(SQRT_HALF, SQRT_HALF * 1j) is TargetCase.EQUATORIAL

    def test_general_pair(self):
        assert classify_case(0.6, 0.8j) is TargetCase.GENERAL

    def test_real_wins_when_both_special_tests_pass(self):
        assert classify_case(SQRT_HALF, SQRT_HALF) is TargetCase.REAL

    def test_negative_real_beta_is_still_real(self):
        assert classify_case(0.8, -0.6) is TargetCase.REAL


class TestCanonicalizeTarget:
    def test_removes_global_phase(self):
        target = canonicalize_target(1j * SQRT_HALF, 1j * SQRT_HALF, 2)
        assert target.alpha == pytest.approx(SQRT_HALF, abs=ATOL)
        assert target.beta == pytest.approx(SQRT_HALF, abs=ATOL)
        assert target.case_tag is TargetCase.REAL

    def test_real_pair_passes_through(self):
        target = canonicalize_target(0.6, 0.8, 3)
        assert target.alpha == pytest.approx(0.6, abs=ATOL)
        assert target.beta == pytest.approx(0.8, abs=ATOL)
        assert target.case_tag is TargetCase.REAL
        assert target.m == 3

    def test_equatorial_keeps_its_phase(self):
        target = canonicalize_target(SQRT_HALF, SQRT_HALF * np.exp(0.7j), 4)
        assert target.case_tag is TargetCase.EQUATORIAL
        assert target.theta == pytest.approx(0.7, abs=1e-12)

    def test_zero_alpha_makes_beta_real_positive(self):
        target = canonicalize_target(0.0, np.exp(1.3j), 2)
        assert target.alpha == 0.0
        assert target.beta == pytest.approx(1.0, abs=ATOL)
        assert target.case_tag is TargetCase.REAL

    def test_canonical_state_matches_raw_state_mod_phase(self):
        rng = np.random.default_rng(71)
        for _ in range(50):
            alpha, beta = random_pair(rng)
            phase = np.exp(1j * rng.uniform(-np.pi, np.pi))
            target = canonicalize_target(phase * alpha, phase * beta, 2)
            raw = np.zeros(4, dtype=complex)
            raw[0], raw[3] = phase * alpha, phase * beta
            raw_state = StateVector(2, raw)
            built = build_target_state(target)
            assert fidelity_mod_phase(built, raw_state) == pytest.approx(1.0, abs=ATOL)

    def test_rejects_bad_norm_without_flag(self):
        with pytest.raises(NonNormalizedTarget):
            canonicalize_target(0.9, 0.9, 2)

    def test_normalize_flag_rescales(self):
        target = canonicalize_target(3.0, 4.0, 2, normalize=True)
        assert target.alpha == pytest.approx(0.6, abs=ATOL)
        assert target.beta == pytest.approx(0.8, abs=ATOL)

    def test_rejects_zero_pair_even_with_flag(self):
        with pytest.raises(NonNormalizedTarget):
            canonicalize_target(0.0, 0.0, 2, normalize=True)

    def test_rejects_non_finite(self):
        with pytest.raises(NonNormalizedTarget):
            canonicalize_target(np.inf, 0.0, 2, normalize=True)

    def test_rejects_small_m(self):
        with pytest.raises(BadQubitCount):
            canonicalize_target(0.6, 0.8, 1)

    def test_eight_decimal_equatorial_input_classifies_correctly(self):
        # truncated decimals miss unit norm by ~8e-10 on the norm; after the
        # exact rescale the pair must still land in the equatorial case
        target = canonicalize_target(0.70710678, complex(0.5, 0.5), 4)
        assert target.case_tag is TargetCase.EQUATORIAL


class TestTargetSpecValidation:
    def test_negative_alpha(self):
        with pytest.raises(NegativeAlpha):
            TargetSpec(-0.6, 0.8, 2, TargetCase.REAL)

    def test_non_normalized(self):
        with pytest.raises(NonNormalizedTarget):
            TargetSpec(0.9, 0.9, 2, TargetCase.REAL)

    def test_small_m(self):
        with pytest.raises(BadQubitCount):
            TargetSpec(0.6, 0.8, 1, TargetCase.REAL)

    def test_mismatched_case_tag(self):
        with pytest.raises(ValueError, match="case_tag"):
            TargetSpec(0.6, 0.8, 2, TargetCase.GENERAL)

    def test_json_dict(self):
        target = canonicalize_target(0.6, 0.8j, 2)
        assert target.to_json_dict() == {
            "alpha": target.alpha,
            "beta": [target.beta.real, target.beta.imag],
            "m": 2,
            "case_tag": "general",
        }


class TestClassicalMessage:
    @pytest.mark.parametrize("bits,wire", [((0,), "0"), ((1, 0), "10"), ((1, 1), "11")])
    def test_payload_wire_round_trip(self, bits, wire):
        message = ClassicalMessage(bits)
        assert message.to_wire() == wire
        assert message.bit_count == len(bits)
        assert not message.is_abort
        assert ClassicalMessage.from_wire(wire) == message

    def test_abort_wire_round_trip(self):
        message = ClassicalMessage(None)
        assert message.to_wire() == "ABORT"
        assert message.bit_count == 0
        assert message.is_abort
        assert ClassicalMessage.from_wire("ABORT") == message

    @pytest.mark.parametrize("bits", [(), (1,), (0, 0), (0, 1), (1, 1, 1)])
    def test_payloads_outside_codec_rejected(self, bits):
        with pytest.raises(MalformedMessage):
            ClassicalMessage(bits)

    @pytest.mark.parametrize("text", ["", "2", "abort", "01", "111", "1 0"])
    def test_wire_junk_rejected(self, text):
        with pytest.raises(MalformedMessage):
            ClassicalMessage.from_wire(text)


class TestAliceEncode:
    @pytest.mark.parametrize(
        "outcome,case,wire",
        [
            (Outcome.PSI_PERP, TargetCase.GENERAL, "0"),
            (Outcome.PSI_PERP, TargetCase.REAL, "0"),
            (Outcome.PSI_PERP, TargetCase.EQUATORIAL, "0"),
            (Outcome.PSI, TargetCase.REAL, "10"),
            (Outcome.PSI, TargetCase.EQUATORIAL, "11"),
            (Outcome.PSI, TargetCase.GENERAL, "ABORT"),
        ],
    )
    def test_exhaustive_codec_table(self, outcome, case, wire):
        assert alice_encode(outcome, case).to_wire() == wire

    def test_every_message_is_actionable(self):
        # codec round trip: bob_act never sees a malformed payload
        collapsed = StateVector(1, np.array([0.6, 0.8]))
        for outcome in Outcome:
            for case in TargetCase:
                message = alice_encode(outcome, case)
                result = bob_act(message, collapsed, 2)
                assert (result is None) == message.is_abort


class TestBobAct:
    def test_perp_payload_restores_target(self):
        alpha, beta = 0.6, 0.8j
        collapsed = StateVector(1, np.array([beta, -alpha]))
        out = bob_act(ClassicalMessage((0,)), collapsed, 2)
        expected = np.zeros(4, dtype=complex)
        expected[0], expected[3] = alpha, beta
        np.testing.assert_allclose(out.amplitudes, expected, atol=ATOL)

    def test_real_payload_applies_no_gate(self):
        alpha, beta = 0.6, 0.8
        collapsed = StateVector(1, np.array([alpha, beta]))  # conj(beta) = beta
        out = bob_act(ClassicalMessage((1, 0)), collapsed, 3)
        expected = np.zeros(8, dtype=complex)
        expected[0], expected[7] = alpha, beta
        np.testing.assert_allclose(out.amplitudes, expected, atol=ATOL)

    def test_equatorial_payload_flips_and_leaves_global_phase(self):
        theta = 1.1
        collapsed = StateVector(
            1, SQRT_HALF * np.array([1.0, np.exp(-1j * theta)])
        )
        out = bob_act(ClassicalMessage((1, 1)), collapsed, 2)
        expected = np.zeros(4, dtype=complex)
        expected[0] = np.exp(-1j * theta) * SQRT_HALF
        expected[3] = np.exp(-1j * theta) * SQRT_HALF * np.exp(1j * theta)
        np.testing.assert_allclose(out.amplitudes, expected, atol=ATOL)

    def test_abort_returns_none(self):
        collapsed = StateVector(1, np.array([0.6, 0.8]))
        assert bob_act(ClassicalMessage(None), collapsed, 5) is None

    def test_small_m_rejected(self):
        collapsed = StateVector(1, np.array([0.6, 0.8]))
        with pytest.raises(BadQubitCount):
            bob_act(ClassicalMessage((0,)), collapsed, 1)

    def test_multi_qubit_collapsed_state_rejected(self):
        with pytest.raises(ValueError, match="1-qubit"):
            bob_act(ClassicalMessage((0,)), StateVector(2, [1, 0, 0, 0]), 2)


class TestBuildTargetState:
    def test_two_qubit_real(self):
        target = canonicalize_target(0.6, 0.8, 2)
        np.testing.assert_allclose(
            build_target_state(target).amplitudes, [0.6, 0, 0, 0.8], atol=ATOL
        )

    def test_degenerate_alpha_one(self):
        target = canonicalize_target(1.0, 0.0, 3)
        expected = np.zeros(8)
        expected[0] = 1.0
        np.testing.assert_allclose(
            build_target_state(target).amplitudes, expected, atol=ATOL
        )

    def test_equatorial_m4_support(self):
        target = canonicalize_target(SQRT_HALF, SQRT_HALF * np.exp(1j * np.pi / 4), 4)
        amps = build_target_state(target).amplitudes
        nonzero = np.flatnonzero(np.abs(amps) > ATOL)
        assert list(nonzero) == [0, 15]


class TestRunTrial:
    def test_general_perp_branch_succeeds_with_one_bit(self):
        target = canonicalize_target(0.6, 0.8j, 2)
        record = run_trial(target, Outcome.PSI_PERP)
        assert record.success
        assert record.bits_sent == 1
        assert record.message.to_wire() == "0"
        assert record.fidelity >= 1.0 - 1e-10

    def test_general_psi_branch_aborts(self):
        target = canonicalize_target(0.6, 0.8j, 2)
        record = run_trial(target, Outcome.PSI)
        assert not record.success
        assert record.bits_sent == 0
        assert record.bob_state is None
        assert record.fidelity == 0.0
        assert record.message.to_wire() == "ABORT"

    def test_equatorial_psi_branch_succeeds_with_two_bits(self):
        target = canonicalize_target(SQRT_HALF, SQRT_HALF * np.exp(0.9j), 2)
        record = run_trial(target, Outcome.PSI)
        assert record.success
        assert record.bits_sent == 2
        assert record.message.to_wire() == "11"

    def test_real_psi_branch_succeeds_with_two_bits(self):
        target = canonicalize_target(0.6, -0.8, 4)
        record = run_trial(target, Outcome.PSI)
        assert record.success
        assert record.bits_sent == 2
        assert record.message.to_wire() == "10"

    def test_degenerate_targets_succeed_on_perp_branch(self):
        for alpha, beta in [(1.0, 0.0), (0.0, 1.0)]:
            target = canonicalize_target(alpha, beta, 2)
            record = run_trial(target, Outcome.PSI_PERP)
            assert record.success

    def test_sampled_trials_hit_both_branches(self):
        target = canonicalize_target(0.6, 0.8j, 2)
        rng = np.random.default_rng(73)
        outcomes = {run_trial(target, rng).outcome for _ in range(64)}
        assert outcomes == {Outcome.PSI, Outcome.PSI_PERP}

    def test_record_invariants_over_random_targets(self):
        rng = np.random.default_rng(79)
        for _ in range(150):
            kind = ["general", "real", "equatorial"][int(rng.integers(3))]
            target = random_target(rng, kind, m=int(rng.integers(2, 7)))
            branch = Outcome.PSI if rng.random() < 0.5 else Outcome.PSI_PERP
            record = run_trial(target, branch)
            assert record.bits_sent in (0, 1, 2)
            assert (record.bits_sent == 0) == (not record.success)
            assert record.success == (record.fidelity >= 1.0 - 1e-9)
            assert (record.bob_state is None) == record.message.is_abort
            assert record.bits_sent == record.message.bit_count

    def test_general_psi_failure_is_systematic(self):
        rng = np.random.default_rng(83)
        for _ in range(100):
            alpha, beta = random_general_pair(rng)
            target = canonicalize_target(alpha, beta, 2)
            assert not run_trial(target, Outcome.PSI).success

    def test_special_cases_succeed_on_both_branches(self):
        rng = np.random.default_rng(89)
        for draw in (random_real_pair, random_equatorial_pair):
            for _ in range(40):
                alpha, beta = draw(rng)
                target = canonicalize_target(alpha, beta, int(rng.integers(2, 6)))
                for branch in (Outcome.PSI, Outcome.PSI_PERP):
                    assert run_trial(target, branch).fidelity >= 1.0 - 1e-10

    def test_json_dict_shape(self):
        target = canonicalize_target(0.6, 0.8, 2)
        payload = run_trial(target, Outcome.PSI_PERP).to_json_dict()
        assert payload["outcome"] == "psi_perp"
        assert payload["message"] == "0"
        assert payload["success"] is True
        assert payload["bits_sent"] == 1
        assert payload["bob_state"]["n_qubits"] == 2
