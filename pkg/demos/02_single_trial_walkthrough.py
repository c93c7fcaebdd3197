"""Trace complete protocol runs, one branch at a time.

A trial is: measure, encode the outcome as classical bits, apply the
receiver's correction, fan out over fresh ancillas, compare with the goal.
"""

from bellrsp import Outcome, canonicalize_target, run_trial
from bellrsp.cli import format_state


def show(title, target, branch):
    record = run_trial(target, branch)
    print(f"{title}")
    print(f"  outcome    {record.outcome.value}")
    plural = "s" if record.bits_sent != 1 else ""
    print(f"  message    {record.message.to_wire()!r} "
          f"({record.bits_sent} bit{plural})")
    if record.bob_state is None:
        print("  receiver   (run aborted, nothing to correct)")
    else:
        print(f"  receiver   {format_state(record.bob_state)}")
    print(f"  fidelity   {record.fidelity:.12f}   success: {record.success}\n")


general = canonicalize_target(0.6, 0.8j, m=3)
print(f"General target, m=3, case: {general.case_tag.value}\n")
show("psi_perp branch (always correctable):", general, Outcome.PSI_PERP)
show("psi branch (uncorrectable for a general pair):", general, Outcome.PSI)

real = canonicalize_target(0.6, -0.8, m=3)
print(f"Real-coefficient target, case: {real.case_tag.value}\n")
show("psi branch (the collapsed pair is already right):", real, Outcome.PSI)

equatorial = canonicalize_target(0.70710678, complex(0.5, 0.5), m=3)
print(f"Equatorial target, case: {equatorial.case_tag.value}, "
      f"theta = {equatorial.theta:.6f}\n")
show("psi branch (bit flip fixes it up to a global phase):",
     equatorial, Outcome.PSI)
