"""Walk through the quantum channel and the sender's measurement.

The shared resource is a single Bell pair. The sender picks a measurement
basis built from the target coefficients; the two-branch decomposition of the
Bell state in that basis is what makes the whole protocol work.
"""

import numpy as np

from bellrsp import (
    Outcome,
    basis_from_target,
    check_decomposition,
    make_bell,
    measure_in_basis,
)

alpha, beta = 0.6, 0.8j

print("Shared channel (one Bell pair):")
print("  amplitudes:", np.round(make_bell().amplitudes, 8))

basis = basis_from_target(alpha, beta)
print(f"\nTarget pair: alpha = {alpha}, beta = {beta}")
print("Sender's basis:")
print("  psi      =", basis.psi)
print("  psi_perp =", basis.psi_perp)

print("\nRewriting the Bell state in that basis must reproduce it exactly:")
print(f"  max reconstruction deviation = {check_decomposition(alpha, beta):.3e}")

print("\nForcing each measurement branch on the sender's qubit:")
for branch in (Outcome.PSI_PERP, Outcome.PSI):
    outcome, prob, collapsed = measure_in_basis(make_bell(), 0, basis, branch)
    print(f"  {outcome.value:<9} probability {prob:.6f}  "
          f"receiver's qubit collapses to {np.round(collapsed.amplitudes, 8)}")

print("\nNote the psi branch leaves (alpha, conj(beta)): the conjugate is why")
print("a general target cannot be fixed by any outcome-independent gate.")
