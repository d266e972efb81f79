"""Constructive bijections and involutions on growth words and permutations."""

from .eta import active_slot_profile, eta, eta_inv, rebar
from .involutions import (PsiStep, fhv_key, fhv_table, phi_fhv, prefix, psi,
                          psi_traced, shift_down, shift_up)
from .sweep import (SweepRound, SweepTrace, bad_pair_type, gamma_sweep,
                    gamma_sweep_inv, phi_case, phi_rgf, phi_rgf_inv, swap, zeta,
                    zeta_inv)
from .xi import admissible, delta_shift, lr_maxima, xi, xi_inv

__all__ = [
    "active_slot_profile", "eta", "eta_inv", "rebar",
    "PsiStep", "fhv_key", "fhv_table", "phi_fhv", "prefix", "psi", "psi_traced",
    "shift_down", "shift_up",
    "SweepRound", "SweepTrace", "bad_pair_type", "gamma_sweep", "gamma_sweep_inv",
    "phi_case", "phi_rgf", "phi_rgf_inv", "swap", "zeta", "zeta_inv",
    "admissible", "delta_shift", "lr_maxima", "xi", "xi_inv",
]
