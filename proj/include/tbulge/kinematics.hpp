#ifndef TBULGE_KINEMATICS_HPP
#define TBULGE_KINEMATICS_HPP

#include "tbulge/params.hpp"
#include "tbulge/types.hpp"

namespace tbulge {

// Energy, wavenumbers and group velocities of one scattering query. Both
// band relations E = omega_c + omega_d - 2 xi_d cos k_d (d = a, b) hold for
// the same E.
struct Kinematics {
    Real energy = 0;   // total eigenenergy E
    Real k_a = 0;      // wavenumber in waveguide a, in (0, pi)
    Real k_b = 0;      // wavenumber in waveguide b, in [0, pi]
    Real v_a = 0;      // group velocity 2 xi_a sin k_a
    Real v_b = 0;      // group velocity 2 xi_b sin k_b
    Real delta_e = 0;  // detuning E - omega_e
};

// Canonical entry point: wavenumber on waveguide a fixes E; k_b is solved
// from the waveguide-b band. Throws KinematicsError when channel b has no
// propagating solution.
Kinematics kinematics_from_k(const RouterParams& params, Real k_a);

// Inverse entry point accepting the total energy instead.
Kinematics kinematics_from_energy(const RouterParams& params, Real energy);

// Junction couplings obtained by eliminating the atomic amplitudes.
// delta_poly is the dressed-resonance polynomial
//   Delta = delta_e * (E - omega_f - omega_c) - g_c^2,
// b_tilde its exact negation (the detuning-cleared bracket numerator).
// When Delta = 0 the G/V fields are meaningless and at_pole is set.
struct EffectiveCouplings {
    Real delta_poly = 0;
    Real b_tilde = 0;
    bool at_pole = false;
    Complex big_g = 0;  // G = g_a g_b delta_e / Delta
    Real v_pot_a = 0;   // V_a = g_a^2 delta_e / Delta
    Real v_pot_b = 0;   // V_b = g_b^2 delta_e / Delta
};

EffectiveCouplings effective_couplings(const RouterParams& params, const Kinematics& kin);

}  // namespace tbulge

#endif
