#include "tbulge/kinematics.hpp"

#include <cmath>

namespace tbulge {

namespace {

// Solves E = omega + omega_c - 2 xi cos k for k in [0, pi].
// |cos k| > 1 means the channel is evanescent at this energy.
Real band_wavenumber(Real energy, Real omega, Real omega_c, Real xi, const char* channel) {
    const Real cos_k = (omega_c + omega - energy) / (2 * xi);
    if (std::abs(cos_k) > 1) {
        throw KinematicsError(std::string("channel ") + channel + " evanescent");
    }
    return std::acos(cos_k);
}

Kinematics finish(const RouterParams& p, Real energy, Real k_a, Real k_b) {
    Kinematics kin;
    kin.energy = energy;
    kin.k_a = k_a;
    kin.k_b = k_b;
    kin.v_a = 2 * p.xi_a * std::sin(k_a);
    kin.v_b = 2 * p.xi_b * std::sin(k_b);
    kin.delta_e = energy - p.omega_e;
    return kin;
}

}  // namespace

Kinematics kinematics_from_k(const RouterParams& params, Real k_a) {
    if (!(k_a > 0 && k_a < kPi)) {
        throw KinematicsError("k_a outside the open band interval (0, pi)");
    }
    const Real energy = params.omega_c + params.omega_a - 2 * params.xi_a * std::cos(k_a);
    const Real k_b = band_wavenumber(energy, params.omega_b, params.omega_c, params.xi_b, "b");
    return finish(params, energy, k_a, k_b);
}

Kinematics kinematics_from_energy(const RouterParams& params, Real energy) {
    const Real k_a = band_wavenumber(energy, params.omega_a, params.omega_c, params.xi_a, "a");
    const Real k_b = band_wavenumber(energy, params.omega_b, params.omega_c, params.xi_b, "b");
    return finish(params, energy, k_a, k_b);
}

EffectiveCouplings effective_couplings(const RouterParams& params, const Kinematics& kin) {
    EffectiveCouplings eff;
    const Real w0 = kin.energy - params.omega_f - params.omega_c;
    const Real dressed = kin.delta_e * w0;  // delta_e (E - omega_f - omega_c)
    const Real gc2 = params.g_c * params.g_c;
    eff.delta_poly = dressed - gc2;
    eff.b_tilde = gc2 - dressed;
    eff.at_pole = (eff.delta_poly == 0);
    if (!eff.at_pole) {
        const Real chi = kin.delta_e / eff.delta_poly;
        eff.big_g = params.g_a * params.g_b * chi;
        eff.v_pot_a = params.g_a * params.g_a * chi;
        eff.v_pot_b = params.g_b * params.g_b * chi;
    }
    return eff;
}

}  // namespace tbulge
