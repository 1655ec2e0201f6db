#ifndef TBULGE_SCATTERING_HPP
#define TBULGE_SCATTERING_HPP

#include <nlohmann/json_fwd.hpp>

#include "tbulge/kinematics.hpp"
#include "tbulge/params.hpp"
#include "tbulge/types.hpp"

namespace tbulge {

enum class Port { FromA, FromB };

const char* port_name(Port port);

struct ScatteringQuery {
    Port port = Port::FromA;
    Kinematics kinematics;
};

// Complex amplitudes of one stationary scattering solution. The FromA fields
// are (t, r, t_b); the FromB fields are (r_b, t_a), t_a being the common
// left/right value. standing_a is the amplitude A of the sin(k_b v) segment
// on sites 1..N; u_f, u_e are the atomic amplitudes.
struct AmplitudeSet {
    Port port = Port::FromA;
    Complex t = 0;
    Complex r = 0;
    Complex t_b = 0;
    Complex r_b = 0;
    Complex t_a = 0;
    Complex standing_a = 0;
    Complex u_f = 0;
    Complex u_e = 0;
};

// Flux-normalized probabilities. transfer carries the group-velocity weight
// ((v_b/v_a)|t_b|^2 resp. 2(v_a/v_b)|t_a|^2), which is what conservation
// requires for v_a != v_b; transfer_unweighted drops the velocity ratio.
struct CoefficientSet {
    Port port = Port::FromA;
    Real transmission = 0;         // T^a = |t|^2 (FromA only)
    Real reflection = 0;           // R^a = |r|^2 or R^b = |r_b|^2
    Real transfer = 0;             // T_b^a or T_a^b, velocity weighted
    Real transfer_unweighted = 0;  // |t_b|^2 or 2|t_a|^2
    Real conservation_residual = 0;
};

// Both solvers evaluate the junction boundary conditions as a 2x2 complex
// linear system in (t, A) with detuning-cleared coefficients, so dressed
// resonances (Delta = 0) and zero detuning are regular points.
AmplitudeSet amplitudes_from_a(const RouterParams& params, const Kinematics& kin);
AmplitudeSet amplitudes_from_b(const RouterParams& params, const Kinematics& kin);
AmplitudeSet amplitudes(const RouterParams& params, const ScatteringQuery& query);

CoefficientSet coefficients(const RouterParams& params, const Kinematics& kin,
                            const AmplitudeSet& amps);

enum class Waveguide { A, B };

// Evaluates the stationary wavefunction at one lattice site from the
// piecewise plane-wave / standing-wave form. Waveguide b indices start at 1.
Complex wavefunction(const RouterParams& params, const Kinematics& kin,
                     const AmplitudeSet& amps, Waveguide waveguide, long site);

nlohmann::json amplitudes_to_json(const AmplitudeSet& amps);
nlohmann::json coefficients_to_json(const CoefficientSet& coeffs);

}  // namespace tbulge

#endif
