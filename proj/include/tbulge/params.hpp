#ifndef TBULGE_PARAMS_HPP
#define TBULGE_PARAMS_HPP

#include <nlohmann/json_fwd.hpp>

#include "tbulge/types.hpp"

namespace tbulge {

// Static model parameters. Everything is expressed in multiples of a common
// hopping unit, so there is no physical unit system attached.
struct RouterParams {
    Real omega_a = 0;  // cavity frequency, infinite waveguide a
    Real omega_b = 0;  // cavity frequency, semi-infinite waveguide b
    Real omega_c = 0;  // auxiliary c-mode frequency
    Real omega_e = 0;  // upper atomic level |e>
    Real omega_f = 0;  // intermediate atomic level |f>
    Real xi_a = 1;     // hopping strength in waveguide a (> 0)
    Real xi_b = 1;     // hopping strength in waveguide b (> 0)
    Real g_a = 0;      // coupling of site u=0 to |f> (>= 0)
    Real g_b = 0;      // coupling of site v=N to |f> (>= 0)
    Real g_c = 0;      // coupling of |f> to |e> through the c mode (>= 0)
    int n_junction = 1;  // junction cavity index N on waveguide b (>= 1)
};

// Checks every invariant; returns the params unchanged or throws
// ValidationError naming the violated field.
RouterParams validate(const RouterParams& params);

// Reference parameter set used throughout: symmetric waveguides with
// omega_a=omega_b=sqrt(2), omega_c=omega_f=3*sqrt(2), omega_e=4*sqrt(2),
// xi_a=xi_b=2, N=3, and couplings at the balanced optimum g_a=g_b=2,
// g_c=sqrt(20).
RouterParams symmetric_base_params();

// Strict JSON (de)serialization: exactly the field names above, unknown keys
// rejected.
nlohmann::json params_to_json(const RouterParams& params);
RouterParams params_from_json(const nlohmann::json& j);

}  // namespace tbulge

#endif
