#include "tbulge/scattering.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace tbulge {

namespace {

// Shared geometry of the junction boundary equations. With
//   s = sin(k_b N), phase = exp(-i k_b N), beta = (v_b/2) phase,
// the boundary rows for either incidence port read
//   i v_a U_0 - g_a U_f = source_a,
//   -beta A  - g_b U_f = source_b,
// and eliminating (U_f, U_e) brings in the atomic response
// chi = delta_e / Delta. chi is kept as the cleared pair (d1, d2) with
// chi = d2/d1 so that zero detuning and the dressed resonance are handled
// without dividing: d1 = Delta, d2 = delta_e, except when g_c = 0 where the
// common factor delta_e cancels and (d1, d2) = (E - omega_f - omega_c, 1).
struct JunctionContext {
    Real s = 0;
    Real cos_n = 0;
    Complex phase = 0;
    Complex beta = 0;
    Real d1 = 0;
    Real d2 = 0;
    Real w0 = 0;       // E - omega_f - omega_c
    Real delta_poly = 0;
    Complex den = 0;   // i v_a (beta d1 + g_b^2 d2 s) - g_a^2 d2 beta
};

JunctionContext junction_context(const RouterParams& p, const Kinematics& kin) {
    if (kin.v_a == 0 || kin.v_b == 0) {
        throw KinematicsError("degenerate channel: group velocity vanishes");
    }
    JunctionContext ctx;
    const Real arg = kin.k_b * p.n_junction;
    ctx.s = std::sin(arg);
    ctx.cos_n = std::cos(arg);
    ctx.phase = Complex(ctx.cos_n, -ctx.s);
    ctx.beta = (kin.v_b / 2) * ctx.phase;
    ctx.w0 = kin.energy - p.omega_f - p.omega_c;
    ctx.delta_poly = kin.delta_e * ctx.w0 - p.g_c * p.g_c;
    if (p.g_c == 0) {
        ctx.d1 = ctx.w0;
        ctx.d2 = 1;
    } else {
        ctx.d1 = ctx.delta_poly;
        ctx.d2 = kin.delta_e;
    }
    ctx.den = kImag * kin.v_a * (ctx.beta * ctx.d1 + p.g_b * p.g_b * ctx.d2 * ctx.s) -
              p.g_a * p.g_a * ctx.d2 * ctx.beta;
    return ctx;
}

// Atomic amplitude of |e>, evaluated on whichever cleared route is regular.
Complex excited_amplitude(const RouterParams& p, const Kinematics& kin,
                          const JunctionContext& ctx, Complex u_0, Complex u_n,
                          Complex u_f) {
    if (p.g_c == 0) return 0;
    if (ctx.delta_poly != 0) {
        return p.g_c * (p.g_a * u_0 + p.g_b * u_n) / ctx.delta_poly;
    }
    // Delta = 0 with g_c != 0 forces delta_e != 0.
    return p.g_c * u_f / kin.delta_e;
}

}  // namespace

const char* port_name(Port port) { return port == Port::FromA ? "a" : "b"; }

AmplitudeSet amplitudes_from_a(const RouterParams& params, const Kinematics& kin) {
    const JunctionContext ctx = junction_context(params, kin);
    AmplitudeSet amps;
    amps.port = Port::FromA;
    if (params.g_a == 0) {
        // Junction invisible from waveguide a: free propagation.
        amps.t = 1;
        return amps;
    }
    amps.r = params.g_a * params.g_a * ctx.d2 * ctx.beta / ctx.den;
    amps.t = Real(1) + amps.r;
    amps.standing_a = -kImag * kin.v_a * params.g_a * params.g_b * ctx.d2 / ctx.den;
    amps.t_b = amps.standing_a * ctx.s * ctx.phase;
    amps.u_f = kImag * kin.v_a * params.g_a * ctx.d2 * ctx.beta / ctx.den;
    amps.u_e = excited_amplitude(params, kin, ctx, amps.t, amps.standing_a * ctx.s, amps.u_f);
    return amps;
}

AmplitudeSet amplitudes_from_b(const RouterParams& params, const Kinematics& kin) {
    const JunctionContext ctx = junction_context(params, kin);
    AmplitudeSet amps;
    amps.port = Port::FromB;
    const bool bound_in_continuum =
        params.g_a == 0 && ctx.s == 0 && ctx.d1 == 0;
    if (params.g_b == 0 || bound_in_continuum) {
        // Bare semi-infinite chain: total reflection off the hard wall.
        amps.r_b = -1;
        amps.standing_a = Complex(0, -2);
        return amps;
    }
    amps.t_a = Real(-2) * kImag * ctx.beta * params.g_a * params.g_b * ctx.d2 * ctx.s / ctx.den;
    amps.standing_a = Real(-2) * kImag * ctx.beta *
                      (kImag * kin.v_a * ctx.d1 - params.g_a * params.g_a * ctx.d2) / ctx.den;
    amps.r_b = (amps.standing_a * ctx.s - ctx.phase) * ctx.phase;
    amps.u_f = Real(2) * kin.v_a * params.g_b * ctx.d2 * ctx.s * ctx.beta / ctx.den;
    amps.u_e = excited_amplitude(params, kin, ctx, amps.t_a, amps.standing_a * ctx.s, amps.u_f);
    return amps;
}

AmplitudeSet amplitudes(const RouterParams& params, const ScatteringQuery& query) {
    return query.port == Port::FromA ? amplitudes_from_a(params, query.kinematics)
                                     : amplitudes_from_b(params, query.kinematics);
}

CoefficientSet coefficients(const RouterParams&, const Kinematics& kin,
                            const AmplitudeSet& amps) {
    CoefficientSet c;
    c.port = amps.port;
    if (amps.port == Port::FromA) {
        c.transmission = std::norm(amps.t);
        c.reflection = std::norm(amps.r);
        c.transfer_unweighted = std::norm(amps.t_b);
        c.transfer = (kin.v_b / kin.v_a) * c.transfer_unweighted;
        c.conservation_residual = std::abs(c.transmission + c.reflection + c.transfer - 1);
    } else {
        c.reflection = std::norm(amps.r_b);
        c.transfer_unweighted = 2 * std::norm(amps.t_a);
        c.transfer = (kin.v_a / kin.v_b) * c.transfer_unweighted;
        c.conservation_residual = std::abs(c.reflection + c.transfer - 1);
    }
    return c;
}

Complex wavefunction(const RouterParams& params, const Kinematics& kin,
                     const AmplitudeSet& amps, Waveguide waveguide, long site) {
    if (waveguide == Waveguide::A) {
        const Real ku = kin.k_a * static_cast<Real>(site);
        if (amps.port == Port::FromA) {
            if (site < 0) return std::exp(kImag * ku) + amps.r * std::exp(-kImag * ku);
            return amps.t * std::exp(kImag * ku);
        }
        return amps.t_a * std::exp(kImag * kin.k_a * static_cast<Real>(std::labs(site)));
    }
    if (site < 1) {
        throw ValidationError("waveguide b site index must be >= 1");
    }
    const Real kv = kin.k_b * static_cast<Real>(site);
    if (site <= params.n_junction) {
        return amps.standing_a * std::sin(kv);
    }
    if (amps.port == Port::FromA) {
        return amps.t_b * std::exp(kImag * kv);
    }
    return std::exp(-kImag * kv) + amps.r_b * std::exp(kImag * kv);
}

namespace {

nlohmann::json complex_to_json(Complex z) {
    return nlohmann::json::array({z.real(), z.imag()});
}

}  // namespace

nlohmann::json amplitudes_to_json(const AmplitudeSet& amps) {
    nlohmann::json j{{"port", port_name(amps.port)},
                     {"standing_A", complex_to_json(amps.standing_a)},
                     {"u_f", complex_to_json(amps.u_f)},
                     {"u_e", complex_to_json(amps.u_e)}};
    if (amps.port == Port::FromA) {
        j["t"] = complex_to_json(amps.t);
        j["r"] = complex_to_json(amps.r);
        j["t_b"] = complex_to_json(amps.t_b);
    } else {
        j["r_b"] = complex_to_json(amps.r_b);
        j["t_a"] = complex_to_json(amps.t_a);
    }
    return j;
}

nlohmann::json coefficients_to_json(const CoefficientSet& c) {
    nlohmann::json j{{"port", port_name(c.port)},
                     {"conservation_residual", c.conservation_residual}};
    if (c.port == Port::FromA) {
        j["T_a"] = c.transmission;
        j["R_a"] = c.reflection;
        j["T_ba"] = c.transfer;
        j["T_ba_unweighted"] = c.transfer_unweighted;
    } else {
        j["R_b"] = c.reflection;
        j["T_ab"] = c.transfer;
        j["T_ab_unweighted"] = c.transfer_unweighted;
    }
    return j;
}

}  // namespace tbulge
