#include "tbulge/params.hpp"

#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

namespace tbulge {

namespace {

void require_finite(const char* name, Real value) {
    if (!std::isfinite(value)) {
        throw ValidationError(std::string(name) + ": must be finite");
    }
}

}  // namespace

RouterParams validate(const RouterParams& params) {
    require_finite("omega_a", params.omega_a);
    require_finite("omega_b", params.omega_b);
    require_finite("omega_c", params.omega_c);
    require_finite("omega_e", params.omega_e);
    require_finite("omega_f", params.omega_f);
    require_finite("xi_a", params.xi_a);
    require_finite("xi_b", params.xi_b);
    require_finite("g_a", params.g_a);
    require_finite("g_b", params.g_b);
    require_finite("g_c", params.g_c);
    if (params.xi_a <= 0) throw ValidationError("xi_a: hopping must be positive");
    if (params.xi_b <= 0) throw ValidationError("xi_b: hopping must be positive");
    if (params.g_a < 0) throw ValidationError("g_a: coupling must be non-negative");
    if (params.g_b < 0) throw ValidationError("g_b: coupling must be non-negative");
    if (params.g_c < 0) throw ValidationError("g_c: coupling must be non-negative");
    if (params.n_junction < 1) throw ValidationError("n_junction: junction index >= 1 required");
    return params;
}

RouterParams symmetric_base_params() {
    const Real rt2 = std::sqrt(2.0);
    RouterParams p;
    p.omega_a = rt2;
    p.omega_b = rt2;
    p.omega_c = 3 * rt2;
    p.omega_f = 3 * rt2;
    p.omega_e = 4 * rt2;
    p.xi_a = 2;
    p.xi_b = 2;
    p.g_a = 2;
    p.g_b = 2;
    p.g_c = std::sqrt(20.0);
    p.n_junction = 3;
    return p;
}

nlohmann::json params_to_json(const RouterParams& p) {
    return nlohmann::json{
        {"omega_a", p.omega_a}, {"omega_b", p.omega_b}, {"omega_c", p.omega_c},
        {"omega_e", p.omega_e}, {"omega_f", p.omega_f}, {"xi_a", p.xi_a},
        {"xi_b", p.xi_b},       {"g_a", p.g_a},         {"g_b", p.g_b},
        {"g_c", p.g_c},         {"n_junction", p.n_junction},
    };
}

RouterParams params_from_json(const nlohmann::json& j) {
    static const std::set<std::string> known = {
        "omega_a", "omega_b", "omega_c", "omega_e", "omega_f", "xi_a",
        "xi_b",    "g_a",     "g_b",     "g_c",     "n_junction"};
    if (!j.is_object()) throw ValidationError("params: expected a JSON object");
    for (const auto& item : j.items()) {
        if (!known.count(item.key())) {
            throw ValidationError("params: unknown key '" + item.key() + "'");
        }
    }
    RouterParams p;
    auto get_real = [&](const char* key) -> Real {
        if (!j.contains(key)) throw ValidationError(std::string("params: missing key '") + key + "'");
        const auto& v = j.at(key);
        if (!v.is_number()) throw ValidationError(std::string("params: '") + key + "' must be a number");
        return v.get<Real>();
    };
    p.omega_a = get_real("omega_a");
    p.omega_b = get_real("omega_b");
    p.omega_c = get_real("omega_c");
    p.omega_e = get_real("omega_e");
    p.omega_f = get_real("omega_f");
    p.xi_a = get_real("xi_a");
    p.xi_b = get_real("xi_b");
    p.g_a = get_real("g_a");
    p.g_b = get_real("g_b");
    p.g_c = get_real("g_c");
    if (!j.contains("n_junction")) throw ValidationError("params: missing key 'n_junction'");
    if (!j.at("n_junction").is_number_integer()) {
        throw ValidationError("params: 'n_junction' must be an integer");
    }
    p.n_junction = j.at("n_junction").get<int>();
    return validate(p);
}

}  // namespace tbulge
