#ifndef TBULGE_TYPES_HPP
#define TBULGE_TYPES_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tbulge {

using Real = double;
using Complex = std::complex<double>;

inline constexpr Real kPi = std::numbers::pi_v<Real>;
inline constexpr Complex kImag{0.0, 1.0};

inline constexpr const char* kVersion = "0.1.0";

// Bad static parameters (field out of range, malformed config).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Kinematic rejection: evanescent or degenerate channel at the requested energy.
struct KinematicsError : std::runtime_error {
    explicit KinematicsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lattice solver failure (singular system, inconsistent fit, packet mishap).
struct OracleError : std::runtime_error {
    explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tbulge

#endif
