#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace permix {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Numeric policy. Unit-circle classification of floating spectra uses a band
// wide enough to absorb QR cluster noise while staying far below the smallest
// genuine off-circle modulus these integer matrices can produce.
inline constexpr double kUnitCircleTol = 1e-6;
inline constexpr double kEigenSolveTol = 1e-9;
inline constexpr int kDefaultDimCap = 4096;
inline constexpr int kExactSpectrumCap = 12;   // exact charpoly path for AP up to this N
inline constexpr int kOracleSubsetCap = 20;    // subset-enumeration oracle bound
inline constexpr int kSweepCapDefault = 10;    // exhaustive S_N sweeps without --long-run
inline constexpr int kCensusCapDefault = 8;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ComputeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline std::string rational_string(const Rational& r) {
    return r.str();
}

}  // namespace permix
