#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace jumpcp {

// Raised for invalid configuration: bad parameters, malformed config files,
// unsupported kernel operations. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised for malformed or inconsistent input data (CSV ingestion, NaN values,
// irregular grids). CLI maps this to exit code 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Index of the floor-grid point for a fraction theta of an n-grid, i.e. the
// number of observations up to rescaled time theta. Snaps values that sit
// within 1e-9 below an integer up to it, so that decimal inputs like 0.29
// (not exactly representable in binary) resolve to the intended index.
inline std::size_t floor_index(double theta, std::size_t n) {
    if (theta <= 0.0) return 0;
    double t = theta * static_cast<double>(n);
    double f = std::floor(t + 1e-9);
    if (f < 0.0) return 0;
    auto idx = static_cast<std::size_t>(f);
    return idx > n ? n : idx;
}

// FNV-1a, used for config provenance hashes.
inline std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 14695981039346656037ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 14695981039346656037ull) {
    return fnv1a(s.data(), s.size(), seed);
}

} // namespace jumpcp
