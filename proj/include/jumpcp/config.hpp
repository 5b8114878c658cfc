#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jumpcp/kernel.hpp"
#include "jumpcp/zgrid.hpp"

namespace jumpcp {

// Flat key = value configuration; '#' starts a comment, blank lines are
// skipped. Later assignments override earlier ones.
class Config {
public:
    Config() = default;
    static Config from_file(const std::string& filename);
    static Config from_stream(std::istream& is, const std::string& origin = "<config>");

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::size_t get_size(const std::string& key, std::size_t fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_list(const std::string& key,
                                 const std::vector<double>& fallback) const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

std::vector<double> parse_double_list(const std::string& text);

// Builds a kernel from configuration keys:
//   kernel = sim        theta0, amplitude, smoothness
//   kernel = stable     a0, beta0 [, a1, beta1, theta0]   (piecewise constant)
//   kernel = abrupt_exp c1, c2, theta0     tails nu_j(z) = c_j exp(-|z|)
//   kernel = constant_exp c                tail  nu(z)   = c   exp(-|z|)
TailKernel kernel_from_config(const Config& cfg, const std::string& prefix = "");

// Tail grid from config: explicit "zgrid" list, otherwise the pure-jump
// default, or the sqrt(delta_n)-scaled default when continuous data is flagged.
ZGrid zgrid_from_config(const Config& cfg, bool continuous, double delta_n);

} // namespace jumpcp
