#include "jumpcp/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace jumpcp {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
    char* end = nullptr;
    double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0' || std::isnan(x))
        throw ConfigError("config: key '" + key + "' is not a number: '" + v + "'");
    return x;
}

} // namespace

Config Config::from_stream(std::istream& is, const std::string& origin) {
    Config cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: " + origin + ":" + std::to_string(lineno) +
                              ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: " + origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.values_[key] = value;
    }
    return cfg;
}

Config Config::from_file(const std::string& filename) {
    std::ifstream is(filename);
    if (!is) throw ConfigError("config: cannot open " + filename);
    return from_stream(is, filename);
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : to_double(key, it->second);
}

std::size_t Config::get_size(const std::string& key, std::size_t fallback) const {
    double v = get_double(key, static_cast<double>(fallback));
    if (v < 0.0 || v != std::floor(v))
        throw ConfigError("config: key '" + key + "' must be a non-negative integer");
    return static_cast<std::size_t>(v);
}

std::uint64_t Config::get_u64(const std::string& key, std::uint64_t fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    char* end = nullptr;
    unsigned long long v = std::strtoull(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0')
        throw ConfigError("config: key '" + key + "' must be an unsigned integer");
    return static_cast<std::uint64_t>(v);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config: key '" + key + "' must be a boolean");
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(to_double("<list>", item));
    }
    return out;
}

std::vector<double> Config::get_list(const std::string& key,
                                     const std::vector<double>& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_double_list(it->second);
}

TailKernel kernel_from_config(const Config& cfg, const std::string& prefix) {
    std::string variant = cfg.get_string(prefix + "kernel", "sim");
    if (variant == "sim") {
        SimKernel k;
        k.theta0 = cfg.get_double(prefix + "theta0", 1.0);
        k.amplitude = cfg.get_double(prefix + "amplitude", 0.0);
        k.smoothness = cfg.get_double(prefix + "smoothness", 1.0);
        if (k.theta0 < 0.0 || k.theta0 > 1.0)
            throw ConfigError("kernel: theta0 in [0, 1] required");
        if (k.amplitude < 0.0) throw ConfigError("kernel: amplitude >= 0 required");
        if (!(k.smoothness > 0.0)) throw ConfigError("kernel: smoothness > 0 required");
        return k;
    }
    if (variant == "stable") {
        double a0 = cfg.get_double(prefix + "a0", 1.0);
        double b0 = cfg.get_double(prefix + "beta0", 0.5);
        if (!(a0 > 0.0)) throw ConfigError("kernel: a0 > 0 required");
        if (!(b0 > 0.0 && b0 < 2.0)) throw ConfigError("kernel: beta0 in (0, 2) required");
        if (!cfg.has(prefix + "a1") && !cfg.has(prefix + "beta1"))
            return StableKernel::constant(a0, b0);
        double a1 = cfg.get_double(prefix + "a1", a0);
        double b1 = cfg.get_double(prefix + "beta1", b0);
        double theta0 = cfg.get_double(prefix + "theta0", 0.5);
        if (!(a1 > 0.0) || !(b1 > 0.0 && b1 < 2.0) || theta0 <= 0.0 || theta0 >= 1.0)
            throw ConfigError("kernel: invalid piecewise stable parameters");
        return StableKernel::piecewise(a0, b0, a1, b1, theta0);
    }
    if (variant == "abrupt_exp") {
        double c1 = cfg.get_double(prefix + "c1", 1.0);
        double c2 = cfg.get_double(prefix + "c2", 2.0);
        double theta0 = cfg.get_double(prefix + "theta0", 0.5);
        if (c1 < 0.0 || c2 < 0.0 || theta0 <= 0.0 || theta0 >= 1.0)
            throw ConfigError("kernel: invalid abrupt_exp parameters");
        return AbruptKernel{[c1](double z) { return c1 * std::exp(-std::abs(z)); },
                            [c2](double z) { return c2 * std::exp(-std::abs(z)); }, theta0};
    }
    if (variant == "constant_exp") {
        double c = cfg.get_double(prefix + "c", 1.0);
        if (c < 0.0) throw ConfigError("kernel: c >= 0 required");
        return ConstantKernel{[c](double z) { return c * std::exp(-std::abs(z)); }};
    }
    throw ConfigError("kernel: unknown variant '" + variant + "'");
}

ZGrid zgrid_from_config(const Config& cfg, bool continuous, double delta_n) {
    if (cfg.has("zgrid")) {
        auto values = cfg.get_list("zgrid", {});
        if (values.empty()) throw ConfigError("config: zgrid list is empty");
        if (cfg.has("eps")) return ZGrid(cfg.get_double("eps", 0.0), std::move(values));
        return ZGrid(std::move(values));
    }
    return continuous ? ZGrid::continuous_default(delta_n) : ZGrid::pure_jump_default();
}

} // namespace jumpcp
