#include "jumpcp/simulate.hpp"

#include <cmath>
#include <cstdio>

namespace jumpcp {

namespace {

std::string kernel_tag(const TailKernel& kernel) {
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, AbruptKernel>) {
                return "abrupt:" + std::to_string(k.theta0);
            } else if constexpr (std::is_same_v<K, StableKernel>) {
                return "stable:" + std::to_string(k.amplitude(0.0)) + ":" +
                       std::to_string(k.index(0.0)) + ":" + std::to_string(k.amplitude(1.0)) +
                       ":" + std::to_string(k.index(1.0));
            } else if constexpr (std::is_same_v<K, SimKernel>) {
                return "sim:" + std::to_string(k.theta0) + ":" + std::to_string(k.amplitude) +
                       ":" + std::to_string(k.smoothness);
            } else {
                return "constant";
            }
        },
        kernel);
}

} // namespace

std::uint64_t PathConfig::hash() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "n=%zu;d=%.17g;m=%zu;eps=%.17g;cont=%d;b=%.17g;s=%.17g;", n,
                  delta_n, subsample_factor, trunc_eps, continuous.has_value() ? 1 : 0,
                  continuous ? continuous->drift : 0.0, continuous ? continuous->volatility : 0.0);
    std::uint64_t h = fnv1a(buf, std::char_traits<char>::length(buf));
    return fnv1a(kernel_tag(kernel), h);
}

SamplePath simulate_path(const PathConfig& config) {
    if (config.n < 1) throw ConfigError("simulate: n >= 1 required");
    if (!(config.delta_n > 0.0)) throw ConfigError("simulate: delta_n > 0 required");
    if (config.subsample_factor < 1) throw ConfigError("simulate: subsample factor >= 1");
    if (!(config.trunc_eps > 0.0)) throw ConfigError("simulate: trunc_eps > 0 required");

    const std::size_t m = config.subsample_factor;
    const std::size_t total = m * config.n;
    const double dt = config.delta_n / static_cast<double>(m);
    const double eps = config.trunc_eps;

    SamplePath path;
    path.delta_n = config.delta_n;
    path.seed = config.seed;
    path.config_hash = config.hash();
    path.values.assign(config.n + 1, 0.0);

    double level = 0.0;
    std::size_t obs = 0;
    for (std::size_t j = 1; j <= total; ++j) {
        double y = static_cast<double>(j) / static_cast<double>(total);
        double lam_pos = tail(config.kernel, y, eps);
        double lam_neg = tail(config.kernel, y, -eps);
        double lam = lam_pos + lam_neg;
        if (lam * dt > 1e9)
            throw ConfigError("simulate: jump intensity per sub-increment exceeds 1e9");
        if (lam > 0.0) {
            SplitRng rng(config.seed, StreamPurpose::jumps, j);
            std::uint64_t count = rng.poisson(lam * dt);
            if (count > 0 && !has_inverse_tail(config.kernel, lam_neg > 0.0))
                throw ConfigError("simulate: kernel variant has no invertible tail");
            for (std::uint64_t c = 0; c < count; ++c) {
                bool positive = lam_neg == 0.0 || rng.uniform01() * lam < lam_pos;
                if (positive) {
                    double u = rng.uniform_pos() * lam_pos;
                    level += inverse_tail(config.kernel, y, u);
                } else {
                    double u = rng.uniform_pos() * lam_neg;
                    level += inverse_tail_negative(config.kernel, y, u);
                }
            }
        }
        if (j % m == 0) path.values[++obs] = level;
    }
    return path;
}

double truncation_bias_per_subincrement(const PathConfig& config) {
    const double dt = config.delta_n / static_cast<double>(config.subsample_factor);
    double worst = 0.0;
    const std::size_t sweep = 64;
    for (std::size_t i = 0; i <= sweep; ++i) {
        double y = static_cast<double>(i) / static_cast<double>(sweep);
        worst = std::max(worst, small_jump_mass(config.kernel, y, config.trunc_eps));
    }
    return dt * worst;
}

std::vector<double> continuous_component(const PathConfig& config) {
    if (!config.continuous) throw ConfigError("continuous component not configured");
    const double b = config.continuous->drift;
    const double sigma = config.continuous->volatility;
    const double sd = sigma * std::sqrt(config.delta_n);
    std::vector<double> s(config.n + 1, 0.0);
    for (std::size_t i = 1; i <= config.n; ++i) {
        SplitRng rng(config.seed, StreamPurpose::continuous, i);
        s[i] = s[i - 1] + b * config.delta_n + sd * rng.gaussian();
    }
    return s;
}

SamplePath add_continuous(const SamplePath& path, const PathConfig& config) {
    auto s = continuous_component(config);
    if (s.size() != path.values.size())
        throw ConfigError("add_continuous: path length does not match the configuration");
    SamplePath out = path;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += s[i];
    return out;
}

double exact_halfstable_increment(double gamma, double dt, SplitRng& rng) {
    if (!(gamma >= 0.0)) throw ConfigError("halfstable: gamma >= 0 required");
    if (dt == 0.0 || gamma == 0.0) return 0.0;
    double z = rng.gaussian();
    while (z == 0.0) z = rng.gaussian();
    return 0.5 * gamma * dt * dt / (z * z);
}

} // namespace jumpcp
