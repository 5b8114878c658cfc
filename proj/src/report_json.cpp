#include "jumpcp/report_json.hpp"

#include <cstdio>

#include <json.hpp>

#include "jumpcp/estimator.hpp"

namespace jumpcp {

using ordered_json = nlohmann::ordered_json;

namespace {

// Shortest round-trip representation; used for labels and axis keys.
std::string shortest(double x) { return nlohmann::json(x).dump(); }

const char* multiplier_name(const MultiplierKind& m) {
    switch (m.law) {
        case MultiplierKind::Law::rademacher: return "rademacher";
        case MultiplierKind::Law::standard_normal: return "normal";
        default: return "custom";
    }
}

std::string sim_param(const TailKernel& kernel, double SimKernel::*field) {
    if (const auto* k = std::get_if<SimKernel>(&kernel))
        return shortest(k->*field);
    return "";
}

} // namespace

std::string test_report_json(const TestReport& report) {
    ordered_json j;
    j["kind"] = report.kind;
    if (report.kind == "local") j["z0"] = report.z0;
    j["statistic"] = report.statistic;
    j["critical_value"] = report.critical_value;
    j["reject"] = report.reject;
    j["p_value"] = report.p_value;
    j["alpha"] = report.alpha;
    j["bootstrap"] = {{"B", report.B},
                      {"draws_mean", report.draws_mean},
                      {"draws_sd", report.draws_sd},
                      {"draws_max", report.draws_max}};
    j["seed"] = report.seed;
    return j.dump(2) + "\n";
}

std::string estimate_json(const ChangePointEstimate& estimate) {
    ordered_json j;
    j["theta_hat"] = estimate.theta_hat;
    j["lambda_used"] = estimate.lambda_used;
    j["stages"] = {{"lambda_in", estimate.lambda_in}, {"theta_in", estimate.theta_in}};
    j["config"] = {{"theta_pre", estimate.theta_pre},
                   {"alpha", estimate.alpha},
                   {"r", estimate.r},
                   {"B", estimate.B}};
    j["seed"] = estimate.seed;
    return j.dump(2) + "\n";
}

std::string analysis_json(const PrefixStats& stats, const std::vector<double>& sup_curve) {
    std::size_t n = stats.n();
    ordered_json j;
    j["n"] = n;
    j["delta_n"] = stats.k_n() / static_cast<double>(n);
    j["k_n"] = stats.k_n();
    j["zgrid"] = stats.zgrid().values();
    ordered_json thetas = ordered_json::array();
    for (std::size_t t = 0; t <= n; ++t)
        thetas.push_back(static_cast<double>(t) / static_cast<double>(n));
    j["theta_grid"] = std::move(thetas);
    j["sup_d_n"] = sup_curve;
    ordered_json table = ordered_json::object();
    for (std::size_t k = 0; k < stats.zgrid().size(); ++k) {
        ordered_json col = ordered_json::array();
        for (std::size_t t = 0; t <= n; ++t) col.push_back(stats.column(k)[t] / stats.k_n());
        table[shortest(stats.zgrid()[k])] = std::move(col);
    }
    j["u_n"] = std::move(table);
    return j.dump(2) + "\n";
}

std::string analysis_csv(const PrefixStats& stats, const std::vector<double>& sup_curve) {
    std::string out = "theta,sup_d_n";
    char buf[64];
    for (std::size_t k = 0; k < stats.zgrid().size(); ++k)
        out += ",u_n_z" + shortest(stats.zgrid()[k]);
    out += "\n";
    std::size_t n = stats.n();
    for (std::size_t t = 0; t <= n; ++t) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g",
                      static_cast<double>(t) / static_cast<double>(n), sup_curve[t]);
        out += buf;
        for (std::size_t k = 0; k < stats.zgrid().size(); ++k) {
            std::snprintf(buf, sizeof(buf), ",%.17g", stats.column(k)[t] / stats.k_n());
            out += buf;
        }
        out += "\n";
    }
    return out;
}

namespace {

ordered_json mc_config_json(const McConfig& cfg) {
    ordered_json j;
    j["label"] = cfg.label;
    j["n"] = cfg.n;
    j["delta_n"] = cfg.delta_n;
    j["k_n"] = static_cast<double>(cfg.n) * cfg.delta_n;
    j["runs"] = cfg.runs;
    j["B"] = cfg.B;
    j["alpha"] = cfg.alpha;
    j["r"] = cfg.r;
    j["theta_pre"] = cfg.theta_pre;
    j["multiplier"] = multiplier_name(cfg.multiplier);
    j["continuous"] = cfg.continuous;
    j["zgrid"] = cfg.zgrid.values();
    j["z0_list"] = cfg.z0_list;
    j["seed"] = cfg.seed;
    return j;
}

} // namespace

std::string mc_report_json(const McConfig& cfg, const McReport& report, bool include_runtime) {
    ordered_json j;
    j["config"] = mc_config_json(cfg);
    j["ground_truth"] = {{"theta0", report.true_theta0}, {"d1", report.true_d1}};
    ordered_json agg;
    agg["runs_ok"] = report.runs_ok;
    agg["runs_failed"] = report.runs_failed;
    if (cfg.metric_rejection) {
        agg["reject_rate_global"] = report.reject_rate_global;
        agg["se_global"] = report.se_global;
        ordered_json locals = ordered_json::array();
        for (std::size_t q = 0; q < report.reject_rate_local.size(); ++q)
            locals.push_back({{"z0", cfg.z0_list[q]},
                              {"rate", report.reject_rate_local[q]},
                              {"se", report.se_local[q]}});
        agg["local"] = std::move(locals);
    }
    if (cfg.metric_deviation) agg["l1_deviation"] = report.l1_deviation;
    j["aggregates"] = std::move(agg);
    if (include_runtime) j["runtime_seconds"] = report.runtime_seconds;
    ordered_json runs = ordered_json::array();
    for (const auto& rec : report.records) {
        ordered_json r;
        r["run"] = rec.run;
        r["ok"] = rec.ok;
        if (!rec.ok) {
            r["error"] = rec.error;
        } else {
            if (cfg.metric_rejection) {
                r["reject_global"] = rec.reject_global;
                ordered_json loc = ordered_json::array();
                for (auto v : rec.reject_local) loc.push_back(v != 0);
                r["reject_local"] = std::move(loc);
            }
            if (cfg.metric_deviation) r["theta_hat"] = rec.theta_hat;
        }
        runs.push_back(std::move(r));
    }
    j["runs"] = std::move(runs);
    return j.dump(2) + "\n";
}

std::string mc_report_csv(const McConfig& cfg, const McReport& report) {
    std::string out = "label,k_n,theta0,w,r,z0,metric,value,se\n";
    char buf[256];
    double kn = static_cast<double>(cfg.n) * cfg.delta_n;
    std::string theta0 = sim_param(cfg.kernel, &SimKernel::theta0);
    std::string w = sim_param(cfg.kernel, &SimKernel::smoothness);
    auto row = [&](const std::string& z0, const std::string& metric, double value, double se) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%s,%s,%s,%s,%s,%.17g,%.17g\n", cfg.label.c_str(),
                      shortest(kn).c_str(), theta0.c_str(), w.c_str(), shortest(cfg.r).c_str(),
                      z0.c_str(), metric.c_str(), value, se);
        out += buf;
    };
    if (cfg.metric_rejection) {
        row("", "reject_rate_global", report.reject_rate_global, report.se_global);
        for (std::size_t q = 0; q < report.reject_rate_local.size(); ++q)
            row(shortest(cfg.z0_list[q]), "reject_rate_local", report.reject_rate_local[q],
                report.se_local[q]);
    }
    if (cfg.metric_deviation) row("", "l1_deviation", report.l1_deviation, 0.0);
    return out;
}

} // namespace jumpcp
