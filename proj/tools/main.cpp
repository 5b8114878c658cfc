// jumpcp — command-line toolkit for detecting, testing and localizing gradual
// changes in the jump behaviour of discretely observed Ito semimartingales.
//
// Subcommands: simulate, analyze, estimate, test, mc. Every command accepts
// --config FILE (key = value lines); flags override file values. Exit codes:
// 0 success, 2 configuration error, 3 data error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jumpcp/changepoint.hpp"
#include "jumpcp/config.hpp"
#include "jumpcp/csv_io.hpp"
#include "jumpcp/estimator.hpp"
#include "jumpcp/hypothesis.hpp"
#include "jumpcp/mc.hpp"
#include "jumpcp/report_json.hpp"
#include "jumpcp/simulate.hpp"

namespace {

using namespace jumpcp;

struct CommonArgs {
    std::string config_file;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_file, "key = value configuration file");
    cmd->add_option("--seed", args.seed, "root seed (64-bit)");
    cmd->add_option("--threads", args.threads, "worker threads (JUMPCP_THREADS overrides config)");
}

Config load_config(const CommonArgs& args) {
    Config cfg;
    if (!args.config_file.empty()) cfg = Config::from_file(args.config_file);
    if (args.seed) cfg.set("seed", std::to_string(*args.seed));
    if (args.threads) {
        cfg.set("threads", std::to_string(*args.threads));
    } else if (const char* env = std::getenv("JUMPCP_THREADS")) {
        if (*env) cfg.set("threads", env);
    }
    return cfg;
}

unsigned config_threads(const Config& cfg) {
    auto t = cfg.get_size("threads", 1);
    return t == 0 ? 1u : static_cast<unsigned>(t);
}

MultiplierKind multiplier_from(const Config& cfg) {
    std::string name = cfg.get_string("multiplier", "rademacher");
    if (name == "rademacher") return MultiplierKind::rademacher();
    if (name == "normal" || name == "gaussian") return MultiplierKind::standard_normal();
    throw ConfigError("unknown multiplier law '" + name + "'");
}

PathConfig path_config_from(const Config& cfg) {
    PathConfig pc;
    pc.n = cfg.get_size("n", 10000);
    if (cfg.has("delta_inv"))
        pc.delta_n = 1.0 / cfg.get_double("delta_inv", 200.0);
    else
        pc.delta_n = cfg.get_double("delta_n", 1.0 / 200.0);
    pc.subsample_factor = cfg.get_size("subsample", 15);
    pc.trunc_eps = cfg.get_double("trunc_eps", 1e-4);
    pc.kernel = kernel_from_config(cfg);
    pc.seed = cfg.get_u64("seed", 0);
    if (cfg.get_bool("continuous", false)) {
        ContinuousPart cont;
        cont.drift = cfg.get_double("drift", 1.0);
        cont.volatility = cfg.get_double("volatility", 1.0);
        pc.continuous = cont;
    }
    return pc;
}

void write_text(const std::string& filename, const std::string& text) {
    if (filename.empty() || filename == "-") {
        std::cout << text;
        return;
    }
    std::ofstream os(filename);
    if (!os) throw DataError("cannot open for writing: " + filename);
    os << text;
}

int cmd_simulate(const CommonArgs& common, const std::string& out) {
    Config cfg = load_config(common);
    PathConfig pc = path_config_from(cfg);
    SamplePath path = simulate_path(pc);
    if (pc.continuous) path = add_continuous(path, pc);
    std::cerr << "simulate: n=" << pc.n << " delta_n=" << pc.delta_n
              << " truncation_bias_per_subincrement="
              << truncation_bias_per_subincrement(pc) << "\n";
    if (out.empty() || out == "-") {
        write_path_csv(std::cout, path);
    } else {
        write_path_csv(out, path);
    }
    return 0;
}

int cmd_analyze(const CommonArgs& common, const std::string& in, const std::string& out,
                const std::string& curve_csv) {
    Config cfg = load_config(common);
    SamplePath path = ingest_csv(in);
    IncrementGrid grid = IncrementGrid::from_path(path);
    ZGrid zgrid = zgrid_from_config(cfg, cfg.get_bool("continuous", false), grid.delta_n);
    PrefixStats stats(grid, zgrid);
    auto curve = sup_d_n(stats);
    write_text(out, analysis_json(stats, curve));
    if (!curve_csv.empty()) write_text(curve_csv, analysis_csv(stats, curve));
    return 0;
}

int cmd_estimate(const CommonArgs& common, const std::string& in, const std::string& out) {
    Config cfg = load_config(common);
    SamplePath path = ingest_csv(in);
    IncrementGrid grid = IncrementGrid::from_path(path);
    bool continuous = cfg.get_bool("continuous", false);
    ZGrid zgrid = zgrid_from_config(cfg, continuous, grid.delta_n);
    AdaptiveConfig ac;
    ac.theta_pre = cfg.get_double("theta_pre", 0.1);
    ac.alpha = cfg.get_double("alpha", 0.1);
    ac.r = cfg.get_double("r", continuous ? 1.0 : 0.01);
    ac.B = cfg.get_size("B", 200);
    ac.multiplier = multiplier_from(cfg);
    ac.seed = cfg.get_u64("seed", 0);
    ac.threads = config_threads(cfg);
    ac.reuse_multipliers = cfg.get_bool("reuse_multipliers", false);
    write_text(out, estimate_json(adaptive_estimate(grid, zgrid, ac)));
    return 0;
}

int cmd_test(const CommonArgs& common, const std::string& in, bool global,
             std::optional<double> z0, const std::string& out) {
    Config cfg = load_config(common);
    if (global == z0.has_value())
        throw ConfigError("test: choose exactly one of --global or --z0");
    SamplePath path = ingest_csv(in);
    IncrementGrid grid = IncrementGrid::from_path(path);
    TestConfig tc;
    tc.alpha = cfg.get_double("alpha", 0.05);
    tc.B = cfg.get_size("B", 200);
    tc.multiplier = multiplier_from(cfg);
    tc.seed = cfg.get_u64("seed", 0);
    tc.threads = config_threads(cfg);
    TestReport report;
    if (global) {
        ZGrid zgrid = zgrid_from_config(cfg, cfg.get_bool("continuous", false), grid.delta_n);
        report = test_global(grid, zgrid, tc);
    } else {
        report = test_local(grid, *z0, tc);
    }
    write_text(out, test_report_json(report));
    return 0;
}

int cmd_mc(const CommonArgs& common, const std::string& out_json, const std::string& out_csv,
           bool emit_runtime) {
    Config cfg = load_config(common);
    McConfig mc;
    mc.label = cfg.get_string("label", "scenario");
    mc.kernel = kernel_from_config(cfg);
    mc.continuous = cfg.get_bool("continuous", false);
    mc.continuous_part.drift = cfg.get_double("drift", 1.0);
    mc.continuous_part.volatility = cfg.get_double("volatility", 1.0);
    mc.n = cfg.get_size("n", 10000);
    if (cfg.has("delta_inv"))
        mc.delta_n = 1.0 / cfg.get_double("delta_inv", 200.0);
    else
        mc.delta_n = cfg.get_double("delta_n", 1.0 / 200.0);
    mc.subsample_factor = cfg.get_size("subsample", 15);
    mc.trunc_eps = cfg.get_double("trunc_eps", 1e-4);
    mc.runs = cfg.get_size("runs", 300);
    mc.B = cfg.get_size("B", 200);
    mc.alpha = cfg.get_double("alpha", 0.05);
    mc.r = cfg.get_double("r", mc.continuous ? 1.0 : 0.01);
    mc.theta_pre = cfg.get_double("theta_pre", 0.1);
    mc.multiplier = multiplier_from(cfg);
    mc.zgrid = zgrid_from_config(cfg, mc.continuous, mc.delta_n);
    mc.z0_list = cfg.get_list("z0_list", {});
    std::string metrics = cfg.get_string("metrics", "rejection");
    mc.metric_rejection = metrics.find("rejection") != std::string::npos;
    mc.metric_deviation = metrics.find("deviation") != std::string::npos;
    if (!mc.metric_rejection && !mc.metric_deviation)
        throw ConfigError("mc: metrics must name 'rejection' and/or 'deviation'");
    mc.seed = cfg.get_u64("seed", 0);
    mc.threads = config_threads(cfg);

    McReport report = run_mc(mc);
    std::cerr << "mc: " << mc.label << " runs_ok=" << report.runs_ok
              << " runtime_s=" << report.runtime_seconds << "\n";
    write_text(out_json, mc_report_json(mc, report, emit_runtime));
    if (!out_csv.empty()) write_text(out_csv, mc_report_csv(mc, report));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gradual jump change-point toolkit"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string in, out, out_csv, curve_csv;
    bool global = false, emit_runtime = false;
    std::optional<double> z0;

    auto* sim = app.add_subcommand("simulate", "simulate a sample path, emit t,x CSV");
    add_common(sim, common);
    sim->add_option("--out", out, "output CSV (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "empirical tail statistics of a path");
    add_common(analyze, common);
    analyze->add_option("--in", in, "input CSV with header t,x")->required();
    analyze->add_option("--out", out, "output JSON (default stdout)");
    analyze->add_option("--curve-csv", curve_csv, "also write plot-ready CSV");

    auto* estimate = app.add_subcommand("estimate", "adaptive change-point estimate");
    add_common(estimate, common);
    estimate->add_option("--in", in, "input CSV with header t,x")->required();
    estimate->add_option("--out", out, "output JSON (default stdout)");

    auto* test = app.add_subcommand("test", "test for a gradual change");
    add_common(test, common);
    test->add_option("--in", in, "input CSV with header t,x")->required();
    test->add_flag("--global", global, "global test over the z grid");
    test->add_option("--z0", z0, "local test at this tail value");
    test->add_option("--out", out, "output JSON (default stdout)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo study driven by a config file");
    add_common(mc, common);
    mc->add_option("--out", out, "output JSON (default stdout)");
    mc->add_option("--out-csv", out_csv, "plot-ready CSV");
    mc->add_flag("--emit-runtime", emit_runtime, "include wall time in the JSON artifact");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) return cmd_simulate(common, out);
        if (analyze->parsed()) return cmd_analyze(common, in, out, curve_csv);
        if (estimate->parsed()) return cmd_estimate(common, in, out);
        if (test->parsed()) return cmd_test(common, in, global, z0, out);
        if (mc->parsed()) return cmd_mc(common, out, out_csv, emit_runtime);
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
