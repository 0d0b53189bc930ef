#include <algorithm>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "irslink/config.hpp"

namespace {

using namespace irslink;

std::vector<DesignMethod> parse_methods(const std::string& list, bool include_no_irs) {
    std::vector<DesignMethod> methods;
    if (list.empty()) {
        methods = {DesignMethod::Proposed, DesignMethod::Tilt2D, DesignMethod::FixedEtaZero,
                   DesignMethod::Isotropic};
        if (include_no_irs) methods.push_back(DesignMethod::NoIrs);
        return methods;
    }
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) methods.push_back(method_from_name(item));
    }
    if (methods.empty()) throw std::invalid_argument("empty method list");
    return methods;
}

bool any_usable(const std::vector<SweepRecord>& records) {
    return std::any_of(records.begin(), records.end(),
                       [](const SweepRecord& r) { return !r.flagged; });
}

int cmd_time_sweep(SimulationConfig cfg, const RunManifest& man, const std::string& methods) {
    cfg.methods = parse_methods(methods, true);
    const auto records = run_time_sweep(cfg);
    write_sweep_csv(man.out_dir + "/time_sweep.csv", "time_s", cfg.methods, records, man);
    return any_usable(records) ? 0 : 2;
}

int cmd_lv_sweep(SimulationConfig cfg, const RunManifest& man, const std::string& methods) {
    cfg.methods = parse_methods(methods, false);
    bool usable = false;
    for (const SatellitePosition& sp : cfg.sat_positions) {
        const auto records = run_lv_sweep(cfg, sp.position, cfg.lv_values);
        write_sweep_csv(man.out_dir + "/lv_sweep_" + sp.name + ".csv", "lv_m", cfg.methods,
                        records, man);
        usable = usable || any_usable(records);
    }
    return usable ? 0 : 2;
}

int cmd_m_sweep(SimulationConfig cfg, const RunManifest& man, const std::string& methods) {
    cfg.methods = parse_methods(methods, false);
    bool usable = false;
    for (const SatellitePosition& sp : cfg.sat_positions) {
        const auto records = run_m_sweep(cfg, sp.position, cfg.m_values);
        write_sweep_csv(man.out_dir + "/m_sweep_" + sp.name + ".csv", "m", cfg.methods, records,
                        man);
        usable = usable || any_usable(records);
    }
    return usable ? 0 : 2;
}

nlohmann::json complex_list(const std::vector<cdouble>& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (const cdouble& c : v) arr.push_back({c.real(), c.imag()});
    return arr;
}

int cmd_eval(SimulationConfig cfg, const RunManifest& man, const std::string& methods) {
    cfg.methods = parse_methods(methods, true);
    const Vec3 gu_pos = geodetic_to_cartesian(cfg.gu.position);
    const Vec3 sat_pos = propagate_orbit(cfg.orbit, 0.0);
    const Vec3 sat_vel = orbit_velocity(cfg.orbit, 0.0);
    const SceneGeometry scene = build_scene(cfg, sat_pos, sat_vel, gu_pos);

    const double r2d = 180.0 / std::numbers::pi;
    nlohmann::json out;
    out["format_version"] = kCsvFormatVersion;
    out["seed"] = man.seed;
    out["scenario"] = scene.scenario == Scenario::I ? "I" : "II";
    out["distances_m"] = {{"sat_irs", scene.d_si}, {"irs_gu", scene.d_ig}, {"sat_gu", scene.d_sg}};
    out["angles_deg"] = {
        {"irs_arrival", {scene.irs_a_si.azimuth * r2d, scene.irs_a_si.elevation * r2d}},
        {"irs_departure", {scene.irs_d_ig.azimuth * r2d, scene.irs_d_ig.elevation * r2d}},
    };
    nlohmann::json designs = nlohmann::json::object();
    bool usable = false;
    for (const DesignMethod m : cfg.methods) {
        const DesignResult r = solve_design(cfg, scene, m);
        nlohmann::json d;
        d["snr_db"] = std::isfinite(r.snr_db) ? nlohmann::json(r.snr_db)
                                              : nlohmann::json("-inf");
        d["feasible"] = r.feasible;
        d["eta_deg"] = r.solution.eta * r2d;
        d["rho_rad"] = r.solution.rho;
        d["phi_tilde_in_deg"] = r.phi_tilde_in * r2d;
        d["phi_tilde_out_deg"] = r.phi_tilde_out * r2d;
        d["w_sat"] = complex_list(r.solution.w_sat);
        d["w_gu"] = complex_list(r.solution.w_gu);
        d["theta_diag"] = complex_list(r.solution.theta.diagonal);
        designs[method_name(m)] = std::move(d);
        usable = usable || r.feasible;
    }
    out["designs"] = std::move(designs);
    std::cout << out.dump(2) << "\n";
    return usable ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"IRS-assisted LEO satellite downlink simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = kDefaultSeed;
    std::string methods;

    auto add_common = [&](CLI::App* sub, bool needs_out) {
        sub->add_option("--config", config_path, "JSON configuration file");
        auto* out = sub->add_option("--out", out_dir, "output directory");
        if (needs_out) out->required();
        sub->add_option("--seed", seed, "oracle/bookkeeping seed recorded in outputs");
        sub->add_option("--methods", methods, "comma-separated design methods");
    };
    add_common(app.add_subcommand("time-sweep", "SNR over the orbital pass"), true);
    add_common(app.add_subcommand("lv-sweep", "SNR versus GU offset from the IRS plane"), true);
    add_common(app.add_subcommand("m-sweep", "SNR versus reflecting-element count"), true);
    add_common(app.add_subcommand("eval", "single-point design summary to stdout"), false);

    CLI11_PARSE(app, argc, argv);

    try {
        const SimulationConfig cfg =
            config_path.empty() ? default_config() : load_config(config_path);
        RunManifest man;
        man.config_path = config_path;
        man.out_dir = out_dir;
        man.seed = seed;
        man.subcommand = app.get_subcommands().front()->get_name();
        if (man.subcommand != "eval") std::filesystem::create_directories(out_dir);

        if (man.subcommand == "time-sweep") return cmd_time_sweep(cfg, man, methods);
        if (man.subcommand == "lv-sweep") return cmd_lv_sweep(cfg, man, methods);
        if (man.subcommand == "m-sweep") return cmd_m_sweep(cfg, man, methods);
        return cmd_eval(cfg, man, methods);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
