#include "irslink/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace irslink {

namespace {

using nlohmann::json;

constexpr double kDegToRad = std::numbers::pi / 180.0;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("config error at '" + path + "': " + what);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) fail(path + "." + key, "unknown key");
    }
}

double get_number(const json& obj, const std::string& path, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
    return v.get<int>();
}

void parse_latlon(const json& obj, const std::string& path, GeodeticPoint& p) {
    check_keys(obj, path, {"lat_deg", "lon_deg"});
    p.latitude = get_number(obj, path, "lat_deg", p.latitude / kDegToRad) * kDegToRad;
    p.longitude = get_number(obj, path, "lon_deg", p.longitude / kDegToRad) * kDegToRad;
    if (std::abs(p.latitude) > std::numbers::pi / 2.0) fail(path + ".lat_deg", "out of range");
}

void parse_node(const json& obj, const std::string& path, NodeConfig& node, double earth_radius) {
    check_keys(obj, path, {"lat_deg", "lon_deg", "height_m", "heading_deg"});
    const double height = get_number(obj, path, "height_m", node.position.radius - earth_radius);
    node.position.latitude =
        get_number(obj, path, "lat_deg", node.position.latitude / kDegToRad) * kDegToRad;
    node.position.longitude =
        get_number(obj, path, "lon_deg", node.position.longitude / kDegToRad) * kDegToRad;
    node.position.radius = earth_radius + height;
    node.heading = get_number(obj, path, "heading_deg", node.heading / kDegToRad) * kDegToRad;
    if (std::abs(node.position.latitude) > std::numbers::pi / 2.0)
        fail(path + ".lat_deg", "out of range");
}

void parse_array(const json& obj, const std::string& path, UpaConfig& cfg) {
    check_keys(obj, path, {"n_x", "n_y", "d_x_m", "d_y_m"});
    cfg.n_x = get_int(obj, path, "n_x", cfg.n_x);
    cfg.n_y = get_int(obj, path, "n_y", cfg.n_y);
    cfg.d_x = get_number(obj, path, "d_x_m", cfg.d_x);
    cfg.d_y = get_number(obj, path, "d_y_m", cfg.d_y);
    if (cfg.n_x < 1) fail(path + ".n_x", "must be >= 1");
    if (cfg.n_y < 1) fail(path + ".n_y", "must be >= 1");
    if (!(cfg.d_x > 0.0)) fail(path + ".d_x_m", "must be positive");
    if (!(cfg.d_y > 0.0)) fail(path + ".d_y_m", "must be positive");
}

Vec3 parse_vec3(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 3) fail(path, "expected an array of 3 numbers");
    for (const auto& c : v)
        if (!c.is_number()) fail(path, "expected an array of 3 numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

}  // namespace

SimulationConfig parse_config(const std::string& json_text) {
    SimulationConfig cfg = default_config();
    std::string trimmed = json_text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    if (trimmed.empty()) return cfg;

    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config parse error: ") + e.what());
    }
    check_keys(root, "$",
               {"earth", "orbit", "nodes", "arrays", "radiation", "power", "blockage", "sweep"});

    if (root.contains("earth")) {
        const json& e = root.at("earth");
        check_keys(e, "earth", {"radius_m"});
        cfg.earth_radius = get_number(e, "earth", "radius_m", cfg.earth_radius);
        if (!(cfg.earth_radius > 0.0)) fail("earth.radius_m", "must be positive");
    }
    // Heights are measured from the configured Earth radius.
    const double h_gu = default_config().gu.position.radius - kEarthRadius;
    const double h_irs = default_config().irs.position.radius - kEarthRadius;
    const double h_orbit = default_config().orbit.orbit_radius - kEarthRadius;
    cfg.gu.position.radius = cfg.earth_radius + h_gu;
    cfg.irs.position.radius = cfg.earth_radius + h_irs;
    cfg.orbit.orbit_radius = cfg.earth_radius + h_orbit;
    for (auto& sp : cfg.sat_positions) sp.position.radius = cfg.orbit.orbit_radius;

    if (root.contains("orbit")) {
        const json& o = root.at("orbit");
        check_keys(o, "orbit", {"altitude_m", "speed_mps", "start", "end"});
        const double alt =
            get_number(o, "orbit", "altitude_m", cfg.orbit.orbit_radius - cfg.earth_radius);
        cfg.orbit.orbit_radius = cfg.earth_radius + alt;
        cfg.orbit.speed = get_number(o, "orbit", "speed_mps", cfg.orbit.speed);
        if (!(alt > 0.0)) fail("orbit.altitude_m", "must be positive");
        if (!(cfg.orbit.speed > 0.0)) fail("orbit.speed_mps", "must be positive");
        if (o.contains("start")) parse_latlon(o.at("start"), "orbit.start", cfg.orbit.start_point);
        if (o.contains("end")) parse_latlon(o.at("end"), "orbit.end", cfg.orbit.end_point);
        cfg.orbit.start_point.radius = cfg.orbit.orbit_radius;
        cfg.orbit.end_point.radius = cfg.orbit.orbit_radius;
        for (auto& sp : cfg.sat_positions) sp.position.radius = cfg.orbit.orbit_radius;
    }

    if (root.contains("nodes")) {
        const json& n = root.at("nodes");
        check_keys(n, "nodes", {"gu", "irs"});
        if (n.contains("gu")) parse_node(n.at("gu"), "nodes.gu", cfg.gu, cfg.earth_radius);
        if (n.contains("irs")) parse_node(n.at("irs"), "nodes.irs", cfg.irs, cfg.earth_radius);
    }

    if (root.contains("arrays")) {
        const json& a = root.at("arrays");
        check_keys(a, "arrays", {"sat", "gu", "irs"});
        if (a.contains("sat")) parse_array(a.at("sat"), "arrays.sat", cfg.sat_array);
        if (a.contains("gu")) parse_array(a.at("gu"), "arrays.gu", cfg.gu_array);
        if (a.contains("irs")) parse_array(a.at("irs"), "arrays.irs", cfg.irs_array);
    }

    if (root.contains("radiation")) {
        const json& r = root.at("radiation");
        check_keys(r, "radiation", {"k", "k_t", "k_r", "gain_gu_db", "gain_sat_db", "gain_irs_db"});
        cfg.radiation.k = get_number(r, "radiation", "k", cfg.radiation.k);
        cfg.radiation.k_t = get_number(r, "radiation", "k_t", cfg.radiation.k_t);
        cfg.radiation.k_r = get_number(r, "radiation", "k_r", cfg.radiation.k_r);
        if (!(cfg.radiation.k > 0.0)) fail("radiation.k", "must be positive");
        if (cfg.radiation.k_t < 0.0) fail("radiation.k_t", "must be non-negative");
        if (cfg.radiation.k_r < 0.0) fail("radiation.k_r", "must be non-negative");
        if (r.contains("gain_gu_db"))
            cfg.radiation.gain_gu = db_to_linear(get_number(r, "radiation", "gain_gu_db", 0.0));
        if (r.contains("gain_sat_db"))
            cfg.radiation.gain_sat = db_to_linear(get_number(r, "radiation", "gain_sat_db", 0.0));
        if (r.contains("gain_irs_db"))
            cfg.radiation.gain_irs = db_to_linear(get_number(r, "radiation", "gain_irs_db", 0.0));
    }

    if (root.contains("power")) {
        const json& p = root.at("power");
        check_keys(p, "power", {"tx_dbw", "noise_dbw", "lambda_m"});
        if (p.contains("tx_dbw"))
            cfg.tx_power_w = db_to_linear(get_number(p, "power", "tx_dbw", 0.0));
        if (p.contains("noise_dbw"))
            cfg.noise_w = db_to_linear(get_number(p, "power", "noise_dbw", 0.0));
        cfg.lambda = get_number(p, "power", "lambda_m", cfg.lambda);
        if (!(cfg.lambda > 0.0)) fail("power.lambda_m", "must be positive");
    }

    if (root.contains("blockage")) {
        const json& b = root.at("blockage");
        check_keys(b, "blockage", {"mode", "mask_angle_deg", "plane_point_m", "plane_normal"});
        if (b.contains("mode")) {
            if (!b.at("mode").is_string()) fail("blockage.mode", "expected a string");
            const std::string mode = b.at("mode").get<std::string>();
            if (mode == "plane")
                cfg.blockage.mode = BlockageMode::PlaneHalfspace;
            else if (mode == "elevation_mask")
                cfg.blockage.mode = BlockageMode::ElevationMask;
            else if (mode == "always_direct")
                cfg.blockage.mode = BlockageMode::AlwaysDirect;
            else if (mode == "never_direct")
                cfg.blockage.mode = BlockageMode::NeverDirect;
            else
                fail("blockage.mode", "unknown mode '" + mode + "'");
        }
        cfg.blockage.mask_angle =
            get_number(b, "blockage", "mask_angle_deg", cfg.blockage.mask_angle / kDegToRad) *
            kDegToRad;
        if (b.contains("plane_point_m"))
            cfg.blockage.plane_point = parse_vec3(b.at("plane_point_m"), "blockage.plane_point_m");
        if (b.contains("plane_normal"))
            cfg.blockage.plane_normal = parse_vec3(b.at("plane_normal"), "blockage.plane_normal");
    }

    if (root.contains("sweep")) {
        const json& s = root.at("sweep");
        check_keys(s, "sweep",
                   {"time_step_s", "duration_s", "lv_values_m", "m_values", "sat_positions"});
        cfg.time_step = get_number(s, "sweep", "time_step_s", cfg.time_step);
        cfg.duration = get_number(s, "sweep", "duration_s", cfg.duration);
        if (!(cfg.time_step > 0.0)) fail("sweep.time_step_s", "must be positive");
        if (cfg.duration < 0.0) fail("sweep.duration_s", "must be non-negative");
        if (s.contains("lv_values_m")) {
            const json& lv = s.at("lv_values_m");
            if (!lv.is_array()) fail("sweep.lv_values_m", "expected an array");
            cfg.lv_values.clear();
            for (const auto& v : lv) {
                if (!v.is_number()) fail("sweep.lv_values_m", "expected numbers");
                cfg.lv_values.push_back(v.get<double>());
            }
        }
        if (s.contains("m_values")) {
            const json& mv = s.at("m_values");
            if (!mv.is_array()) fail("sweep.m_values", "expected an array");
            cfg.m_values.clear();
            for (const auto& v : mv) {
                if (!v.is_number_integer()) fail("sweep.m_values", "expected integers");
                const int m = v.get<int>();
                if (m < 1) fail("sweep.m_values", "must be >= 1");
                cfg.m_values.push_back(m);
            }
        }
        if (s.contains("sat_positions")) {
            const json& sp = s.at("sat_positions");
            if (!sp.is_array()) fail("sweep.sat_positions", "expected an array");
            cfg.sat_positions.clear();
            int idx = 0;
            for (const auto& e : sp) {
                const std::string path = "sweep.sat_positions[" + std::to_string(idx++) + "]";
                check_keys(e, path, {"name", "lat_deg", "lon_deg"});
                SatellitePosition pos;
                pos.position.radius = cfg.orbit.orbit_radius;
                if (!e.contains("name") || !e.at("name").is_string())
                    fail(path + ".name", "expected a string");
                pos.name = e.at("name").get<std::string>();
                pos.position.latitude = get_number(e, path, "lat_deg", 0.0) * kDegToRad;
                pos.position.longitude = get_number(e, path, "lon_deg", 0.0) * kDegToRad;
                if (std::abs(pos.position.latitude) > std::numbers::pi / 2.0)
                    fail(path + ".lat_deg", "out of range");
                cfg.sat_positions.push_back(std::move(pos));
            }
        }
    }
    return cfg;
}

SimulationConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_sweep_csv(const std::string& path, const std::string& x_name,
                     const std::vector<DesignMethod>& methods,
                     const std::vector<SweepRecord>& records, const RunManifest& manifest) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << "# irslink-csv v" << kCsvFormatVersion << " seed=" << manifest.seed
        << " subcommand=" << manifest.subcommand << "\n";
    out << x_name << ",scenario";
    for (const DesignMethod m : methods) out << ",snr_db_" << method_name(m);
    out << ",eta_deg,phi_tilde_in_deg,phi_tilde_out_deg,flagged\n";
    const double r2d = 180.0 / std::numbers::pi;
    for (const SweepRecord& rec : records) {
        out << format_value(rec.x) << ',' << (rec.scenario == Scenario::I ? "I" : "II");
        for (const double snr : rec.snr_db) out << ',' << format_value(snr);
        out << ',' << format_value(rec.eta * r2d) << ',' << format_value(rec.phi_tilde_in * r2d)
            << ',' << format_value(rec.phi_tilde_out * r2d) << ',' << (rec.flagged ? 1 : 0)
            << '\n';
    }
    if (!out) throw std::runtime_error("write failure on: " + path);
}

}  // namespace irslink
