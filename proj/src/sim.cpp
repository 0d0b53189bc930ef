#include "irslink/sim.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "irslink/kernels.hpp"

namespace irslink {

std::string method_name(DesignMethod m) {
    switch (m) {
        case DesignMethod::Proposed: return "proposed";
        case DesignMethod::Tilt2D: return "tilt2d";
        case DesignMethod::FixedEtaZero: return "eta0";
        case DesignMethod::Isotropic: return "isotropic";
        case DesignMethod::NoIrs: return "no_irs";
    }
    throw std::logic_error("unknown method");
}

DesignMethod method_from_name(const std::string& name) {
    if (name == "proposed") return DesignMethod::Proposed;
    if (name == "tilt2d") return DesignMethod::Tilt2D;
    if (name == "eta0") return DesignMethod::FixedEtaZero;
    if (name == "isotropic") return DesignMethod::Isotropic;
    if (name == "no_irs") return DesignMethod::NoIrs;
    throw std::invalid_argument("unknown design method: " + name);
}

SimulationConfig default_config() {
    SimulationConfig cfg;
    const double d2r = std::numbers::pi / 180.0;
    cfg.earth_radius = kEarthRadius;

    cfg.orbit.orbit_radius = cfg.earth_radius + 740e3;
    cfg.orbit.speed = 7.5e3;
    cfg.orbit.start_point = {51.49 * d2r, -0.5 * d2r, cfg.orbit.orbit_radius};
    // End point east of the meridian; override via the orbit config section.
    cfg.orbit.end_point = {51.512 * d2r, 0.5 * d2r, cfg.orbit.orbit_radius};

    cfg.gu.position = {51.509 * d2r, -0.009 * d2r, cfg.earth_radius + 30.0};
    cfg.gu.heading = heading::north;
    cfg.irs.position = {51.512 * d2r, 0.0, cfg.earth_radius + 150.0};
    cfg.irs.heading = heading::south;

    cfg.sat_array = {15, 15, 0.25, 0.25};
    cfg.gu_array = {15, 15, 0.25, 0.25};
    cfg.irs_array = {20, 20, 0.25, 0.25};

    cfg.radiation.k = 2.0;
    cfg.radiation.k_t = 1.0;
    cfg.radiation.k_r = 1.0;
    cfg.radiation.gain_gu = db_to_linear(4.0);
    cfg.radiation.gain_sat = db_to_linear(4.0);
    cfg.radiation.gain_irs = db_to_linear(6.0);

    cfg.lambda = 2.0;
    cfg.tx_power_w = db_to_linear(15.0);    // 15 dBW
    cfg.noise_w = db_to_linear(-120.0);     // -120 dBW

    cfg.blockage.mode = BlockageMode::PlaneHalfspace;

    cfg.time_step = 1.0;
    cfg.duration = 20.0;
    for (int lv = -600; lv <= 600; lv += 50) cfg.lv_values.push_back(static_cast<double>(lv));
    cfg.m_values = {64, 100, 144, 196, 256, 324, 400};
    cfg.sat_positions = {
        {"low", {51.5056 * d2r, -0.2 * d2r, cfg.earth_radius + 740e3}},
        {"high", {46.30 * d2r, -15.03 * d2r, cfg.earth_radius + 740e3}},
    };
    return cfg;
}

Scenario classify_scenario(const Vec3& sat_pos, const Vec3& gu_pos, const BlockageModel& blockage,
                           const LocalFrame& irs_frame) {
    switch (blockage.mode) {
        case BlockageMode::AlwaysDirect: return Scenario::II;
        case BlockageMode::NeverDirect: return Scenario::I;
        case BlockageMode::ElevationMask: {
            const Vec3 up = gu_pos.normalized();
            const double elev = std::asin((sat_pos - gu_pos).normalized().dot(up));
            return elev >= blockage.mask_angle ? Scenario::II : Scenario::I;
        }
        case BlockageMode::PlaneHalfspace: {
            Vec3 point = blockage.plane_point;
            Vec3 normal = blockage.plane_normal;
            if (normal.norm() == 0.0) {
                point = irs_frame.origin;
                normal = irs_frame.z_axis;
            }
            const double side_sat = (sat_pos - point).dot(normal);
            const double side_gu = (gu_pos - point).dot(normal);
            return (side_sat * side_gu > 0.0) ? Scenario::II : Scenario::I;
        }
    }
    throw std::logic_error("unknown blockage mode");
}

SceneGeometry build_scene(const SimulationConfig& cfg, const Vec3& sat_pos, const Vec3& sat_vel,
                          const Vec3& gu_pos) {
    SceneGeometry s;
    s.sat_frame = satellite_frame(sat_pos, sat_vel);
    s.irs_frame = make_local_frame(cfg.irs.position, cfg.irs.heading, Face::Horizon);
    s.gu_frame = make_local_frame(cartesian_to_geodetic(gu_pos), cfg.gu.heading, Face::Horizon);

    const Vec3 irs_pos = s.irs_frame.origin;
    s.sat_d_si = direction_angles(s.sat_frame, irs_pos);
    s.irs_a_si = direction_angles(s.irs_frame, sat_pos);
    s.irs_d_ig = direction_angles(s.irs_frame, gu_pos);
    s.gu_a_ig = direction_angles(s.gu_frame, irs_pos);
    s.sat_d_sg = direction_angles(s.sat_frame, gu_pos);
    s.gu_a_sg = direction_angles(s.gu_frame, sat_pos);
    s.d_si = distance(sat_pos, irs_pos);
    s.d_ig = distance(irs_pos, gu_pos);
    s.d_sg = distance(sat_pos, gu_pos);
    s.scenario = classify_scenario(sat_pos, gu_pos, cfg.blockage, s.irs_frame);
    return s;
}

double evaluate_snr(const CMat& composite, const std::vector<cdouble>& w_gu,
                    const std::vector<cdouble>& w_sat, double tx_power_w, double noise_w) {
    if (composite.rows() != static_cast<int>(w_gu.size()) ||
        composite.cols() != static_cast<int>(w_sat.size()))
        throw std::invalid_argument("beam/channel shape mismatch");
    const std::vector<cdouble> hv = matvec(composite, w_sat);
    const cdouble amp = kernels::dot_u(w_gu.data(), hv.data(), hv.size());
    const double gain = std::norm(amp);
    if (gain == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(tx_power_w * gain / noise_w);
}

DesignResult solve_design(const SimulationConfig& cfg, const SceneGeometry& scene,
                          DesignMethod method) {
    DesignResult out;
    const double k_w = 2.0 * std::numbers::pi / cfg.lambda;
    const int n_gu = cfg.gu_array.element_count();
    const int n_sat = cfg.sat_array.element_count();

    if (method == DesignMethod::NoIrs) {
        out.solution.eta = 0.0;
        if (scene.scenario == Scenario::I) return out;  // no path at all
        const LinkChannel h_sg = direct_channel(scene.sat_d_sg, scene.gu_a_sg, scene.d_sg,
                                                cfg.sat_array, cfg.gu_array, cfg.radiation,
                                                cfg.lambda);
        if (h_sg.amplitude_gain == 0.0) return out;
        const SteeringVector a_gu = upa_response(scene.gu_a_sg, cfg.gu_array, k_w);
        const SteeringVector a_sat = upa_response(scene.sat_d_sg, cfg.sat_array, k_w);
        std::tie(out.solution.w_gu, out.solution.w_sat) = mrt_mrc(a_gu, a_sat);
        out.snr_db = evaluate_snr(h_sg.matrix, out.solution.w_gu, out.solution.w_sat,
                                  cfg.tx_power_w, cfg.noise_w);
        return out;
    }

    double eta = 0.0;
    switch (method) {
        case DesignMethod::Proposed:
        case DesignMethod::Isotropic:
            try {
                eta = optimal_tilt(tilt_feasibility(scene.irs_a_si, scene.irs_d_ig));
            } catch (const std::domain_error&) {
                out.feasible = false;
                return out;
            }
            break;
        case DesignMethod::Tilt2D:
            eta = tilt_2d_baseline(scene.irs_a_si, scene.irs_d_ig);
            break;
        case DesignMethod::FixedEtaZero:
            eta = 0.0;
            break;
        default:
            break;
    }
    out.solution.eta = eta;
    out.phi_tilde_in = modified_elevation(scene.irs_a_si, eta, Side::Incident);
    out.phi_tilde_out = modified_elevation(scene.irs_d_ig, eta, Side::Departure);

    const LinkChannel h_si =
        sat_irs_channel(scene.sat_d_si, scene.irs_a_si, eta, scene.d_si, scene.d_ig,
                        cfg.sat_array, cfg.irs_array, scene.irs_d_ig, cfg.radiation, cfg.lambda);
    const LinkChannel h_ig = irs_gu_channel(scene.irs_d_ig, scene.gu_a_ig, eta, scene.d_ig,
                                            cfg.irs_array, cfg.gu_array, cfg.lambda);
    const SteeringVector irs_dep =
        tilted_irs_response(scene.irs_d_ig, eta, cfg.irs_array, k_w, Side::Departure);
    const SteeringVector irs_inc =
        tilted_irs_response(scene.irs_a_si, eta, cfg.irs_array, k_w, Side::Incident);

    if (scene.scenario == Scenario::I) {
        out.solution.rho = 0.0;
        out.solution.theta = optimal_phase_shifts(irs_dep, irs_inc, h_ig.propagation_phase,
                                                  h_si.propagation_phase, out.solution.rho);
        if (method == DesignMethod::Isotropic) {
            out.solution.w_gu = isotropic_beam(n_gu);
            out.solution.w_sat = isotropic_beam(n_sat);
        } else {
            const SteeringVector a_gu = upa_response(scene.gu_a_ig, cfg.gu_array, k_w);
            const SteeringVector a_sat = upa_response(scene.sat_d_si, cfg.sat_array, k_w);
            std::tie(out.solution.w_gu, out.solution.w_sat) = mrt_mrc(a_gu, a_sat);
        }
        const CMat composite = composite_scenario1(h_ig, out.solution.theta, h_si);
        out.snr_db = evaluate_snr(composite, out.solution.w_gu, out.solution.w_sat,
                                  cfg.tx_power_w, cfg.noise_w);
        return out;
    }

    // Scenario II: co-phase the cascaded path with the direct path, combine
    // the two arrival responses on the GU side and split the transmit energy
    // over the two departure directions by SVD.
    const LinkChannel h_sg = direct_channel(scene.sat_d_sg, scene.gu_a_sg, scene.d_sg,
                                            cfg.sat_array, cfg.gu_array, cfg.radiation,
                                            cfg.lambda);
    const SteeringVector a_gu_sg = upa_response(scene.gu_a_sg, cfg.gu_array, k_w);
    const SteeringVector a_gu_ig = upa_response(scene.gu_a_ig, cfg.gu_array, k_w);
    const SteeringVector a_sat_sg = upa_response(scene.sat_d_sg, cfg.sat_array, k_w);
    const SteeringVector a_sat_si = upa_response(scene.sat_d_si, cfg.sat_array, k_w);

    out.solution.rho = scenario2_common_phase(a_gu_sg, a_gu_ig, h_sg.propagation_phase);
    out.solution.theta = optimal_phase_shifts(irs_dep, irs_inc, h_ig.propagation_phase,
                                              h_si.propagation_phase, out.solution.rho);

    if (method == DesignMethod::Isotropic) {
        out.solution.w_gu = isotropic_beam(n_gu);
        out.solution.w_sat = isotropic_beam(n_sat);
    } else {
        const double beta_eff = h_si.amplitude_gain * h_ig.amplitude_gain;
        const double m_count = static_cast<double>(cfg.irs_array.element_count());
        const cdouble cascade_w =
            beta_eff * m_count * cdouble{std::cos(out.solution.rho), std::sin(out.solution.rho)};
        const cdouble direct_w = h_sg.amplitude_gain * h_sg.propagation_phase;
        std::vector<cdouble> gu_stack(a_gu_sg.size());
        for (std::size_t i = 0; i < gu_stack.size(); ++i)
            gu_stack[i] = direct_w * a_gu_sg[i] + cascade_w * a_gu_ig[i];
        out.solution.w_gu = scenario2_receive_beam(gu_stack);

        CMat sat_stack(2, n_sat);
        for (int j = 0; j < n_sat; ++j) {
            sat_stack(0, j) = a_sat_sg[static_cast<std::size_t>(j)];
            sat_stack(1, j) = a_sat_si[static_cast<std::size_t>(j)];
        }
        out.solution.w_sat = scenario2_transmit_beam(sat_stack);
    }

    const CMat composite =
        composite_scenario2(h_sg, composite_scenario1(h_ig, out.solution.theta, h_si));
    out.snr_db = evaluate_snr(composite, out.solution.w_gu, out.solution.w_sat, cfg.tx_power_w,
                              cfg.noise_w);
    return out;
}

namespace {

SweepRecord make_record(const SimulationConfig& cfg, const SceneGeometry& scene, double x) {
    SweepRecord rec;
    rec.x = x;
    rec.scenario = scene.scenario;
    // Tilt columns report the proposed design when requested, otherwise the
    // first method in the list.
    bool tilt_from_proposed = false;
    for (const DesignMethod m : cfg.methods) {
        const DesignResult r = solve_design(cfg, scene, m);
        rec.snr_db.push_back(r.snr_db);
        if (!r.feasible) rec.flagged = true;
        if (!tilt_from_proposed && (m == DesignMethod::Proposed || rec.snr_db.size() == 1)) {
            rec.eta = r.solution.eta;
            rec.phi_tilde_in = r.phi_tilde_in;
            rec.phi_tilde_out = r.phi_tilde_out;
            tilt_from_proposed = (m == DesignMethod::Proposed);
        }
    }
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_time_sweep(const SimulationConfig& cfg) {
    if (cfg.methods.empty()) throw std::invalid_argument("no design methods requested");
    if (!(cfg.time_step > 0.0)) throw std::invalid_argument("time step must be positive");
    std::vector<SweepRecord> records;
    const Vec3 gu_pos = geodetic_to_cartesian(cfg.gu.position);
    const int steps = static_cast<int>(std::floor(cfg.duration / cfg.time_step + 1e-9));
    for (int i = 0; i <= steps; ++i) {
        const double t = i * cfg.time_step;
        const Vec3 sat_pos = propagate_orbit(cfg.orbit, t);
        const Vec3 sat_vel = orbit_velocity(cfg.orbit, t);
        records.push_back(make_record(cfg, build_scene(cfg, sat_pos, sat_vel, gu_pos), t));
    }
    return records;
}

namespace {

// Fixed-position sweeps model the blocked-direct-path regime.
SimulationConfig scenario1_config(const SimulationConfig& cfg) {
    SimulationConfig c = cfg;
    c.blockage.mode = BlockageMode::NeverDirect;
    return c;
}

SceneGeometry fixed_satellite_scene(const SimulationConfig& cfg, const GeodeticPoint& sat_position,
                                    const Vec3& gu_pos) {
    const Vec3 sat_pos = geodetic_to_cartesian(sat_position);
    // A fixed satellite point has no associated arc; use the local north
    // tangent as the velocity proxy (the Scenario-I results do not depend on
    // the satellite panel's in-plane orientation).
    const LocalFrame f = make_local_frame(sat_position, heading::north, Face::Sky);
    return build_scene(cfg, sat_pos, f.y_axis, gu_pos);
}

}  // namespace

std::vector<SweepRecord> run_lv_sweep(const SimulationConfig& cfg,
                                      const GeodeticPoint& sat_position,
                                      const std::vector<double>& lv_values) {
    if (cfg.methods.empty()) throw std::invalid_argument("no design methods requested");
    const SimulationConfig c = scenario1_config(cfg);
    const LocalFrame irs_frame = make_local_frame(c.irs.position, c.irs.heading, Face::Horizon);
    const Vec3 gu_base = geodetic_to_cartesian(c.gu.position);
    const Vec3 offset = gu_base - irs_frame.origin;
    const double off_y = offset.dot(irs_frame.y_axis);
    const double off_z = offset.dot(irs_frame.z_axis);

    std::vector<SweepRecord> records;
    for (const double lv : lv_values) {
        const Vec3 gu_pos = irs_frame.origin + lv * irs_frame.x_axis + off_y * irs_frame.y_axis +
                            off_z * irs_frame.z_axis;
        SweepRecord rec;
        try {
            rec = make_record(c, fixed_satellite_scene(c, sat_position, gu_pos), lv);
        } catch (const std::exception&) {
            rec.x = lv;
            rec.flagged = true;
            rec.snr_db.assign(c.methods.size(), -std::numeric_limits<double>::infinity());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<SweepRecord> run_m_sweep(const SimulationConfig& cfg,
                                     const GeodeticPoint& sat_position,
                                     const std::vector<int>& m_values) {
    if (cfg.methods.empty()) throw std::invalid_argument("no design methods requested");
    SimulationConfig c = scenario1_config(cfg);
    const Vec3 gu_pos = geodetic_to_cartesian(c.gu.position);
    std::vector<SweepRecord> records;
    for (const int m : m_values) {
        const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
        if (side * side != m)
            throw std::invalid_argument("element count " + std::to_string(m) +
                                        " is not a square panel");
        c.irs_array.n_x = side;
        c.irs_array.n_y = side;
        records.push_back(make_record(c, fixed_satellite_scene(c, sat_position, gu_pos),
                                      static_cast<double>(m)));
    }
    return records;
}

}  // namespace irslink
