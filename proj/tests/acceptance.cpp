// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "irslink/config.hpp"
#include "irslink/kernels.hpp"

using namespace irslink;

namespace {

constexpr double kPi = std::numbers::pi;
int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!pass) ++failures;
}

DirectionAngles random_incident(std::mt19937_64& rng) {
    return {std::uniform_real_distribution<double>(0.05, kPi - 0.05)(rng),
            std::uniform_real_distribution<double>(-1.2, 1.2)(rng)};
}

DirectionAngles random_departure(std::mt19937_64& rng) {
    return {std::uniform_real_distribution<double>(-kPi + 0.05, -0.05)(rng),
            std::uniform_real_distribution<double>(-1.2, 1.2)(rng)};
}

double pattern_of(const DirectionAngles& inc, const DirectionAngles& dep, double eta, double k) {
    const double s_in = std::sin(modified_elevation(inc, eta, Side::Incident));
    const double s_out = std::sin(modified_elevation(dep, eta, Side::Departure));
    if (s_in <= 0.0 || s_out <= 0.0) return 0.0;
    return std::pow(s_in, k) * std::pow(s_out, k);
}

std::vector<cdouble> random_unit_vec(std::mt19937_64& rng, std::size_t n) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cdouble> v(n);
    for (auto& x : v) x = {g(rng), g(rng)};
    const double norm = std::sqrt(kernels::norm_sq(v.data(), n));
    for (auto& x : v) x /= norm;
    return v;
}

// 1. The two independent tilted-response constructions agree entrywise.
void criterion1() {
    std::mt19937_64 rng(9001);
    std::uniform_real_distribution<double> az(-kPi + 0.02, kPi - 0.02);
    std::uniform_real_distribution<double> el(-1.4, 1.4);
    std::uniform_real_distribution<double> eta(-1.4, 1.4);
    std::uniform_real_distribution<double> spacing(0.05, 0.5);
    double worst = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
        const DirectionAngles a{az(rng), el(rng)};
        const double e = eta(rng);
        const UpaConfig cfg{1 + int(rng() % 16), 1 + int(rng() % 16), spacing(rng), spacing(rng)};
        const double k_w = 2 * kPi / 2.0;
        const SteeringVector ref = tilted_irs_response_elementwise(a, e, cfg, k_w);
        for (const Side side : {Side::Incident, Side::Departure}) {
            const SteeringVector v = tilted_irs_response(a, e, cfg, k_w, side);
            for (std::size_t i = 0; i < v.size(); ++i)
                worst = std::max(worst, std::abs(v[i] - ref[i]));
        }
    }
    std::ostringstream os;
    os << "dual-construction equivalence over 200 cases, max |diff| = " << worst;
    report(1, worst < 1e-9, os.str());
}

// 2. Scenario-I optimal design equals the closed-form SNR.
void criterion2() {
    std::mt19937_64 rng(9002);
    RadiationParams p;
    p.k = 2.0;
    p.gain_gu = db_to_linear(4.0);
    p.gain_sat = db_to_linear(4.0);
    p.gain_irs = db_to_linear(6.0);
    const double lambda = 2.0, k_w = kPi;
    const double pt = db_to_linear(15.0), n0 = db_to_linear(-120.0);
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
        const DirectionAngles inc = random_incident(rng);
        const DirectionAngles dep = random_departure(rng);
        const TiltFeasibility feas = tilt_feasibility(inc, dep);
        if (feas.alpha_departure > feas.alpha_incident) continue;
        const double eta = optimal_tilt(feas);
        const UpaConfig sat{2 + int(rng() % 5), 2 + int(rng() % 5), 0.25, 0.25};
        const UpaConfig irs{2 + int(rng() % 7), 2 + int(rng() % 7), 0.25, 0.25};
        const UpaConfig gu{2 + int(rng() % 5), 2 + int(rng() % 5), 0.25, 0.25};
        const DirectionAngles sat_dep = random_incident(rng);
        const DirectionAngles gu_inc = random_incident(rng);
        const double d_si = 7.4e5 + 1000.0 * double(rng() % 1000);
        const double d_ig = 300.0 + double(rng() % 2000);
        const LinkChannel h_si =
            sat_irs_channel(sat_dep, inc, eta, d_si, d_ig, sat, irs, dep, p, lambda);
        if (h_si.amplitude_gain == 0.0) continue;
        ++done;
        const LinkChannel h_ig = irs_gu_channel(dep, gu_inc, eta, d_ig, irs, gu, lambda);
        const PhaseShiftMatrix theta = optimal_phase_shifts(
            tilted_irs_response(dep, eta, irs, k_w, Side::Departure),
            tilted_irs_response(inc, eta, irs, k_w, Side::Incident), h_ig.propagation_phase,
            h_si.propagation_phase, 0.0);
        const auto [w_gu, w_sat] =
            mrt_mrc(upa_response(gu_inc, gu, k_w), upa_response(sat_dep, sat, k_w));
        const CMat h = composite_scenario1(h_ig, theta, h_si);
        const auto hv = matvec(h, w_sat);
        const double gain = std::norm(kernels::dot_u(w_gu.data(), hv.data(), hv.size()));
        const double snr = 10.0 * std::log10(pt * gain / n0);
        const double beta = h_si.amplitude_gain;
        const double m = irs.element_count();
        const double closed = 10.0 * std::log10(pt * beta * beta * m * m *
                                                gu.element_count() * sat.element_count() / n0);
        worst = std::max(worst, std::abs(snr - closed));
    }
    std::ostringstream os;
    os << "closed-form SNR identity over 100 geometries, max |err| = " << worst << " dB";
    report(2, worst < 1e-6, os.str());
}

// 3. Closed-form designs dominate search oracles.
void criterion3() {
    std::mt19937_64 rng(9003);
    bool pass = true;
    std::ostringstream os;

    // Tilt against a 2001-point grid.
    double tilt_margin = 1e300;
    int done = 0;
    while (done < 20) {
        const DirectionAngles inc = random_incident(rng);
        const DirectionAngles dep = random_departure(rng);
        const TiltFeasibility feas = tilt_feasibility(inc, dep);
        if (feas.alpha_departure > feas.alpha_incident) continue;
        ++done;
        const double f_star = pattern_of(inc, dep, optimal_tilt(feas), 2.0);
        double best = 0.0;
        for (int i = 0; i < 2001; ++i)
            best = std::max(best, pattern_of(inc, dep, -kPi / 2 + kPi * i / 2000.0, 2.0));
        tilt_margin = std::min(tilt_margin, f_star - best);
    }
    pass = pass && tilt_margin >= -1e-9;
    os << "tilt grid margin " << tilt_margin;

    const int kCandidates = 100000;
    std::uniform_real_distribution<double> ph(-kPi, kPi);

    // Phase shifts against random unit-modulus diagonals.
    {
        const UpaConfig irs{20, 20, 0.25, 0.25};
        const DirectionAngles inc = random_incident(rng);
        const DirectionAngles dep = random_departure(rng);
        const SteeringVector vd = tilted_irs_response(dep, 0.2, irs, kPi, Side::Departure);
        const SteeringVector vi = tilted_irs_response(inc, 0.2, irs, kPi, Side::Incident);
        const PhaseShiftMatrix theta = optimal_phase_shifts(vd, vi, 1.0, 1.0, 0.0);
        auto objective = [&](const std::vector<cdouble>& diag) {
            return std::abs(kernels::dot3(vd.data(), diag.data(), vi.data(), diag.size()));
        };
        const double star = objective(theta.diagonal);
        double best = 0.0;
        std::vector<cdouble> diag(vd.size());
        for (int c = 0; c < kCandidates; ++c) {
            for (auto& d : diag) {
                const double a = ph(rng);
                d = {std::cos(a), std::sin(a)};
            }
            best = std::max(best, objective(diag));
        }
        pass = pass && star >= best - 1e-9;
        os << ", phase-shift margin " << star - best;
    }

    // MRT/MRC against random unit vectors.
    {
        const UpaConfig gu{15, 15, 0.25, 0.25};
        const UpaConfig sat{15, 15, 0.25, 0.25};
        const SteeringVector a_gu = upa_response(random_incident(rng), gu, kPi);
        const SteeringVector a_sat = upa_response(random_incident(rng), sat, kPi);
        const auto [w_gu, w_sat] = mrt_mrc(a_gu, a_sat);
        auto objective = [&](const std::vector<cdouble>& wg, const std::vector<cdouble>& ws) {
            return std::abs(kernels::dot_u(wg.data(), a_gu.data(), a_gu.size())) *
                   std::abs(kernels::dot_u(ws.data(), a_sat.data(), a_sat.size()));
        };
        const double star = objective(w_gu, w_sat);
        double best = 0.0;
        for (int c = 0; c < kCandidates; ++c)
            best = std::max(best, objective(random_unit_vec(rng, a_gu.size()),
                                            random_unit_vec(rng, a_sat.size())));
        pass = pass && star >= best - 1e-9;
        os << ", beam margin " << star - best;
    }

    // Transmit SVD beam against random unit vectors.
    {
        const int n = 225;
        CMat stack(2, n);
        std::normal_distribution<double> g(0.0, 1.0);
        for (int r = 0; r < 2; ++r)
            for (int j = 0; j < n; ++j) stack(r, j) = cdouble{g(rng), g(rng)};
        const auto w = scenario2_transmit_beam(stack);
        auto objective = [&](const std::vector<cdouble>& cand) {
            const auto y = matvec(stack, cand);
            return kernels::norm_sq(y.data(), y.size());
        };
        const double star = objective(w);
        double best = 0.0;
        for (int c = 0; c < kCandidates; ++c)
            best = std::max(best, objective(random_unit_vec(rng, std::size_t(n))));
        pass = pass && star >= best - 1e-9;
        os << ", svd margin " << star - best;
    }
    report(3, pass, os.str());
}

// 4. Arrival angles at the IRS for the two reference satellite positions.
void criterion4() {
    const SimulationConfig cfg = default_config();
    const Vec3 gu = geodetic_to_cartesian(cfg.gu.position);
    std::ostringstream os;
    bool pass = true;
    const double r2d = 180.0 / kPi;
    const struct {
        int index;
        double phi_deg, theta_deg, tol_deg;
    } expect[2] = {{0, 0.06, 91.2, 0.1}, {1, 20.0, 154.0, 0.5}};
    for (const auto& e : expect) {
        const GeodeticPoint sp = cfg.sat_positions[std::size_t(e.index)].position;
        const Vec3 sat = geodetic_to_cartesian(sp);
        const LocalFrame f = make_local_frame(sp, heading::north, Face::Sky);
        const SceneGeometry s = build_scene(cfg, sat, f.y_axis, gu);
        const double phi = s.irs_a_si.elevation * r2d;
        const double theta = s.irs_a_si.azimuth * r2d;
        const bool ok =
            std::abs(phi - e.phi_deg) <= e.tol_deg && std::abs(theta - e.theta_deg) <= e.tol_deg;
        pass = pass && ok;
        os << cfg.sat_positions[std::size_t(e.index)].name << " (phi, theta) = (" << phi << ", "
           << theta << ") vs (" << e.phi_deg << ", " << e.theta_deg << ") tol " << e.tol_deg
           << (ok ? " ok" : " MISS") << "; ";
    }
    report(4, pass, os.str());
}

struct MSweepData {
    std::vector<double> log_m;
    std::vector<double> proposed, tilt2d, eta0;
};

MSweepData m_sweep_data() {
    SimulationConfig cfg = default_config();
    cfg.methods = {DesignMethod::Proposed, DesignMethod::Tilt2D, DesignMethod::FixedEtaZero};
    MSweepData d;
    for (const SweepRecord& r : run_m_sweep(cfg, cfg.sat_positions[1].position, cfg.m_values)) {
        d.log_m.push_back(std::log10(r.x));
        d.proposed.push_back(r.snr_db[0]);
        d.tilt2d.push_back(r.snr_db[1]);
        d.eta0.push_back(r.snr_db[2]);
    }
    return d;
}

// 5. SNR grows as M^2.
void criterion5(const MSweepData& d) {
    const std::size_t n = d.log_m.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = d.log_m[i];
        const double y = d.proposed[i] / 10.0;  // log10 of linear SNR
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    std::ostringstream os;
    os << "element-count scaling: log-log slope = " << slope << " (want [1.95, 2.05])";
    report(5, slope >= 1.95 && slope <= 2.05, os.str());
}

// 6. Gaps to the baselines are constant in M; absolute values reported.
void criterion6(const MSweepData& d) {
    double gap2d_min = 1e300, gap2d_max = -1e300, gap0_min = 1e300, gap0_max = -1e300;
    for (std::size_t i = 0; i < d.log_m.size(); ++i) {
        const double g2 = d.proposed[i] - d.tilt2d[i];
        const double g0 = d.proposed[i] - d.eta0[i];
        gap2d_min = std::min(gap2d_min, g2);
        gap2d_max = std::max(gap2d_max, g2);
        gap0_min = std::min(gap0_min, g0);
        gap0_max = std::max(gap0_max, g0);
    }
    const bool constant = (gap2d_max - gap2d_min) < 0.1 && (gap0_max - gap0_min) < 0.1;
    std::ostringstream os;
    os << "baseline gaps constant in M (spread " << gap2d_max - gap2d_min << " / "
       << gap0_max - gap0_min << " dB); measured gaps " << 0.5 * (gap2d_min + gap2d_max) << " / "
       << 0.5 * (gap0_min + gap0_max) << " dB (reference 3.11 / 6.67 dB, reported best-effort)";
    report(6, constant, os.str());
}

// 7. Offset sweep peaks at zero; symmetric when the satellite sits in the
// IRS symmetry plane.
void criterion7() {
    SimulationConfig cfg = default_config();
    cfg.methods = {DesignMethod::Proposed};
    bool pass = true;
    std::ostringstream os;
    for (const SatellitePosition& sp : cfg.sat_positions) {
        const auto records = run_lv_sweep(cfg, sp.position, cfg.lv_values);
        double best = -1e300, best_x = -1;
        for (const SweepRecord& r : records)
            if (r.snr_db[0] > best) {
                best = r.snr_db[0];
                best_x = r.x;
            }
        pass = pass && best_x == 0.0;
        os << sp.name << " argmax lv = " << best_x << "; ";
    }
    // Symmetry-plane satellite: same longitude as the IRS.
    GeodeticPoint sym = cfg.sat_positions[1].position;
    sym.longitude = cfg.irs.position.longitude;
    const auto records = run_lv_sweep(cfg, sym, cfg.lv_values);
    double worst_asym = 0.0;
    for (std::size_t i = 0, j = records.size() - 1; i < j; ++i, --j)
        worst_asym = std::max(worst_asym, std::abs(records[i].snr_db[0] - records[j].snr_db[0]));
    pass = pass && worst_asym < 0.2;
    os << "symmetry-plane asymmetry " << worst_asym << " dB (want < 0.2)";
    report(7, pass, os.str());
}

// 8. Time-sweep ordering and the eta = 0 collapse near the scenario boundary.
void criterion8() {
    const auto start = std::chrono::steady_clock::now();
    SimulationConfig cfg = default_config();
    cfg.methods = {DesignMethod::Proposed, DesignMethod::Tilt2D, DesignMethod::FixedEtaZero};
    const auto records = run_time_sweep(cfg);
    bool ordered = true;
    for (const SweepRecord& r : records) {
        ordered = ordered && r.snr_db[0] >= r.snr_db[1] - 1e-9;
        ordered = ordered && r.snr_db[1] >= r.snr_db[2] - 1e-9;
    }
    // Scenario boundary index: first record whose scenario differs from the
    // first record's.
    std::size_t boundary = records.size();
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].scenario != records[0].scenario) {
            boundary = i;
            break;
        }
    // Distance from the eta = 0 minimum to the boundary, taking the closest
    // minimizer when the minimum is attained repeatedly.
    double min_val = 1e300;
    for (const SweepRecord& r : records) min_val = std::min(min_val, r.snr_db[2]);
    std::size_t min_dist = records.size();
    for (std::size_t i = 0; i < records.size(); ++i)
        if (records[i].snr_db[2] == min_val) {
            const std::size_t dist =
                (i > boundary) ? i - boundary : boundary - i;
            min_dist = std::min(min_dist, dist);
        }
    const std::size_t window = (records.size() + 9) / 10;  // 10% of steps
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = ordered && boundary < records.size() && min_dist <= window && secs < 60.0;
    std::ostringstream os;
    os << "pass ordering " << (ordered ? "holds" : "VIOLATED") << "; boundary at step " << boundary
       << ", eta=0 minimum within " << min_dist << " steps (window " << window << "); " << secs
       << " s";
    report(8, pass, os.str());
}

// 9. Byte-identical CSVs across reruns of the same manifest.
void criterion9() {
#ifndef IRSLINK_CLI_PATH
    report(9, false, "CLI path not configured");
#else
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "irslink_acceptance";
    fs::remove_all(base);
    const fs::path d1 = base / "run1";
    const fs::path d2 = base / "run2";
    fs::create_directories(d1);
    fs::create_directories(d2);
    auto run = [&](const std::string& sub, const fs::path& out) {
        const std::string cmd = std::string("\"") + IRSLINK_CLI_PATH + "\" " + sub +
                                " --seed 7 --out \"" + out.string() + "\" > /dev/null 2>&1";
        return std::system(cmd.c_str());
    };
    auto slurp = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    bool pass = true;
    std::ostringstream os;
    for (const std::string sub : {"time-sweep", "m-sweep"}) {
        const int rc1 = run(sub, d1);
        const int rc2 = run(sub, d2);
        pass = pass && rc1 == 0 && rc2 == 0;
        os << sub << " exit " << rc1 << "/" << rc2;
        for (const auto& entry : fs::directory_iterator(d1)) {
            const std::string a = slurp(entry.path());
            const std::string b = slurp(d2 / entry.path().filename());
            const bool same = !a.empty() && a == b;
            pass = pass && same;
        }
        os << (pass ? " identical; " : " MISMATCH; ");
        for (const auto& entry : fs::directory_iterator(d1)) fs::remove(entry.path());
        for (const auto& entry : fs::directory_iterator(d2)) fs::remove(entry.path());
    }
    fs::remove_all(base);
    report(9, pass, os.str());
#endif
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    const MSweepData d = m_sweep_data();
    criterion5(d);
    criterion6(d);
    criterion7();
    criterion8();
    criterion9();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " (" << failures
              << " failure" << (failures == 1 ? "" : "s") << ")" << std::endl;
    return failures == 0 ? 0 : 1;
}
