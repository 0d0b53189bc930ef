#pragma once

#include <optional>
#include <string>
#include <vector>

#include "irslink/beamform.hpp"

namespace irslink {

enum class Scenario { I, II };

enum class BlockageMode { PlaneHalfspace, ElevationMask, AlwaysDirect, NeverDirect };

/// Geometric trigger for the presence of the direct satellite-GU path.
/// Plane-halfspace: direct path exists while satellite and GU sit strictly on
/// the same side of the plane. An unset plane (zero normal) is resolved at
/// scene build time to the plane through the IRS with normal along the IRS
/// boresight.
struct BlockageModel {
    BlockageMode mode = BlockageMode::PlaneHalfspace;
    Vec3 plane_point;
    Vec3 plane_normal;           // zero => derive from the IRS frame
    double mask_angle = 0.0;     // radians, elevation-mask mode
};

enum class DesignMethod { Proposed, Tilt2D, FixedEtaZero, Isotropic, NoIrs };

std::string method_name(DesignMethod m);
DesignMethod method_from_name(const std::string& name);

struct NodeConfig {
    GeodeticPoint position;
    double heading = heading::north;  // radians east of north
};

/// Named fixed satellite position for the l_V and M sweeps.
struct SatellitePosition {
    std::string name;
    GeodeticPoint position;
};

struct SimulationConfig {
    double earth_radius = kEarthRadius;
    OrbitModel orbit;
    NodeConfig gu;
    NodeConfig irs;
    UpaConfig sat_array;
    UpaConfig gu_array;
    UpaConfig irs_array;
    RadiationParams radiation;  // linear gains
    double lambda = 2.0;        // meters
    double tx_power_w = 0.0;
    double noise_w = 0.0;
    BlockageModel blockage;
    double time_step = 1.0;     // seconds
    double duration = 20.0;     // seconds
    std::vector<double> lv_values;          // meters
    std::vector<int> m_values;              // element counts, square panels
    std::vector<SatellitePosition> sat_positions;
    std::vector<DesignMethod> methods;
};

/// Built-in parameter set and node layout of the reference experiments.
SimulationConfig default_config();

struct SweepRecord {
    double x = 0.0;  // swept variable (time, l_V or M)
    Scenario scenario = Scenario::I;
    std::vector<double> snr_db;     // one per method, -inf for a zero channel
    double eta = 0.0;               // proposed design tilt, radians
    double phi_tilde_in = 0.0;      // modified elevations at that tilt
    double phi_tilde_out = 0.0;
    bool flagged = false;           // infeasible geometry at this point
};

/// All frames, angle pairs and hop distances for one satellite/GU placement.
struct SceneGeometry {
    LocalFrame sat_frame;
    LocalFrame irs_frame;
    LocalFrame gu_frame;
    DirectionAngles sat_d_si;  // AoD at the satellite toward the IRS
    DirectionAngles irs_a_si;  // AoA at the IRS
    DirectionAngles irs_d_ig;  // AoD at the IRS toward the GU
    DirectionAngles gu_a_ig;   // AoA at the GU from the IRS
    DirectionAngles sat_d_sg;  // AoD at the satellite toward the GU
    DirectionAngles gu_a_sg;   // AoA at the GU from the satellite
    double d_si = 0.0;
    double d_ig = 0.0;
    double d_sg = 0.0;
    Scenario scenario = Scenario::I;
};

Scenario classify_scenario(const Vec3& sat_pos, const Vec3& gu_pos, const BlockageModel& blockage,
                           const LocalFrame& irs_frame);

SceneGeometry build_scene(const SimulationConfig& cfg, const Vec3& sat_pos, const Vec3& sat_vel,
                          const Vec3& gu_pos);

struct DesignResult {
    double snr_db = -std::numeric_limits<double>::infinity();
    BeamformingSolution solution;
    double phi_tilde_in = 0.0;
    double phi_tilde_out = 0.0;
    bool feasible = true;
};

DesignResult solve_design(const SimulationConfig& cfg, const SceneGeometry& scene,
                          DesignMethod method);

double evaluate_snr(const CMat& composite, const std::vector<cdouble>& w_gu,
                    const std::vector<cdouble>& w_sat, double tx_power_w, double noise_w);

std::vector<SweepRecord> run_time_sweep(const SimulationConfig& cfg);

/// l_V sweep around a fixed satellite position: the GU slides along the IRS
/// frame x-axis so its signed offset from the IRS y-z plane takes each value.
/// Scenario I throughout (cascaded path only).
std::vector<SweepRecord> run_lv_sweep(const SimulationConfig& cfg,
                                      const GeodeticPoint& sat_position,
                                      const std::vector<double>& lv_values);

/// SNR versus reflecting-element count at a fixed satellite position, square
/// panels. Scenario I throughout.
std::vector<SweepRecord> run_m_sweep(const SimulationConfig& cfg,
                                     const GeodeticPoint& sat_position,
                                     const std::vector<int>& m_values);

}  // namespace irslink
