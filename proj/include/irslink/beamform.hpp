#pragma once

#include "irslink/channel.hpp"

namespace irslink {

/// Joint design output: transceiver beams, IRS phase diagonal, mechanical
/// tilt and the common phase between IRS and GU.
struct BeamformingSolution {
    std::vector<cdouble> w_sat;  // unit norm, length N_S
    std::vector<cdouble> w_gu;   // unit norm, length N_G
    PhaseShiftMatrix theta;      // unit-modulus diagonal, length M
    double eta = 0.0;            // radians
    double rho = 0.0;            // radians
};

/// Factors of the Scenario-I objective decomposition.
struct ObjectiveBreakdown {
    double h_gu = 0.0;
    double h_sat = 0.0;
    double h_irs = 0.0;
};

/// Midpoint of the feasible tilt interval [alpha_departure, alpha_incident];
/// stationary point of the radiation pattern, clamped into the interval.
double optimal_tilt(const TiltFeasibility& feas);

/// Elevation-only benchmark: (phi_incident - phi_departure) / 2.
double tilt_2d_baseline(const DirectionAngles& irs_incident, const DirectionAngles& irs_departure);

/// Phase diagonal that co-phases every cascaded element path to rho.
PhaseShiftMatrix optimal_phase_shifts(const SteeringVector& irs_departure_resp,
                                      const SteeringVector& irs_incident_resp, cdouble eps_gu,
                                      cdouble eps_sat, double rho);

/// Conjugate-matched unit-norm beam for one array response.
std::vector<cdouble> mrt_beam(const SteeringVector& resp);

/// MRT/MRC pair (receive beam for the GU, transmit beam for the satellite).
std::pair<std::vector<cdouble>, std::vector<cdouble>> mrt_mrc(const SteeringVector& gu_resp,
                                                              const SteeringVector& sat_resp);

/// Conjugate direction of the stacked effective receive row, unit norm.
std::vector<cdouble> scenario2_receive_beam(const std::vector<cdouble>& h_gu_stack);

/// Common phase that co-phases the cascaded path with the direct path.
double scenario2_common_phase(const SteeringVector& sat_gu_arrival,
                              const SteeringVector& irs_gu_arrival, cdouble eps_sg);

/// First right-singular vector of the 2 x N_S stacked departure matrix.
std::vector<cdouble> scenario2_transmit_beam(const CMat& h_sat_stack);

/// 1 - |normalized inner product| of the two satellite departure responses.
double steering_alignment_deviation(const SteeringVector& sat_to_gu_resp, const SteeringVector& sat_to_irs_resp);

/// Uniform zero-phase unit-norm vector (no beamforming gain).
std::vector<cdouble> isotropic_beam(int n);

}  // namespace irslink
