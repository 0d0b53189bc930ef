#pragma once

#include <array>
#include <complex>
#include <vector>

#include "irslink/geo.hpp"

namespace irslink {

using cdouble = std::complex<double>;
using SteeringVector = std::vector<cdouble>;
using Mat3 = std::array<std::array<double, 3>, 3>;

struct UpaConfig {
    int n_x = 1;
    int n_y = 1;
    double d_x = 0.0;  // meters
    double d_y = 0.0;  // meters

    int element_count() const { return n_x * n_y; }
};

/// Mechanical tilt of the IRS panel plus the carrier wavenumber.
struct TiltState {
    double eta = 0.0;         // radians
    double wavenumber = 0.0;  // 2*pi/lambda, rad/m
};

/// Closed-form helper angles for the tilt range constraint and the
/// modified-elevation formulas.
struct TiltFeasibility {
    double alpha_incident = 0.0;   // radians
    double alpha_departure = 0.0;  // radians
    double b_incident = 0.0;
    double b_departure = 0.0;
};

enum class Side { Incident, Departure };

/// ULA phase ramp over the index set {floor(-n/2)+1, ..., 0, ..., floor(n/2)};
/// the entry at index 0 carries phase 0.
SteeringVector ula_steering(double delta, int n, double k_w);

/// Kronecker product of the x-axis and y-axis ULA responses.
SteeringVector upa_response(const DirectionAngles& angles, const UpaConfig& cfg, double k_w);

/// Rotation about the frame x-axis by eta (mixes the y and z components).
Mat3 rotation_matrix(double eta);

/// Path difference of element (m_x, m_y) on the tilted panel relative to the
/// center element, for a plane wave from the given direction.
double tilted_path_difference(const DirectionAngles& angles, double eta, int m_x, int m_y,
                              double d_x, double d_y);

/// Signal direction expressed in the tilted-panel frame: R(-eta) * r(psi).
Vec3 rotate_direction(const DirectionAngles& angles, double eta);

/// Alpha/B helper angles for one direction (alpha = atan(tan(phi)/sin(theta)),
/// principal branch).
double tilt_alpha(const DirectionAngles& angles);
double tilt_b(const DirectionAngles& angles);

TiltFeasibility tilt_feasibility(const DirectionAngles& incident, const DirectionAngles& departure);

/// Elevation of the signal relative to the tilted panel plane. Falls back to
/// the rotated-direction arcsine where the alpha/B closed form is singular.
double modified_elevation(const DirectionAngles& angles, double eta, Side side);

/// Azimuth of the signal in the tilted panel plane, full-quadrant.
double modified_azimuth(const DirectionAngles& angles, double eta);

/// Tilted IRS response via the modified-angle construction.
SteeringVector tilted_irs_response(const DirectionAngles& angles, double eta, const UpaConfig& cfg,
                                   double k_w, Side side);

/// Same response assembled element by element from the path differences.
/// Kept as an independent route; must agree with tilted_irs_response.
SteeringVector tilted_irs_response_elementwise(const DirectionAngles& angles, double eta,
                                               const UpaConfig& cfg, double k_w);

}  // namespace irslink
