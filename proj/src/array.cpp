#include "irslink/array.hpp"

#include <stdexcept>

namespace irslink {

namespace {

// Element index set: floor(-n/2)+1 ... floor(n/2); asymmetric for even n,
// phase reference at index 0.
inline int index_lo(int n) { return static_cast<int>(std::floor(-n / 2.0)) + 1; }
inline int index_hi(int n) { return n / 2; }

inline cdouble unit_phase(double phase) { return {std::cos(phase), std::sin(phase)}; }

// Principal-branch alpha = atan(tan(phi)/sin(theta)), evaluated without
// forming the tangent.
double alpha_principal(double sin_phi, double cos_phi, double sin_theta) {
    const double s = (sin_theta >= 0.0) ? 1.0 : -1.0;
    return std::atan2(sin_phi * s, cos_phi * std::abs(sin_theta));
}

}  // namespace

SteeringVector ula_steering(double delta, int n, double k_w) {
    if (n < 1) throw std::invalid_argument("element count must be >= 1");
    SteeringVector v;
    v.reserve(static_cast<std::size_t>(n));
    for (int m = index_lo(n); m <= index_hi(n); ++m)
        v.push_back(unit_phase(k_w * static_cast<double>(m) * delta));
    return v;
}

SteeringVector upa_response(const DirectionAngles& angles, const UpaConfig& cfg, double k_w) {
    const double cp = std::cos(angles.elevation);
    const SteeringVector vx =
        ula_steering(cfg.d_x * cp * std::cos(angles.azimuth), cfg.n_x, k_w);
    const SteeringVector vy =
        ula_steering(cfg.d_y * cp * std::sin(angles.azimuth), cfg.n_y, k_w);
    SteeringVector out;
    out.reserve(vx.size() * vy.size());
    for (const cdouble& ax : vx)
        for (const cdouble& ay : vy) out.push_back(ax * ay);
    return out;
}

Mat3 rotation_matrix(double eta) {
    const double c = std::cos(eta), s = std::sin(eta);
    return {{{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}}};
}

double tilted_path_difference(const DirectionAngles& angles, double eta, int m_x, int m_y,
                              double d_x, double d_y) {
    const double sp = std::sin(angles.elevation), cp = std::cos(angles.elevation);
    const double st = std::sin(angles.azimuth), ct = std::cos(angles.azimuth);
    return m_x * cp * ct * d_x + m_y * (cp * st * std::cos(eta) + sp * std::sin(eta)) * d_y;
}

Vec3 rotate_direction(const DirectionAngles& angles, double eta) {
    const double sp = std::sin(angles.elevation), cp = std::cos(angles.elevation);
    const double st = std::sin(angles.azimuth), ct = std::cos(angles.azimuth);
    const double ce = std::cos(eta), se = std::sin(eta);
    return {cp * ct, cp * st * ce + se * sp, sp * ce - cp * st * se};
}

double tilt_alpha(const DirectionAngles& angles) {
    return alpha_principal(std::sin(angles.elevation), std::cos(angles.elevation),
                           std::sin(angles.azimuth));
}

double tilt_b(const DirectionAngles& angles) {
    const double sp = std::sin(angles.elevation), cp = std::cos(angles.elevation);
    const double st = std::sin(angles.azimuth), ct = std::cos(angles.azimuth);
    const double denom = cp * cp * st * st + sp * sp;
    if (denom == 0.0) throw std::domain_error("B undefined for in-plane x-axis direction");
    return (cp * ct) * (cp * ct) / denom;
}

TiltFeasibility tilt_feasibility(const DirectionAngles& incident,
                                 const DirectionAngles& departure) {
    return {tilt_alpha(incident), tilt_alpha(departure), tilt_b(incident), tilt_b(departure)};
}

double modified_elevation(const DirectionAngles& angles, double eta, Side side) {
    const double st = std::sin(angles.azimuth);
    if (std::abs(st) < 1e-12) {
        // alpha/B closed form is singular; the rotated direction is exact.
        return std::asin(std::clamp(rotate_direction(angles, eta).z, -1.0, 1.0));
    }
    const double alpha = tilt_alpha(angles);
    const double b = tilt_b(angles);
    const double arg = (side == Side::Incident) ? alpha - eta : eta - alpha;
    const double c = std::cos(arg);
    return std::atan(std::sin(arg) / std::sqrt(b + c * c));
}

double modified_azimuth(const DirectionAngles& angles, double eta) {
    const Vec3 r = rotate_direction(angles, eta);
    const double ct = std::cos(angles.azimuth);
    if (std::abs(ct) < 1e-12) return std::atan2(r.y, r.x);
    const double t = std::tan(angles.azimuth) * std::cos(eta) +
                     std::tan(angles.elevation) / ct * std::sin(eta);
    double theta = std::atan(t);
    // The scalar arctangent is ambiguous by pi; resolve the branch from the
    // rotated direction's component signs.
    if (r.x < 0.0) theta += (r.y >= 0.0) ? std::numbers::pi : -std::numbers::pi;
    return theta;
}

SteeringVector tilted_irs_response(const DirectionAngles& angles, double eta,
                                   const UpaConfig& cfg, double k_w, Side side) {
    const double phi = modified_elevation(angles, eta, side);
    const double theta = modified_azimuth(angles, eta);
    return upa_response({theta, phi}, cfg, k_w);
}

SteeringVector tilted_irs_response_elementwise(const DirectionAngles& angles, double eta,
                                               const UpaConfig& cfg, double k_w) {
    SteeringVector out;
    out.reserve(static_cast<std::size_t>(cfg.element_count()));
    for (int mx = index_lo(cfg.n_x); mx <= index_hi(cfg.n_x); ++mx)
        for (int my = index_lo(cfg.n_y); my <= index_hi(cfg.n_y); ++my) {
            const double dl = tilted_path_difference(angles, eta, mx, my, cfg.d_x, cfg.d_y);
            out.push_back(unit_phase(k_w * dl));
        }
    return out;
}

}  // namespace irslink
