#include "irslink/geo.hpp"

namespace irslink {

namespace {

Vec3 up_at(const GeodeticPoint& p) {
    return {std::cos(p.latitude) * std::cos(p.longitude),
            std::cos(p.latitude) * std::sin(p.longitude),
            std::sin(p.latitude)};
}

Vec3 north_at(const GeodeticPoint& p) {
    return {-std::sin(p.latitude) * std::cos(p.longitude),
            -std::sin(p.latitude) * std::sin(p.longitude),
            std::cos(p.latitude)};
}

Vec3 east_at(const GeodeticPoint& p) {
    return {-std::sin(p.longitude), std::cos(p.longitude), 0.0};
}

}  // namespace

Vec3 geodetic_to_cartesian(const GeodeticPoint& p) {
    if (std::abs(p.latitude) > std::numbers::pi / 2.0 + 1e-15)
        throw std::invalid_argument("latitude outside [-pi/2, pi/2]");
    if (!(p.radius > 0.0)) throw std::invalid_argument("radius must be positive");
    return p.radius * up_at(p);
}

GeodeticPoint cartesian_to_geodetic(const Vec3& v) {
    const double r = v.norm();
    if (r == 0.0) throw std::invalid_argument("zero vector has no geodetic image");
    GeodeticPoint p;
    p.radius = r;
    p.latitude = std::asin(v.z / r);
    const double rho = std::hypot(v.x, v.y);
    // Longitude at the poles is pinned to 0.
    p.longitude = (rho == 0.0) ? 0.0 : std::atan2(v.y, v.x);
    return p;
}

LocalFrame make_local_frame(const GeodeticPoint& position, double heading_rad, Face face) {
    const Vec3 up = up_at(position);
    const Vec3 north = north_at(position);
    const Vec3 east = east_at(position);
    if (std::hypot(north.x, north.y, north.z) < 1e-12 ||
        std::abs(std::cos(position.latitude)) < 1e-12)
        throw std::domain_error("frame is degenerate at the poles");

    const Vec3 along = std::cos(heading_rad) * north + std::sin(heading_rad) * east;

    LocalFrame f;
    f.origin = geodetic_to_cartesian(position);
    if (face == Face::Horizon) {
        // Wall-mounted panel: plane vertical, boresight horizontal.
        f.y_axis = up;
        f.z_axis = along.normalized();
        f.x_axis = f.y_axis.cross(f.z_axis);
    } else {
        // Panel in the tangent plane, boresight nadir, y along the heading.
        f.z_axis = -up;
        f.y_axis = along.normalized();
        f.x_axis = f.y_axis.cross(f.z_axis);
    }
    return f;
}

LocalFrame satellite_frame(const Vec3& position, const Vec3& velocity) {
    const Vec3 up = position.normalized();
    Vec3 tangential = velocity - velocity.dot(up) * up;
    if (tangential.norm() == 0.0)
        throw std::invalid_argument("velocity is radial; satellite frame undefined");
    LocalFrame f;
    f.origin = position;
    f.z_axis = -up;
    f.y_axis = tangential.normalized();
    f.x_axis = f.y_axis.cross(f.z_axis);
    return f;
}

namespace {

struct GreatCircle {
    Vec3 u_start;  // unit start position
    Vec3 u_perp;   // unit vector in the orbit plane, orthogonal to u_start
};

GreatCircle orbit_circle(const OrbitModel& orbit) {
    if (!(orbit.orbit_radius > kEarthRadius))
        throw std::invalid_argument("orbit radius must exceed the Earth radius");
    if (!(orbit.speed > 0.0)) throw std::invalid_argument("orbit speed must be positive");
    const Vec3 a = geodetic_to_cartesian(orbit.start_point).normalized();
    const Vec3 b = geodetic_to_cartesian(orbit.end_point).normalized();
    const Vec3 rejected = b - a.dot(b) * a;
    if (rejected.norm() < 1e-12)
        throw std::invalid_argument(a.dot(b) > 0.0
                                        ? "orbit start and end coincide"
                                        : "antipodal orbit endpoints give an ambiguous arc");
    return {a, rejected.normalized()};
}

}  // namespace

Vec3 propagate_orbit(const OrbitModel& orbit, double t) {
    if (t < 0.0) throw std::invalid_argument("orbit time must be nonnegative");
    const GreatCircle gc = orbit_circle(orbit);
    const double angle = orbit.speed / orbit.orbit_radius * t;
    return orbit.orbit_radius * (std::cos(angle) * gc.u_start + std::sin(angle) * gc.u_perp);
}

Vec3 orbit_velocity(const OrbitModel& orbit, double t) {
    const GreatCircle gc = orbit_circle(orbit);
    const double angle = orbit.speed / orbit.orbit_radius * t;
    return orbit.speed * (-std::sin(angle) * gc.u_start + std::cos(angle) * gc.u_perp);
}

DirectionAngles direction_angles(const LocalFrame& frame, const Vec3& target) {
    const Vec3 diff = target - frame.origin;
    if (diff.norm() == 0.0)
        throw std::invalid_argument("target coincides with the frame origin");
    const Vec3 d = diff.normalized();
    const double dx = d.dot(frame.x_axis);
    const double dy = d.dot(frame.y_axis);
    const double dz = d.dot(frame.z_axis);
    DirectionAngles a;
    a.elevation = std::asin(std::clamp(dz, -1.0, 1.0));
    a.azimuth = (dx == 0.0 && dy == 0.0) ? 0.0 : std::atan2(dy, dx);
    return a;
}

Vec3 direction_unit(const DirectionAngles& angles) {
    return {std::cos(angles.elevation) * std::cos(angles.azimuth),
            std::cos(angles.elevation) * std::sin(angles.azimuth),
            std::sin(angles.elevation)};
}

Vec3 frame_direction(const LocalFrame& frame, const DirectionAngles& angles) {
    const Vec3 r = direction_unit(angles);
    return r.x * frame.x_axis + r.y * frame.y_axis + r.z * frame.z_axis;
}

double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

}  // namespace irslink
