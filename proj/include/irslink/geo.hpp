#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irslink {

inline constexpr double kEarthRadius = 6371e3;  // spherical Earth, meters

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Position on the spherical Earth: latitude/longitude in radians
/// (longitude positive east), radius measured from the Earth center.
struct GeodeticPoint {
    double latitude = 0.0;
    double longitude = 0.0;
    double radius = kEarthRadius;
};

/// Azimuth/elevation pair in a node's array frame. The associated unit
/// direction is r = (cos(el)cos(az), cos(el)sin(az), sin(el)) with the
/// components mapped onto the frame's (x, y, z) axes in that order, so the
/// elevation is the angle off the array plane toward the boresight.
struct DirectionAngles {
    double azimuth = 0.0;    // theta, (-pi, pi]
    double elevation = 0.0;  // phi, [-pi/2, pi/2]
};

/// Right-handed orthonormal array frame: x/y span the array plane
/// (x horizontal, y vertical for wall-mounted panels), z is the boresight.
struct LocalFrame {
    Vec3 origin;
    Vec3 x_axis;
    Vec3 y_axis;
    Vec3 z_axis;
};

/// Circular orbit on the great circle through start/end at fixed radius.
struct OrbitModel {
    double orbit_radius = 0.0;  // meters from Earth center
    double speed = 0.0;         // m/s along the orbit
    GeodeticPoint start_point;
    GeodeticPoint end_point;
};

/// Panel mounting style. Horizon: panel plane vertical, boresight along the
/// heading tangent (ground nodes). Sky: panel in the local tangent plane,
/// boresight nadir, y axis along the heading tangent (satellite).
enum class Face { Horizon, Sky };

/// Compass headings as azimuth east of north, radians.
namespace heading {
inline constexpr double north = 0.0;
inline constexpr double east = std::numbers::pi / 2.0;
inline constexpr double south = std::numbers::pi;
inline constexpr double west = 3.0 * std::numbers::pi / 2.0;
}  // namespace heading

Vec3 geodetic_to_cartesian(const GeodeticPoint& p);
GeodeticPoint cartesian_to_geodetic(const Vec3& v);

LocalFrame make_local_frame(const GeodeticPoint& position, double heading_rad, Face face);

/// Satellite frame from an explicit velocity: z nadir, y along velocity.
LocalFrame satellite_frame(const Vec3& position, const Vec3& velocity);

Vec3 propagate_orbit(const OrbitModel& orbit, double t);
Vec3 orbit_velocity(const OrbitModel& orbit, double t);

DirectionAngles direction_angles(const LocalFrame& frame, const Vec3& target);

/// Unit direction for an angle pair, in frame-local components.
Vec3 direction_unit(const DirectionAngles& angles);

/// Same direction expressed in world coordinates.
Vec3 frame_direction(const LocalFrame& frame, const DirectionAngles& angles);

double distance(const Vec3& a, const Vec3& b);

}  // namespace irslink
