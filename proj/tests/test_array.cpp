#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "irslink/array.hpp"

using namespace irslink;

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_pi(double a) {
    while (a > kPi) a -= 2 * kPi;
    while (a <= -kPi) a += 2 * kPi;
    return a;
}

DirectionAngles random_angles(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> az(-kPi, kPi);
    std::uniform_real_distribution<double> el(-kPi / 2 + 0.02, kPi / 2 - 0.02);
    return {az(rng), el(rng)};
}

}  // namespace

TEST_CASE("ULA index set and phase reference") {
    const double k_w = 2 * kPi / 2.0;
    SUBCASE("even length is asymmetric around the zero-phase element") {
        const SteeringVector v = ula_steering(0.3, 4, k_w);
        REQUIRE(v.size() == 4);
        // Indices -1, 0, 1, 2.
        CHECK(std::abs(v[1] - cdouble{1.0, 0.0}) < 1e-15);
        const int idx[4] = {-1, 0, 1, 2};
        for (int i = 0; i < 4; ++i)
            CHECK(wrap_pi(std::arg(v[i]) - wrap_pi(k_w * idx[i] * 0.3)) ==
                  doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("odd length is symmetric") {
        const SteeringVector v = ula_steering(0.11, 5, k_w);
        REQUIRE(v.size() == 5);
        CHECK(std::abs(v[2] - cdouble{1.0, 0.0}) < 1e-15);
        // Symmetric indices conjugate-pair around the center.
        CHECK(std::abs(v[0] - std::conj(v[4])) < 1e-12);
        CHECK(std::abs(v[1] - std::conj(v[3])) < 1e-12);
    }
    SUBCASE("entries are unit modulus") {
        for (const cdouble& e : ula_steering(0.7, 9, k_w))
            CHECK(std::abs(e) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(ula_steering(0.1, 0, k_w), std::invalid_argument);
}

TEST_CASE("UPA response is the Kronecker product of the axis ULAs") {
    std::mt19937_64 rng(404);
    const UpaConfig cfg{5, 4, 0.25, 0.25};
    const double k_w = 2 * kPi / 2.0;
    for (int rep = 0; rep < 50; ++rep) {
        const DirectionAngles a = random_angles(rng);
        const SteeringVector v = upa_response(a, cfg, k_w);
        REQUIRE(static_cast<int>(v.size()) == cfg.element_count());
        const double cp = std::cos(a.elevation);
        const SteeringVector vx = ula_steering(cfg.d_x * cp * std::cos(a.azimuth), cfg.n_x, k_w);
        const SteeringVector vy = ula_steering(cfg.d_y * cp * std::sin(a.azimuth), cfg.n_y, k_w);
        for (int ix = 0; ix < cfg.n_x; ++ix)
            for (int iy = 0; iy < cfg.n_y; ++iy)
                CHECK(std::abs(v[ix * cfg.n_y + iy] - vx[ix] * vy[iy]) < 1e-14);
    }
}

TEST_CASE("rotation matrix properties") {
    const Mat3 r0 = rotation_matrix(0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r0[i][j] == doctest::Approx(i == j ? 1.0 : 0.0));

    std::mt19937_64 rng(405);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int rep = 0; rep < 20; ++rep) {
        const double eta = u(rng);
        const Mat3 r = rotation_matrix(eta);
        const Mat3 rt = rotation_matrix(-eta);
        // R(eta) R(-eta) = I and the x axis is fixed.
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += r[i][k] * rt[k][j];
                CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
            }
        CHECK(r[0][0] == 1.0);
        const double det =
            r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) -
            r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
            r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
        CHECK(det == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("rotate_direction equals R(-eta) applied to the unit direction") {
    std::mt19937_64 rng(406);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int rep = 0; rep < 100; ++rep) {
        const DirectionAngles a = random_angles(rng);
        const double eta = u(rng);
        const Vec3 r = rotate_direction(a, eta);
        CHECK(r.norm() == doctest::Approx(1.0).epsilon(1e-12));
        const Vec3 d = direction_unit(a);
        const Mat3 rot = rotation_matrix(-eta);
        const Vec3 expect{
            rot[0][0] * d.x + rot[0][1] * d.y + rot[0][2] * d.z,
            rot[1][0] * d.x + rot[1][1] * d.y + rot[1][2] * d.z,
            rot[2][0] * d.x + rot[2][1] * d.y + rot[2][2] * d.z,
        };
        CHECK((r - expect).norm() < 1e-12);
    }
}

TEST_CASE("alpha and B helper identities") {
    std::mt19937_64 rng(407);
    for (int rep = 0; rep < 200; ++rep) {
        const DirectionAngles a = random_angles(rng);
        if (std::abs(std::sin(a.azimuth)) < 1e-6) continue;
        const double alpha = tilt_alpha(a);
        CHECK(std::tan(alpha) ==
              doctest::Approx(std::tan(a.elevation) / std::sin(a.azimuth)).epsilon(1e-9));
        CHECK(std::abs(alpha) <= kPi / 2);
        const double cp = std::cos(a.elevation), sp = std::sin(a.elevation);
        const double st = std::sin(a.azimuth), ct = std::cos(a.azimuth);
        CHECK(tilt_b(a) ==
              doctest::Approx(cp * cp * ct * ct / (cp * cp * st * st + sp * sp)).epsilon(1e-12));
    }
}

TEST_CASE("modified elevation matches the rotated-direction arcsine") {
    std::mt19937_64 rng(408);
    std::uniform_real_distribution<double> el(-1.3, 1.3);
    std::uniform_real_distribution<double> eta(-1.2, 1.2);
    for (int rep = 0; rep < 300; ++rep) {
        // Incident closed form is valid on the sin(theta) > 0 half-range,
        // departure on sin(theta) < 0; generate each in its own range.
        const double az_in = std::uniform_real_distribution<double>(0.02, kPi - 0.02)(rng);
        const double az_out = std::uniform_real_distribution<double>(-kPi + 0.02, -0.02)(rng);
        const double e = eta(rng);
        const DirectionAngles in{az_in, el(rng)};
        const DirectionAngles out{az_out, el(rng)};
        CHECK(modified_elevation(in, e, Side::Incident) ==
              doctest::Approx(std::asin(rotate_direction(in, e).z)).epsilon(1e-9));
        // For sin(theta) < 0 the departure closed form also lands on the
        // rotated-direction arcsine with positive sign.
        CHECK(modified_elevation(out, e, Side::Departure) ==
              doctest::Approx(std::asin(rotate_direction(out, e).z)).epsilon(1e-9));
    }
    SUBCASE("zero tilt reduces to the plain elevation") {
        const DirectionAngles a{1.0, 0.4};
        CHECK(modified_elevation(a, 0.0, Side::Incident) == doctest::Approx(0.4).epsilon(1e-12));
    }
    SUBCASE("singular azimuth falls back to the rotated direction") {
        const DirectionAngles a{0.0, 0.4};
        CHECK(modified_elevation(a, 0.3, Side::Incident) ==
              doctest::Approx(std::asin(rotate_direction(a, 0.3).z)).epsilon(1e-12));
    }
}

TEST_CASE("modified azimuth reproduces the rotated in-plane direction") {
    std::mt19937_64 rng(409);
    std::uniform_real_distribution<double> az(-kPi + 0.02, kPi - 0.02);
    std::uniform_real_distribution<double> el(-1.3, 1.3);
    std::uniform_real_distribution<double> eta(-1.2, 1.2);
    for (int rep = 0; rep < 300; ++rep) {
        const DirectionAngles a{az(rng), el(rng)};
        const double e = eta(rng);
        const Vec3 r = rotate_direction(a, e);
        const double rho = std::hypot(r.x, r.y);
        if (rho < 1e-9) continue;
        const double theta = modified_azimuth(a, e);
        CHECK(std::cos(theta) == doctest::Approx(r.x / rho).epsilon(1e-9));
        CHECK(std::sin(theta) == doctest::Approx(r.y / rho).epsilon(1e-9));
    }
}

TEST_CASE("path-difference and modified-angle responses agree") {
    std::mt19937_64 rng(410);
    std::uniform_real_distribution<double> eta(-1.3, 1.3);
    std::uniform_real_distribution<double> spacing(0.05, 0.5);
    for (int rep = 0; rep < 200; ++rep) {
        const DirectionAngles a = random_angles(rng);
        const double e = eta(rng);
        const UpaConfig cfg{1 + static_cast<int>(rng() % 16), 1 + static_cast<int>(rng() % 16),
                            spacing(rng), spacing(rng)};
        const double k_w = 2 * kPi / 2.0;
        const SteeringVector ref = tilted_irs_response_elementwise(a, e, cfg, k_w);
        for (const Side side : {Side::Incident, Side::Departure}) {
            const SteeringVector v = tilted_irs_response(a, e, cfg, k_w, side);
            REQUIRE(v.size() == ref.size());
            for (std::size_t i = 0; i < v.size(); ++i) CHECK(std::abs(v[i] - ref[i]) < 1e-9);
        }
    }
}
