#include "irslink/beamform.hpp"

#include <algorithm>
#include <stdexcept>

#include "irslink/kernels.hpp"

namespace irslink {

namespace {

double wrap_pi(double a) {
    while (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
    while (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
    return a;
}

std::vector<cdouble> conj_normalized(const std::vector<cdouble>& v) {
    const double n = std::sqrt(kernels::norm_sq(v.data(), v.size()));
    if (n == 0.0) throw std::invalid_argument("cannot beamform on a zero response");
    std::vector<cdouble> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = std::conj(v[i]) / n;
    return w;
}

}  // namespace

double optimal_tilt(const TiltFeasibility& feas) {
    if (!std::isfinite(feas.alpha_incident) || !std::isfinite(feas.alpha_departure))
        throw std::invalid_argument("non-finite feasibility angles");
    if (feas.alpha_departure > feas.alpha_incident)
        throw std::domain_error("infeasible geometry: empty tilt interval");
    const double eta = 0.5 * (feas.alpha_incident + feas.alpha_departure);
    return std::clamp(eta, feas.alpha_departure, feas.alpha_incident);
}

double tilt_2d_baseline(const DirectionAngles& irs_incident, const DirectionAngles& irs_departure) {
    return 0.5 * (irs_incident.elevation - irs_departure.elevation);
}

PhaseShiftMatrix optimal_phase_shifts(const SteeringVector& irs_departure_resp,
                                      const SteeringVector& irs_incident_resp, cdouble eps_gu,
                                      cdouble eps_sat, double rho) {
    if (irs_departure_resp.size() != irs_incident_resp.size())
        throw std::invalid_argument("IRS response length mismatch");
    const cdouble rot{std::cos(rho), std::sin(rho)};
    PhaseShiftMatrix theta;
    theta.diagonal.resize(irs_departure_resp.size());
    for (std::size_t m = 0; m < theta.diagonal.size(); ++m)
        theta.diagonal[m] =
            rot * std::conj(eps_gu * eps_sat * irs_departure_resp[m] * irs_incident_resp[m]);
    return theta;
}

std::vector<cdouble> mrt_beam(const SteeringVector& resp) { return conj_normalized(resp); }

std::pair<std::vector<cdouble>, std::vector<cdouble>> mrt_mrc(const SteeringVector& gu_resp,
                                                              const SteeringVector& sat_resp) {
    return {conj_normalized(gu_resp), conj_normalized(sat_resp)};
}

std::vector<cdouble> scenario2_receive_beam(const std::vector<cdouble>& h_gu_stack) {
    // The direction of (H^G)* is what matters; normalize to unit norm so the
    // beam constraint holds.
    return conj_normalized(h_gu_stack);
}

double scenario2_common_phase(const SteeringVector& sat_gu_arrival,
                              const SteeringVector& irs_gu_arrival, cdouble eps_sg) {
    if (sat_gu_arrival.size() != irs_gu_arrival.size())
        throw std::invalid_argument("arrival response length mismatch");
    const cdouble inner =
        kernels::dot_c(sat_gu_arrival.data(), irs_gu_arrival.data(), sat_gu_arrival.size());
    if (std::abs(inner) == 0.0) return 0.0;
    return wrap_pi(std::arg(eps_sg) - std::arg(inner));
}

std::vector<cdouble> scenario2_transmit_beam(const CMat& h_sat_stack) {
    if (h_sat_stack.rows() != 2) throw std::invalid_argument("expected a 2-row stacked matrix");
    const std::size_t n = static_cast<std::size_t>(h_sat_stack.cols());
    const cdouble* r0 = h_sat_stack.row(0);
    const cdouble* r1 = h_sat_stack.row(1);
    // 2x2 Gram matrix H H^H; its dominant eigenvector gives the left singular
    // direction, mapped back through H^H.
    const double a = kernels::norm_sq(r0, n);
    const double c = kernels::norm_sq(r1, n);
    const cdouble b = kernels::dot_c(r1, r0, n);  // sum r0 * conj(r1)
    if (a + c == 0.0) throw std::invalid_argument("degenerate zero stack for SVD");
    const double mid = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), std::abs(b));
    const double lambda_max = mid + rad;
    cdouble u0, u1;
    if (std::abs(b) > 1e-15 * (a + c)) {
        u0 = b;
        u1 = cdouble{lambda_max - a, 0.0};
    } else {
        u0 = (a >= c) ? 1.0 : 0.0;
        u1 = (a >= c) ? 0.0 : 1.0;
    }
    std::vector<cdouble> w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = std::conj(r0[j]) * u0 + std::conj(r1[j]) * u1;
    const double norm = std::sqrt(kernels::norm_sq(w.data(), n));
    if (norm == 0.0) throw std::invalid_argument("SVD produced a zero beam");
    for (auto& x : w) x /= norm;
    return w;
}

double steering_alignment_deviation(const SteeringVector& sat_to_gu_resp,
                                    const SteeringVector& sat_to_irs_resp) {
    const double na = std::sqrt(kernels::norm_sq(sat_to_gu_resp.data(), sat_to_gu_resp.size()));
    const double nb = std::sqrt(kernels::norm_sq(sat_to_irs_resp.data(), sat_to_irs_resp.size()));
    if (na == 0.0 || nb == 0.0) throw std::invalid_argument("zero response in deviation");
    const cdouble inner =
        kernels::dot_c(sat_to_gu_resp.data(), sat_to_irs_resp.data(), sat_to_gu_resp.size());
    return 1.0 - std::abs(inner) / (na * nb);
}

std::vector<cdouble> isotropic_beam(int n) {
    if (n < 1) throw std::invalid_argument("beam length must be >= 1");
    return std::vector<cdouble>(static_cast<std::size_t>(n),
                                cdouble{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
}

}  // namespace irslink
