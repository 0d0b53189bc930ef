#include "irslink/channel.hpp"

#include <stdexcept>

#include "irslink/kernels.hpp"

namespace irslink {

CMat CMat::operator+(const CMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    CMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
    return out;
}

CMat CMat::operator*(const CMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    CMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const cdouble aik = (*this)(i, k);
            if (aik == cdouble{}) continue;
            const cdouble* brow = o.row(k);
            cdouble* orow = out.row(i);
            for (int j = 0; j < o.cols_; ++j) orow[j] += aik * brow[j];
        }
    return out;
}

CMat CMat::operator*(cdouble s) const {
    CMat out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

CMat CMat::transpose() const {
    CMat out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

CMat CMat::outer(cdouble scale, const SteeringVector& a, const SteeringVector& b) {
    CMat out(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const cdouble sa = scale * a[i];
        cdouble* row = out.row(static_cast<int>(i));
        for (std::size_t j = 0; j < b.size(); ++j) row[j] = sa * b[j];
    }
    return out;
}

std::vector<cdouble> matvec(const CMat& m, const std::vector<cdouble>& w) {
    if (static_cast<int>(w.size()) != m.cols())
        throw std::invalid_argument("matvec dimension mismatch");
    std::vector<cdouble> out(static_cast<std::size_t>(m.rows()));
    for (int i = 0; i < m.rows(); ++i) out[i] = kernels::dot_u(m.row(i), w.data(), w.size());
    return out;
}

namespace {

inline cdouble propagation(double k_w, double d) {
    return {std::cos(-k_w * d), std::sin(-k_w * d)};
}

// sin(phi)^k clamped to the front hemisphere.
inline double pattern_term(double phi, double k) {
    const double s = std::sin(phi);
    if (s <= 0.0) return 0.0;
    return std::pow(s, k);
}

}  // namespace

EffectiveGain effective_gain(const DirectionAngles& irs_incident,
                             const DirectionAngles& irs_departure, double eta, double d_si,
                             double d_ig, const RadiationParams& params, const UpaConfig& irs_cfg,
                             double lambda) {
    if (!(d_si > 0.0) || !(d_ig > 0.0)) throw std::invalid_argument("hop distance must be positive");
    EffectiveGain g;
    g.delta = std::sqrt(params.gain_gu * params.gain_sat * params.gain_irs * irs_cfg.d_x *
                        irs_cfg.d_y * lambda * lambda) /
              std::sqrt(64.0 * std::pow(std::numbers::pi, 3.0) * (d_si * d_ig) * (d_si * d_ig));
    const double phi_in = modified_elevation(irs_incident, eta, Side::Incident);
    const double phi_out = modified_elevation(irs_departure, eta, Side::Departure);
    g.pattern = pattern_term(phi_in, params.k) * pattern_term(phi_out, params.k);
    g.beta_eff = g.delta * std::sqrt(g.pattern);
    return g;
}

LinkChannel sat_irs_channel(const DirectionAngles& sat_departure,
                            const DirectionAngles& irs_incident, double eta, double d_si,
                            double d_ig, const UpaConfig& sat_cfg, const UpaConfig& irs_cfg,
                            const DirectionAngles& irs_departure, const RadiationParams& params,
                            double lambda) {
    if (!(d_si > 0.0)) throw std::invalid_argument("satellite-IRS distance must be positive");
    const double k_w = 2.0 * std::numbers::pi / lambda;
    LinkChannel ch;
    ch.hop_distance = d_si;
    ch.propagation_phase = propagation(k_w, d_si);
    // Full cascaded amplitude on this hop; the IRS->GU hop carries 1.
    ch.amplitude_gain =
        effective_gain(irs_incident, irs_departure, eta, d_si, d_ig, params, irs_cfg, lambda)
            .beta_eff;
    const SteeringVector rx = tilted_irs_response(irs_incident, eta, irs_cfg, k_w, Side::Incident);
    const SteeringVector tx = upa_response(sat_departure, sat_cfg, k_w);
    ch.matrix = CMat::outer(ch.amplitude_gain * ch.propagation_phase, rx, tx);
    return ch;
}

LinkChannel irs_gu_channel(const DirectionAngles& irs_departure,
                           const DirectionAngles& gu_incident, double eta, double d_ig,
                           const UpaConfig& irs_cfg, const UpaConfig& gu_cfg, double lambda) {
    if (!(d_ig > 0.0)) throw std::invalid_argument("IRS-GU distance must be positive");
    const double k_w = 2.0 * std::numbers::pi / lambda;
    LinkChannel ch;
    ch.hop_distance = d_ig;
    ch.propagation_phase = propagation(k_w, d_ig);
    ch.amplitude_gain = 1.0;
    const SteeringVector rx = upa_response(gu_incident, gu_cfg, k_w);
    const SteeringVector tx =
        tilted_irs_response(irs_departure, eta, irs_cfg, k_w, Side::Departure);
    ch.matrix = CMat::outer(ch.amplitude_gain * ch.propagation_phase, rx, tx);
    return ch;
}

LinkChannel direct_channel(const DirectionAngles& sat_departure,
                           const DirectionAngles& gu_incident, double d_sg,
                           const UpaConfig& sat_cfg, const UpaConfig& gu_cfg,
                           const RadiationParams& params, double lambda) {
    if (!(d_sg > 0.0)) throw std::invalid_argument("satellite-GU distance must be positive");
    const double k_w = 2.0 * std::numbers::pi / lambda;
    LinkChannel ch;
    ch.hop_distance = d_sg;
    ch.propagation_phase = propagation(k_w, d_sg);
    ch.amplitude_gain = std::sqrt(params.gain_gu * params.gain_sat * lambda * lambda) *
                        pattern_term(sat_departure.elevation, params.k_t / 2.0) *
                        pattern_term(gu_incident.elevation, params.k_r / 2.0) /
                        (4.0 * std::numbers::pi * d_sg);
    const SteeringVector rx = upa_response(gu_incident, gu_cfg, k_w);
    const SteeringVector tx = upa_response(sat_departure, sat_cfg, k_w);
    ch.matrix = CMat::outer(ch.amplitude_gain * ch.propagation_phase, rx, tx);
    return ch;
}

CMat composite_scenario1(const LinkChannel& h_ig, const PhaseShiftMatrix& theta,
                         const LinkChannel& h_si) {
    const int m = static_cast<int>(theta.diagonal.size());
    if (h_ig.matrix.cols() != m || h_si.matrix.rows() != m)
        throw std::invalid_argument("phase matrix dimension mismatch");
    // Scale the columns of H_ig by the diagonal, then multiply.
    CMat scaled = h_ig.matrix;
    for (int i = 0; i < scaled.rows(); ++i)
        for (int j = 0; j < m; ++j) scaled(i, j) *= theta.diagonal[static_cast<std::size_t>(j)];
    return scaled * h_si.matrix;
}

CMat composite_scenario2(const LinkChannel& h_sg, const CMat& scenario1) {
    return h_sg.matrix + scenario1;
}

}  // namespace irslink
