#pragma once

#include <vector>

#include "irslink/array.hpp"

namespace irslink {

/// Dense complex matrix, row-major.
class CMat {
  public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    cdouble& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
    const cdouble& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }
    const cdouble* row(int r) const { return data_.data() + std::size_t(r) * cols_; }
    cdouble* row(int r) { return data_.data() + std::size_t(r) * cols_; }
    const std::vector<cdouble>& data() const { return data_; }

    CMat operator+(const CMat& o) const;
    CMat operator*(const CMat& o) const;
    CMat operator*(cdouble s) const;
    CMat transpose() const;

    /// scale * a * b^T
    static CMat outer(cdouble scale, const SteeringVector& a, const SteeringVector& b);

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cdouble> data_;
};

/// y = M w
std::vector<cdouble> matvec(const CMat& m, const std::vector<cdouble>& w);

/// Directional coefficients and linear antenna gains of the radiation model.
struct RadiationParams {
    double k = 2.0;    // IRS directional coefficient
    double k_t = 1.0;  // satellite
    double k_r = 1.0;  // ground user
    double gain_gu = 1.0;   // linear power gains
    double gain_sat = 1.0;
    double gain_irs = 1.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Rank-1 LoS hop: matrix = amplitude_gain * propagation_phase * a_rx a_tx^T.
struct LinkChannel {
    CMat matrix;
    double amplitude_gain = 0.0;     // beta
    cdouble propagation_phase = 1.0; // e^{-j k_w d}
    double hop_distance = 0.0;       // meters
};

struct PhaseShiftMatrix {
    std::vector<cdouble> diagonal;
};

struct EffectiveGain {
    double delta = 0.0;     // distance/gain amplitude factor
    double pattern = 0.0;   // F, in [0, 1]
    double beta_eff = 0.0;  // delta * sqrt(F)
};

/// Cascaded-path amplitude: delta from the link budget, F from the tilted
/// radiation pattern. The pattern contribution is clamped to 0 when a
/// modified elevation is nonpositive (the panel cannot radiate behind itself).
EffectiveGain effective_gain(const DirectionAngles& irs_incident,
                             const DirectionAngles& irs_departure, double eta, double d_si,
                             double d_ig, const RadiationParams& params, const UpaConfig& irs_cfg,
                             double lambda);

/// Satellite -> IRS hop. Carries the full cascaded amplitude beta_eff; the
/// IRS -> GU hop carries amplitude 1 (only the product is observable).
LinkChannel sat_irs_channel(const DirectionAngles& sat_departure,
                            const DirectionAngles& irs_incident, double eta, double d_si,
                            double d_ig, const UpaConfig& sat_cfg, const UpaConfig& irs_cfg,
                            const DirectionAngles& irs_departure, const RadiationParams& params,
                            double lambda);

LinkChannel irs_gu_channel(const DirectionAngles& irs_departure,
                           const DirectionAngles& gu_incident, double eta, double d_ig,
                           const UpaConfig& irs_cfg, const UpaConfig& gu_cfg, double lambda);

/// Direct satellite -> GU LoS channel with the sin^k element patterns.
LinkChannel direct_channel(const DirectionAngles& sat_departure,
                           const DirectionAngles& gu_incident, double d_sg,
                           const UpaConfig& sat_cfg, const UpaConfig& gu_cfg,
                           const RadiationParams& params, double lambda);

/// H_ig * diag(theta) * H_si
CMat composite_scenario1(const LinkChannel& h_ig, const PhaseShiftMatrix& theta,
                         const LinkChannel& h_si);

/// H_sg + cascaded
CMat composite_scenario2(const LinkChannel& h_sg, const CMat& scenario1);

}  // namespace irslink
