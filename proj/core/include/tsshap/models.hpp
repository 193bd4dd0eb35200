#ifndef TSSHAP_MODELS_HPP
#define TSSHAP_MODELS_HPP

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "tsshap/types.hpp"

namespace tsshap {

/// y_t = alpha + sum_w beta_w * y_{t-w}. Window width W = beta.size().
struct ARParams {
    double alpha = 0.0;
    Eigen::VectorXd beta;

    int order() const { return static_cast<int>(beta.size()); }
    int window() const { return order(); }
};

/// y_t = alpha + eps_t + sum_w gamma_w * eps_{t-w}, with lagged residuals
/// rewritten as first differences of the series. The predictor therefore
/// consumes W+1 lags.
struct MAParams {
    double alpha = 0.0;
    Eigen::VectorXd gamma;

    int order() const { return static_cast<int>(gamma.size()); }
    int window() const { return order() + 1; }
};

/// ARMA(p, q) with the same residual rewrite; window is max(p, q+1).
struct ARMAParams {
    double alpha = 0.0;
    Eigen::VectorXd beta;   // length p
    Eigen::VectorXd gamma;  // length q

    int p() const { return static_cast<int>(beta.size()); }
    int q() const { return static_cast<int>(gamma.size()); }
    int window() const { return std::max(p(), q() + 1); }
};

/// Vector ARMA with exogenous inputs. A: P lag matrices (N x N), Mmat: Q
/// moving-average matrices (N x N), B: L exogenous matrices (N x J). Output
/// dimension equals N. Endogenous window is max(P, Q+1) (or P when Q = 0).
struct VARMAXParams {
    Eigen::VectorXd alpha;              // length N
    std::vector<Eigen::MatrixXd> A;     // P x (N x N)
    std::vector<Eigen::MatrixXd> Mmat;  // Q x (N x N)
    std::vector<Eigen::MatrixXd> B;     // L x (N x J)

    int n_features() const { return static_cast<int>(alpha.size()); }
    int p() const { return static_cast<int>(A.size()); }
    int q() const { return static_cast<int>(Mmat.size()); }
    int exog_lags() const { return static_cast<int>(B.size()); }
    int n_exog() const { return B.empty() ? 0 : static_cast<int>(B.front().cols()); }
    int window() const { return q() > 0 ? std::max(p(), q() + 1) : std::max(p(), 1); }

    void validate() const;
};

/// Small recurrent network used as the nonlinear black box in tests. Columns
/// are consumed oldest first; the hidden state starts at zero.
struct ElmanParams {
    Eigen::MatrixXd w_rec;   // H x H
    Eigen::MatrixXd w_in;    // H x N
    Eigen::VectorXd b_h;     // H
    Eigen::MatrixXd w_out;   // M x H
    Eigen::VectorXd b_out;   // M
    int width = 1;           // W

    int hidden() const { return static_cast<int>(w_rec.rows()); }
    int n_features() const { return static_cast<int>(w_in.cols()); }
    int n_outputs() const { return static_cast<int>(w_out.rows()); }

    // Weights drawn from uniform(-0.5, 0.5), deterministic per seed.
    static ElmanParams seeded(int n_features, int n_outputs, int width, int hidden,
                              std::uint64_t seed);
    // Same topology with every weight scaled by `s`; small s approaches a
    // linear map, which the surrogate convergence tests sweep over.
    ElmanParams scaled(double s) const;
};

using LinearParams = std::variant<ARParams, MAParams, ARMAParams, VARMAXParams>;
using ModelParams = std::variant<ARParams, MAParams, ARMAParams, VARMAXParams, ElmanParams>;

double predict_ar(const ARParams& p, const SeriesWindow& win);
double predict_ma(const MAParams& p, const SeriesWindow& win);
double predict_arma(const ARMAParams& p, const SeriesWindow& win);
Eigen::VectorXd predict_varmax(const VARMAXParams& p, const SeriesWindow& win);
Eigen::VectorXd predict_elman(const ElmanParams& p, const SeriesWindow& win);

/// Predictor over any of the parametric families.
class ParametricPredictor : public Predictor {
public:
    explicit ParametricPredictor(ModelParams params);

    int n_features() const override { return n_; }
    int window() const override { return w_; }
    int n_exog() const override { return j_; }
    int exog_window() const override { return l_; }
    int n_outputs() const override { return m_; }

    void predict_into(const SeriesWindow& win, Eigen::Ref<Eigen::VectorXd> out) const override;

    const ModelParams& params() const { return params_; }

private:
    ModelParams params_;
    int n_ = 1, w_ = 1, j_ = 0, l_ = 0, m_ = 1;
};

std::unique_ptr<Predictor> make_predictor(const ModelParams& params);

bool is_linear_family(const ModelParams& params);
LinearParams to_linear(const ModelParams& params);

}  // namespace tsshap

#endif
