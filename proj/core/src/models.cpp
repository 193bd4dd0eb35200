#include "tsshap/models.hpp"

#include <cmath>

#include "tsshap/rng.hpp"

namespace tsshap {

namespace {

void check_univariate(const SeriesWindow& win, int width, const char* family) {
    if (win.n_features() != 1 || win.width() != width || win.has_exog()) {
        throw DimensionError(std::string(family) + ": expected a 1x" + std::to_string(width) +
                             " window without exogenous block");
    }
}

}  // namespace

void VARMAXParams::validate() const {
    const int n = n_features();
    if (n < 1) throw DimensionError("VARMAXParams: alpha must have length N >= 1");
    for (const auto& a : A) {
        if (a.rows() != n || a.cols() != n) throw DimensionError("VARMAXParams: A matrix shape");
    }
    for (const auto& m : Mmat) {
        if (m.rows() != n || m.cols() != n) throw DimensionError("VARMAXParams: M matrix shape");
    }
    for (const auto& b : B) {
        if (b.rows() != n || b.cols() != n_exog()) {
            throw DimensionError("VARMAXParams: B matrix shape");
        }
    }
    if (p() == 0 && q() == 0 && B.empty()) {
        throw DimensionError("VARMAXParams: at least one coefficient block required");
    }
}

ElmanParams ElmanParams::seeded(int n_features, int n_outputs, int width, int hidden,
                                std::uint64_t seed) {
    Rng rng(seed);
    auto draw = [&rng](Eigen::Index r, Eigen::Index c) {
        Eigen::MatrixXd m(r, c);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rng.uniform(-0.5, 0.5);
        return m;
    };
    ElmanParams p;
    p.w_rec = draw(hidden, hidden);
    p.w_in = draw(hidden, n_features);
    p.b_h = draw(hidden, 1);
    p.w_out = draw(n_outputs, hidden);
    p.b_out = draw(n_outputs, 1);
    p.width = width;
    return p;
}

ElmanParams ElmanParams::scaled(double s) const {
    ElmanParams p = *this;
    p.w_rec *= s;
    p.w_in *= s;
    p.b_h *= s;
    p.w_out *= s;
    p.b_out *= s;
    return p;
}

double predict_ar(const ARParams& p, const SeriesWindow& win) {
    check_univariate(win, p.window(), "predict_ar");
    return p.alpha + p.beta.dot(win.endog.row(0));
}

double predict_ma(const MAParams& p, const SeriesWindow& win) {
    check_univariate(win, p.window(), "predict_ma");
    // eps_{t-w} ~ y_{t-w} - y_{t-w-1}, eps_t at its zero mean.
    double acc = p.alpha;
    for (int w = 1; w <= p.order(); ++w) {
        acc += p.gamma(w - 1) * (win.endog(0, w - 1) - win.endog(0, w));
    }
    return acc;
}

double predict_arma(const ARMAParams& p, const SeriesWindow& win) {
    check_univariate(win, p.window(), "predict_arma");
    double acc = p.alpha;
    for (int w = 1; w <= p.p(); ++w) acc += p.beta(w - 1) * win.endog(0, w - 1);
    for (int w = 1; w <= p.q(); ++w) {
        acc += p.gamma(w - 1) * (win.endog(0, w - 1) - win.endog(0, w));
    }
    return acc;
}

Eigen::VectorXd predict_varmax(const VARMAXParams& p, const SeriesWindow& win) {
    p.validate();
    if (win.n_features() != p.n_features() || win.width() != p.window() ||
        win.n_exog() != p.n_exog() || win.exog_width() != p.exog_lags()) {
        throw DimensionError("predict_varmax: window shape does not match the parameters");
    }
    Eigen::VectorXd acc = p.alpha;
    for (int w = 1; w <= p.p(); ++w) acc += p.A[w - 1] * win.endog.col(w - 1);
    for (int w = 1; w <= p.q(); ++w) {
        acc += p.Mmat[w - 1] * (win.endog.col(w - 1) - win.endog.col(w));
    }
    for (int l = 1; l <= p.exog_lags(); ++l) acc += p.B[l - 1] * win.exog.col(l - 1);
    return acc;
}

Eigen::VectorXd predict_elman(const ElmanParams& p, const SeriesWindow& win) {
    if (win.n_features() != p.n_features() || win.width() != p.width || win.has_exog()) {
        throw DimensionError("predict_elman: window shape does not match the parameters");
    }
    Eigen::VectorXd h = Eigen::VectorXd::Zero(p.hidden());
    for (int w = p.width; w >= 1; --w) {
        h = (p.w_in * win.endog.col(w - 1) + p.w_rec * h + p.b_h).array().tanh();
    }
    return p.w_out * h + p.b_out;
}

ParametricPredictor::ParametricPredictor(ModelParams params) : params_(std::move(params)) {
    std::visit(
        [this](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, VARMAXParams>) {
                p.validate();
                n_ = p.n_features();
                w_ = p.window();
                j_ = p.n_exog();
                l_ = p.exog_lags();
                m_ = p.n_features();
            } else if constexpr (std::is_same_v<T, ElmanParams>) {
                n_ = p.n_features();
                w_ = p.width;
                m_ = p.n_outputs();
            } else {
                n_ = 1;
                w_ = p.window();
                m_ = 1;
            }
        },
        params_);
}

void ParametricPredictor::predict_into(const SeriesWindow& win,
                                       Eigen::Ref<Eigen::VectorXd> out) const {
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ARParams>) {
                out(0) = predict_ar(p, win);
            } else if constexpr (std::is_same_v<T, MAParams>) {
                out(0) = predict_ma(p, win);
            } else if constexpr (std::is_same_v<T, ARMAParams>) {
                out(0) = predict_arma(p, win);
            } else if constexpr (std::is_same_v<T, VARMAXParams>) {
                out = predict_varmax(p, win);
            } else {
                out = predict_elman(p, win);
            }
        },
        params_);
}

std::unique_ptr<Predictor> make_predictor(const ModelParams& params) {
    return std::make_unique<ParametricPredictor>(params);
}

bool is_linear_family(const ModelParams& params) {
    return !std::holds_alternative<ElmanParams>(params);
}

LinearParams to_linear(const ModelParams& params) {
    return std::visit(
        [](const auto& p) -> LinearParams {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ElmanParams>) {
                throw ValidationError("Elman predictor has no closed-form coefficients");
            } else {
                return LinearParams(p);
            }
        },
        params);
}

}  // namespace tsshap
