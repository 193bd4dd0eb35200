#include "tsshap/types.hpp"

#include <cmath>

namespace tsshap {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
    if (!m.allFinite()) {
        throw ValidationError(std::string(what) + ": non-finite entry");
    }
}

std::vector<std::string> default_names(const char* prefix, int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

}  // namespace

SeriesWindow::SeriesWindow(Eigen::MatrixXd endog_, Eigen::MatrixXd exog_)
    : endog(std::move(endog_)), exog(std::move(exog_)) {
    feature_names = default_names("y", n_features());
    exog_names = default_names("x", n_exog());
}

void SeriesWindow::validate() const {
    if (endog.rows() < 1 || endog.cols() < 1) {
        throw DimensionError("SeriesWindow: endogenous block must be at least 1x1");
    }
    require_finite(endog, "SeriesWindow.endog");
    if (exog.size() > 0) require_finite(exog, "SeriesWindow.exog");
    if (!feature_names.empty() && static_cast<int>(feature_names.size()) != n_features()) {
        throw DimensionError("SeriesWindow: feature_names size mismatch");
    }
    if (!exog_names.empty() && static_cast<int>(exog_names.size()) != n_exog()) {
        throw DimensionError("SeriesWindow: exog_names size mismatch");
    }
}

Baseline Baseline::zeros_like(const SeriesWindow& win) {
    return Baseline(Eigen::MatrixXd::Zero(win.endog.rows(), win.endog.cols()),
                    Eigen::MatrixXd::Zero(win.exog.rows(), win.exog.cols()));
}

void Baseline::check_shape(const SeriesWindow& win) const {
    if (endog.rows() != win.endog.rows() || endog.cols() != win.endog.cols() ||
        exog.rows() != win.exog.rows() || exog.cols() != win.exog.cols()) {
        throw DimensionError("Baseline shape does not match the window");
    }
    if (!endog.allFinite() || (exog.size() > 0 && !exog.allFinite())) {
        throw ValidationError("Baseline: non-finite entry");
    }
}

PlayerIndexing PlayerIndexing::cells(const SeriesWindow& win) {
    return cells(win.n_features(), win.width(), win.n_exog(), win.exog_width());
}

PlayerIndexing PlayerIndexing::features(const SeriesWindow& win) {
    return features(win.n_features(), win.width(), win.n_exog(), win.exog_width());
}

PlayerIndexing PlayerIndexing::cells(int n, int w, int j, int l) {
    if (n < 1 || w < 1 || j < 0 || l < 0 || (j > 0) != (l > 0)) {
        throw DimensionError("PlayerIndexing: invalid shape");
    }
    return PlayerIndexing{PlayerMode::Cell, n, w, j, l};
}

PlayerIndexing PlayerIndexing::features(int n, int w, int j, int l) {
    PlayerIndexing idx = cells(n, w, j, l);
    idx.mode = PlayerMode::Feature;
    return idx;
}

int PlayerIndexing::player_of(int feature, int lag) const {
    if (feature < 0 || feature >= n_features) {
        throw EncodingError("player_of: feature index out of range");
    }
    if (mode == PlayerMode::Feature) return feature;
    if (lag < 1 || lag > width) throw EncodingError("player_of: lag out of range");
    return feature * width + (lag - 1);
}

int PlayerIndexing::player_of_exog(int feature, int lag) const {
    if (feature < 0 || feature >= n_exog) {
        throw EncodingError("player_of_exog: feature index out of range");
    }
    if (mode == PlayerMode::Feature) return n_features + feature;
    if (lag < 1 || lag > exog_width) throw EncodingError("player_of_exog: lag out of range");
    return n_features * width + feature * exog_width + (lag - 1);
}

Cell PlayerIndexing::cell_of(int player) const {
    const int d = player_count();
    if (player < 0 || player >= d) throw EncodingError("cell_of: player id out of range");
    if (mode == PlayerMode::Feature) {
        if (player < n_features) return Cell{false, player, 0};
        return Cell{true, player - n_features, 0};
    }
    const int n_endog_cells = n_features * width;
    if (player < n_endog_cells) {
        return Cell{false, player / width, player % width + 1};
    }
    const int e = player - n_endog_cells;
    return Cell{true, e / exog_width, e % exog_width + 1};
}

void PlayerIndexing::check_window(const SeriesWindow& win) const {
    if (win.n_features() != n_features || win.width() != width ||
        win.n_exog() != n_exog || win.exog_width() != exog_width) {
        throw DimensionError("PlayerIndexing does not match the window shape");
    }
}

Coalition Coalition::from_mask(int d, std::uint64_t mask) {
    if (d < 0 || d > 64) throw EncodingError("Coalition::from_mask requires 0 <= d <= 64");
    if (d < 64 && (mask >> d) != 0) {
        throw EncodingError("Coalition::from_mask: bits set at or above d");
    }
    Coalition z(d);
    if (!z.words_.empty()) z.words_[0] = mask;
    return z;
}

Coalition Coalition::full(int d) {
    Coalition z(d);
    for (int i = 0; i < d; ++i) z.set(i);
    return z;
}

Coalition Coalition::complement() const {
    Coalition z(d_);
    for (std::size_t w = 0; w < words_.size(); ++w) z.words_[w] = ~words_[w];
    const int tail = d_ % 64;
    if (tail != 0 && !z.words_.empty()) {
        z.words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return z;
}

Eigen::MatrixXd Attribution::endog_grid(int output) const {
    if (indexing.mode != PlayerMode::Cell) {
        throw ValidationError("endog_grid is only defined for cell-mode attributions");
    }
    Eigen::MatrixXd g(indexing.n_features, indexing.width);
    for (int n = 0; n < indexing.n_features; ++n) {
        for (int w = 1; w <= indexing.width; ++w) {
            g(n, w - 1) = values(output, indexing.player_of(n, w));
        }
    }
    return g;
}

Eigen::MatrixXd Attribution::exog_grid(int output) const {
    if (indexing.mode != PlayerMode::Cell) {
        throw ValidationError("exog_grid is only defined for cell-mode attributions");
    }
    Eigen::MatrixXd g(indexing.n_exog, indexing.exog_width);
    for (int j = 0; j < indexing.n_exog; ++j) {
        for (int l = 1; l <= indexing.exog_width; ++l) {
            g(j, l - 1) = values(output, indexing.player_of_exog(j, l));
        }
    }
    return g;
}

void Attribution::validate() const {
    if (values.cols() != indexing.player_count() || values.rows() != base_value.size()) {
        throw DimensionError("Attribution: inconsistent shape");
    }
    if (!values.allFinite() || !base_value.allFinite()) {
        throw ValidationError("Attribution: non-finite entry");
    }
}

void Predictor::check_window(const SeriesWindow& win) const {
    if (win.n_features() != n_features() || win.width() != window() ||
        win.n_exog() != n_exog() || win.exog_width() != exog_window()) {
        throw DimensionError("window shape does not match the predictor");
    }
}

double efficiency_gap(const Attribution& att, const Eigen::VectorXd& fx,
                      const Eigen::VectorXd& f_base) {
    if (fx.size() != att.n_outputs() || f_base.size() != att.n_outputs()) {
        throw DimensionError("efficiency_gap: output dimension mismatch");
    }
    double gap = 0.0;
    for (int m = 0; m < att.n_outputs(); ++m) {
        const double total = att.values.row(m).sum();
        gap = std::max(gap, std::abs(total - (fx(m) - f_base(m))));
    }
    return gap;
}

}  // namespace tsshap
