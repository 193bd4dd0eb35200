#include "tsshap/mask.hpp"

namespace tsshap {

namespace {

void check_inputs(const SeriesWindow& window, const Coalition& z, const Baseline& baseline,
                  const PlayerIndexing& idx) {
    idx.check_window(window);
    baseline.check_shape(window);
    if (z.player_count() != idx.player_count()) {
        throw EncodingError("mask_window: coalition width does not match the indexing");
    }
}

}  // namespace

void mask_into(const SeriesWindow& window, const Coalition& z, const Baseline& baseline,
               const PlayerIndexing& idx, SeriesWindow& out) {
    check_inputs(window, z, baseline, idx);
    if (out.endog.rows() != window.endog.rows() || out.endog.cols() != window.endog.cols()) {
        out.endog.resize(window.endog.rows(), window.endog.cols());
    }
    if (out.exog.rows() != window.exog.rows() || out.exog.cols() != window.exog.cols()) {
        out.exog.resize(window.exog.rows(), window.exog.cols());
    }

    const int n = idx.n_features;
    const int w = idx.width;
    const int j = idx.n_exog;
    const int l = idx.exog_width;

    if (idx.mode == PlayerMode::Cell) {
        for (int f = 0; f < n; ++f) {
            for (int k = 0; k < w; ++k) {
                const bool keep = z.test(f * w + k);
                out.endog(f, k) = keep ? window.endog(f, k) : baseline.endog(f, k);
            }
        }
        for (int f = 0; f < j; ++f) {
            for (int k = 0; k < l; ++k) {
                const bool keep = z.test(n * w + f * l + k);
                out.exog(f, k) = keep ? window.exog(f, k) : baseline.exog(f, k);
            }
        }
    } else {
        for (int f = 0; f < n; ++f) {
            const bool keep = z.test(f);
            out.endog.row(f) = keep ? window.endog.row(f) : baseline.endog.row(f);
        }
        for (int f = 0; f < j; ++f) {
            const bool keep = z.test(n + f);
            out.exog.row(f) = keep ? window.exog.row(f) : baseline.exog.row(f);
        }
    }
}

SeriesWindow mask_window(const SeriesWindow& window, const Coalition& z,
                         const Baseline& baseline, const PlayerIndexing& idx) {
    SeriesWindow out;
    out.feature_names = window.feature_names;
    out.exog_names = window.exog_names;
    mask_into(window, z, baseline, idx, out);
    return out;
}

void mask_into_bits(const SeriesWindow& window, std::uint64_t mask, const Baseline& baseline,
                    const PlayerIndexing& idx, SeriesWindow& out) {
    const int d = idx.player_count();
    if (d > 64) throw EncodingError("mask_into_bits requires d <= 64");
    if (d < 64 && (mask >> d) != 0) {
        throw EncodingError("mask_into_bits: bits set at or above d");
    }
    if (out.endog.rows() != window.endog.rows() || out.endog.cols() != window.endog.cols()) {
        out.endog.resize(window.endog.rows(), window.endog.cols());
    }
    if (out.exog.rows() != window.exog.rows() || out.exog.cols() != window.exog.cols()) {
        out.exog.resize(window.exog.rows(), window.exog.cols());
    }

    const int n = idx.n_features;
    const int w = idx.width;
    const int j = idx.n_exog;
    const int l = idx.exog_width;
    auto keep = [mask](int player) { return (mask >> player) & 1u; };

    if (idx.mode == PlayerMode::Cell) {
        for (int f = 0; f < n; ++f) {
            for (int k = 0; k < w; ++k) {
                out.endog(f, k) = keep(f * w + k) ? window.endog(f, k) : baseline.endog(f, k);
            }
        }
        for (int f = 0; f < j; ++f) {
            for (int k = 0; k < l; ++k) {
                out.exog(f, k) = keep(n * w + f * l + k) ? window.exog(f, k) : baseline.exog(f, k);
            }
        }
    } else {
        for (int f = 0; f < n; ++f) {
            out.endog.row(f) = keep(f) ? window.endog.row(f) : baseline.endog.row(f);
        }
        for (int f = 0; f < j; ++f) {
            out.exog.row(f) = keep(n + f) ? window.exog.row(f) : baseline.exog.row(f);
        }
    }
}

}  // namespace tsshap
