#ifndef TSSHAP_TYPES_HPP
#define TSSHAP_TYPES_HPP

#include <Eigen/Dense>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tsshap/errors.hpp"

namespace tsshap {

/// The lag matrix a time-series predictor consumes. Column w-1 holds the
/// values observed w steps before the prediction time, so column 0 is the
/// most recent step. `exog` follows the same convention for exogenous
/// features and is empty (0x0) when the model has none.
struct SeriesWindow {
    Eigen::MatrixXd endog;  // N features x W lags
    Eigen::MatrixXd exog;   // J features x L lags, may be 0x0
    std::vector<std::string> feature_names;
    std::vector<std::string> exog_names;

    SeriesWindow() = default;
    SeriesWindow(Eigen::MatrixXd endog_, Eigen::MatrixXd exog_ = Eigen::MatrixXd());

    int n_features() const { return static_cast<int>(endog.rows()); }
    int width() const { return static_cast<int>(endog.cols()); }
    int n_exog() const { return static_cast<int>(exog.rows()); }
    int exog_width() const { return static_cast<int>(exog.cols()); }
    bool has_exog() const { return exog.size() > 0; }

    // Throws DimensionError / ValidationError on empty endog, non-finite
    // entries or name lists that do not match the shapes.
    void validate() const;
};

/// Replacement values used for masked players. Shape must equal the window
/// it masks. The default-constructed baseline of a window is all zeros.
struct Baseline {
    Eigen::MatrixXd endog;
    Eigen::MatrixXd exog;

    Baseline() = default;
    Baseline(Eigen::MatrixXd endog_, Eigen::MatrixXd exog_ = Eigen::MatrixXd())
        : endog(std::move(endog_)), exog(std::move(exog_)) {}

    static Baseline zeros_like(const SeriesWindow& win);
    static Baseline from_window(const SeriesWindow& win) { return Baseline(win.endog, win.exog); }

    void check_shape(const SeriesWindow& win) const;
};

/// A cell of the lag matrix: (feature, lag) with lag in 1..W. `is_exog`
/// selects the exogenous block. In feature mode a player owns a whole
/// trajectory and `lag` is reported as 0.
struct Cell {
    bool is_exog = false;
    int feature = 0;
    int lag = 0;

    bool operator==(const Cell&) const = default;
};

enum class PlayerMode {
    Cell,     // one player per (feature, lag) cell
    Feature,  // one player per feature trajectory
};

/// Fixed bijection between players and cells/features.
/// Cell mode: endogenous cells first, then exogenous, both row-major by
/// (feature, lag); d = N*W + J*L. Feature mode: endogenous features first,
/// then exogenous; d = N + J.
struct PlayerIndexing {
    PlayerMode mode = PlayerMode::Cell;
    int n_features = 0;  // N
    int width = 0;       // W
    int n_exog = 0;      // J
    int exog_width = 0;  // L

    static PlayerIndexing cells(const SeriesWindow& win);
    static PlayerIndexing features(const SeriesWindow& win);
    static PlayerIndexing cells(int n, int w, int j = 0, int l = 0);
    static PlayerIndexing features(int n, int w, int j = 0, int l = 0);

    int player_count() const {
        return mode == PlayerMode::Cell ? n_features * width + n_exog * exog_width
                                        : n_features + n_exog;
    }

    // Player id of endogenous cell (n, w), lag w in 1..W. In feature mode the
    // lag is ignored and the id is the feature index.
    int player_of(int feature, int lag) const;
    int player_of_exog(int feature, int lag) const;
    Cell cell_of(int player) const;

    void check_window(const SeriesWindow& win) const;
    bool operator==(const PlayerIndexing&) const = default;
};

/// A subset of players as a fixed-width bitset. Bits at or above `d` stay
/// zero. Stored as 64-bit words so long windows are representable.
class Coalition {
public:
    Coalition() = default;
    explicit Coalition(int d) : d_(d), words_((d + 63) / 64, 0) {
        if (d < 0) throw EncodingError("Coalition: negative player count");
    }

    // Interpret the low d bits of `mask` as the coalition (d <= 64).
    static Coalition from_mask(int d, std::uint64_t mask);
    static Coalition empty(int d) { return Coalition(d); }
    static Coalition full(int d);

    int player_count() const { return d_; }

    bool test(int i) const {
        check_index(i);
        return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
    }
    void set(int i, bool value = true) {
        check_index(i);
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (value)
            words_[static_cast<std::size_t>(i) / 64] |= bit;
        else
            words_[static_cast<std::size_t>(i) / 64] &= ~bit;
    }

    int size() const {
        int s = 0;
        for (std::uint64_t w : words_) s += std::popcount(w);
        return s;
    }

    Coalition complement() const;

    // Low word; only meaningful when d <= 64 (table indexing).
    std::uint64_t low_mask() const { return words_.empty() ? 0 : words_[0]; }

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const Coalition&) const = default;

private:
    void check_index(int i) const {
        if (i < 0 || i >= d_) throw EncodingError("Coalition: player index out of range");
    }
    int d_ = 0;
    std::vector<std::uint64_t> words_;
};

struct CoalitionHash {
    std::size_t operator()(const Coalition& z) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(z.player_count());
        for (std::uint64_t w : z.words()) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Per-player attribution for every output dimension, plus the base value
/// (prediction on the fully masked window). Row m of `values` carries the
/// phi vector of output m in player-id order; the grids below reshape it
/// through the indexing.
struct Attribution {
    PlayerIndexing indexing;
    Eigen::VectorXd base_value;  // length M
    Eigen::MatrixXd values;      // M x d

    Attribution() = default;
    Attribution(PlayerIndexing idx, int n_outputs)
        : indexing(idx),
          base_value(Eigen::VectorXd::Zero(n_outputs)),
          values(Eigen::MatrixXd::Zero(n_outputs, idx.player_count())) {}

    int n_outputs() const { return static_cast<int>(values.rows()); }
    int player_count() const { return static_cast<int>(values.cols()); }

    double& phi(int output, int player) { return values(output, player); }
    double phi(int output, int player) const { return values(output, player); }

    // Cell-mode views of output m as lag grids (N x W / J x L).
    Eigen::MatrixXd endog_grid(int output) const;
    Eigen::MatrixXd exog_grid(int output) const;

    void validate() const;
};

/// Behavioural contract of anything explainable by this library: a
/// deterministic map from a lag window to an M-vector, with fixed shape.
class Predictor {
public:
    virtual ~Predictor() = default;

    virtual int n_features() const = 0;   // N
    virtual int window() const = 0;       // W
    virtual int n_exog() const { return 0; }
    virtual int exog_window() const { return 0; }
    virtual int n_outputs() const = 0;    // M

    virtual void predict_into(const SeriesWindow& win, Eigen::Ref<Eigen::VectorXd> out) const = 0;

    Eigen::VectorXd predict(const SeriesWindow& win) const {
        Eigen::VectorXd out(n_outputs());
        predict_into(win, out);
        return out;
    }

    void check_window(const SeriesWindow& win) const;
};

/// Residual of the Shapley efficiency axiom:
/// max over outputs m of |sum_i phi_m(i) - (fx_m - f_base_m)|.
double efficiency_gap(const Attribution& att, const Eigen::VectorXd& fx,
                      const Eigen::VectorXd& f_base);

}  // namespace tsshap

#endif
