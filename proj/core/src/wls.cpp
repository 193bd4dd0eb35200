#include "tsshap/wls.hpp"

#include <cmath>

#include "tsshap/errors.hpp"

namespace tsshap {

Eigen::MatrixXd wls_solve(const Eigen::MatrixXd& X, const Eigen::MatrixXd& y,
                          const Eigen::VectorXd& weights, double ridge) {
    const Eigen::Index s = X.rows();
    const Eigen::Index k = X.cols();
    if (y.rows() != s) throw DimensionError("wls_solve: X and y row counts differ");
    if (weights.size() != s) throw DimensionError("wls_solve: weight length mismatch");
    if (ridge < 0.0 || !std::isfinite(ridge)) throw ValidationError("wls_solve: invalid ridge");
    if (s < k && ridge == 0.0) {
        throw ValidationError("wls_solve: fewer rows than columns needs ridge > 0");
    }
    double wsum = 0.0;
    for (Eigen::Index i = 0; i < s; ++i) {
        const double w = weights(i);
        if (w < 0.0 || !std::isfinite(w)) throw ValidationError("wls_solve: negative weight");
        wsum += w;
    }
    if (wsum == 0.0) throw ValidationError("wls_solve: all weights are zero");

    const Eigen::VectorXd sw = weights.array().sqrt();
    const Eigen::Index extra = ridge > 0.0 ? k : 0;
    Eigen::MatrixXd a(s + extra, k);
    Eigen::MatrixXd b(s + extra, y.cols());
    a.topRows(s) = sw.asDiagonal() * X;
    b.topRows(s) = sw.asDiagonal() * y;
    if (extra > 0) {
        a.bottomRows(k) = std::sqrt(ridge) * Eigen::MatrixXd::Identity(k, k);
        b.bottomRows(k).setZero();
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (ridge == 0.0 && qr.rank() < k) {
        const int deficient = static_cast<int>(k - qr.rank());
        throw SingularityError("wls_solve: rank-deficient design, " + std::to_string(deficient) +
                                   " deficient column(s); pass ridge > 0 or add rows",
                               deficient);
    }
    return qr.solve(b);
}

}  // namespace tsshap
