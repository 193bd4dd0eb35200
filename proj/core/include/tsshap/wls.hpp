#ifndef TSSHAP_WLS_HPP
#define TSSHAP_WLS_HPP

#include <Eigen/Dense>

namespace tsshap {

/// Minimizes sum_s w_s * ||y_s - X_s * c||^2 + ridge * ||c||^2 over the
/// K x M coefficient matrix c, via column-pivoted QR of the weight-scaled
/// (and, when ridge > 0, Tikhonov-augmented) system.
///
/// Throws SingularityError when ridge == 0 and the scaled design is rank
/// deficient; the error names the number of deficient columns.
Eigen::MatrixXd wls_solve(const Eigen::MatrixXd& X, const Eigen::MatrixXd& y,
                          const Eigen::VectorXd& weights, double ridge = 0.0);

}  // namespace tsshap

#endif
