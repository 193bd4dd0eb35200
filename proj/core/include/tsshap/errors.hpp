#ifndef TSSHAP_ERRORS_HPP
#define TSSHAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tsshap {

// Input/shape problems: the caller handed us something malformed.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Shapes of windows, baselines or parameter bundles do not agree.
class DimensionError : public ValidationError {
public:
    explicit DimensionError(const std::string& msg) : ValidationError(msg) {}
};

// A coalition carries bits outside the player range, or an index is out of range.
class EncodingError : public ValidationError {
public:
    explicit EncodingError(const std::string& msg) : ValidationError(msg) {}
};

// Numerical failures: the inputs were well-formed but the computation cannot
// produce a sound answer.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rank-deficient least squares with no ridge to fall back on.
class SingularityError : public NumericalError {
public:
    SingularityError(const std::string& msg, int deficient_columns)
        : NumericalError(msg), deficient_columns(deficient_columns) {}
    int deficient_columns;
};

// Too few distinct coalitions to identify the regression coefficients.
class IdentifiabilityError : public NumericalError {
public:
    explicit IdentifiabilityError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace tsshap

#endif
