#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace spacelike {

/**
 * Thrown when an iterative evaluation fails to reach the requested
 * tolerance within its evaluation budget. Carries the best estimate
 * obtained so far together with its error bound.
 */
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what_arg,
                     std::complex<double> best_estimate,
                     double error_bound)
        : std::runtime_error(what_arg),
          best_estimate_(best_estimate),
          error_bound_(error_bound) {}

    [[nodiscard]] std::complex<double> best_estimate() const { return best_estimate_; }
    [[nodiscard]] double error_bound() const { return error_bound_; }

private:
    std::complex<double> best_estimate_;
    double error_bound_;
};

} // namespace spacelike
