#pragma once

#include <cstdint>
#include <string>

#include "umb/numeric.hpp"
#include "umb/shift.hpp"

namespace umb {

enum class LyapunovMethod { Symbolic, EuclideanDerivative, EuclideanTwoTrajectory };

std::string to_string(LyapunovMethod m);

// Exponential separation rate of nearby trajectories. For the doubling map
// the base-2 value is 1, i.e. ln 2 in natural units; lambda_nats is always
// lambda_base2 * ln 2.
struct LyapunovReport {
    LyapunovMethod method;
    BigRational lambda_base2;
    double lambda_nats;
    std::uint64_t n_start;
    std::uint64_t n_end;
};

// Slope of (n, log2 d_n) over the pre-saturation window, fitted by exact
// least squares on the integer exponents. For any divergence series of the
// shift map the slope is exactly 1.
LyapunovReport lyapunov_symbolic(const DivergenceSeries& series);

// Separation delta_0 used by the two-trajectory estimator, renormalized to
// after every iterate.
inline constexpr double kTwoTrajectoryDelta = 1e-9;

// Euclidean estimators for f(x) = 2x mod 1 on [0, 1). The derivative method
// averages log2|f'| (identically 1) and is exact; the two-trajectory method
// measures renormalized separations and converges to ln 2.
LyapunovReport lyapunov_euclidean(double x0, std::uint64_t n_iter, LyapunovMethod method);

}  // namespace umb
