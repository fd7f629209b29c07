#include "umb/lyapunov.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "umb/errors.hpp"

namespace umb {

namespace {

double circle_distance(double a, double b) {
    const double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}

double doubling_map(double x) {
    x *= 2.0;
    return x >= 1.0 ? x - 1.0 : x;
}

}  // namespace

std::string to_string(LyapunovMethod m) {
    switch (m) {
        case LyapunovMethod::Symbolic: return "symbolic";
        case LyapunovMethod::EuclideanDerivative: return "euclidean-derivative";
        case LyapunovMethod::EuclideanTwoTrajectory: return "euclidean-two-trajectory";
    }
    throw std::logic_error("LyapunovMethod: unreachable");
}

LyapunovReport lyapunov_symbolic(const DivergenceSeries& series) {
    // window: everything strictly before the saturation marker
    std::size_t count = series.entries.size();
    if (series.saturation_index) {
        count = static_cast<std::size_t>(*series.saturation_index);
    }
    if (count < 2) {
        throw estimation_error("lyapunov_symbolic: need >= 2 pre-saturation entries");
    }

    std::vector<long long> xs(count), ys(count);
    for (std::size_t i = 0; i < count; ++i) {
        const auto& e = series.entries[i];
        if (e.distance.is_zero()) {
            throw estimation_error("lyapunov_symbolic: zero distance inside the fit window");
        }
        xs[i] = static_cast<long long>(e.n);
        ys[i] = e.distance.log2();  // exact: tree distances are powers of two
    }

    // exact least squares: slope = (k sum(xy) - sum(x) sum(y)) / (k sum(x^2) - sum(x)^2)
    BigInt sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < count; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += BigInt(xs[i]) * xs[i];
        sxy += BigInt(xs[i]) * ys[i];
    }
    const BigInt k = static_cast<long long>(count);
    const BigInt num = k * sxy - sx * sy;
    const BigInt den = k * sxx - sx * sx;
    const BigRational slope(num, den);

    return LyapunovReport{LyapunovMethod::Symbolic, slope,
                          slope.convert_to<double>() * std::log(2.0),
                          series.entries.front().n, series.entries[count - 1].n};
}

LyapunovReport lyapunov_euclidean(double x0, std::uint64_t n_iter, LyapunovMethod method) {
    if (!(x0 >= 0.0 && x0 < 1.0)) {
        throw std::domain_error("lyapunov_euclidean: x0 must lie in [0, 1)");
    }
    if (n_iter < 1) throw estimation_error("lyapunov_euclidean: need n_iter >= 1");

    if (method == LyapunovMethod::EuclideanDerivative) {
        // |f'| = 2 everywhere, so each step contributes exactly 1 in base 2;
        // summing integers keeps the mean an exact rational and the nats
        // value bit-equal to ln 2
        BigInt sum = 0;
        double x = x0;
        for (std::uint64_t i = 0; i < n_iter; ++i) {
            sum += 1;
            x = doubling_map(x);
        }
        const BigRational slope(sum, BigInt(n_iter));
        return LyapunovReport{method, slope, slope.convert_to<double>() * std::log(2.0), 0,
                              n_iter};
    }

    if (method == LyapunovMethod::EuclideanTwoTrajectory) {
        double x = x0;
        double y = x0 + kTwoTrajectoryDelta;
        if (y >= 1.0) y -= 1.0;
        double sum = 0.0;
        for (std::uint64_t i = 0; i < n_iter; ++i) {
            x = doubling_map(x);
            const double stretched = circle_distance(x, doubling_map(y));
            sum += std::log(stretched / kTwoTrajectoryDelta);
            y = x + kTwoTrajectoryDelta;  // renormalize to delta_0 next to x
            if (y >= 1.0) y -= 1.0;
        }
        const double nats = sum / static_cast<double>(n_iter);
        // a double is a dyadic rational, so the base-2 field stays exact
        return LyapunovReport{method, BigRational(nats / std::log(2.0)), nats, 0, n_iter};
    }

    throw std::domain_error("lyapunov_euclidean: method must be a Euclidean method");
}

}  // namespace umb
