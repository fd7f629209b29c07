#include "umb/baker.hpp"

#include <cmath>
#include <stdexcept>

namespace umb {

namespace {

void check_in_square(const BakerPoint& pt) {
    if (!(pt.x >= 0.0 && pt.x <= 1.0 && pt.y >= 0.0 && pt.y <= 1.0)) {
        throw std::domain_error("baker: point must lie in the unit square");
    }
}

}  // namespace

BakerPoint baker_step(const BakerPoint& pt) {
    check_in_square(pt);
    if (pt.x < 0.5) return {2.0 * pt.x, pt.y / 2.0};
    return {2.0 * pt.x - 1.0, (pt.y + 1.0) / 2.0};
}

BakerDemoReport baker_saturation_demo(double eps0, std::uint64_t n_steps, BakerPoint start) {
    if (!(eps0 > 0.0)) throw std::domain_error("baker_saturation_demo: eps0 must be > 0");
    BakerPoint a = start;
    BakerPoint b{start.x + eps0, start.y};
    check_in_square(a);
    check_in_square(b);

    BakerDemoReport report;
    report.steps.reserve(n_steps + 1);
    report.max_euclid = 0.0;
    for (std::uint64_t n = 0;; ++n) {
        const double x_sep = b.x - a.x;
        const double euclid = std::hypot(b.x - a.x, b.y - a.y);
        const bool same_branch = (a.x < 0.5) == (b.x < 0.5);
        report.max_euclid = std::max(report.max_euclid, euclid);
        report.steps.push_back({n, a, b, x_sep, euclid, same_branch});
        if (n == n_steps) break;
        a = baker_step(a);
        b = baker_step(b);
    }
    return report;
}

}  // namespace umb
