#pragma once

#include <cstdint>
#include <vector>

namespace umb {

// Point of the unit square under the baker's transformation.
struct BakerPoint {
    double x;
    double y;
};

// One application of the baker's map: stretch horizontally, cut, stack.
// x < 1/2: (2x, y/2); x >= 1/2: (2x - 1, (y+1)/2). Input must lie in the
// unit square.
BakerPoint baker_step(const BakerPoint& pt);

// Two nearby points iterated side by side. The x-separation doubles exactly
// on every step where both points sit on the same branch, yet the Euclidean
// distance can never exceed sqrt(2) — the diameter of the square — which is
// why a bounded metric misrepresents the exponential divergence.
struct BakerDemoReport {
    struct Step {
        std::uint64_t n;
        BakerPoint a;
        BakerPoint b;
        double x_sep;
        double euclid;
        // both points on the same branch at this step, so the next step
        // doubles |x_sep| exactly
        bool same_branch;
    };
    std::vector<Step> steps;  // steps[0] is the initial configuration
    double max_euclid;
};

BakerDemoReport baker_saturation_demo(double eps0, std::uint64_t n_steps,
                                      BakerPoint start = {0.3, 0.4});

}  // namespace umb
