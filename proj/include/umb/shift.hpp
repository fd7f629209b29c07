#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "umb/tail.hpp"
#include "umb/word.hpp"

namespace umb {

/**
 * The shift map on binary words, f(0,a_1...a_N) = 0,a_2...a_N a', with the
 * newborn digit a' supplied by a deterministic tail. Every operation returns
 * a fresh state; inputs are never mutated.
 */
struct SequenceState {
    BinaryWord word;
    DigitTail tail;
    std::uint64_t cursor = 0;  // next tail index to consume
    std::uint64_t step = 0;    // shifts applied since construction
};

// One application of the shift: digits move one place left, the next tail
// digit becomes a_N, step increments.
SequenceState bernoulli_shift(const SequenceState& s);

// Perturbation epsilon = 2^-h (1 + 2^-delta_1 + 2^-delta_2 + ...), given by
// the leading scale h and strictly increasing offsets delta_i >= 1.
struct PerturbationSpec {
    int h = 1;
    std::vector<int> deltas;

    Dyadic epsilon() const;
    // Requires h >= 1, deltas strictly increasing >= 1, h + max(delta) <= n;
    // this keeps every term of epsilon representable inside an N-bit word.
    void validate(std::size_t n) const;
};

struct PerturbResult {
    SequenceState state;
    // First position (1-based) where the perturbed word differs from the
    // original. Equals spec.h unless carries propagated upward.
    std::size_t effective_h;
};

// State whose word encodes x_0 + epsilon exactly: full carry propagation,
// overflow past the leading digit wraps modulo 1. Seeded tails fork to an
// independent stream; periodic/explicit tails are shared unchanged.
PerturbResult perturb(const SequenceState& s, const PerturbationSpec& spec);

// Tree distances between two trajectories, iterate by iterate. When the
// states first differ at position h, the pre-saturation law is exact:
// log2 d_n = -(h-1) + n for every n <= h-1, whatever the tails do.
struct DivergenceSeries {
    struct Entry {
        std::uint64_t n;
        Dyadic distance;
    };
    std::vector<Entry> entries;
    // First n at which the distance reaches 1 or collapses to 0; estimators
    // must restrict themselves to the window before it.
    std::optional<std::uint64_t> saturation_index;
};

DivergenceSeries divergence_series(const SequenceState& a, const SequenceState& b,
                                   std::uint64_t n_max);

}  // namespace umb
