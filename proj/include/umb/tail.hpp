#pragma once

#include <cstdint>
#include <vector>

#include "umb/word.hpp"

namespace umb {

enum class TailMode { Uniform, Biased, Periodic, Explicit };

// Pregenerated stream of future digits for the shift map: when the word
// moves one place left, the next digit of the tail is born on the right.
//
// Digit k is a pure function of the tail's parameters and k, so tails are
// cheap values: copying one copies the whole future, and two states holding
// equal tails read identical digits forever. Uniform and biased streams are
// counter-based over SplitMix64; biased draws digit 1 with probability q.
class DigitTail {
public:
    static DigitTail uniform(std::uint64_t seed);
    static DigitTail biased(std::uint64_t seed, double q);  // q in [0, 1]
    static DigitTail periodic(std::vector<std::uint8_t> pattern);
    static DigitTail explicit_list(std::vector<std::uint8_t> digits);

    // Digit at stream position index; throws state_error when an explicit
    // list is exhausted.
    std::uint8_t at(std::uint64_t index) const;

    // Independent stream derived from (seed, tag). Periodic and explicit
    // tails have no seed and return themselves unchanged.
    DigitTail fork(std::uint64_t tag) const;

    TailMode mode() const { return mode_; }
    std::uint64_t seed() const { return seed_; }
    double bias() const { return q_; }
    const std::vector<std::uint8_t>& pattern() const { return pattern_; }

private:
    DigitTail(TailMode mode, std::uint64_t seed, double q, std::vector<std::uint8_t> pattern)
        : mode_(mode), seed_(seed), q_(q), pattern_(std::move(pattern)) {}

    TailMode mode_;
    std::uint64_t seed_;
    double q_;
    std::vector<std::uint8_t> pattern_;
};

// First n digits of the tail, as a word. Used for seeding experiments with
// reproducible pseudo-random initial states.
BinaryWord word_from_tail(const DigitTail& tail, std::size_t n, std::uint64_t offset = 0);

}  // namespace umb
