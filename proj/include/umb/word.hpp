#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "umb/dyadic.hpp"

namespace umb {

/**
 * Finite binary words 0,a_1...a_N and the hierarchical-tree ultrametric on
 * them. A word is a leaf of the depth-N binary tree (digit 0 = left branch,
 * digit 1 = right branch) and encodes the dyadic value 0.a_1...a_N; the tree
 * distance between two leaves is 2^-L with L the longest common prefix,
 * which is exactly the 2-adic metric on the word space.
 */
class BinaryWord {
public:
    // Digits a_1..a_N, each 0 or 1, N >= 1. Length is fixed for life.
    explicit BinaryWord(std::vector<std::uint8_t> digits);
    // Parse "0110".
    static BinaryWord parse(std::string_view text);

    std::size_t size() const { return digits_.size(); }
    // 0-based: digit(i) is a_{i+1}.
    std::uint8_t digit(std::size_t i) const { return digits_[i]; }
    const std::vector<std::uint8_t>& digits() const { return digits_; }

    std::string str() const;

    friend bool operator==(const BinaryWord& a, const BinaryWord& b) = default;

private:
    std::vector<std::uint8_t> digits_;
};

// Tree distance together with the two equivalent readings of the metric:
// 2^-lcp through the common-prefix length, 2^(m_levels - N) through the
// number of levels one must climb to reach a common branch.
struct DistanceReport {
    Dyadic value;
    std::size_t lcp;       // longest common prefix length; == N iff equal
    std::size_t m_levels;  // N - lcp
};

// Word of length n encoding the value m / 2^n; m in [0, 2^n).
BinaryWord word_from_dyadic(const BigInt& m, std::size_t n);
// Exact value 0.a_1...a_N as a dyadic rational; inverse of word_from_dyadic.
Dyadic to_dyadic(const BinaryWord& word);

// Ultrametric tree distance; words must have equal length.
DistanceReport tree_distance(const BinaryWord& x, const BinaryWord& y);

// Ultrametric transition time between two states. Numerically the same
// computation as tree_distance; kept separate because its unit is time.
Dyadic transition_time(const BinaryWord& x, const BinaryWord& y);

}  // namespace umb
