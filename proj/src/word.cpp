#include "umb/word.hpp"

#include <stdexcept>

namespace umb {

BinaryWord::BinaryWord(std::vector<std::uint8_t> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::domain_error("BinaryWord: length must be >= 1");
    for (auto d : digits_) {
        if (d > 1) throw std::domain_error("BinaryWord: digits must be 0 or 1");
    }
}

BinaryWord BinaryWord::parse(std::string_view text) {
    std::vector<std::uint8_t> ds;
    ds.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::domain_error("BinaryWord: invalid character '" + std::string(1, c) + "'");
        }
        ds.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return BinaryWord(std::move(ds));
}

std::string BinaryWord::str() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
}

BinaryWord word_from_dyadic(const BigInt& m, std::size_t n) {
    if (n < 1) throw std::domain_error("word_from_dyadic: length must be >= 1");
    if (m < 0 || m >= (BigInt(1) << static_cast<unsigned>(n))) {
        throw std::domain_error("word_from_dyadic: m out of [0, 2^N)");
    }
    std::vector<std::uint8_t> ds(n);
    for (std::size_t i = 0; i < n; ++i) {
        // a_1 is the most significant bit of m
        ds[i] = static_cast<std::uint8_t>(bit_test(m, static_cast<unsigned>(n - 1 - i)) ? 1 : 0);
    }
    return BinaryWord(std::move(ds));
}

Dyadic to_dyadic(const BinaryWord& word) {
    BigInt m = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
        m <<= 1;
        m += word.digit(i);
    }
    return Dyadic(std::move(m), static_cast<long long>(word.size()));
}

DistanceReport tree_distance(const BinaryWord& x, const BinaryWord& y) {
    if (x.size() != y.size()) {
        throw std::domain_error("tree_distance: words must have equal length");
    }
    const std::size_t n = x.size();
    std::size_t lcp = 0;
    while (lcp < n && x.digit(lcp) == y.digit(lcp)) ++lcp;
    if (lcp == n) return {Dyadic::zero(), n, 0};
    return {Dyadic::pow2(-static_cast<long long>(lcp)), lcp, n - lcp};
}

Dyadic transition_time(const BinaryWord& x, const BinaryWord& y) {
    return tree_distance(x, y).value;
}

}  // namespace umb
