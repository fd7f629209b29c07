#include "umb/tail.hpp"

#include <stdexcept>

#include "umb/errors.hpp"
#include "umb/numeric.hpp"

namespace umb {

namespace {

void check_binary_digits(const std::vector<std::uint8_t>& ds) {
    for (auto d : ds) {
        if (d > 1) throw std::domain_error("DigitTail: digits must be 0 or 1");
    }
}

}  // namespace

DigitTail DigitTail::uniform(std::uint64_t seed) {
    return DigitTail(TailMode::Uniform, seed, 0.5, {});
}

DigitTail DigitTail::biased(std::uint64_t seed, double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::domain_error("DigitTail: bias q must lie in [0, 1]");
    }
    return DigitTail(TailMode::Biased, seed, q, {});
}

DigitTail DigitTail::periodic(std::vector<std::uint8_t> pattern) {
    if (pattern.empty()) throw std::domain_error("DigitTail: periodic pattern must be nonempty");
    check_binary_digits(pattern);
    return DigitTail(TailMode::Periodic, 0, 0.0, std::move(pattern));
}

DigitTail DigitTail::explicit_list(std::vector<std::uint8_t> digits) {
    check_binary_digits(digits);
    return DigitTail(TailMode::Explicit, 0, 0.0, std::move(digits));
}

std::uint8_t DigitTail::at(std::uint64_t index) const {
    switch (mode_) {
        case TailMode::Uniform:
            return static_cast<std::uint8_t>(stream_word(seed_, index) >> 63);
        case TailMode::Biased: {
            // 53 uniform bits -> [0, 1); digit 1 with probability q
            const double u = static_cast<double>(stream_word(seed_, index) >> 11) * 0x1.0p-53;
            return u < q_ ? 1 : 0;
        }
        case TailMode::Periodic:
            return pattern_[index % pattern_.size()];
        case TailMode::Explicit:
            if (index >= pattern_.size()) {
                throw state_error("DigitTail: explicit digit list exhausted at index " +
                                  std::to_string(index));
            }
            return pattern_[index];
    }
    throw std::logic_error("DigitTail: unreachable mode");
}

DigitTail DigitTail::fork(std::uint64_t tag) const {
    if (mode_ == TailMode::Uniform || mode_ == TailMode::Biased) {
        return DigitTail(mode_, derive_seed(seed_, tag), q_, {});
    }
    return *this;
}

BinaryWord word_from_tail(const DigitTail& tail, std::size_t n, std::uint64_t offset) {
    std::vector<std::uint8_t> ds(n);
    for (std::size_t i = 0; i < n; ++i) ds[i] = tail.at(offset + i);
    return BinaryWord(std::move(ds));
}

}  // namespace umb
