#include "umb/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace umb {

Dyadic::Dyadic(BigInt mantissa, long long shift) : mantissa_(std::move(mantissa)), shift_(shift) {
    if (mantissa_ < 0) throw std::domain_error("Dyadic: mantissa must be nonnegative");
    if (mantissa_ == 0) {
        shift_ = 0;
        return;
    }
    while ((mantissa_ & 1) == 0) {
        mantissa_ >>= 1;
        --shift_;
    }
}

long long Dyadic::log2() const {
    if (!is_power_of_two()) {
        throw std::domain_error("Dyadic: log2 requires a power of two, got " + str());
    }
    return -shift_;
}

Dyadic Dyadic::operator+(const Dyadic& other) const {
    const long long e = std::max(shift_, other.shift_);
    BigInt m = (mantissa_ << static_cast<unsigned>(e - shift_)) +
               (other.mantissa_ << static_cast<unsigned>(e - other.shift_));
    return Dyadic(std::move(m), e);
}

Dyadic Dyadic::operator-(const Dyadic& other) const {
    const long long e = std::max(shift_, other.shift_);
    BigInt a = mantissa_ << static_cast<unsigned>(e - shift_);
    BigInt b = other.mantissa_ << static_cast<unsigned>(e - other.shift_);
    if (a < b) throw std::domain_error("Dyadic: subtraction would be negative");
    return Dyadic(a - b, e);
}

Dyadic Dyadic::times_pow2(long long k) const {
    if (is_zero()) return zero();
    return Dyadic(mantissa_, shift_ - k);
}

BigRational Dyadic::to_rational() const {
    if (is_zero()) return BigRational(0);
    if (shift_ >= 0) {
        return BigRational(mantissa_, BigInt(1) << static_cast<unsigned>(shift_));
    }
    return BigRational(mantissa_ << static_cast<unsigned>(-shift_), 1);
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    // shift_ fits an int for every value this library produces
    return std::ldexp(mantissa_.convert_to<double>(), static_cast<int>(-shift_));
}

std::string Dyadic::str() const {
    if (is_zero()) return "0";
    if (shift_ == 0) return mantissa_.str();
    if (mantissa_ == 1) return "2^" + std::to_string(-shift_);
    return mantissa_.str() + "*2^" + std::to_string(-shift_);
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
    const long long e = std::max(a.shift_, b.shift_);
    const BigInt ma = a.mantissa_ << static_cast<unsigned>(e - a.shift_);
    const BigInt mb = b.mantissa_ << static_cast<unsigned>(e - b.shift_);
    if (ma == mb) return 0;
    return ma < mb ? -1 : 1;
}

}  // namespace umb
