#include "umb/padic.hpp"

#include <cmath>
#include <stdexcept>

namespace umb {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (long long d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

Prime::Prime(long long p) : p_(p) {
    if (!is_prime(p)) {
        throw std::domain_error("Prime: " + std::to_string(p) + " is not prime");
    }
}

long long Valuation::value() const {
    if (infinite_) throw std::domain_error("Valuation: infinite valuation has no finite value");
    return r_;
}

long long PAdicNorm::exponent() const {
    if (zero_) throw std::domain_error("PAdicNorm: zero norm has no exponent");
    return r_;
}

double PAdicNorm::to_double() const {
    if (zero_) return 0.0;
    return std::pow(static_cast<double>(base_.value()), -static_cast<double>(r_));
}

std::string PAdicNorm::str() const {
    if (zero_) return "0";
    if (r_ == 0) return "1";
    return std::to_string(base_.value()) + "^" + std::to_string(-r_);
}

PAdicNorm PAdicNorm::operator*(const PAdicNorm& other) const {
    if (base_ != other.base_) {
        throw std::domain_error("PAdicNorm: cannot multiply norms with different bases");
    }
    if (zero_ || other.zero_) return zero(base_);
    return PAdicNorm(base_, r_ + other.r_);
}

int PAdicNorm::compare(const PAdicNorm& a, const PAdicNorm& b) {
    if (a.zero_ && b.zero_) return 0;
    if (a.zero_) return -1;  // 0 is smaller than any p^-r
    if (b.zero_) return 1;
    if (a.base_ == b.base_) {
        // p^-r decreases in r
        if (a.r_ == b.r_) return 0;
        return a.r_ > b.r_ ? -1 : 1;
    }
    // p^-r vs q^-s with p != q: clear denominators and compare integers.
    BigInt lhs = 1, rhs = 1;
    if (a.r_ < 0) lhs *= boost::multiprecision::pow(BigInt(a.base_.value()), static_cast<unsigned>(-a.r_));
    else rhs *= boost::multiprecision::pow(BigInt(a.base_.value()), static_cast<unsigned>(a.r_));
    if (b.r_ < 0) rhs *= boost::multiprecision::pow(BigInt(b.base_.value()), static_cast<unsigned>(-b.r_));
    else lhs *= boost::multiprecision::pow(BigInt(b.base_.value()), static_cast<unsigned>(b.r_));
    if (lhs == rhs) return 0;
    return lhs < rhs ? -1 : 1;
}

DigitExpansion::DigitExpansion(Prime base, std::vector<std::uint32_t> digits)
    : base_(base), digits_(std::move(digits)) {
    const auto p = static_cast<std::uint32_t>(base_.value());
    for (auto d : digits_) {
        if (d >= p) {
            throw std::domain_error("DigitExpansion: digit " + std::to_string(d) +
                                    " out of range for base " + std::to_string(p));
        }
    }
    while (!digits_.empty() && digits_.back() == 0) digits_.pop_back();
}

Valuation valuation(const BigInt& x, const Prime& p) {
    if (x == 0) return Valuation::infinite();
    BigInt n = abs(x);
    const BigInt pp = p.value();
    long long r = 0;
    BigInt q, rem;
    for (;;) {
        divide_qr(n, pp, q, rem);
        if (rem != 0) break;
        n = q;
        ++r;
    }
    return Valuation::finite(r);
}

Valuation valuation(const BigRational& x, const Prime& p) {
    if (x == 0) return Valuation::infinite();
    const Valuation vn = valuation(numerator(x), p);
    const Valuation vd = valuation(denominator(x), p);
    return Valuation::finite(vn.value() - vd.value());
}

PAdicNorm padic_norm(const BigRational& x, const Prime& p) {
    const Valuation v = valuation(x, p);
    if (v.is_infinite()) return PAdicNorm::zero(p);
    return PAdicNorm(p, v.value());
}

PAdicNorm padic_distance(const BigRational& x, const BigRational& y, const Prime& p) {
    return padic_norm(x - y, p);
}

DigitExpansion digits(const BigInt& x, const Prime& p) {
    if (x < 0) throw std::domain_error("digits: input must be nonnegative");
    std::vector<std::uint32_t> out;
    BigInt n = x;
    const BigInt pp = p.value();
    BigInt q, rem;
    while (n != 0) {
        divide_qr(n, pp, q, rem);
        out.push_back(rem.convert_to<std::uint32_t>());
        n = q;
    }
    return DigitExpansion(p, std::move(out));
}

BigInt from_digits(const DigitExpansion& expansion) {
    BigInt value = 0;
    const BigInt pp = expansion.base().value();
    const auto& ds = expansion.digits();
    for (auto it = ds.rbegin(); it != ds.rend(); ++it) {
        value = value * pp + *it;
    }
    return value;
}

}  // namespace umb
