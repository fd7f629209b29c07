#pragma once

#include <string>

#include "umb/numeric.hpp"

namespace umb {

// Exact nonnegative dyadic rational m * 2^-e. Canonical form keeps m odd
// (or m = 0 with e = 0), so equality is plain field comparison. All tree
// distances, transition times and perturbation sizes live in this type;
// doubles appear only on explicit request.
class Dyadic {
public:
    Dyadic() : mantissa_(0), shift_(0) {}
    Dyadic(BigInt mantissa, long long shift);

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return Dyadic(1, 0); }
    // 2^k for any sign of k.
    static Dyadic pow2(long long k) { return Dyadic(1, -k); }

    const BigInt& mantissa() const { return mantissa_; }
    long long shift() const { return shift_; }

    bool is_zero() const { return mantissa_ == 0; }
    bool is_power_of_two() const { return mantissa_ == 1; }
    // Exact integer log2; defined only for powers of two.
    long long log2() const;

    Dyadic operator+(const Dyadic& other) const;
    // Exact difference; the result must be nonnegative.
    Dyadic operator-(const Dyadic& other) const;
    Dyadic times_pow2(long long k) const;

    BigRational to_rational() const;
    double to_double() const;
    // "0", "1", "2^-19", "3*2^-3".
    std::string str() const;

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.shift_ == b.shift_ && a.mantissa_ == b.mantissa_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

private:
    static int compare(const Dyadic& a, const Dyadic& b);

    BigInt mantissa_;
    long long shift_;
};

}  // namespace umb
