#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "umb/numeric.hpp"

namespace umb {

/**
 * Exact p-adic valuation, norm, distance and base-p digit expansions over
 * integers and rationals.
 *
 * Norms are stored as (p, r) pairs with value p^{-r} plus a zero flag; no
 * floating point is involved until a caller explicitly asks for a double.
 * Two numbers are p-adically close when their difference is divisible by a
 * high power of p, which is what makes 135 closer to 10 than 35 is for p=5.
 */

// A validated prime. Construction rejects composites by trial division;
// everything downstream can then assume primality.
class Prime {
public:
    explicit Prime(long long p);

    long long value() const { return p_; }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
    long long p_;
};

// v_p(x): the exponent of p in x, or the distinguished infinite value for 0.
class Valuation {
public:
    static Valuation finite(long long r) { return Valuation(false, r); }
    static Valuation infinite() { return Valuation(true, 0); }

    bool is_infinite() const { return infinite_; }
    // Finite exponent; throws std::domain_error for the infinite valuation.
    long long value() const;

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.r_ == b.r_);
    }
    friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }

private:
    Valuation(bool inf, long long r) : infinite_(inf), r_(r) {}
    bool infinite_;
    long long r_;
};

// Exact p-adic absolute value p^{-r}, or exactly 0 for the zero element.
// Comparisons are exact; cross-base comparisons resolve through big-integer
// power comparison rather than floating point.
class PAdicNorm {
public:
    PAdicNorm(Prime base, long long r) : base_(base), r_(r), zero_(false) {}
    static PAdicNorm zero(Prime base) { return PAdicNorm(base, 0, true); }

    bool is_zero() const { return zero_; }
    const Prime& base() const { return base_; }
    // The exponent r with value p^{-r}; throws for the zero norm.
    long long exponent() const;

    double to_double() const;
    // "5^-3", "1" for r = 0, "0" for the zero norm, "5^2" for negative r.
    std::string str() const;

    PAdicNorm operator*(const PAdicNorm& other) const;  // same base required

    friend bool operator==(const PAdicNorm& a, const PAdicNorm& b) { return compare(a, b) == 0; }
    friend bool operator!=(const PAdicNorm& a, const PAdicNorm& b) { return compare(a, b) != 0; }
    friend bool operator<(const PAdicNorm& a, const PAdicNorm& b) { return compare(a, b) < 0; }
    friend bool operator>(const PAdicNorm& a, const PAdicNorm& b) { return compare(a, b) > 0; }
    friend bool operator<=(const PAdicNorm& a, const PAdicNorm& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const PAdicNorm& a, const PAdicNorm& b) { return compare(a, b) >= 0; }

private:
    PAdicNorm(Prime base, long long r, bool zero) : base_(base), r_(r), zero_(zero) {}
    static int compare(const PAdicNorm& a, const PAdicNorm& b);

    Prime base_;
    long long r_;
    bool zero_;
};

// Finite base-p expansion x = sum a_i p^i with 0 <= a_i <= p-1, least
// significant digit first. Canonical: the top digit is nonzero, the zero
// value is the empty list. Construction validates the digit range.
class DigitExpansion {
public:
    DigitExpansion(Prime base, std::vector<std::uint32_t> digits);

    const Prime& base() const { return base_; }
    const std::vector<std::uint32_t>& digits() const { return digits_; }

private:
    Prime base_;
    std::vector<std::uint32_t> digits_;
};

// Largest r with p^r | x for integers; extends additively to fractions,
// v(num) - v(den). valuation(0) is infinite.
Valuation valuation(const BigInt& x, const Prime& p);
Valuation valuation(const BigRational& x, const Prime& p);

// ||x||_p = p^{-v_p(x)}, ||0||_p = 0.
PAdicNorm padic_norm(const BigRational& x, const Prime& p);

// d_p(x, y) = ||x - y||_p. Symmetric, zero iff x == y, ultrametric.
PAdicNorm padic_distance(const BigRational& x, const BigRational& y, const Prime& p);

// Unique base-p expansion of a nonnegative integer and its inverse.
DigitExpansion digits(const BigInt& x, const Prime& p);
BigInt from_digits(const DigitExpansion& expansion);

}  // namespace umb
