#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace umb {

// Exact integer/rational substrate for everything that must compare equal
// exactly (norms, dyadic distances, fitted slopes, entropy constants).
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// SplitMix64 finalizer. Tails and seed derivation are counter-based streams
// over this mixer: digit k of a stream is a pure function of (seed, k), which
// keeps states value-semantic and gives random access for free.
constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// k-th word of the stream identified by seed.
constexpr std::uint64_t stream_word(std::uint64_t seed, std::uint64_t k) {
    return mix64(seed + (k + 1) * kGolden64);
}

// Independent child stream for (seed, tag).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(mix64(seed) ^ mix64(tag ^ 0xD6E8FEB86659FD93ull));
}

}  // namespace umb
