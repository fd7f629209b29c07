#pragma once

#include <cstdint>
#include <string>

#include "umb/dyadic.hpp"
#include "umb/numeric.hpp"
#include "umb/tail.hpp"

namespace umb {

enum class EntropyMethod { Analytic, Empirical };

std::string to_string(EntropyMethod m);

// Information production rate per iterate at tree level n. Level n has 2^n
// states, each reached by exactly one digit path, and successive states are
// separated by the constant-speed time tau = 2^{1-n}.
//
// k_paper = 2/(tau 2^n) = 1 for every n. k_plugin is the direct substitution
// of p = 2^-n into the entropy-rate sum with the same tau; it comes out as
// 1/tau = 2^{n-1}, disagreeing with k_paper by a factor 2^{n-1}. Both are
// reported; k_paper is the headline value. shannon_rate is the plain path
// entropy in bits per iteration, -(1/n) sum p log2 p.
struct EntropyReport {
    EntropyMethod method;
    int level_n;
    BigRational k_paper;
    BigRational k_plugin;
    double shannon_rate;
    Dyadic tau;
    BigRational speed_v;         // constant shift speed, 1
    std::uint64_t samples;       // 0 for the analytic report
    std::uint64_t distinct_paths;
};

// Exact closed forms for uniform path probabilities p = 2^-n.
EntropyReport entropy_analytic(int level_n);

// Frequency estimate: draws `samples` length-n digit paths (sample i reads
// the first n digits of tail.fork(i), so any partition of the sample range
// merges to the same histogram) and returns their empirical entropy rate.
// Small-sample bias is reported as-is, not corrected.
EntropyReport entropy_empirical(int level_n, std::uint64_t samples, const DigitTail& tail);

}  // namespace umb
