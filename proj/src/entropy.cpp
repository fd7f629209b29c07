#include "umb/entropy.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace umb {

std::string to_string(EntropyMethod m) {
    switch (m) {
        case EntropyMethod::Analytic: return "analytic";
        case EntropyMethod::Empirical: return "empirical";
    }
    throw std::logic_error("EntropyMethod: unreachable");
}

namespace {

// tau = 2^{1-n} from the constant-speed argument v = 2^{1-n}/tau = 1, plus
// the two k readings computed from it in exact rational arithmetic.
struct LevelConstants {
    Dyadic tau;
    BigRational k_paper;
    BigRational k_plugin;
};

LevelConstants level_constants(int n) {
    if (n < 1) throw std::domain_error("entropy: level n must be >= 1");
    LevelConstants c;
    c.tau = Dyadic::pow2(1 - n);
    const BigRational tau_q = c.tau.to_rational();
    BigRational scale = tau_q;  // tau * 2^n
    scale *= BigRational(BigInt(1) << static_cast<unsigned>(n));
    c.k_paper = BigRational(2) / scale;
    // plugging p = 2^-n into the rate sum: -(1/(n tau)) * 2^n * 2^-n * (-n)
    c.k_plugin = BigRational(1) / tau_q;
    return c;
}

}  // namespace

EntropyReport entropy_analytic(int level_n) {
    LevelConstants c = level_constants(level_n);
    // uniform p = 2^-n over 2^n states: -(1/n) sum p log2 p = n/n = 1 bit
    const double shannon = 1.0;
    return EntropyReport{EntropyMethod::Analytic, level_n, std::move(c.k_paper),
                         std::move(c.k_plugin),   shannon, std::move(c.tau),
                         BigRational(1),          0,       0};
}

EntropyReport entropy_empirical(int level_n, std::uint64_t samples, const DigitTail& tail) {
    LevelConstants c = level_constants(level_n);
    if (level_n > 64) {
        throw std::domain_error("entropy_empirical: level n must be <= 64");
    }
    if (samples < 1) throw std::domain_error("entropy_empirical: need samples >= 1");

    std::unordered_map<std::uint64_t, std::uint64_t> histogram;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const DigitTail stream = tail.fork(i);
        std::uint64_t path = 0;
        for (int j = 0; j < level_n; ++j) {
            path = (path << 1) | stream.at(static_cast<std::uint64_t>(j));
        }
        ++histogram[path];
    }

    // sum over sorted keys so the floating accumulation order is canonical
    std::map<std::uint64_t, std::uint64_t> sorted(histogram.begin(), histogram.end());
    double entropy_bits = 0.0;
    for (const auto& [path, count] : sorted) {
        const double p = static_cast<double>(count) / static_cast<double>(samples);
        entropy_bits -= p * std::log2(p);
    }
    const double rate = entropy_bits / static_cast<double>(level_n);

    return EntropyReport{EntropyMethod::Empirical, level_n,  std::move(c.k_paper),
                         std::move(c.k_plugin),    rate,     std::move(c.tau),
                         BigRational(1),           samples,  sorted.size()};
}

}  // namespace umb
