#include "umb/shift.hpp"

#include <stdexcept>

#include "umb/numeric.hpp"

namespace umb {

namespace {

constexpr std::uint64_t kPerturbTag = 0x7065727475726221ull;

}  // namespace

SequenceState bernoulli_shift(const SequenceState& s) {
    const std::uint8_t born = s.tail.at(s.cursor);
    std::vector<std::uint8_t> ds(s.word.size());
    for (std::size_t i = 0; i + 1 < ds.size(); ++i) ds[i] = s.word.digit(i + 1);
    ds.back() = born;
    return SequenceState{BinaryWord(std::move(ds)), s.tail, s.cursor + 1, s.step + 1};
}

Dyadic PerturbationSpec::epsilon() const {
    Dyadic eps = Dyadic::pow2(-h);
    for (int d : deltas) eps = eps + Dyadic::pow2(-h - d);
    return eps;
}

void PerturbationSpec::validate(std::size_t n) const {
    if (h < 1) throw std::domain_error("PerturbationSpec: h must be >= 1");
    int prev = 0;
    for (int d : deltas) {
        if (d < 1) throw std::domain_error("PerturbationSpec: deltas must be >= 1");
        if (d <= prev) throw std::domain_error("PerturbationSpec: deltas must be strictly increasing");
        prev = d;
    }
    const long long top = h + (deltas.empty() ? 0 : deltas.back());
    if (top > static_cast<long long>(n)) {
        throw std::domain_error("PerturbationSpec: h + max(delta) must be <= word length");
    }
}

PerturbResult perturb(const SequenceState& s, const PerturbationSpec& spec) {
    const std::size_t n = s.word.size();
    spec.validate(n);

    // epsilon as an N-bit vector: a 1 at position h and each h + delta_i
    std::vector<std::uint8_t> eps(n, 0);
    eps[static_cast<std::size_t>(spec.h) - 1] = 1;
    for (int d : spec.deltas) eps[static_cast<std::size_t>(spec.h + d) - 1] = 1;

    // exact addition, least significant position first; carry off the
    // leading position is dropped (wrap modulo 1)
    std::vector<std::uint8_t> sum(n);
    std::uint8_t carry = 0;
    for (std::size_t i = n; i-- > 0;) {
        const std::uint8_t t = static_cast<std::uint8_t>(s.word.digit(i) + eps[i] + carry);
        sum[i] = t & 1;
        carry = t >> 1;
    }

    BinaryWord word(std::move(sum));
    std::size_t effective_h = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (word.digit(i) != s.word.digit(i)) {
            effective_h = i + 1;
            break;
        }
    }
    // epsilon truncated to N bits is nonzero under validate(), so the words
    // differ somewhere even after a wrap

    SequenceState out{std::move(word), s.tail.fork(kPerturbTag), 0, 0};
    if (out.tail.mode() == TailMode::Periodic || out.tail.mode() == TailMode::Explicit) {
        out.cursor = s.cursor;  // shared stream: keep reading the same digits
    }
    return PerturbResult{std::move(out), effective_h};
}

DivergenceSeries divergence_series(const SequenceState& a, const SequenceState& b,
                                   std::uint64_t n_max) {
    if (a.word.size() != b.word.size()) {
        throw std::domain_error("divergence_series: words must have equal length");
    }
    DivergenceSeries series;
    series.entries.reserve(n_max + 1);
    SequenceState x = a;
    SequenceState y = b;
    for (std::uint64_t n = 0;; ++n) {
        Dyadic d = tree_distance(x.word, y.word).value;
        if (!series.saturation_index && (d == Dyadic::one() || d.is_zero())) {
            series.saturation_index = n;
        }
        series.entries.push_back({n, std::move(d)});
        if (n == n_max) break;
        x = bernoulli_shift(x);
        y = bernoulli_shift(y);
    }
    return series;
}

}  // namespace umb
