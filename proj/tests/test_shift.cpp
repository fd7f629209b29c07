#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "umb/errors.hpp"
#include "umb/shift.hpp"

using namespace umb;

namespace {

// Copy of a word with the given 1-based positions forced to 0, so a
// perturbation at exactly those positions cannot carry.
BinaryWord with_zeros(const BinaryWord& w, const std::vector<std::size_t>& positions) {
    std::vector<std::uint8_t> ds = w.digits();
    for (std::size_t pos : positions) ds[pos - 1] = 0;
    return BinaryWord(std::move(ds));
}

}  // namespace

TEST_CASE("one shift moves digits left and consumes one tail digit") {
    const SequenceState s{BinaryWord::parse("0110"), DigitTail::explicit_list({1, 0})};
    const SequenceState s1 = bernoulli_shift(s);
    CHECK(s1.word == BinaryWord::parse("1101"));
    CHECK(s1.cursor == 1);
    CHECK(s1.step == 1);
    const SequenceState s2 = bernoulli_shift(s1);
    CHECK(s2.word == BinaryWord::parse("1010"));
    CHECK(s2.cursor == 2);
    CHECK_THROWS_AS(bernoulli_shift(s2), state_error);  // explicit list exhausted
}

TEST_CASE("periodic tails cycle their pattern") {
    SequenceState s{BinaryWord::parse("0000"), DigitTail::periodic({1, 0})};
    std::string seen;
    for (int i = 0; i < 6; ++i) {
        s = bernoulli_shift(s);
        seen += static_cast<char>('0' + s.word.digit(3));
    }
    CHECK(seen == "101010");
}

TEST_CASE("tail digit streams") {
    const DigitTail u = DigitTail::uniform(42);
    int ones = 0;
    for (std::uint64_t i = 0; i < 10'000; ++i) {
        const std::uint8_t d = u.at(i);
        REQUIRE(d <= 1);
        ones += d;
    }
    CHECK(ones > 4500);  // fair coin, 10k draws
    CHECK(ones < 5500);

    CHECK_THROWS_AS(DigitTail::biased(0, -0.1), std::domain_error);
    CHECK_THROWS_AS(DigitTail::biased(0, 1.1), std::domain_error);
    const DigitTail all_ones = DigitTail::biased(7, 1.0);
    const DigitTail all_zeros = DigitTail::biased(7, 0.0);
    for (std::uint64_t i = 0; i < 100; ++i) {
        CHECK(all_ones.at(i) == 1);
        CHECK(all_zeros.at(i) == 0);
    }
    const DigitTail quarter = DigitTail::biased(11, 0.25);
    int q_ones = 0;
    for (std::uint64_t i = 0; i < 100'000; ++i) q_ones += quarter.at(i);
    CHECK(q_ones > 24'000);
    CHECK(q_ones < 26'000);

    const DigitTail per = DigitTail::periodic({1, 0, 0});
    CHECK(per.at(0) == 1);
    CHECK(per.at(1) == 0);
    CHECK(per.at(3) == 1);
    CHECK(per.at(301) == 0);
    CHECK_THROWS_AS(DigitTail::periodic({}), std::domain_error);
    CHECK_THROWS_AS(DigitTail::periodic({0, 2}), std::domain_error);

    const DigitTail ex = DigitTail::explicit_list({1, 1, 0});
    CHECK(ex.at(2) == 0);
    CHECK_THROWS_AS(ex.at(3), state_error);
}

TEST_CASE("forked tails are independent yet reproducible") {
    const DigitTail base = DigitTail::uniform(5);
    const DigitTail a = base.fork(1);
    const DigitTail b = base.fork(2);
    const DigitTail a_again = base.fork(1);
    bool differs_from_base = false, differs_between = false;
    for (std::uint64_t i = 0; i < 64; ++i) {
        CHECK(a.at(i) == a_again.at(i));
        differs_from_base |= (a.at(i) != base.at(i));
        differs_between |= (a.at(i) != b.at(i));
    }
    CHECK(differs_from_base);
    CHECK(differs_between);

    const DigitTail per = DigitTail::periodic({1, 0});
    for (std::uint64_t i = 0; i < 8; ++i) CHECK(per.fork(9).at(i) == per.at(i));
}

TEST_CASE("word_from_tail honors the offset") {
    const DigitTail u = DigitTail::uniform(77);
    const BinaryWord w = word_from_tail(u, 8, 4);
    for (std::size_t i = 0; i < 8; ++i) CHECK(w.digit(i) == u.at(4 + i));
}

TEST_CASE("perturbation epsilon and validation") {
    PerturbationSpec spec;
    spec.h = 3;
    spec.deltas = {2};
    CHECK(spec.epsilon() == Dyadic(5, 5));  // 2^-3 (1 + 2^-2) = 5/32
    CHECK(spec.epsilon().str() == "5*2^-5");
    spec.validate(5);
    CHECK_THROWS_AS(spec.validate(4), std::domain_error);  // h + max(delta) > N

    PerturbationSpec plain;
    plain.h = 1;
    CHECK(plain.epsilon() == Dyadic::pow2(-1));

    PerturbationSpec bad;
    bad.h = 0;
    CHECK_THROWS_AS(bad.validate(8), std::domain_error);
    bad.h = 2;
    bad.deltas = {0};
    CHECK_THROWS_AS(bad.validate(8), std::domain_error);
    bad.deltas = {2, 2};
    CHECK_THROWS_AS(bad.validate(8), std::domain_error);
    bad.deltas = {3, 2};
    CHECK_THROWS_AS(bad.validate(8), std::domain_error);
}

TEST_CASE("perturb adds epsilon exactly") {
    const DigitTail tail = DigitTail::explicit_list({});

    SUBCASE("no carry") {
        PerturbationSpec spec;
        spec.h = 3;
        spec.deltas = {2};
        const auto r = perturb({BinaryWord::parse("00000000"), tail}, spec);
        CHECK(r.state.word == BinaryWord::parse("00101000"));
        CHECK(r.effective_h == 3);
    }
    SUBCASE("carry ripples to the top") {
        PerturbationSpec spec;
        spec.h = 4;
        const auto r = perturb({BinaryWord::parse("0111"), tail}, spec);
        CHECK(r.state.word == BinaryWord::parse("1000"));
        CHECK(r.effective_h == 1);
    }
    SUBCASE("carry stops early") {
        PerturbationSpec spec;
        spec.h = 4;
        const auto r = perturb({BinaryWord::parse("0110"), tail}, spec);
        CHECK(r.state.word == BinaryWord::parse("0111"));
        CHECK(r.effective_h == 4);
    }
    SUBCASE("overflow wraps modulo 1") {
        PerturbationSpec spec;
        spec.h = 4;
        const auto r = perturb({BinaryWord::parse("1111"), tail}, spec);
        CHECK(r.state.word == BinaryWord::parse("0000"));
        CHECK(r.effective_h == 1);
    }
}

TEST_CASE("perturb forks seeded tails and resets their cursor") {
    PerturbationSpec spec;
    spec.h = 2;
    const SequenceState s{BinaryWord::parse("0000"), DigitTail::uniform(3), 7, 7};
    const auto r = perturb(s, spec);
    CHECK(r.state.tail.seed() != s.tail.seed());
    CHECK(r.state.cursor == 0);
    CHECK(r.state.step == 0);

    // shared streams keep the cursor so both trajectories read the same digits
    const SequenceState sp{BinaryWord::parse("0000"), DigitTail::periodic({1, 0}), 7, 7};
    const auto rp = perturb(sp, spec);
    CHECK(rp.state.cursor == 7);
}

TEST_CASE("perturbed word encodes x0 + epsilon modulo 1") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 2000; ++i) {
        const std::size_t n = 2 + rng() % 63;
        const BinaryWord x = word_from_tail(DigitTail::uniform(rng()), n);
        PerturbationSpec spec;
        spec.h = 1 + static_cast<int>(rng() % n);
        if (static_cast<std::size_t>(spec.h) < n && (rng() & 1)) {
            spec.deltas = {1 + static_cast<int>(rng() % (n - spec.h))};
        }
        const auto r = perturb({x, DigitTail::uniform(rng())}, spec);
        BigRational expect = to_dyadic(x).to_rational() + spec.epsilon().to_rational();
        if (expect >= 1) expect -= 1;  // overflow past the leading digit wraps
        CHECK(to_dyadic(r.state.word).to_rational() == expect);
    }
}

TEST_CASE("pre-saturation divergence grows by exactly one level per step") {
    // log2 d_n = -(h-1) + n for n <= h-1, independent of what the tails append
    std::mt19937_64 rng(17);
    std::size_t checked = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 64;
        const int h = 3 + static_cast<int>(rng() % 62);  // [3, 64]
        const BinaryWord raw = word_from_tail(DigitTail::uniform(rng()), n);
        const BinaryWord x = with_zeros(raw, {static_cast<std::size_t>(h)});
        PerturbationSpec spec;
        spec.h = h;
        const SequenceState a{x, DigitTail::uniform(rng())};
        const auto r = perturb(a, spec);
        REQUIRE(r.effective_h == static_cast<std::size_t>(h));
        const DivergenceSeries series = divergence_series(a, r.state, n);
        REQUIRE(series.saturation_index.has_value());
        CHECK(*series.saturation_index == static_cast<std::uint64_t>(h - 1));
        for (std::uint64_t k = 0; k < *series.saturation_index; ++k) {
            REQUIRE(series.entries[k].distance.log2() == -(h - 1) + static_cast<long long>(k));
            ++checked;
        }
        CHECK(series.entries[static_cast<std::size_t>(h - 1)].distance == Dyadic::one());
    }
    CHECK(checked > 1000);
}

TEST_CASE("the divergence law also holds under carries, via effective_h") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 48;
        const int h = 2 + static_cast<int>(rng() % 47);
        const BinaryWord x = word_from_tail(DigitTail::uniform(rng()), n);
        PerturbationSpec spec;
        spec.h = h;
        const SequenceState a{x, DigitTail::uniform(rng())};
        const auto r = perturb(a, spec);
        const long long eff = static_cast<long long>(r.effective_h);
        const DivergenceSeries series = divergence_series(a, r.state, n);
        REQUIRE(series.saturation_index.has_value());
        CHECK(*series.saturation_index == static_cast<std::uint64_t>(eff - 1));
        for (std::uint64_t k = 0; k < *series.saturation_index; ++k) {
            REQUIRE(series.entries[k].distance.log2() == -(eff - 1) + static_cast<long long>(k));
        }
    }
}

TEST_CASE("identical seeds give bit-identical series") {
    auto make = [] {
        const BinaryWord x = with_zeros(word_from_tail(DigitTail::uniform(123), 64), {20});
        PerturbationSpec spec;
        spec.h = 20;
        const SequenceState a{x, DigitTail::uniform(123)};
        const auto r = perturb(a, spec);
        return divergence_series(a, r.state, 64);
    };
    const DivergenceSeries s1 = make();
    const DivergenceSeries s2 = make();
    REQUIRE(s1.entries.size() == s2.entries.size());
    CHECK(s1.saturation_index == s2.saturation_index);
    for (std::size_t i = 0; i < s1.entries.size(); ++i) {
        CHECK(s1.entries[i].n == s2.entries[i].n);
        CHECK(s1.entries[i].distance == s2.entries[i].distance);
    }
}

TEST_CASE("shared periodic tails let trajectories collapse to distance zero") {
    // epsilon touches only position 3; once those digits shift out, both
    // words are identical original digits plus identical appended digits
    PerturbationSpec spec;
    spec.h = 3;
    const SequenceState a{BinaryWord::parse("11011010"), DigitTail::periodic({1, 0})};
    const auto r = perturb(a, spec);
    REQUIRE(r.effective_h == 3);
    const DivergenceSeries series = divergence_series(a, r.state, 8);
    CHECK(*series.saturation_index == 2);  // d = 1 when the difference reaches the front
    CHECK(series.entries[3].distance.is_zero());
    CHECK(series.entries[8].distance.is_zero());
}

TEST_CASE("after full turnover the mean exponent matches the leading-agreement oracle") {
    // At n = N both words are pure tail digits from independent uniform
    // streams, so the distance is 2^-j with j the number of leading agreeing
    // digits: P(j = k) = 2^-(k+1). The expected exponent, truncated at N,
    // is -sum k 2^-(k+1).
    const std::size_t n = 64;
    double oracle = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        oracle -= static_cast<double>(k) * std::ldexp(1.0, -static_cast<int>(k) - 1);
    }
    std::mt19937_64 rng(23);
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < 3000; ++i) {
        const BinaryWord x = word_from_tail(DigitTail::uniform(rng()), n);
        PerturbationSpec spec;
        spec.h = 20;
        const SequenceState a{x, DigitTail::uniform(rng())};
        const auto r = perturb(a, spec);
        const DivergenceSeries series = divergence_series(a, r.state, n);
        const Dyadic& last = series.entries[n].distance;
        if (last.is_zero()) continue;  // probability 2^-64, but defined behavior
        sum += static_cast<double>(last.log2());
        ++count;
    }
    const double mean = sum / count;
    CHECK(std::abs(mean - oracle) < 0.1);
}

TEST_CASE("divergence of unequal lengths is rejected") {
    const SequenceState a{BinaryWord::parse("01"), DigitTail::uniform(0)};
    const SequenceState b{BinaryWord::parse("011"), DigitTail::uniform(0)};
    CHECK_THROWS_AS(divergence_series(a, b, 4), std::domain_error);
}
