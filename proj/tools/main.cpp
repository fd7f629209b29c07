#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "serialize.hpp"
#include "umb/baker.hpp"
#include "umb/entropy.hpp"
#include "umb/errors.hpp"
#include "umb/lyapunov.hpp"
#include "umb/padic.hpp"
#include "umb/shift.hpp"
#include "umb/tail.hpp"
#include "umb/tree_export.hpp"
#include "umb/word.hpp"

namespace {

using umbcli::CsvWriter;
using umbcli::format_double;
using umbcli::Json;
using umbcli::put_exact;
using namespace umb;

// Problems with the invocation itself (unreadable files, inconsistent flag
// combinations, malformed numbers). Module validation errors propagate as
// std::exception instead and map to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Stream tags separating the digits that build a random initial word from
// the digits consumed while evolving it.
constexpr std::uint64_t kInitTag = 0x696e69742d776f72ull;
constexpr std::uint64_t kEvolveTag = 0x65766f6c76652d74ull;

struct GlobalOpts {
    std::string format = "json";
    std::string output;
    std::string config_path;
    std::uint64_t seed = 0;
};

struct TailOpts {
    std::string mode = "uniform";
    double q = 0.5;
    std::string pattern;
    std::string digits;
};

struct ShiftOpts {
    std::string word;
    std::string m_text;
    bool random = false;
    std::size_t length = 64;
    std::uint64_t steps = 16;
    TailOpts tail;
};

struct LyapunovOpts {
    std::string method = "symbolic";
    std::size_t length = 64;
    int h = 20;
    std::vector<int> deltas;
    double x0 = 0.3;
    std::uint64_t n_iter = 10000;
};

struct EntropyOpts {
    std::string method = "analytic";
    int level = 10;
    std::uint64_t samples = std::uint64_t{1} << 20;
    TailOpts tail;
};

struct TreeOpts {
    std::vector<std::string> words;
    int full = 0;
};

struct BakerOpts {
    double eps0 = 1e-6;
    std::uint64_t steps = 1000;
    double x0 = 0.3;
    double y0 = 0.4;
};

struct Output {
    Json config;
    Json report;
    std::string csv;
    std::string raw;  // verbatim text (Graphviz); ignores --format when set
    bool is_raw = false;
};

// Options a config file may supply, keyed by their long name; a key only
// applies when the flag was not given on the command line.
struct OptMap {
    std::map<std::string, CLI::Option*> opts;

    CLI::Option* add(const std::string& name, CLI::Option* o) {
        opts[name] = o;
        return o;
    }
    bool given(const std::string& name) const {
        auto it = opts.find(name);
        return it != opts.end() && it->second->count() > 0;
    }
};

template <typename T>
void cfg_get(const Json& cfg, const OptMap& m, const std::string& key, T& target) {
    if (!cfg.contains(key) || m.given(key)) return;
    try {
        target = cfg.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw UsageError("config: bad value for \"" + key + "\"");
    }
}

Json load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read config file: " + path);
    Json j;
    try {
        j = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw UsageError("config: top-level JSON object expected");
    return j;
}

BigRational parse_rational(const std::string& s) {
    try {
        return BigRational(s);
    } catch (const std::exception&) {
        throw UsageError("not a rational number: " + s);
    }
}

BigInt parse_bigint(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::exception&) {
        throw UsageError("not an integer: " + s);
    }
}

std::vector<std::uint8_t> parse_bits(const std::string& s) {
    std::vector<std::uint8_t> out;
    out.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw UsageError("binary digit string expected: " + s);
        out.push_back(static_cast<std::uint8_t>(c == '1'));
    }
    return out;
}

DigitTail build_tail(const TailOpts& t, std::uint64_t seed) {
    if (t.mode == "uniform") return DigitTail::uniform(seed);
    if (t.mode == "biased") return DigitTail::biased(seed, t.q);
    if (t.mode == "periodic") return DigitTail::periodic(parse_bits(t.pattern));
    if (t.mode == "explicit") return DigitTail::explicit_list(parse_bits(t.digits));
    throw UsageError("unknown tail mode: " + t.mode);
}

Json tail_echo(const TailOpts& t, std::uint64_t seed) {
    Json j;
    j["mode"] = t.mode;
    if (t.mode == "uniform" || t.mode == "biased") j["seed"] = seed;
    if (t.mode == "biased") j["q"] = t.q;
    if (t.mode == "periodic") j["pattern"] = t.pattern;
    if (t.mode == "explicit") j["digits"] = t.digits;
    return j;
}

void add_tail_options(CLI::App* cmd, TailOpts& t, OptMap& m) {
    m.add("tail", cmd->add_option("--tail", t.mode, "Tail digit source")
                      ->check(CLI::IsMember({"uniform", "biased", "periodic", "explicit"}))
                      ->capture_default_str());
    m.add("q", cmd->add_option("--q", t.q, "P(digit = 1) for --tail biased")
                   ->capture_default_str());
    m.add("pattern",
          cmd->add_option("--pattern", t.pattern, "Repeating digits for --tail periodic"));
    m.add("digits",
          cmd->add_option("--digits", t.digits, "Finite digit list for --tail explicit"));
}

void apply_tail_cfg(const Json& cfg, const OptMap& m, TailOpts& t) {
    cfg_get(cfg, m, "tail", t.mode);
    cfg_get(cfg, m, "q", t.q);
    cfg_get(cfg, m, "pattern", t.pattern);
    cfg_get(cfg, m, "digits", t.digits);
}

Json base_config(const GlobalOpts& g, const std::string& command) {
    Json c;
    c["command"] = command;
    c["format"] = g.format;
    c["seed"] = g.seed;
    c["output"] = g.output.empty() ? Json("-") : Json(g.output);
    return c;
}

// ---------------------------------------------------------------- handlers

Output run_padic_valuation(const GlobalOpts& g, const std::string& xs, long long p) {
    Output o;
    const Prime prime(p);
    const Valuation v = valuation(parse_rational(xs), prime);
    o.config = base_config(g, "padic valuation");
    o.config["p"] = p;
    o.report["x"] = xs;
    o.report["p"] = p;
    o.report["finite"] = !v.is_infinite();
    if (v.is_infinite()) {
        o.report["valuation"] = nullptr;
    } else {
        o.report["valuation"] = v.value();
    }
    CsvWriter w;
    w.row({"x", "p", "finite", "valuation"});
    w.row({xs, std::to_string(p), v.is_infinite() ? "false" : "true",
           v.is_infinite() ? "" : std::to_string(v.value())});
    o.csv = w.str();
    return o;
}

Output run_padic_norm(const GlobalOpts& g, const std::string& xs, long long p) {
    Output o;
    const Prime prime(p);
    const PAdicNorm n = padic_norm(parse_rational(xs), prime);
    o.config = base_config(g, "padic norm");
    o.config["p"] = p;
    o.report["x"] = xs;
    o.report["p"] = p;
    put_exact(o.report, "norm", n);
    o.report["is_zero"] = n.is_zero();
    CsvWriter w;
    w.row({"x", "p", "norm", "norm_decimal", "is_zero"});
    w.row({xs, std::to_string(p), n.str(), format_double(n.to_double()),
           n.is_zero() ? "true" : "false"});
    o.csv = w.str();
    return o;
}

Output padic_distance_output(const GlobalOpts& g, const std::string& command,
                             const std::string& xs, const std::string& ys, long long p) {
    Output o;
    const Prime prime(p);
    const PAdicNorm d = padic_distance(parse_rational(xs), parse_rational(ys), prime);
    o.config = base_config(g, command);
    o.config["p"] = p;
    o.report["x"] = xs;
    o.report["y"] = ys;
    o.report["p"] = p;
    if (command == "distance") o.report["metric"] = "padic";
    put_exact(o.report, "distance", d);
    o.report["is_zero"] = d.is_zero();
    CsvWriter w;
    if (command == "distance") {
        w.row({"x", "y", "metric", "p", "distance", "distance_decimal"});
        w.row({xs, ys, "padic", std::to_string(p), d.str(), format_double(d.to_double())});
    } else {
        w.row({"x", "y", "p", "distance", "distance_decimal", "is_zero"});
        w.row({xs, ys, std::to_string(p), d.str(), format_double(d.to_double()),
               d.is_zero() ? "true" : "false"});
    }
    o.csv = w.str();
    return o;
}

Output run_padic_digits(const GlobalOpts& g, const std::string& xs, long long p) {
    Output o;
    const Prime prime(p);
    const DigitExpansion e = digits(parse_bigint(xs), prime);
    o.config = base_config(g, "padic digits");
    o.config["p"] = p;
    o.report["x"] = xs;
    o.report["p"] = p;
    o.report["digits"] = e.digits();  // least significant first
    std::string joined;
    for (std::size_t i = 0; i < e.digits().size(); ++i) {
        if (i) joined += ' ';
        joined += std::to_string(e.digits()[i]);
    }
    CsvWriter w;
    w.row({"x", "p", "digits"});
    w.row({xs, std::to_string(p), joined});
    o.csv = w.str();
    return o;
}

Output run_padic_from_digits(const GlobalOpts& g, const std::vector<std::uint32_t>& ds,
                             long long p) {
    Output o;
    const Prime prime(p);
    const BigInt x = from_digits(DigitExpansion(prime, ds));
    o.config = base_config(g, "padic from-digits");
    o.config["p"] = p;
    o.report["p"] = p;
    o.report["digits"] = ds;
    o.report["value"] = x.str();
    std::string joined;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (i) joined += ' ';
        joined += std::to_string(ds[i]);
    }
    CsvWriter w;
    w.row({"p", "digits", "value"});
    w.row({std::to_string(p), joined, x.str()});
    o.csv = w.str();
    return o;
}

Output run_tree_distance(const GlobalOpts& g, const std::string& xs, const std::string& ys) {
    Output o;
    const BinaryWord x = BinaryWord::parse(xs);
    const BinaryWord y = BinaryWord::parse(ys);
    const DistanceReport r = tree_distance(x, y);
    o.config = base_config(g, "distance");
    o.report["x"] = xs;
    o.report["y"] = ys;
    o.report["metric"] = "tree";
    put_exact(o.report, "distance", r.value);
    o.report["lcp"] = r.lcp;
    o.report["m_levels"] = r.m_levels;
    CsvWriter w;
    w.row({"x", "y", "metric", "distance", "distance_decimal", "lcp", "m_levels"});
    w.row({xs, ys, "tree", r.value.str(), format_double(r.value.to_double()),
           std::to_string(r.lcp), std::to_string(r.m_levels)});
    o.csv = w.str();
    return o;
}

Output run_time(const GlobalOpts& g, const std::string& xs, const std::string& ys) {
    Output o;
    const Dyadic t = transition_time(BinaryWord::parse(xs), BinaryWord::parse(ys));
    o.config = base_config(g, "time");
    o.report["x"] = xs;
    o.report["y"] = ys;
    put_exact(o.report, "time", t);
    CsvWriter w;
    w.row({"x", "y", "time", "time_decimal"});
    w.row({xs, ys, t.str(), format_double(t.to_double())});
    o.csv = w.str();
    return o;
}

Output run_shift(const GlobalOpts& g, const ShiftOpts& s, const OptMap& given) {
    const bool has_word = !s.word.empty();
    const bool has_m = !s.m_text.empty();
    if ((has_word && has_m) || (has_word && s.random) || (has_m && s.random)) {
        throw UsageError("choose one of --word, --m, --random");
    }

    const DigitTail base = build_tail(s.tail, g.seed);
    std::optional<BinaryWord> w0;
    std::size_t length = s.length;
    std::uint64_t cursor0 = 0;
    std::string source;
    if (has_word) {
        w0 = BinaryWord::parse(s.word);
        if (given.given("N") && length != w0->size()) {
            throw UsageError("--N contradicts the length of --word");
        }
        length = w0->size();
        source = "word";
    } else if (has_m) {
        w0 = word_from_dyadic(parse_bigint(s.m_text), length);
        source = "value";
    } else {
        w0 = word_from_tail(base.fork(kInitTag), length);
        // without an independent stream to fork to, skip the digits the
        // initial word consumed
        if (s.tail.mode == "periodic" || s.tail.mode == "explicit") cursor0 = length;
        source = "random";
    }

    Output o;
    o.config = base_config(g, "shift");
    o.config["source"] = source;
    if (has_word) o.config["word"] = s.word;
    if (has_m) o.config["m"] = s.m_text;
    o.config["N"] = length;
    o.config["n"] = s.steps;
    o.config["tail"] = tail_echo(s.tail, g.seed);

    SequenceState st{*w0, base.fork(kEvolveTag), cursor0, 0};
    Json traj = Json::array();
    CsvWriter w;
    w.row({"step", "word", "value", "value_decimal"});
    for (std::uint64_t i = 0; i <= s.steps; ++i) {
        const Dyadic v = to_dyadic(st.word);
        Json row;
        row["step"] = i;
        row["word"] = st.word.str();
        put_exact(row, "value", v);
        traj.push_back(std::move(row));
        w.row({std::to_string(i), st.word.str(), v.str(), format_double(v.to_double())});
        if (i < s.steps) st = bernoulli_shift(st);
    }
    o.report["N"] = length;
    o.report["steps"] = s.steps;
    o.report["trajectory"] = std::move(traj);
    o.csv = w.str();
    return o;
}

void put_lyapunov_common(Output& o, const LyapunovReport& rep) {
    o.report["method"] = to_string(rep.method);
    put_exact(o.report, "lambda_base2", rep.lambda_base2);
    o.report["lambda_nats"] = rep.lambda_nats;
    o.report["n_start"] = rep.n_start;
    o.report["n_end"] = rep.n_end;
    CsvWriter w;
    w.row({"method", "lambda_base2", "lambda_base2_decimal", "lambda_nats", "n_start", "n_end"});
    w.row({to_string(rep.method), umbcli::rational_str(rep.lambda_base2),
           format_double(umbcli::rational_double(rep.lambda_base2)),
           format_double(rep.lambda_nats), std::to_string(rep.n_start),
           std::to_string(rep.n_end)});
    o.csv = w.str();
}

Output run_lyapunov(const GlobalOpts& g, const LyapunovOpts& l) {
    Output o;
    o.config = base_config(g, "lyapunov");
    o.config["method"] = l.method;

    if (l.method == "symbolic") {
        o.config["N"] = l.length;
        o.config["h"] = l.h;
        o.config["delta"] = l.deltas;
        const DigitTail base = DigitTail::uniform(g.seed);
        const BinaryWord w0 = word_from_tail(base.fork(kInitTag), l.length);
        const SequenceState a{w0, base.fork(kEvolveTag), 0, 0};
        PerturbationSpec spec;
        spec.h = l.h;
        spec.deltas = l.deltas;
        spec.validate(l.length);
        const PerturbResult pr = perturb(a, spec);
        const DivergenceSeries series = divergence_series(a, pr.state, l.length);
        const LyapunovReport rep = lyapunov_symbolic(series);
        put_lyapunov_common(o, rep);
        o.report["h"] = l.h;
        o.report["effective_h"] = pr.effective_h;
        put_exact(o.report, "epsilon", spec.epsilon());
        Json ser = Json::array();
        for (const auto& e : series.entries) {
            Json row;
            row["n"] = e.n;
            put_exact(row, "distance", e.distance);
            ser.push_back(std::move(row));
        }
        o.report["series"] = std::move(ser);
        if (series.saturation_index) {
            o.report["saturation_index"] = *series.saturation_index;
        } else {
            o.report["saturation_index"] = nullptr;
        }
        return o;
    }

    LyapunovMethod method;
    if (l.method == "euclidean-derivative") {
        method = LyapunovMethod::EuclideanDerivative;
    } else if (l.method == "euclidean-two-trajectory") {
        method = LyapunovMethod::EuclideanTwoTrajectory;
    } else {
        throw UsageError("unknown method: " + l.method);
    }
    o.config["x0"] = l.x0;
    o.config["n"] = l.n_iter;
    const LyapunovReport rep = lyapunov_euclidean(l.x0, l.n_iter, method);
    put_lyapunov_common(o, rep);
    o.report["x0"] = l.x0;
    o.report["n_iter"] = l.n_iter;
    if (method == LyapunovMethod::EuclideanTwoTrajectory) {
        o.report["delta0"] = kTwoTrajectoryDelta;
    }
    return o;
}

Output run_entropy(const GlobalOpts& g, const EntropyOpts& e) {
    Output o;
    o.config = base_config(g, "entropy");
    o.config["method"] = e.method;
    o.config["n"] = e.level;

    EntropyReport rep = [&] {
        if (e.method == "analytic") return entropy_analytic(e.level);
        if (e.method == "empirical") {
            o.config["samples"] = e.samples;
            o.config["tail"] = tail_echo(e.tail, g.seed);
            return entropy_empirical(e.level, e.samples, build_tail(e.tail, g.seed));
        }
        throw UsageError("unknown method: " + e.method);
    }();

    o.report["method"] = to_string(rep.method);
    o.report["level_n"] = rep.level_n;
    put_exact(o.report, "k_paper", rep.k_paper);
    put_exact(o.report, "k_plugin", rep.k_plugin);
    o.report["shannon_rate"] = rep.shannon_rate;
    put_exact(o.report, "tau", rep.tau);
    put_exact(o.report, "speed_v", rep.speed_v);
    o.report["samples"] = rep.samples;
    o.report["distinct_paths"] = rep.distinct_paths;
    CsvWriter w;
    w.row({"method", "level_n", "k_paper", "k_paper_decimal", "k_plugin", "k_plugin_decimal",
           "shannon_rate", "tau", "tau_decimal", "speed_v", "speed_v_decimal", "samples",
           "distinct_paths"});
    w.row({to_string(rep.method), std::to_string(rep.level_n), umbcli::rational_str(rep.k_paper),
           format_double(umbcli::rational_double(rep.k_paper)), umbcli::rational_str(rep.k_plugin),
           format_double(umbcli::rational_double(rep.k_plugin)), format_double(rep.shannon_rate),
           rep.tau.str(), format_double(rep.tau.to_double()), umbcli::rational_str(rep.speed_v),
           format_double(umbcli::rational_double(rep.speed_v)), std::to_string(rep.samples),
           std::to_string(rep.distinct_paths)});
    o.csv = w.str();
    return o;
}

Output run_tree(const TreeOpts& t) {
    if (t.full != 0 && !t.words.empty()) throw UsageError("give words or --full, not both");
    std::vector<BinaryWord> words;
    if (t.full != 0) {
        if (t.full < 1 || t.full > 16) throw UsageError("--full must be in [1, 16]");
        const std::size_t count = std::size_t{1} << t.full;
        words.reserve(count);
        for (std::size_t m = 0; m < count; ++m) {
            words.push_back(word_from_dyadic(BigInt(m), static_cast<std::size_t>(t.full)));
        }
    } else {
        if (t.words.empty()) throw UsageError("no words given (positional words or --full N)");
        words.reserve(t.words.size());
        for (const auto& s : t.words) words.push_back(BinaryWord::parse(s));
    }
    Output o;
    o.raw = tree_export(words);
    o.is_raw = true;
    return o;
}

Output run_baker(const GlobalOpts& g, const BakerOpts& b) {
    Output o;
    o.config = base_config(g, "baker");
    o.config["eps0"] = b.eps0;
    o.config["n"] = b.steps;
    o.config["x0"] = b.x0;
    o.config["y0"] = b.y0;
    const BakerDemoReport rep = baker_saturation_demo(b.eps0, b.steps, {b.x0, b.y0});
    o.report["eps0"] = b.eps0;
    o.report["n_steps"] = b.steps;
    o.report["max_euclid"] = rep.max_euclid;
    const double sqrt2 = std::sqrt(2.0);
    o.report["euclid_bound"] = sqrt2;
    o.report["euclid_bounded"] = rep.max_euclid <= sqrt2;
    Json steps = Json::array();
    CsvWriter w;
    w.row({"n", "ax", "ay", "bx", "by", "x_sep", "euclid", "same_branch"});
    for (const auto& s : rep.steps) {
        Json row;
        row["n"] = s.n;
        row["ax"] = s.a.x;
        row["ay"] = s.a.y;
        row["bx"] = s.b.x;
        row["by"] = s.b.y;
        row["x_sep"] = s.x_sep;
        row["euclid"] = s.euclid;
        row["same_branch"] = s.same_branch;
        steps.push_back(std::move(row));
        w.row({std::to_string(s.n), format_double(s.a.x), format_double(s.a.y),
               format_double(s.b.x), format_double(s.b.y), format_double(s.x_sep),
               format_double(s.euclid), s.same_branch ? "true" : "false"});
    }
    o.report["steps"] = std::move(steps);
    o.csv = w.str();
    return o;
}

// ---------------------------------------------------------------- plumbing

void write_output(const GlobalOpts& g, const std::string& text) {
    if (g.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.output, std::ios::binary);
    if (!f) throw UsageError("cannot open output file: " + g.output);
    f << text;
    f.flush();
    if (!f) throw UsageError("write failed: " + g.output);
}

std::string render(const GlobalOpts& g, const Output& out) {
    if (out.is_raw) return out.raw;
    if (g.format == "csv") return out.csv;
    return umbcli::json_document(out.config, out.report);
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    ShiftOpts so;
    LyapunovOpts lo;
    EntropyOpts eo;
    TreeOpts to;
    BakerOpts bo;
    long long padic_p = 2;
    std::string pa_x, pa_y;
    std::vector<std::uint32_t> fd_digits;
    std::string d_x, d_y;
    bool d_padic = false;
    long long d_p = 2;
    std::string t_x, t_y;

    CLI::App app{
        "Ultrametric toolkit for the Bernoulli shift: exact p-adic and tree "
        "distances, divergence laws, Lyapunov and entropy estimators."};
    app.require_subcommand(1);
    // Long-form help only: a short -h would collide with the --h option below.
    app.set_help_flag("--help", "Print this help message and exit");

    OptMap gm;
    gm.add("format", app.add_option("--format", g.format, "Output format")
                         ->check(CLI::IsMember({"json", "csv"}))
                         ->capture_default_str());
    gm.add("output",
           app.add_option("--output", g.output, "Write to this file instead of standard output"));
    gm.add("seed", app.add_option("--seed", g.seed, "Seed for tail streams and random words")
                       ->capture_default_str());
    app.add_option("--config", g.config_path,
                   "JSON file supplying option defaults; flags override");

    auto* padic =
        app.add_subcommand("padic", "p-adic valuation, norm, distance and digit expansions");
    padic->require_subcommand(1);
    padic->fallthrough();
    OptMap pm;
    pm.add("p", padic->add_option("--p", padic_p, "Prime base")->capture_default_str());
    auto* pa_val = padic->add_subcommand("valuation", "Largest r with p^r dividing x");
    pa_val->fallthrough();
    pa_val->add_option("x", pa_x, "Integer or rational a/b")->required();
    auto* pa_norm = padic->add_subcommand("norm", "p-adic absolute value p^-v(x)");
    pa_norm->fallthrough();
    pa_norm->add_option("x", pa_x, "Integer or rational a/b")->required();
    auto* pa_dist = padic->add_subcommand("distance", "p-adic distance ||x - y||_p");
    pa_dist->fallthrough();
    pa_dist->add_option("x", pa_x, "Integer or rational a/b")->required();
    pa_dist->add_option("y", pa_y, "Integer or rational a/b")->required();
    auto* pa_digits = padic->add_subcommand("digits", "Base-p digits, least significant first");
    pa_digits->fallthrough();
    pa_digits->add_option("x", pa_x, "Nonnegative integer")->required();
    auto* pa_from = padic->add_subcommand("from-digits", "Integer with the given base-p digits");
    pa_from->fallthrough();
    pa_from->add_option("digits", fd_digits, "Digits, least significant first")->required();

    auto* dist = app.add_subcommand(
        "distance", "Tree distance between binary words, or p-adic distance with --padic");
    dist->fallthrough();
    OptMap dm;
    dist->add_option("x", d_x, "Binary word (rational with --padic)")->required();
    dist->add_option("y", d_y, "Binary word (rational with --padic)")->required();
    dm.add("padic", dist->add_flag("--padic", d_padic,
                                   "Treat arguments as rationals, use the p-adic metric"));
    dm.add("p", dist->add_option("--p", d_p, "Prime base for --padic")->capture_default_str());

    auto* timec = app.add_subcommand("time", "Ultrametric transition time between two words");
    timec->fallthrough();
    timec->add_option("x", t_x, "Binary word")->required();
    timec->add_option("y", t_y, "Binary word")->required();

    auto* shiftc = app.add_subcommand("shift", "Iterate the shift map, print the trajectory");
    shiftc->fallthrough();
    OptMap sm;
    sm.add("word", shiftc->add_option("--word", so.word, "Initial word, e.g. 0110"));
    sm.add("m", shiftc->add_option("--m", so.m_text, "Initial word as integer: value m/2^N"));
    sm.add("random", shiftc->add_flag("--random", so.random,
                                      "Draw the initial word from the tail stream (default)"));
    sm.add("N", shiftc->add_option("--N", so.length, "Word length")->capture_default_str());
    sm.add("n", shiftc->add_option("--n", so.steps, "Shift steps")->capture_default_str());
    add_tail_options(shiftc, so.tail, sm);

    auto* lyap = app.add_subcommand("lyapunov", "Lyapunov exponent estimators");
    lyap->fallthrough();
    OptMap lm;
    lm.add("method",
           lyap->add_option("--method", lo.method, "Estimator")
               ->check(CLI::IsMember(
                   {"symbolic", "euclidean-derivative", "euclidean-two-trajectory"}))
               ->capture_default_str());
    lm.add("N", lyap->add_option("--N", lo.length, "Word length for the symbolic method")
                    ->capture_default_str());
    lm.add("h", lyap->add_option("--h", lo.h, "Perturbation leads with 2^-h")
                    ->capture_default_str());
    lm.add("delta",
           lyap->add_option("--delta", lo.deltas,
                            "Extra offsets: epsilon = 2^-h (1 + sum 2^-delta_i)")
               ->delimiter(','));
    lm.add("x0", lyap->add_option("--x0", lo.x0, "Start point for Euclidean methods")
                     ->capture_default_str());
    lm.add("n", lyap->add_option("--n", lo.n_iter, "Iterations for Euclidean methods")
                    ->capture_default_str());

    auto* ent = app.add_subcommand("entropy", "Kolmogorov entropy at tree level n");
    ent->fallthrough();
    OptMap em;
    em.add("method", ent->add_option("--method", eo.method, "Estimator")
                         ->check(CLI::IsMember({"analytic", "empirical"}))
                         ->capture_default_str());
    em.add("n", ent->add_option("--n", eo.level, "Tree level")->capture_default_str());
    em.add("samples", ent->add_option("--samples", eo.samples, "Paths drawn by --method empirical")
                          ->capture_default_str());
    add_tail_options(ent, eo.tail, em);

    auto* treec = app.add_subcommand("tree", "Export the binary prefix tree as Graphviz text");
    treec->fallthrough();
    OptMap tm;
    treec->add_option("words", to.words, "Binary words sharing one length");
    tm.add("full", treec->add_option("--full", to.full, "All words of this length (1-16)"));

    auto* bakerc = app.add_subcommand(
        "baker", "Baker's map demo: bounded Euclidean distance vs doubling x-separation");
    bakerc->fallthrough();
    OptMap bm;
    bm.add("eps0", bakerc->add_option("--eps0", bo.eps0, "Initial x-separation")
                       ->capture_default_str());
    bm.add("n", bakerc->add_option("--n", bo.steps, "Iterations")->capture_default_str());
    bm.add("x0", bakerc->add_option("--x0", bo.x0, "Start x")->capture_default_str());
    bm.add("y0", bakerc->add_option("--y0", bo.y0, "Start y")->capture_default_str());

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }

    try {
        Json cfg = Json::object();
        if (!g.config_path.empty()) cfg = load_config(g.config_path);
        cfg_get(cfg, gm, "format", g.format);
        cfg_get(cfg, gm, "output", g.output);
        cfg_get(cfg, gm, "seed", g.seed);
        if (g.format != "json" && g.format != "csv") {
            throw UsageError("format must be json or csv, got " + g.format);
        }

        Output out;
        if (*padic) {
            cfg_get(cfg, pm, "p", padic_p);
            if (*pa_val) {
                out = run_padic_valuation(g, pa_x, padic_p);
            } else if (*pa_norm) {
                out = run_padic_norm(g, pa_x, padic_p);
            } else if (*pa_dist) {
                out = padic_distance_output(g, "padic distance", pa_x, pa_y, padic_p);
            } else if (*pa_digits) {
                out = run_padic_digits(g, pa_x, padic_p);
            } else {
                out = run_padic_from_digits(g, fd_digits, padic_p);
            }
        } else if (*dist) {
            cfg_get(cfg, dm, "padic", d_padic);
            cfg_get(cfg, dm, "p", d_p);
            out = d_padic ? padic_distance_output(g, "distance", d_x, d_y, d_p)
                          : run_tree_distance(g, d_x, d_y);
        } else if (*timec) {
            out = run_time(g, t_x, t_y);
        } else if (*shiftc) {
            cfg_get(cfg, sm, "word", so.word);
            cfg_get(cfg, sm, "m", so.m_text);
            cfg_get(cfg, sm, "random", so.random);
            cfg_get(cfg, sm, "N", so.length);
            cfg_get(cfg, sm, "n", so.steps);
            apply_tail_cfg(cfg, sm, so.tail);
            out = run_shift(g, so, sm);
        } else if (*lyap) {
            cfg_get(cfg, lm, "method", lo.method);
            cfg_get(cfg, lm, "N", lo.length);
            cfg_get(cfg, lm, "h", lo.h);
            cfg_get(cfg, lm, "delta", lo.deltas);
            cfg_get(cfg, lm, "x0", lo.x0);
            cfg_get(cfg, lm, "n", lo.n_iter);
            out = run_lyapunov(g, lo);
        } else if (*ent) {
            cfg_get(cfg, em, "method", eo.method);
            cfg_get(cfg, em, "n", eo.level);
            cfg_get(cfg, em, "samples", eo.samples);
            apply_tail_cfg(cfg, em, eo.tail);
            out = run_entropy(g, eo);
        } else if (*treec) {
            cfg_get(cfg, tm, "full", to.full);
            out = run_tree(to);
        } else {
            cfg_get(cfg, bm, "eps0", bo.eps0);
            cfg_get(cfg, bm, "n", bo.steps);
            cfg_get(cfg, bm, "x0", bo.x0);
            cfg_get(cfg, bm, "y0", bo.y0);
            out = run_baker(g, bo);
        }

        write_output(g, render(g, out));
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
