#include "pnw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pnw/bounds.hpp"
#include "pnw/enumeration.hpp"
#include "pnw/format.hpp"
#include "pnw/rng.hpp"
#include "pnw/sampler.hpp"
#include "pnw/theorem2.hpp"

namespace pnw::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Format { Text, Json, Csv };

struct RunConfig {
    std::string subcommand;
    std::string format;
    std::string output;
    unsigned threads = 1;
    std::uint64_t seed = kDefaultSeed;

    std::string word;
    std::string input;
    std::string n;
    std::string log2n;
    std::string c;
    std::string k;
    std::optional<double> lambda;
    std::uint64_t trials = 200;
    std::uint64_t trial = 0;
    std::uint64_t count = 1;
    std::uint64_t samples = 1000;
    std::uint32_t t = 0;
    std::string blocks;
    std::string mode = "exhaustive";
    bool list = false;
    bool no_max_class = false;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

std::uint64_t parse_u64(const std::string& s) {
    std::size_t pos = 0;
    if (s.empty() || s[0] == '-') throw UsageError("expected a non-negative integer, got '" + s + "'");
    const auto v = std::stoull(s, &pos);
    if (pos != s.size()) throw UsageError("expected a non-negative integer, got '" + s + "'");
    return v;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("expected a number, got '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(v)) throw UsageError("expected a number, got '" + s + "'");
    return v;
}

template <class T, class Parse>
std::vector<T> parse_grid(const std::string& text, Parse parse) {
    std::vector<T> out;
    for (const auto& item : split(text, ',')) {
        const auto parts = split(item, ':');
        if (parts.empty()) throw UsageError("empty item in '" + text + "'");
        if (parts.size() == 1) {
            out.push_back(parse(parts[0]));
            continue;
        }
        if (parts.size() > 3) throw UsageError("bad range '" + item + "'");
        const T start = parse(parts[0]);
        const T end = parse(parts[1]);
        const T step = parts.size() == 3 ? parse(parts[2]) : T(1);
        if (start > end) throw UsageError("range '" + item + "' has start > end");
        if (!(step > T(0))) throw UsageError("range '" + item + "' needs a positive step");
        if constexpr (std::is_integral_v<T>) {
            for (T v = start; v <= end; v += step) {
                out.push_back(v);
                if (end - v < step) break;
            }
        } else {
            const auto steps = static_cast<std::uint64_t>(std::floor((end - start) / step + 1e-9));
            for (std::uint64_t i = 0; i <= steps; ++i) out.push_back(start + static_cast<T>(i) * step);
        }
    }
    return out;
}

Format resolve_format(const RunConfig& cfg, Format fallback) {
    if (cfg.format.empty()) return fallback;
    if (cfg.format == "text") return Format::Text;
    if (cfg.format == "json") return Format::Json;
    if (cfg.format == "csv") return Format::Csv;
    throw UsageError("unknown format '" + cfg.format + "'");
}

std::uint64_t single_integer(const std::string& text, const char* name) {
    if (text.empty()) throw UsageError(std::string("--") + name + " is required");
    const auto values = parse_integer_grid(text);
    if (values.size() != 1) throw UsageError(std::string("--") + name + " takes a single value here");
    return values.front();
}

double single_real(const std::string& text, const char* name) {
    if (text.empty()) throw UsageError(std::string("--") + name + " is required");
    const auto values = parse_real_grid(text);
    if (values.size() != 1) throw UsageError(std::string("--") + name + " takes a single value here");
    return values.front();
}

void require_at_most(std::uint64_t v, std::uint64_t limit, const char* what) {
    if (v > limit) throw UsageError(std::string(what) + " must be at most " + std::to_string(limit));
}

std::vector<BinaryWord> input_words(const RunConfig& cfg) {
    std::vector<BinaryWord> words;
    if (!cfg.word.empty() && !cfg.input.empty()) throw UsageError("give either --word or --input, not both");
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in) throw UsageError("cannot read " + cfg.input);
        std::string line;
        while (std::getline(in, line)) {
            while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
            if (!line.empty()) words.push_back(BinaryWord::parse(line));
        }
        return words;
    }
    if (cfg.word.empty()) throw UsageError("--word or --input is required");
    // "-" stands for the empty word.
    words.push_back(BinaryWord::parse(cfg.word == "-" ? "" : cfg.word));
    return words;
}

std::vector<std::size_t> length_grid(const RunConfig& cfg) {
    std::vector<std::size_t> ns;
    if (!cfg.n.empty() && !cfg.log2n.empty()) throw UsageError("give either --n or --log2n, not both");
    if (!cfg.log2n.empty()) {
        for (auto e : parse_integer_grid(cfg.log2n)) {
            require_at_most(e, 30, "--log2n");
            ns.push_back(std::size_t{1} << e);
        }
    } else if (!cfg.n.empty()) {
        for (auto v : parse_integer_grid(cfg.n)) ns.push_back(v);
    } else {
        throw UsageError("--n or --log2n is required");
    }
    return ns;
}

// Columns holding binary words or labels; everything else is numeric or boolean.
const std::array<std::string, 6> kTextColumns{"word", "pnf", "witness", "target", "mode", "blocks"};

// CSV rows mirrored as text (key=value) or JSON (array of objects, same field names).
void emit_rows(std::ostream& out, Format fmt, const std::string& header, const std::vector<std::string>& rows) {
    const auto names = split(header, ',');
    if (fmt == Format::Csv) {
        out << header << '\n';
        for (const auto& r : rows) out << r << '\n';
        return;
    }
    if (fmt == Format::Text) {
        for (const auto& r : rows) {
            const auto cells = split(r, ',');
            for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i] << '=' << cells[i];
            out << '\n';
        }
        return;
    }
    Json arr = Json::array();
    for (const auto& r : rows) {
        const auto cells = split(r, ',');
        Json obj = Json::object();
        for (std::size_t i = 0; i < names.size(); ++i) {
            const auto& cell = cells[i];
            const bool textual = std::find(kTextColumns.begin(), kTextColumns.end(), names[i]) != kTextColumns.end();
            if (textual) {
                obj[names[i]] = cell;
            } else if (cell.empty()) {
                obj[names[i]] = nullptr;
            } else if (cell == "true" || cell == "false") {
                obj[names[i]] = cell == "true";
            } else if (cell.find_first_not_of("0123456789") == std::string::npos) {
                // Counts beyond 64 bits stay exact as strings.
                if (cell.size() < 20) obj[names[i]] = std::stoull(cell);
                else obj[names[i]] = cell;
            } else {
                obj[names[i]] = parse_double(cell);
            }
        }
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, std::ostream& out) {
    const auto words = input_words(cfg);
    const Format fmt = resolve_format(cfg, Format::Text);
    const bool batch = !cfg.input.empty();
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& w : words) arr.push_back({{"word", w.str()}, {"prefix_normal", is_prefix_normal_definition(w)}});
        out << (batch ? arr : arr[0]).dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        out << "word,prefix_normal\n";
        for (const auto& w : words) out << w.str() << ',' << (is_prefix_normal_definition(w) ? "true" : "false") << '\n';
    } else {
        for (const auto& w : words) {
            if (batch) out << w.str() << ' ';
            out << "prefix-normal: " << (is_prefix_normal_definition(w) ? "true" : "false") << '\n';
        }
    }
    return kOk;
}

int cmd_normalize(const RunConfig& cfg, std::ostream& out) {
    const auto words = input_words(cfg);
    const Format fmt = resolve_format(cfg, Format::Text);
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& w : words) arr.push_back({{"word", w.str()}, {"pnf", prefix_normal_form(w).str()}});
        out << (cfg.input.empty() ? arr[0] : arr).dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        out << "word,pnf\n";
        for (const auto& w : words) out << w.str() << ',' << prefix_normal_form(w).str() << '\n';
    } else {
        for (const auto& w : words) out << prefix_normal_form(w).str() << '\n';
    }
    return kOk;
}

int cmd_profile(const RunConfig& cfg, std::ostream& out) {
    const auto words = input_words(cfg);
    const Format fmt = resolve_format(cfg, Format::Text);
    if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& w : words) {
            const auto f = profile(w);
            arr.push_back({{"word", w.str()}, {"profile", std::vector<std::uint32_t>(f.values().begin(), f.values().end())}});
        }
        out << (cfg.input.empty() ? arr[0] : arr).dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        out << "word,k,f\n";
        for (const auto& w : words) {
            const auto f = profile(w);
            for (std::size_t k = 0; k <= f.length(); ++k) out << w.str() << ',' << k << ',' << f[k] << '\n';
        }
    } else {
        for (const auto& w : words) out << profile(w).str() << '\n';
    }
    return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
    const auto ns = length_grid(cfg);
    const Format fmt = resolve_format(cfg, Format::Csv);
    for (auto n : ns) require_at_most(n, kCountPracticalLimit + 10, "--n");
    if (cfg.list) {
        if (ns.size() != 1) throw UsageError("--list takes a single --n");
        for (PrefixNormalCursor c(ns[0]); !c.done(); c.advance()) out << c.word().str() << '\n';
        return kOk;
    }
    std::vector<std::string> rows;
    for (auto n : ns) {
        EnumerationRow row;
        row.n = n;
        row.count_pn = count_prefix_normal(n, cfg.threads);
        if (!cfg.no_max_class && n <= kClassScanPracticalLimit) row.max_class = max_class_size(n, cfg.threads);
        rows.push_back(enumeration_csv_row(row));
    }
    emit_rows(out, fmt, kEnumerationCsvHeader, rows);
    return kOk;
}

int cmd_class_size(const RunConfig& cfg, std::ostream& out) {
    const auto words = input_words(cfg);
    const Format fmt = resolve_format(cfg, Format::Text);
    std::vector<std::string> rows;
    for (const auto& w : words) {
        require_at_most(w.size(), 32, "word length");
        if (!is_prefix_normal_definition(w)) throw UsageError("class-size expects a prefix normal word; got " + w.str());
        rows.push_back(w.str() + "," + class_size_pruned(w).str());
    }
    if (fmt == Format::Text) {
        for (const auto& r : rows) out << split(r, ',')[1] << '\n';
        return kOk;
    }
    emit_rows(out, fmt, "pnf,size", rows);
    return kOk;
}

int cmd_max_class(const RunConfig& cfg, std::ostream& out) {
    const auto ns = length_grid(cfg);
    const Format fmt = resolve_format(cfg, Format::Text);
    std::vector<std::string> rows;
    for (auto n : ns) {
        require_at_most(n, 32, "--n");
        const auto r = max_class_size(n, cfg.threads);
        rows.push_back(std::to_string(n) + "," + r.size.str() + "," + r.pnf.str());
    }
    emit_rows(out, fmt, "n,max_class,witness", rows);
    return kOk;
}

ConstructionParams single_params(const RunConfig& cfg) {
    const auto n = single_integer(cfg.n, "n");
    const double c = single_real(cfg.c, "c");
    if (n < 1) throw UsageError("--n must be at least 1");
    if (c < 0) throw UsageError("--c must be non-negative");
    return ConstructionParams(n, c, cfg.seed);
}

int cmd_sample(const RunConfig& cfg, std::ostream& out) {
    const auto params = single_params(cfg);
    const Format fmt = resolve_format(cfg, Format::Text);
    std::vector<std::string> rows;
    for (std::uint64_t i = 0; i < cfg.count; ++i) {
        const auto w = sample(params, cfg.trial + i);
        rows.push_back(std::to_string(cfg.trial + i) + "," + w.str() + "," +
                       (is_prefix_normal_reduced(w) ? "true" : "false"));
    }
    if (fmt == Format::Text) {
        for (const auto& r : rows) out << split(r, ',')[1] << '\n';
        return kOk;
    }
    emit_rows(out, fmt, "trial,word,prefix_normal", rows);
    return kOk;
}

int cmd_rate_or_entropy(const RunConfig& cfg, std::ostream& out, bool sampled) {
    const auto ns = length_grid(cfg);
    if (cfg.c.empty()) throw UsageError("--c is required");
    const auto cs = parse_real_grid(cfg.c);
    if (ns.empty() || cs.empty()) throw UsageError("empty parameter grid");
    const Format fmt = resolve_format(cfg, Format::Csv);
    std::vector<std::string> rows;
    for (auto n : ns) {
        if (n < 1) throw UsageError("--n must be at least 1");
        if (sampled) require_at_most(n, std::size_t{1} << 16, "--n for rate");
        for (double c : cs) {
            if (c < 0) throw UsageError("--c must be non-negative");
            const ConstructionParams params(n, c, cfg.seed);
            rows.push_back(experiment_csv_row(sampled ? pn_rate(params, cfg.trials, cfg.threads) : entropy_report(params)));
        }
    }
    emit_rows(out, fmt, kExperimentCsvHeader, rows);
    return kOk;
}

std::vector<BinaryWord> parse_blocks(const std::string& text) {
    std::vector<BinaryWord> blocks;
    if (text.empty() || text == "-") return blocks;
    for (const auto& b : split(text, ',')) blocks.push_back(BinaryWord::parse(b));
    return blocks;
}

std::uint32_t block_length(const RunConfig& cfg, std::size_t n) {
    if (cfg.t > 0) return cfg.t;
    const auto t = suggested_block_length(n);
    if (!t) throw UsageError("no valid block length for n=" + std::to_string(n) + "; pass --t");
    return *t;
}

int cmd_construct_t2(const RunConfig& cfg, std::ostream& out) {
    const auto n = single_integer(cfg.n, "n");
    const auto t = block_length(cfg, n);
    const auto m = block_count(n, t);
    CatalanBlockSpec spec{n, t, parse_blocks(cfg.blocks)};
    if (cfg.blocks.empty() && m > 0) {
        if (t > kSampledBlockCap) throw UsageError("random blocks need t <= " + std::to_string(kSampledBlockCap));
        const auto table = catalan_sequences(t);
        TrialRng rng(cfg.seed, cfg.trial);
        for (std::size_t i = 0; i < m; ++i) spec.blocks.push_back(table[rng.below(table.size())]);
    }
    const auto w = build_word(spec);
    const auto pnf = prefix_normal_form(w);
    const auto target = target_pnf(n, t);
    const Format fmt = resolve_format(cfg, Format::Text);
    if (fmt == Format::Json) {
        Json blocks = Json::array();
        for (const auto& b : spec.blocks) blocks.push_back(b.str());
        Json j{{"n", n}, {"t", t}, {"blocks", blocks}, {"word", w.str()}, {"pnf", pnf.str()}, {"target", target.str()}};
        out << j.dump(2) << '\n';
    } else if (fmt == Format::Csv) {
        out << "n,t,word,pnf,target\n" << n << ',' << t << ',' << w.str() << ',' << pnf.str() << ',' << target.str() << '\n';
    } else {
        out << "word:   " << w.str() << "\npnf:    " << pnf.str() << "\ntarget: " << target.str() << '\n';
    }
    return pnf == target ? kOk : kViolations;
}

int cmd_verify_t2(const RunConfig& cfg, std::ostream& out) {
    const auto n = single_integer(cfg.n, "n");
    const auto t = block_length(cfg, n);
    VerificationMode mode;
    if (cfg.mode == "exhaustive") mode = VerificationMode::Exhaustive;
    else if (cfg.mode == "sampled") mode = VerificationMode::Sampled;
    else throw UsageError("--mode must be exhaustive or sampled");
    const auto r = verify_construction(n, t, mode, cfg.samples, cfg.seed, cfg.threads);
    const Format fmt = resolve_format(cfg, Format::Json);
    if (fmt == Format::Json) {
        Json j{{"n", r.n},
               {"t", r.t},
               {"mode", to_string(r.mode)},
               {"checked", r.checked},
               {"failures", r.failures},
               {"class_size_log2_bound", r.class_size_log2_bound}};
        out << j.dump(2) << '\n';
    } else {
        const std::string row = std::to_string(r.n) + "," + std::to_string(r.t) + "," + to_string(r.mode) + "," +
                                std::to_string(r.checked) + "," + std::to_string(r.failures) + "," +
                                format_real(r.class_size_log2_bound);
        emit_rows(out, fmt, "n,t,mode,checked,failures,class_size_log2_bound", {row});
    }
    return r.failures == 0 ? kOk : kViolations;
}

int cmd_bounds_audit(const RunConfig& cfg, std::ostream& out) {
    if (cfg.k.empty()) throw UsageError("--k is required");
    const auto ks = parse_integer_grid(cfg.k);
    if (ks.empty()) throw UsageError("empty parameter grid");
    if (cfg.lambda && !(*cfg.lambda > 0.5 && *cfg.lambda < 1.0)) throw UsageError("--lambda must lie in (0.5, 1)");
    std::vector<std::string> rows;
    std::uint64_t stirling_bad = 0;
    std::uint64_t hoeffding_bad = 0;
    for (auto k : ks) {
        require_at_most(k, 100000, "--k");
        if (k == 0) throw UsageError("--k must be positive");
        for (const auto& row : tail_audit(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k), cfg.lambda)) {
            if (row.violates_stirling()) ++stirling_bad;
            if (row.exact_tail > HighPrecision(row.hoeffding)) ++hoeffding_bad;
            rows.push_back(tail_audit_csv_row(row));
        }
    }
    const Format fmt = resolve_format(cfg, Format::Csv);
    if (fmt == Format::Text) {
        out << "rows=" << rows.size() << " stirling_violations=" << stirling_bad
            << " hoeffding_violations=" << hoeffding_bad << '\n';
    } else {
        emit_rows(out, fmt, kTailAuditCsvHeader, rows);
    }
    return stirling_bad == 0 && hoeffding_bad == 0 ? kOk : kViolations;
}

struct Command {
    const char* name;
    const char* help;
    int (*handler)(const RunConfig&, std::ostream&);
};

int rate_handler(const RunConfig& cfg, std::ostream& out) { return cmd_rate_or_entropy(cfg, out, true); }
int entropy_handler(const RunConfig& cfg, std::ostream& out) { return cmd_rate_or_entropy(cfg, out, false); }

const Command kCommands[] = {
    {"check", "word_core::is_prefix_normal_definition: every prefix holds at least as many ones as any window of the same length",
     cmd_check},
    {"normalize", "word_core::prefix_normal_form: the word whose length-k prefix has f(k) ones", cmd_normalize},
    {"profile", "word_core::profile: f(k) = maximum ones over length-k windows, k = 0..n", cmd_profile},
    {"enumerate", "enumeration::count_prefix_normal and max_class_size: exact counts by pruned depth-first search",
     cmd_enumerate},
    {"class-size", "enumeration::class_size: number of words sharing the given prefix normal form", cmd_class_size},
    {"max-class", "enumeration::max_class_size: largest equivalence class of length n (smallest witness on ties)",
     cmd_max_class},
    {"sample", "sampler::sample: biased word with p_k = 1 for k <= k0, 1/2 + c sqrt(ln n / k) afterwards", cmd_sample},
    {"rate", "sampler::pn_rate: fraction of biased samples that are prefix normal, with Wilson 95% radius",
     rate_handler},
    {"entropy", "sampler::construction_entropy: entropy of the biased construction and its deficit n - H",
     entropy_handler},
    {"construct-t2", "theorem2::build_word: (10)^t 1^(2t) followed by Catalan blocks of length 2t", cmd_construct_t2},
    {"verify-t2", "theorem2::verify_construction: every block word normalizes to 1^(2t)(01)^((n-2t)/2)",
     cmd_verify_t2},
    {"bounds-audit", "bounds::binomial_tail_exact vs stirling_tail_lower and hoeffding_tail for Bin(k, 1/2)",
     cmd_bounds_audit},
};

void add_options(CLI::App& sub, RunConfig& cfg, const std::string& name) {
    sub.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub.add_option("--output,-o", cfg.output, "Write the report to this file instead of stdout");
    sub.add_option("--threads", cfg.threads, "Worker threads (affects wall time only)")->check(CLI::Range(1u, 256u));
    sub.add_option("--seed", cfg.seed, "Master seed")->envname("PNW_SEED");

    if (name == "check" || name == "normalize" || name == "profile" || name == "class-size") {
        sub.add_option("--word,-w", cfg.word, "Binary word over {0,1}");
        sub.add_option("--input,-i", cfg.input, "File with one word per line");
    }
    if (name == "enumerate" || name == "max-class" || name == "sample" || name == "rate" || name == "entropy" ||
        name == "construct-t2" || name == "verify-t2")
        sub.add_option("--n", cfg.n, "Word length; a list or range a:b[:step] where sweeps are allowed");
    if (name == "rate" || name == "entropy") sub.add_option("--log2n", cfg.log2n, "Exponents e for n = 2^e, e.g. 10:20");
    if (name == "sample" || name == "rate" || name == "entropy")
        sub.add_option("--c", cfg.c, "Bias constant c; list or range for sweeps");
    if (name == "rate") sub.add_option("--trials", cfg.trials, "Samples per grid point")->check(CLI::Range(1ull, 100000000ull));
    if (name == "sample" || name == "construct-t2") sub.add_option("--trial", cfg.trial, "Trial index");
    if (name == "sample") sub.add_option("--count", cfg.count, "Number of consecutive trials")->check(CLI::Range(1ull, 1000000ull));
    if (name == "enumerate") {
        sub.add_flag("--list", cfg.list, "Print every prefix normal word of length n");
        sub.add_flag("--no-max-class", cfg.no_max_class, "Skip the 2^n class census");
    }
    if (name == "construct-t2" || name == "verify-t2")
        sub.add_option("--t", cfg.t, "Block half-length t (default: largest t <= sqrt(n ln n) with 2t | n)");
    if (name == "construct-t2") sub.add_option("--blocks", cfg.blocks, "Comma-separated Catalan blocks (random if omitted)");
    if (name == "verify-t2") {
        sub.add_option("--mode", cfg.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
        sub.add_option("--samples", cfg.samples, "Block tuples to draw in sampled mode");
    }
    if (name == "bounds-audit") {
        sub.add_option("--k", cfg.k, "Trial counts k; list or range, e.g. 10:200");
        sub.add_option("--lambda", cfg.lambda, "Restrict to one lambda in (0.5, 1)");
    }
}

}  // namespace

std::vector<std::uint64_t> parse_integer_grid(const std::string& text) {
    return parse_grid<std::uint64_t>(text, parse_u64);
}

std::vector<double> parse_real_grid(const std::string& text) { return parse_grid<double>(text, parse_double); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Prefix normal words toolkit", "pnw"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& c : kCommands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        add_options(*sub, cfg, c.name);
        subs.emplace_back(sub, &c);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "pnw: error: " << e.what() << '\n';
        return kUsage;
    }

    const Command* chosen = nullptr;
    for (auto& [sub, cmd] : subs)
        if (sub->parsed()) chosen = cmd;

    try {
        std::ostringstream body;
        const int status = chosen->handler(cfg, body);
        if (cfg.output.empty()) {
            out << body.str();
        } else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file) throw UsageError("cannot write " + cfg.output);
            file << body.str();
        }
        return status;
    } catch (const std::exception& e) {
        err << "pnw: error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace pnw::cli
