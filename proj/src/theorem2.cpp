#include "pnw/theorem2.hpp"

#include <cmath>
#include <stdexcept>

#include "pnw/bounds.hpp"
#include "pnw/parallel.hpp"
#include "pnw/rng.hpp"

namespace pnw {

bool is_catalan_sequence(const BinaryWord& b, std::uint32_t t) {
    if (b.size() != 2ull * t) return false;
    for (std::size_t i = 1; i <= b.size(); ++i)
        if (2ull * b.prefix_ones(i) > i) return false;
    return b.total_ones() == t;
}

void for_each_catalan_sequence(std::uint32_t t, const std::function<void(const BinaryWord&)>& fn) {
    const std::size_t len = 2ull * t;
    std::vector<std::uint8_t> bits(len, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t ones) -> void {
        if (i == len) {
            fn(BinaryWord(bits));
            return;
        }
        const std::size_t zeros = i - ones;
        if (zeros < t) {
            bits[i] = 0;
            self(self, i + 1, ones);
        }
        if (ones < t && 2ull * (ones + 1) <= i + 1) {
            bits[i] = 1;
            self(self, i + 1, ones + 1);
        }
    };
    rec(rec, 0, 0);
}

std::vector<BinaryWord> catalan_sequences(std::uint32_t t) {
    std::vector<BinaryWord> out;
    for_each_catalan_sequence(t, [&](const BinaryWord& b) { out.push_back(b); });
    return out;
}

std::size_t block_count(std::size_t n, std::uint32_t t) {
    if (t == 0) throw std::invalid_argument("block length t must be positive");
    if (n % (2ull * t) != 0) throw std::invalid_argument("n must be a multiple of 2t");
    if (n < 4ull * t) throw std::invalid_argument("n must be at least 4t");
    return (n - 4ull * t) / (2ull * t);
}

void CatalanBlockSpec::validate() const {
    const std::size_t m = block_count(n, t);
    if (blocks.size() != m)
        throw std::invalid_argument("expected " + std::to_string(m) + " blocks, got " + std::to_string(blocks.size()));
    for (const auto& b : blocks)
        if (!is_catalan_sequence(b, t)) throw std::invalid_argument("block " + b.str() + " is not a Catalan sequence");
}

BinaryWord build_word(const CatalanBlockSpec& spec) {
    spec.validate();
    std::vector<std::uint8_t> bits;
    bits.reserve(spec.n);
    for (std::uint32_t i = 0; i < spec.t; ++i) {
        bits.push_back(1);
        bits.push_back(0);
    }
    bits.insert(bits.end(), 2ull * spec.t, 1);
    for (const auto& b : spec.blocks)
        for (std::size_t i = 0; i < b.size(); ++i) bits.push_back(b.bit(i));
    return BinaryWord(bits);
}

BinaryWord target_pnf(std::size_t n, std::uint32_t t) {
    if (n % 2 != 0) throw std::invalid_argument("target_pnf: n must be even");
    if (n < 2ull * t) throw std::invalid_argument("target_pnf: n must be at least 2t");
    std::vector<std::uint8_t> bits(n, 0);
    for (std::size_t i = 0; i < 2ull * t; ++i) bits[i] = 1;
    for (std::size_t i = 2ull * t; i < n; i += 2) bits[i + 1] = 1;
    return BinaryWord(bits);
}

std::string to_string(VerificationMode mode) { return mode == VerificationMode::Exhaustive ? "exhaustive" : "sampled"; }

namespace {

BinaryWord assemble(std::size_t n, std::uint32_t t, const std::vector<BinaryWord>& table,
                    const std::vector<std::size_t>& choice) {
    CatalanBlockSpec spec{n, t, {}};
    spec.blocks.reserve(choice.size());
    for (auto idx : choice) spec.blocks.push_back(table[idx]);
    return build_word(spec);
}

}  // namespace

VerificationReport verify_construction(std::size_t n, std::uint32_t t, VerificationMode mode, std::uint64_t samples,
                                       std::uint64_t seed, unsigned threads) {
    const std::size_t m = block_count(n, t);
    const BinaryWord target = target_pnf(n, t);
    const auto bound = class_size_log2_lower_bound(n, t);

    VerificationReport report;
    report.n = n;
    report.t = t;
    report.mode = mode;
    report.class_size_log2_bound = bound.log2;

    if (mode == VerificationMode::Exhaustive) {
        if (!bound.exact || *bound.exact > kExhaustiveCap)
            throw std::invalid_argument("exhaustive verification needs more than " + std::to_string(kExhaustiveCap) +
                                        " words; use sampled mode");
        const auto total = bound.exact->convert_to<std::uint64_t>();
        const auto table = catalan_sequences(t);
        const std::uint64_t radix = table.size();
        std::vector<std::uint8_t> failed(total, 0);
        parallel_for(total, threads, [&](std::size_t index) {
            std::vector<std::size_t> choice(m);
            std::uint64_t rest = index;
            for (std::size_t b = m; b-- > 0;) {
                choice[b] = rest % radix;
                rest /= radix;
            }
            failed[index] = prefix_normal_form(assemble(n, t, table, choice)) == target ? 0 : 1;
        });
        report.checked = total;
        for (auto f : failed) report.failures += f;
        return report;
    }

    if (t > kSampledBlockCap)
        throw std::invalid_argument("sampled verification supports t <= " + std::to_string(kSampledBlockCap));
    const auto table = catalan_sequences(t);
    std::vector<std::uint8_t> failed(samples, 0);
    parallel_for(samples, threads, [&](std::size_t s) {
        TrialRng rng(seed, s);
        std::vector<std::size_t> choice(m);
        for (auto& c : choice) c = rng.below(table.size());
        failed[s] = prefix_normal_form(assemble(n, t, table, choice)) == target ? 0 : 1;
    });
    report.checked = samples;
    for (auto f : failed) report.failures += f;
    return report;
}

ClassSizeBound class_size_log2_lower_bound(std::size_t n, std::uint32_t t) {
    const std::size_t m = block_count(n, t);
    const BigInt catalan = catalan_number(t);
    ClassSizeBound out;
    out.log2 = static_cast<double>(m) * log2_big(catalan);
    if (out.log2 <= kExactBoundBits) out.exact = boost::multiprecision::pow(catalan, static_cast<unsigned>(m));
    return out;
}

std::optional<std::uint32_t> suggested_block_length(std::size_t n) {
    if (n < 4) return std::nullopt;
    const double nd = static_cast<double>(n);
    auto t = static_cast<std::size_t>(std::floor(std::sqrt(nd * ln_length(nd))));
    t = std::min(t, n / 4);
    for (; t >= 1; --t)
        if (n % (2 * t) == 0) return static_cast<std::uint32_t>(t);
    return std::nullopt;
}

}  // namespace pnw
