#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pnw/bigint.hpp"
#include "pnw/word.hpp"

namespace pnw {

// Largest exhaustive verification accepted (number of block tuples).
inline constexpr std::uint64_t kExhaustiveCap = 1'000'000;
// Sampled verification materializes all Catalan sequences, so t is capped.
inline constexpr std::uint32_t kSampledBlockCap = 12;

// Length 2t, exactly t ones, and no prefix with more ones than zeros.
bool is_catalan_sequence(const BinaryWord& b, std::uint32_t t);

// Lexicographic order; C_t words.
void for_each_catalan_sequence(std::uint32_t t, const std::function<void(const BinaryWord&)>& fn);
std::vector<BinaryWord> catalan_sequences(std::uint32_t t);

/// A word (10)^t 1^{2t} c_1 ... c_m with m = (n - 4t) / (2t) Catalan blocks.
struct CatalanBlockSpec {
    std::size_t n = 0;
    std::uint32_t t = 0;
    std::vector<BinaryWord> blocks;

    // Throws std::invalid_argument when n, t or a block is inconsistent.
    void validate() const;
};

// Number of Catalan blocks for (n, t); throws unless t >= 1, 2t | n and n >= 4t.
std::size_t block_count(std::size_t n, std::uint32_t t);

BinaryWord build_word(const CatalanBlockSpec& spec);

// 1^{2t} (01)^{(n-2t)/2}; throws unless n >= 2t and n is even.
BinaryWord target_pnf(std::size_t n, std::uint32_t t);

enum class VerificationMode { Exhaustive, Sampled };
std::string to_string(VerificationMode mode);

struct VerificationReport {
    std::size_t n = 0;
    std::uint32_t t = 0;
    VerificationMode mode = VerificationMode::Exhaustive;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    double class_size_log2_bound = 0;
};

// Exhaustive: every block tuple (error if C_t^m > kExhaustiveCap).
// Sampled: `samples` tuples, block i of sample s drawn uniformly via TrialRng(seed, s).
VerificationReport verify_construction(std::size_t n, std::uint32_t t, VerificationMode mode,
                                       std::uint64_t samples = 0, std::uint64_t seed = 0, unsigned threads = 1);

struct ClassSizeBound {
    double log2 = 0;             // m * log2(C_t)
    std::optional<BigInt> exact;  // C_t^m, present when it fits in kExactBoundBits bits
};
inline constexpr double kExactBoundBits = 1u << 16;

ClassSizeBound class_size_log2_lower_bound(std::size_t n, std::uint32_t t);

// Largest t <= sqrt(n ln n) with 2t | n and 4t <= n; nullopt when none exists.
std::optional<std::uint32_t> suggested_block_length(std::size_t n);

}  // namespace pnw
