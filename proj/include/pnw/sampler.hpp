#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "pnw/word.hpp"

namespace pnw {

/// Parameters of the biased random word: positions k <= k0 are forced to 1,
/// later positions are 1 with probability 1/2 + c sqrt(ln n / k).
class ConstructionParams {
public:
    // Requires n >= 1 and c >= 0 (c = 0 gives the uniform word).
    ConstructionParams(std::size_t n, double c, std::uint64_t master_seed = 0);

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] double c() const noexcept { return c_; }
    [[nodiscard]] std::uint64_t master_seed() const noexcept { return seed_; }
    // floor(16 c^2 ln n)
    [[nodiscard]] std::size_t k0() const noexcept { return k0_; }
    // Every position forced to 1.
    [[nodiscard]] bool degenerate() const noexcept { return k0_ >= n_; }

private:
    std::size_t n_;
    double c_;
    std::uint64_t seed_;
    std::size_t k0_;
};

// Probability that letter k (1-based) is 1. Throws std::out_of_range unless 1 <= k <= n.
double bias(const ConstructionParams& params, std::size_t k);

// Deterministic in (master_seed, trial_index); see TrialRng for the derivation.
BinaryWord sample(const ConstructionParams& params, std::uint64_t trial_index);

struct WilsonInterval {
    double center = 0;
    double radius = 0;
    [[nodiscard]] double lower() const { return center - radius; }
    [[nodiscard]] double upper() const { return center + radius; }
    [[nodiscard]] bool contains(double p) const { return p >= lower() && p <= upper(); }
};

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;
inline constexpr double kZ999 = 3.2905267314919255;

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

struct ExperimentReport {
    ConstructionParams params;
    std::uint64_t trials = 0;  // 0 marks an entropy-only row
    std::uint64_t successes = 0;
    double rate = 0;
    double wilson_radius = 0;
    double entropy_bits = 0;

    [[nodiscard]] double deficit_bits() const { return static_cast<double>(params.n()) - entropy_bits; }
};

// Fraction of sampled words passing is_prefix_normal_reduced. Trials are
// spread over `threads` workers; the report does not depend on the count.
ExperimentReport pn_rate(const ConstructionParams& params, std::uint64_t trials, unsigned threads = 1);

// Entropy of the construction alone, no sampling.
ExperimentReport entropy_report(const ConstructionParams& params);

struct GapExpectation {
    double mu = 0;  // E(ones in w[1,k] - ones in w[j+1,j+k])
    std::size_t k = 0;
    // Expectation of the 2k-term Bernoulli sum before the -k offset.
    [[nodiscard]] double mu_star() const { return mu + static_cast<double>(k); }
};

// Exact sums of the biases. Throws std::out_of_range unless 1 <= k <= j <= n-k.
GapExpectation expected_gap(const ConstructionParams& params, std::size_t k, std::size_t j);

// sum over k > k0 of H_b(p_k), in bits.
double construction_entropy(const ConstructionParams& params);

// (H - n (1 - q) - 1) / q: lower bound on log2 of the number of prefix normal
// words when a word of entropy H is prefix normal with probability q.
double entropy_count_lower_bound(double entropy_bits, double success_prob, std::size_t n);

inline constexpr const char* kExperimentCsvHeader =
    "n,c,k0,trials,successes,rate,wilson95,entropy_bits,deficit_bits";
std::string experiment_csv_row(const ExperimentReport& report);

}  // namespace pnw
