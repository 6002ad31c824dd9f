#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnw/bigint.hpp"
#include "pnw/word.hpp"

namespace pnw {

// Every "log n" inside a probabilistic formula (bias, density threshold, d0,
// powers of n) is the natural logarithm of the word length. Entropies are in bits.
inline double ln_length(double n) { return std::log(n); }

double binary_entropy(double p);

// 1 - (1/(2 ln 2)) * sum_{m=1}^{terms} (1-2p)^{2m} / (m(2m-1)); converges near p = 1/2.
double binary_entropy_series(double p, int terms = 20);

// exp(-2 x^2 / n_vars), clamped to 1.
double hoeffding_tail(std::uint64_t n_vars, double x);

enum class TailKind {
    Greater,  // P(X > d)
    AtLeast,  // P(X >= d)
};

/// Exact upper tails of Bin(k, 1/2): integer suffix sums of binomial
/// coefficients, divided by 2^k once in high precision.
class BinomialTails {
public:
    explicit BinomialTails(std::uint32_t k);

    [[nodiscard]] std::uint32_t trials() const noexcept { return k_; }
    // Number of outcomes with at least d successes.
    [[nodiscard]] BigInt count_at_least(std::int64_t d) const;
    [[nodiscard]] HighPrecision tail(std::int64_t d, TailKind kind) const;

private:
    std::uint32_t k_;
    std::vector<BigInt> suffix_;  // suffix_[i] = sum_{r >= i} C(k, r), size k+2
};

HighPrecision binomial_tail_exact(std::uint32_t k, std::int64_t d, TailKind kind);

struct StirlingBounds {
    double tight = 0;  // 2^{k H(l) - k} / sqrt(8 k l (1-l))
    double loose = 0;  // 2^{k H(l) - k} / sqrt(2 k)
};

// Lower bounds on P(Bin(k,1/2) >= lambda k) for 1/2 < lambda < 1 with lambda*k integral.
StirlingBounds stirling_tail_lower(std::uint32_t k, double lambda);
StirlingBounds stirling_tail_lower_at(std::uint32_t k, std::uint32_t successes);

double density_threshold(double n, double c, double k);

// Every k in [ceil(ln n), floor(sqrt n)] where the prefix of length k is
// below density_threshold(n, c, k).
std::vector<std::size_t> density_violations(const BinaryWord& w, double c);

// exp(-2^{3-t} d0 / 3)
double beta(int t, double d0);

struct TailAuditParams {
    std::size_t n = 0;
    double c = 0;
    double d0 = 0;  // c sqrt(ln n), kept real-valued
    int t0 = 0;     // smallest t with 4^t >= ln n
    int t1 = 0;     // largest t with 4^t <= sqrt n

    // Requires n >= 2 and c > 0.
    static TailAuditParams make(std::size_t n, double c);
};

// n^{-2c^2 (t - t0 + 1)/3} * beta_t^j / (1 - beta_t). Throws std::out_of_range
// for t outside [t0, t1].
double claim_rhs(const TailAuditParams& params, int t, std::uint64_t j);

BigInt binomial(std::uint32_t n, std::uint32_t k);
BigInt catalan_number(std::uint32_t t);

struct TailAuditRow {
    std::uint32_t k = 0;
    std::uint32_t successes = 0;  // lambda * k
    double lambda = 0;
    HighPrecision exact_tail;
    StirlingBounds stirling;
    double hoeffding = 0;  // exp(-2 (lambda k - k/2)^2 / k)

    [[nodiscard]] bool violates_stirling() const;
};

// Rows for every k in [k_lo, k_hi] and every integral lambda*k with 1/2 < lambda < 1;
// with `lambda` set, only the k where lambda*k is integral.
std::vector<TailAuditRow> tail_audit(std::uint32_t k_lo, std::uint32_t k_hi, std::optional<double> lambda = {});

inline constexpr const char* kTailAuditCsvHeader = "k,lambda,exact_tail,stirling_tight,stirling_loose,hoeffding";
std::string tail_audit_csv_row(const TailAuditRow& row);

}  // namespace pnw
