#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pnw/bounds.hpp"
#include "pnw/sampler.hpp"
#include "pnw/theorem2.hpp"

using doctest::Approx;
using pnw::BigInt;
using pnw::BinaryWord;
using pnw::HighPrecision;
using pnw::TailKind;

namespace {

// Test-only oracle: count outcomes of k fair coins with at least d heads by
// enumerating all 2^k outcomes.
std::uint64_t brute_at_least(unsigned k, int d) {
    std::uint64_t count = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v)
        if (std::popcount(v) >= d) ++count;
    return count;
}

// Pascal's triangle row in doubles-free integers (k <= 60).
std::vector<std::uint64_t> pascal_row(unsigned k) {
    std::vector<std::uint64_t> row{1};
    for (unsigned i = 0; i < k; ++i) {
        std::vector<std::uint64_t> next(row.size() + 1, 0);
        for (std::size_t r = 0; r < row.size(); ++r) {
            next[r] += row[r];
            next[r + 1] += row[r];
        }
        row = std::move(next);
    }
    return row;
}

}  // namespace

TEST_CASE("binary entropy values") {
    CHECK(pnw::binary_entropy(0.5) == 1.0);
    CHECK(pnw::binary_entropy(0.0) == 0.0);
    CHECK(pnw::binary_entropy(1.0) == 0.0);
    CHECK(pnw::binary_entropy(0.25) == Approx(0.8112781244591328).epsilon(1e-14));
    CHECK(pnw::binary_entropy(0.45) == Approx(0.9927744539878083).epsilon(1e-14));
    CHECK(pnw::binary_entropy_series(0.45) == Approx(0.9927744539878083).epsilon(1e-13));
    CHECK_THROWS_AS(pnw::binary_entropy(-0.01), std::domain_error);
    CHECK_THROWS_AS(pnw::binary_entropy(1.01), std::domain_error);
    CHECK_THROWS_AS(pnw::binary_entropy(std::nan("")), std::domain_error);
}

TEST_CASE("binary entropy series, symmetry and maximum") {
    for (int i = -100; i <= 100; ++i) {
        const double p = 0.5 + i * 0.001;
        REQUIRE(std::abs(pnw::binary_entropy(p) - pnw::binary_entropy_series(p)) <= 1e-12);
    }
    for (int i = 0; i <= 1000; ++i) {
        const double p = i / 1000.0;
        REQUIRE(std::abs(pnw::binary_entropy(p) - pnw::binary_entropy(1.0 - p)) <= 1e-15);
        REQUIRE(pnw::binary_entropy(p) <= 1.0);
    }
}

TEST_CASE("hoeffding tail") {
    CHECK(pnw::hoeffding_tail(7, 0.0) == 1.0);
    CHECK(pnw::hoeffding_tail(100, 10.0) == Approx(0.1353352832366127).epsilon(1e-14));
    CHECK_THROWS_AS(pnw::hoeffding_tail(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pnw::hoeffding_tail(3, -1.0), std::invalid_argument);

    const pnw::ConstructionParams params(1000, 1.5);
    const auto gap = pnw::expected_gap(params, 300, 300);
    CHECK(pnw::hoeffding_tail(600, gap.mu) == Approx(std::exp(-gap.mu * gap.mu / 300.0)).epsilon(1e-13));
}

TEST_CASE("exact binomial tails") {
    CHECK(pnw::binomial_tail_exact(4, 2, TailKind::Greater) == HighPrecision(5) / 16);
    CHECK(pnw::binomial_tail_exact(10, 7, TailKind::AtLeast) == HighPrecision(176) / 1024);
    for (unsigned k : {0u, 1u, 9u, 40u}) {
        CHECK(pnw::binomial_tail_exact(k, -1, TailKind::Greater) == 1);
        CHECK(pnw::binomial_tail_exact(k, -1, TailKind::AtLeast) == 1);
        CHECK(pnw::binomial_tail_exact(k, k, TailKind::Greater) == 0);
        CHECK(pnw::binomial_tail_exact(k, k + 1, TailKind::AtLeast) == 0);
    }
    for (unsigned k = 0; k <= 16; ++k)
        for (int d = -1; d <= static_cast<int>(k) + 1; ++d) {
            const HighPrecision want = HighPrecision(brute_at_least(k, d)) / HighPrecision(std::uint64_t{1} << k);
            REQUIRE(pnw::binomial_tail_exact(k, d, TailKind::AtLeast) == want);
            const HighPrecision want_gt = HighPrecision(brute_at_least(k, d + 1)) / HighPrecision(std::uint64_t{1} << k);
            REQUIRE(pnw::binomial_tail_exact(k, d, TailKind::Greater) == want_gt);
        }
    const auto row = pascal_row(60);
    const pnw::BinomialTails tails(60);
    std::uint64_t acc = 0;
    for (int d = 60; d >= 0; --d) {
        acc += row[static_cast<std::size_t>(d)];
        REQUIRE(tails.count_at_least(d) == acc);
    }
}

TEST_CASE("stirling lower bounds") {
    const auto s = pnw::stirling_tail_lower(10, 0.7);
    CHECK(s.tight == Approx(0.10715078528459329).epsilon(1e-12));
    CHECK(s.loose == Approx(0.09820531686812181).epsilon(1e-12));
    CHECK(HighPrecision(s.tight) <= pnw::binomial_tail_exact(10, 7, TailKind::AtLeast));

    const auto t = pnw::stirling_tail_lower(100, 0.55);
    const auto exact = pnw::binomial_tail_exact(100, 55, TailKind::AtLeast);
    CHECK(HighPrecision(t.tight) <= exact);
    CHECK(HighPrecision(t.loose) <= exact);

    CHECK_THROWS_AS(pnw::stirling_tail_lower(10, 0.75), std::invalid_argument);  // 7.5 not integral
    CHECK_THROWS_AS(pnw::stirling_tail_lower(10, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(pnw::stirling_tail_lower(10, 1.0), std::invalid_argument);

    for (unsigned k = 10; k <= 120; ++k) {
        const pnw::BinomialTails tails(k);
        for (unsigned m = k / 2 + 1; m < k; ++m) {
            const auto b = pnw::stirling_tail_lower_at(k, m);
            REQUIRE(b.tight >= b.loose);
            REQUIRE(HighPrecision(b.tight) <= tails.tail(m, TailKind::AtLeast));
        }
    }
}

TEST_CASE("hoeffding dominates the exact binomial tail") {
    for (unsigned k = 1; k <= 60; ++k) {
        const pnw::BinomialTails tails(k);
        for (unsigned twice_x = 0; twice_x <= 2 * k; ++twice_x) {
            const double x = twice_x / 2.0;
            // P(X >= k/2 + x), threshold ceil((k + 2x)/2)
            const std::int64_t d = (static_cast<std::int64_t>(k) + twice_x + 1) / 2;
            REQUIRE(tails.tail(d, TailKind::AtLeast) <= HighPrecision(pnw::hoeffding_tail(k, x)));
        }
    }
}

TEST_CASE("density threshold") {
    CHECK(pnw::density_threshold(500, 0.0, 17) == 8.5);
    CHECK(pnw::density_threshold(256, 0.2, 16) == Approx(9.883856036024760).epsilon(1e-13));
    CHECK(pnw::density_threshold(std::exp(4.0), 1.0, 4) == Approx(6.0).epsilon(1e-14));
}

TEST_CASE("density violations") {
    for (std::size_t n = 1; n <= 2000; n += 37) {
        const auto ones = BinaryWord::repeat("1", n);
        CHECK(pnw::density_violations(ones, 0.5).empty());
        CHECK(pnw::density_violations(ones, 0.2).empty());
    }
    // c = 1 already fails for the all-ones word: k=5 < 2.5 + sqrt(5 ln 100).
    const auto v1 = pnw::density_violations(BinaryWord::repeat("1", 100), 1.0);
    CHECK(std::find(v1.begin(), v1.end(), 5u) != v1.end());

    CHECK(pnw::density_violations(BinaryWord::repeat("0", 100), 0.1) == std::vector<std::size_t>{5, 6, 7, 8, 9, 10});
    CHECK(pnw::density_violations(BinaryWord{}, 1.0).empty());

    const pnw::ConstructionParams params(10000, 2.0, 7);
    std::uint64_t trial = 0;
    BinaryWord word = pnw::sample(params, trial);
    while (!pnw::is_prefix_normal_reduced(word)) word = pnw::sample(params, ++trial);
    CHECK(pnw::density_violations(word, 0.5).empty());
}

TEST_CASE("beta") {
    CHECK(pnw::beta(3, 3.0) == Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(pnw::beta(3, 3.0) == Approx(0.36787944117144233).epsilon(1e-15));
    CHECK(pnw::beta(1, 3.0) == Approx(0.018315638888734179).epsilon(1e-14));
    for (double d0 : {0.1, 1.0, 2.5, 7.0})
        for (int t = -3; t <= 20; ++t) {
            const double b = pnw::beta(t, d0);
            const double b1 = pnw::beta(t + 1, d0);
            REQUIRE(b > 0.0);
            REQUIRE(b < 1.0);
            REQUIRE(std::abs(b1 * b1 - b) <= 1e-12 * b);
        }
}

TEST_CASE("tail audit parameters") {
    for (std::size_t n : {2u, 3u, 10u, 16u, 17u, 255u, 256u, 4096u, 65535u, 65536u, 1000000u}) {
        const auto p = pnw::TailAuditParams::make(n, 0.7);
        const double ln_n = std::log(static_cast<double>(n));
        CAPTURE(n);
        CHECK(std::pow(4.0, p.t0 - 1) < ln_n);
        CHECK(ln_n <= std::pow(4.0, p.t0));
        CHECK(std::pow(4.0, p.t1) <= std::sqrt(static_cast<double>(n)));
        CHECK(std::sqrt(static_cast<double>(n)) < std::pow(4.0, p.t1 + 1));
        CHECK(p.d0 == Approx(0.7 * std::sqrt(ln_n)));
        CHECK(p.d0 > 0);
    }
    CHECK_THROWS_AS(pnw::TailAuditParams::make(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(pnw::TailAuditParams::make(100, 0.0), std::invalid_argument);
}

TEST_CASE("claim right-hand side") {
    const auto p = pnw::TailAuditParams::make(4096, 1.5);
    REQUIRE(p.t0 == 2);
    REQUIRE(p.t1 == 3);
    const double ln_n = std::log(4096.0);

    const double b0 = std::exp(-std::pow(2.0, 3 - p.t0) * p.d0 / 3.0);
    CHECK(pnw::claim_rhs(p, p.t0, 0) == Approx(std::pow(4096.0, -2.0 * 2.25 / 3.0) / (1.0 - b0)).epsilon(1e-12));

    const int t = p.t0 + 1;
    const double factor_n = std::exp(-2.0 * 2.25 * 2.0 / 3.0 * ln_n);
    const double b = std::exp(-std::pow(2.0, 3 - t) * 1.5 * std::sqrt(ln_n) / 3.0);
    CHECK(pnw::claim_rhs(p, t, 2) == Approx(factor_n * b * b / (1.0 - b)).epsilon(1e-12));

    for (std::uint64_t j = 0; j < 20; ++j) CHECK(pnw::claim_rhs(p, t, j + 1) < pnw::claim_rhs(p, t, j));
    CHECK_THROWS_AS(pnw::claim_rhs(p, p.t0 - 1, 0), std::out_of_range);
    CHECK_THROWS_AS(pnw::claim_rhs(p, p.t1 + 1, 0), std::out_of_range);
}

TEST_CASE("catalan numbers") {
    CHECK(pnw::catalan_number(0) == 1);
    CHECK(pnw::catalan_number(1) == 1);
    CHECK(pnw::catalan_number(3) == 5);
    CHECK(pnw::catalan_number(10) == 16796);
    CHECK(pnw::catalan_number(30) == BigInt("3814986502092304"));
    for (std::uint32_t t = 0; t <= 10; ++t) CHECK(BigInt(pnw::catalan_sequences(t).size()) == pnw::catalan_number(t));
    CHECK(pnw::binomial(6, 3) == 20);
    CHECK(pnw::binomial(3, 6) == 0);
}

TEST_CASE("tail audit rows") {
    const auto rows = pnw::tail_audit(10, 12);
    // m in (k/2, k): 4 + 5 + 5 rows
    CHECK(rows.size() == 14);
    for (const auto& r : rows) CHECK_FALSE(r.violates_stirling());
    CHECK(pnw::tail_audit_csv_row(rows.front()).rfind("10,0.6,", 0) == 0);

    const auto only = pnw::tail_audit(10, 20, 0.75);
    for (const auto& r : only) CHECK(r.k % 4 == 0);
    CHECK(only.size() == 3);  // k = 12, 16, 20
}

TEST_CASE("log2 of big integers") {
    CHECK(pnw::log2_big(BigInt(1)) == 0.0);
    CHECK(pnw::log2_big(BigInt(1024)) == 10.0);
    CHECK(pnw::log2_big(BigInt(1) << 300) == Approx(300.0).epsilon(1e-15));
    CHECK(pnw::log2_big((BigInt(3) << 200)) == Approx(200.0 + std::log2(3.0)).epsilon(1e-15));
}
