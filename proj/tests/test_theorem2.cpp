#include <doctest.h>

#include <cmath>
#include <set>
#include <string>

#include "pnw/bounds.hpp"
#include "pnw/enumeration.hpp"
#include "pnw/theorem2.hpp"

using doctest::Approx;
using pnw::BigInt;
using pnw::BinaryWord;
using pnw::VerificationMode;

namespace {

// Test-only oracle: ballot words of length 2t by filtering all 4^t strings.
std::vector<std::string> ballot_filter(std::uint32_t t) {
    std::vector<std::string> out;
    const std::size_t len = 2 * t;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
        std::string s(len, '0');
        int ones = 0;
        bool ok = true;
        for (std::size_t i = 0; i < len; ++i) {
            if ((v >> (len - 1 - i)) & 1) {
                s[i] = '1';
                ++ones;
            }
            if (2 * ones > static_cast<int>(i + 1)) ok = false;
        }
        if (ok && ones == static_cast<int>(t)) out.push_back(s);
    }
    return out;  // increasing v with MSB first is lexicographic order
}

BinaryWord w(const char* s) { return BinaryWord::parse(s); }

}  // namespace

TEST_CASE("catalan predicate") {
    CHECK(pnw::is_catalan_sequence(w("01"), 1));
    CHECK(pnw::is_catalan_sequence(w("0011"), 2));
    CHECK(pnw::is_catalan_sequence(w("0101"), 2));
    CHECK_FALSE(pnw::is_catalan_sequence(w("0110"), 2));
    CHECK_FALSE(pnw::is_catalan_sequence(w("10"), 1));
    CHECK_FALSE(pnw::is_catalan_sequence(w("0001"), 2));
    CHECK_FALSE(pnw::is_catalan_sequence(w("01"), 2));
    CHECK(pnw::is_catalan_sequence(BinaryWord{}, 0));
}

TEST_CASE("catalan sequences match the exhaustive filter") {
    for (std::uint32_t t = 0; t <= 8; ++t) {
        CAPTURE(t);
        std::vector<std::string> got;
        for (const auto& b : pnw::catalan_sequences(t)) got.push_back(b.str());
        CHECK(got == ballot_filter(t));
    }
    std::vector<std::string> two;
    pnw::for_each_catalan_sequence(2, [&](const BinaryWord& b) { two.push_back(b.str()); });
    CHECK(two == std::vector<std::string>{"0011", "0101"});
    CHECK(pnw::catalan_sequences(3).size() == 5);
}

TEST_CASE("build word") {
    CHECK(pnw::build_word({8, 1, {w("01"), w("01")}}).str() == "10110101");
    CHECK(pnw::build_word({12, 2, {w("0011")}}).str() == "101011110011");
    CHECK(pnw::build_word({12, 3, {}}).str() == "101010111111");

    CHECK_THROWS_AS(pnw::build_word({10, 2, {w("0011")}}), std::invalid_argument);        // 4 does not divide 10
    CHECK_THROWS_AS(pnw::build_word({12, 2, {w("0110")}}), std::invalid_argument);        // not a ballot word
    CHECK_THROWS_AS(pnw::build_word({12, 2, {}}), std::invalid_argument);                 // one block missing
    CHECK_THROWS_AS(pnw::build_word({8, 0, {}}), std::invalid_argument);
    CHECK_THROWS_AS(pnw::build_word({4, 2, {}}), std::invalid_argument);                  // n < 4t
    CHECK(pnw::block_count(24, 3) == 2);
    CHECK_THROWS_AS(pnw::block_count(6, 3), std::invalid_argument);
}

TEST_CASE("target prefix normal form") {
    CHECK(pnw::target_pnf(4, 1).str() == "1101");
    CHECK(pnw::target_pnf(12, 2).str() == "111101010101");
    CHECK_THROWS_AS(pnw::target_pnf(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(pnw::target_pnf(4, 3), std::invalid_argument);
    for (std::uint32_t t = 1; t <= 6; ++t)
        for (std::size_t n = 2 * t; n <= 60; n += 2) {
            const auto target = pnw::target_pnf(n, t);
            REQUIRE(pnw::is_prefix_normal_definition(target));
            REQUIRE(pnw::prefix_normal_form(target) == target);
            for (std::size_t k = 2 * t + 1; k <= n; ++k) REQUIRE(target.prefix_ones(k) == t + k / 2);
        }
}

TEST_CASE("exhaustive verification examples") {
    const auto a = pnw::verify_construction(8, 1, VerificationMode::Exhaustive);
    CHECK(a.checked == 1);
    CHECK(a.failures == 0);
    const auto b = pnw::verify_construction(16, 2, VerificationMode::Exhaustive);
    CHECK(b.checked == 4);
    CHECK(b.failures == 0);
    const auto c = pnw::verify_construction(24, 3, VerificationMode::Exhaustive, 0, 0, 3);
    CHECK(c.checked == 25);
    CHECK(c.failures == 0);
    CHECK(c.class_size_log2_bound == Approx(4.643856189774724));
    CHECK(pnw::to_string(c.mode) == "exhaustive");

    // 12 blocks of C_5 = 42 choices each.
    CHECK_THROWS_AS(pnw::verify_construction(130, 5, VerificationMode::Exhaustive), std::invalid_argument);
    CHECK_THROWS_AS(pnw::verify_construction(10, 2, VerificationMode::Exhaustive), std::invalid_argument);
}

TEST_CASE("sampled verification") {
    const auto r = pnw::verify_construction(240, 6, VerificationMode::Sampled, 200, 9);
    CHECK(r.checked == 200);
    CHECK(r.failures == 0);
    CHECK(pnw::to_string(r.mode) == "sampled");
    const auto again = pnw::verify_construction(240, 6, VerificationMode::Sampled, 200, 9, 4);
    CHECK(again.checked == r.checked);
    CHECK(again.failures == r.failures);
    CHECK_THROWS(pnw::verify_construction(26 * 4, 13, VerificationMode::Sampled, 5));
}

TEST_CASE("built words are pairwise distinct and share the target form") {
    for (auto [n, t] : {std::pair<std::size_t, std::uint32_t>{14, 1}, {20, 2}, {24, 3}, {28, 2}}) {
        const auto seqs = pnw::catalan_sequences(t);
        const std::size_t m = pnw::block_count(n, t);
        std::set<std::string> seen;
        std::vector<std::size_t> idx(m, 0);
        std::size_t total = 0;
        while (true) {
            pnw::CatalanBlockSpec spec{n, t, {}};
            for (auto i : idx) spec.blocks.push_back(seqs[i]);
            const auto word = pnw::build_word(spec);
            REQUIRE(pnw::prefix_normal_form(word) == pnw::target_pnf(n, t));
            seen.insert(word.str());
            ++total;
            std::size_t pos = 0;
            while (pos < m && ++idx[pos] == seqs.size()) idx[pos++] = 0;
            if (pos == m) break;
        }
        CAPTURE(n);
        CHECK(seen.size() == total);
        CHECK(BigInt(total) == *pnw::class_size_log2_lower_bound(n, t).exact);
    }
}

TEST_CASE("class size lower bound") {
    CHECK(pnw::class_size_log2_lower_bound(12, 3).log2 == 0.0);
    CHECK(*pnw::class_size_log2_lower_bound(12, 3).exact == 1);
    CHECK(pnw::class_size_log2_lower_bound(16, 2).log2 == Approx(2.0));
    CHECK(pnw::class_size_log2_lower_bound(24, 3).log2 == Approx(4.643856189774724));
    CHECK(*pnw::class_size_log2_lower_bound(24, 3).exact == 25);
    CHECK_THROWS_AS(pnw::class_size_log2_lower_bound(10, 3), std::invalid_argument);

    const auto big = pnw::class_size_log2_lower_bound(1000000, 1000);
    CHECK(big.log2 > 0);

    for (std::size_t n = 4; n <= 14; n += 2)
        for (std::uint32_t t = 1; 4 * t <= n; ++t) {
            if (n % (2 * t)) continue;
            CAPTURE(n);
            CAPTURE(t);
            CHECK(pnw::class_size(pnw::target_pnf(n, t)) >= *pnw::class_size_log2_lower_bound(n, t).exact);
        }
}

TEST_CASE("suggested block length") {
    CHECK(pnw::suggested_block_length(100) == 10u);
    for (std::size_t n : {8u, 64u, 1000u, 4096u, 100000u}) {
        const auto t = pnw::suggested_block_length(n);
        REQUIRE(t.has_value());
        CHECK(n % (2 * *t) == 0);
        CHECK(4 * *t <= n);
        CHECK(*t <= std::sqrt(n * std::log(static_cast<double>(n))));
    }
    CHECK_FALSE(pnw::suggested_block_length(3).has_value());
}
