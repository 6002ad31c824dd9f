#include "pnw/bounds.hpp"

#include <stdexcept>

#include "pnw/format.hpp"

namespace pnw {

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p outside [0, 1]");
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double binary_entropy_series(double p, int terms) {
    const double u2 = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
    double power = 1.0;
    double sum = 0.0;
    for (int m = 1; m <= terms; ++m) {
        power *= u2;
        sum += power / (static_cast<double>(m) * (2.0 * m - 1.0));
    }
    return 1.0 - sum / (2.0 * std::log(2.0));
}

double hoeffding_tail(std::uint64_t n_vars, double x) {
    if (n_vars == 0) throw std::invalid_argument("hoeffding_tail: needs at least one variable");
    if (!(x >= 0.0)) throw std::invalid_argument("hoeffding_tail: x must be non-negative");
    return std::min(1.0, std::exp(-2.0 * x * x / static_cast<double>(n_vars)));
}

BinomialTails::BinomialTails(std::uint32_t k) : k_(k), suffix_(static_cast<std::size_t>(k) + 2, 0) {
    BigInt coeff = 1;  // C(k, 0)
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1);
    for (std::uint32_t r = 0; r <= k; ++r) {
        row[r] = coeff;
        coeff = coeff * (k - r) / (r + 1);
    }
    for (std::size_t r = k + 1; r-- > 0;) suffix_[r] = suffix_[r + 1] + row[r];
}

BigInt BinomialTails::count_at_least(std::int64_t d) const {
    if (d <= 0) return suffix_[0];
    if (d > static_cast<std::int64_t>(k_)) return 0;
    return suffix_[static_cast<std::size_t>(d)];
}

HighPrecision BinomialTails::tail(std::int64_t d, TailKind kind) const {
    const std::int64_t threshold = kind == TailKind::Greater ? d + 1 : d;
    HighPrecision count(count_at_least(threshold));
    return ldexp(count, -static_cast<int>(k_));
}

HighPrecision binomial_tail_exact(std::uint32_t k, std::int64_t d, TailKind kind) {
    return BinomialTails(k).tail(d, kind);
}

StirlingBounds stirling_tail_lower_at(std::uint32_t k, std::uint32_t successes) {
    if (!(2ull * successes > k && successes < k))
        throw std::invalid_argument("stirling_tail_lower: need 1/2 < lambda < 1");
    const double kd = k;
    const double lambda = successes / kd;
    const double head = std::exp2(kd * binary_entropy(lambda) - kd);
    return {head / std::sqrt(8.0 * kd * lambda * (1.0 - lambda)), head / std::sqrt(2.0 * kd)};
}

StirlingBounds stirling_tail_lower(std::uint32_t k, double lambda) {
    if (!(lambda > 0.5 && lambda < 1.0)) throw std::invalid_argument("stirling_tail_lower: need 1/2 < lambda < 1");
    const double m = lambda * k;
    const double rounded = std::round(m);
    if (std::abs(m - rounded) > 1e-9 * std::max(1.0, m))
        throw std::invalid_argument("stirling_tail_lower: lambda * k must be an integer");
    return stirling_tail_lower_at(k, static_cast<std::uint32_t>(rounded));
}

double density_threshold(double n, double c, double k) { return k / 2.0 + c * std::sqrt(k * ln_length(n)); }

std::vector<std::size_t> density_violations(const BinaryWord& w, double c) {
    std::vector<std::size_t> out;
    const std::size_t n = w.size();
    if (n == 0) return out;
    const auto lo = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(ln_length(static_cast<double>(n)))));
    auto hi = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while (hi * hi > n) --hi;
    while ((hi + 1) * (hi + 1) <= n) ++hi;
    for (std::size_t k = lo; k <= hi; ++k)
        if (w.prefix_ones(k) < density_threshold(static_cast<double>(n), c, static_cast<double>(k))) out.push_back(k);
    return out;
}

double beta(int t, double d0) { return std::exp(-std::ldexp(1.0, 3 - t) * d0 / 3.0); }

TailAuditParams TailAuditParams::make(std::size_t n, double c) {
    if (n < 2) throw std::invalid_argument("TailAuditParams: n must be at least 2");
    if (!(c > 0.0)) throw std::invalid_argument("TailAuditParams: c must be positive");
    TailAuditParams p;
    p.n = n;
    p.c = c;
    const double ln_n = ln_length(static_cast<double>(n));
    p.d0 = c * std::sqrt(ln_n);
    p.t0 = 0;
    while (std::ldexp(1.0, 2 * p.t0) < ln_n) ++p.t0;
    // 4^t <= sqrt(n)  <=>  16^t <= n, decided in integers.
    p.t1 = 0;
    for (unsigned __int128 pow16 = 16; pow16 <= n; pow16 *= 16) ++p.t1;
    return p;
}

double claim_rhs(const TailAuditParams& params, int t, std::uint64_t j) {
    if (t < params.t0 || t > params.t1) throw std::out_of_range("claim_rhs: t outside [t0, t1]");
    const double ln_n = ln_length(static_cast<double>(params.n));
    const double levels = t - params.t0 + 1;
    const double n_power = std::exp(-2.0 * params.c * params.c * levels / 3.0 * ln_n);
    const double b = beta(t, params.d0);
    return n_power * std::pow(b, static_cast<double>(j)) / (1.0 - b);
}

BigInt binomial(std::uint32_t n, std::uint32_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::uint32_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

BigInt catalan_number(std::uint32_t t) { return binomial(2 * t, t) / (t + 1); }

bool TailAuditRow::violates_stirling() const {
    return exact_tail < HighPrecision(stirling.tight) || exact_tail < HighPrecision(stirling.loose);
}

std::vector<TailAuditRow> tail_audit(std::uint32_t k_lo, std::uint32_t k_hi, std::optional<double> lambda) {
    std::vector<TailAuditRow> rows;
    for (std::uint32_t k = std::max<std::uint32_t>(k_lo, 1); k <= k_hi; ++k) {
        std::vector<std::uint32_t> successes;
        if (lambda) {
            const double m = *lambda * k;
            if (std::abs(m - std::round(m)) <= 1e-9 * std::max(1.0, m)) {
                const auto r = static_cast<std::uint32_t>(std::round(m));
                if (2ull * r > k && r < k) successes.push_back(r);
            }
        } else {
            for (std::uint32_t m = k / 2 + 1; m < k; ++m) successes.push_back(m);
        }
        if (successes.empty()) continue;
        const BinomialTails tails(k);
        for (const auto m : successes) {
            TailAuditRow row;
            row.k = k;
            row.successes = m;
            row.lambda = static_cast<double>(m) / k;
            row.exact_tail = tails.tail(m, TailKind::AtLeast);
            row.stirling = stirling_tail_lower_at(k, m);
            const double x = m - k / 2.0;
            row.hoeffding = hoeffding_tail(k, x);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string tail_audit_csv_row(const TailAuditRow& row) {
    return std::to_string(row.k) + "," + format_real(row.lambda) + "," + format_real(row.exact_tail) + "," +
           format_real(row.stirling.tight) + "," + format_real(row.stirling.loose) + "," + format_real(row.hoeffding);
}

}  // namespace pnw
