#include "pnw/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pnw/bounds.hpp"
#include "pnw/format.hpp"
#include "pnw/parallel.hpp"
#include "pnw/rng.hpp"

namespace pnw {

ConstructionParams::ConstructionParams(std::size_t n, double c, std::uint64_t master_seed)
    : n_(n), c_(c), seed_(master_seed) {
    if (n == 0) throw std::invalid_argument("ConstructionParams: n must be at least 1");
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("ConstructionParams: c must be finite and >= 0");
    k0_ = static_cast<std::size_t>(std::floor(16.0 * c * c * ln_length(static_cast<double>(n))));
}

double bias(const ConstructionParams& params, std::size_t k) {
    if (k < 1 || k > params.n()) throw std::out_of_range("bias: position outside [1, n]");
    if (k <= params.k0()) return 1.0;
    return 0.5 + params.c() * std::sqrt(ln_length(static_cast<double>(params.n())) / static_cast<double>(k));
}

namespace {

std::vector<double> bias_table(const ConstructionParams& params) {
    std::vector<double> p(params.n() + 1, 0.0);
    for (std::size_t k = 1; k <= params.n(); ++k) p[k] = bias(params, k);
    return p;
}

BinaryWord sample_with(const std::vector<double>& p, std::size_t n, std::uint64_t seed, std::uint64_t trial) {
    TrialRng rng(seed, trial);
    std::vector<std::uint8_t> bits(n);
    for (std::size_t k = 1; k <= n; ++k) bits[k - 1] = rng.uniform() < p[k] ? 1 : 0;
    return BinaryWord(bits);
}

}  // namespace

BinaryWord sample(const ConstructionParams& params, std::uint64_t trial_index) {
    return sample_with(bias_table(params), params.n(), params.master_seed(), trial_index);
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson_interval: no trials");
    const double nn = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (phat + z2 / (2.0 * nn)) / denom;
    const double radius = z / denom * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn));
    return {center, radius};
}

ExperimentReport pn_rate(const ConstructionParams& params, std::uint64_t trials, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("pn_rate: trials must be at least 1");
    std::uint64_t successes = trials;
    if (!params.degenerate()) {
        const auto p = bias_table(params);
        std::vector<std::uint8_t> ok(trials, 0);
        parallel_for(trials, threads, [&](std::size_t i) {
            ok[i] = is_prefix_normal_reduced(sample_with(p, params.n(), params.master_seed(), i)) ? 1 : 0;
        });
        successes = 0;
        for (auto v : ok) successes += v;
    }
    ExperimentReport r{params};
    r.trials = trials;
    r.successes = successes;
    r.rate = static_cast<double>(successes) / static_cast<double>(trials);
    r.wilson_radius = wilson_interval(successes, trials, kZ95).radius;
    r.entropy_bits = construction_entropy(params);
    return r;
}

ExperimentReport entropy_report(const ConstructionParams& params) {
    ExperimentReport r{params};
    r.entropy_bits = construction_entropy(params);
    return r;
}

GapExpectation expected_gap(const ConstructionParams& params, std::size_t k, std::size_t j) {
    const std::size_t n = params.n();
    if (k < 1 || j < k || j + k > n) throw std::out_of_range("expected_gap: need 1 <= k <= j <= n - k");
    double mu = 0.0;
    for (std::size_t i = 1; i <= k; ++i) mu += bias(params, i);
    for (std::size_t i = j + 1; i <= j + k; ++i) mu += 1.0 - bias(params, i);
    mu -= static_cast<double>(k);
    return {mu, k};
}

double construction_entropy(const ConstructionParams& params) {
    double h = 0.0;
    for (std::size_t k = params.k0() + 1; k <= params.n(); ++k) h += binary_entropy(bias(params, k));
    return h;
}

double entropy_count_lower_bound(double entropy_bits, double success_prob, std::size_t n) {
    if (!(success_prob > 0.0 && success_prob <= 1.0))
        throw std::invalid_argument("entropy_count_lower_bound: success probability must be in (0, 1]");
    return (entropy_bits - static_cast<double>(n) * (1.0 - success_prob) - 1.0) / success_prob;
}

std::string experiment_csv_row(const ExperimentReport& r) {
    std::string s = std::to_string(r.params.n()) + "," + format_real(r.params.c()) + "," + std::to_string(r.params.k0()) + ",";
    if (r.trials > 0)
        s += std::to_string(r.trials) + "," + std::to_string(r.successes) + "," + format_real(r.rate) + "," +
             format_real(r.wilson_radius) + ",";
    else
        s += ",,,,";
    s += format_real(r.entropy_bits) + "," + format_real(r.deficit_bits());
    return s;
}

}  // namespace pnw
