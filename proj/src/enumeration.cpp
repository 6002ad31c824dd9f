#include "pnw/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "pnw/parallel.hpp"

namespace pnw {

namespace {

void require_packable(std::size_t n, const char* who) {
    if (n > kPackedLimit) throw std::invalid_argument(std::string(who) + ": length exceeds 63");
}

std::uint64_t low_mask(std::size_t k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

int max_window(std::uint64_t bits, std::size_t n, std::size_t k) {
    const std::uint64_t mask = low_mask(k);
    int best = 0;
    for (std::size_t j = 0; j + k <= n; ++j) best = std::max(best, std::popcount((bits >> j) & mask));
    return best;
}

// Profile of `bits` equals `target` (f(0..n)), bailing out at the first mismatch.
bool matches_profile(std::uint64_t bits, std::size_t n, const std::uint32_t* target) {
    for (std::size_t k = 1; k <= n; ++k)
        if (max_window(bits, n, k) != static_cast<int>(target[k])) return false;
    return true;
}

std::uint64_t count_subtree(IncrementalState& state, std::size_t n) {
    if (state.size() == n) return 1;
    std::uint64_t total = 0;
    for (bool b : {false, true}) {
        if (state.extend(b)) total += count_subtree(state, n);
        state.pop();
    }
    return total;
}

std::size_t frontier_depth(std::size_t n, unsigned threads) {
    if (threads <= 1) return 0;
    return std::min<std::size_t>(n, 12);
}

void require_prefix_normal(const BinaryWord& pnf, const char* who) {
    if (!is_prefix_normal_definition(pnf))
        throw std::invalid_argument(std::string(who) + ": argument is not prefix normal");
}

}  // namespace

PrefixNormalCursor::PrefixNormalCursor(std::size_t n) : n_(n) { fill_zeros(); }

void PrefixNormalCursor::fill_zeros() {
    // Appending 0 never creates a window denser than the matching prefix.
    while (state_.size() < n_) state_.extend(false);
}

void PrefixNormalCursor::advance() {
    if (done_) return;
    while (state_.size() > 0) {
        const std::size_t m = state_.size();
        const bool last = state_.prefix_ones(m) != state_.prefix_ones(m - 1);
        state_.pop();
        if (last) continue;
        if (state_.extend(true)) {
            fill_zeros();
            return;
        }
        state_.pop();
    }
    done_ = true;
}

std::vector<BinaryWord> list_prefix_normal(std::size_t n) {
    std::vector<BinaryWord> out;
    for (PrefixNormalCursor c(n); !c.done(); c.advance()) out.push_back(c.word());
    return out;
}

BigInt count_prefix_normal(std::size_t n, unsigned threads) {
    const std::size_t depth = frontier_depth(n, threads);
    if (depth == 0) {
        IncrementalState state;
        return BigInt(count_subtree(state, n));
    }
    std::vector<IncrementalState> frontier;
    for (PrefixNormalCursor c(depth); !c.done(); c.advance()) frontier.push_back(c.state());
    std::vector<std::uint64_t> partial(frontier.size(), 0);
    parallel_for(frontier.size(), threads, [&](std::size_t i) {
        IncrementalState s = frontier[i];
        partial[i] = count_subtree(s, n);
    });
    BigInt total = 0;
    for (auto p : partial) total += p;
    return total;
}

BigInt count_prefix_normal_naive(std::size_t n) {
    require_packable(n, "count_prefix_normal_naive");
    std::uint64_t total = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < limit; ++v)
        if (is_prefix_normal_definition(BinaryWord::from_packed(v, n))) ++total;
    return BigInt(total);
}

std::uint64_t prefix_normal_form_packed(std::uint64_t bits, std::size_t n) {
    require_packable(n, "prefix_normal_form_packed");
    std::uint64_t out = 0;
    int prev = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        const int f = max_window(bits, n, k);
        if (f > prev) out |= std::uint64_t{1} << (k - 1);
        prev = f;
    }
    return out;
}

BigInt class_size(const BinaryWord& pnf) {
    require_prefix_normal(pnf, "class_size");
    const std::size_t n = pnf.size();
    require_packable(n, "class_size");
    const auto target = pnf.rank();  // a prefix normal word's profile is its rank table
    std::uint64_t total = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t v = 0; v < limit; ++v)
        if (matches_profile(v, n, target.data())) ++total;
    return BigInt(total);
}

BigInt class_size_pruned(const BinaryWord& pnf) {
    require_prefix_normal(pnf, "class_size_pruned");
    const std::size_t n = pnf.size();
    require_packable(n, "class_size_pruned");
    const auto target = pnf.rank();
    std::array<std::uint32_t, 65> rank{};
    std::uint64_t total = 0;

    auto dfs = [&](auto&& self, std::uint64_t bits, std::size_t m) -> void {
        if (m == n) {
            if (matches_profile(bits, n, target.data())) ++total;
            return;
        }
        for (std::uint32_t b : {0u, 1u}) {
            rank[m + 1] = rank[m] + b;
            bool ok = true;
            for (std::size_t k = 1; k <= m + 1; ++k)
                if (rank[m + 1] - rank[m + 1 - k] > target[k]) {
                    ok = false;
                    break;
                }
            if (ok) self(self, bits | (std::uint64_t{b} << m), m + 1);
        }
    };
    dfs(dfs, 0, 0);
    return BigInt(total);
}

std::vector<ClassReport> class_census(std::size_t n, unsigned threads) {
    require_packable(n, "class_census");
    const std::uint64_t limit = std::uint64_t{1} << n;
    const std::uint64_t chunks = std::min<std::uint64_t>(limit, 64);
    const std::uint64_t chunk = (limit + chunks - 1) / chunks;
    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> tallies(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        const std::uint64_t lo = c * chunk;
        const std::uint64_t hi = std::min(limit, lo + chunk);
        for (std::uint64_t v = lo; v < hi; ++v) ++tallies[c][prefix_normal_form_packed(v, n)];
    });
    std::unordered_map<std::uint64_t, std::uint64_t> merged;
    for (const auto& t : tallies)
        for (const auto& [key, count] : t) merged[key] += count;

    std::vector<ClassReport> out;
    out.reserve(merged.size());
    for (const auto& [key, count] : merged) out.push_back({BinaryWord::from_packed(key, n), BigInt(count)});
    std::sort(out.begin(), out.end(), [](const ClassReport& a, const ClassReport& b) { return a.pnf < b.pnf; });
    return out;
}

ClassReport max_class_size(std::size_t n, unsigned threads) {
    const auto census = class_census(n, threads);
    const ClassReport* best = &census.front();
    for (const auto& r : census)
        if (r.size > best->size) best = &r;  // census is sorted, so the first maximum is the smallest witness
    return *best;
}

ClassReport max_class_size_by_classes(std::size_t n) {
    std::optional<ClassReport> best;
    for (PrefixNormalCursor c(n); !c.done(); c.advance()) {
        BinaryWord w = c.word();
        BigInt size = class_size(w);
        if (!best || size > best->size) best = ClassReport{std::move(w), std::move(size)};
    }
    return *best;
}

std::map<std::size_t, BigInt> parse_sequence_fixture(std::istream& in) {
    std::map<std::size_t, BigInt> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        std::size_t n = 0;
        std::string value;
        if (!(fields >> n >> value)) throw std::runtime_error("fixture line " + std::to_string(line_no) + ": expected n<TAB>count");
        out[n] = BigInt(value);
    }
    return out;
}

std::map<std::size_t, BigInt> load_sequence_fixture(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture " + path.string());
    return parse_sequence_fixture(in);
}

std::string enumeration_csv_row(const EnumerationRow& row) {
    std::string s = std::to_string(row.n) + "," + row.count_pn.str() + ",";
    if (row.max_class) s += row.max_class->size.str() + "," + row.max_class->pnf.str();
    else s += ",";
    return s;
}

}  // namespace pnw
