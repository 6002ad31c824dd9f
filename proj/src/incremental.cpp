#include "pnw/incremental.hpp"

#include <stdexcept>

namespace pnw {

IncrementalState IncrementalState::from_word(const BinaryWord& w) {
    if (!is_prefix_normal_definition(w))
        throw std::invalid_argument("IncrementalState: seed word is not prefix normal");
    IncrementalState s;
    const auto rank = w.rank();
    s.rank_.assign(rank.begin(), rank.end());
    return s;
}

bool IncrementalState::extend(bool b) {
    if (failed_at_ != kNone) throw std::logic_error("IncrementalState: extending a word that is not prefix normal");
    const std::uint32_t total = rank_.back() + (b ? 1u : 0u);
    rank_.push_back(total);
    const std::size_t m = rank_.size() - 1;
    // Window of length k ending at the new letter: total - rank[m-k].
    for (std::size_t k = 1; k <= m; ++k) {
        if (total - rank_[m - k] > rank_[k]) {
            failed_at_ = m;
            return false;
        }
    }
    return true;
}

void IncrementalState::pop() {
    if (rank_.size() == 1) throw std::logic_error("IncrementalState: pop on empty word");
    if (failed_at_ == size()) failed_at_ = kNone;
    rank_.pop_back();
}

BinaryWord IncrementalState::word() const {
    std::vector<std::uint8_t> bits(size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = static_cast<std::uint8_t>(rank_[i + 1] - rank_[i]);
    return BinaryWord(bits);
}

std::uint64_t IncrementalState::packed() const {
    if (size() > 64) throw std::length_error("IncrementalState::packed: word longer than 64");
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (rank_[i + 1] != rank_[i]) out |= std::uint64_t{1} << i;
    return out;
}

std::pair<IncrementalState, bool> extend_check(IncrementalState state, bool b) {
    const bool ok = state.extend(b);
    return {std::move(state), ok};
}

}  // namespace pnw
