#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

/// Growable prefix normal word for depth-first enumeration.
///
/// Holds the prefix-count table of the current word. Appending a letter only
/// creates windows that end at the new position, so one pass over the suffix
/// windows decides whether the extension is still prefix normal. Once an
/// extension fails the state is poisoned: further extend() calls throw until
/// the failing letter is popped.
class IncrementalState {
public:
    IncrementalState() : rank_{0} {}

    // Throws std::invalid_argument if w is not prefix normal.
    static IncrementalState from_word(const BinaryWord& w);

    // Appends b; returns true iff the longer word is prefix normal.
    bool extend(bool b);
    void pop();

    [[nodiscard]] std::size_t size() const noexcept { return rank_.size() - 1; }
    [[nodiscard]] bool prefix_normal() const noexcept { return failed_at_ == kNone; }
    [[nodiscard]] std::uint32_t prefix_ones(std::size_t i) const noexcept { return rank_[i]; }

    [[nodiscard]] BinaryWord word() const;
    // Packed letters for words of length <= 64 (bit i is letter i+1).
    [[nodiscard]] std::uint64_t packed() const;

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<std::uint32_t> rank_;
    std::size_t failed_at_ = kNone;
};

// Value-style wrapper: returns the extended state and whether it is prefix normal.
std::pair<IncrementalState, bool> extend_check(IncrementalState state, bool b);

}  // namespace pnw
