#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pnw {

// Raised when a word string contains anything other than '0' and '1'.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable binary word with an eagerly built rank table.
///
/// Positions are 0-based in this API: bit(i) is the letter w_{i+1}.
/// prefix_ones(i) counts ones among the first i letters, so prefix_ones(0) == 0.
/// ones(j, k) counts ones in the window of length k starting after j letters,
/// i.e. the factor w[j+1, j+k].
class BinaryWord {
public:
    using Limb = std::uint64_t;
    static constexpr std::size_t kLimbBits = 64;

    BinaryWord() : rank_{0} {}
    explicit BinaryWord(std::span<const std::uint8_t> bits);
    explicit BinaryWord(const std::vector<bool>& bits);

    // Most significant letter (index 1) first; rejects characters other than 0/1.
    static BinaryWord parse(std::string_view text);
    // Low n bits of `packed`, bit 0 of `packed` becoming the first letter.
    static BinaryWord from_packed(std::uint64_t packed, std::size_t n);
    static BinaryWord repeat(std::string_view pattern, std::size_t times);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool empty() const noexcept { return size_ == 0; }

    [[nodiscard]] bool bit(std::size_t i) const noexcept {
        return (limbs_[i / kLimbBits] >> (i % kLimbBits)) & 1u;
    }
    [[nodiscard]] std::uint32_t prefix_ones(std::size_t i) const noexcept { return rank_[i]; }
    [[nodiscard]] std::uint32_t ones(std::size_t j, std::size_t k) const noexcept {
        return rank_[j + k] - rank_[j];
    }
    [[nodiscard]] std::uint32_t total_ones() const noexcept { return rank_[size_]; }

    [[nodiscard]] std::span<const std::uint32_t> rank() const noexcept { return rank_; }
    [[nodiscard]] std::span<const Limb> limbs() const noexcept { return limbs_; }

    // Packed form for words of length <= 64 (bit i of the result is letter i+1).
    [[nodiscard]] std::uint64_t packed() const;

    [[nodiscard]] BinaryWord concat(const BinaryWord& tail) const;
    [[nodiscard]] BinaryWord prefix(std::size_t m) const;

    [[nodiscard]] std::string str() const;

    friend bool operator==(const BinaryWord& a, const BinaryWord& b) noexcept {
        return a.size_ == b.size_ && a.limbs_ == b.limbs_;
    }
    // Lexicographic over equal lengths; shorter-is-smaller otherwise.
    friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept;

private:
    void build_rank();

    std::size_t size_ = 0;
    std::vector<Limb> limbs_;
    std::vector<std::uint32_t> rank_;
};

/// The sequence f(0..n), f(k) = max ones over all length-k windows.
class Profile {
public:
    Profile() : values_{0} {}
    explicit Profile(std::vector<std::uint32_t> values);

    [[nodiscard]] std::size_t length() const noexcept { return values_.size() - 1; }
    [[nodiscard]] std::uint32_t operator[](std::size_t k) const noexcept { return values_[k]; }
    [[nodiscard]] std::span<const std::uint32_t> values() const noexcept { return values_; }

    // f(0) = 0 and unit steps f(k) <= f(k+1) <= f(k)+1.
    [[nodiscard]] bool well_formed() const noexcept;

    [[nodiscard]] std::string str() const;  // "0,1,1,2"

    friend bool operator==(const Profile&, const Profile&) = default;

private:
    std::vector<std::uint32_t> values_;
};

// O(n^2) sliding-window profile over the rank table.
Profile profile(const BinaryWord& w);

// Bit-sliced profile: window counts for all offsets kept as vertical counters,
// advanced one length at a time. Bit-exact with profile().
Profile profile_bitparallel(const BinaryWord& w);

// Profile of a word of length n <= 64 given in packed form.
Profile profile_packed(std::uint64_t bits, std::size_t n);

BinaryWord prefix_normal_form(const BinaryWord& w);
BinaryWord word_from_profile(const Profile& f);

// Literal definition: every prefix dominates every window of the same length.
bool is_prefix_normal_definition(const BinaryWord& w);

// Only the non-overlapping offsets k <= j <= n-k are checked.
bool is_prefix_normal_reduced(const BinaryWord& w);

// Throws std::invalid_argument on length mismatch.
bool equivalent(const BinaryWord& w, const BinaryWord& v);

}  // namespace pnw
