#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnw/bigint.hpp"
#include "pnw/incremental.hpp"
#include "pnw/word.hpp"

namespace pnw {

// Practical limits on a desktop; nothing enforces them except word packing (<= 63).
inline constexpr std::size_t kCountPracticalLimit = 30;
inline constexpr std::size_t kClassScanPracticalLimit = 24;
inline constexpr std::size_t kPackedLimit = 63;

struct ClassReport {
    BinaryWord pnf;
    BigInt size;
};

/// Prefix normal words of one length in lexicographic order.
///
/// Depth-first over letters, 0 before 1. Every prefix of a prefix normal word
/// is itself prefix normal, so a failed extension prunes the whole subtree.
class PrefixNormalCursor {
public:
    explicit PrefixNormalCursor(std::size_t n);

    [[nodiscard]] bool done() const noexcept { return done_; }
    [[nodiscard]] const IncrementalState& state() const noexcept { return state_; }
    [[nodiscard]] BinaryWord word() const { return state_.word(); }
    void advance();

private:
    void fill_zeros();

    std::size_t n_;
    IncrementalState state_;
    bool done_ = false;
};

class PrefixNormalWords {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = BinaryWord;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::size_t n) : cursor_(std::in_place, n) {}

        BinaryWord operator*() const { return cursor_->word(); }
        iterator& operator++() {
            cursor_->advance();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.cursor_ || it.cursor_->done(); }

    private:
        std::optional<PrefixNormalCursor> cursor_;
    };

    explicit PrefixNormalWords(std::size_t n) : n_(n) {}
    [[nodiscard]] iterator begin() const { return iterator(n_); }
    [[nodiscard]] std::default_sentinel_t end() const { return {}; }

private:
    std::size_t n_;
};

inline PrefixNormalWords iter_prefix_normal(std::size_t n) { return PrefixNormalWords(n); }
std::vector<BinaryWord> list_prefix_normal(std::size_t n);

// Depth-first count; subtrees below a fixed-length frontier are split across
// `threads` workers and summed, so the result does not depend on the split.
BigInt count_prefix_normal(std::size_t n, unsigned threads = 1);

// Oracle: filter all 2^n words through is_prefix_normal_definition.
BigInt count_prefix_normal_naive(std::size_t n);

// Exhaustive scan over all 2^n candidates. Throws std::invalid_argument when
// pnf is not prefix normal.
BigInt class_size(const BinaryWord& pnf);

// Depth-first scan that drops a partial candidate as soon as some window
// exceeds the target profile. Agrees with class_size().
BigInt class_size_pruned(const BinaryWord& pnf);

// Every equivalence class of length n with its size, in lexicographic order of
// prefix normal form; one pass over all 2^n words.
std::vector<ClassReport> class_census(std::size_t n, unsigned threads = 1);

// Largest class; ties broken by the lexicographically smallest prefix normal form.
ClassReport max_class_size(std::size_t n, unsigned threads = 1);

// Same maximum computed as max over list_prefix_normal(n) of class_size(); slow oracle.
ClassReport max_class_size_by_classes(std::size_t n);

// Prefix normal form of a packed word of length n <= 63, packed the same way.
std::uint64_t prefix_normal_form_packed(std::uint64_t bits, std::size_t n);

// `n<TAB>value` lines, '#' starts a comment.
std::map<std::size_t, BigInt> load_sequence_fixture(const std::filesystem::path& path);
std::map<std::size_t, BigInt> parse_sequence_fixture(std::istream& in);

struct EnumerationRow {
    std::size_t n = 0;
    BigInt count_pn;
    std::optional<ClassReport> max_class;
};

inline constexpr const char* kEnumerationCsvHeader = "n,count_pn,max_class,witness";
std::string enumeration_csv_row(const EnumerationRow& row);

}  // namespace pnw
