#include "pnw/word.hpp"

#include <algorithm>
#include <bit>
#include <compare>

namespace pnw {

namespace {

std::size_t limb_count(std::size_t n) { return (n + BinaryWord::kLimbBits - 1) / BinaryWord::kLimbBits; }

}  // namespace

BinaryWord::BinaryWord(std::span<const std::uint8_t> bits) : size_(bits.size()), limbs_(limb_count(bits.size()), 0) {
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] > 1) throw std::invalid_argument("BinaryWord: letters must be 0 or 1");
        if (bits[i]) limbs_[i / kLimbBits] |= Limb{1} << (i % kLimbBits);
    }
    build_rank();
}

BinaryWord::BinaryWord(const std::vector<bool>& bits) : size_(bits.size()), limbs_(limb_count(bits.size()), 0) {
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) limbs_[i / kLimbBits] |= Limb{1} << (i % kLimbBits);
    build_rank();
}

BinaryWord BinaryWord::parse(std::string_view text) {
    BinaryWord w;
    w.size_ = text.size();
    w.limbs_.assign(limb_count(text.size()), 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch == '1')
            w.limbs_[i / kLimbBits] |= Limb{1} << (i % kLimbBits);
        else if (ch != '0')
            throw ParseError("invalid character in binary word at position " + std::to_string(i + 1));
    }
    w.build_rank();
    return w;
}

BinaryWord BinaryWord::from_packed(std::uint64_t packed, std::size_t n) {
    if (n > kLimbBits) throw std::invalid_argument("from_packed: length exceeds 64");
    BinaryWord w;
    w.size_ = n;
    w.limbs_.assign(limb_count(n), 0);
    if (n > 0) w.limbs_[0] = n == kLimbBits ? packed : packed & ((Limb{1} << n) - 1);
    w.build_rank();
    return w;
}

BinaryWord BinaryWord::repeat(std::string_view pattern, std::size_t times) {
    std::string s;
    s.reserve(pattern.size() * times);
    for (std::size_t i = 0; i < times; ++i) s.append(pattern);
    return parse(s);
}

void BinaryWord::build_rank() {
    rank_.assign(size_ + 1, 0);
    for (std::size_t i = 0; i < size_; ++i) rank_[i + 1] = rank_[i] + (bit(i) ? 1u : 0u);
}

std::uint64_t BinaryWord::packed() const {
    if (size_ > kLimbBits) throw std::length_error("packed: word longer than 64");
    return limbs_.empty() ? 0 : limbs_[0];
}

BinaryWord BinaryWord::concat(const BinaryWord& tail) const {
    std::vector<std::uint8_t> bits;
    bits.reserve(size_ + tail.size_);
    for (std::size_t i = 0; i < size_; ++i) bits.push_back(bit(i));
    for (std::size_t i = 0; i < tail.size_; ++i) bits.push_back(tail.bit(i));
    return BinaryWord(bits);
}

BinaryWord BinaryWord::prefix(std::size_t m) const {
    if (m > size_) throw std::out_of_range("prefix: length exceeds word");
    std::vector<std::uint8_t> bits(m);
    for (std::size_t i = 0; i < m; ++i) bits[i] = bit(i);
    return BinaryWord(bits);
}

std::string BinaryWord::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) noexcept {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    for (std::size_t i = 0; i < a.size_; ++i)
        if (a.bit(i) != b.bit(i)) return a.bit(i) ? std::strong_ordering::greater : std::strong_ordering::less;
    return std::strong_ordering::equal;
}

Profile::Profile(std::vector<std::uint32_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("Profile: needs at least f(0)");
}

bool Profile::well_formed() const noexcept {
    if (values_[0] != 0) return false;
    for (std::size_t k = 0; k + 1 < values_.size(); ++k)
        if (values_[k + 1] < values_[k] || values_[k + 1] > values_[k] + 1) return false;
    return true;
}

std::string Profile::str() const {
    std::string s;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(values_[k]);
    }
    return s;
}

Profile profile(const BinaryWord& w) {
    const std::size_t n = w.size();
    const auto rank = w.rank();
    std::vector<std::uint32_t> f(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        std::uint32_t best = 0;
        for (std::size_t j = 0; j + k <= n; ++j) best = std::max(best, rank[j + k] - rank[j]);
        f[k] = best;
    }
    return Profile(std::move(f));
}

Profile profile_bitparallel(const BinaryWord& w) {
    using Limb = BinaryWord::Limb;
    constexpr std::size_t B = BinaryWord::kLimbBits;
    const std::size_t n = w.size();
    std::vector<std::uint32_t> f(n + 1, 0);
    if (n == 0) return Profile(std::move(f));

    const auto src = w.limbs();
    const std::size_t limbs = src.size();
    const std::size_t planes = std::bit_width(n);
    // planes[p][i]: bit p of the count for every offset j in limb i.
    std::vector<Limb> counter(planes * limbs, 0);
    std::vector<Limb> shifted(limbs, 0);
    std::vector<Limb> cand(limbs, 0);

    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t s = k - 1;
        const std::size_t q = s / B;
        const std::size_t r = s % B;
        for (std::size_t i = 0; i < limbs; ++i) {
            const Limb lo = i + q < limbs ? src[i + q] : 0;
            const Limb hi = i + q + 1 < limbs ? src[i + q + 1] : 0;
            shifted[i] = r == 0 ? lo : (lo >> r) | (hi << (B - r));
        }
        // Ripple-carry add of one bit per offset into the vertical counters.
        for (std::size_t i = 0; i < limbs; ++i) {
            Limb carry = shifted[i];
            for (std::size_t p = 0; p < planes && carry; ++p) {
                Limb& plane = counter[p * limbs + i];
                const Limb next = plane & carry;
                plane ^= carry;
                carry = next;
            }
        }
        // Offsets 0..n-k are valid windows of length k.
        const std::size_t valid = n - k + 1;
        const std::size_t used = limb_count(valid);
        for (std::size_t i = 0; i < used; ++i) cand[i] = ~Limb{0};
        if (valid % B) cand[used - 1] = (Limb{1} << (valid % B)) - 1;

        std::uint32_t best = 0;
        for (std::size_t p = planes; p-- > 0;) {
            bool any = false;
            for (std::size_t i = 0; i < used; ++i)
                if (cand[i] & counter[p * limbs + i]) {
                    any = true;
                    break;
                }
            if (!any) continue;
            for (std::size_t i = 0; i < used; ++i) cand[i] &= counter[p * limbs + i];
            best |= std::uint32_t{1} << p;
        }
        f[k] = best;
    }
    return Profile(std::move(f));
}

Profile profile_packed(std::uint64_t bits, std::size_t n) {
    std::vector<std::uint32_t> f(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::uint64_t mask = k == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
        int best = 0;
        for (std::size_t j = 0; j + k <= n; ++j) best = std::max(best, std::popcount((bits >> j) & mask));
        f[k] = static_cast<std::uint32_t>(best);
    }
    return Profile(std::move(f));
}

BinaryWord word_from_profile(const Profile& f) {
    if (!f.well_formed()) throw std::invalid_argument("word_from_profile: profile is not unit-step");
    std::vector<std::uint8_t> bits(f.length());
    for (std::size_t k = 1; k <= f.length(); ++k) bits[k - 1] = static_cast<std::uint8_t>(f[k] - f[k - 1]);
    return BinaryWord(bits);
}

BinaryWord prefix_normal_form(const BinaryWord& w) { return word_from_profile(profile(w)); }

bool is_prefix_normal_definition(const BinaryWord& w) {
    const std::size_t n = w.size();
    for (std::size_t k = 0; k <= n; ++k)
        for (std::size_t j = 0; j + k <= n; ++j)
            if (w.prefix_ones(k) < w.ones(j, k)) return false;
    return true;
}

bool is_prefix_normal_reduced(const BinaryWord& w) {
    const std::size_t n = w.size();
    const auto rank = w.rank();
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        std::uint32_t widest = 0;
        for (std::size_t j = k; j + k <= n; ++j) widest = std::max(widest, rank[j + k] - rank[j]);
        if (widest > rank[k]) return false;
    }
    return true;
}

bool equivalent(const BinaryWord& w, const BinaryWord& v) {
    if (w.size() != v.size()) throw std::invalid_argument("equivalent: words differ in length");
    return profile(w) == profile(v);
}

}  // namespace pnw
