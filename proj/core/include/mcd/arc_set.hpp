#pragma once

// A set of m-arcs of one model, stored as a bit vector over the ArcUniverse
// index. Rotation invariance is automatic because members are paired arcs.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mcd {

class ArcSet {
public:
    ArcSet() = default;
    /// Empty set over a universe of `size` arcs.
    explicit ArcSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static ArcSet full(std::size_t size) {
        ArcSet s(size);
        for (auto &w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }
    /// Low `size` bits of `bits`; requires size <= 64.
    static ArcSet from_bits(std::size_t size, std::uint64_t bits) {
        ArcSet s(size);
        if (!s.words_.empty()) s.words_[0] = bits;
        s.trim();
        return s;
    }

    std::size_t universe_size() const noexcept { return size_; }
    const std::vector<std::uint64_t> &words() const noexcept { return words_; }
    std::vector<std::uint64_t> &mutable_words() noexcept { return words_; }

    bool contains(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void insert(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void erase(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (auto w : words_) {
            if (w != 0) return false;
        }
        return true;
    }
    bool is_subset_of(const ArcSet &other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & ~other.words_[k]) return false;
        }
        return true;
    }
    bool intersects(const ArcSet &other) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            if (words_[k] & other.words_[k]) return true;
        }
        return false;
    }
    ArcSet complement() const {
        ArcSet s = *this;
        for (auto &w : s.words_) w = ~w;
        s.trim();
        return s;
    }

    ArcSet &operator|=(const ArcSet &o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    ArcSet &operator&=(const ArcSet &o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    /// Set difference.
    ArcSet &operator-=(const ArcSet &o) noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }
    friend ArcSet operator|(ArcSet a, const ArcSet &b) { return a |= b; }
    friend ArcSet operator&(ArcSet a, const ArcSet &b) { return a &= b; }
    friend ArcSet operator-(ArcSet a, const ArcSet &b) { return a -= b; }

    /// Calls f(index) for every member in increasing index order.
    template <typename F>
    void for_each(F &&f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    friend bool operator==(const ArcSet &, const ArcSet &) = default;
    /// Orders by universe size, then by the numeric value of the bit pattern.
    friend std::strong_ordering operator<=>(const ArcSet &a, const ArcSet &b) noexcept {
        if (auto c = a.size_ <=> b.size_; c != 0) return c;
        for (std::size_t k = a.words_.size(); k-- > 0;) {
            if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim() noexcept {
        if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mcd
