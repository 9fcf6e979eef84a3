#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ttone {

using Color = std::uint32_t;

inline constexpr std::size_t kMaxColors = 512;

// A set of colors from 1..kMaxColors stored as a fixed-width bitmask, so the
// intersection size of two labels is a handful of popcounts.
class Label {
public:
    static constexpr std::size_t kWords = kMaxColors / 64;

    constexpr Label() = default;
    Label(std::initializer_list<Color> colors);
    explicit Label(std::span<const Color> colors);

    // Consecutive colors first..first+count-1.
    static Label range(Color first, std::size_t count);

    bool contains(Color c) const noexcept {
        const auto i = c - 1;
        return (words_[i / 64] >> (i % 64)) & 1U;
    }
    void insert(Color c);
    void erase(Color c) noexcept {
        const auto i = c - 1;
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    std::size_t size() const noexcept {
        std::size_t s = 0;
        for (auto w : words_) s += static_cast<std::size_t>(std::popcount(w));
        return s;
    }
    bool empty() const noexcept { return size() == 0; }

    // 0 when empty.
    Color max_color() const noexcept;
    Color min_color() const noexcept;

    std::vector<Color> colors() const;

    // "12" for {1,2} when every color is a single digit, otherwise "{1,10}".
    std::string to_string() const;

    Label operator&(const Label& o) const noexcept {
        Label r;
        for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
        return r;
    }
    Label operator|(const Label& o) const noexcept {
        Label r;
        for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
        return r;
    }
    Label& operator|=(const Label& o) noexcept {
        for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Label without(const Label& o) const noexcept {
        Label r;
        for (std::size_t i = 0; i < kWords; ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    bool disjoint(const Label& o) const noexcept {
        for (std::size_t i = 0; i < kWords; ++i)
            if (words_[i] & o.words_[i]) return false;
        return true;
    }

    friend std::size_t shared(const Label& a, const Label& b) noexcept {
        std::size_t s = 0;
        for (std::size_t i = 0; i < kWords; ++i)
            s += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return s;
    }

    friend bool operator==(const Label&, const Label&) = default;

    // Lexicographic order of the ascending color sequences (for equal sizes).
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept;

    std::size_t hash() const noexcept;

private:
    std::array<std::uint64_t, kWords> words_{};
};

struct LabelHash {
    std::size_t operator()(const Label& l) const noexcept { return l.hash(); }
};

// Tone count t and color count k of a t-tone k-coloring.
struct ToneParams {
    unsigned t = 2;
    unsigned k = 0;

    // Throws InvalidArgument unless 1 <= t <= k; TooLarge when k > kMaxColors.
    void validate() const;

    friend bool operator==(const ToneParams&, const ToneParams&) = default;
};

// Calls visit(label) for every t-subset of `pool` in lexicographic order;
// stops early when visit returns false. Returns false if stopped early.
bool for_each_subset(std::span<const Color> pool, unsigned t,
                     const std::function<bool(const Label&)>& visit);

}  // namespace ttone

template <>
struct std::hash<ttone::Label> {
    std::size_t operator()(const ttone::Label& l) const noexcept { return l.hash(); }
};
