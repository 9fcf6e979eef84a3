#include "ttone/label.hpp"

#include <string>

#include "ttone/error.hpp"

namespace ttone {

Label::Label(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
}

Label::Label(std::span<const Color> colors) {
    for (Color c : colors) insert(c);
}

Label Label::range(Color first, std::size_t count) {
    Label l;
    for (std::size_t i = 0; i < count; ++i) l.insert(first + static_cast<Color>(i));
    return l;
}

void Label::insert(Color c) {
    if (c < 1 || c > kMaxColors)
        throw Error(ErrorKind::InvalidLabel, "color " + std::to_string(c) + " out of range");
    const auto i = c - 1;
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

Color Label::max_color() const noexcept {
    for (std::size_t i = kWords; i-- > 0;)
        if (words_[i]) return static_cast<Color>(i * 64 + 64 - std::countl_zero(words_[i]));
    return 0;
}

Color Label::min_color() const noexcept {
    for (std::size_t i = 0; i < kWords; ++i)
        if (words_[i]) return static_cast<Color>(i * 64 + std::countr_zero(words_[i]) + 1);
    return 0;
}

std::vector<Color> Label::colors() const {
    std::vector<Color> out;
    for (std::size_t i = 0; i < kWords; ++i) {
        auto w = words_[i];
        while (w) {
            out.push_back(static_cast<Color>(i * 64 + std::countr_zero(w) + 1));
            w &= w - 1;
        }
    }
    return out;
}

std::string Label::to_string() const {
    const auto cs = colors();
    bool short_form = true;
    for (Color c : cs) short_form = short_form && c <= 9;
    std::string s;
    if (short_form) {
        for (Color c : cs) s += static_cast<char>('0' + c);
        return s;
    }
    s = "{";
    for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + std::to_string(cs[i]);
    return s + "}";
}

std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept {
    // The smaller first differing color belongs to the lexicographically smaller label.
    for (std::size_t i = 0; i < Label::kWords; ++i) {
        const auto diff = a.words_[i] ^ b.words_[i];
        if (!diff) continue;
        const auto bit = diff & (~diff + 1);
        return (a.words_[i] & bit) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::size_t Label::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

void ToneParams::validate() const {
    if (t < 1) throw Error(ErrorKind::InvalidArgument, "t must be >= 1");
    if (k < t)
        throw Error(ErrorKind::InvalidArgument,
                    "k=" + std::to_string(k) + " is smaller than t=" + std::to_string(t));
    if (k > kMaxColors)
        throw Error(ErrorKind::TooLarge, "k=" + std::to_string(k) + " exceeds " +
                                             std::to_string(kMaxColors) + " colors");
}

bool for_each_subset(std::span<const Color> pool, unsigned t,
                     const std::function<bool(const Label&)>& visit) {
    const std::size_t m = pool.size();
    if (t > m) return true;
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    while (true) {
        Label l;
        for (auto i : idx) l.insert(pool[i]);
        if (!visit(l)) return false;
        // Advance to the next combination in lexicographic order.
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == m - t + (i - 1)) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace ttone
