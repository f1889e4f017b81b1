#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace recolor {

/// Vertex ids are 0-based inside the library.
using Vertex = std::uint32_t;

/// Colors are 1-based: a k-coloring uses colors 1..k.
using Color = std::uint32_t;

/// Malformed input: wrong lengths, vertices out of range, loops, duplicate edges.
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates an operation's precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A set of colors, stored as a bitset indexed by color.
class ColorSet {
public:
    ColorSet() = default;

    ColorSet(std::initializer_list<Color> colors)
    {
        for (Color c : colors)
            insert(c);
    }

    template <typename Range>
    static ColorSet from(const Range & colors)
    {
        ColorSet s;
        for (Color c : colors)
            s.insert(c);
        return s;
    }

    /// {1, ..., k}
    static ColorSet range(Color k)
    {
        ColorSet s;
        for (Color c = 1; c <= k; ++c)
            s.insert(c);
        return s;
    }

    bool contains(Color c) const
    {
        const std::size_t w = c / 64;
        return w < words_.size() && ((words_[w] >> (c % 64)) & 1u);
    }

    void insert(Color c)
    {
        const std::size_t w = c / 64;
        if (w >= words_.size())
            words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (c % 64);
    }

    void erase(Color c)
    {
        const std::size_t w = c / 64;
        if (w >= words_.size())
            return;
        words_[w] &= ~(std::uint64_t{1} << (c % 64));
        trim();
    }

    std::size_t size() const
    {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const { return words_.empty(); }

    /// Largest member, or 0 when empty.
    Color max() const
    {
        if (words_.empty())
            return 0;
        const std::uint64_t top = words_.back();
        return static_cast<Color>((words_.size() - 1) * 64 + (63 - std::countl_zero(top)));
    }

    /// Smallest member, or 0 when empty.
    Color min() const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w])
                return static_cast<Color>(w * 64 + std::countr_zero(words_[w]));
        return 0;
    }

    bool is_subset_of(const ColorSet & other) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
            if (words_[w] & ~theirs)
                return false;
        }
        return true;
    }

    /// Calls f(c) for every member in ascending order.
    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = std::countr_zero(bits);
                f(static_cast<Color>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    std::vector<Color> to_vector() const
    {
        std::vector<Color> out;
        out.reserve(size());
        for_each([&](Color c) { out.push_back(c); });
        return out;
    }

    friend bool operator==(const ColorSet &, const ColorSet &) = default;

private:
    void trim()
    {
        while (!words_.empty() && words_.back() == 0)
            words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

inline std::string to_string(const ColorSet & s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](Color c) {
        if (!first)
            out += ",";
        out += std::to_string(c);
        first = false;
    });
    return out + "}";
}

} // namespace recolor
