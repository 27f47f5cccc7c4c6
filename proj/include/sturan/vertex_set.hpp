#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>

namespace sturan {

/// Maximum number of vertices a Graph can hold.
inline constexpr int kMaxVertices = 128;

/// Fixed-width bit set over vertex indices [0, kMaxVertices).
class VertexSet
{
public:
    static constexpr int kWords = kMaxVertices / 64;

    constexpr VertexSet() = default;

    /// The set {0, 1, ..., n-1}.
    static constexpr VertexSet range(int n)
    {
        VertexSet s;
        for (int w = 0; w < kWords && n > 0; ++w, n -= 64)
            s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return s;
    }

    static constexpr VertexSet single(int v)
    {
        VertexSet s;
        s.set(v);
        return s;
    }

    constexpr void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    constexpr void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    constexpr bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

    constexpr int count() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    constexpr bool empty() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    constexpr int first() const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] != 0)
                return w * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    constexpr int next(int v) const
    {
        ++v;
        if (v >= kMaxVertices)
            return -1;
        int w = v >> 6;
        std::uint64_t rest = words_[w] & (~std::uint64_t{0} << (v & 63));
        while (true) {
            if (rest != 0)
                return w * 64 + std::countr_zero(rest);
            if (++w == kWords)
                return -1;
            rest = words_[w];
        }
    }

    constexpr bool intersects(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w])
                return true;
        return false;
    }

    constexpr bool subset_of(const VertexSet& o) const
    {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w])
                return false;
        return true;
    }

    constexpr VertexSet& operator&=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    constexpr VertexSet& operator|=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    constexpr VertexSet& operator^=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] ^= o.words_[w];
        return *this;
    }
    /// Set difference.
    constexpr VertexSet& operator-=(const VertexSet& o)
    {
        for (int w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Orders sets by their high word first, i.e. as big unsigned integers.
    friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b)
    {
        for (int w = kWords - 1; w >= 0; --w)
            if (a.words_[w] != b.words_[w])
                return a.words_[w] <=> b.words_[w];
        return std::strong_ordering::equal;
    }

    constexpr std::uint64_t word(int w) const { return words_[w]; }

    class iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
        constexpr int operator*() const { return v_; }
        constexpr iterator& operator++()
        {
            v_ = set_->next(v_);
            return *this;
        }
        constexpr iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }
        friend constexpr bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

    private:
        const VertexSet* set_ = nullptr;
        int v_ = -1;
    };

    constexpr iterator begin() const { return {this, first()}; }
    constexpr iterator end() const { return {this, -1}; }

private:
    std::array<std::uint64_t, kWords> words_{};
};

} // namespace sturan
