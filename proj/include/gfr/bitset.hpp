#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace gfr {

// Dynamic bit set used for adjacency rows and vertex subsets.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static Bitset from_mask(std::size_t n, std::uint64_t mask) {
        assert(n <= 64);
        Bitset b(n);
        if (!b.words_.empty()) b.words_[0] = mask;
        b.trim();
        return b;
    }

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < n_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < n_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }
    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset and_not(const Bitset& o) const {
        assert(n_ == o.n_);
        Bitset r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & ~o.words_[i];
        return r;
    }

    bool subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    std::size_t intersection_count(const Bitset& o) const {
        assert(n_ == o.n_);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && words_ == o.words_; }

    // Index of the first set bit at position > after, or -1.
    int next(int after) const {
        std::size_t start = static_cast<std::size_t>(after + 1);
        if (start >= n_) return -1;
        std::size_t wi = start >> 6;
        std::uint64_t w = words_[wi] >> (start & 63);
        if (w) return static_cast<int>(start + std::countr_zero(w));
        for (++wi; wi < words_.size(); ++wi)
            if (words_[wi]) return static_cast<int>((wi << 6) + std::countr_zero(words_[wi]));
        return -1;
    }
    int first() const { return next(-1); }

    template <class F>
    void for_each(F&& f) const {
        for (int i = first(); i >= 0; i = next(i)) f(i);
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

private:
    void trim() {
        std::size_t extra = words_.size() * 64 - n_;
        if (!words_.empty() && extra)
            words_.back() &= ~std::uint64_t{0} >> extra;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// Lexicographic order on sets viewed as ascending index sequences.
inline bool set_lex_less(const Bitset& a, const Bitset& b) {
    int ia = a.first(), ib = b.first();
    while (ia >= 0 && ib >= 0) {
        if (ia != ib) return ia < ib;
        ia = a.next(ia);
        ib = b.next(ib);
    }
    return ia < 0 && ib >= 0;
}

} // namespace gfr
