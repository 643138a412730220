#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace gradpos {

/// Fixed-size dynamic bitset over 64-bit words.  Unused high bits of the last
/// word are kept zero at all times, so word-wise comparison is exact.
class DynBitset {
public:
    DynBitset() = default;

    explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const {
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

    void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t{0};
        trim();
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool any() const { return !none(); }

    bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const DynBitset& o) const { return !(*this == o); }

    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }

    DynBitset& operator^=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    /// Removes from *this every element present in o.
    DynBitset& subtract(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator^(DynBitset a, const DynBitset& b) { return a ^= b; }

    DynBitset complement_in(std::size_t n) const {
        DynBitset r(n);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    /// Index of the lowest set bit at position >= from, or -1 if none.
    int next_set_bit(std::size_t from) const {
        if (from >= n_) return -1;
        std::size_t wi = from >> 6;
        std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
        for (;;) {
            if (w) return static_cast<int>(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(wi * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
        return out;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
        for (auto w : w_) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
            h ^= h >> 33;
        }
        return static_cast<std::size_t>(h);
    }

    /// Canonical total order on same-universe sets: smaller cardinality first;
    /// ties broken at the lowest index where the sets differ, the set missing
    /// that element coming first.
    friend bool set_less(const DynBitset& a, const DynBitset& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        for (std::size_t i = 0; i < a.w_.size(); ++i) {
            std::uint64_t x = a.w_[i] ^ b.w_[i];
            if (x) {
                int bit = std::countr_zero(x);
                return !((a.w_[i] >> bit) & 1u);
            }
        }
        return false;
    }

private:
    void trim() {
        std::size_t extra = n_ & 63;
        if (extra && !w_.empty()) w_.back() &= (~std::uint64_t{0}) >> (64 - extra);
        if (n_ == 0 && !w_.empty()) w_.back() = 0;
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct DynBitsetHash {
    std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

} // namespace gradpos
