#pragma once
// Small fixed-capacity bitset used for adjacency rows and vertex sets.
// Capacity is fixed at construction; all binary ops require equal capacity.

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace clawkit {

class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    int capacity() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (w_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] |= std::uint64_t(1) << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Index of the first set bit >= from, or -1 if there is none.
    int next(int from = 0) const {
        if (from >= nbits_) return -1;
        int block = from >> 6;
        std::uint64_t cur = w_[block] & (~std::uint64_t(0) << (from & 63));
        while (true) {
            if (cur) {
                int i = (block << 6) + std::countr_zero(cur);
                return i < nbits_ ? i : -1;
            }
            if (++block >= (int)w_.size()) return -1;
            cur = w_[block];
        }
    }

    Bits& operator&=(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // this := this & ~o
    Bits& and_not(const Bits& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }

    bool operator==(const Bits& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
    bool operator<(const Bits& o) const { return w_ < o.w_; }

    bool intersects(const Bits& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bits& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = next(0); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace clawkit
