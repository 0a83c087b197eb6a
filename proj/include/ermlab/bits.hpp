#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ermlab {

// Fixed-size bit vector. Bit 0 is the least significant position; when a
// Bits value encodes a point of {0,1}^n, bit i holds variable i.
// The first 64 bits live inline, so vectors of dimension <= 64 never touch
// the heap. Unused high bits of the last word are kept at zero.
class Bits {
public:
    Bits() = default;

    explicit Bits(int size) : size_(checked_size(size)) {
        if (word_count() > 1) rest_.assign(static_cast<std::size_t>(word_count()) - 1, 0);
    }

    static Bits from_u64(int size, std::uint64_t value) {
        Bits b(size);
        if (size < 64 && (value >> size) != 0)
            throw std::invalid_argument("Bits::from_u64: value does not fit in " + std::to_string(size) + " bits");
        b.w0_ = value & b.word_mask(0);
        return b;
    }

    static Bits ones(int size) {
        Bits b(size);
        for (int w = 0; w < b.word_count(); ++w) b.word_ref(w) = b.word_mask(w);
        return b;
    }

    int size() const { return size_; }

    bool test(int i) const {
        check_index(i);
        return (word(i >> 6) >> (i & 63)) & 1u;
    }

    void set(int i, bool value = true) {
        check_index(i);
        std::uint64_t& w = word_ref(i >> 6);
        const std::uint64_t m = std::uint64_t{1} << (i & 63);
        if (value) w |= m; else w &= ~m;
    }

    int count() const {
        int c = std::popcount(w0_);
        for (std::uint64_t w : rest_) c += std::popcount(w);
        return c;
    }

    bool none() const {
        if (w0_ != 0) return false;
        for (std::uint64_t w : rest_) if (w != 0) return false;
        return true;
    }

    bool any() const { return !none(); }

    // this & ~other == 0
    bool subset_of(const Bits& other) const {
        check_same_size(other);
        if ((w0_ & ~other.w0_) != 0) return false;
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if ((rest_[i] & ~other.rest_[i]) != 0) return false;
        return true;
    }

    bool intersects(const Bits& other) const {
        check_same_size(other);
        if ((w0_ & other.w0_) != 0) return true;
        for (std::size_t i = 0; i < rest_.size(); ++i)
            if ((rest_[i] & other.rest_[i]) != 0) return true;
        return false;
    }

    Bits& operator&=(const Bits& other) {
        check_same_size(other);
        w0_ &= other.w0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] &= other.rest_[i];
        return *this;
    }

    Bits& operator|=(const Bits& other) {
        check_same_size(other);
        w0_ |= other.w0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] |= other.rest_[i];
        return *this;
    }

    // this &= ~other
    Bits& and_not(const Bits& other) {
        check_same_size(other);
        w0_ &= ~other.w0_;
        for (std::size_t i = 0; i < rest_.size(); ++i) rest_[i] &= ~other.rest_[i];
        return *this;
    }

    // Requires size() <= 64.
    std::uint64_t as_u64() const {
        if (size_ > 64) throw std::logic_error("Bits::as_u64: size exceeds 64");
        return w0_;
    }

    friend bool operator==(const Bits&, const Bits&) = default;

    // Integer order of the bit pattern; sizes must match.
    static int compare(const Bits& a, const Bits& b) {
        a.check_same_size(b);
        for (int w = a.word_count() - 1; w >= 0; --w) {
            if (a.word(w) != b.word(w)) return a.word(w) < b.word(w) ? -1 : 1;
        }
        return 0;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull ^ static_cast<std::uint64_t>(size_);
        auto mixin = [&h](std::uint64_t w) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        };
        mixin(w0_);
        for (std::uint64_t w : rest_) mixin(w);
        return h;
    }

    // "x1=v1 x2=v2 ..." rendered LSB first as a plain 0/1 string.
    std::string to_string() const {
        std::string s;
        s.reserve(static_cast<std::size_t>(size_));
        for (int i = 0; i < size_; ++i) s.push_back(test(i) ? '1' : '0');
        return s;
    }

private:
    int size_ = 0;
    std::uint64_t w0_ = 0;
    std::vector<std::uint64_t> rest_;

    static int checked_size(int size) {
        if (size < 0) throw std::invalid_argument("Bits: negative size");
        return size;
    }

    void check_index(int i) const {
        if (i < 0 || i >= size_) throw std::out_of_range("Bits: index " + std::to_string(i) + " out of range for size " + std::to_string(size_));
    }

    void check_same_size(const Bits& other) const {
        if (size_ != other.size_)
            throw std::invalid_argument("Bits: size mismatch (" + std::to_string(size_) + " vs " + std::to_string(other.size_) + ")");
    }

    int word_count() const { return (size_ + 63) / 64; }

    std::uint64_t word(int w) const { return w == 0 ? w0_ : rest_[static_cast<std::size_t>(w) - 1]; }

    std::uint64_t& word_ref(int w) { return w == 0 ? w0_ : rest_[static_cast<std::size_t>(w) - 1]; }

    // Mask of valid bits within word w.
    std::uint64_t word_mask(int w) const {
        const int last = word_count() - 1;
        if (w < last) return ~std::uint64_t{0};
        const int used = size_ - 64 * last;
        return used == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << used) - 1);
    }
};

} // namespace ermlab
