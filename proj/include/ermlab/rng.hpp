#pragma once

#include <cstdint>

namespace ermlab {

// Seed for every randomized operation in the library. All sampling is a pure
// function of (inputs, seed); there is no global generator state.
struct Seed {
    std::uint64_t value = 0;

    friend bool operator==(const Seed&, const Seed&) = default;
};

// 64-bit finalizer (splitmix64 style): bijective, strong avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

// Per-stream seed: XOR the stream index into the base seed, then mix once.
constexpr Seed derive_seed(Seed base, std::uint64_t stream) {
    return Seed{mix64(base.value ^ stream)};
}

// Counter-based generator: output i depends only on (seed, i), so a stream
// can be replayed or split without carrying mutable state around.
class CounterRng {
public:
    explicit CounterRng(Seed seed) : key_(mix64(seed.value ^ 0x9e3779b97f4a7c15ull)) {}

    std::uint64_t at(std::uint64_t counter) const {
        return mix64(key_ + counter * 0x9e3779b97f4a7c15ull);
    }

    std::uint64_t next_u64() { return at(counter_++); }

    // Uniform in [0, 1), 53 significant bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound); bound > 0. Multiply-shift reduction.
    std::uint64_t next_below(std::uint64_t bound) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace ermlab
