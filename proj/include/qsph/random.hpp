#pragma once

#include <cstdint>

namespace qsph {

// Counter-based pseudo-random stream. The value drawn at (key, counter) is a
// pure function of both, so draws can be evaluated in any order or in
// parallel and still reproduce bit-for-bit.
class KeyedStream {
public:
    explicit KeyedStream(std::uint64_t key) : key_(key) {}

    std::uint64_t key() const { return key_; }

    // Independent child stream, e.g. one per evaluation point.
    KeyedStream derive(std::uint64_t subkey) const {
        return KeyedStream(mix(key_ ^ mix(subkey + kGolden)));
    }

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(key_ + kGolden * (counter + 1));
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

    // splitmix64 finalizer
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
};

}  // namespace qsph
