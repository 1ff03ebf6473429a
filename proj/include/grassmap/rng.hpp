#pragma once

#include "grassmap/field.hpp"

#include <cstdint>

namespace grassmap {

/// Deterministic splitmix64 generator. Streams are derived from a master
/// seed and up to three stream indices, so independent trials reproduce
/// bit-for-bit regardless of execution order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound);

    Scalar element(const PrimeField& f) { return below(f.modulus()); }

    static Rng stream(std::uint64_t master, std::uint64_t a,
                      std::uint64_t b = 0, std::uint64_t c = 0);

private:
    std::uint64_t state_;
};

} // namespace grassmap
