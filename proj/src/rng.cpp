#include "grassmap/rng.hpp"

#include <stdexcept>

namespace grassmap {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    std::uint64_t z = (h ^ v) + 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("zero bound");
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

Rng Rng::stream(std::uint64_t master, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t h = master;
    h = mix(h, a + 1);
    h = mix(h, b + 1);
    h = mix(h, c + 1);
    return Rng(h);
}

} // namespace grassmap
