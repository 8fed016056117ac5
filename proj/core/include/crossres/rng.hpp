#ifndef CROSSRES_RNG_HPP
#define CROSSRES_RNG_HPP

#include <cstdint>

namespace crossres {

// Deterministic splitmix64 generator.  Integer-only so that seeded runs
// produce byte-identical reports on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n >= 1.
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool coin() { return (next() & 1u) != 0; }

    // Geometric count with success probability 1/denom, capped.
    int geometric(int denom, int cap) {
        int k = 0;
        while (k < cap && below(denom) != 0) ++k;
        return k;
    }

private:
    std::uint64_t state_;
};

}  // namespace crossres

#endif
