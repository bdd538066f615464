// Deterministic seeded sampling for the randomized identity checks.
// std::uniform_real_distribution is implementation-defined, so doubles are
// built from the raw 64-bit stream directly; the same seed yields the same
// sample sequence on every platform.
#ifndef CRITLINE_RNG_HPP
#define CRITLINE_RNG_HPP

#include <cstdint>
#include <random>

namespace critline {

class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    std::uint64_t next_u64() { return gen_(); }

private:
    std::mt19937_64 gen_;
};

} // namespace critline

#endif
