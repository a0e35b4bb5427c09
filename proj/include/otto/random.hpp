// Seeded uniform draws with platform-independent output (the standard
// distributions are implementation-defined, so doubles are built from
// raw engine bits instead).

#pragma once

#include <cstdint>
#include <random>

namespace otto {

class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : eng_(seed) {}

    double unit() { return (eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 eng_;
};

}  // namespace otto
