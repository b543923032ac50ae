#pragma once

#include <cstdint>
#include <random>

#include "kac/linalg.hpp"

namespace kac {

// Seeded generator whose output does not depend on the standard library's
// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double gauss();
    cd cgauss() { return {gauss(), gauss()}; }
    Vec cvec(int n);
    Mat cmat(int r, int c);
    Mat unitary(int n);
    std::uint64_t next() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace kac
