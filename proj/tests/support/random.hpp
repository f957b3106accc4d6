#pragma once
// Hand-rolled generators for property tests.

#include "semialg/poly.hpp"

#include <random>
#include <vector>

namespace semialg::testkit {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    /// Random polynomial with exact degree `deg` and coefficients in [-c, c].
    Polynomial poly(int deg, double c = 2.0) {
        std::vector<double> k(deg + 1);
        for (double& v : k) v = uniform(-c, c);
        if (std::abs(k.back()) < 0.1) k.back() = k.back() < 0 ? -0.5 : 0.5;
        return Polynomial(std::move(k));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace semialg::testkit
