#pragma once

#include <cmath>
#include <cstdint>

#include "fusionnet/cmat.hpp"

namespace fnet {

/// splitmix64-based generator; self-contained so streams are reproducible
/// across platforms and standard library versions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [0,1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// standard normal via Box-Muller
    double normal() {
        double u1 = uniform();
        while (u1 <= 0) u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    cplx gauss() { return cplx(normal(), normal()); }

    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    Cmat gauss_matrix(std::size_t r, std::size_t c) {
        Cmat m(r, c);
        for (auto& v : m.a) v = gauss();
        return m;
    }

    /// Fork a child stream; decouples nested draws from draw order.
    Rng fork(std::uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL));
    }
};

}  // namespace fnet
