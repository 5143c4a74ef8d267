#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fnet {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major.
struct Cmat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> a;

    Cmat() = default;
    Cmat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, cplx(0, 0)) {}

    static Cmat identity(std::size_t n) {
        Cmat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::size_t size() const { return a.size(); }
    bool is_square() const { return rows == cols; }

    bool same_shape(const Cmat& o) const { return rows == o.rows && cols == o.cols; }

    Cmat& operator+=(const Cmat& o) {
        if (!same_shape(o)) throw std::invalid_argument("Cmat += shape mismatch");
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }
    Cmat& operator-=(const Cmat& o) {
        if (!same_shape(o)) throw std::invalid_argument("Cmat -= shape mismatch");
        for (std::size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
        return *this;
    }
    Cmat& operator*=(cplx s) {
        for (auto& x : a) x *= s;
        return *this;
    }

    friend Cmat operator+(Cmat x, const Cmat& y) { return x += y; }
    friend Cmat operator-(Cmat x, const Cmat& y) { return x -= y; }
    friend Cmat operator*(cplx s, Cmat x) { return x *= s; }
    friend Cmat operator*(Cmat x, cplx s) { return x *= s; }
};

using Cvec = std::vector<cplx>;

}  // namespace fnet
