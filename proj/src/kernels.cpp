#include "fusionnet/kernels.hpp"

#include <cmath>
#include <numeric>

namespace fnet::kernels {

namespace serial {

void matmul(Cmat& c, const Cmat& x, const Cmat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: inner dim mismatch");
    c = Cmat(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i) {
        cplx* ci = &c.a[i * c.cols];
        for (std::size_t k = 0; k < x.cols; ++k) {
            const cplx xik = x(i, k);
            if (xik == cplx(0, 0)) continue;
            const cplx* yk = &y.a[k * y.cols];
            for (std::size_t j = 0; j < y.cols; ++j) ci[j] += xik * yk[j];
        }
    }
}

void dagger(Cmat& d, const Cmat& x) {
    d = Cmat(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) d(j, i) = std::conj(x(i, j));
}

void kron(Cmat& k, const Cmat& x, const Cmat& y) {
    k = Cmat(x.rows * y.rows, x.cols * y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t p = 0; p < y.rows; ++p) {
            cplx* row = &k.a[(i * y.rows + p) * k.cols];
            for (std::size_t j = 0; j < x.cols; ++j) {
                const cplx xij = x(i, j);
                const cplx* yrow = &y.a[p * y.cols];
                for (std::size_t q = 0; q < y.cols; ++q) row[j * y.cols + q] = xij * yrow[q];
            }
        }
}

cplx hs_inner(const Cmat& x, const Cmat& y) {
    if (!x.same_shape(y)) throw std::invalid_argument("hs_inner: shape mismatch");
    // fixed summation order (row by row) so the parallel variant can match it
    cplx s(0, 0);
    for (std::size_t i = 0; i < x.rows; ++i) {
        cplx r(0, 0);
        const cplx* xi = &x.a[i * x.cols];
        const cplx* yi = &y.a[i * y.cols];
        for (std::size_t j = 0; j < x.cols; ++j) r += std::conj(xi[j]) * yi[j];
        s += r;
    }
    return s;
}

void apply_commutator_gram(Cmat& g, const std::vector<Cmat>& lhs, const std::vector<Cmat>& rhs) {
    g = Cmat(lhs.size(), rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < rhs.size(); ++j) g(i, j) = serial::hs_inner(lhs[i], rhs[j]);
}

}  // namespace serial

namespace par {

void matmul(Cmat& c, const Cmat& x, const Cmat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: inner dim mismatch");
    c = Cmat(x.rows, y.cols);
    const std::int64_t nr = static_cast<std::int64_t>(x.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nr; ++i) {
        cplx* ci = &c.a[static_cast<std::size_t>(i) * c.cols];
        for (std::size_t k = 0; k < x.cols; ++k) {
            const cplx xik = x(static_cast<std::size_t>(i), k);
            if (xik == cplx(0, 0)) continue;
            const cplx* yk = &y.a[k * y.cols];
            for (std::size_t j = 0; j < y.cols; ++j) ci[j] += xik * yk[j];
        }
    }
}

void dagger(Cmat& d, const Cmat& x) {
    d = Cmat(x.cols, x.rows);
    const std::int64_t nr = static_cast<std::int64_t>(x.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < x.cols; ++j)
            d(j, static_cast<std::size_t>(i)) = std::conj(x(static_cast<std::size_t>(i), j));
}

void kron(Cmat& k, const Cmat& x, const Cmat& y) {
    k = Cmat(x.rows * y.rows, x.cols * y.cols);
    const std::int64_t nr = static_cast<std::int64_t>(k.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < nr; ++r) {
        const std::size_t i = static_cast<std::size_t>(r) / y.rows;
        const std::size_t p = static_cast<std::size_t>(r) % y.rows;
        cplx* row = &k.a[static_cast<std::size_t>(r) * k.cols];
        for (std::size_t j = 0; j < x.cols; ++j) {
            const cplx xij = x(i, j);
            const cplx* yrow = &y.a[p * y.cols];
            for (std::size_t q = 0; q < y.cols; ++q) row[j * y.cols + q] = xij * yrow[q];
        }
    }
}

cplx hs_inner(const Cmat& x, const Cmat& y) {
    if (!x.same_shape(y)) throw std::invalid_argument("hs_inner: shape mismatch");
    // per-row partial sums, accumulated in fixed row order afterwards
    std::vector<cplx> partial(x.rows, cplx(0, 0));
    const std::int64_t nr = static_cast<std::int64_t>(x.rows);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nr; ++i) {
        cplx r(0, 0);
        const cplx* xi = &x.a[static_cast<std::size_t>(i) * x.cols];
        const cplx* yi = &y.a[static_cast<std::size_t>(i) * y.cols];
        for (std::size_t j = 0; j < x.cols; ++j) r += std::conj(xi[j]) * yi[j];
        partial[static_cast<std::size_t>(i)] = r;
    }
    cplx s(0, 0);
    for (const cplx& p : partial) s += p;
    return s;
}

void apply_commutator_gram(Cmat& g, const std::vector<Cmat>& lhs, const std::vector<Cmat>& rhs) {
    g = Cmat(lhs.size(), rhs.size());
    const std::int64_t n = static_cast<std::int64_t>(lhs.size() * rhs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t t = 0; t < n; ++t) {
        const std::size_t i = static_cast<std::size_t>(t) / rhs.size();
        const std::size_t j = static_cast<std::size_t>(t) % rhs.size();
        g(i, j) = serial::hs_inner(lhs[i], rhs[j]);
    }
}

}  // namespace par

}  // namespace fnet::kernels

namespace fnet {

namespace {
// below this element count the omp runtime overhead exceeds the work
constexpr std::size_t kParThreshold = 64 * 64;
}

Cmat matmul(const Cmat& x, const Cmat& y) {
    Cmat c;
    if (x.rows * y.cols >= kParThreshold)
        kernels::par::matmul(c, x, y);
    else
        kernels::serial::matmul(c, x, y);
    return c;
}

Cmat dagger(const Cmat& x) {
    Cmat d;
    if (x.size() >= kParThreshold)
        kernels::par::dagger(d, x);
    else
        kernels::serial::dagger(d, x);
    return d;
}

Cmat transpose(const Cmat& x) {
    Cmat t(x.cols, x.rows);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
    return t;
}

Cmat conj(const Cmat& x) {
    Cmat c(x.rows, x.cols);
    for (std::size_t i = 0; i < x.size(); ++i) c.a[i] = std::conj(x.a[i]);
    return c;
}

Cmat kron(const Cmat& x, const Cmat& y) {
    Cmat k;
    if (x.size() * y.size() >= kParThreshold)
        kernels::par::kron(k, x, y);
    else
        kernels::serial::kron(k, x, y);
    return k;
}

cplx trace(const Cmat& x) {
    if (!x.is_square()) throw std::invalid_argument("trace: not square");
    cplx s(0, 0);
    for (std::size_t i = 0; i < x.rows; ++i) s += x(i, i);
    return s;
}

cplx hs_inner(const Cmat& x, const Cmat& y) {
    if (x.size() >= kParThreshold) return kernels::par::hs_inner(x, y);
    return kernels::serial::hs_inner(x, y);
}

double fro_norm(const Cmat& x) { return std::sqrt(std::abs(hs_inner(x, x).real())); }

double max_abs(const Cmat& x) {
    double m = 0;
    for (const cplx& v : x.a) m = std::max(m, std::abs(v));
    return m;
}

bool all_finite(const Cmat& x) {
    for (const cplx& v : x.a)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double commutator_norm(const Cmat& x, const Cmat& y) {
    return fro_norm(matmul(x, y) - matmul(y, x));
}

Cvec matvec(const Cmat& x, const Cvec& v) {
    if (x.cols != v.size()) throw std::invalid_argument("matvec: dim mismatch");
    Cvec w(x.rows, cplx(0, 0));
    for (std::size_t i = 0; i < x.rows; ++i) {
        cplx s(0, 0);
        const cplx* xi = &x.a[i * x.cols];
        for (std::size_t j = 0; j < x.cols; ++j) s += xi[j] * v[j];
        w[i] = s;
    }
    return w;
}

Cmat permute_legs(const Cmat& x, const std::vector<int>& dims, const std::vector<int>& perm) {
    const std::size_t n = dims.size();
    if (perm.size() != n) throw std::invalid_argument("permute_legs: perm size");
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    if (x.rows != total || x.cols != total) throw std::invalid_argument("permute_legs: dim product mismatch");

    // strides of input legs
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t k = n; k-- > 1;) stride[k - 1] = stride[k] * static_cast<std::size_t>(dims[k]);

    // output index -> input index map
    std::vector<std::size_t> map(total);
    std::vector<int> digits(n, 0);
    std::vector<int> odims(n);
    for (std::size_t k = 0; k < n; ++k) odims[k] = dims[static_cast<std::size_t>(perm[k])];
    for (std::size_t o = 0; o < total; ++o) {
        std::size_t rem = o, in = 0;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t block = 1;
            for (std::size_t l = k + 1; l < n; ++l) block *= static_cast<std::size_t>(odims[l]);
            const std::size_t dig = rem / block;
            rem %= block;
            in += dig * stride[static_cast<std::size_t>(perm[k])];
        }
        map[o] = in;
    }

    Cmat y(total, total);
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = 0; j < total; ++j) y(i, j) = x(map[i], map[j]);
    return y;
}

Cmat gram(const std::vector<Cmat>& v) {
    Cmat g;
    kernels::par::apply_commutator_gram(g, v, v);
    return g;
}

}  // namespace fnet
