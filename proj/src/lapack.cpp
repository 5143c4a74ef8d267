#include "fusionnet/lapack.hpp"

#include <algorithm>
#include <cmath>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "fusionnet/kernels.hpp"

namespace fnet::la {

namespace {

void fix_column_phases(Cmat& m) {
    for (std::size_t j = 0; j < m.cols; ++j) {
        double best = 0;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < m.rows; ++i) {
            const double v = std::abs(m(i, j));
            if (v > best + 1e-14) {
                best = v;
                bi = i;
            }
        }
        if (best == 0) continue;
        const cplx ph = m(bi, j) / best;
        const cplx inv = std::conj(ph);
        for (std::size_t i = 0; i < m.rows; ++i) m(i, j) *= inv;
    }
}

}  // namespace

HermEig heig(const Cmat& h) {
    if (!h.is_square()) throw std::invalid_argument("heig: not square");
    const lapack_int n = static_cast<lapack_int>(h.rows);
    HermEig out;
    out.evals.assign(h.rows, 0.0);
    out.evecs = h;
    if (n == 0) return out;
    const lapack_int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'V', 'U', n,
                                           out.evecs.a.data(), n, out.evals.data());
    if (info != 0) throw std::runtime_error("zheevd failed, info=" + std::to_string(info));
    fix_column_phases(out.evecs);
    return out;
}

Svd svd(const Cmat& a) {
    const lapack_int m = static_cast<lapack_int>(a.rows);
    const lapack_int n = static_cast<lapack_int>(a.cols);
    const lapack_int k = std::min(m, n);
    Svd out;
    out.s.assign(static_cast<std::size_t>(k), 0.0);
    out.u = Cmat(a.rows, static_cast<std::size_t>(k));
    out.vh = Cmat(static_cast<std::size_t>(k), a.cols);
    if (k == 0) return out;
    Cmat work = a;
    const lapack_int info = LAPACKE_zgesdd(LAPACK_ROW_MAJOR, 'S', m, n, work.a.data(), n,
                                           out.s.data(), out.u.a.data(), k, out.vh.a.data(), n);
    if (info != 0) throw std::runtime_error("zgesdd failed, info=" + std::to_string(info));
    // phase convention: fix u columns, compensate in vh rows
    for (std::size_t j = 0; j < out.u.cols; ++j) {
        double best = 0;
        std::size_t bi = 0;
        for (std::size_t i = 0; i < out.u.rows; ++i) {
            const double v = std::abs(out.u(i, j));
            if (v > best + 1e-14) {
                best = v;
                bi = i;
            }
        }
        if (best == 0) continue;
        const cplx ph = out.u(bi, j) / best;
        const cplx inv = std::conj(ph);
        for (std::size_t i = 0; i < out.u.rows; ++i) out.u(i, j) *= inv;
        for (std::size_t c = 0; c < out.vh.cols; ++c) out.vh(j, c) *= ph;
    }
    return out;
}

int rank(const Cmat& a, double rtol) {
    if (a.rows == 0 || a.cols == 0) return 0;
    const Svd d = svd(a);
    if (d.s.empty() || d.s[0] == 0) return 0;
    const double thr = rtol * d.s[0];
    int r = 0;
    for (double s : d.s)
        if (s > thr) ++r;
    return r;
}

Cmat nullspace(const Cmat& a, double rtol) {
    if (a.cols == 0) return Cmat(0, 0);
    if (a.rows == 0) return Cmat::identity(a.cols);
    // zgesdd with 'S' only returns min(m,n) right vectors; pad constraint
    // matrix with zero rows when underdetermined so all of C^n is covered.
    Cmat work = a;
    if (a.rows < a.cols) {
        work = Cmat(a.cols, a.cols);
        for (std::size_t i = 0; i < a.rows; ++i)
            for (std::size_t j = 0; j < a.cols; ++j) work(i, j) = a(i, j);
    }
    const Svd d = svd(work);
    const double smax = d.s.empty() ? 0.0 : d.s[0];
    const double thr = rtol * std::max(smax, 1e-300);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < d.s.size(); ++i)
        if (smax == 0 || d.s[i] <= thr) keep.push_back(i);
    Cmat ns(a.cols, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t r = 0; r < a.cols; ++r) ns(r, c) = std::conj(d.vh(keep[c], r));
    return ns;
}

Cmat lstsq(const Cmat& a, const Cmat& b, double rtol) {
    if (a.rows != b.rows) throw std::invalid_argument("lstsq: row mismatch");
    const Svd d = svd(a);
    const double smax = d.s.empty() ? 0.0 : d.s[0];
    const double thr = rtol * std::max(smax, 1e-300);
    // x = v s^+ u^* b
    Cmat ub = matmul(dagger(d.u), b);
    for (std::size_t i = 0; i < d.s.size(); ++i) {
        const cplx f = (d.s[i] > thr) ? cplx(1.0 / d.s[i], 0) : cplx(0, 0);
        for (std::size_t j = 0; j < ub.cols; ++j) ub(i, j) *= f;
    }
    return matmul(dagger(d.vh), ub);
}

Cmat polar_unitary(const Cmat& a) {
    if (!a.is_square()) throw std::invalid_argument("polar_unitary: not square");
    const Svd d = svd(a);
    return matmul(d.u, d.vh);
}

Cmat solve(const Cmat& a, const Cmat& b) {
    if (!a.is_square() || a.rows != b.rows) throw std::invalid_argument("solve: shape mismatch");
    const lapack_int n = static_cast<lapack_int>(a.rows);
    const lapack_int nrhs = static_cast<lapack_int>(b.cols);
    Cmat lu = a, x = b;
    std::vector<lapack_int> ipiv(a.rows);
    const lapack_int info = LAPACKE_zgesv(LAPACK_ROW_MAJOR, n, nrhs, lu.a.data(), n,
                                          ipiv.data(), x.a.data(), nrhs);
    if (info != 0) throw std::runtime_error("zgesv failed, info=" + std::to_string(info));
    return x;
}

Cmat inverse(const Cmat& a) { return solve(a, Cmat::identity(a.rows)); }

double op_norm(const Cmat& a) {
    if (a.rows == 0 || a.cols == 0) return 0;
    const Svd d = svd(a);
    return d.s.empty() ? 0.0 : d.s[0];
}

double min_sv(const Cmat& a) {
    if (a.rows == 0 || a.cols == 0) return 0;
    const Svd d = svd(a);
    return d.s.empty() ? 0.0 : d.s.back();
}

}  // namespace fnet::la
