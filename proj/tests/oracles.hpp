#pragma once

// Test-only brute-force oracles, kept independent of the library's
// structured code paths.

#include <vector>

#include "fusionnet/algebra.hpp"
#include "fusionnet/kernels.hpp"
#include "fusionnet/lapack.hpp"
#include "fusionnet/rng.hpp"

namespace fnet::oracle {

/// Orthonormal basis of {x in B(C^h) : [x, s] = 0 for all s}, via the
/// null space of the stacked commutation constraints.
inline std::vector<Cmat> brute_commutant(const std::vector<Cmat>& constraints, int h,
                                         double rtol = 1e-9) {
    const std::size_t hh = static_cast<std::size_t>(h) * h;
    Cmat s(constraints.size() * hh, hh);
    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        const Cmat& g = constraints[ci];
        // vec([x,g]) = (g ⊗ I − I ⊗ g^T) vec(x), row-major vec
        const Cmat t1 = kron(g, Cmat::identity(h));
        const Cmat t2 = kron(Cmat::identity(h), transpose(g));
        for (std::size_t r = 0; r < hh; ++r)
            for (std::size_t c = 0; c < hh; ++c) s(ci * hh + r, c) = t1(r, c) - t2(r, c);
    }
    const Cmat ns = la::nullspace(s, rtol);
    std::vector<Cmat> out;
    for (std::size_t c = 0; c < ns.cols; ++c) {
        Cmat x(h, h);
        for (std::size_t e = 0; e < hh; ++e) x.a[e] = ns(e, c);
        out.push_back(std::move(x));
    }
    return out;
}

/// Dimension of the span of a list of matrices (SVD rank).
inline int span_dim(const std::vector<Cmat>& v, double rtol = 1e-9) {
    if (v.empty()) return 0;
    const std::size_t e = v[0].size();
    Cmat m(v.size(), e);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < e; ++j) m(i, j) = v[i].a[j];
    return la::rank(m, rtol);
}

/// Dimension of the unital algebra generated by powers of a single matrix
/// (for commutative single-generator closures).
inline int power_span_dim(const Cmat& a, double rtol = 1e-9) {
    std::vector<Cmat> p{Cmat::identity(a.rows)};
    for (std::size_t k = 1; k <= a.rows; ++k) p.push_back(matmul(p.back(), a));
    return span_dim(p, rtol);
}

/// Block-diagonal direct sum.
inline Cmat direct_sum(const Cmat& x, const Cmat& y) {
    Cmat d(x.rows + y.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) d(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
        for (std::size_t j = 0; j < y.cols; ++j) d(x.rows + i, x.cols + j) = y(i, j);
    return d;
}

/// Random multi-matrix algebra with prescribed blocks on C^ambient,
/// conjugated by a Haar-ish random unitary.
inline RepresentedAlgebra random_multimatrix(Rng& rng, const std::vector<Block>& blocks,
                                             int ambient) {
    int support = 0;
    for (const Block& b : blocks) support += b.n * b.m;
    if (support != ambient) throw std::invalid_argument("random_multimatrix: block sizes");
    const Cmat u = la::polar_unitary(rng.gauss_matrix(ambient, ambient));
    std::vector<Cmat> iso;
    int off = 0;
    for (const Block& b : blocks) {
        Cmat v(ambient, static_cast<std::size_t>(b.n) * b.m);
        for (int c = 0; c < b.n * b.m; ++c)
            for (int r = 0; r < ambient; ++r)
                v(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    u(static_cast<std::size_t>(r), static_cast<std::size_t>(off + c));
        off += b.n * b.m;
        iso.push_back(std::move(v));
    }
    return RepresentedAlgebra(ambient, blocks, std::move(iso));
}

}  // namespace fnet::oracle
