#include "fusionnet/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "fusionnet/lapack.hpp"

namespace fnet {

namespace {

constexpr std::size_t kDenseCap = std::size_t(8) << 20;  // complex entries

void check_dense_budget(std::size_t count, std::size_t elem, const char* what) {
    if (count * elem > kDenseCap)
        throw std::runtime_error(std::string(what) + ": dense materialization over budget");
}

Cmat clock_matrix(int n) {  // Z
    Cmat z(n, n);
    for (int i = 0; i < n; ++i) {
        const double th = 2.0 * 3.14159265358979323846 * i / n;
        z(i, i) = cplx(std::cos(th), std::sin(th));
    }
    return z;
}

Cmat shift_matrix(int n) {  // X: e_i -> e_{i+1}
    Cmat x(n, n);
    for (int i = 0; i < n; ++i) x((i + 1) % n, i) = 1.0;
    return x;
}

Cmat matrix_unit(int n, int p, int q) {
    Cmat e(n, n);
    e(p, q) = 1.0;
    return e;
}

Cmat kron_with_id(const Cmat& xi, int m) {
    if (m == 1) return xi;
    return kron(xi, Cmat::identity(m));
}

Cmat partial_trace_second(const Cmat& c, int n, int m) {
    Cmat xi(n, n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            cplx s(0, 0);
            for (int a = 0; a < m; ++a) s += c(p * m + a, q * m + a);
            xi(p, q) = s;
        }
    return xi;
}

/// Reorders the column index of v, viewed as a multi-index over `dims`;
/// perm[k] names the input leg placed at output slot k.
Cmat permute_cols_legs(const Cmat& v, const std::vector<int>& dims, const std::vector<int>& perm) {
    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    if (v.cols != total) throw std::invalid_argument("permute_cols_legs: dim mismatch");
    const std::size_t nl = dims.size();
    std::vector<std::size_t> stride(nl, 1);
    for (std::size_t k = nl; k-- > 1;) stride[k - 1] = stride[k] * static_cast<std::size_t>(dims[k]);
    std::vector<int> odims(nl);
    for (std::size_t k = 0; k < nl; ++k) odims[k] = dims[static_cast<std::size_t>(perm[k])];
    Cmat out(v.rows, total);
    for (std::size_t oc = 0; oc < total; ++oc) {
        std::size_t rem = oc, ic = 0;
        for (std::size_t k = 0; k < nl; ++k) {
            std::size_t block = 1;
            for (std::size_t l = k + 1; l < nl; ++l) block *= static_cast<std::size_t>(odims[l]);
            const std::size_t dig = rem / block;
            rem %= block;
            ic += dig * stride[static_cast<std::size_t>(perm[k])];
        }
        for (std::size_t r = 0; r < v.rows; ++r) out(r, oc) = v(r, ic);
    }
    return out;
}

/// Modified Gram-Schmidt append with re-orthogonalization. Candidates are
/// normalized first, so the drop rule "residual <= tol" matches the
/// singular-value threshold tol * s_max of the stacked system.
bool mgs_append(std::vector<Cmat>& basis, Cmat cand, double tol) {
    const double nrm = fro_norm(cand);
    if (nrm <= tol) return false;
    cand *= cplx(1.0 / nrm, 0);
    for (int pass = 0; pass < 2; ++pass)
        for (const Cmat& b : basis) {
            const cplx c = hs_inner(b, cand);
            if (c != cplx(0, 0)) cand -= c * b;
        }
    const double res = fro_norm(cand);
    if (res <= tol) return false;
    cand *= cplx(1.0 / res, 0);
    basis.push_back(std::move(cand));
    return true;
}

std::vector<std::size_t> cluster_by_gap(const std::vector<double>& sorted_vals, double gap) {
    // returns start indices of clusters
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < sorted_vals.size(); ++i)
        if (i == 0 || sorted_vals[i] - sorted_vals[i - 1] > gap) starts.push_back(i);
    return starts;
}

struct SplitResult {
    std::vector<Block> blocks;
    std::vector<Cmat> isometries;
};

/// Splits a factor representation pi of M_n on C^w (w = n*c) into legs:
/// returns isometry C^n ⊗ C^c -> C^w. `unit_image` maps the matrix unit
/// e_pq to its image.
Cmat split_factor_action(int n, int w,
                         const std::function<Cmat(int, int)>& unit_image, double tol) {
    const int c = w / n;
    if (n * c != w) throw std::runtime_error("split_factor_action: dimension not divisible");
    if (n == 1) {
        Cmat id = Cmat::identity(w);
        return id;
    }
    // graded eigenspaces of pi(diag(0..n-1))
    Cmat y(w, w);
    for (int j = 0; j < n; ++j) y += cplx(j, 0) * unit_image(j, j);
    la::HermEig eg = la::heig(y);
    std::vector<Cmat> f(n, Cmat(w, c));
    std::vector<int> fill(n, 0);
    for (int k = 0; k < w; ++k) {
        const int j = static_cast<int>(std::llround(eg.evals[k]));
        if (j < 0 || j >= n || std::abs(eg.evals[k] - j) > 0.25)
            throw std::runtime_error("split_factor_action: grading eigenvalues off-integer");
        if (fill[j] >= c) throw std::runtime_error("split_factor_action: uneven grading");
        for (int r = 0; r < w; ++r) f[j](r, fill[j]) = eg.evecs(r, k);
        ++fill[j];
    }
    Cmat wmat(w, w);
    for (int j = 0; j < n; ++j) {
        Cmat uj;
        if (j == 0) {
            uj = Cmat::identity(c);
        } else {
            // pi(e_j0) maps grade 0 to grade j isometrically
            uj = matmul(dagger(f[j]), matmul(unit_image(j, 0), f[0]));
            uj = la::polar_unitary(uj);
        }
        const Cmat col = matmul(f[j], uj);
        for (int a = 0; a < c; ++a)
            for (int r = 0; r < w; ++r) wmat(r, j * c + a) = col(r, a);
    }
    // sanity: the grading element must be diagonal in the new coordinates
    (void)tol;
    return wmat;
}

}  // namespace

// ---------------------------------------------------------------------------
// RepresentedAlgebra

RepresentedAlgebra::RepresentedAlgebra(int ambient, std::vector<Block> blocks,
                                       std::vector<Cmat> isometries)
    : ambient_(ambient), blocks_(std::move(blocks)), isometries_(std::move(isometries)) {
    if (blocks_.size() != isometries_.size())
        throw std::invalid_argument("RepresentedAlgebra: blocks/isometries mismatch");
    long support = 0;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        const Block& b = blocks_[i];
        if (b.n <= 0 || b.m <= 0) throw std::invalid_argument("RepresentedAlgebra: bad block");
        if (isometries_[i].rows != static_cast<std::size_t>(ambient_) ||
            isometries_[i].cols != static_cast<std::size_t>(b.n) * b.m)
            throw std::invalid_argument("RepresentedAlgebra: isometry shape");
        support += static_cast<long>(b.n) * b.m;
    }
    if (support != ambient_)
        throw std::invalid_argument("RepresentedAlgebra: representation not unital (sum n_i m_i != ambient)");
}

RepresentedAlgebra RepresentedAlgebra::full_matrix(int n) {
    return RepresentedAlgebra(n, {Block{n, 1}}, {Cmat::identity(n)});
}

RepresentedAlgebra RepresentedAlgebra::scalars(int ambient) {
    return RepresentedAlgebra(ambient, {Block{1, ambient}}, {Cmat::identity(ambient)});
}

RepresentedAlgebra RepresentedAlgebra::diagonal(int n) {
    std::vector<Block> b(n, Block{1, 1});
    std::vector<Cmat> iso;
    for (int i = 0; i < n; ++i) {
        Cmat v(n, 1);
        v(i, 0) = 1.0;
        iso.push_back(std::move(v));
    }
    return RepresentedAlgebra(n, std::move(b), std::move(iso));
}

int RepresentedAlgebra::dim() const {
    int d = 0;
    for (const Block& b : blocks_) d += b.n * b.n;
    return d;
}

int RepresentedAlgebra::support_rank() const {
    int d = 0;
    for (const Block& b : blocks_) d += b.n * b.m;
    return d;
}

bool RepresentedAlgebra::is_abelian() const {
    for (const Block& b : blocks_)
        if (b.n > 1) return false;
    return true;
}

Cmat RepresentedAlgebra::central_projection(int i) const {
    const Cmat& v = isometries_[static_cast<std::size_t>(i)];
    return matmul(v, dagger(v));
}

Cmat RepresentedAlgebra::unit() const { return Cmat::identity(ambient_); }

Cmat RepresentedAlgebra::element(int i, const Cmat& xi) const {
    const Block& b = blocks_[static_cast<std::size_t>(i)];
    const Cmat& v = isometries_[static_cast<std::size_t>(i)];
    return matmul(v, matmul(kron_with_id(xi, b.m), dagger(v)));
}

Cmat RepresentedAlgebra::element(const std::vector<Cmat>& xi) const {
    Cmat x(ambient_, ambient_);
    for (int i = 0; i < num_blocks(); ++i) x += element(i, xi[static_cast<std::size_t>(i)]);
    return x;
}

Cmat RepresentedAlgebra::coord(int i, const Cmat& x) const {
    const Block& b = blocks_[static_cast<std::size_t>(i)];
    const Cmat& v = isometries_[static_cast<std::size_t>(i)];
    Cmat c = matmul(dagger(v), matmul(x, v));
    Cmat xi = partial_trace_second(c, b.n, b.m);
    xi *= cplx(1.0 / b.m, 0);
    return xi;
}

std::vector<Cmat> RepresentedAlgebra::coords(const Cmat& x) const {
    std::vector<Cmat> out;
    for (int i = 0; i < num_blocks(); ++i) out.push_back(coord(i, x));
    return out;
}

Cmat RepresentedAlgebra::expect(const Cmat& x) const {
    Cmat e(ambient_, ambient_);
    for (int i = 0; i < num_blocks(); ++i) e += element(i, coord(i, x));
    return e;
}

double RepresentedAlgebra::membership_residual(const Cmat& x) const {
    const Cmat e = expect(x);
    return fro_norm(x - e) / std::max(1.0, fro_norm(x));
}

std::vector<Cmat> RepresentedAlgebra::standard_generators() const {
    std::vector<Cmat> g;
    for (int i = 0; i < num_blocks(); ++i) {
        const Block& b = blocks_[static_cast<std::size_t>(i)];
        if (b.n == 1) {
            g.push_back(central_projection(i));
        } else {
            g.push_back(element(i, shift_matrix(b.n)));
            g.push_back(element(i, clock_matrix(b.n)));
        }
    }
    return g;
}

const std::vector<Cmat>& RepresentedAlgebra::generators() const {
    if (generators_.empty()) {
        // cache lazily would need mutability; callers tolerate recompute
        const_cast<RepresentedAlgebra*>(this)->generators_ = standard_generators();
    }
    return generators_;
}

std::vector<double> RepresentedAlgebra::trace_weights() const {
    double s = 0;
    for (const Block& b : blocks_) s += static_cast<double>(b.n) * b.n;
    std::vector<double> w;
    for (const Block& b : blocks_) w.push_back(b.n / s);
    return w;
}

cplx RepresentedAlgebra::canonical_trace(const Cmat& x) const {
    const std::vector<double> w = trace_weights();
    cplx t(0, 0);
    for (int i = 0; i < num_blocks(); ++i) t += w[static_cast<std::size_t>(i)] * trace(coord(i, x));
    return t;
}

std::vector<Cmat> RepresentedAlgebra::hs_basis() const {
    check_dense_budget(static_cast<std::size_t>(dim()),
                       static_cast<std::size_t>(ambient_) * ambient_, "hs_basis");
    std::vector<Cmat> out;
    for (int i = 0; i < num_blocks(); ++i) {
        const Block& b = blocks_[static_cast<std::size_t>(i)];
        const double nrm = 1.0 / std::sqrt(static_cast<double>(b.m));
        for (int p = 0; p < b.n; ++p)
            for (int q = 0; q < b.n; ++q)
                out.push_back(element(i, matrix_unit(b.n, p, q) * cplx(nrm, 0)));
    }
    return out;
}

std::vector<Cmat> RepresentedAlgebra::tau_basis() const {
    check_dense_budget(static_cast<std::size_t>(dim()),
                       static_cast<std::size_t>(ambient_) * ambient_, "tau_basis");
    double s = 0;
    for (const Block& b : blocks_) s += static_cast<double>(b.n) * b.n;
    std::vector<Cmat> out;
    for (int i = 0; i < num_blocks(); ++i) {
        const Block& b = blocks_[static_cast<std::size_t>(i)];
        const double nrm = std::sqrt(s / b.n);
        for (int p = 0; p < b.n; ++p)
            for (int q = 0; q < b.n; ++q)
                out.push_back(element(i, matrix_unit(b.n, p, q) * cplx(nrm, 0)));
    }
    return out;
}

double RepresentedAlgebra::structure_residual() const {
    double r = 0;
    Cmat sum(ambient_, ambient_);
    for (int i = 0; i < num_blocks(); ++i) {
        const Cmat& vi = isometries_[static_cast<std::size_t>(i)];
        r = std::max(r, fro_norm(matmul(dagger(vi), vi) - Cmat::identity(vi.cols)));
        for (int j = 0; j < i; ++j) {
            const Cmat& vj = isometries_[static_cast<std::size_t>(j)];
            r = std::max(r, fro_norm(matmul(dagger(vi), vj)));
        }
        sum += central_projection(i);
    }
    r = std::max(r, fro_norm(sum - Cmat::identity(ambient_)));
    return r;
}

// ---------------------------------------------------------------------------
// Wedderburn decomposition of an orthonormal span

namespace {

struct WedderburnOut {
    std::vector<Block> blocks;
    std::vector<Cmat> isometries;
};

/// basis: HS-orthonormal span of a *-closed unital algebra on C^h.
WedderburnOut wedderburn_from_basis(const std::vector<Cmat>& basis, int h, Tol tol,
                                    std::uint64_t seed) {
    Rng rng(seed ^ 0x5743d3b6a9c1e57fULL);
    const std::size_t k = basis.size();

    // --- center: probe constraints, verified and refined to exactness ---
    std::vector<const Cmat*> constraints;
    std::vector<Cmat> probes;
    for (int t = 0; t < 2; ++t) {
        Cmat p(h, h);
        for (const Cmat& b : basis) {
            const cplx c = rng.gauss();
            p += c * b;
        }
        Cmat q = p + dagger(p);
        probes.push_back(std::move(q));
    }
    std::vector<Cmat> center_elements;
    for (int round = 0; round < 8; ++round) {
        // constraint matrix: rows stack vec([b_i, probe_p]) per probe
        const std::size_t hh = static_cast<std::size_t>(h) * h;
        Cmat s(probes.size() * hh, k);
        for (std::size_t pi = 0; pi < probes.size(); ++pi)
            for (std::size_t i = 0; i < k; ++i) {
                const Cmat c = matmul(basis[i], probes[pi]) - matmul(probes[pi], basis[i]);
                for (std::size_t e = 0; e < hh; ++e) s(pi * hh + e, i) = c.a[e];
            }
        const Cmat ns = la::nullspace(s, tol.eps);
        center_elements.clear();
        for (std::size_t c = 0; c < ns.cols; ++c) {
            Cmat x(h, h);
            for (std::size_t i = 0; i < k; ++i) x += ns(i, c) * basis[i];
            center_elements.push_back(std::move(x));
        }
        // verify candidates commute with the whole basis
        double worst = 0;
        std::size_t worst_idx = 0;
        for (const Cmat& x : center_elements)
            for (std::size_t i = 0; i < k; ++i) {
                const double r = commutator_norm(x, basis[i]);
                if (r > worst) {
                    worst = r;
                    worst_idx = i;
                }
            }
        if (worst <= 100 * tol.eps) break;
        probes.push_back(basis[worst_idx] + dagger(basis[worst_idx]));
        Cmat im = cplx(0, 1) * (basis[worst_idx] - dagger(basis[worst_idx]));
        probes.push_back(std::move(im));
        if (round == 7) throw std::runtime_error("wedderburn: center refinement failed");
    }

    const std::size_t zdim = center_elements.size();
    if (zdim == 0) throw std::runtime_error("wedderburn: empty center (no unit in span?)");

    // --- split into central eigenspaces of a random self-adjoint central element ---
    std::vector<Cmat> zsa;
    for (const Cmat& c : center_elements) {
        zsa.push_back((c + dagger(c)) * cplx(0.5, 0));
        zsa.push_back((c - dagger(c)) * cplx(0, -0.5));
    }
    std::vector<Cmat> ranges;      // per block: h x r_i isometry
    std::vector<double> clusterpos;
    for (int attempt = 0; attempt < 24; ++attempt) {
        Cmat zc(h, h);
        for (const Cmat& z : zsa) zc += cplx(rng.normal(), 0) * z;
        la::HermEig eg = la::heig(zc);
        double scale = 1.0;
        for (double v : eg.evals) scale = std::max(scale, std::abs(v));
        const std::vector<std::size_t> starts = cluster_by_gap(eg.evals, tol.gap() * scale);
        if (starts.size() != zdim) continue;
        ranges.clear();
        clusterpos.clear();
        for (std::size_t ci = 0; ci < starts.size(); ++ci) {
            const std::size_t lo = starts[ci];
            const std::size_t hi = (ci + 1 < starts.size()) ? starts[ci + 1] : eg.evals.size();
            Cmat r(h, hi - lo);
            for (std::size_t cc = lo; cc < hi; ++cc)
                for (int rr = 0; rr < h; ++rr)
                    r(static_cast<std::size_t>(rr), cc - lo) = eg.evecs(static_cast<std::size_t>(rr), cc);
            ranges.push_back(std::move(r));
            clusterpos.push_back(eg.evals[lo]);
        }
        break;
    }
    if (ranges.size() != zdim)
        throw std::runtime_error("wedderburn: spectral-gap failure; retry with a new seed or smaller tolerance");

    // --- per central block: factor split ---
    WedderburnOut out;
    for (std::size_t ci = 0; ci < zdim; ++ci) {
        const Cmat& r = ranges[ci];
        const int ri = static_cast<int>(r.cols);
        // compressed orthonormal basis of z_i A
        std::vector<Cmat> comp;
        const Cmat rd = dagger(r);
        for (const Cmat& b : basis) {
            Cmat c = matmul(rd, matmul(b, r));
            mgs_append(comp, std::move(c), 10 * tol.eps);
        }
        const int ki = static_cast<int>(comp.size());
        const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(ki))));
        if (n * n != ki)
            throw std::runtime_error("wedderburn: block dimension not a perfect square");
        if (ri % n != 0) throw std::runtime_error("wedderburn: multiplicity not integral");
        const int m = ri / n;

        Cmat w;
        bool ok = false;
        for (int attempt = 0; attempt < 24 && !ok; ++attempt) {
            // random self-adjoint element of the compressed factor
            Cmat y(ri, ri);
            for (const Cmat& b : comp) {
                const cplx c = rng.gauss();
                y += c * b + std::conj(c) * dagger(b);
            }
            la::HermEig eg = la::heig(y);
            double scale = 1.0;
            for (double v : eg.evals) scale = std::max(scale, std::abs(v));
            const std::vector<std::size_t> starts = cluster_by_gap(eg.evals, tol.gap() * scale);
            if (static_cast<int>(starts.size()) != n) continue;
            bool even = true;
            std::vector<Cmat> f;
            for (std::size_t gi = 0; gi < starts.size(); ++gi) {
                const std::size_t lo = starts[gi];
                const std::size_t hi = (gi + 1 < starts.size()) ? starts[gi + 1] : eg.evals.size();
                if (static_cast<int>(hi - lo) != m) {
                    even = false;
                    break;
                }
                Cmat fj(ri, m);
                for (std::size_t cc = lo; cc < hi; ++cc)
                    for (int rr = 0; rr < ri; ++rr)
                        fj(static_cast<std::size_t>(rr), cc - lo) = eg.evecs(static_cast<std::size_t>(rr), cc);
                f.push_back(std::move(fj));
            }
            if (!even) continue;

            // random element to build the partial isometries between grades
            Cmat b(ri, ri);
            for (const Cmat& e : comp) b += rng.gauss() * e;
            w = Cmat(ri, ri);
            bool good = true;
            for (int j = 0; j < n; ++j) {
                Cmat uj;
                if (j == 0) {
                    uj = Cmat::identity(m);
                } else {
                    Cmat mj = matmul(dagger(f[static_cast<std::size_t>(j)]), matmul(b, f[0]));
                    if (la::min_sv(mj) < 1e-6 * std::max(1.0, la::op_norm(mj))) {
                        good = false;
                        break;
                    }
                    uj = la::polar_unitary(mj);
                }
                const Cmat col = matmul(f[static_cast<std::size_t>(j)], uj);
                for (int a = 0; a < m; ++a)
                    for (int rr = 0; rr < ri; ++rr) w(static_cast<std::size_t>(rr),
                                                     static_cast<std::size_t>(j * m + a)) = col(
                        static_cast<std::size_t>(rr), static_cast<std::size_t>(a));
            }
            if (!good) continue;
            // verify: compressed basis elements must be xi ⊗ 1_m in w-coordinates
            double resid = 0;
            const Cmat wd = dagger(w);
            for (const Cmat& e : comp) {
                const Cmat c = matmul(wd, matmul(e, w));
                const Cmat xi = partial_trace_second(c, n, m) * cplx(1.0 / m, 0);
                resid = std::max(resid, fro_norm(c - kron_with_id(xi, m)));
            }
            if (resid < 1000 * tol.eps) ok = true;
        }
        if (!ok) throw std::runtime_error("wedderburn: factor split failed");
        out.blocks.push_back(Block{n, m});
        out.isometries.push_back(matmul(r, w));
    }

    // canonical order: by (n, m), stable in cluster position
    std::vector<std::size_t> idx(out.blocks.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (out.blocks[a].n != out.blocks[b].n) return out.blocks[a].n < out.blocks[b].n;
        return out.blocks[a].m < out.blocks[b].m;
    });
    WedderburnOut sorted;
    for (std::size_t i : idx) {
        sorted.blocks.push_back(out.blocks[i]);
        sorted.isometries.push_back(std::move(out.isometries[i]));
    }
    return sorted;
}

}  // namespace

RepresentedAlgebra algebra_from_span(const std::vector<Cmat>& span, int ambient, Tol tol,
                                     std::uint64_t seed) {
    std::vector<Cmat> basis;
    basis.reserve(span.size() + 1);
    Cmat id = Cmat::identity(ambient);
    mgs_append(basis, std::move(id), tol.eps);
    for (const Cmat& s : span) {
        if (!s.is_square() || s.rows != static_cast<std::size_t>(ambient))
            throw std::invalid_argument("algebra_from_span: dimension mismatch");
        if (!all_finite(s)) throw std::invalid_argument("algebra_from_span: non-finite entries");
        Cmat c = s;
        mgs_append(basis, std::move(c), tol.eps);
    }
    WedderburnOut w = wedderburn_from_basis(basis, ambient, tol, seed);
    return RepresentedAlgebra(ambient, std::move(w.blocks), std::move(w.isometries));
}

RepresentedAlgebra generate_closure(const std::vector<Cmat>& generators, int ambient, Tol tol,
                                    std::uint64_t seed) {
    for (const Cmat& g : generators) {
        if (!g.is_square() || g.rows != static_cast<std::size_t>(ambient))
            throw std::invalid_argument("generate_closure: dimension mismatch");
        if (!all_finite(g)) throw std::invalid_argument("generate_closure: non-finite entries");
    }
    std::vector<Cmat> gset;
    for (const Cmat& g : generators) {
        gset.push_back(g);
        gset.push_back(dagger(g));
    }

    std::vector<Cmat> basis;
    mgs_append(basis, Cmat::identity(ambient), tol.eps);
    std::size_t frontier_lo = 0;
    for (const Cmat& g : gset) {
        Cmat c = g;
        mgs_append(basis, std::move(c), tol.eps);
    }
    // alternate multiply-by-generators and re-orthonormalization until the
    // rank stabilizes
    const std::size_t hh = static_cast<std::size_t>(ambient) * ambient;
    while (frontier_lo < basis.size()) {
        const std::size_t frontier_hi = basis.size();
        for (std::size_t i = frontier_lo; i < frontier_hi; ++i)
            for (const Cmat& g : gset) {
                check_dense_budget(basis.size() + 2, hh, "generate_closure");
                mgs_append(basis, matmul(basis[i], g), tol.eps);
                mgs_append(basis, matmul(g, basis[i]), tol.eps);
            }
        frontier_lo = frontier_hi;
        if (basis.size() > hh)
            throw std::runtime_error("generate_closure: closure iteration failed to converge");
    }

    WedderburnOut w = wedderburn_from_basis(basis, ambient, tol, seed);
    RepresentedAlgebra a(ambient, std::move(w.blocks), std::move(w.isometries));
    if (!generators.empty()) a.set_generators(generators);
    return a;
}

RepresentedAlgebra commutant(const RepresentedAlgebra& a) {
    std::vector<Block> blocks;
    std::vector<Cmat> iso;
    for (int i = 0; i < a.num_blocks(); ++i) {
        const Block& b = a.blocks()[static_cast<std::size_t>(i)];
        blocks.push_back(Block{b.m, b.n});
        // swap the two column legs (n, m) -> (m, n)
        iso.push_back(permute_cols_legs(a.isometries()[static_cast<std::size_t>(i)], {b.n, b.m},
                                        {1, 0}));
    }
    return RepresentedAlgebra(a.ambient(), std::move(blocks), std::move(iso));
}

RepresentedAlgebra center(const RepresentedAlgebra& a) {
    std::vector<Block> blocks;
    std::vector<Cmat> iso;
    for (int i = 0; i < a.num_blocks(); ++i) {
        const Block& b = a.blocks()[static_cast<std::size_t>(i)];
        blocks.push_back(Block{1, b.n * b.m});
        iso.push_back(a.isometries()[static_cast<std::size_t>(i)]);
    }
    return RepresentedAlgebra(a.ambient(), std::move(blocks), std::move(iso));
}

bool is_factor(const RepresentedAlgebra& a) { return a.is_factor(); }

RepresentedAlgebra tensor_product(const RepresentedAlgebra& a, const RepresentedAlgebra& b) {
    std::vector<Block> blocks;
    std::vector<Cmat> iso;
    for (int i = 0; i < a.num_blocks(); ++i)
        for (int j = 0; j < b.num_blocks(); ++j) {
            const Block& ba = a.blocks()[static_cast<std::size_t>(i)];
            const Block& bb = b.blocks()[static_cast<std::size_t>(j)];
            blocks.push_back(Block{ba.n * bb.n, ba.m * bb.m});
            Cmat v = kron(a.isometries()[static_cast<std::size_t>(i)],
                          b.isometries()[static_cast<std::size_t>(j)]);
            // column legs (n_a, m_a, n_b, m_b) -> (n_a, n_b, m_a, m_b)
            iso.push_back(permute_cols_legs(v, {ba.n, ba.m, bb.n, bb.m}, {0, 2, 1, 3}));
        }
    return RepresentedAlgebra(a.ambient() * b.ambient(), std::move(blocks), std::move(iso));
}

RepresentedAlgebra opposite(const RepresentedAlgebra& a) {
    std::vector<Block> blocks = a.blocks();
    std::vector<Cmat> iso;
    for (const Cmat& v : a.isometries()) iso.push_back(conj(v));
    RepresentedAlgebra op(a.ambient(), std::move(blocks), std::move(iso));
    std::vector<Cmat> gens;
    for (const Cmat& g : a.generators()) gens.push_back(transpose(g));
    op.set_generators(std::move(gens));
    return op;
}

RepresentedAlgebra intersect(const RepresentedAlgebra& a, const RepresentedAlgebra& b, Tol tol,
                             std::uint64_t seed) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    const RepresentedAlgebra& small = (a.dim() <= b.dim()) ? a : b;
    const RepresentedAlgebra& big = (a.dim() <= b.dim()) ? b : a;
    const std::vector<Cmat> sb = small.hs_basis();
    const std::size_t k = sb.size();
    Cmat t(k, k);
    std::vector<Cmat> proj;
    proj.reserve(k);
    for (const Cmat& x : sb) proj.push_back(big.expect(x));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) t(i, j) = hs_inner(sb[i], proj[j]);
    la::HermEig eg = la::heig(t);
    std::vector<Cmat> span;
    for (std::size_t c = 0; c < eg.evals.size(); ++c) {
        if (eg.evals[c] < 1.0 - 1e-6) continue;
        Cmat x(a.ambient(), a.ambient());
        for (std::size_t i = 0; i < k; ++i) x += eg.evecs(i, c) * sb[i];
        // exactness post-check in both algebras
        if (small.membership_residual(x) < 100 * tol.eps && big.membership_residual(x) < 100 * tol.eps)
            span.push_back(std::move(x));
    }
    return algebra_from_span(span, a.ambient(), tol, seed);
}

RepresentedAlgebra join(const RepresentedAlgebra& a, const RepresentedAlgebra& b, Tol tol,
                        std::uint64_t seed) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("join: ambient mismatch");
    const RepresentedAlgebra d = intersect(commutant(a), commutant(b), tol, seed);
    return commutant(d);
}

RepresentedAlgebra relative_commutant(const RepresentedAlgebra& a, const RepresentedAlgebra& b,
                                      Tol tol, std::uint64_t seed) {
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("relative_commutant: ambient mismatch");
    if (subspace_contained(a, b) > 1e-7)
        throw std::invalid_argument("relative_commutant: A is not contained in B");
    return intersect(commutant(a), b, tol, seed);
}

double subspace_contained(const RepresentedAlgebra& a, const RepresentedAlgebra& b) {
    double r = 0;
    for (const Cmat& g : a.generators()) r = std::max(r, b.membership_residual(g));
    for (int i = 0; i < a.num_blocks(); ++i)
        r = std::max(r, b.membership_residual(a.central_projection(i)));
    return r;
}

double subspace_residual(const RepresentedAlgebra& a, const RepresentedAlgebra& b) {
    return std::max(subspace_contained(a, b), subspace_contained(b, a));
}

bool same_algebra(const RepresentedAlgebra& a, const RepresentedAlgebra& b, double eps) {
    if (a.ambient() != b.ambient() || a.dim() != b.dim()) return false;
    return subspace_residual(a, b) < eps;
}

InclusionData inclusion_data(const RepresentedAlgebra& a, const RepresentedAlgebra& b, Tol tol) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("inclusion_data: ambient mismatch");
    if (subspace_contained(a, b) > 1e-7)
        throw std::invalid_argument("inclusion_data: A is not contained in B");
    InclusionData out;
    Cmat lam(a.num_blocks(), b.num_blocks());
    out.lambda.assign(static_cast<std::size_t>(a.num_blocks()),
                      std::vector<int>(static_cast<std::size_t>(b.num_blocks()), 0));
    for (int i = 0; i < a.num_blocks(); ++i) {
        const Cmat zi = a.central_projection(i);
        for (int j = 0; j < b.num_blocks(); ++j) {
            const Cmat wj = b.central_projection(j);
            const double t = trace(matmul(zi, wj)).real();
            const double denom = static_cast<double>(a.blocks()[static_cast<std::size_t>(i)].n) *
                                 b.blocks()[static_cast<std::size_t>(j)].m;
            const double lij = t / denom;
            const int l = static_cast<int>(std::llround(lij));
            if (std::abs(lij - l) > 1e-6)
                throw std::runtime_error("inclusion_data: non-integer inclusion multiplicity");
            out.lambda[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l;
            lam(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = cplx(l, 0);
        }
    }
    (void)tol;
    const double nrm = la::op_norm(lam);
    out.index = nrm * nrm;
    return out;
}

// ---------------------------------------------------------------------------
// StarHomomorphism

StarHomomorphism::StarHomomorphism(AlgPtr source, int target_dim, std::vector<int> mult,
                                   std::vector<Cmat> isometries)
    : source_(std::move(source)), target_dim_(target_dim), mult_(std::move(mult)),
      isometries_(std::move(isometries)) {
    if (!source_) throw std::invalid_argument("StarHomomorphism: null source");
    if (static_cast<int>(mult_.size()) != source_->num_blocks() ||
        mult_.size() != isometries_.size())
        throw std::invalid_argument("StarHomomorphism: block count mismatch");
    for (std::size_t i = 0; i < mult_.size(); ++i) {
        const int n = source_->blocks()[i].n;
        if (isometries_[i].rows != static_cast<std::size_t>(target_dim_) ||
            isometries_[i].cols != static_cast<std::size_t>(n) * mult_[i])
            throw std::invalid_argument("StarHomomorphism: isometry shape");
    }
}

StarHomomorphism StarHomomorphism::from_basis_images(AlgPtr source, int target_dim,
                                                     const std::vector<Cmat>& images, Tol tol,
                                                     std::uint64_t seed) {
    (void)seed;
    const RepresentedAlgebra& a = *source;
    if (static_cast<int>(images.size()) != a.dim())
        throw std::invalid_argument("from_basis_images: wrong number of images");
    // hs_basis order: block-major, (p,q) row-major, normalization 1/sqrt(m)
    std::vector<int> offset(static_cast<std::size_t>(a.num_blocks()), 0);
    int off = 0;
    for (int i = 0; i < a.num_blocks(); ++i) {
        offset[static_cast<std::size_t>(i)] = off;
        off += a.blocks()[static_cast<std::size_t>(i)].n * a.blocks()[static_cast<std::size_t>(i)].n;
    }
    std::vector<int> mult;
    std::vector<Cmat> iso;
    for (int i = 0; i < a.num_blocks(); ++i) {
        const Block& b = a.blocks()[static_cast<std::size_t>(i)];
        const double sm = std::sqrt(static_cast<double>(b.m));
        auto unit_image = [&](int p, int q) {
            return images[static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + p * b.n + q)] *
                   cplx(sm, 0);
        };
        // projection image of the block unit
        Cmat pz(target_dim, target_dim);
        for (int p = 0; p < b.n; ++p) pz += unit_image(p, p);
        const double tr = trace(pz).real();
        const int w = static_cast<int>(std::llround(tr));
        if (std::abs(tr - w) > 1e-6 || fro_norm(matmul(pz, pz) - pz) > 1e-6 * std::max(1.0, tr))
            throw std::runtime_error("from_basis_images: block image is not a projection (not a *-homomorphism?)");
        if (w == 0) {
            mult.push_back(0);
            iso.push_back(Cmat(static_cast<std::size_t>(target_dim), 0));
            continue;
        }
        if (w % b.n != 0)
            throw std::runtime_error("from_basis_images: image rank not divisible by block size");
        const int c = w / b.n;
        // orthonormal range of pz
        la::HermEig eg = la::heig(pz);
        Cmat r(static_cast<std::size_t>(target_dim), static_cast<std::size_t>(w));
        int fill = 0;
        for (std::size_t k2 = 0; k2 < eg.evals.size(); ++k2) {
            if (eg.evals[k2] < 0.5) continue;
            for (int rr = 0; rr < target_dim; ++rr)
                r(static_cast<std::size_t>(rr), static_cast<std::size_t>(fill)) =
                    eg.evecs(static_cast<std::size_t>(rr), k2);
            ++fill;
        }
        if (fill != w) throw std::runtime_error("from_basis_images: projection rank mismatch");
        const Cmat rd = dagger(r);
        auto compressed_unit = [&](int p, int q) { return matmul(rd, matmul(unit_image(p, q), r)); };
        const Cmat wmat = split_factor_action(b.n, w, compressed_unit, tol.eps);
        mult.push_back(c);
        iso.push_back(matmul(r, wmat));
    }
    return StarHomomorphism(std::move(source), target_dim, std::move(mult), std::move(iso));
}

Cmat StarHomomorphism::apply(const Cmat& x) const {
    Cmat y(static_cast<std::size_t>(target_dim_), static_cast<std::size_t>(target_dim_));
    for (int i = 0; i < source_->num_blocks(); ++i) {
        if (mult_[static_cast<std::size_t>(i)] == 0) continue;
        y += apply_coord(i, source_->coord(i, x));
    }
    return y;
}

Cmat StarHomomorphism::apply_coord(int i, const Cmat& xi) const {
    const int c = mult_[static_cast<std::size_t>(i)];
    if (c == 0) return Cmat(static_cast<std::size_t>(target_dim_), static_cast<std::size_t>(target_dim_));
    const Cmat& w = isometries_[static_cast<std::size_t>(i)];
    return matmul(w, matmul(kron_with_id(xi, c), dagger(w)));
}

bool StarHomomorphism::unital() const {
    long s = 0;
    for (int i = 0; i < source_->num_blocks(); ++i)
        s += static_cast<long>(source_->blocks()[static_cast<std::size_t>(i)].n) *
             mult_[static_cast<std::size_t>(i)];
    return s == target_dim_;
}

bool StarHomomorphism::injective() const {
    for (int c : mult_)
        if (c == 0) return false;
    return true;
}

RepresentedAlgebra StarHomomorphism::image() const {
    if (!unital())
        throw std::runtime_error("StarHomomorphism::image: image algebra is not unital on the target");
    std::vector<Block> blocks;
    std::vector<Cmat> iso;
    for (int i = 0; i < source_->num_blocks(); ++i) {
        if (mult_[static_cast<std::size_t>(i)] == 0) continue;
        blocks.push_back(Block{source_->blocks()[static_cast<std::size_t>(i)].n,
                               mult_[static_cast<std::size_t>(i)]});
        iso.push_back(isometries_[static_cast<std::size_t>(i)]);
    }
    return RepresentedAlgebra(target_dim_, std::move(blocks), std::move(iso));
}

double StarHomomorphism::hom_residual() const {
    double r = 0;
    const std::vector<Cmat>& gens = source_->generators();
    std::vector<Cmat> img;
    for (const Cmat& g : gens) img.push_back(apply(g));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        r = std::max(r, fro_norm(apply(dagger(gens[i])) - dagger(img[i])));
        for (std::size_t j = 0; j < gens.size(); ++j)
            r = std::max(r, fro_norm(apply(matmul(gens[i], gens[j])) - matmul(img[i], img[j])));
    }
    Cmat one(static_cast<std::size_t>(target_dim_), static_cast<std::size_t>(target_dim_));
    for (int i = 0; i < source_->num_blocks(); ++i) {
        const Cmat& w = isometries_[static_cast<std::size_t>(i)];
        one += matmul(w, dagger(w));
    }
    if (unital()) r = std::max(r, fro_norm(one - Cmat::identity(static_cast<std::size_t>(target_dim_))));
    return r;
}

StarHomomorphism identity_hom(AlgPtr a) {
    std::vector<int> mult;
    std::vector<Cmat> iso;
    for (int i = 0; i < a->num_blocks(); ++i) {
        mult.push_back(a->blocks()[static_cast<std::size_t>(i)].m);
        iso.push_back(a->isometries()[static_cast<std::size_t>(i)]);
    }
    const int amb = a->ambient();
    return StarHomomorphism(std::move(a), amb, std::move(mult), std::move(iso));
}

StarHomomorphism hom_from_unit_images(AlgPtr source, int target_dim,
                                      const std::function<Cmat(int, int, int)>& unit_image,
                                      Tol tol) {
    const RepresentedAlgebra& a = *source;
    std::vector<int> mult;
    std::vector<Cmat> iso;
    for (int i = 0; i < a.num_blocks(); ++i) {
        const Block& b = a.blocks()[static_cast<std::size_t>(i)];
        Cmat pz(static_cast<std::size_t>(target_dim), static_cast<std::size_t>(target_dim));
        for (int p = 0; p < b.n; ++p) pz += unit_image(i, p, p);
        const double tr = trace(pz).real();
        const int w = static_cast<int>(std::llround(tr));
        if (std::abs(tr - w) > 1e-6 || fro_norm(matmul(pz, pz) - pz) > 1e-6 * std::max(1.0, tr))
            throw std::runtime_error("hom_from_unit_images: block image is not a projection");
        if (w == 0) {
            mult.push_back(0);
            iso.push_back(Cmat(static_cast<std::size_t>(target_dim), 0));
            continue;
        }
        if (w % b.n != 0)
            throw std::runtime_error("hom_from_unit_images: image rank not divisible by block size");
        la::HermEig eg = la::heig(pz);
        Cmat r(static_cast<std::size_t>(target_dim), static_cast<std::size_t>(w));
        int fill = 0;
        for (std::size_t k2 = 0; k2 < eg.evals.size(); ++k2) {
            if (eg.evals[k2] < 0.5) continue;
            for (int rr = 0; rr < target_dim; ++rr)
                r(static_cast<std::size_t>(rr), static_cast<std::size_t>(fill)) =
                    eg.evecs(static_cast<std::size_t>(rr), k2);
            ++fill;
        }
        if (fill != w) throw std::runtime_error("hom_from_unit_images: projection rank mismatch");
        const Cmat rd = dagger(r);
        auto compressed = [&](int p, int q) { return matmul(rd, matmul(unit_image(i, p, q), r)); };
        const Cmat wmat = split_factor_action(b.n, w, compressed, tol.eps);
        mult.push_back(w / b.n);
        iso.push_back(matmul(r, wmat));
    }
    return StarHomomorphism(std::move(source), target_dim, std::move(mult), std::move(iso));
}

StarHomomorphism compose_hom(const StarHomomorphism& phi,
                             const std::function<Cmat(const Cmat&)>& psi, int target_dim,
                             Tol tol) {
    AlgPtr src = phi.source();
    return hom_from_unit_images(
        src, target_dim,
        [&](int i, int p, int q) {
            Cmat e(static_cast<std::size_t>(src->blocks()[static_cast<std::size_t>(i)].n),
                   static_cast<std::size_t>(src->blocks()[static_cast<std::size_t>(i)].n));
            e(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = 1.0;
            return psi(phi.apply_coord(i, e));
        },
        tol);
}

// ---------------------------------------------------------------------------
// AbstractAlgebra

Cvec AbstractAlgebra::multiply(const Cvec& x, const Cvec& y) const {
    Cvec xy(static_cast<std::size_t>(dim) * dim, cplx(0, 0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            xy[static_cast<std::size_t>(i) * dim + j] = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    return matvec(mul, xy);
}

Cmat AbstractAlgebra::left_mult(const Cvec& x) const {
    Cmat l(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        Cvec e(static_cast<std::size_t>(dim), cplx(0, 0));
        e[static_cast<std::size_t>(j)] = 1.0;
        const Cvec c = multiply(x, e);
        for (int i = 0; i < dim; ++i) l(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c[static_cast<std::size_t>(i)];
    }
    return l;
}

Cmat AbstractAlgebra::right_mult(const Cvec& x) const {
    Cmat r(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) {
        Cvec e(static_cast<std::size_t>(dim), cplx(0, 0));
        e[static_cast<std::size_t>(j)] = 1.0;
        const Cvec c = multiply(e, x);
        for (int i = 0; i < dim; ++i) r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c[static_cast<std::size_t>(i)];
    }
    return r;
}

std::optional<Cvec> AbstractAlgebra::try_inverse(const Cvec& x, double eps) const {
    const Cmat l = left_mult(x);
    const double smax = la::op_norm(l);
    if (smax == 0 || la::min_sv(l) < eps * smax) return std::nullopt;
    Cmat b(static_cast<std::size_t>(dim), 1);
    for (int i = 0; i < dim; ++i) b(static_cast<std::size_t>(i), 0) = unit[static_cast<std::size_t>(i)];
    const Cmat v = la::solve(l, b);
    Cvec inv(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) inv[static_cast<std::size_t>(i)] = v(static_cast<std::size_t>(i), 0);
    // check the two-sided inverse property
    Cvec xv = multiply(inv, x);
    double r = 0;
    for (int i = 0; i < dim; ++i) r = std::max(r, std::abs(xv[static_cast<std::size_t>(i)] - unit[static_cast<std::size_t>(i)]));
    if (r > 1e-7) return std::nullopt;
    return inv;
}

double AbstractAlgebra::associativity_residual() const {
    double r = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k2 = 0; k2 < dim; ++k2) {
                Cvec ei(static_cast<std::size_t>(dim), cplx(0, 0)), ej = ei, ek = ei;
                ei[static_cast<std::size_t>(i)] = 1;
                ej[static_cast<std::size_t>(j)] = 1;
                ek[static_cast<std::size_t>(k2)] = 1;
                const Cvec l = multiply(multiply(ei, ej), ek);
                const Cvec rr = multiply(ei, multiply(ej, ek));
                for (int t = 0; t < dim; ++t)
                    r = std::max(r, std::abs(l[static_cast<std::size_t>(t)] - rr[static_cast<std::size_t>(t)]));
            }
    return r;
}

double AbstractAlgebra::unit_residual() const {
    double r = 0;
    for (int j = 0; j < dim; ++j) {
        Cvec e(static_cast<std::size_t>(dim), cplx(0, 0));
        e[static_cast<std::size_t>(j)] = 1;
        const Cvec l = multiply(unit, e);
        const Cvec rr = multiply(e, unit);
        for (int t = 0; t < dim; ++t) {
            r = std::max(r, std::abs(l[static_cast<std::size_t>(t)] - e[static_cast<std::size_t>(t)]));
            r = std::max(r, std::abs(rr[static_cast<std::size_t>(t)] - e[static_cast<std::size_t>(t)]));
        }
    }
    return r;
}

AbstractAlgebra AbstractAlgebra::from_represented(const RepresentedAlgebra& a) {
    const std::vector<Cmat> basis = a.hs_basis();
    const int k = static_cast<int>(basis.size());
    AbstractAlgebra out;
    out.dim = k;
    out.mul = Cmat(static_cast<std::size_t>(k), static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Cmat p = matmul(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
            for (int t = 0; t < k; ++t)
                out.mul(static_cast<std::size_t>(t), static_cast<std::size_t>(i) * k + j) =
                    hs_inner(basis[static_cast<std::size_t>(t)], p);
        }
    out.unit.assign(static_cast<std::size_t>(k), cplx(0, 0));
    const Cmat id = Cmat::identity(a.ambient());
    for (int t = 0; t < k; ++t) out.unit[static_cast<std::size_t>(t)] = hs_inner(basis[static_cast<std::size_t>(t)], id);
    return out;
}

AbstractAlgebra AbstractAlgebra::functions(int n) {
    AbstractAlgebra a;
    a.dim = n;
    a.mul = Cmat(static_cast<std::size_t>(n), static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) a.mul(static_cast<std::size_t>(i), static_cast<std::size_t>(i) * n + i) = 1.0;
    a.unit.assign(static_cast<std::size_t>(n), cplx(1, 0));
    return a;
}

AbstractAlgebra AbstractAlgebra::dual_numbers() {
    AbstractAlgebra a;
    a.dim = 2;
    a.mul = Cmat(2, 4);
    // basis {1, x}: 1*1=1, 1*x=x, x*1=x, x*x=0
    a.mul(0, 0) = 1;
    a.mul(1, 1) = 1;
    a.mul(1, 2) = 1;
    a.unit = {cplx(1, 0), cplx(0, 0)};
    return a;
}

AbstractAlgebra AbstractAlgebra::upper_triangular2() {
    AbstractAlgebra a;
    a.dim = 3;  // e11, e12, e22
    a.mul = Cmat(3, 9);
    auto set = [&](int i, int j, int t) { a.mul(static_cast<std::size_t>(t), static_cast<std::size_t>(i) * 3 + j) = 1.0; };
    set(0, 0, 0);  // e11 e11 = e11
    set(0, 1, 1);  // e11 e12 = e12
    set(1, 2, 1);  // e12 e22 = e12
    set(2, 2, 2);  // e22 e22 = e22
    a.unit = {cplx(1, 0), cplx(0, 0), cplx(1, 0)};
    return a;
}

AbstractAlgebra AbstractAlgebra::matrix_units(int n) {
    AbstractAlgebra a;
    a.dim = n * n;
    a.mul = Cmat(static_cast<std::size_t>(n) * n, static_cast<std::size_t>(n) * n * n * n);
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k2 = 0; k2 < n; ++k2)
                for (int l = 0; l < n; ++l)
                    if (j == k2)
                        a.mul(static_cast<std::size_t>(idx(i, l)),
                              static_cast<std::size_t>(idx(i, j)) * n * n + idx(k2, l)) = 1.0;
    a.unit.assign(static_cast<std::size_t>(n) * n, cplx(0, 0));
    for (int i = 0; i < n; ++i) a.unit[static_cast<std::size_t>(idx(i, i))] = 1.0;
    return a;
}

AbstractAlgebra AbstractAlgebra::tensor(const AbstractAlgebra& other) const {
    AbstractAlgebra t;
    const int ka = dim, kb = other.dim;
    t.dim = ka * kb;
    t.mul = Cmat(static_cast<std::size_t>(t.dim), static_cast<std::size_t>(t.dim) * t.dim);
    for (int a1 = 0; a1 < ka; ++a1)
        for (int b1 = 0; b1 < kb; ++b1)
            for (int a2 = 0; a2 < ka; ++a2)
                for (int b2 = 0; b2 < kb; ++b2) {
                    const std::size_t colT = static_cast<std::size_t>(a1 * kb + b1) * t.dim + (a2 * kb + b2);
                    for (int ta = 0; ta < ka; ++ta) {
                        const cplx ca = mul(static_cast<std::size_t>(ta), static_cast<std::size_t>(a1) * ka + a2);
                        if (ca == cplx(0, 0)) continue;
                        for (int tb = 0; tb < kb; ++tb) {
                            const cplx cb = other.mul(static_cast<std::size_t>(tb), static_cast<std::size_t>(b1) * kb + b2);
                            if (cb == cplx(0, 0)) continue;
                            t.mul(static_cast<std::size_t>(ta * kb + tb), colT) += ca * cb;
                        }
                    }
                }
    t.unit.assign(static_cast<std::size_t>(t.dim), cplx(0, 0));
    for (int a1 = 0; a1 < ka; ++a1)
        for (int b1 = 0; b1 < kb; ++b1)
            t.unit[static_cast<std::size_t>(a1 * kb + b1)] = unit[static_cast<std::size_t>(a1)] * other.unit[static_cast<std::size_t>(b1)];
    return t;
}

AbstractAlgebra AbstractAlgebra::tensor_with_self() const { return tensor(*this); }

AbstractAlgebra AbstractAlgebra::opposite() const {
    AbstractAlgebra o;
    o.dim = dim;
    o.mul = Cmat(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int t = 0; t < dim; ++t)
                o.mul(static_cast<std::size_t>(t), static_cast<std::size_t>(i) * dim + j) =
                    mul(static_cast<std::size_t>(t), static_cast<std::size_t>(j) * dim + i);
    o.unit = unit;
    return o;
}

}  // namespace fnet
