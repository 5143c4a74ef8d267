#include "fusionnet/bimodule.hpp"

#include <algorithm>
#include <cmath>

#include "fusionnet/lapack.hpp"

namespace fnet {

namespace {

Cmat matrix_unit(int n, int p, int q) {
    Cmat e(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    e(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = 1.0;
    return e;
}

Cmat partial_trace_first(const Cmat& c, int n, int m) {
    Cmat xi(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t)
        for (int u = 0; u < m; ++u) {
            cplx s(0, 0);
            for (int p = 0; p < n; ++p)
                s += c(static_cast<std::size_t>(p * m + t), static_cast<std::size_t>(p * m + u));
            xi(static_cast<std::size_t>(t), static_cast<std::size_t>(u)) = s;
        }
    return xi;
}

void require_matching_middle(const Bimodule& h, const Bimodule& k) {
    const RepresentedAlgebra& b1 = *h.right();
    const RepresentedAlgebra& b2 = *k.left();
    if (b1.ambient() != b2.ambient() || !(b1.blocks() == b2.blocks()))
        throw std::invalid_argument("fuse: middle algebra mismatch");
    if (h.right().get() != k.left().get()) {
        for (int j = 0; j < b1.num_blocks(); ++j)
            if (fro_norm(b1.central_projection(j) - b2.central_projection(j)) > 1e-7)
                throw std::invalid_argument("fuse: middle algebras have different block layout");
        if (!same_algebra(b1, b2)) throw std::invalid_argument("fuse: middle algebra mismatch");
    }
}

double sum_sq_blocks(const RepresentedAlgebra& a) {
    double s = 0;
    for (const Block& b : a.blocks()) s += static_cast<double>(b.n) * b.n;
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------

Bimodule::Bimodule(AlgPtr left, AlgPtr right, AlgPtr right_op, StarHomomorphism left_action,
                   StarHomomorphism right_action)
    : left_(std::move(left)), right_(std::move(right)), right_op_(std::move(right_op)),
      left_action_(std::move(left_action)), right_action_(std::move(right_action)) {
    if (left_action_.target_dim() != right_action_.target_dim())
        throw std::invalid_argument("Bimodule: action target dimensions differ");
    if (left_action_.source().get() != left_.get())
        throw std::invalid_argument("Bimodule: left action source mismatch");
    if (right_action_.source().get() != right_op_.get())
        throw std::invalid_argument("Bimodule: right action must act for opposite(right)");
}

double Bimodule::validity_residual() const {
    if (!left_action_.unital() || !right_action_.unital()) return 1.0;
    double r = std::max(left_action_.hom_residual(), right_action_.hom_residual());
    for (const Cmat& g : left_->generators()) {
        const Cmat lg = left_action_.apply(g);
        for (const Cmat& wg : right_op_->generators())
            r = std::max(r, commutator_norm(lg, right_action_.apply(wg)) /
                                std::max(1.0, fro_norm(lg)));
    }
    return r;
}

std::vector<Cmat> Bimodule::action_generator_images() const {
    std::vector<Cmat> out;
    for (const Cmat& g : left_->generators()) out.push_back(left_action_.apply(g));
    for (const Cmat& g : right_op_->generators()) out.push_back(right_action_.apply(g));
    return out;
}

Bimodule make_bimodule(AlgPtr left, AlgPtr right, const std::vector<Cmat>& left_images,
                       const std::vector<Cmat>& right_antihom_images, int space_dim, Tol tol) {
    StarHomomorphism la = StarHomomorphism::from_basis_images(left, space_dim, left_images, tol);
    // Convert the antihomomorphism of `right` into a homomorphism of
    // opposite(right): sigma(b^T) := rho(b); on HS bases this is the
    // (p,q) -> (q,p) index swap within each block.
    auto rop = std::make_shared<RepresentedAlgebra>(opposite(*right));
    std::vector<Cmat> op_images(right_antihom_images.size());
    int off = 0;
    for (const Block& b : right->blocks()) {
        for (int p = 0; p < b.n; ++p)
            for (int q = 0; q < b.n; ++q)
                op_images[static_cast<std::size_t>(off + p * b.n + q)] =
                    right_antihom_images[static_cast<std::size_t>(off + q * b.n + p)];
        off += b.n * b.n;
    }
    StarHomomorphism ra = StarHomomorphism::from_basis_images(rop, space_dim, op_images, tol);
    Bimodule h(std::move(left), std::move(right), std::move(rop), std::move(la), std::move(ra));
    if (!h.left_action().unital() || !h.right_action().unital())
        throw std::invalid_argument("make_bimodule: actions are not unital on the space");
    const double r = h.validity_residual();
    if (r > 1e3 * tol.eps)
        throw std::invalid_argument("make_bimodule: actions fail to commute (residual " +
                                    std::to_string(r) + ")");
    return h;
}

Bimodule l2_bimodule(AlgPtr a) {
    const RepresentedAlgebra& alg = *a;
    const int d = alg.dim();
    std::vector<int> offset;
    int off = 0;
    for (const Block& b : alg.blocks()) {
        offset.push_back(off);
        off += b.n * b.n;
    }
    // tau-orthonormal basis indexed (block, p, q); left multiplication acts
    // on the p-leg, right multiplication on the q-leg through the opposite.
    std::vector<int> lmult, rmult;
    std::vector<Cmat> liso, riso;
    for (int i = 0; i < alg.num_blocks(); ++i) {
        const int n = alg.blocks()[static_cast<std::size_t>(i)].n;
        Cmat wl(static_cast<std::size_t>(d), static_cast<std::size_t>(n) * n);
        Cmat wr(static_cast<std::size_t>(d), static_cast<std::size_t>(n) * n);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                const std::size_t row =
                    static_cast<std::size_t>(offset[static_cast<std::size_t>(i)] + p * n + q);
                wl(row, static_cast<std::size_t>(p * n + q)) = 1.0;  // coord leg p, mult leg q
                wr(row, static_cast<std::size_t>(q * n + p)) = 1.0;  // coord leg q, mult leg p
            }
        lmult.push_back(n);
        rmult.push_back(n);
        liso.push_back(std::move(wl));
        riso.push_back(std::move(wr));
    }
    auto rop = std::make_shared<RepresentedAlgebra>(opposite(alg));
    StarHomomorphism la(a, d, std::move(lmult), std::move(liso));
    StarHomomorphism ra(rop, d, std::move(rmult), std::move(riso));
    return Bimodule(a, a, std::move(rop), std::move(la), std::move(ra));
}

MultiplicityMatrix multiplicity_matrix(const Bimodule& h, Tol tol) {
    const RepresentedAlgebra& a = *h.left();
    const RepresentedAlgebra& b = *h.right();
    MultiplicityMatrix out;
    out.c.assign(static_cast<std::size_t>(a.num_blocks()),
                 std::vector<long>(static_cast<std::size_t>(b.num_blocks()), 0));
    for (int i = 0; i < a.num_blocks(); ++i) {
        const Cmat zi = h.act_left(a.central_projection(i));
        for (int j = 0; j < b.num_blocks(); ++j) {
            const Cmat wj = h.act_right(b.central_projection(j));
            const double t = trace(matmul(zi, wj)).real();
            const double denom = static_cast<double>(a.blocks()[static_cast<std::size_t>(i)].n) *
                                 b.blocks()[static_cast<std::size_t>(j)].n;
            const double c = t / denom;
            const long l = std::lround(c);
            if (std::abs(c - l) > std::max(1e-6, 1e3 * tol.eps))
                throw std::runtime_error("multiplicity_matrix: non-integer multiplicity " +
                                         std::to_string(c));
            out.c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = l;
        }
    }
    return out;
}

StatDim statistical_dimension(const Bimodule& h, Tol tol) {
    const MultiplicityMatrix m = multiplicity_matrix(h, tol);
    StatDim out;
    if (m.c.size() == 1 && m.c[0].size() == 1 && h.left()->is_factor() && h.right()->is_factor()) {
        out.factor_case = true;
        out.value = static_cast<double>(m.c[0][0]);
        return out;
    }
    Cmat c(m.c.size(), m.c[0].size());
    for (std::size_t i = 0; i < m.c.size(); ++i)
        for (std::size_t j = 0; j < m.c[i].size(); ++j)
            c(i, j) = cplx(static_cast<double>(m.c[i][j]), 0);
    out.factor_case = false;
    out.value = la::op_norm(c);
    return out;
}

Bimodule fuse(const Bimodule& h, const Bimodule& k, Tol tol) {
    require_matching_middle(h, k);
    const RepresentedAlgebra& b = *h.right();
    const int nb = b.num_blocks();

    const std::vector<int>& rj = h.right_action().multiplicities();
    const std::vector<int>& sj = k.left_action().multiplicities();
    std::vector<int> foffset(static_cast<std::size_t>(nb), 0);
    int df = 0;
    for (int j = 0; j < nb; ++j) {
        foffset[static_cast<std::size_t>(j)] = df;
        df += rj[static_cast<std::size_t>(j)] * sj[static_cast<std::size_t>(j)];
    }
    if (df == 0) throw std::runtime_error("fuse: fused space is empty");

    // fused left action: per middle block the left action of H compresses
    // onto the multiplicity leg of H's right-isotypic decomposition
    auto left_unit = [&](int i, int p, int q) {
        const Cmat x = h.left_action().apply_coord(
            i, matrix_unit(h.left()->blocks()[static_cast<std::size_t>(i)].n, p, q));
        Cmat out(static_cast<std::size_t>(df), static_cast<std::size_t>(df));
        for (int j = 0; j < nb; ++j) {
            const int r = rj[static_cast<std::size_t>(j)], s = sj[static_cast<std::size_t>(j)];
            if (r == 0 || s == 0) continue;
            const int nu = b.blocks()[static_cast<std::size_t>(j)].n;
            const Cmat& u = h.right_action().isometries()[static_cast<std::size_t>(j)];
            Cmat lj = partial_trace_first(matmul(dagger(u), matmul(x, u)), nu, r);
            lj *= cplx(1.0 / nu, 0);
            const Cmat blockop = kron(lj, Cmat::identity(static_cast<std::size_t>(s)));
            const int o = foffset[static_cast<std::size_t>(j)];
            for (std::size_t rr = 0; rr < blockop.rows; ++rr)
                for (std::size_t cc = 0; cc < blockop.cols; ++cc)
                    out(static_cast<std::size_t>(o) + rr, static_cast<std::size_t>(o) + cc) =
                        blockop(rr, cc);
        }
        return out;
    };
    StarHomomorphism fl = hom_from_unit_images(h.left(), df, left_unit, tol);

    auto right_unit = [&](int l, int p, int q) {
        const Cmat y = k.right_action().apply_coord(
            l, matrix_unit(k.right_op()->blocks()[static_cast<std::size_t>(l)].n, p, q));
        Cmat out(static_cast<std::size_t>(df), static_cast<std::size_t>(df));
        for (int j = 0; j < nb; ++j) {
            const int r = rj[static_cast<std::size_t>(j)], s = sj[static_cast<std::size_t>(j)];
            if (r == 0 || s == 0) continue;
            const int nu = b.blocks()[static_cast<std::size_t>(j)].n;
            const Cmat& v = k.left_action().isometries()[static_cast<std::size_t>(j)];
            Cmat mj = partial_trace_first(matmul(dagger(v), matmul(y, v)), nu, s);
            mj *= cplx(1.0 / nu, 0);
            const Cmat blockop = kron(Cmat::identity(static_cast<std::size_t>(r)), mj);
            const int o = foffset[static_cast<std::size_t>(j)];
            for (std::size_t rr = 0; rr < blockop.rows; ++rr)
                for (std::size_t cc = 0; cc < blockop.cols; ++cc)
                    out(static_cast<std::size_t>(o) + rr, static_cast<std::size_t>(o) + cc) =
                        blockop(rr, cc);
        }
        return out;
    };
    StarHomomorphism fr = hom_from_unit_images(k.right_op(), df, right_unit, tol);

    return Bimodule(h.left(), k.right(), k.right_op(), std::move(fl), std::move(fr));
}

Cmat fusion_quotient_map(const Bimodule& h, const Bimodule& k, Tol tol) {
    (void)tol;
    require_matching_middle(h, k);
    const RepresentedAlgebra& b = *h.right();
    const int dh = h.space_dim(), dk = k.space_dim();
    if (static_cast<std::size_t>(dh) * dk > (std::size_t(1) << 22))
        throw std::runtime_error("fusion_quotient_map: space too large to materialize");
    const double sb = sum_sq_blocks(b);
    const std::vector<int>& rj = h.right_action().multiplicities();
    const std::vector<int>& sj = k.left_action().multiplicities();
    int df = 0;
    for (int j = 0; j < b.num_blocks(); ++j)
        df += rj[static_cast<std::size_t>(j)] * sj[static_cast<std::size_t>(j)];
    Cmat t(static_cast<std::size_t>(df), static_cast<std::size_t>(dh) * dk);
    int rowoff = 0;
    for (int j = 0; j < b.num_blocks(); ++j) {
        const int r = rj[static_cast<std::size_t>(j)], s = sj[static_cast<std::size_t>(j)];
        if (r == 0 || s == 0) continue;
        const int nu = b.blocks()[static_cast<std::size_t>(j)].n;
        const Cmat& u = h.right_action().isometries()[static_cast<std::size_t>(j)];
        const Cmat& v = k.left_action().isometries()[static_cast<std::size_t>(j)];
        const double scale = std::sqrt(sb / nu);
        for (int tt = 0; tt < r; ++tt)
            for (int uu = 0; uu < s; ++uu) {
                const std::size_t row = static_cast<std::size_t>(rowoff + tt * s + uu);
                for (int x = 0; x < dh; ++x)
                    for (int y = 0; y < dk; ++y) {
                        cplx sum(0, 0);
                        for (int al = 0; al < nu; ++al)
                            sum += std::conj(u(static_cast<std::size_t>(x),
                                               static_cast<std::size_t>(al * r + tt))) *
                                   std::conj(v(static_cast<std::size_t>(y),
                                               static_cast<std::size_t>(al * s + uu)));
                        t(row, static_cast<std::size_t>(x) * dk + y) = cplx(scale, 0) * sum;
                    }
            }
        rowoff += r * s;
    }
    return t;
}

Bimodule conjugate(const Bimodule& h, Tol tol) {
    const int d = h.space_dim();
    const AlgPtr bptr = h.right();  // becomes the left algebra
    const AlgPtr aptr = h.left();   // becomes the right algebra
    auto aop = std::make_shared<RepresentedAlgebra>(opposite(*aptr));

    // b · conj(v) = conj(b* v) on the conjugate space
    auto left_unit = [&](int j, int p, int q) {
        const Cmat e =
            bptr->element(j, matrix_unit(bptr->blocks()[static_cast<std::size_t>(j)].n, p, q));
        return conj(h.right_action().apply(conj(e)));
    };
    StarHomomorphism la = hom_from_unit_images(bptr, d, left_unit, tol);

    auto right_unit = [&](int i, int p, int q) {
        const Cmat y =
            aop->element(i, matrix_unit(aop->blocks()[static_cast<std::size_t>(i)].n, p, q));
        return conj(h.left_action().apply(dagger(transpose(y))));
    };
    StarHomomorphism ra = hom_from_unit_images(aop, d, right_unit, tol);

    return Bimodule(bptr, aptr, std::move(aop), std::move(la), std::move(ra));
}

std::vector<Cmat> intertwiner_space(const Bimodule& h, const Bimodule& k, Tol tol) {
    const int dh = h.space_dim(), dk = k.space_dim();
    if (static_cast<std::size_t>(dh) * dk > 4096)
        throw std::runtime_error("intertwiner_space: dense solve too large");
    std::vector<std::pair<Cmat, Cmat>> pairs;
    for (const Cmat& g : h.left()->generators()) pairs.emplace_back(h.act_left(g), k.act_left(g));
    for (const Cmat& g : h.right_op()->generators())
        pairs.emplace_back(h.right_action().apply(g), k.right_action().apply(g));
    const std::size_t unknowns = static_cast<std::size_t>(dh) * dk;
    Cmat s(pairs.size() * unknowns, unknowns);
    std::size_t roff = 0;
    for (const auto& [gh, gk] : pairs) {
        // T gh − gk T = 0; with row-major vec: (I ⊗ gh^T − gk ⊗ I) vec(T)
        const Cmat c = kron(Cmat::identity(static_cast<std::size_t>(dk)), transpose(gh)) -
                       kron(gk, Cmat::identity(static_cast<std::size_t>(dh)));
        for (std::size_t r = 0; r < unknowns; ++r)
            for (std::size_t cc = 0; cc < unknowns; ++cc) s(roff + r, cc) = c(r, cc);
        roff += unknowns;
    }
    const Cmat ns = la::nullspace(s, tol.eps);
    std::vector<Cmat> out;
    for (std::size_t c = 0; c < ns.cols; ++c) {
        Cmat t(static_cast<std::size_t>(dk), static_cast<std::size_t>(dh));
        for (std::size_t e = 0; e < unknowns; ++e) t.a[e] = ns(e, c);
        out.push_back(std::move(t));
    }
    return out;
}

Certificate intertwiner_certificate(int dim_h, int dim_k,
                                    const std::vector<std::pair<Cmat, Cmat>>& gen_pairs, Tol tol,
                                    std::uint64_t seed) {
    Certificate cert;
    if (dim_h != dim_k) {
        cert.note = "dimension mismatch";
        return cert;
    }
    const std::size_t unknowns = static_cast<std::size_t>(dim_h) * dim_k;
    if (unknowns * unknowns > (std::size_t(1) << 24))
        throw std::runtime_error("intertwiner_certificate: dense solve too large");
    Cmat m(unknowns, unknowns);
    for (const auto& [gh, gk] : gen_pairs) {
        const Cmat c = kron(Cmat::identity(static_cast<std::size_t>(dim_k)), transpose(gh)) -
                       kron(gk, Cmat::identity(static_cast<std::size_t>(dim_h)));
        m += matmul(dagger(c), c);
    }
    la::HermEig eg = la::heig(m);
    const double scale = eg.evals.empty() ? 1.0 : std::max(1.0, eg.evals.back());
    std::vector<std::size_t> kernel;
    for (std::size_t i = 0; i < eg.evals.size(); ++i)
        if (eg.evals[i] < 1e-12 * scale) kernel.push_back(i);
    if (kernel.empty()) {
        cert.note = "no intertwiner (equivariance system has trivial kernel)";
        return cert;
    }
    Rng rng(seed ^ 0xce27f1caf3ULL);
    for (int attempt = 0; attempt < 16; ++attempt) {
        Cmat x(static_cast<std::size_t>(dim_k), static_cast<std::size_t>(dim_h));
        for (std::size_t ki : kernel) {
            const cplx w = rng.gauss();
            for (std::size_t e = 0; e < unknowns; ++e) x.a[e] += w * eg.evecs(e, ki);
        }
        if (la::min_sv(x) < 1e-6 * std::max(1e-300, la::op_norm(x))) continue;
        const Cmat u = la::polar_unitary(x);
        double res = 0;
        for (const auto& [gh, gk] : gen_pairs)
            res = std::max(res,
                           fro_norm(matmul(u, gh) - matmul(gk, u)) / std::max(1.0, fro_norm(gh)));
        cert.unitary = u;
        cert.residual = res;
        cert.ok = res < std::max(tol.eps, 1e-8);
        if (cert.ok) return cert;
    }
    cert.note = "no invertible intertwiner found in the kernel";
    return cert;
}

EquivalenceResult unitary_equivalence(const Bimodule& h, const Bimodule& k, Tol tol) {
    EquivalenceResult out;
    if (!same_algebra(*h.left(), *k.left()) || !same_algebra(*h.right(), *k.right()))
        throw std::invalid_argument("unitary_equivalence: algebra pair mismatch");
    const MultiplicityMatrix mh = multiplicity_matrix(h, tol);
    const MultiplicityMatrix mk = multiplicity_matrix(k, tol);
    for (std::size_t i = 0; i < mh.c.size(); ++i)
        for (std::size_t j = 0; j < mh.c[i].size(); ++j)
            if (mh.c[i][j] != mk.c[i][j]) {
                out.mismatch = MultiplicityMismatch{static_cast<int>(i), static_cast<int>(j),
                                                    mh.c[i][j], mk.c[i][j]};
                out.cert.note = "multiplicity mismatch";
                return out;
            }

    const int dh = h.space_dim(), dk = k.space_dim();
    if (static_cast<std::size_t>(dh) * dk <= 1024) {
        // least-squares search for an intertwiner + polar unitarization
        std::vector<std::pair<Cmat, Cmat>> pairs;
        for (const Cmat& g : h.left()->generators())
            pairs.emplace_back(h.act_left(g), k.act_left(g));
        for (const Cmat& g : h.right_op()->generators())
            pairs.emplace_back(h.right_action().apply(g), k.right_action().apply(g));
        out.cert = intertwiner_certificate(dh, dk, pairs, tol, 1);
        return out;
    }

    // structured transport through the canonical isotypic form; the leg
    // coordinates come from the shared algebra objects, so the block
    // transport is equivariant by construction
    const RepresentedAlgebra& a = *h.left();
    const RepresentedAlgebra& bop = *h.right_op();
    auto canonical_legs = [&](const Bimodule& x) {
        std::vector<std::vector<Cmat>> phi(static_cast<std::size_t>(a.num_blocks()));
        for (int i = 0; i < a.num_blocks(); ++i) {
            const int n = a.blocks()[static_cast<std::size_t>(i)].n;
            const int ci = x.left_action().multiplicities()[static_cast<std::size_t>(i)];
            if (ci == 0) continue;
            const Cmat& w = x.left_action().isometries()[static_cast<std::size_t>(i)];
            auto unit = [&](int l, int p, int q) {
                const Cmat y = x.right_action().apply_coord(
                    l, matrix_unit(bop.blocks()[static_cast<std::size_t>(l)].n, p, q));
                Cmat c = partial_trace_first(matmul(dagger(w), matmul(y, w)), n, ci);
                c *= cplx(1.0 / n, 0);
                return c;
            };
            StarHomomorphism sub = hom_from_unit_images(x.right_op(), ci, unit, tol);
            for (int j = 0; j < bop.num_blocks(); ++j) {
                const Cmat& y = sub.isometries()[static_cast<std::size_t>(j)];
                phi[static_cast<std::size_t>(i)].push_back(
                    matmul(w, kron(Cmat::identity(static_cast<std::size_t>(n)), y)));
            }
        }
        return phi;
    };
    const auto ph = canonical_legs(h);
    const auto pk = canonical_legs(k);
    Cmat u(static_cast<std::size_t>(dk), static_cast<std::size_t>(dh));
    for (std::size_t i = 0; i < ph.size(); ++i)
        for (std::size_t j = 0; j < ph[i].size() && j < pk[i].size(); ++j)
            if (ph[i][j].cols > 0) u += matmul(pk[i][j], dagger(ph[i][j]));

    double res = fro_norm(matmul(dagger(u), u) - Cmat::identity(static_cast<std::size_t>(dh)));
    for (const Cmat& g : h.left()->generators())
        res = std::max(res, fro_norm(matmul(u, h.act_left(g)) - matmul(k.act_left(g), u)) /
                                std::max(1.0, fro_norm(g)));
    for (const Cmat& g : h.right_op()->generators())
        res = std::max(res, fro_norm(matmul(u, h.right_action().apply(g)) -
                                     matmul(k.right_action().apply(g), u)) /
                                std::max(1.0, fro_norm(g)));
    out.cert.unitary = std::move(u);
    out.cert.residual = res;
    out.cert.ok = res < std::max(tol.eps, 1e-8);
    return out;
}

Bimodule direct_sum(const Bimodule& h, const Bimodule& k) {
    if (!same_algebra(*h.left(), *k.left()) || !same_algebra(*h.right(), *k.right()))
        throw std::invalid_argument("direct_sum: algebra pair mismatch");
    const int dh = h.space_dim(), dk = k.space_dim();
    const int d = dh + dk;
    auto stack = [&](const StarHomomorphism& x, const StarHomomorphism& y, AlgPtr src) {
        std::vector<int> mult;
        std::vector<Cmat> iso;
        for (int i = 0; i < src->num_blocks(); ++i) {
            const int n = src->blocks()[static_cast<std::size_t>(i)].n;
            const int cx = x.multiplicities()[static_cast<std::size_t>(i)];
            const int cy = y.multiplicities()[static_cast<std::size_t>(i)];
            Cmat w(static_cast<std::size_t>(d), static_cast<std::size_t>(n) * (cx + cy));
            const Cmat& wx = x.isometries()[static_cast<std::size_t>(i)];
            const Cmat& wy = y.isometries()[static_cast<std::size_t>(i)];
            for (int p = 0; p < n; ++p) {
                for (int t = 0; t < cx; ++t)
                    for (int r = 0; r < dh; ++r)
                        w(static_cast<std::size_t>(r), static_cast<std::size_t>(p * (cx + cy) + t)) =
                            wx(static_cast<std::size_t>(r), static_cast<std::size_t>(p * cx + t));
                for (int t = 0; t < cy; ++t)
                    for (int r = 0; r < dk; ++r)
                        w(static_cast<std::size_t>(dh + r),
                          static_cast<std::size_t>(p * (cx + cy) + cx + t)) =
                            wy(static_cast<std::size_t>(r), static_cast<std::size_t>(p * cy + t));
            }
            mult.push_back(cx + cy);
            iso.push_back(std::move(w));
        }
        return StarHomomorphism(src, d, std::move(mult), std::move(iso));
    };
    StarHomomorphism la = stack(h.left_action(), k.left_action(), h.left());
    StarHomomorphism ra = stack(h.right_action(), k.right_action(), h.right_op());
    return Bimodule(h.left(), h.right(), h.right_op(), std::move(la), std::move(ra));
}

}  // namespace fnet
