#include "fusionnet/twoalgebra.hpp"

#include <cmath>

namespace fnet {

namespace {

Cvec vec_kron(const Cvec& a, const Cvec& b) {
    Cvec k(a.size() * b.size(), cplx(0, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) k[i * b.size() + j] = a[i] * b[j];
    return k;
}

double vec_dist(const Cvec& a, const Cvec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

double vec_norm(const Cvec& a) {
    double s = 0;
    for (const cplx& x : a) s += std::norm(x);
    return std::sqrt(s);
}

}  // namespace

Cvec TwoAlgebra::col(const Cvec& a, const Cvec& b) const { return matvec(mu, vec_kron(a, b)); }

Cvec TwoAlgebra::basis_vec(int i) const {
    Cvec e(static_cast<std::size_t>(algebra.dim), cplx(0, 0));
    e[static_cast<std::size_t>(i)] = 1.0;
    return e;
}

Cvec vertical_product(const TwoAlgebra& t, const Cvec& a, const Cvec& b) { return t.col(a, b); }

TwoAlgebraReport verify_two_algebra(const TwoAlgebra& t, Tol tol) {
    TwoAlgebraReport rep;
    const int k = t.algebra.dim;
    if (t.mu.rows != static_cast<std::size_t>(k) ||
        t.mu.cols != static_cast<std::size_t>(k) * k || t.v.size() != static_cast<std::size_t>(k)) {
        rep.note = "structural error: shape mismatch";
        return rep;
    }
    const std::optional<Cvec> vinv = t.algebra.try_inverse(t.v, tol.eps);
    rep.v_invertible = vinv.has_value();
    if (!rep.v_invertible) {
        rep.note = "structural error: v is not invertible";
        return rep;
    }
    rep.structurally_valid = true;

    // mu is an algebra homomorphism: col(ab, cd) = col(a,c) col(b,d),
    // bilinear, so basis tuples form a spanning check; unitality col(1,1)=1
    rep.mu_unit_residual = vec_dist(t.col(t.algebra.unit, t.algebra.unit), t.algebra.unit);
    double hom = 0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                for (int d = 0; d < k; ++d) {
                    const Cvec lhs = t.col(t.algebra.multiply(t.basis_vec(a), t.basis_vec(b)),
                                           t.algebra.multiply(t.basis_vec(c), t.basis_vec(d)));
                    const Cvec rhs = t.algebra.multiply(t.col(t.basis_vec(a), t.basis_vec(c)),
                                                        t.col(t.basis_vec(b), t.basis_vec(d)));
                    hom = std::max(hom, vec_dist(lhs, rhs));
                }
    rep.mu_hom_residual = hom;
    rep.interchange_residual = hom;

    // axiom 1 over basis triples
    double a1 = 0;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                const Cvec lhs = t.algebra.multiply(
                    t.algebra.multiply(
                        t.v, t.col(t.col(t.basis_vec(a), t.basis_vec(b)), t.basis_vec(c))),
                    *vinv);
                const Cvec rhs = t.col(t.basis_vec(a), t.col(t.basis_vec(b), t.basis_vec(c)));
                a1 = std::max(a1, vec_dist(lhs, rhs));
            }
    rep.axiom1_residual = a1;

    // axiom 2: vv = col(1,v) v col(v,1)
    const Cvec lhs2 = t.algebra.multiply(t.v, t.v);
    const Cvec rhs2 = t.algebra.multiply(
        t.algebra.multiply(t.col(t.algebra.unit, t.v), t.v), t.col(t.v, t.algebra.unit));
    rep.axiom2_residual = vec_dist(lhs2, rhs2);

    const double thr = 1e3 * tol.eps;
    rep.axiom1_pass =
        rep.axiom1_residual < thr && rep.mu_hom_residual < thr && rep.mu_unit_residual < thr;
    rep.axiom2_pass = rep.axiom2_residual < thr;
    return rep;
}

Cvec bracket(const TwoAlgebra& t, const Cvec& a) {
    return t.col(t.col(t.algebra.unit, a), t.algebra.unit);
}

double eh_commutation_check(const TwoAlgebra& t, const Cvec& a, const Cvec& b) {
    const std::optional<Cvec> vinv = t.algebra.try_inverse(t.v);
    if (!vinv) return 1.0;
    const Cvec ba = bracket(t, a);
    const Cvec bb = bracket(t, b);
    const Cvec conj_a = t.algebra.multiply(t.algebra.multiply(t.v, ba), *vinv);
    return vec_dist(t.algebra.multiply(conj_a, bb), t.algebra.multiply(bb, conj_a));
}

PentagonResult pentagon_rescale(const AbstractAlgebra& algebra, const Cmat& mu, const Cvec& v_hat,
                                Tol tol) {
    PentagonResult out;
    TwoAlgebra t{algebra, mu, v_hat};
    const std::optional<Cvec> vinv = algebra.try_inverse(v_hat, tol.eps);
    if (!vinv) {
        out.error = "v_hat is not invertible";
        return out;
    }
    TwoAlgebraReport pre = verify_two_algebra(t, tol);
    if (!pre.axiom1_pass) {
        out.error =
            "axiom 1 fails for v_hat (residual " + std::to_string(pre.axiom1_residual) + ")";
        return out;
    }

    // lambda := col(v̂⁻¹, 1) · v̂⁻¹ · col(1, v̂⁻¹) · v̂ · v̂
    Cvec lambda = t.col(*vinv, algebra.unit);
    lambda = algebra.multiply(lambda, *vinv);
    lambda = algebra.multiply(lambda, t.col(algebra.unit, *vinv));
    lambda = algebra.multiply(lambda, v_hat);
    lambda = algebra.multiply(lambda, v_hat);
    out.lambda = lambda;
    out.lambda_decomposition = lambda;

    double central = 0;
    for (int i = 0; i < algebra.dim; ++i) {
        Cvec e(static_cast<std::size_t>(algebra.dim), cplx(0, 0));
        e[static_cast<std::size_t>(i)] = 1.0;
        central = std::max(central,
                           vec_dist(algebra.multiply(lambda, e), algebra.multiply(e, lambda)));
    }
    if (central > 1e3 * tol.eps) {
        out.error = "lambda not central (residual " + std::to_string(central) + ")";
        return out;
    }
    // scalar test: lambda = c * unit
    cplx num(0, 0);
    double den = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        num += std::conj(algebra.unit[i]) * lambda[i];
        den += std::norm(algebra.unit[i]);
    }
    const cplx c = num / den;
    Cvec scal(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) scal[i] = c * algebra.unit[i];
    if (vec_dist(lambda, scal) > 1e3 * tol.eps * std::max(1.0, vec_norm(lambda))) {
        out.error = "lambda central but not scalar";
        return out;
    }

    Cvec v = algebra.multiply(lambda, v_hat);
    TwoAlgebra fixed{algebra, mu, v};
    const TwoAlgebraReport post = verify_two_algebra(fixed, tol);
    out.axiom2_residual = post.axiom2_residual;
    if (!post.axiom2_pass) {
        out.error = "axiom 2 still fails after rescaling (residual " +
                    std::to_string(post.axiom2_residual) + ")";
        return out;
    }
    out.ok = true;
    out.v = std::move(v);
    return out;
}

TwoAlgebra delta_two_algebra(int n, const std::vector<std::pair<int, int>>& delta,
                             std::optional<Cvec> v) {
    if (static_cast<int>(delta.size()) != n)
        throw std::invalid_argument("delta_two_algebra: delta must be defined on all points");
    for (const auto& [f, g] : delta)
        if (f < 0 || f >= n || g < 0 || g >= n)
            throw std::invalid_argument("delta_two_algebra: delta out of range");
    // coassociativity componentwise: f∘f = f, g∘f = f∘g, g∘g = g
    for (int x = 0; x < n; ++x) {
        const auto [f, g] = delta[static_cast<std::size_t>(x)];
        const auto [ff, gf] = delta[static_cast<std::size_t>(f)];
        const auto [fg, gg] = delta[static_cast<std::size_t>(g)];
        if (ff != f || gf != fg || gg != g)
            throw std::invalid_argument("delta_two_algebra: delta is not coassociative");
    }
    TwoAlgebra t;
    t.algebra = AbstractAlgebra::functions(n);
    t.mu = Cmat(static_cast<std::size_t>(n), static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const auto [f, g] = delta[static_cast<std::size_t>(x)];
        t.mu(static_cast<std::size_t>(x), static_cast<std::size_t>(f) * n + g) = 1.0;
    }
    if (v) {
        t.v = std::move(*v);
    } else {
        t.v = t.algebra.unit;
    }
    return t;
}

}  // namespace fnet
