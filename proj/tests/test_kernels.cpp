#include "doctest.h"

#include "fusionnet/kernels.hpp"
#include "fusionnet/lapack.hpp"
#include "fusionnet/rng.hpp"

using namespace fnet;

namespace {

Cmat random_matrix(Rng& rng, std::size_t r, std::size_t c) { return rng.gauss_matrix(r, c); }

}  // namespace

TEST_CASE("serial and parallel kernels agree bitwise") {
    Rng rng(7);
    for (std::size_t n : {3u, 17u, 64u, 129u}) {
        const Cmat x = random_matrix(rng, n, n);
        const Cmat y = random_matrix(rng, n, n);

        Cmat cs, cp;
        kernels::serial::matmul(cs, x, y);
        kernels::par::matmul(cp, x, y);
        REQUIRE(cs.a == cp.a);

        Cmat ds, dp;
        kernels::serial::dagger(ds, x);
        kernels::par::dagger(dp, x);
        REQUIRE(ds.a == dp.a);

        REQUIRE(kernels::serial::hs_inner(x, y) == kernels::par::hs_inner(x, y));
    }
    const Cmat a = random_matrix(rng, 12, 9);
    const Cmat b = random_matrix(rng, 7, 11);
    Cmat ks, kp;
    kernels::serial::kron(ks, a, b);
    kernels::par::kron(kp, a, b);
    REQUIRE(ks.a == kp.a);
}

TEST_CASE("matmul / dagger / kron algebra") {
    Rng rng(3);
    const Cmat x = random_matrix(rng, 5, 5);
    const Cmat y = random_matrix(rng, 5, 5);
    // (xy)^* = y^* x^*
    CHECK(fro_norm(dagger(matmul(x, y)) - matmul(dagger(y), dagger(x))) < 1e-12);
    // tr(xy) = tr(yx)
    CHECK(std::abs(trace(matmul(x, y)) - trace(matmul(y, x))) < 1e-12);
    // kron multiplicativity
    const Cmat u = random_matrix(rng, 3, 3), v = random_matrix(rng, 4, 4);
    const Cmat w = random_matrix(rng, 3, 3), z = random_matrix(rng, 4, 4);
    CHECK(fro_norm(matmul(kron(u, v), kron(w, z)) - kron(matmul(u, w), matmul(v, z))) < 1e-10);
}

TEST_CASE("permute_legs moves tensor factors") {
    Rng rng(11);
    const Cmat u = random_matrix(rng, 2, 2);
    const Cmat v = random_matrix(rng, 3, 3);
    const Cmat k = kron(u, v);
    const Cmat p = permute_legs(k, {2, 3}, {1, 0});
    CHECK(fro_norm(p - kron(v, u)) < 1e-12);
}

TEST_CASE("heig reconstructs hermitian matrices") {
    Rng rng(5);
    Cmat x = random_matrix(rng, 20, 20);
    Cmat h = x + dagger(x);
    la::HermEig eg = la::heig(h);
    Cmat d(20, 20);
    for (int i = 0; i < 20; ++i) d(i, i) = eg.evals[i];
    const Cmat rec = matmul(eg.evecs, matmul(d, dagger(eg.evecs)));
    CHECK(fro_norm(rec - h) < 1e-10);
    for (std::size_t i = 1; i < 20; ++i) CHECK(eg.evals[i - 1] <= eg.evals[i]);
}

TEST_CASE("svd and derived operations") {
    Rng rng(9);
    const Cmat a = random_matrix(rng, 14, 9);
    la::Svd d = la::svd(a);
    Cmat s(d.s.size(), d.s.size());
    for (std::size_t i = 0; i < d.s.size(); ++i) s(i, i) = d.s[i];
    CHECK(fro_norm(matmul(d.u, matmul(s, d.vh)) - a) < 1e-10);

    // nullspace of a rank-deficient matrix
    Cmat b(6, 4);
    for (int i = 0; i < 6; ++i) {
        b(i, 0) = cplx(i, 1);
        b(i, 1) = cplx(2 * i, 2);  // column 1 = 2 * column 0
        b(i, 2) = cplx(1, -static_cast<double>(i) * i);
        b(i, 3) = rng.gauss();
    }
    const Cmat ns = la::nullspace(b, 1e-10);
    CHECK(ns.cols == 1);
    CHECK(fro_norm(matmul(b, ns)) < 1e-9);

    // polar unitary
    const Cmat q = la::polar_unitary(random_matrix(rng, 8, 8));
    CHECK(fro_norm(matmul(dagger(q), q) - Cmat::identity(8)) < 1e-10);

    // lstsq on an overdetermined consistent system
    const Cmat m = random_matrix(rng, 10, 4);
    const Cmat x0 = random_matrix(rng, 4, 2);
    const Cmat rhs = matmul(m, x0);
    const Cmat x = la::lstsq(m, rhs, 1e-12);
    CHECK(fro_norm(x - x0) < 1e-8);
}

TEST_CASE("nullspace of underdetermined systems covers the full kernel") {
    // 1 x 3 constraint: kernel has dimension 2
    Cmat a(1, 3);
    a(0, 0) = 1;
    a(0, 1) = cplx(0, 1);
    a(0, 2) = -1;
    const Cmat ns = la::nullspace(a, 1e-12);
    CHECK(ns.cols == 2);
    CHECK(fro_norm(matmul(a, ns)) < 1e-12);
}

TEST_CASE("rng determinism") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}
