#include "doctest.h"

#include "fusionnet/rng.hpp"
#include "fusionnet/twoalgebra.hpp"

using namespace fnet;

namespace {

std::vector<std::pair<int, int>> diagonal_delta(int n) {
    std::vector<std::pair<int, int>> d;
    for (int i = 0; i < n; ++i) d.emplace_back(i, i);
    return d;
}

}  // namespace

TEST_CASE("commutative 2-algebra passes both axioms exactly") {
    const TwoAlgebra t = delta_two_algebra(3, diagonal_delta(3));
    const TwoAlgebraReport r = verify_two_algebra(t);
    CHECK(r.structurally_valid);
    CHECK(r.v_invertible);
    CHECK(r.axiom1_pass);
    CHECK(r.axiom2_pass);
    CHECK(r.axiom1_residual == 0.0);
    CHECK(r.axiom2_residual == 0.0);
    CHECK(r.interchange_residual == 0.0);

    // col(1,1) = 1 and col(a,b) = ab in the commutative pointwise case
    const Cvec one = t.algebra.unit;
    CHECK(vertical_product(t, one, one) == one);
    Rng rng(3);
    Cvec a(3), b(3);
    for (auto& x : a) x = rng.gauss();
    for (auto& x : b) x = rng.gauss();
    const Cvec cab = t.col(a, b);
    const Cvec hab = t.algebra.multiply(a, b);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(cab[i] - hab[i]) < 1e-14);
}

TEST_CASE("non-diagonal coassociative delta still verifies") {
    // delta(x) = (0, x): f constant, g identity
    std::vector<std::pair<int, int>> d{{0, 0}, {0, 1}, {0, 2}};
    const TwoAlgebra t = delta_two_algebra(3, d);
    const TwoAlgebraReport r = verify_two_algebra(t);
    CHECK(r.axiom1_pass);
    CHECK(r.axiom2_pass);
}

TEST_CASE("non-coassociative delta is rejected by the builder") {
    // delta(x) = (x, 1-x): the second component is not idempotent
    std::vector<std::pair<int, int>> d{{0, 1}, {1, 0}};
    CHECK_THROWS(delta_two_algebra(2, d));
}

TEST_CASE("diag(1,-1) fails axiom 2 with residual 2") {
    Cvec v{cplx(1, 0), cplx(-1, 0)};
    const TwoAlgebra t = delta_two_algebra(2, diagonal_delta(2), v);
    const TwoAlgebraReport r = verify_two_algebra(t);
    CHECK(r.structurally_valid);
    CHECK(r.axiom1_pass);
    CHECK_FALSE(r.axiom2_pass);
    // vv = 1 but col(1,v) v col(v,1) = v^3 = v, residual ||1 - v|| = 2
    CHECK(r.axiom2_residual == doctest::Approx(2.0));
    CHECK(r.axiom2_residual > 0.5);
}

TEST_CASE("non-invertible v is a structural error") {
    Cvec v{cplx(1, 0), cplx(0, 0)};
    const TwoAlgebra t = delta_two_algebra(2, diagonal_delta(2), v);
    const TwoAlgebraReport r = verify_two_algebra(t);
    CHECK_FALSE(r.structurally_valid);
    CHECK_FALSE(r.v_invertible);
}

TEST_CASE("bracket and homotopy commutation") {
    const TwoAlgebra t = delta_two_algebra(4, diagonal_delta(4));
    // [1] = 1
    const Cvec b1 = bracket(t, t.algebra.unit);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(b1[i] - t.algebra.unit[i]) < 1e-14);
    // commutative: residual 0 for all sampled pairs
    Rng rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        Cvec a(4), b(4);
        for (auto& x : a) x = rng.gauss();
        for (auto& x : b) x = rng.gauss();
        CHECK(eh_commutation_check(t, a, b) < 1e-10);
    }
}

TEST_CASE("pentagon rescaling recovers v from c*v") {
    const TwoAlgebra t = delta_two_algebra(3, diagonal_delta(3));
    for (const cplx c : {cplx(2, 0), cplx(0, 1), cplx(-3, 0)}) {
        Cvec vhat(3);
        for (int i = 0; i < 3; ++i) vhat[i] = c * t.v[i];
        const PentagonResult r = pentagon_rescale(t.algebra, t.mu, vhat);
        REQUIRE(r.ok);
        double dist = 0;
        for (int i = 0; i < 3; ++i) dist = std::max(dist, std::abs(r.v[i] - t.v[i]));
        CHECK(dist < 1e-10);
        CHECK(r.axiom2_residual < 1e-10);
    }
}

TEST_CASE("pentagon rescaling keeps an already-valid v") {
    const TwoAlgebra t = delta_two_algebra(2, diagonal_delta(2));
    const PentagonResult r = pentagon_rescale(t.algebra, t.mu, t.v);
    REQUIRE(r.ok);
    // lambda = 1
    for (int i = 0; i < 2; ++i) CHECK(std::abs(r.lambda[i] - t.algebra.unit[i]) < 1e-12);
}

TEST_CASE("pentagon rescaling refuses a non-scalar central lambda") {
    // commutative C^2 with block-dependent scalars: v_hat = diag(2, 5)
    Cvec vhat{cplx(2, 0), cplx(5, 0)};
    const TwoAlgebra t = delta_two_algebra(2, diagonal_delta(2));
    const PentagonResult r = pentagon_rescale(t.algebra, t.mu, vhat);
    CHECK_FALSE(r.ok);
    CHECK(r.error == "lambda central but not scalar");
    // the reported decomposition is lambda = v_hat^{-1} componentwise
    CHECK(std::abs(r.lambda_decomposition[0] - cplx(0.5, 0)) < 1e-12);
    CHECK(std::abs(r.lambda_decomposition[1] - cplx(0.2, 0)) < 1e-12);
}

TEST_CASE("pentagon rescaling refuses a non-invertible v_hat") {
    const TwoAlgebra t = delta_two_algebra(2, diagonal_delta(2));
    const PentagonResult r = pentagon_rescale(t.algebra, t.mu, {cplx(1, 0), cplx(0, 0)});
    CHECK_FALSE(r.ok);
}

TEST_CASE("strict interchange holds for verified instances") {
    std::vector<std::pair<int, int>> d{{0, 0}, {0, 1}, {0, 2}, {0, 3}};
    const TwoAlgebra t = delta_two_algebra(4, d);
    const TwoAlgebraReport r = verify_two_algebra(t);
    CHECK(r.interchange_residual < 1e-12);
    Rng rng(13);
    Cvec a(4), b(4), c(4), e(4);
    for (auto& x : a) x = rng.gauss();
    for (auto& x : b) x = rng.gauss();
    for (auto& x : c) x = rng.gauss();
    for (auto& x : e) x = rng.gauss();
    const Cvec lhs = t.col(t.algebra.multiply(a, b), t.algebra.multiply(c, e));
    const Cvec rhs = t.algebra.multiply(t.col(a, c), t.col(b, e));
    double dist = 0;
    for (int i = 0; i < 4; ++i) dist = std::max(dist, std::abs(lhs[i] - rhs[i]));
    CHECK(dist < 1e-12);
}
