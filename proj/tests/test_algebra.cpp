#include "doctest.h"

#include <algorithm>

#include "fusionnet/algebra.hpp"
#include "fusionnet/lapack.hpp"
#include "oracles.hpp"

using namespace fnet;

namespace {

Cmat diag3(double a, double b, double c) {
    Cmat d(3, 3);
    d(0, 0) = a;
    d(1, 1) = b;
    d(2, 2) = c;
    return d;
}

bool blocks_are(const RepresentedAlgebra& a, std::vector<Block> expect) {
    std::vector<Block> got = a.blocks();
    auto key = [](const Block& b) { return std::pair(b.n, b.m); };
    std::sort(got.begin(), got.end(), [&](auto x, auto y) { return key(x) < key(y); });
    std::sort(expect.begin(), expect.end(), [&](auto x, auto y) { return key(x) < key(y); });
    return got == expect;
}

}  // namespace

TEST_CASE("closure of nothing is the scalars") {
    const RepresentedAlgebra a = generate_closure({}, 3);
    CHECK(a.dim() == 1);
    CHECK(blocks_are(a, {{1, 3}}));
}

TEST_CASE("matrix units generate the full algebra") {
    Cmat e12(2, 2), e21(2, 2);
    e12(0, 1) = 1;
    e21(1, 0) = 1;
    const RepresentedAlgebra a = generate_closure({e12, e21}, 2);
    CHECK(a.dim() == 4);
    CHECK(blocks_are(a, {{2, 1}}));
}

TEST_CASE("closure of diag(1,2,2)") {
    const Cmat d = diag3(1, 2, 2);
    // oracle: dimension of the span of powers
    const int expect_dim = oracle::power_span_dim(d);
    CHECK(expect_dim == 2);
    const RepresentedAlgebra a = generate_closure({d}, 3);
    CHECK(a.dim() == expect_dim);
    CHECK(blocks_are(a, {{1, 1}, {1, 2}}));
    // commutative: center equals the whole algebra
    const RepresentedAlgebra z = center(a);
    CHECK(z.dim() == a.dim());
    CHECK(subspace_residual(z, a) < 1e-9);
}

TEST_CASE("commutant: tensor factor") {
    const RepresentedAlgebra m2 = RepresentedAlgebra::full_matrix(2);
    const RepresentedAlgebra a = tensor_product(m2, RepresentedAlgebra::scalars(2));
    const RepresentedAlgebra ac = commutant(a);
    CHECK(ac.dim() == 4);
    const RepresentedAlgebra expect = tensor_product(RepresentedAlgebra::scalars(2), m2);
    CHECK(subspace_residual(ac, expect) < 1e-9);
}

TEST_CASE("commutant: scalars and maximal abelian") {
    const RepresentedAlgebra s = RepresentedAlgebra::scalars(5);
    const RepresentedAlgebra sc = commutant(s);
    CHECK(sc.dim() == 25);
    CHECK(blocks_are(sc, {{5, 1}}));

    const RepresentedAlgebra d = RepresentedAlgebra::diagonal(2);
    const RepresentedAlgebra dc = commutant(d);
    CHECK(subspace_residual(d, dc) < 1e-12);
}

TEST_CASE("relative commutant") {
    const RepresentedAlgebra m2 = RepresentedAlgebra::full_matrix(2);
    const RepresentedAlgebra m3 = RepresentedAlgebra::full_matrix(3);
    const RepresentedAlgebra b = tensor_product(m2, m3);

    // A = B -> center of B
    const RepresentedAlgebra rc1 = relative_commutant(b, b);
    CHECK(rc1.dim() == 1);

    // scalars inside B -> B
    const RepresentedAlgebra rc2 = relative_commutant(RepresentedAlgebra::scalars(6), b);
    CHECK(rc2.dim() == b.dim());

    // M_2 ⊗ 1 inside M_2 ⊗ M_3 -> 1 ⊗ M_3, checked against the brute-force
    // constraint-solve oracle
    const RepresentedAlgebra a = tensor_product(m2, RepresentedAlgebra::scalars(3));
    const RepresentedAlgebra rc3 = relative_commutant(a, b);
    CHECK(rc3.dim() == 9);
    const std::vector<Cmat> oc = oracle::brute_commutant(a.generators(), 6);
    CHECK(static_cast<int>(oc.size()) == 9);  // here A' = 1 ⊗ M_3 already
    for (const Cmat& x : oc) CHECK(rc3.membership_residual(x) < 1e-8);

    // non-inclusion is rejected
    CHECK_THROWS(relative_commutant(b, a));
}

TEST_CASE("center and is_factor") {
    const RepresentedAlgebra m4 = RepresentedAlgebra::full_matrix(4);
    CHECK(is_factor(m4));
    CHECK(center(m4).dim() == 1);

    // M_2 ⊕ M_3 with multiplicities (1,1) on dim 5
    Rng rng(21);
    const RepresentedAlgebra a = oracle::random_multimatrix(rng, {{2, 1}, {3, 1}}, 5);
    CHECK_FALSE(is_factor(a));
    CHECK(center(a).dim() == 2);
}

TEST_CASE("wedderburn block bookkeeping") {
    // multiplicities (2,1): ambient must be 2*2+3*1 = 7
    Rng rng(5);
    CHECK_THROWS(oracle::random_multimatrix(rng, {{2, 1}, {3, 1}}, 13));
    const RepresentedAlgebra a = oracle::random_multimatrix(rng, {{2, 2}, {3, 1}}, 7);
    std::vector<int> zranks;
    for (int i = 0; i < a.num_blocks(); ++i)
        zranks.push_back(static_cast<int>(std::llround(trace(a.central_projection(i)).real())));
    std::sort(zranks.begin(), zranks.end());
    CHECK(zranks == std::vector<int>{3, 4});

    // commutative diag(C^3): three rank-1 central projections
    const RepresentedAlgebra d = generate_closure({diag3(1, 2, 3)}, 3);
    CHECK(d.num_blocks() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(trace(d.central_projection(i)).real() - 1.0) < 1e-9);
}

TEST_CASE("closure recovers a conjugated multi-matrix algebra and the commutant swaps blocks") {
    Rng rng(17);
    for (int trial = 0; trial < 4; ++trial) {
        std::vector<Block> blocks;
        switch (trial) {
            case 0: blocks = {{2, 1}, {1, 2}}; break;
            case 1: blocks = {{3, 2}, {1, 1}}; break;
            case 2: blocks = {{2, 3}, {2, 1}}; break;
            default: blocks = {{4, 1}, {1, 2}, {2, 2}}; break;
        }
        int amb = 0;
        for (const Block& b : blocks) amb += b.n * b.m;
        const RepresentedAlgebra planted = oracle::random_multimatrix(rng, blocks, amb);
        const RepresentedAlgebra closed =
            generate_closure(planted.standard_generators(), amb, {}, 1000 + trial);
        CHECK(blocks_are(closed, blocks));
        CHECK(subspace_residual(closed, planted) < 1e-8);

        const RepresentedAlgebra c = commutant(closed);
        std::vector<Block> swapped;
        for (const Block& b : blocks) swapped.push_back({b.m, b.n});
        CHECK(blocks_are(c, swapped));

        // double commutant returns to the original
        const RepresentedAlgebra cc = commutant(c);
        CHECK(subspace_residual(cc, closed) < 1e-8);

        // dimension count
        int dsum = 0, ssum = 0;
        for (const Block& b : closed.blocks()) {
            dsum += b.n * b.n;
            ssum += b.n * b.m;
        }
        CHECK(closed.dim() == dsum);
        CHECK(ssum == amb);
    }
}

TEST_CASE("brute-force commutant oracle agrees with the structured commutant") {
    Rng rng(23);
    const RepresentedAlgebra a = oracle::random_multimatrix(rng, {{2, 2}, {1, 1}}, 5);
    const RepresentedAlgebra c = commutant(a);
    const std::vector<Cmat> bc = oracle::brute_commutant(a.generators(), 5);
    CHECK(static_cast<int>(bc.size()) == c.dim());
    for (const Cmat& x : bc) CHECK(c.membership_residual(x) < 1e-8);
}

TEST_CASE("join and tensor") {
    const RepresentedAlgebra m2 = RepresentedAlgebra::full_matrix(2);
    const RepresentedAlgebra s2 = RepresentedAlgebra::scalars(2);
    const RepresentedAlgebra left = tensor_product(m2, s2);
    const RepresentedAlgebra right = tensor_product(s2, m2);
    const RepresentedAlgebra j = join(left, right);
    CHECK(j.dim() == 16);
    CHECK(blocks_are(j, {{4, 1}}));

    // join is commutative and associative as a subspace
    const RepresentedAlgebra j2 = join(right, left);
    CHECK(subspace_residual(j, j2) < 1e-8);

    const RepresentedAlgebra t = tensor_product(m2, RepresentedAlgebra::full_matrix(3));
    CHECK(blocks_are(t, {{6, 1}}));
}

TEST_CASE("opposite is involutive") {
    Rng rng(31);
    const RepresentedAlgebra a = oracle::random_multimatrix(rng, {{2, 1}, {1, 2}}, 4);
    const RepresentedAlgebra oo = opposite(opposite(a));
    CHECK(subspace_residual(a, oo) < 1e-10);
    CHECK(blocks_are(opposite(a), a.blocks()));
}

TEST_CASE("inclusion data") {
    const RepresentedAlgebra m3 = RepresentedAlgebra::full_matrix(3);
    const InclusionData d1 = inclusion_data(m3, m3);
    CHECK(d1.lambda == std::vector<std::vector<int>>{{1}});
    CHECK(d1.index == doctest::Approx(1.0));

    const RepresentedAlgebra s2 = RepresentedAlgebra::scalars(2);
    const RepresentedAlgebra m2 = RepresentedAlgebra::full_matrix(2);
    const InclusionData d2 = inclusion_data(s2, m2);
    CHECK(d2.lambda == std::vector<std::vector<int>>{{2}});
    CHECK(d2.index == doctest::Approx(4.0));

    const RepresentedAlgebra diag = RepresentedAlgebra::diagonal(2);
    const InclusionData d3 = inclusion_data(diag, m2);
    CHECK(d3.lambda == std::vector<std::vector<int>>{{1}, {1}});
    CHECK(d3.index == doctest::Approx(2.0));
}

TEST_CASE("canonical trace is positive, unital, tracial") {
    Rng rng(41);
    const RepresentedAlgebra a = oracle::random_multimatrix(rng, {{2, 2}, {3, 1}}, 7);
    CHECK(std::abs(a.canonical_trace(Cmat::identity(7)) - cplx(1, 0)) < 1e-10);
    for (int t = 0; t < 5; ++t) {
        const Cmat x = a.expect(rng.gauss_matrix(7, 7));
        const Cmat y = a.expect(rng.gauss_matrix(7, 7));
        CHECK(std::abs(a.canonical_trace(matmul(x, y)) - a.canonical_trace(matmul(y, x))) < 1e-9);
        const double pos = a.canonical_trace(matmul(dagger(x), x)).real();
        CHECK(pos >= -1e-12);
    }
    // weights are n_i / sum n_j^2
    const std::vector<double> w = a.trace_weights();
    double s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s += w[i] * a.blocks()[i].n * a.blocks()[i].m / static_cast<double>(a.blocks()[i].m);
    (void)s;
}

TEST_CASE("star homomorphism from basis images") {
    // inclusion M_2 -> M_2 ⊗ M_2, x -> x ⊗ 1
    const RepresentedAlgebra m2 = RepresentedAlgebra::full_matrix(2);
    auto src = std::make_shared<RepresentedAlgebra>(m2);
    std::vector<Cmat> images;
    for (const Cmat& b : m2.hs_basis()) images.push_back(kron(b, Cmat::identity(2)));
    const StarHomomorphism phi = StarHomomorphism::from_basis_images(src, 4, images);
    CHECK(phi.unital());
    CHECK(phi.injective());
    CHECK(phi.hom_residual() < 1e-10);
    Rng rng(51);
    const Cmat x = m2.expect(rng.gauss_matrix(2, 2));
    CHECK(fro_norm(phi.apply(x) - kron(x, Cmat::identity(2))) < 1e-9);
    CHECK(blocks_are(phi.image(), {{2, 2}}));
}

TEST_CASE("abstract algebra structure") {
    const AbstractAlgebra f3 = AbstractAlgebra::functions(3);
    CHECK(f3.associativity_residual() < 1e-14);
    CHECK(f3.unit_residual() < 1e-14);

    const AbstractAlgebra dn = AbstractAlgebra::dual_numbers();
    CHECK(dn.associativity_residual() < 1e-14);
    // x is nilpotent, not invertible
    CHECK_FALSE(dn.try_inverse({cplx(0, 0), cplx(1, 0)}).has_value());
    CHECK(dn.try_inverse({cplx(1, 0), cplx(5, 0)}).has_value());

    const AbstractAlgebra m2 = AbstractAlgebra::matrix_units(2);
    CHECK(m2.associativity_residual() < 1e-14);
    CHECK(m2.unit_residual() < 1e-14);
    const AbstractAlgebra ut = AbstractAlgebra::upper_triangular2();
    CHECK(ut.associativity_residual() < 1e-14);
    CHECK(ut.unit_residual() < 1e-14);

    // from_represented round-trips multiplication
    const AbstractAlgebra ab = AbstractAlgebra::from_represented(RepresentedAlgebra::full_matrix(2));
    CHECK(ab.dim == 4);
    CHECK(ab.associativity_residual() < 1e-10);
    CHECK(ab.unit_residual() < 1e-10);
}

TEST_CASE("non-finite and mismatched inputs are rejected") {
    Cmat bad(2, 2);
    bad(0, 0) = cplx(std::numeric_limits<double>::quiet_NaN(), 0);
    CHECK_THROWS(generate_closure({bad}, 2));
    CHECK_THROWS(generate_closure({Cmat::identity(3)}, 2));
}
