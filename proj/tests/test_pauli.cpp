#include "doctest.h"

#include "fusionnet/pauli.hpp"
#include "oracles.hpp"

using namespace fnet;

namespace {

PauliString xs(int nlegs, int leg) {
    PauliString s = PauliString::zero(nlegs);
    s.x[static_cast<std::size_t>(leg)] = 1;
    return s;
}
PauliString zs(int nlegs, int leg) {
    PauliString s = PauliString::zero(nlegs);
    s.z[static_cast<std::size_t>(leg)] = 1;
    return s;
}

}  // namespace

TEST_CASE("phaseperm matches dense pauli algebra") {
    const LegSpace legs{{2, 3}};
    PauliString s = PauliString::zero(2);
    s.x = {1, 2};
    s.z = {1, 1};
    const Cmat dense = pauli_operator(legs, s);
    CHECK(fro_norm(dense - pauli_phaseperm(legs, s).dense()) < 1e-14);

    // products realize the group law up to phase
    PauliString t = PauliString::zero(2);
    t.x = {1, 0};
    t.z = {0, 2};
    const Cmat p1 = matmul(pauli_operator(legs, s), pauli_operator(legs, t));
    const Cmat p2 = pauli_operator(legs, string_add(legs, s, t));
    // p1 = phase * p2: check |<p1,p2>| = dim
    const cplx ip = hs_inner(p2, p1);
    CHECK(std::abs(std::abs(ip) - static_cast<double>(legs.total())) < 1e-10);

    // adjoint/compose/kron of phaseperms agree with dense
    const PhasePerm ps = pauli_phaseperm(legs, s), pt = pauli_phaseperm(legs, t);
    CHECK(fro_norm(ps.adjoint().dense() - dagger(ps.dense())) < 1e-14);
    CHECK(fro_norm(ps.compose(pt).dense() - matmul(ps.dense(), pt.dense())) < 1e-14);
    CHECK(ps.dist(pt) == doctest::Approx(fro_norm(ps.dense() - pt.dense())));
}

TEST_CASE("transpose label rule") {
    const LegSpace legs{{2, 3}};
    for (int trial = 0; trial < 6; ++trial) {
        PauliString s = PauliString::zero(2);
        s.x = {trial % 2, trial % 3};
        s.z = {(trial / 2) % 2, (trial + 1) % 3};
        const Cmat tr = transpose(pauli_operator(legs, s));
        const Cmat expect = pauli_operator(legs, string_transpose(legs, s));
        const cplx ip = hs_inner(expect, tr);
        CHECK(std::abs(std::abs(ip) - static_cast<double>(legs.total())) < 1e-10);
    }
}

TEST_CASE("group order, membership, commutant") {
    const LegSpace legs{{2, 2, 2}};
    // full group on 3 qubits
    const PauliGroup full = full_pauli_group(legs);
    CHECK(full.order() == 64);
    CHECK(full.commutant().order() == 1);

    // algebra supported on leg 0 only
    const PauliGroup leg0(legs, {xs(3, 0), zs(3, 0)});
    CHECK(leg0.order() == 4);
    const PauliGroup comm = leg0.commutant();
    CHECK(comm.order() == 16);  // everything on legs 1,2
    CHECK(leg0.commutant().commutant().same(leg0));
    CHECK(comm.contains(xs(3, 1)));
    CHECK_FALSE(comm.contains(zs(3, 0)));  // fails against x0
    CHECK_FALSE(comm.contains(xs(3, 0)));

    // join and intersect
    const PauliGroup leg1(legs, {xs(3, 1), zs(3, 1)});
    CHECK(leg0.join(leg1).order() == 16);
    CHECK(leg0.intersect(leg1).order() == 1);
    CHECK(leg0.intersect(leg0.join(leg1)).same(leg0));
}

TEST_CASE("span blocks: even parity algebra splits into two blocks") {
    const LegSpace legs{{2, 2}};
    // invariants of conjugation by Z⊗Z: strings commuting with z0+z1
    PauliString zz = string_add(legs, zs(2, 0), zs(2, 1));
    const PauliGroup inv = PauliGroup(legs, {zz}).commutant();
    CHECK(inv.order() == 8);
    const PauliGroup::SpanBlocks sb = inv.span_blocks();
    CHECK(sb.blocks == 2);
    CHECK(sb.n == 2);
    CHECK(sb.m == 1);

    // dense cross-check: the span algebra equals M_2 ⊕ M_2
    const RepresentedAlgebra a = pauli_span_algebra(inv);
    CHECK(a.dim() == 8);
    CHECK(a.num_blocks() == 2);
    for (const Block& b : a.blocks()) {
        CHECK(b.n == 2);
        CHECK(b.m == 1);
    }
}

TEST_CASE("span expectation matches dense projection") {
    const LegSpace legs{{2, 2}};
    const PauliGroup g(legs, {xs(2, 0), zs(2, 0)});  // full algebra on leg 0
    const RepresentedAlgebra dense = pauli_span_algebra(g);
    Rng rng(5);
    const Cmat x = rng.gauss_matrix(4, 4);
    const Cmat e1 = pauli_span_expect(g, x);
    const Cmat e2 = dense.expect(x);
    CHECK(fro_norm(e1 - e2) < 1e-10);
}

TEST_CASE("mixed qubit/qutrit group arithmetic") {
    const LegSpace legs{{2, 3}};
    const PauliGroup full = full_pauli_group(legs);
    CHECK(full.order() == 36);
    const PauliGroup qutrit(legs, {xs(2, 1), zs(2, 1)});
    CHECK(qutrit.order() == 9);
    CHECK(qutrit.commutant().order() == 4);
    const PauliGroup::SpanBlocks sb = qutrit.span_blocks();
    CHECK(sb.blocks == 1);
    CHECK(sb.n == 3);
    CHECK(sb.m == 2);
    // enumerate covers the full group exactly once
    const std::vector<PauliString> all = full.enumerate(64);
    CHECK(all.size() == 36);
}
