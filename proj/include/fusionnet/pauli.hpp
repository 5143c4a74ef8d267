#pragma once

#include <cstdint>
#include <vector>

#include "fusionnet/algebra.hpp"

// Generalized Pauli (clock/shift) machinery on tensor products of
// prime-dimensional legs.  Span algebras of string subgroups cover every
// lattice-net algebra in the tensor/orbifold/junction families, and their
// joins, commutants and intersections reduce to exact linear algebra over
// F_p, so axiom checks stay exhaustive at sizes where dense linear algebra
// would be hopeless.

namespace fnet {

struct LegSpace {
    std::vector<int> dims;  // prime dims (2, 3, ...)
    std::size_t total() const {
        std::size_t t = 1;
        for (int d : dims) t *= static_cast<std::size_t>(d);
        return t;
    }
    int nlegs() const { return static_cast<int>(dims.size()); }
    friend bool operator==(const LegSpace&, const LegSpace&) = default;
};

/// X^x Z^z exponents per leg (phase-free label).
struct PauliString {
    std::vector<int> x, z;

    static PauliString zero(int nlegs) {
        PauliString s;
        s.x.assign(static_cast<std::size_t>(nlegs), 0);
        s.z.assign(static_cast<std::size_t>(nlegs), 0);
        return s;
    }
    bool is_identity() const {
        for (int v : x)
            if (v) return false;
        for (int v : z)
            if (v) return false;
        return true;
    }
    int nlegs() const { return static_cast<int>(x.size()); }
    friend bool operator==(const PauliString&, const PauliString&) = default;
};

PauliString string_add(const LegSpace& legs, const PauliString& a, const PauliString& b);
PauliString string_neg(const LegSpace& legs, const PauliString& a);
/// Transpose of the realized operator: X^x Z^z -> X^{-x} Z^{z} up to phase.
PauliString string_transpose(const LegSpace& legs, const PauliString& a);
/// Pad/embed a string into a larger leg space: leg_map[i] = target leg of
/// source leg i.
PauliString string_embed(const PauliString& a, const std::vector<int>& leg_map, int target_legs);

/// e_j -> phase[j] * e_{perm[j]}: the realized form of Pauli strings and of
/// the structural isometries between leg spaces.
struct PhasePerm {
    std::vector<std::size_t> perm;
    std::vector<cplx> phase;

    static PhasePerm identity(std::size_t n);
    std::size_t dim() const { return perm.size(); }
    PhasePerm compose(const PhasePerm& other) const;  // this ∘ other
    PhasePerm adjoint() const;
    PhasePerm kron(const PhasePerm& other) const;
    PhasePerm scaled(cplx s) const;
    Cmat dense() const;
    /// Frobenius distance between the two realized operators.
    double dist(const PhasePerm& other) const;
    double norm() const;  // Frobenius
};

/// Dense clock/shift realization of a string on its leg space.
Cmat pauli_operator(const LegSpace& legs, const PauliString& s);
PhasePerm pauli_phaseperm(const LegSpace& legs, const PauliString& s);

/// Subgroup of strings modulo phase, canonicalized per prime.
class PauliGroup {
  public:
    PauliGroup() = default;
    PauliGroup(LegSpace legs, std::vector<PauliString> generators);

    const LegSpace& legs() const { return legs_; }
    /// |S|
    std::uint64_t order() const;
    /// Canonical (echelonized) generators.
    const std::vector<PauliString>& generators() const { return gens_; }

    bool contains(const PauliString& s) const;
    bool subgroup_of(const PauliGroup& other) const;
    bool same(const PauliGroup& other) const;

    /// Strings commuting with every element (symplectic-orthogonal group).
    PauliGroup commutant() const;
    PauliGroup join(const PauliGroup& other) const;
    PauliGroup intersect(const PauliGroup& other) const;
    PauliGroup center() const;

    /// All elements (guarded by cap).
    std::vector<PauliString> enumerate(std::size_t cap) const;

    /// Block data of the span algebra: `blocks` equal blocks of size n with
    /// multiplicity m on the full leg space.
    struct SpanBlocks {
        std::uint64_t blocks = 0;
        std::uint64_t n = 0;
        std::uint64_t m = 0;
    };
    SpanBlocks span_blocks() const;

  private:
    LegSpace legs_;
    std::vector<PauliString> gens_;  // echelonized union of per-prime bases
    void canonicalize();
};

/// Full string group on the leg space.
PauliGroup full_pauli_group(const LegSpace& legs);

/// Dense RepresentedAlgebra for the span of a string subgroup (guarded).
RepresentedAlgebra pauli_span_algebra(const PauliGroup& g, Tol tol = {}, std::uint64_t seed = 0);

/// Hilbert-Schmidt projection onto the span of the subgroup, computed by
/// iterated conjugation averages over the commutant's generators.
Cmat pauli_span_expect(const PauliGroup& g, const Cmat& x);

}  // namespace fnet
