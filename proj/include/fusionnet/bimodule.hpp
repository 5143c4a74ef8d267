#pragma once

#include <optional>
#include <string>

#include "fusionnet/algebra.hpp"

namespace fnet {

/// Explicit unitary-equivalence certificate: a unitary intertwiner plus the
/// measured equivariance residual.  `ok` is set when the multiplicity data
/// agreed and the residual passed the tolerance at issue time.
struct Certificate {
    bool ok = false;
    Cmat unitary;  // target_dim x source_dim
    double residual = 0;
    std::string note;
};

/// Refusal witness for inequivalent bimodules.
struct MultiplicityMismatch {
    int row = 0, col = 0;
    long lhs = 0, rhs = 0;
};

struct MultiplicityMatrix {
    std::vector<std::vector<long>> c;
    friend bool operator==(const MultiplicityMatrix&, const MultiplicityMatrix&) = default;
};

struct StatDim {
    double value = 0;
    bool factor_case = false;  // value is then an exact integer multiplicity
};

/// Hilbert space with commuting left/right actions.  The right action is a
/// *-homomorphism from opposite(right):  x · b := right_action(b^T) x.
class Bimodule {
  public:
    Bimodule() = default;
    Bimodule(AlgPtr left, AlgPtr right, AlgPtr right_op, StarHomomorphism left_action,
             StarHomomorphism right_action);

    const AlgPtr& left() const { return left_; }
    const AlgPtr& right() const { return right_; }
    const AlgPtr& right_op() const { return right_op_; }
    int space_dim() const { return left_action_.target_dim(); }
    const StarHomomorphism& left_action() const { return left_action_; }
    const StarHomomorphism& right_action() const { return right_action_; }

    Cmat act_left(const Cmat& a) const { return left_action_.apply(a); }
    Cmat act_right(const Cmat& b) const { return right_action_.apply(transpose(b)); }

    /// Max commutation defect between left and right generator images, plus
    /// unitality defects.
    double validity_residual() const;

    /// Generator images of both actions (left gens, then right-op gens).
    std::vector<Cmat> action_generator_images() const;

  private:
    AlgPtr left_, right_, right_op_;
    StarHomomorphism left_action_, right_action_;
};

/// Validating constructor from dense action images on the HS bases of the
/// two algebras; the right images must form an antihomomorphism of `right`
/// (i.e. right multiplication style).  Throws on non-commuting or
/// non-unital actions.
Bimodule make_bimodule(AlgPtr left, AlgPtr right, const std::vector<Cmat>& left_images,
                       const std::vector<Cmat>& right_antihom_images, int space_dim,
                       Tol tol = {});

/// Standard form L²(A, tau) with left/right multiplication actions.
Bimodule l2_bimodule(AlgPtr a);

MultiplicityMatrix multiplicity_matrix(const Bimodule& h, Tol tol = {});
StatDim statistical_dimension(const Bimodule& h, Tol tol = {});

/// Connes fusion (finite-dimensional relative tensor product over the
/// canonical trace).  Requires h.right ≍ k.left.
Bimodule fuse(const Bimodule& h, const Bimodule& k, Tol tol = {});

/// The quotient map H ⊗ K -> H ⊠_B K realizing the fusion inner product
/// (rows are fused coordinates).  Dense; small spaces only.
Cmat fusion_quotient_map(const Bimodule& h, const Bimodule& k, Tol tol = {});

/// Conjugate bimodule: B–A module on the conjugate space, b·v̄ = conj(b* v).
Bimodule conjugate(const Bimodule& h, Tol tol = {});

/// Orthonormal basis of the space of bimodule intertwiners H -> K
/// (dense solve; small spaces).
std::vector<Cmat> intertwiner_space(const Bimodule& h, const Bimodule& k, Tol tol = {});

/// Certificate or refusal witness.
struct EquivalenceResult {
    Certificate cert;
    std::optional<MultiplicityMismatch> mismatch;
};
EquivalenceResult unitary_equivalence(const Bimodule& h, const Bimodule& k, Tol tol = {});

/// Generic certificate for two lists of paired generator images: finds a
/// unitary u with u g_H = g_K u for every pair, via least squares over the
/// joint equivariance system plus polar decomposition (dense; small).
Certificate intertwiner_certificate(int dim_h, int dim_k,
                                    const std::vector<std::pair<Cmat, Cmat>>& gen_pairs,
                                    Tol tol = {}, std::uint64_t seed = 0);

/// Direct sum of bimodules (block diagonal actions).
Bimodule direct_sum(const Bimodule& h, const Bimodule& k);

}  // namespace fnet
