#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "fusionnet/cmat.hpp"
#include "fusionnet/kernels.hpp"
#include "fusionnet/rng.hpp"
#include "fusionnet/tol.hpp"

namespace fnet {

/// One Wedderburn block: irrep size n acting with multiplicity m.
struct Block {
    int n = 0;
    int m = 0;
    friend bool operator==(const Block&, const Block&) = default;
};

/// A *-closed unital operator algebra on C^ambient, stored through its
/// Wedderburn structure: per block an isometry V_i : C^{n_i} ⊗ C^{m_i} -> H
/// with A = ⊕_i V_i (M_{n_i} ⊗ 1_{m_i}) V_i^*.  The Hilbert-Schmidt basis
/// demanded by the interchange formats is materialized on demand; large
/// algebras stay in structured form.
class RepresentedAlgebra {
  public:
    RepresentedAlgebra() = default;
    RepresentedAlgebra(int ambient, std::vector<Block> blocks, std::vector<Cmat> isometries);

    static RepresentedAlgebra full_matrix(int n);
    static RepresentedAlgebra scalars(int ambient);
    /// Diagonal matrices on C^n (maximal abelian).
    static RepresentedAlgebra diagonal(int n);

    int ambient() const { return ambient_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const std::vector<Cmat>& isometries() const { return isometries_; }
    int num_blocks() const { return static_cast<int>(blocks_.size()); }

    /// Vector-space dimension Σ n_i².
    int dim() const;
    /// Σ n_i m_i; equals ambient for a unital algebra.
    int support_rank() const;
    bool is_factor() const { return blocks_.size() == 1; }
    bool is_abelian() const;

    Cmat central_projection(int i) const;  // z_i = V_i V_i^*
    Cmat unit() const;                     // Σ z_i

    /// Realize a block coordinate: V_i (xi ⊗ 1_{m_i}) V_i^*.
    Cmat element(int i, const Cmat& xi) const;
    /// Assemble an element from all block coordinates.
    Cmat element(const std::vector<Cmat>& xi) const;
    /// Block coordinate of x: (1/m_i) tr_2(V_i^* x V_i).
    Cmat coord(int i, const Cmat& x) const;
    std::vector<Cmat> coords(const Cmat& x) const;

    /// Hilbert-Schmidt-orthogonal projection of x onto the algebra.
    Cmat expect(const Cmat& x) const;
    /// ‖x − E_A(x)‖_F / max(1, ‖x‖_F)
    double membership_residual(const Cmat& x) const;

    /// Small dense generating set (per block a clock/shift pair).
    std::vector<Cmat> standard_generators() const;
    /// Generators recorded at construction time, if any; falls back to
    /// standard_generators().
    const std::vector<Cmat>& generators() const;
    void set_generators(std::vector<Cmat> g) { generators_ = std::move(g); }

    /// Canonical tracial state: weights n_i / Σ_j n_j² per block.
    std::vector<double> trace_weights() const;
    cplx canonical_trace(const Cmat& x) const;

    /// HS-orthonormal basis (Pauli-free dense form); guarded against
    /// excessive materialization.
    std::vector<Cmat> hs_basis() const;
    /// Basis orthonormal under <x,y> = tau(x^* y); used by standard forms.
    /// Element (i,p,q) is sqrt(S/n_i) V_i(e_pq ⊗ 1/m_i ...) in block order.
    std::vector<Cmat> tau_basis() const;

    /// Residual over generator products/adjoints/unit; diagnostic.
    double structure_residual() const;

  private:
    int ambient_ = 0;
    std::vector<Block> blocks_;
    std::vector<Cmat> isometries_;
    std::vector<Cmat> generators_;
};

using AlgPtr = std::shared_ptr<const RepresentedAlgebra>;

/// Closure / decomposition -----------------------------------------------

/// Smallest *-closed unital subalgebra of B(C^ambient) containing the
/// generators.  Dense path; guarded by a memory cap.
RepresentedAlgebra generate_closure(const std::vector<Cmat>& generators, int ambient,
                                    Tol tol = {}, std::uint64_t seed = 0);

/// Wedderburn data from an explicit spanning set that is already known to
/// span a *-closed unital algebra (validated).
RepresentedAlgebra algebra_from_span(const std::vector<Cmat>& span, int ambient,
                                     Tol tol = {}, std::uint64_t seed = 0);

/// Commutant inside B(ambient); block data is the (m,n) swap of the input.
RepresentedAlgebra commutant(const RepresentedAlgebra& a);

/// A' ∩ B for A ⊆ B (inclusion checked).
RepresentedAlgebra relative_commutant(const RepresentedAlgebra& a, const RepresentedAlgebra& b,
                                      Tol tol = {}, std::uint64_t seed = 0);

RepresentedAlgebra center(const RepresentedAlgebra& a);
bool is_factor(const RepresentedAlgebra& a);

RepresentedAlgebra tensor_product(const RepresentedAlgebra& a, const RepresentedAlgebra& b);
/// Opposite algebra realized by transposition on the same space; the
/// canonical antihomomorphism is x -> x^T.
RepresentedAlgebra opposite(const RepresentedAlgebra& a);
/// Algebra generated by A ∪ B on a common ambient space.
RepresentedAlgebra join(const RepresentedAlgebra& a, const RepresentedAlgebra& b,
                        Tol tol = {}, std::uint64_t seed = 0);

/// Intersection A ∩ B as subspaces (always a *-closed unital algebra when
/// both contain the identity).
RepresentedAlgebra intersect(const RepresentedAlgebra& a, const RepresentedAlgebra& b,
                             Tol tol = {}, std::uint64_t seed = 0);

/// Max membership residual of A's generators and central projections in B
/// (≈ 0 iff A ⊆ B).
double subspace_contained(const RepresentedAlgebra& a, const RepresentedAlgebra& b);
/// Symmetric subspace comparison.
double subspace_residual(const RepresentedAlgebra& a, const RepresentedAlgebra& b);
bool same_algebra(const RepresentedAlgebra& a, const RepresentedAlgebra& b, double eps = 1e-8);

/// Inclusion matrix Λ_{ij} = multiplicity of block i of A in block j of B,
/// and the index ‖Λ‖².
struct InclusionData {
    std::vector<std::vector<int>> lambda;
    double index = 0;
};
InclusionData inclusion_data(const RepresentedAlgebra& a, const RepresentedAlgebra& b,
                             Tol tol = {});

/// *-homomorphisms ---------------------------------------------------------

/// A *-homomorphism φ: A -> B(C^target_dim) stored through its isotypic
/// structure: per source block an isometry W_i : C^{n_i} ⊗ C^{c_i} -> V
/// (c_i ≥ 0 the local multiplicity) with φ(x) = Σ_i W_i(coord_i(x) ⊗ 1)W_i^*.
class StarHomomorphism {
  public:
    StarHomomorphism() = default;
    StarHomomorphism(AlgPtr source, int target_dim, std::vector<int> mult,
                     std::vector<Cmat> isometries);

    /// Reconstruct the isotypic data from images of the full HS basis
    /// (dense input path, small algebras only).
    static StarHomomorphism from_basis_images(AlgPtr source, int target_dim,
                                              const std::vector<Cmat>& images,
                                              Tol tol = {}, std::uint64_t seed = 0);

    const AlgPtr& source() const { return source_; }
    int target_dim() const { return target_dim_; }
    const std::vector<int>& multiplicities() const { return mult_; }
    const std::vector<Cmat>& isometries() const { return isometries_; }

    Cmat apply(const Cmat& x) const;
    /// Image of the block-i coordinate.
    Cmat apply_coord(int i, const Cmat& xi) const;

    bool unital() const;
    bool injective() const;  // every block has multiplicity > 0

    /// Image algebra as a structured RepresentedAlgebra on the target
    /// (blocks with c_i = 0 dropped); not necessarily unital on the target.
    RepresentedAlgebra image() const;

    /// max residual of multiplicativity/adjoint/unit over the source
    /// generators (φ(g)φ(h) vs φ(gh), φ(g)^* vs φ(g^*)).
    double hom_residual() const;

  private:
    AlgPtr source_;
    int target_dim_ = 0;
    std::vector<int> mult_;
    std::vector<Cmat> isometries_;
};

/// Identity inclusion A -> B(ambient).
StarHomomorphism identity_hom(AlgPtr a);

/// Builds the isotypic form of a *-homomorphism from images of the block
/// matrix units: unit_image(i, p, q) must return φ(V_i(e_pq ⊗ 1)V_i^*).
StarHomomorphism hom_from_unit_images(
    AlgPtr source, int target_dim,
    const std::function<Cmat(int, int, int)>& unit_image, Tol tol = {});

/// Composition ψ ∘ φ (φ: A -> B(V), ψ must be defined on an algebra
/// containing φ's image; given here by its action on V-operators).
StarHomomorphism compose_hom(const StarHomomorphism& phi,
                             const std::function<Cmat(const Cmat&)>& psi, int target_dim,
                             Tol tol = {});

/// Abstract (not necessarily semisimple) algebras ---------------------------

/// Finite-dimensional unital algebra given by structure constants.
/// mul is a (k x k²) matrix: coords(xy) = mul · (x ⊗ y).
struct AbstractAlgebra {
    int dim = 0;
    Cmat mul;
    Cvec unit;

    Cvec multiply(const Cvec& x, const Cvec& y) const;
    Cmat left_mult(const Cvec& x) const;   // k x k matrix of y -> xy
    Cmat right_mult(const Cvec& x) const;  // k x k matrix of y -> yx
    std::optional<Cvec> try_inverse(const Cvec& x, double eps = 1e-9) const;

    double associativity_residual() const;
    double unit_residual() const;

    static AbstractAlgebra from_represented(const RepresentedAlgebra& a);
    /// Functions on an n-point set with pointwise multiplication.
    static AbstractAlgebra functions(int n);
    /// C[x]/(x²): basis {1, x}.
    static AbstractAlgebra dual_numbers();
    /// 2x2 upper-triangular matrices, basis {e11, e12, e22}.
    static AbstractAlgebra upper_triangular2();
    /// Full matrix algebra M_n with matrix-unit basis e_{ij} (row-major).
    static AbstractAlgebra matrix_units(int n);

    AbstractAlgebra tensor_with_self() const;  // A ⊗ A
    AbstractAlgebra opposite() const;
    AbstractAlgebra tensor(const AbstractAlgebra& other) const;
};

}  // namespace fnet
