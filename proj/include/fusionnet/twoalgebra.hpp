#pragma once

#include <optional>
#include <string>

#include "fusionnet/algebra.hpp"

namespace fnet {

/// Unital algebra with a second (vertical) product col(a,b) := mu(a ⊗ b)
/// implemented by an algebra homomorphism mu: A ⊗ A -> A, and a
/// distinguished invertible element v mediating vertical associativity.
struct TwoAlgebra {
    AbstractAlgebra algebra;
    Cmat mu;  // dim x dim² matrix on coefficient vectors
    Cvec v;

    Cvec col(const Cvec& a, const Cvec& b) const;
    Cvec horizontal(const Cvec& a, const Cvec& b) const { return algebra.multiply(a, b); }
    Cvec basis_vec(int i) const;
};

struct TwoAlgebraReport {
    bool structurally_valid = false;
    bool v_invertible = false;
    double mu_hom_residual = 0;    // mu multiplicative over basis pairs
    double mu_unit_residual = 0;   // col(1,1) = 1
    double axiom1_residual = 0;    // v col(col(a,b),c) v^{-1} = col(a,col(b,c))
    double axiom2_residual = 0;    // vv = col(1,v) v col(v,1)
    double interchange_residual = 0;
    bool axiom1_pass = false;
    bool axiom2_pass = false;
    std::string note;
};

/// Verifies the axioms on the spanning set of basis tuples.
TwoAlgebraReport verify_two_algebra(const TwoAlgebra& t, Tol tol = {});

Cvec vertical_product(const TwoAlgebra& t, const Cvec& a, const Cvec& b);

/// [a] := col(col(1,a),1)
Cvec bracket(const TwoAlgebra& t, const Cvec& a);

/// Residual of (v [a] v^{-1}) [b] = [b] (v [a] v^{-1}).
double eh_commutation_check(const TwoAlgebra& t, const Cvec& a, const Cvec& b);

struct PentagonResult {
    bool ok = false;
    Cvec v;                 // the rescaled element, when ok
    Cvec lambda;            // the central correction found
    double axiom2_residual = 0;
    std::string error;      // "lambda not central" / "lambda central but not scalar"
    Cvec lambda_decomposition;  // coefficient vector of lambda (central decomposition data)
};

/// Rescales v_hat by the central element lambda := col(v̂⁻¹,1) v̂⁻¹ col(1,v̂⁻¹) v̂ v̂
/// so that the pentagon (axiom 2) holds; requires lambda scalar.
PentagonResult pentagon_rescale(const AbstractAlgebra& algebra, const Cmat& mu, const Cvec& v_hat,
                                Tol tol = {});

/// Commutative 2-algebra of functions on {0..n-1} with vertical product
/// induced by delta: X -> X x X (col(a,b)(x) = a(delta1(x)) b(delta2(x))).
/// Checks coassociativity of delta (required for axiom 1 with v = 1).
TwoAlgebra delta_two_algebra(int n, const std::vector<std::pair<int, int>>& delta,
                             std::optional<Cvec> v = std::nullopt);

}  // namespace fnet
