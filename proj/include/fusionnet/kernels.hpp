#pragma once

#include "fusionnet/cmat.hpp"

// Dense kernels. Each kernel has a serial reference implementation and an
// OpenMP variant; the OpenMP variants parallelize over independent output
// elements only, so both produce bit-identical results for the same input.
// Top-level entry points dispatch on problem size.

namespace fnet::kernels {

namespace serial {
void matmul(Cmat& c, const Cmat& x, const Cmat& y);
void dagger(Cmat& d, const Cmat& x);
void kron(Cmat& k, const Cmat& x, const Cmat& y);
cplx hs_inner(const Cmat& x, const Cmat& y);  // tr(x^* y)
void apply_commutator_gram(Cmat& g, const std::vector<Cmat>& lhs, const std::vector<Cmat>& rhs);
}  // namespace serial

namespace par {
void matmul(Cmat& c, const Cmat& x, const Cmat& y);
void dagger(Cmat& d, const Cmat& x);
void kron(Cmat& k, const Cmat& x, const Cmat& y);
cplx hs_inner(const Cmat& x, const Cmat& y);
void apply_commutator_gram(Cmat& g, const std::vector<Cmat>& lhs, const std::vector<Cmat>& rhs);
}  // namespace par

}  // namespace fnet::kernels

namespace fnet {

Cmat matmul(const Cmat& x, const Cmat& y);
Cmat dagger(const Cmat& x);
Cmat transpose(const Cmat& x);
Cmat conj(const Cmat& x);
Cmat kron(const Cmat& x, const Cmat& y);

cplx trace(const Cmat& x);
cplx hs_inner(const Cmat& x, const Cmat& y);
double fro_norm(const Cmat& x);
double max_abs(const Cmat& x);
bool all_finite(const Cmat& x);

/// ‖xy − yx‖_F
double commutator_norm(const Cmat& x, const Cmat& y);

Cvec matvec(const Cmat& x, const Cvec& v);

/// Permutes tensor legs of an operator on ⊗_i C^{dims[i]}.
/// perm[k] = which input leg ends up at output position k.
Cmat permute_legs(const Cmat& x, const std::vector<int>& dims, const std::vector<int>& perm);

/// Gram matrix g_{ij} = <v_i, v_j>_HS of a list of equally-shaped matrices.
Cmat gram(const std::vector<Cmat>& v);

}  // namespace fnet
