#pragma once

#include "fusionnet/cmat.hpp"

// Thin wrappers over LAPACK decompositions with deterministic output
// conventions: eigenvalues ascending, eigenvector/singular-vector phases
// fixed so the largest-magnitude entry is real positive.

namespace fnet::la {

struct HermEig {
    std::vector<double> evals;  // ascending
    Cmat evecs;                 // columns are eigenvectors
};
HermEig heig(const Cmat& h);

struct Svd {
    Cmat u;                 // m x k
    std::vector<double> s;  // descending, length k = min(m,n)
    Cmat vh;                // k x n
};
Svd svd(const Cmat& a);

/// Number of singular values > rtol * s_max (0 for a zero matrix).
int rank(const Cmat& a, double rtol);

/// Orthonormal basis of the right null space {x : ax = 0}, as columns.
Cmat nullspace(const Cmat& a, double rtol);

/// Minimal-norm least-squares solution of a x = b (b may have several columns).
Cmat lstsq(const Cmat& a, const Cmat& b, double rtol);

/// Unitary factor of the polar decomposition a = u p (a must be square).
Cmat polar_unitary(const Cmat& a);

/// Solve a x = b for square invertible a.
Cmat solve(const Cmat& a, const Cmat& b);
Cmat inverse(const Cmat& a);

/// Largest singular value.
double op_norm(const Cmat& a);

/// Smallest singular value (0 if empty).
double min_sv(const Cmat& a);

}  // namespace fnet::la
