#pragma once

namespace fnet {

/// Numerical tolerance policy. `eps` is the base tolerance; rank decisions
/// use eps relative to the largest singular value, eigenvalue grouping uses
/// a 10x wider gap.
struct Tol {
    double eps = 1e-9;
    double gap() const { return 10.0 * eps; }
};

}  // namespace fnet
