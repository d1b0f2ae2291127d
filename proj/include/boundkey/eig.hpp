// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace boundkey {

/// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps all (p,q) pairs in row order, zeroing each off-diagonal entry,
/// until the off-diagonal Frobenius norm drops below `off_tol` relative to
/// the Frobenius norm of the input (absolute when that norm is below 1).
/// Matrices here are at most ~30x30, so the O(n^3)-per-sweep cost is
/// irrelevant; determinism is what matters. Throws EigenFailure if the
/// threshold is not reached within `max_sweeps`.
///
/// Returns eigenvalues sorted ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> m, int n,
                                       int max_sweeps = 100,
                                       double off_tol = 1e-13);

}  // namespace boundkey
