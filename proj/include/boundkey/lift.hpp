// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "boundkey/dist.hpp"
#include "boundkey/types.hpp"

namespace boundkey {

// Pure tripartite state with nonnegative real amplitudes (entrywise square
// root of a pmf).
struct PureState3 {
    int d_a = 0, d_b = 0, d_e = 0;
    std::vector<double> amp;  // same layout as JointDistribution3::p

    double& at(int a, int b, int e) {
        return amp[(static_cast<std::size_t>(a) * d_b + b) * d_e + e];
    }
    double at(int a, int b, int e) const {
        return amp[(static_cast<std::size_t>(a) * d_b + b) * d_e + e];
    }
    double norm2() const;
};

// Real symmetric unit-trace matrix on the AB index space, row index a*d_b+b.
struct DensityMatrix {
    int d_a = 0, d_b = 0;
    std::vector<double> m;  // dim() x dim() row-major

    DensityMatrix() = default;
    DensityMatrix(int da, int db)
        : d_a(da), d_b(db),
          m(static_cast<std::size_t>(da) * db * da * db, 0.0) {}

    int dim() const { return d_a * d_b; }
    double& at(int i, int j) { return m[static_cast<std::size_t>(i) * dim() + j]; }
    double at(int i, int j) const { return m[static_cast<std::size_t>(i) * dim() + j]; }
    double trace() const;
};

struct PTReport {
    bool is_pt_invariant = false;
    double max_abs_deviation = 0.0;
    double min_eig_pt = 0.0;
    bool is_ppt = false;
};

// A failed cross condition: either the partner cells of an in-clique pair
// are not matched (condition 1) or the cross determinant exceeds tolerance
// (condition 2).
struct CrossViolation {
    Cell first, second;
    bool partner_mismatch = false;
    double det = 0.0;
};

struct PtCombinatorialReport {
    bool invariant = true;
    std::vector<CrossViolation> violations;
};

PureState3 lift_state(const JointDistribution3& dist);

DensityMatrix reduce_to_AB(const PureState3& psi);

// Transpose on Bob's side; an involution, trace preserving, not necessarily
// PSD on output.
DensityMatrix partial_transpose(const DensityMatrix& rho);

PTReport pt_report(const DensityMatrix& rho, double tol);

PtCombinatorialReport pt_invariance_combinatorial(const JointDistribution3& dist,
                                                  double tol);

// S(B) - S(E) in bits, from eigenvalues of the reduced density matrices.
double coherent_information(const PureState3& psi);

// n x n reduced density matrix of |psi><psi| on one party, row-major.
std::vector<double> reduced_density_matrix(const PureState3& psi, Party keep);

// Entropy of a PSD symmetric matrix in bits; eigenvalues in [-1e-12, 0) are
// clamped to 0, anything lower is a DomainError.
double von_neumann_entropy_bits(const std::vector<double>& sym, int n);

}  // namespace boundkey
