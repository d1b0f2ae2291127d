// SPDX-License-Identifier: Apache-2.0
#include "boundkey/eig.hpp"

#include <algorithm>
#include <cmath>

#include "boundkey/types.hpp"

namespace boundkey {

namespace {

double off_diagonal_frobenius(const std::vector<double>& m, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) s += m[static_cast<std::size_t>(i) * n + j] *
                             m[static_cast<std::size_t>(i) * n + j];
    return std::sqrt(s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> m, int n, int max_sweeps,
                                       double off_tol) {
    if (n <= 0) throw DomainError("jacobi_eigenvalues: empty matrix");
    if (m.size() != static_cast<std::size_t>(n) * n)
        throw DimensionMismatch("jacobi_eigenvalues: size mismatch");

    auto idx = [n](int i, int j) { return static_cast<std::size_t>(i) * n + j; };

    double fro = 0.0;
    for (double v : m) fro += v * v;
    fro = std::sqrt(fro);
    const double target = off_tol * std::max(1.0, fro);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_frobenius(m, n) <= target) {
            std::vector<double> eig(n);
            for (int i = 0; i < n; ++i) eig[i] = m[idx(i, i)];
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = m[idx(p, q)];
                if (apq == 0.0) continue;
                double app = m[idx(p, p)];
                double aqq = m[idx(q, q)];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                m[idx(p, p)] = app - t * apq;
                m[idx(q, q)] = aqq + t * apq;
                m[idx(p, q)] = 0.0;
                m[idx(q, p)] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = m[idx(k, p)];
                    double akq = m[idx(k, q)];
                    m[idx(k, p)] = akp - s * (akq + tau * akp);
                    m[idx(p, k)] = m[idx(k, p)];
                    m[idx(k, q)] = akq + s * (akp - tau * akq);
                    m[idx(q, k)] = m[idx(k, q)];
                }
            }
        }
    }
    if (off_diagonal_frobenius(m, n) <= target) {
        std::vector<double> eig(n);
        for (int i = 0; i < n; ++i) eig[i] = m[idx(i, i)];
        std::sort(eig.begin(), eig.end());
        return eig;
    }
    throw EigenFailure("jacobi_eigenvalues: no convergence within sweep cap");
}

}  // namespace boundkey
