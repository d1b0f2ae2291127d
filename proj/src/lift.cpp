// SPDX-License-Identifier: Apache-2.0
#include "boundkey/lift.hpp"

#include <algorithm>
#include <cmath>

#include "boundkey/eig.hpp"

namespace boundkey {

double PureState3::norm2() const {
    double s = 0.0;
    for (double v : amp) s += v * v;
    return s;
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim(); ++i) t += at(i, i);
    return t;
}

PureState3 lift_state(const JointDistribution3& dist) {
    PureState3 psi;
    psi.d_a = dist.d_a;
    psi.d_b = dist.d_b;
    psi.d_e = dist.d_e;
    psi.amp.resize(dist.p.size());
    for (std::size_t i = 0; i < dist.p.size(); ++i) {
        if (dist.p[i] < 0.0) throw DomainError("lift_state: negative probability");
        psi.amp[i] = std::sqrt(dist.p[i]);
    }
    return psi;
}

DensityMatrix reduce_to_AB(const PureState3& psi) {
    DensityMatrix rho(psi.d_a, psi.d_b);
    const int n = rho.dim();
    for (int i = 0; i < n; ++i) {
        int a = i / psi.d_b, b = i % psi.d_b;
        for (int j = i; j < n; ++j) {
            int ap = j / psi.d_b, bp = j % psi.d_b;
            double s = 0.0;
            for (int e = 0; e < psi.d_e; ++e) s += psi.at(a, b, e) * psi.at(ap, bp, e);
            rho.at(i, j) = s;
            rho.at(j, i) = s;
        }
    }
    return rho;
}

DensityMatrix partial_transpose(const DensityMatrix& rho) {
    DensityMatrix out(rho.d_a, rho.d_b);
    for (int a = 0; a < rho.d_a; ++a)
        for (int b = 0; b < rho.d_b; ++b)
            for (int ap = 0; ap < rho.d_a; ++ap)
                for (int bp = 0; bp < rho.d_b; ++bp)
                    out.at(a * rho.d_b + b, ap * rho.d_b + bp) =
                        rho.at(a * rho.d_b + bp, ap * rho.d_b + b);
    return out;
}

PTReport pt_report(const DensityMatrix& rho, double tol) {
    PTReport rep;
    DensityMatrix pt = partial_transpose(rho);
    double dev = 0.0;
    for (std::size_t i = 0; i < rho.m.size(); ++i)
        dev = std::max(dev, std::abs(pt.m[i] - rho.m[i]));
    rep.max_abs_deviation = dev;
    rep.is_pt_invariant = dev <= tol;
    auto eig = jacobi_eigenvalues(pt.m, pt.dim());
    rep.min_eig_pt = eig.front();
    rep.is_ppt = rep.min_eig_pt >= -tol;
    return rep;
}

PtCombinatorialReport pt_invariance_combinatorial(const JointDistribution3& dist, double tol) {
    auto rep = validate_unambiguous(dist);
    if (!rep.unambiguous())
        throw NotUnambiguous("pt_invariance_combinatorial: distribution is not unambiguous");

    // e(a,b) per cell, yuzz encoded as -1
    std::vector<int> lab(static_cast<std::size_t>(dist.d_a) * dist.d_b, -1);
    MarginalDistribution pab = marginal(dist, {Party::A, Party::B});
    for (int a = 0; a < dist.d_a; ++a)
        for (int b = 0; b < dist.d_b; ++b)
            lab[static_cast<std::size_t>(a) * dist.d_b + b] = eve_symbol(dist, a, b).value;
    auto e_of = [&](int a, int b) { return lab[static_cast<std::size_t>(a) * dist.d_b + b]; };

    PtCombinatorialReport out;
    for (int a = 0; a < dist.d_a; ++a)
        for (int ap = a + 1; ap < dist.d_a; ++ap)
            for (int b = 0; b < dist.d_b; ++b)
                for (int bp = b + 1; bp < dist.d_b; ++bp) {
                    // both diagonals of the 2x2 submatrix {a,ap} x {b,bp}
                    const Cell diag1[2] = {{a, b}, {ap, bp}};
                    const Cell diag2[2] = {{a, bp}, {ap, b}};
                    const bool same1 = e_of(a, b) >= 0 && e_of(a, b) == e_of(ap, bp);
                    const bool same2 = e_of(a, bp) >= 0 && e_of(a, bp) == e_of(ap, b);
                    if (!same1 && !same2) continue;
                    if (same1 != same2) {
                        CrossViolation v;
                        v.first = same1 ? diag1[0] : diag2[0];
                        v.second = same1 ? diag1[1] : diag2[1];
                        v.partner_mismatch = true;
                        out.violations.push_back(v);
                        continue;
                    }
                    double det = pab.at2(a, b) * pab.at2(ap, bp) -
                                 pab.at2(a, bp) * pab.at2(ap, b);
                    if (std::abs(det) > tol) {
                        CrossViolation v;
                        v.first = diag1[0];
                        v.second = diag1[1];
                        v.det = det;
                        out.violations.push_back(v);
                    }
                }
    out.invariant = out.violations.empty();
    return out;
}

std::vector<double> reduced_density_matrix(const PureState3& psi, Party keep) {
    int n = keep == Party::A ? psi.d_a : keep == Party::B ? psi.d_b : psi.d_e;
    std::vector<double> rho(static_cast<std::size_t>(n) * n, 0.0);
    auto acc = [&](int i, int j, double v) { rho[static_cast<std::size_t>(i) * n + j] += v; };
    for (int a = 0; a < psi.d_a; ++a)
        for (int b = 0; b < psi.d_b; ++b)
            for (int e = 0; e < psi.d_e; ++e) {
                double v = psi.at(a, b, e);
                if (v == 0.0) continue;
                switch (keep) {
                    case Party::A:
                        for (int ap = 0; ap < psi.d_a; ++ap)
                            acc(a, ap, v * psi.at(ap, b, e));
                        break;
                    case Party::B:
                        for (int bp = 0; bp < psi.d_b; ++bp)
                            acc(b, bp, v * psi.at(a, bp, e));
                        break;
                    case Party::E:
                        for (int ep = 0; ep < psi.d_e; ++ep)
                            acc(e, ep, v * psi.at(a, b, ep));
                        break;
                }
            }
    return rho;
}

double von_neumann_entropy_bits(const std::vector<double>& sym, int n) {
    auto eig = jacobi_eigenvalues(sym, n);
    double s = 0.0;
    for (double lambda : eig) {
        if (lambda < -1e-12)
            throw DomainError("von_neumann_entropy_bits: eigenvalue below -1e-12");
        if (lambda < 0.0) lambda = 0.0;
        s += h_bits(lambda);
    }
    return s;
}

double coherent_information(const PureState3& psi) {
    double sb = von_neumann_entropy_bits(reduced_density_matrix(psi, Party::B), psi.d_b);
    double se = von_neumann_entropy_bits(reduced_density_matrix(psi, Party::E), psi.d_e);
    return sb - se;
}

}  // namespace boundkey
