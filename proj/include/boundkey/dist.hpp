// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "boundkey/types.hpp"

namespace boundkey {

// Tripartite pmf p(a,b,e) over finite alphabets, stored dense.
struct JointDistribution3 {
    int d_a = 0, d_b = 0, d_e = 0;
    std::vector<double> p;  // index (a*d_b + b)*d_e + e

    JointDistribution3() = default;
    JointDistribution3(int da, int db, int de)
        : d_a(da), d_b(db), d_e(de),
          p(static_cast<std::size_t>(da) * db * de, 0.0) {}

    double& at(int a, int b, int e) {
        return p[(static_cast<std::size_t>(a) * d_b + b) * d_e + e];
    }
    double at(int a, int b, int e) const {
        return p[(static_cast<std::size_t>(a) * d_b + b) * d_e + e];
    }
    std::size_t size() const { return p.size(); }
    double total() const;
    void normalize();
    int dim(Party which) const {
        return which == Party::A ? d_a : which == Party::B ? d_b : d_e;
    }
};

// Dense pmf over a retained subset of {A,B,E}, row-major over `dims`.
struct MarginalDistribution {
    std::vector<Party> parties;
    std::vector<int> dims;
    std::vector<double> p;

    double total() const;
    // 2-party access (row i, column j)
    double& at2(int i, int j) { return p[static_cast<std::size_t>(i) * dims[1] + j]; }
    double at2(int i, int j) const { return p[static_cast<std::size_t>(i) * dims[1] + j]; }
};

// P_AB matrix with rows = Alice, columns = Bob.
MarginalDistribution pab_matrix(int d_a, int d_b, std::vector<double> row_major);

// Column-stochastic noisy-processing map q(x|a).
struct NoisyChannel {
    int d_x = 0, d_a = 0;
    std::vector<double> q;  // x*d_a + a (row-major over x)

    NoisyChannel() = default;
    NoisyChannel(int dx, int da)
        : d_x(dx), d_a(da), q(static_cast<std::size_t>(dx) * da, 0.0) {}

    double& at(int x, int a) { return q[static_cast<std::size_t>(x) * d_a + a]; }
    double at(int x, int a) const { return q[static_cast<std::size_t>(x) * d_a + a]; }
    static NoisyChannel identity(int d);
};

// Eve's symbol for a cell, or the sentinel "yuzz" marking cells Alice and
// Bob never hold.
struct EveSymbol {
    static constexpr int kYuzz = -1;
    int value = kYuzz;

    bool is_yuzz() const { return value < 0; }
    static EveSymbol yuzz() { return EveSymbol{}; }
    static EveSymbol of(int e) { return EveSymbol{e}; }
    bool operator==(const EveSymbol&) const = default;
};

// Partition of grid cells into diagonal cliques; the clique index is Eve's
// symbol for every cell it contains.
struct Diagram {
    int d_a = 0, d_b = 0;
    std::vector<std::vector<Cell>> cliques;

    int clique_count() const { return static_cast<int>(cliques.size()); }
    std::size_t cell_count() const;
    // clique index of (a,b), or -1 when the cell is not in the diagram
    int label(int a, int b) const;
    std::vector<int> label_grid() const;  // d_a*d_b, -1 for absent cells
};

// Sorts cells within cliques and cliques by their smallest cell.
void canonicalize(Diagram& d);

// Empty string when the diagram satisfies its invariants (cells in range,
// cliques nonempty and pairwise disjoint, each clique diagonal), else a
// description of the first violation.
std::string diagram_invariant_violation(const Diagram& d);

// Every in-clique pair (a,b),(a',b') must have partner cells (a,b'),(a',b)
// present and adjacent (the diagram's edge set is a union of crosses).
bool diagram_cross_closed(const Diagram& d);

struct UnambiguityReport {
    bool flag_a = true, flag_b = true, flag_e = true;
    // index pairs with more than one nonzero completion:
    std::vector<std::pair<int, int>> violations_a;  // (b,e)
    std::vector<std::pair<int, int>> violations_b;  // (a,e)
    std::vector<std::pair<int, int>> violations_e;  // (a,b)

    bool unambiguous() const { return flag_a && flag_b && flag_e; }
};

UnambiguityReport validate_unambiguous(const JointDistribution3& dist,
                                       double zero_threshold = kZeroThreshold);

EveSymbol eve_symbol(const JointDistribution3& dist, int a, int b,
                     double zero_threshold = kZeroThreshold);

JointDistribution3 from_diagram(const Diagram& diagram,
                                const MarginalDistribution& p_ab,
                                double zero_threshold = kZeroThreshold);

MarginalDistribution marginal(const JointDistribution3& dist,
                              const std::vector<Party>& keep);

// Base-2 entropy; 0 log 0 := 0.
double entropy(const MarginalDistribution& m);

// H(X) + H(Y) - H(XY), in bits.
double mutual_information(const JointDistribution3& dist, Party x, Party y);

// Contracts the given party's index against q(x|.); the output distribution
// has that party's alphabet replaced by X.
JointDistribution3 apply_channel(const JointDistribution3& dist,
                                 const NoisyChannel& ch, Party on = Party::A);

JointDistribution3 swap_ab(const JointDistribution3& dist);

// Relabels Eve symbols by first occurrence scanning (a,b,e) in lex order.
JointDistribution3 canonical_e_relabel(const JointDistribution3& dist,
                                       double zero_threshold = kZeroThreshold);

// Equality up to relabeling of Eve's alphabet.
bool canonical_equal(const JointDistribution3& lhs, const JointDistribution3& rhs,
                     double tol = 1e-12);

// -p log2 p with h(0) := 0; inputs below 1e-15 are treated as 0.
double h_bits(double p);

}  // namespace boundkey
