// SPDX-License-Identifier: Apache-2.0
#include "boundkey/dist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace boundkey {

double JointDistribution3::total() const {
    return std::accumulate(p.begin(), p.end(), 0.0);
}

void JointDistribution3::normalize() {
    double t = total();
    if (t <= 0.0) throw DomainError("cannot normalize an all-zero distribution");
    for (double& v : p) v /= t;
}

double MarginalDistribution::total() const {
    return std::accumulate(p.begin(), p.end(), 0.0);
}

MarginalDistribution pab_matrix(int d_a, int d_b, std::vector<double> row_major) {
    if (static_cast<std::size_t>(d_a) * d_b != row_major.size())
        throw DimensionMismatch("pab_matrix: entry count does not match d_a*d_b");
    MarginalDistribution m;
    m.parties = {Party::A, Party::B};
    m.dims = {d_a, d_b};
    m.p = std::move(row_major);
    return m;
}

NoisyChannel NoisyChannel::identity(int d) {
    NoisyChannel ch(d, d);
    for (int i = 0; i < d; ++i) ch.at(i, i) = 1.0;
    return ch;
}

std::size_t Diagram::cell_count() const {
    std::size_t n = 0;
    for (const auto& cl : cliques) n += cl.size();
    return n;
}

int Diagram::label(int a, int b) const {
    for (int k = 0; k < clique_count(); ++k)
        for (const Cell& c : cliques[k])
            if (c.a == a && c.b == b) return k;
    return -1;
}

std::vector<int> Diagram::label_grid() const {
    std::vector<int> grid(static_cast<std::size_t>(d_a) * d_b, -1);
    for (int k = 0; k < clique_count(); ++k)
        for (const Cell& c : cliques[k])
            grid[static_cast<std::size_t>(c.a) * d_b + c.b] = k;
    return grid;
}

void canonicalize(Diagram& d) {
    for (auto& cl : d.cliques) std::sort(cl.begin(), cl.end());
    std::sort(d.cliques.begin(), d.cliques.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
}

std::string diagram_invariant_violation(const Diagram& d) {
    if (d.d_a <= 0 || d.d_b <= 0) return "nonpositive grid dimensions";
    std::set<std::pair<int, int>> seen;
    for (const auto& cl : d.cliques) {
        if (cl.empty()) return "empty clique";
        for (const Cell& c : cl) {
            if (c.a < 0 || c.a >= d.d_a || c.b < 0 || c.b >= d.d_b)
                return "cell out of range";
            if (!seen.insert({c.a, c.b}).second) return "cell in more than one clique";
        }
        for (std::size_t i = 0; i < cl.size(); ++i)
            for (std::size_t j = i + 1; j < cl.size(); ++j)
                if (cl[i].a == cl[j].a || cl[i].b == cl[j].b)
                    return "clique not diagonal";
    }
    return "";
}

bool diagram_cross_closed(const Diagram& d) {
    auto grid = d.label_grid();
    auto lab = [&](int a, int b) { return grid[static_cast<std::size_t>(a) * d.d_b + b]; };
    for (const auto& cl : d.cliques) {
        for (std::size_t i = 0; i < cl.size(); ++i) {
            for (std::size_t j = i + 1; j < cl.size(); ++j) {
                int la = lab(cl[i].a, cl[j].b);
                int lb = lab(cl[j].a, cl[i].b);
                if (la < 0 || la != lb) return false;
            }
        }
    }
    return true;
}

UnambiguityReport validate_unambiguous(const JointDistribution3& dist, double zero_threshold) {
    UnambiguityReport rep;
    // |{a : p(a,b,e) != 0}| <= 1 for every (b,e)
    for (int b = 0; b < dist.d_b; ++b)
        for (int e = 0; e < dist.d_e; ++e) {
            int n = 0;
            for (int a = 0; a < dist.d_a; ++a)
                if (dist.at(a, b, e) > zero_threshold) ++n;
            if (n > 1) rep.violations_a.emplace_back(b, e);
        }
    for (int a = 0; a < dist.d_a; ++a)
        for (int e = 0; e < dist.d_e; ++e) {
            int n = 0;
            for (int b = 0; b < dist.d_b; ++b)
                if (dist.at(a, b, e) > zero_threshold) ++n;
            if (n > 1) rep.violations_b.emplace_back(a, e);
        }
    for (int a = 0; a < dist.d_a; ++a)
        for (int b = 0; b < dist.d_b; ++b) {
            int n = 0;
            for (int e = 0; e < dist.d_e; ++e)
                if (dist.at(a, b, e) > zero_threshold) ++n;
            if (n > 1) rep.violations_e.emplace_back(a, b);
        }
    rep.flag_a = rep.violations_a.empty();
    rep.flag_b = rep.violations_b.empty();
    rep.flag_e = rep.violations_e.empty();
    return rep;
}

EveSymbol eve_symbol(const JointDistribution3& dist, int a, int b, double zero_threshold) {
    int found = EveSymbol::kYuzz;
    for (int e = 0; e < dist.d_e; ++e) {
        if (dist.at(a, b, e) > zero_threshold) {
            if (found >= 0)
                throw AmbiguousEve("two Eve symbols above threshold at cell (" +
                                   std::to_string(a) + "," + std::to_string(b) + ")");
            found = e;
        }
    }
    return found >= 0 ? EveSymbol::of(found) : EveSymbol::yuzz();
}

JointDistribution3 from_diagram(const Diagram& diagram, const MarginalDistribution& p_ab,
                                double zero_threshold) {
    if (p_ab.dims.size() != 2 || p_ab.dims[0] != diagram.d_a || p_ab.dims[1] != diagram.d_b)
        throw DimensionMismatch("from_diagram: P_AB shape does not match the diagram grid");
    auto grid = diagram.label_grid();
    JointDistribution3 out(diagram.d_a, diagram.d_b, diagram.clique_count());
    for (int a = 0; a < diagram.d_a; ++a) {
        for (int b = 0; b < diagram.d_b; ++b) {
            double v = p_ab.at2(a, b);
            int k = grid[static_cast<std::size_t>(a) * diagram.d_b + b];
            if (v > zero_threshold) {
                if (k < 0)
                    throw SupportMismatch("P_AB nonzero at (" + std::to_string(a) + "," +
                                          std::to_string(b) + ") outside the diagram");
                out.at(a, b, k) = v;
            } else if (v > 0.0 && k >= 0) {
                out.at(a, b, k) = v;  // keep sub-threshold dust on diagram cells
            }
        }
    }
    return out;
}

namespace {

int party_axis(Party p) { return p == Party::A ? 0 : p == Party::B ? 1 : 2; }

}  // namespace

MarginalDistribution marginal(const JointDistribution3& dist, const std::vector<Party>& keep) {
    if (keep.empty()) throw DomainError("marginal: empty keep set");
    bool keep_axis[3] = {false, false, false};
    for (Party p : keep) keep_axis[party_axis(p)] = true;

    MarginalDistribution m;
    const int full_dims[3] = {dist.d_a, dist.d_b, dist.d_e};
    const Party order[3] = {Party::A, Party::B, Party::E};
    for (int ax = 0; ax < 3; ++ax) {
        if (keep_axis[ax]) {
            m.parties.push_back(order[ax]);
            m.dims.push_back(full_dims[ax]);
        }
    }
    std::size_t sz = 1;
    for (int d : m.dims) sz *= d;
    m.p.assign(sz, 0.0);

    for (int a = 0; a < dist.d_a; ++a)
        for (int b = 0; b < dist.d_b; ++b)
            for (int e = 0; e < dist.d_e; ++e) {
                double v = dist.at(a, b, e);
                if (v == 0.0) continue;
                std::size_t idx = 0;
                const int coord[3] = {a, b, e};
                for (std::size_t k = 0; k < m.dims.size(); ++k) {
                    int ax = party_axis(m.parties[k]);
                    idx = idx * m.dims[k] + coord[ax];
                }
                m.p[idx] += v;
            }
    return m;
}

double h_bits(double p) {
    if (p < 1e-15) return 0.0;
    return -p * std::log2(p);
}

double entropy(const MarginalDistribution& m) {
    double s = 0.0;
    for (double v : m.p) s += h_bits(v);
    return s;
}

double mutual_information(const JointDistribution3& dist, Party x, Party y) {
    if (x == y) throw DomainError("mutual_information: parties must differ");
    double hx = entropy(marginal(dist, {x}));
    double hy = entropy(marginal(dist, {y}));
    double hxy = entropy(marginal(dist, {x, y}));
    return hx + hy - hxy;
}

JointDistribution3 apply_channel(const JointDistribution3& dist, const NoisyChannel& ch,
                                 Party on) {
    if (on == Party::E) throw DomainError("apply_channel: channel on E is not meaningful");
    int d_in = on == Party::A ? dist.d_a : dist.d_b;
    if (ch.d_a != d_in)
        throw DimensionMismatch("apply_channel: channel input dimension " +
                                std::to_string(ch.d_a) + " != party dimension " +
                                std::to_string(d_in));
    if (on == Party::A) {
        JointDistribution3 out(ch.d_x, dist.d_b, dist.d_e);
        for (int a = 0; a < dist.d_a; ++a)
            for (int b = 0; b < dist.d_b; ++b)
                for (int e = 0; e < dist.d_e; ++e) {
                    double v = dist.at(a, b, e);
                    if (v == 0.0) continue;
                    for (int x = 0; x < ch.d_x; ++x) out.at(x, b, e) += ch.at(x, a) * v;
                }
        return out;
    }
    JointDistribution3 out(dist.d_a, ch.d_x, dist.d_e);
    for (int a = 0; a < dist.d_a; ++a)
        for (int b = 0; b < dist.d_b; ++b)
            for (int e = 0; e < dist.d_e; ++e) {
                double v = dist.at(a, b, e);
                if (v == 0.0) continue;
                for (int x = 0; x < ch.d_x; ++x) out.at(a, x, e) += ch.at(x, b) * v;
            }
    return out;
}

JointDistribution3 swap_ab(const JointDistribution3& dist) {
    JointDistribution3 out(dist.d_b, dist.d_a, dist.d_e);
    for (int a = 0; a < dist.d_a; ++a)
        for (int b = 0; b < dist.d_b; ++b)
            for (int e = 0; e < dist.d_e; ++e)
                out.at(b, a, e) = dist.at(a, b, e);
    return out;
}

JointDistribution3 canonical_e_relabel(const JointDistribution3& dist, double zero_threshold) {
    std::vector<int> remap(dist.d_e, -1);
    int next = 0;
    for (int a = 0; a < dist.d_a; ++a)
        for (int b = 0; b < dist.d_b; ++b)
            for (int e = 0; e < dist.d_e; ++e)
                if (dist.at(a, b, e) > zero_threshold && remap[e] < 0) remap[e] = next++;
    for (int e = 0; e < dist.d_e; ++e)
        if (remap[e] < 0) remap[e] = next++;
    JointDistribution3 out(dist.d_a, dist.d_b, dist.d_e);
    for (int a = 0; a < dist.d_a; ++a)
        for (int b = 0; b < dist.d_b; ++b)
            for (int e = 0; e < dist.d_e; ++e)
                out.at(a, b, remap[e]) = dist.at(a, b, e);
    return out;
}

bool canonical_equal(const JointDistribution3& lhs, const JointDistribution3& rhs, double tol) {
    if (lhs.d_a != rhs.d_a || lhs.d_b != rhs.d_b || lhs.d_e != rhs.d_e) return false;
    JointDistribution3 l = canonical_e_relabel(lhs);
    JointDistribution3 r = canonical_e_relabel(rhs);
    for (std::size_t i = 0; i < l.p.size(); ++i)
        if (std::abs(l.p[i] - r.p[i]) > tol) return false;
    return true;
}

}  // namespace boundkey
