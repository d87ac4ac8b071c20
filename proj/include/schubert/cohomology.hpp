#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exterior.hpp"
#include "liealg.hpp"
#include "linalg.hpp"
#include "partitions.hpp"

namespace schubert {

/// The operator d : Hom(n_a, m_a) -> Hom(wedge^2 n_a, m/n_a),
/// dp(X, Y) = [p(X), Y] - [p(Y), X] mod n_a.
///
/// Domain coordinate (s, g) is the coefficient of the g-th m_a basis element in
/// p(v_s), flattened as s * dim m_a + g. Codomain coordinate is (pair s<t, w).
struct DelComplex {
    TangentModel model;
    std::vector<int> na_order; // positions into model.na
    std::vector<int> ma_order; // positions into model.ma_levi
    std::vector<SparseRow<int>> rows;

    std::size_t domain_dim() const { return na_order.size() * ma_order.size(); }
    std::size_t codomain_dim() const {
        std::size_t k = na_order.size();
        return k * (k - (k ? 1 : 0)) / 2 * model.complement.size();
    }
    int coord(std::size_t s, std::size_t g) const { return static_cast<int>(s * ma_order.size() + g); }

    /// Rows of dp(v_s, v_t) for an ordered pair, one per complement cell w;
    /// keyed by w, each row a sparse vector over the domain.
    std::map<int, SparseRow<int>> pair_rows(std::size_t s, std::size_t t) const {
        std::map<int, std::map<int, Integer>> acc;
        int vs = model.na[static_cast<std::size_t>(na_order[s])];
        int vt = model.na[static_cast<std::size_t>(na_order[t])];
        for (std::size_t g = 0; g < ma_order.size(); ++g) {
            const GlElement& x = model.ma_levi[static_cast<std::size_t>(ma_order[g])];
            for (auto& [w, c] : model.act_mod_na(x, vt)) acc[w][coord(s, g)] += c.get_num();
            for (auto& [w, c] : model.act_mod_na(x, vs)) acc[w][coord(t, g)] -= c.get_num();
        }
        std::map<int, SparseRow<int>> out;
        for (auto& [w, m] : acc) {
            SparseRow<int> r;
            for (auto& [k, v] : m)
                if (v != 0) r.emplace_back(k, v);
            if (!r.empty()) out.emplace(w, std::move(r));
        }
        return out;
    }

    /// Dense matrix (codomain x domain), for small cases and inspection.
    ExactMatrix dense() const {
        ExactMatrix out(codomain_dim(), domain_dim());
        std::size_t row = 0, k = na_order.size(), nc = model.complement.size();
        for (std::size_t s = 0; s < k; ++s)
            for (std::size_t t = s + 1; t < k; ++t) {
                auto pr = pair_rows(s, t);
                for (std::size_t w = 0; w < nc; ++w) {
                    auto f = pr.find(model.complement[w]);
                    if (f != pr.end())
                        for (auto& [c, x] : f->second) out(row + w, static_cast<std::size_t>(c)) = Scalar(x);
                }
                row += nc;
            }
        return out;
    }
};

inline void require_nondegenerate(const Partition& a) {
    if (a.is_degenerate()) throw DegeneratePartition(to_string(a) + " has |a| = 0 or m(n-m)");
}

inline DelComplex del_complex(const Partition& a, std::vector<int> na_order, std::vector<int> ma_order,
                              long max_dim = default_max_wedge_dim) {
    require_nondegenerate(a);
    DelComplex d{tangent_model(a), std::move(na_order), std::move(ma_order), {}};
    if (static_cast<long>(d.domain_dim()) > max_dim)
        throw ResourceExceeded("Hom(n_a, m_a) has dimension " + std::to_string(d.domain_dim()) + " above cap " +
                               std::to_string(max_dim));
    std::size_t k = d.na_order.size();
    for (std::size_t s = 0; s < k; ++s)
        for (std::size_t t = s + 1; t < k; ++t)
            for (auto& [w, r] : d.pair_rows(s, t)) d.rows.push_back(std::move(r));
    return d;
}

inline DelComplex del_complex(const Partition& a, long max_dim = default_max_wedge_dim) {
    require_nondegenerate(a);
    auto t = tangent_model(a);
    std::vector<int> no(static_cast<std::size_t>(t.k())), mo(t.ma_levi.size());
    std::iota(no.begin(), no.end(), 0);
    std::iota(mo.begin(), mo.end(), 0);
    return del_complex(a, std::move(no), std::move(mo), max_dim);
}

/// A kernel element written as p(v) in gl(n), for v in n_a.
using PMap = std::map<int, GlElement>;

struct H11 {
    DelComplex complex;
    Subspace kernel;

    std::size_t dim() const { return kernel.dim(); }

    /// Basis element as a map n_a -> m_a (Levi lifts), keyed by n_a cell.
    PMap as_map(const Vector& coords) const {
        PMap out;
        const auto& t = complex.model;
        for (std::size_t s = 0; s < complex.na_order.size(); ++s) {
            GlElement g(t.amb.n);
            for (std::size_t j = 0; j < complex.ma_order.size(); ++j) {
                const Scalar& c = coords[static_cast<std::size_t>(complex.coord(s, j))];
                if (c != 0) g = g + t.ma_levi[static_cast<std::size_t>(complex.ma_order[j])].scaled(c);
            }
            out.emplace(t.na[static_cast<std::size_t>(complex.na_order[s])], std::move(g));
        }
        return out;
    }
    std::vector<PMap> basis_maps() const {
        std::vector<PMap> out;
        for (auto& v : kernel.basis()) out.push_back(as_map(v));
        return out;
    }
};

inline H11 h11(const Partition& a, long max_dim = default_max_wedge_dim) {
    DelComplex d = del_complex(a, max_dim);
    Subspace k = kernel_of_rows(d.domain_dim(), d.rows);
    return H11{std::move(d), std::move(k)};
}

/// The first prolongation fiber: admissible 2-jets are exactly the kernel of d.
inline Subspace prolongation_fiber(const Partition& a, long max_dim = default_max_wedge_dim) {
    return h11(a, max_dim).kernel;
}

/// Check [p(X), Y] - [p(Y), X] in n_a by raw gl(n) commutators.
inline bool satisfies_bracket_condition(const PMap& p, const TangentModel& t) {
    for (auto x = p.begin(); x != p.end(); ++x)
        for (auto y = std::next(x); y != p.end(); ++y) {
            GlElement gx = to_gl(MVector{{x->first, 1}}, t.amb);
            GlElement gy = to_gl(MVector{{y->first, 1}}, t.amb);
            GlElement diff = bracket(x->second, gy) - bracket(y->second, gx);
            // every entry must be a lower-left entry lying in n_a
            for (auto& [k, v] : diff.entries()) {
                if (k.first <= t.amb.m || k.second > t.amb.m) return false;
                int cell = cell_index(Cell{k.second, k.first - t.amb.m}, t.amb.m);
                if (!t.in_na[static_cast<std::size_t>(cell)]) return false;
            }
        }
    return true;
}

enum class ProjectionMode { Foliation, Inclusion };

inline bool cells_subset(const std::vector<int>& x, const std::vector<int>& y) {
    return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

/// Image of a Levi element of m_a under the block projection m_a -> m_b:
/// keep the entries strictly below b's block diagonal.
inline GlElement project_to_mb(const GlElement& g, const BlockStructure& bb, int m) {
    GlElement out(g.n());
    for (auto& [k, v] : g.entries()) {
        auto [r, s] = k;
        bool keep = false;
        if (r <= m && s <= m)
            keep = bb.e_block_of(r) > bb.e_block_of(s);
        else if (r > m && s > m)
            keep = bb.q_block_of(r - m) > bb.q_block_of(s - m);
        if (keep) out.set(r, s, v);
    }
    return out;
}

/// Whether every p in H^{1,1}(a), pushed to m_b, vanishes on n_b (foliation)
/// or on all of n_a (inclusion).
inline bool projected_vanishing(const Partition& a, const Partition& b, ProjectionMode mode,
                                long max_dim = default_max_wedge_dim) {
    if (a.ambient() != b.ambient()) throw IncompatiblePair("partitions in different ambients");
    require_nondegenerate(a);
    if (!quotient_exists(a, b)) throw IncompatiblePair("S_a is not contained in S_b");
    auto na = na_cells(a), nb = na_cells(b);
    if (mode == ProjectionMode::Foliation && !cells_subset(nb, na))
        throw IncompatiblePair("foliation mode needs n_b inside n_a");
    if (mode == ProjectionMode::Inclusion && !cells_subset(na, nb))
        throw IncompatiblePair("inclusion mode needs n_a inside n_b");
    BlockStructure bb = block_structure(b);
    H11 h = h11(a, max_dim);
    for (auto& p : h.basis_maps())
        for (auto& [v, g] : p) {
            if (mode == ProjectionMode::Foliation && !std::binary_search(nb.begin(), nb.end(), v)) continue;
            if (!project_to_mb(g, bb, a.m()).is_zero()) return false;
        }
    return true;
}

} // namespace schubert
