#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "errors.hpp"
#include "liealg.hpp"
#include "linalg.hpp"
#include "partitions.hpp"

namespace schubert {

// --- Levi action on Hom(n_a, m/n_a) -------------------------------------------

/// X.(v^* (x) w) = v^* (x) Xw - sum_u [coefficient of v in Xu] u^* (x) w.
/// The Levi preserves n_a and the complement cells, so no reduction is needed.
inline HomMap act_hom(const GlElement& x, const HomMap& h, const TangentModel& t) {
    std::map<int, std::vector<std::pair<int, Scalar>>> fwd;
    auto image = [&](int cell) -> const std::vector<std::pair<int, Scalar>>& {
        auto f = fwd.find(cell);
        if (f == fwd.end()) f = fwd.emplace(cell, act_cell(x, cell, t.amb)).first;
        return f->second;
    };
    // transpose on n_a: v -> list of (u, coefficient of v in Xu)
    std::map<int, std::vector<std::pair<int, Scalar>>> back;
    for (int u : t.na)
        for (auto& [v, c] : image(u)) back[v].emplace_back(u, c);

    HomMap out;
    auto add = [&](int v, int w, const Scalar& c) {
        if (c == 0) return;
        Scalar& slot = out[{v, w}];
        slot += c;
        if (slot == 0) out.erase({v, w});
    };
    for (auto& [vw, c] : h) {
        auto [v, w] = vw;
        for (auto& [w2, d] : image(w)) add(v, w2, c * d);
        auto b = back.find(v);
        if (b != back.end())
            for (auto& [u, d] : b->second) add(u, w, -c * d);
    }
    return out;
}

/// Raising operators: elementary matrices strictly below the diagonal inside
/// one Levi block (lower triangular counts as positive here).
inline std::vector<GlElement> raising_generators(const TangentModel& t) {
    std::vector<GlElement> out;
    const auto& bs = t.blocks;
    for (int r = 1; r <= t.amb.m; ++r)
        for (int s = 1; s < r; ++s)
            if (bs.e_block_of(r) == bs.e_block_of(s)) out.push_back(GlElement::elementary(t.amb.n, r, s));
    for (int u = 1; u <= t.amb.c(); ++u)
        for (int v = 1; v < u; ++v)
            if (bs.q_block_of(u) == bs.q_block_of(v))
                out.push_back(GlElement::elementary(t.amb.n, t.amb.m + u, t.amb.m + v));
    return out;
}

inline std::vector<GlElement> diagonal_generators(const Ambient& amb) {
    std::vector<GlElement> out;
    for (int r = 1; r <= amb.n; ++r) out.push_back(GlElement::elementary(amb.n, r, r));
    return out;
}

inline SparseRow<std::pair<int, int>> to_row(const HomMap& h) {
    std::vector<std::pair<std::pair<int, int>, Scalar>> sp(h.begin(), h.end());
    return to_integer_row(sp);
}

inline HomMap from_row(const SparseRow<std::pair<int, int>>& r) {
    HomMap h;
    for (auto& [k, x] : r) h[k] = Scalar(x);
    return h;
}

// --- complement components ------------------------------------------------------

enum class ComponentKind { Type1, Type2, Type3 };

inline const char* to_string(ComponentKind k) {
    switch (k) {
    case ComponentKind::Type1: return "Type1";
    case ComponentKind::Type2: return "Type2";
    case ComponentKind::Type3: return "Type3";
    }
    return "?";
}

/// Which part of Hom(E_j^* (x) Q_b, E_i^* (x) Q_a) the component is.
enum class Piece { Whole, TracelessQ, TracelessE, IdentityQ, IdentityE };

inline const char* to_string(Piece p) {
    switch (p) {
    case Piece::Whole: return "whole";
    case Piece::TracelessQ: return "sl(Q)";
    case Piece::TracelessE: return "sl(E)";
    case Piece::IdentityQ: return "Id(Q)";
    case Piece::IdentityE: return "Id(E)";
    }
    return "?";
}

struct ComplementComponent {
    ComponentKind kind = ComponentKind::Type1;
    Piece piece = Piece::Whole;
    int j = 0, b = 0; // source block E_j^* (x) Q_b, inside n_a
    int i = 0, a = 0; // target block E_i^* (x) Q_a, outside n_a
    HomMap hwv;
    long long dim = 0; // from block sizes
};

/// Levi components of Hom(n_a, m/n_a) not accounted for by m_a, each with its
/// highest weight vector.
inline std::vector<ComplementComponent> complement_components(const TangentModel& t) {
    if (t.a.is_degenerate()) throw DegeneratePartition(to_string(t.a) + " is degenerate");
    const auto& bs = t.blocks;
    const int m = t.amb.m;
    auto cell = [m](int col, int row) { return cell_index(Cell{col, row}, m); };
    std::vector<ComplementComponent> out;

    for (auto [j, b] : bs.pi)
        for (int i = 1; i <= bs.r_e(); ++i)
            for (int al = 1; al <= bs.r_q(); ++al) {
                if (bs.in_pi(i, al)) continue;
                const long long ri = bs.dim_e(i), rj = bs.dim_e(j), sa = bs.dim_q(al), sb = bs.dim_q(b);
                // x_alpha: last column of E_j, first row of Q_b; x_beta: first column of E_i, last row of Q_a
                HomMap decomposable{{{cell(bs.e_end(j), bs.q_start(b)), cell(bs.e_start(i), bs.q_end(al))}, 1}};
                ComplementComponent base{ComponentKind::Type1, Piece::Whole, j, b, i, al, decomposable, 0};

                if (i != j && al != b) {
                    base.dim = ri * rj * sa * sb;
                    out.push_back(base);
                } else if (i != j) {
                    // shared Q block: Q_a^* (x) Q_a = sl + Id
                    if (sa >= 2) {
                        auto c = base;
                        c.piece = Piece::TracelessQ;
                        c.dim = ri * rj * (sa * sa - 1);
                        out.push_back(c);
                    }
                    auto pij = bs.pi_ij(i, j);
                    if (!pij.empty() && al != pij.front()) {
                        ComplementComponent c{ComponentKind::Type2, Piece::IdentityQ, j, al, i, al, {}, ri * rj};
                        for (int p = bs.q_start(al); p <= bs.q_end(al); ++p)
                            c.hwv[{cell(bs.e_end(j), p), cell(bs.e_start(i), p)}] = 1;
                        out.push_back(c);
                    }
                } else {
                    // shared E block: E_i (x) E_i^* = sl + Id
                    if (ri >= 2) {
                        auto c = base;
                        c.piece = Piece::TracelessE;
                        c.dim = (ri * ri - 1) * sa * sb;
                        out.push_back(c);
                    }
                    auto pba = bs.pi_ba(b, al);
                    if (!pba.empty() && i != pba.back()) {
                        ComplementComponent c{ComponentKind::Type3, Piece::IdentityE, i, b, i, al, {}, sa * sb};
                        for (int e = bs.e_start(i); e <= bs.e_end(i); ++e)
                            c.hwv[{cell(e, bs.q_start(b)), cell(e, bs.q_end(al))}] = 1;
                        out.push_back(c);
                    }
                }
            }
    return out;
}

inline std::vector<ComplementComponent> complement_components(const Partition& a) {
    return complement_components(tangent_model(a));
}

/// The hwv as a map on all of n_a (zero on cells it does not mention).
inline HomMap certificate_map(const ComplementComponent& c, const TangentModel& t) {
    for (auto& [vw, x] : c.hwv)
        if (t.na_pos(vw.first) < 0 || t.comp_pos(vw.second) < 0)
            throw InternalInconsistency("hwv leaves Hom(n_a, m/n_a)");
    return c.hwv;
}

inline bool is_highest_weight(const HomMap& h, const TangentModel& t) {
    for (auto& g : raising_generators(t))
        if (!act_hom(g, h, t).empty()) return false;
    return true;
}

/// Every diagonal matrix unit acts on h by a scalar.
inline bool is_weight_vector(const HomMap& h, const TangentModel& t) {
    for (auto& g : diagonal_generators(t.amb)) {
        HomMap img = act_hom(g, h, t);
        if (img.empty()) continue;
        if (img.size() != h.size()) return false;
        Scalar ratio = 0;
        for (auto& [k, x] : h) {
            auto f = img.find(k);
            if (f == img.end()) return false;
            Scalar r = f->second / x;
            if (ratio == 0) ratio = r;
            if (r != ratio) return false;
        }
    }
    return true;
}

using HomEchelon = SparseEchelon<std::pair<int, int>>;

/// l_a-submodule of Hom(n_a, m/n_a) generated by the given vectors.
inline HomEchelon generate_hom_module(const std::vector<HomMap>& seeds, const TangentModel& t) {
    auto gens = levi_block_generators(t.blocks, t.amb);
    std::vector<SparseRow<std::pair<int, int>>> rows;
    for (auto& s : seeds) rows.push_back(to_row(s));
    return span_closure<std::pair<int, int>>(rows, gens.size(), [&](std::size_t g, const auto& row) {
        return to_row(act_hom(gens[g], from_row(row), t));
    });
}

struct AuditReport {
    long long hom_dim = 0;
    long long ma_dim = 0;
    std::vector<long long> generated_dims; // per component, by generation
    std::vector<long long> expected_dims;  // per component, from block sizes
    long long total = 0;                   // ma_dim + sum of generated dims
    long long span_rank = 0;               // rank of everything together
    bool direct = false;
    long long missing = 0;
    bool ok() const { return direct && missing == 0 && generated_dims == expected_dims; }
};

/// Dimension accounting for Hom(n_a, m/n_a) = m_a + complement components.
/// Throws AuditFailure when dimensions are missing.
inline AuditReport decomposition_audit(const TangentModel& t, long max_dim = default_max_wedge_dim) {
    if (t.a.is_degenerate()) throw DegeneratePartition(to_string(t.a) + " is degenerate");
    if (t.hom_dim() > max_dim)
        throw ResourceExceeded("Hom(n_a, m/n_a) has dimension " + std::to_string(t.hom_dim()) + " above cap " +
                               std::to_string(max_dim));
    AuditReport rep;
    rep.hom_dim = t.hom_dim();
    HomEchelon all;
    for (auto& h : t.ma_embedded) all.insert(to_row(h));
    rep.ma_dim = static_cast<long long>(all.rank());
    rep.total = rep.ma_dim;
    for (auto& c : complement_components(t)) {
        HomEchelon comp = generate_hom_module({c.hwv}, t);
        rep.generated_dims.push_back(static_cast<long long>(comp.rank()));
        rep.expected_dims.push_back(c.dim);
        rep.total += static_cast<long long>(comp.rank());
        for (auto& [k, r] : comp.rows()) all.insert(r);
    }
    rep.span_rank = static_cast<long long>(all.rank());
    rep.direct = rep.span_rank == rep.total;
    rep.missing = rep.hom_dim - rep.span_rank;
    if (rep.missing != 0)
        throw AuditFailure("complement decomposition of " + to_string(t.a) + " misses " +
                               std::to_string(rep.missing) + " dimensions",
                           rep.missing);
    return rep;
}

inline AuditReport decomposition_audit(const Partition& a, long max_dim = default_max_wedge_dim) {
    return decomposition_audit(tangent_model(a), max_dim);
}

} // namespace schubert
