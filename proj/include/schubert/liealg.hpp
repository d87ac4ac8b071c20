#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "partitions.hpp"

namespace schubert {

/// Basis vector e_i^* (x) q_p of m = E^* (x) Q, sitting at entry (m+p, i) of gl(n).
/// Both coordinates are 1-based.
struct Cell {
    int i = 1; // E column
    int p = 1; // Q row
    friend bool operator==(const Cell&, const Cell&) = default;
};

/// Row-major index: by Q-row, then by E-column.
inline int cell_index(const Cell& x, int m) { return (x.p - 1) * m + (x.i - 1); }
inline Cell cell_at(int idx, int m) { return Cell{idx % m + 1, idx / m + 1}; }

/// Sparse vector of m keyed by cell index.
using MVector = std::map<int, Scalar>;

// --- gl(n) -----------------------------------------------------------------

/// Sparse n x n matrix, entries keyed by 1-based (row, col).
class GlElement {
public:
    GlElement() = default;
    explicit GlElement(int n) : n_(n) {}

    static GlElement elementary(int n, int r, int s) {
        GlElement e(n);
        e.set(r, s, 1);
        return e;
    }

    int n() const { return n_; }
    const std::map<std::pair<int, int>, Scalar>& entries() const { return e_; }
    bool is_zero() const { return e_.empty(); }

    Scalar at(int r, int s) const {
        auto it = e_.find({r, s});
        return it == e_.end() ? Scalar(0) : it->second;
    }
    void set(int r, int s, const Scalar& x) {
        if (x == 0)
            e_.erase({r, s});
        else
            e_[{r, s}] = x;
    }
    void add(int r, int s, const Scalar& x) { set(r, s, at(r, s) + x); }

    GlElement operator+(const GlElement& o) const {
        GlElement out = *this;
        for (auto& [k, v] : o.e_) out.add(k.first, k.second, v);
        return out;
    }
    GlElement operator-(const GlElement& o) const {
        GlElement out = *this;
        for (auto& [k, v] : o.e_) out.add(k.first, k.second, -v);
        return out;
    }
    GlElement operator*(const GlElement& o) const {
        if (n_ != o.n_) throw DimensionMismatch("gl product of different sizes");
        GlElement out(n_);
        for (auto& [k1, v1] : e_)
            for (auto& [k2, v2] : o.e_)
                if (k1.second == k2.first) out.add(k1.first, k2.second, v1 * v2);
        return out;
    }
    GlElement scaled(const Scalar& c) const {
        GlElement out(n_);
        if (c == 0) return out;
        for (auto& [k, v] : e_) out.e_[k] = v * c;
        return out;
    }

    friend bool operator==(const GlElement&, const GlElement&) = default;

private:
    int n_ = 0;
    std::map<std::pair<int, int>, Scalar> e_;
};

inline GlElement bracket(const GlElement& x, const GlElement& y) { return x * y - y * x; }

/// Embed a vector of m as a lower-left block matrix of gl(n).
inline GlElement to_gl(const MVector& v, const Ambient& amb) {
    GlElement g(amb.n);
    for (auto& [idx, x] : v) {
        Cell c = cell_at(idx, amb.m);
        g.set(amb.m + c.p, c.i, x);
    }
    return g;
}

/// Lower-left block of a gl(n) element as a vector of m.
inline MVector from_gl(const GlElement& g, const Ambient& amb) {
    MVector v;
    for (auto& [k, x] : g.entries())
        if (k.first > amb.m && k.second <= amb.m) v[cell_index(Cell{k.second, k.first - amb.m}, amb.m)] = x;
    return v;
}

/// Action of the Levi gl(E) + gl(Q) on one cell: Z -> BZ - ZA. Entries of X
/// outside the two diagonal blocks do not act on m and are ignored.
inline std::vector<std::pair<int, Scalar>> act_cell(const GlElement& x, int cell, const Ambient& amb) {
    const int m = amb.m;
    Cell z = cell_at(cell, m);
    std::map<int, Scalar> out;
    for (auto& [k, v] : x.entries()) {
        auto [r, s] = k;
        if (r <= m && s <= m) {
            if (r == z.i) out[cell_index(Cell{s, z.p}, m)] -= v;
        } else if (r > m && s > m) {
            if (s - m == z.p) out[cell_index(Cell{z.i, r - m}, m)] += v;
        }
    }
    std::vector<std::pair<int, Scalar>> res;
    for (auto& [c, v] : out)
        if (v != 0) res.emplace_back(c, v);
    return res;
}

inline MVector levi_action_on_m(const GlElement& x, const MVector& v, const Ambient& amb) {
    MVector out;
    for (auto& [c, coef] : v)
        for (auto& [d, y] : act_cell(x, c, amb)) out[d] += coef * y;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// --- block structure -------------------------------------------------------

/// Ordered cell list of n_a: cells (i,p) with p <= c - a_i, row-major.
inline std::vector<int> na_cells(const Partition& a) {
    std::vector<int> out;
    for (int p = 1; p <= a.c(); ++p)
        for (int i = 1; i <= a.m(); ++i)
            if (p <= a.c() - a(i)) out.push_back(cell_index(Cell{i, p}, a.m()));
    return out;
}

struct BlockStructure {
    std::vector<int> e_sizes;
    std::vector<int> q_sizes;
    std::set<std::pair<int, int>> pi; // (E block, Q block), both 1-based

    int r_e() const { return static_cast<int>(e_sizes.size()); }
    int r_q() const { return static_cast<int>(q_sizes.size()); }
    bool in_pi(int i, int a) const { return pi.count({i, a}) != 0; }

    /// First column / row of a block, 1-based.
    int e_start(int i) const {
        int s = 1;
        for (int t = 1; t < i; ++t) s += e_sizes[static_cast<std::size_t>(t - 1)];
        return s;
    }
    int e_end(int i) const { return e_start(i) + e_sizes[static_cast<std::size_t>(i - 1)] - 1; }
    int q_start(int a) const {
        int s = 1;
        for (int t = 1; t < a; ++t) s += q_sizes[static_cast<std::size_t>(t - 1)];
        return s;
    }
    int q_end(int a) const { return q_start(a) + q_sizes[static_cast<std::size_t>(a - 1)] - 1; }
    int dim_e(int i) const { return e_sizes[static_cast<std::size_t>(i - 1)]; }
    int dim_q(int a) const { return q_sizes[static_cast<std::size_t>(a - 1)]; }

    int e_block_of(int col) const {
        for (int i = 1; i <= r_e(); ++i)
            if (col <= e_end(i)) return i;
        throw InternalInconsistency("column outside E");
    }
    int q_block_of(int row) const {
        for (int a = 1; a <= r_q(); ++a)
            if (row <= q_end(a)) return a;
        throw InternalInconsistency("row outside Q");
    }

    /// Pi_{i,j} = { a : (i,a) not in Pi, (j,a) in Pi }.
    std::vector<int> pi_ij(int i, int j) const {
        std::vector<int> out;
        for (int a = 1; a <= r_q(); ++a)
            if (!in_pi(i, a) && in_pi(j, a)) out.push_back(a);
        return out;
    }
    /// Pi_{b,a} = { i : (i,b) in Pi, (i,a) not in Pi }.
    std::vector<int> pi_ba(int b, int a) const {
        std::vector<int> out;
        for (int i = 1; i <= r_e(); ++i)
            if (in_pi(i, b) && !in_pi(i, a)) out.push_back(i);
        return out;
    }
};

inline BlockStructure block_structure(const Partition& a) {
    BlockStructure bs;
    ExpForm f = exp_form(a);
    for (auto [p, q] : f.pairs) bs.e_sizes.push_back(q);
    if (f.zero_count > 0) bs.e_sizes.push_back(f.zero_count);

    const int c = a.c();
    std::vector<int> thresholds{0};
    for (auto [p, q] : f.pairs) thresholds.push_back(c - p);
    thresholds.push_back(c);
    for (std::size_t t = 1; t < thresholds.size(); ++t) {
        int s = thresholds[t] - thresholds[t - 1];
        if (s > 0) bs.q_sizes.push_back(s);
    }

    auto in_na = [&](int i, int p) { return p <= c - a(i); };
    for (int i = 1; i <= bs.r_e(); ++i)
        for (int al = 1; al <= bs.r_q(); ++al) {
            bool first = in_na(bs.e_start(i), bs.q_start(al));
            for (int col = bs.e_start(i); col <= bs.e_end(i); ++col)
                for (int row = bs.q_start(al); row <= bs.q_end(al); ++row)
                    if (in_na(col, row) != first)
                        throw InternalInconsistency("n_a is not block-constant on E_" + std::to_string(i) +
                                                    " x Q_" + std::to_string(al));
            if (first) bs.pi.insert({i, al});
        }
    return bs;
}

/// Basis of m_a: elementary matrices strictly below the block diagonal inside
/// gl(E) and inside gl(Q). E part first (by row, then column), then Q part.
inline std::vector<GlElement> ma_levi_basis(const Partition& a) {
    BlockStructure bs = block_structure(a);
    const int m = a.m(), n = a.n();
    std::vector<GlElement> out;
    for (int r = 1; r <= m; ++r)
        for (int s = 1; s <= m; ++s)
            if (bs.e_block_of(r) > bs.e_block_of(s)) out.push_back(GlElement::elementary(n, r, s));
    for (int t = 1; t <= a.c(); ++t)
        for (int u = 1; u <= a.c(); ++u)
            if (bs.q_block_of(t) > bs.q_block_of(u)) out.push_back(GlElement::elementary(n, m + t, m + u));
    return out;
}

/// Element of Hom(n_a, m/n_a): coefficient of v^* (x) w keyed by (v, w) cell
/// indices, v in n_a, w in the complement cells (the chosen lift of m/n_a).
using HomMap = std::map<std::pair<int, int>, Scalar>;

/// Everything downstream needs about a: cells, blocks, and embedded m_a.
struct TangentModel {
    Partition a;
    Ambient amb;
    BlockStructure blocks;
    std::vector<int> na;         // n_a cells in canonical order (v_1 .. v_k)
    std::vector<int> complement; // the other cells, canonical order
    std::vector<char> in_na;     // by cell index
    std::vector<GlElement> ma_levi;
    std::vector<HomMap> ma_embedded;
    std::vector<bool> ma_zero_flags; // embedded image vanished

    int k() const { return static_cast<int>(na.size()); }
    int total_cells() const { return amb.dim(); }
    int hom_dim() const { return k() * static_cast<int>(complement.size()); }

    /// Position of a cell inside na / complement, or -1.
    int na_pos(int cell) const {
        auto it = std::lower_bound(na.begin(), na.end(), cell);
        return it != na.end() && *it == cell ? static_cast<int>(it - na.begin()) : -1;
    }
    int comp_pos(int cell) const {
        auto it = std::lower_bound(complement.begin(), complement.end(), cell);
        return it != complement.end() && *it == cell ? static_cast<int>(it - complement.begin()) : -1;
    }
    /// Coordinate of v^* (x) w in the dense Hom basis (v-major).
    int hom_coord(int v, int w) const {
        return na_pos(v) * static_cast<int>(complement.size()) + comp_pos(w);
    }

    Vector hom_to_dense(const HomMap& h) const {
        Vector out(static_cast<std::size_t>(hom_dim()));
        for (auto& [k, x] : h) out[static_cast<std::size_t>(hom_coord(k.first, k.second))] = x;
        return out;
    }

    /// Image of v under the Levi element g, reduced mod n_a.
    MVector act_mod_na(const GlElement& g, int v) const {
        MVector out;
        for (auto& [w, x] : act_cell(g, v, amb))
            if (!in_na[static_cast<std::size_t>(w)]) out[w] = x;
        return out;
    }

    HomMap embed(const GlElement& g) const {
        HomMap h;
        for (int v : na)
            for (auto& [w, x] : act_mod_na(g, v)) h[{v, w}] = x;
        return h;
    }
};

inline TangentModel tangent_model(const Partition& a) {
    TangentModel t{a, a.ambient(), block_structure(a), na_cells(a), {}, {}, {}, {}, {}};
    t.in_na.assign(static_cast<std::size_t>(a.ambient().dim()), 0);
    for (int v : t.na) t.in_na[static_cast<std::size_t>(v)] = 1;
    for (int c = 0; c < a.ambient().dim(); ++c)
        if (!t.in_na[static_cast<std::size_t>(c)]) t.complement.push_back(c);
    t.ma_levi = ma_levi_basis(a);
    for (auto& g : t.ma_levi) {
        t.ma_embedded.push_back(t.embed(g));
        t.ma_zero_flags.push_back(t.ma_embedded.back().empty());
    }
    return t;
}

inline std::vector<HomMap> ma_embedded(const Partition& a) { return tangent_model(a).ma_embedded; }

/// dim m_a from block sizes alone.
inline int ma_dim_formula(const BlockStructure& bs) {
    int d = 0;
    for (int i = 0; i < bs.r_e(); ++i)
        for (int j = i + 1; j < bs.r_e(); ++j) d += bs.e_sizes[static_cast<std::size_t>(i)] * bs.e_sizes[static_cast<std::size_t>(j)];
    for (int b = 0; b < bs.r_q(); ++b)
        for (int al = b + 1; al < bs.r_q(); ++al) d += bs.q_sizes[static_cast<std::size_t>(b)] * bs.q_sizes[static_cast<std::size_t>(al)];
    return d;
}

/// The Levi generators used for submodule generation: every off-diagonal
/// elementary matrix of gl(E) and of gl(Q).
inline std::vector<GlElement> levi_offdiagonal_generators(const Ambient& amb) {
    std::vector<GlElement> out;
    for (int r = 1; r <= amb.m; ++r)
        for (int s = 1; s <= amb.m; ++s)
            if (r != s) out.push_back(GlElement::elementary(amb.n, r, s));
    for (int t = 1; t <= amb.c(); ++t)
        for (int u = 1; u <= amb.c(); ++u)
            if (t != u) out.push_back(GlElement::elementary(amb.n, amb.m + t, amb.m + u));
    return out;
}

/// Off-diagonal elementary matrices inside the Levi blocks of a: these
/// preserve n_a.
inline std::vector<GlElement> levi_block_generators(const BlockStructure& bs, const Ambient& amb) {
    std::vector<GlElement> out;
    for (int r = 1; r <= amb.m; ++r)
        for (int s = 1; s <= amb.m; ++s)
            if (r != s && bs.e_block_of(r) == bs.e_block_of(s)) out.push_back(GlElement::elementary(amb.n, r, s));
    for (int t = 1; t <= amb.c(); ++t)
        for (int u = 1; u <= amb.c(); ++u)
            if (t != u && bs.q_block_of(t) == bs.q_block_of(u))
                out.push_back(GlElement::elementary(amb.n, amb.m + t, amb.m + u));
    return out;
}

// --- marked simple roots -----------------------------------------------------

struct RootMarks {
    std::set<int> s1;      // {1..n-1} \ {m}
    std::set<int> removed; // union of the two removal lists
    std::set<int> sa;      // S_a = S^1 \ removed

    /// Consecutive block sizes of the Levi: i and i+1 share a block iff alpha_i in S_a.
    std::vector<int> levi_blocks(int n) const {
        std::vector<int> out{1};
        for (int i = 1; i < n; ++i) {
            if (sa.count(i))
                ++out.back();
            else
                out.push_back(1);
        }
        return out;
    }
};

inline RootMarks root_marks(const Partition& a) {
    RootMarks rm;
    const int n = a.n();
    for (int i = 1; i < n; ++i)
        if (i != a.m()) rm.s1.insert(i);
    ExpForm f = exp_form(a);
    int acc = 0;
    for (auto [p, q] : f.pairs) {
        acc += q;
        rm.removed.insert(acc);
        rm.removed.insert(n - p);
    }
    for (int i : rm.s1)
        if (!rm.removed.count(i)) rm.sa.insert(i);
    return rm;
}

inline bool quotient_exists(const Partition& a, const Partition& b) {
    if (a.ambient() != b.ambient()) throw IncompatiblePair("partitions in different ambients");
    auto sa = root_marks(a).sa, sb = root_marks(b).sa;
    return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

} // namespace schubert
