#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "hwv.hpp"
#include "liealg.hpp"
#include "partitions.hpp"

namespace schubert {

enum class DiagramKind { Young, Matrix, Blocks, Hwv };

inline DiagramKind parse_diagram_kind(const std::string& s) {
    if (s == "young") return DiagramKind::Young;
    if (s == "matrix") return DiagramKind::Matrix;
    if (s == "blocks") return DiagramKind::Blocks;
    if (s == "hwv") return DiagramKind::Hwv;
    throw ParseError("unknown diagram kind '" + s + "'", 0);
}

namespace detail {

inline std::string parts_string(const Partition& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.parts().size(); ++i) s += (i ? "," : "") + std::to_string(a.parts()[i]);
    return s + ")";
}

inline void draw_young(std::ostringstream& os, const std::string& label, const Partition& p) {
    os << label << " = " << parts_string(p) << " in P(" << p.m() << "," << p.n() << ")\n";
    Grid g = young_grid(p, GridVariant::Plain);
    for (int r = 0; r < g.rows; ++r) {
        std::string line;
        for (int c = 0; c < g.cols; ++c) line += g.at(r, c) ? "[]" : " .";
        os << "  " << line << "\n";
    }
}

// Q rows by E columns, with block separators. mark(col, row) gives the glyph.
template <class Mark>
void draw_cells(std::ostringstream& os, const BlockStructure& bs, int m, int c, Mark mark) {
    auto rule = [&] {
        std::string s = "  +";
        for (int i = 1; i <= bs.r_e(); ++i) s += std::string(static_cast<std::size_t>(2 * bs.dim_e(i) + 1), '-') + "+";
        os << s << "\n";
    };
    rule();
    for (int p = 1; p <= c; ++p) {
        std::string s = "  |";
        for (int col = 1; col <= m; ++col) {
            s += ' ';
            s += mark(col, p);
            if (col == bs.e_end(bs.e_block_of(col))) s += " |";
        }
        os << s << "\n";
        if (p == bs.q_end(bs.q_block_of(p))) rule();
    }
}

} // namespace detail

/// a, a* and a' as Young diagrams.
inline std::string diagram_young(const Partition& a) {
    std::ostringstream os;
    detail::draw_young(os, "a", a);
    detail::draw_young(os, "a*", dual(a));
    detail::draw_young(os, "a'", conjugate(a));
    return os.str();
}

/// n x n picture: '*' n_a, 'o' m_a, 'd' Levi of the parabolic, '.' zero.
inline std::string diagram_matrix(const Partition& a) {
    const int m = a.m(), n = a.n();
    auto bs = block_structure(a);
    std::vector<std::string> g(static_cast<std::size_t>(n), std::string(static_cast<std::size_t>(n), '.'));
    auto put = [&](int r, int s, char ch) { g[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(s - 1)] = ch; };
    for (int r = 1; r <= m; ++r)
        for (int s = 1; s <= m; ++s)
            if (bs.e_block_of(r) == bs.e_block_of(s)) put(r, s, 'd');
    for (int t = 1; t <= a.c(); ++t)
        for (int u = 1; u <= a.c(); ++u)
            if (bs.q_block_of(t) == bs.q_block_of(u)) put(m + t, m + u, 'd');
    for (auto& e : ma_levi_basis(a))
        for (auto& [k, v] : e.entries()) put(k.first, k.second, 'o');
    for (int idx : na_cells(a)) {
        Cell x = cell_at(idx, m);
        put(m + x.p, x.i, '*');
    }
    std::ostringstream os;
    for (auto& row : g) {
        std::string line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) line += ' ';
            line += row[j];
        }
        os << line << "\n";
    }
    os << "legend: * n_a, o m_a, d Levi, . zero\n";
    return os.str();
}

/// E and Q blocks over the m x (n-m) cells, '*' on n_a.
inline std::string diagram_blocks(const Partition& a) {
    auto bs = block_structure(a);
    std::ostringstream os;
    os << "E widths:";
    for (int x : bs.e_sizes) os << ' ' << x;
    os << "\nQ heights:";
    for (int x : bs.q_sizes) os << ' ' << x;
    os << "\nPi:";
    for (auto [i, al] : bs.pi) os << " (" << i << "," << al << ")";
    os << "\n";
    auto na = na_cells(a);
    std::set<int> in(na.begin(), na.end());
    detail::draw_cells(os, bs, a.m(), a.c(),
                       [&](int col, int row) { return in.count(cell_index(Cell{col, row}, a.m())) ? '*' : '.'; });
    os << "legend: * n_a, . m/n_a\n";
    return os.str();
}

/// One block picture per complement component: 'o' source cells x_alpha,
/// 'x' target cells x_beta.
inline std::string diagram_hwv(const Partition& a) {
    auto t = tangent_model(a);
    std::ostringstream os;
    int idx = 0;
    for (auto& c : complement_components(t)) {
        std::set<int> src, dst;
        for (auto& [vw, x] : c.hwv) {
            src.insert(vw.first);
            dst.insert(vw.second);
        }
        os << "#" << ++idx << " " << to_string(c.kind) << " " << to_string(c.piece) << " (" << c.j << "," << c.b
           << ") -> (" << c.i << "," << c.a << ") dim " << c.dim << "\n";
        detail::draw_cells(os, t.blocks, t.amb.m, t.amb.c(), [&](int col, int row) {
            int cell = cell_index(Cell{col, row}, t.amb.m);
            if (src.count(cell)) return 'o';
            if (dst.count(cell)) return 'x';
            return t.in_na[static_cast<std::size_t>(cell)] ? '*' : '.';
        });
    }
    if (idx == 0) os << "no complement components\n";
    os << "legend: o x_alpha, x x_beta, * n_a, . m/n_a\n";
    return os.str();
}

inline std::string diagram(const Partition& a, DiagramKind kind) {
    switch (kind) {
    case DiagramKind::Young: return diagram_young(a);
    case DiagramKind::Matrix: return diagram_matrix(a);
    case DiagramKind::Blocks: return diagram_blocks(a);
    case DiagramKind::Hwv: return diagram_hwv(a);
    }
    return {};
}

} // namespace schubert
