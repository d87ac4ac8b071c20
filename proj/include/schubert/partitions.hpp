#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace schubert {

/// Gr(m, n): m-planes in an n-dimensional space. Partitions live in an
/// m x (n - m) box.
struct Ambient {
    int m = 1;
    int n = 2;

    Ambient() = default;
    Ambient(int m_, int n_) : m(m_), n(n_) {
        if (m < 1 || n - m < 1)
            throw InvalidAmbient("ambient Gr(" + std::to_string(m) + "," + std::to_string(n) +
                                 ") needs 1 <= m <= n-1");
    }

    int c() const { return n - m; }
    int dim() const { return m * (n - m); }
    /// Ambient of conjugate partitions: the transposed box.
    Ambient transposed() const { return Ambient(n - m, n); }

    friend bool operator==(const Ambient&, const Ambient&) = default;
    friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

/// A weakly decreasing tuple inside the box of its ambient. Trailing zeros are
/// stored, so the ambient is part of the identity.
class Partition {
public:
    Partition() = default;

    /// Validating constructor (the `validate` operation).
    Partition(Ambient ambient, std::vector<int> parts) : ambient_(ambient), parts_(std::move(parts)) {
        if (static_cast<int>(parts_.size()) != ambient_.m)
            throw WrongLength("partition has " + std::to_string(parts_.size()) + " parts, expected " +
                              std::to_string(ambient_.m));
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0 || parts_[i] > ambient_.c())
                throw BoxViolation("part a_" + std::to_string(i + 1) + " = " + std::to_string(parts_[i]) +
                                   " outside [0, " + std::to_string(ambient_.c()) + "]");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw NotWeaklyDecreasing("a_" + std::to_string(i + 1) + " > a_" + std::to_string(i));
        }
    }

    const Ambient& ambient() const { return ambient_; }
    int m() const { return ambient_.m; }
    int n() const { return ambient_.n; }
    int c() const { return ambient_.c(); }
    const std::vector<int>& parts() const { return parts_; }
    /// 1-based access, a_i.
    int operator()(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool is_zero() const { return size() == 0; }
    bool is_full() const { return size() == ambient_.dim(); }
    bool is_degenerate() const { return is_zero() || is_full(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    Ambient ambient_;
    std::vector<int> parts_;
};

inline Partition validate(int m, int n, std::vector<int> parts) {
    return Partition(Ambient(m, n), std::move(parts));
}

/// a* = (c - a_m, ..., c - a_1), same ambient.
inline Partition dual(const Partition& a) {
    std::vector<int> d(a.parts().rbegin(), a.parts().rend());
    for (int& x : d) x = a.c() - x;
    return Partition(a.ambient(), std::move(d));
}

/// a'_i = #{ j : a_j >= i }, in the transposed ambient P(n-m, n).
inline Partition conjugate(const Partition& a) {
    std::vector<int> t(static_cast<std::size_t>(a.c()), 0);
    for (int i = 1; i <= a.c(); ++i)
        for (int p : a.parts())
            if (p >= i) ++t[static_cast<std::size_t>(i - 1)];
    return Partition(a.ambient().transposed(), std::move(t));
}

/// (p_1^{q_1}, ..., p_r^{q_r}) with p_1 > ... > p_r > 0; zeros counted apart.
struct ExpForm {
    std::vector<std::pair<int, int>> pairs; // (value, multiplicity)
    int zero_count = 0;

    int r() const { return static_cast<int>(pairs.size()); }
    int multiplicity_sum() const {
        int s = 0;
        for (auto [p, q] : pairs) s += q;
        return s;
    }
    friend bool operator==(const ExpForm&, const ExpForm&) = default;
};

inline ExpForm exp_form(const Partition& a) {
    ExpForm f;
    for (int p : a.parts()) {
        if (p == 0) {
            ++f.zero_count;
        } else if (!f.pairs.empty() && f.pairs.back().first == p) {
            ++f.pairs.back().second;
        } else {
            f.pairs.emplace_back(p, 1);
        }
    }
    return f;
}

inline std::vector<int> reconstruct(const ExpForm& f) {
    std::vector<int> parts;
    for (auto [p, q] : f.pairs) parts.insert(parts.end(), static_cast<std::size_t>(q), p);
    parts.insert(parts.end(), static_cast<std::size_t>(f.zero_count), 0);
    return parts;
}

/// Codimension |a| of the Schubert variety.
inline int codim(const Partition& a) { return a.size(); }
/// Dimension of the Schubert variety, |a*|.
inline int dim_sigma(const Partition& a) { return a.ambient().dim() - a.size(); }

/// Row-major occupancy grid of a Young diagram.
struct Grid {
    int rows = 0;
    int cols = 0;
    std::vector<char> cells;

    Grid(int r, int c) : rows(r), cols(c), cells(static_cast<std::size_t>(r * c), 0) {}
    bool at(int r, int c) const { return cells[static_cast<std::size_t>(r * cols + c)] != 0; }
    void set(int r, int c, bool v) { cells[static_cast<std::size_t>(r * cols + c)] = v ? 1 : 0; }

    std::vector<int> row_lengths() const {
        std::vector<int> out;
        for (int r = 0; r < rows; ++r) {
            int len = 0;
            for (int c = 0; c < cols; ++c) len += at(r, c) ? 1 : 0;
            out.push_back(len);
        }
        return out;
    }
    friend bool operator==(const Grid&, const Grid&) = default;
};

enum class GridVariant { Plain, Dual, Conjugate };

/// Grid of Y_a (plain), Y_{a*} (dual) or Y_{a'} (conjugate), each drawn in the
/// box of the ambient of the partition it depicts.
inline Grid young_grid(const Partition& a, GridVariant variant) {
    auto fill = [](const Partition& p) {
        Grid g(p.m(), p.c());
        for (int r = 0; r < p.m(); ++r)
            for (int c = 0; c < p(r + 1); ++c) g.set(r, c, true);
        return g;
    };
    switch (variant) {
    case GridVariant::Plain: return fill(a);
    case GridVariant::Dual: return fill(dual(a));
    case GridVariant::Conjugate: return fill(conjugate(a));
    }
    return fill(a);
}

/// True iff every multiplicity of a and of a' is at least 2.
inline bool theorem_condition(const Partition& a) {
    if (a.is_degenerate())
        throw DegeneratePartition("theorem condition needs 0 < |a| < m(n-m)");
    auto ok = [](const ExpForm& f) {
        return std::all_of(f.pairs.begin(), f.pairs.end(), [](auto pq) { return pq.second >= 2; });
    };
    return ok(exp_form(a)) && ok(exp_form(conjugate(a)));
}

struct BoxConstraints {
    std::optional<int> min_codim;
    std::optional<int> max_codim;
};

/// Visit every element of P(m, n) in lexicographically descending order.
template <class Visitor>
void for_each_in_box(Ambient amb, const BoxConstraints& cons, Visitor&& visit) {
    std::vector<int> parts(static_cast<std::size_t>(amb.m), 0);
    auto rec = [&](auto&& self, int i, int bound, int sum) -> void {
        if (i == amb.m) {
            if (cons.min_codim && sum < *cons.min_codim) return;
            if (cons.max_codim && sum > *cons.max_codim) return;
            visit(Partition(amb, parts));
            return;
        }
        for (int v = bound; v >= 0; --v) {
            if (cons.max_codim && sum + v > *cons.max_codim) continue;
            parts[static_cast<std::size_t>(i)] = v;
            self(self, i + 1, v, sum + v);
        }
    };
    rec(rec, 0, amb.c(), 0);
}

inline std::vector<Partition> enumerate_box(int m, int n, const BoxConstraints& cons = {}) {
    std::vector<Partition> out;
    for_each_in_box(Ambient(m, n), cons, [&](Partition p) { out.push_back(std::move(p)); });
    return out;
}

// --- text form: gr(m,n):a1,...,am ------------------------------------------

inline std::string to_string(const Partition& a) {
    std::string s = "gr(" + std::to_string(a.m()) + "," + std::to_string(a.n()) + "):";
    for (std::size_t i = 0; i < a.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(a.parts()[i]);
    }
    return s;
}

inline std::string to_string(const ExpForm& f) {
    if (f.pairs.empty()) return "()";
    std::string s = "(";
    for (std::size_t i = 0; i < f.pairs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f.pairs[i].first) + "^" + std::to_string(f.pairs[i].second);
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& a) { return os << to_string(a); }

inline Partition parse_partition(std::string_view text) {
    std::size_t pos = 0;
    auto expect = [&](char ch) {
        if (pos >= text.size() || text[pos] != ch)
            throw ParseError(std::string("expected '") + ch + "'", pos);
        ++pos;
    };
    auto number = [&]() {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected a non-negative integer", pos);
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 1000000) throw ParseError("integer too large", pos);
            ++pos;
        }
        return static_cast<int>(v);
    };
    expect('g');
    expect('r');
    expect('(');
    int m = number();
    expect(',');
    int n = number();
    expect(')');
    expect(':');
    std::vector<int> parts;
    parts.push_back(number());
    while (pos < text.size()) {
        expect(',');
        parts.push_back(number());
    }
    Ambient amb;
    try {
        amb = Ambient(m, n);
    } catch (const InvalidAmbient& e) {
        throw ParseError(e.what(), 3);
    }
    return Partition(amb, std::move(parts));
}

} // namespace schubert
