#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace schubert {

using Scalar = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Scalar& x) { return x.get_str(); }

inline Scalar parse_scalar(const std::string& s) {
    Scalar x;
    if (x.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'", 0);
    x.canonicalize();
    return x;
}

/// Sparse integer vector: entries sorted by key, no zero coefficients.
template <class Key>
using SparseRow = std::vector<std::pair<Key, Integer>>;

namespace detail {

template <class Key>
void make_primitive(SparseRow<Key>& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (auto& [k, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (row.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [k, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// out = a*x - b*y
template <class Key>
SparseRow<Key> combine(const Integer& a, const SparseRow<Key>& x, const Integer& b, const SparseRow<Key>& y) {
    SparseRow<Key> out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.emplace_back(x[i].first, a * x[i].second);
            ++i;
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, -b * y[j].second);
            ++j;
        } else {
            Integer v = a * x[i].second - b * y[j].second;
            if (v != 0) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace detail

/// Fraction-free row echelon over the integers. Every stored row is primitive
/// with a positive leading coefficient; the leading key is its pivot and no
/// stored row has a nonzero entry at another row's pivot that precedes it.
template <class Key>
class SparseEchelon {
public:
    using Row = SparseRow<Key>;

    std::size_t rank() const { return rows_.size(); }
    const std::map<Key, Row>& rows() const { return rows_; }
    bool has_pivot(const Key& k) const { return rows_.count(k) != 0; }

    /// Eliminate every entry of v that sits at a pivot; result is primitive.
    Row reduce(Row v) const {
        std::size_t idx = 0;
        while (idx < v.size()) {
            auto it = rows_.find(v[idx].first);
            if (it == rows_.end()) {
                ++idx;
                continue;
            }
            const Row& r = it->second;
            Integer a = r.front().second;
            Integer b = v[idx].second;
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
            // entries before idx are not pivots; scaling them by a keeps that true
            v = detail::combine(a, v, b, r);
            detail::make_primitive(v);
        }
        detail::make_primitive(v);
        return v;
    }

    bool contains(const Row& v) const { return reduce(v).empty(); }

    /// Returns true when v was independent of the current rows.
    bool insert(Row v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        Key p = v.front().first;
        rows_.emplace(p, std::move(v));
        return true;
    }

    /// Canonical reduced echelon basis: pivot coefficient 1, zeros above and
    /// below every pivot, rows ordered by pivot.
    std::vector<std::vector<std::pair<Key, Scalar>>> canonical() const {
        std::vector<const Row*> order;
        for (auto& [k, r] : rows_) order.push_back(&r);
        std::map<Key, Row> done;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            Row v = **it;
            // eliminate entries after the pivot using already-reduced rows
            std::size_t idx = 1;
            while (idx < v.size()) {
                auto f = done.find(v[idx].first);
                if (f == done.end()) {
                    ++idx;
                    continue;
                }
                Integer a = f->second.front().second;
                Integer b = v[idx].second;
                Integer g;
                mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
                mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
                v = detail::combine(a, v, b, f->second);
                detail::make_primitive(v);
            }
            Key p = v.front().first;
            done.emplace(p, std::move(v));
        }
        std::vector<std::vector<std::pair<Key, Scalar>>> out;
        for (auto& [k, r] : done) {
            std::vector<std::pair<Key, Scalar>> row;
            Scalar lead(r.front().second);
            for (auto& [key, v] : r) {
                Scalar q = Scalar(v) / lead;
                q.canonicalize();
                row.emplace_back(key, q);
            }
            out.push_back(std::move(row));
        }
        return out;
    }

private:
    std::map<Key, Row> rows_;
};

/// Smallest span containing the seeds and stable under `count` linear maps;
/// apply(g, row) returns the image of a row under map g.
template <class Key, class Apply>
SparseEchelon<Key> span_closure(const std::vector<SparseRow<Key>>& seeds, std::size_t count, Apply&& apply) {
    SparseEchelon<Key> ech;
    std::vector<SparseRow<Key>> work;
    for (auto& s : seeds) {
        auto r = ech.reduce(s);
        if (r.empty()) continue;
        ech.insert(r);
        work.push_back(std::move(r));
    }
    for (std::size_t next = 0; next < work.size(); ++next)
        for (std::size_t g = 0; g < count; ++g) {
            auto r = ech.reduce(apply(g, work[next]));
            if (r.empty()) continue;
            ech.insert(r);
            work.push_back(std::move(r));
        }
    return ech;
}

/// Clear denominators of a rational sparse row.
template <class Key>
SparseRow<Key> to_integer_row(const std::vector<std::pair<Key, Scalar>>& v) {
    Integer l = 1;
    for (auto& [k, x] : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    SparseRow<Key> out;
    for (auto& [k, x] : v) {
        if (x == 0) continue;
        Integer num = x.get_num() * (l / x.get_den());
        out.emplace_back(k, std::move(num));
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

using Vector = std::vector<Scalar>;

inline SparseRow<int> dense_to_row(const Vector& v) {
    std::vector<std::pair<int, Scalar>> sp;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) sp.emplace_back(static_cast<int>(i), v[i]);
    return to_integer_row(sp);
}

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Scalar>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (auto& r : init) {
            if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
            for (auto& x : r) a_.push_back(x);
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vector row(std::size_t r) const {
        return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                      a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

struct RrefResult {
    ExactMatrix form;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

inline RrefResult rref(const ExactMatrix& m) {
    SparseEchelon<int> ech;
    for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(dense_to_row(m.row(r)));
    RrefResult out{ExactMatrix(m.rows(), m.cols()), ech.rank(), {}};
    std::size_t r = 0;
    for (auto& row : ech.canonical()) {
        out.pivots.push_back(static_cast<std::size_t>(row.front().first));
        for (auto& [c, x] : row) out.form(r, static_cast<std::size_t>(c)) = x;
        ++r;
    }
    return out;
}

/// A linear subspace of Q^d held as its canonical reduced echelon basis, so
/// equal subspaces compare equal.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : dim_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& gens) {
        SparseEchelon<int> ech;
        for (auto& g : gens) {
            if (g.size() != ambient_dim) throw DimensionMismatch("generator length differs from ambient");
            ech.insert(dense_to_row(g));
        }
        return from_echelon(ambient_dim, ech);
    }

    static Subspace full(std::size_t d) {
        Subspace s(d);
        for (std::size_t i = 0; i < d; ++i) {
            Vector v(d);
            v[i] = 1;
            s.basis_.push_back(std::move(v));
        }
        return s;
    }

    std::size_t ambient_dim() const { return dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    bool member(const Vector& v) const {
        if (v.size() != dim_) throw DimensionMismatch("vector length differs from ambient");
        SparseEchelon<int> ech;
        for (auto& b : basis_) ech.insert(dense_to_row(b));
        return ech.contains(dense_to_row(v));
    }

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    static Subspace from_echelon(std::size_t d, const SparseEchelon<int>& ech) {
        Subspace s(d);
        for (auto& row : ech.canonical()) {
            Vector v(d);
            for (auto& [c, x] : row) v[static_cast<std::size_t>(c)] = x;
            s.basis_.push_back(std::move(v));
        }
        return s;
    }

    std::size_t dim_ = 0;
    std::vector<Vector> basis_;
};

inline Subspace kernel(const ExactMatrix& m) {
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.form(r, f);
        gens.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), gens);
}

/// Null space of a sparse system given row by row; never forms a dense matrix.
inline Subspace kernel_of_rows(std::size_t cols, const std::vector<SparseRow<int>>& rows) {
    SparseEchelon<int> ech;
    for (auto& r : rows) ech.insert(r);
    auto form = ech.canonical();
    std::vector<bool> is_pivot(cols, false);
    for (auto& row : form) is_pivot[static_cast<std::size_t>(row.front().first)] = true;
    std::vector<Vector> gens;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (auto& row : form)
            for (auto& [c, x] : row)
                if (static_cast<std::size_t>(c) == f) v[static_cast<std::size_t>(row.front().first)] = -x;
        gens.push_back(std::move(v));
    }
    return Subspace::span(cols, gens);
}

inline bool member(const Vector& v, const Subspace& s) { return s.member(v); }

inline Subspace sum(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim()) throw DimensionMismatch("sum of subspaces in different ambients");
    std::vector<Vector> gens = s.basis();
    gens.insert(gens.end(), t.basis().begin(), t.basis().end());
    return Subspace::span(s.ambient_dim(), gens);
}

inline Subspace intersect(const Subspace& s, const Subspace& t) {
    if (s.ambient_dim() != t.ambient_dim())
        throw DimensionMismatch("intersection of subspaces in different ambients");
    const std::size_t d = s.ambient_dim(), p = s.dim(), q = t.dim();
    // columns: s_1..s_p, -t_1..-t_q; a kernel vector (x, y) gives sum x_i s_i
    ExactMatrix a(d, p + q);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t r = 0; r < d; ++r) a(r, i) = s.basis()[i][r];
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t r = 0; r < d; ++r) a(r, p + j) = -t.basis()[j][r];
    std::vector<Vector> gens;
    const Subspace ker = kernel(a);
    for (auto& k : ker.basis()) {
        Vector v(d);
        for (std::size_t i = 0; i < p; ++i)
            if (k[i] != 0)
                for (std::size_t r = 0; r < d; ++r) v[r] += k[i] * s.basis()[i][r];
        gens.push_back(std::move(v));
    }
    return Subspace::span(d, gens);
}

} // namespace schubert
