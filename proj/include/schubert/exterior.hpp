#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "liealg.hpp"
#include "linalg.hpp"
#include "partitions.hpp"

namespace schubert {

/// Strictly increasing list of cell indices: one basis k-vector of the wedge space.
using WedgeKey = std::vector<int>;

/// Sparse element of the k-th exterior power of m.
class Multivector {
public:
    Multivector() = default;
    explicit Multivector(int k) : k_(k) {}

    int degree() const { return k_; }
    const std::map<WedgeKey, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    /// Add c * (x_1 ^ ... ^ x_k) for an arbitrary cell sequence, normalizing order.
    void add_wedge(std::vector<int> cells, const Scalar& c) {
        if (c == 0) return;
        if (static_cast<int>(cells.size()) != k_) throw DimensionMismatch("wedge of wrong degree");
        int sign = 1;
        // insertion sort, counting transpositions
        for (std::size_t i = 1; i < cells.size(); ++i)
            for (std::size_t j = i; j > 0 && cells[j - 1] >= cells[j]; --j) {
                if (cells[j - 1] == cells[j]) return;
                std::swap(cells[j - 1], cells[j]);
                sign = -sign;
            }
        add_term(cells, sign > 0 ? c : Scalar(-c));
    }

    void add_term(const WedgeKey& key, const Scalar& c) {
        if (c == 0) return;
        auto [it, fresh] = t_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Multivector& operator+=(const Multivector& o) {
        for (auto& [k, c] : o.t_) add_term(k, c);
        return *this;
    }
    Multivector operator-(const Multivector& o) const {
        Multivector out = *this;
        for (auto& [k, c] : o.t_) out.add_term(k, -c);
        return out;
    }
    Multivector scaled(const Scalar& s) const {
        Multivector out(k_);
        if (s == 0) return out;
        for (auto& [k, c] : t_) out.t_.emplace(k, c * s);
        return out;
    }

    friend bool operator==(const Multivector&, const Multivector&) = default;

private:
    int k_ = 0;
    std::map<WedgeKey, Scalar> t_;
};

/// Exterior product.
inline Multivector wedge(const Multivector& x, const Multivector& y) {
    Multivector out(x.degree() + y.degree());
    for (auto& [kx, cx] : x.terms())
        for (auto& [ky, cy] : y.terms()) {
            std::vector<int> cells = kx;
            cells.insert(cells.end(), ky.begin(), ky.end());
            out.add_wedge(std::move(cells), cx * cy);
        }
    return out;
}

inline Multivector from_mvector(const MVector& v) {
    Multivector out(1);
    for (auto& [c, x] : v) out.add_term({c}, x);
    return out;
}

namespace detail {

// Replace slot `pos` of the sorted key by `y`; adds sign * c, or nothing if y repeats.
inline void replace_slot(Multivector& out, const WedgeKey& key, std::size_t pos, int y, const Scalar& c) {
    WedgeKey rest;
    rest.reserve(key.size());
    for (std::size_t s = 0; s < key.size(); ++s)
        if (s != pos) rest.push_back(key[s]);
    auto it = std::lower_bound(rest.begin(), rest.end(), y);
    if (it != rest.end() && *it == y) return;
    std::size_t j = static_cast<std::size_t>(it - rest.begin());
    rest.insert(it, y);
    std::size_t dist = pos > j ? pos - j : j - pos;
    out.add_term(rest, dist % 2 ? Scalar(-c) : c);
}

} // namespace detail

/// Leibniz extension of the Levi action on m to the k-th exterior power.
inline Multivector derivation_action(const GlElement& x, const Multivector& w, const Ambient& amb) {
    Multivector out(w.degree());
    std::map<int, std::vector<std::pair<int, Scalar>>> memo;
    for (auto& [key, c] : w.terms())
        for (std::size_t pos = 0; pos < key.size(); ++pos) {
            auto f = memo.find(key[pos]);
            if (f == memo.end()) f = memo.emplace(key[pos], act_cell(x, key[pos], amb)).first;
            for (auto& [y, coef] : f->second) detail::replace_slot(out, key, pos, y, c * coef);
        }
    return out;
}

/// v_1 ^ ... ^ v_k for the n_a basis.
inline Multivector top_wedge(const TangentModel& t) {
    if (t.k() == 0) throw DegenerateK("n_a is zero, no top wedge");
    Multivector out(t.k());
    out.add_term(t.na, 1);
    return out;
}

/// sum_i v_1 ^ .. ^ p(v_i) ^ .. ^ v_k. Targets may be any cells of m, so a lift
/// with n_a components is also accepted.
inline Multivector phi_k(const HomMap& p, const TangentModel& t) {
    Multivector out(t.k());
    for (auto& [vw, c] : p) {
        int pos = t.na_pos(vw.first);
        if (pos < 0) throw DimensionMismatch("phi_k: map defined off n_a");
        detail::replace_slot(out, t.na, static_cast<std::size_t>(pos), vw.second, c);
    }
    return out;
}

inline SparseRow<WedgeKey> to_row(const Multivector& w) {
    std::vector<std::pair<WedgeKey, Scalar>> sp(w.terms().begin(), w.terms().end());
    return to_integer_row(sp);
}

inline Multivector from_row(int k, const SparseRow<WedgeKey>& r) {
    Multivector out(k);
    for (auto& [key, x] : r) out.add_term(key, Scalar(x));
    return out;
}

/// Exact binomial coefficient.
inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline constexpr long default_max_wedge_dim = 20000;

/// Submodule of the wedge space, kept as an integer echelon basis.
struct SchurModule {
    int k = 0;
    Partition label; // a^*, the partition indexing the summand
    SparseEchelon<WedgeKey> echelon;

    std::size_t dim() const { return echelon.rank(); }
    bool contains(const Multivector& w) const { return echelon.contains(to_row(w)); }
    std::vector<Multivector> basis() const {
        std::vector<Multivector> out;
        for (auto& row : echelon.canonical()) {
            Multivector w(k);
            for (auto& [key, x] : row) w.add_term(key, x);
            out.push_back(std::move(w));
        }
        return out;
    }
};

inline void check_wedge_cap(const Ambient& amb, int k, long max_wedge_dim) {
    Integer d = binomial(amb.dim(), k);
    if (d > max_wedge_dim)
        throw ResourceExceeded("wedge space dimension " + d.get_str() + " exceeds cap " +
                               std::to_string(max_wedge_dim));
}

/// Smallest subspace containing `seed` and stable under every generator.
inline SchurModule generate_submodule(const Multivector& seed, const std::vector<GlElement>& generators,
                                      const Ambient& amb, long max_wedge_dim = default_max_wedge_dim) {
    if (seed.is_zero()) throw DimensionMismatch("generate_submodule needs a nonzero seed");
    check_wedge_cap(amb, seed.degree(), max_wedge_dim);
    SchurModule mod;
    mod.k = seed.degree();
    mod.echelon = span_closure<WedgeKey>({to_row(seed)}, generators.size(), [&](std::size_t g, const auto& row) {
        return to_row(derivation_action(generators[g], from_row(mod.k, row), amb));
    });
    return mod;
}

/// I_a = S_{a*}(E^*) (x) S_{(a*)'}(Q), grown from the top wedge of n_a.
inline SchurModule build_Ia(const TangentModel& t, long max_wedge_dim = default_max_wedge_dim) {
    SchurModule mod =
        generate_submodule(top_wedge(t), levi_offdiagonal_generators(t.amb), t.amb, max_wedge_dim);
    mod.label = dual(t.a);
    return mod;
}

inline bool membership_in_Ia(const Multivector& w, const SchurModule& ia, const TangentModel& t) {
    if (w.degree() != ia.k) throw DimensionMismatch("membership: degree mismatch");
    if (!ia.contains(top_wedge(t))) throw InternalInconsistency("I_a lost the top wedge of n_a");
    return ia.contains(w);
}

// --- dimension oracles -------------------------------------------------------

/// dim S_lambda(C^d) by the hook-content formula.
inline Integer schur_dim(const std::vector<int>& lambda, int d) {
    int rows = 0;
    for (int x : lambda)
        if (x > 0) ++rows;
    if (rows > d) throw TooManyRows("partition has more rows than d");
    std::vector<int> conj;
    for (int j = 1; rows > 0 && j <= lambda[0]; ++j) {
        int cnt = 0;
        for (int x : lambda)
            if (x >= j) ++cnt;
        conj.push_back(cnt);
    }
    Integer num = 1, den = 1;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) {
            num *= d + j - i;
            den *= (lambda[static_cast<std::size_t>(i - 1)] - j) + (conj[static_cast<std::size_t>(j - 1)] - i) + 1;
        }
    return num / den;
}

inline bool cauchy_check(int m, int c, int k) {
    Integer total = 0;
    BoxConstraints cons{k, k};
    for_each_in_box(Ambient(m, m + c), cons, [&](const Partition& b) {
        total += schur_dim(b.parts(), m) * schur_dim(conjugate(b).parts(), c);
    });
    return total == binomial(static_cast<long>(m) * c, k);
}

/// Expected dim I_a from the Cauchy summand.
inline Integer expected_Ia_dim(const Partition& a) {
    Partition d = dual(a);
    return schur_dim(d.parts(), a.m()) * schur_dim(conjugate(d).parts(), a.c());
}

} // namespace schubert
