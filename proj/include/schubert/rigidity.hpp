#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "errors.hpp"
#include "exterior.hpp"
#include "hwv.hpp"
#include "liealg.hpp"
#include "partitions.hpp"

namespace schubert {

// --- smooth classification -------------------------------------------------------

/// Smooth(p, q) means a = (c^{m-q}, (c-p)^q) with 1 <= p <= c, 1 <= q <= m.
struct SmoothClass {
    bool smooth = false;
    int p = 0, q = 0;
    friend bool operator==(const SmoothClass&, const SmoothClass&) = default;
};

inline std::string to_string(const SmoothClass& s) {
    if (!s.smooth) return "Singular";
    return "Smooth(p=" + std::to_string(s.p) + ",q=" + std::to_string(s.q) + ")";
}

inline SmoothClass smoothness_class(const Partition& a) {
    require_nondegenerate(a);
    const int m = a.m(), c = a.c();
    for (int q = 1; q <= m; ++q)
        for (int p = 1; p <= c; ++p) {
            bool match = true;
            for (int i = 1; i <= m && match; ++i) match = a(i) == (i <= m - q ? c : c - p);
            if (match) return {true, p, q};
        }
    return {};
}

// --- certificates and the tangent comparison ------------------------------------------

struct CertificateResult {
    ComplementComponent component;
    bool in_Ia = false;
};

inline std::vector<CertificateResult> certificate_check(const TangentModel& t, const SchurModule& ia) {
    std::vector<CertificateResult> out;
    for (auto& c : complement_components(t)) {
        bool in = membership_in_Ia(phi_k(certificate_map(c, t), t), ia, t);
        out.push_back({c, in});
    }
    return out;
}

inline std::vector<CertificateResult> certificate_check(const Partition& a, long max_wedge_dim = default_max_wedge_dim) {
    require_nondegenerate(a);
    auto t = tangent_model(a);
    return certificate_check(t, build_Ia(t, max_wedge_dim));
}

inline bool all_false(const std::vector<CertificateResult>& rs) {
    for (auto& r : rs)
        if (r.in_Ia) return false;
    return true;
}

enum class Equality { Equal, ProperInclusion };

inline const char* to_string(Equality e) { return e == Equality::Equal ? "Equal" : "ProperInclusion"; }

struct TangentComparison {
    long long dim_ta = 0;
    long long dim_ma = 0;
    Equality verdict = Equality::Equal;
    long long gap() const { return dim_ta - dim_ma; }
};

/// dim { p in Hom(n_a, m/n_a) : phi_k(p) in I_a }. phi_k sends the basis
/// v_s^* (x) w to distinct wedges, so it is injective and the dimension is
/// dim Hom - (rank(I_a + image) - dim I_a).
inline TangentComparison tangent_comparison(const TangentModel& t, const SchurModule& ia) {
    SparseEchelon<WedgeKey> both = ia.echelon;
    for (int v : t.na)
        for (int w : t.complement) both.insert(to_row(phi_k(HomMap{{{v, w}, 1}}, t)));
    TangentComparison out;
    out.dim_ta = t.hom_dim() - static_cast<long long>(both.rank() - ia.dim());
    HomEchelon ma;
    for (auto& h : t.ma_embedded) {
        if (!ia.contains(phi_k(h, t))) throw InternalInconsistency("m_a leaves T_a for " + to_string(t.a));
        ma.insert(to_row(h));
    }
    out.dim_ma = static_cast<long long>(ma.rank());
    out.verdict = out.dim_ta == out.dim_ma ? Equality::Equal : Equality::ProperInclusion;
    return out;
}

inline TangentComparison tangent_comparison(const Partition& a, long max_wedge_dim = default_max_wedge_dim) {
    require_nondegenerate(a);
    auto t = tangent_model(a);
    return tangent_comparison(t, build_Ia(t, max_wedge_dim));
}

/// Blocks (i, alpha) outside Pi, diagonal to (i+1, alpha-1) in Pi, where one
/// side of the diagonal is a one dimensional corner:
///  - (i, alpha) is an addable corner of n_a and dim E_i = dim Q_alpha = 1, or
///  - (i+1, alpha-1) is a removable corner of n_a and dim E_{i+1} = dim Q_{alpha-1} = 1.
/// The second case is the first one for the dual partition.
inline std::vector<std::pair<int, int>> exception_boxes(const Partition& a) {
    require_nondegenerate(a);
    auto bs = block_structure(a);
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < bs.r_e(); ++i)
        for (int al = 2; al <= bs.r_q(); ++al) {
            if (bs.in_pi(i, al) || !bs.in_pi(i + 1, al - 1)) continue;
            const bool left = bs.in_pi(i, al - 1), down = bs.in_pi(i + 1, al);
            if (left && down && bs.dim_e(i) == 1 && bs.dim_q(al) == 1)
                out.emplace_back(i, al);
            else if (!left && !down && bs.dim_e(i + 1) == 1 && bs.dim_q(al - 1) == 1)
                out.emplace_back(i, al);
        }
    return out;
}

// --- foliation and induction ------------------------------------------------------

struct FoliationData {
    Partition b; // ((n-m)^q, 0^{m-q}) in P(m, n)
    Partition c; // ((p_1 + m - q)^{q_1}, ..., (p_r + m - q)^{q_r}) in P(q, n)
};

inline FoliationData foliation_data(const Partition& a) {
    require_nondegenerate(a);
    ExpForm f = exp_form(a);
    const int m = a.m(), n = a.n(), q = f.multiplicity_sum();
    std::vector<int> b(static_cast<std::size_t>(m), 0);
    std::fill(b.begin(), b.begin() + q, a.c());
    ExpForm fc;
    for (auto [p, mult] : f.pairs) fc.pairs.emplace_back(p + m - q, mult);
    return {validate(m, n, b), validate(q, n, reconstruct(fc))};
}

enum class NodeRole { Root, FoliationB, LeafSpaceC, RectangleB, ReducedD };

inline const char* to_string(NodeRole r) {
    switch (r) {
    case NodeRole::Root: return "root";
    case NodeRole::FoliationB: return "foliation_b";
    case NodeRole::LeafSpaceC: return "leaf_space_c";
    case NodeRole::RectangleB: return "rectangle_b";
    case NodeRole::ReducedD: return "reduced_d";
    }
    return "?";
}

enum class NodeStatus { Reduced, Base, Smooth, Leaf, HypothesisFails };

inline const char* to_string(NodeStatus s) {
    switch (s) {
    case NodeStatus::Reduced: return "reduced";
    case NodeStatus::Base: return "base";
    case NodeStatus::Smooth: return "smooth";
    case NodeStatus::Leaf: return "leaf";
    case NodeStatus::HypothesisFails: return "hypothesis-fails";
    }
    return "?";
}

struct InductionNode {
    Partition partition;
    NodeRole role = NodeRole::Root;
    NodeStatus status = NodeStatus::Leaf;
    std::string note;
    // projection of H^{1,1} of the parent onto m_b along this edge, when computable
    std::optional<bool> projected_vanishing;
    std::string projection_note;
    std::vector<InductionNode> children;

    bool complete() const {
        if (status == NodeStatus::HypothesisFails) return false;
        for (auto& c : children)
            if (!c.complete()) return false;
        return true;
    }
    int depth() const {
        int d = 0;
        for (auto& c : children) d = std::max(d, c.depth());
        return d + 1;
    }
};

namespace detail {

inline void attach_projection(InductionNode& child, const Partition& parent, ProjectionMode mode, long cap) {
    try {
        child.projected_vanishing = projected_vanishing(parent, child.partition, mode, cap);
        child.projection_note = mode == ProjectionMode::Foliation ? "foliation" : "inclusion";
    } catch (const IncompatiblePair& e) {
        child.projection_note = std::string("not applicable: ") + e.what();
    } catch (const ResourceExceeded& e) {
        child.projection_note = std::string("skipped: ") + e.what();
    }
}

inline InductionNode trace_node(const Partition& x, NodeRole role, long cap) {
    InductionNode node{x, role, NodeStatus::Reduced, {}, {}, {}, {}};
    ExpForm f = exp_form(x);
    const int m = x.m(), n = x.n(), c = x.c(), r = f.r();
    SmoothClass sc = smoothness_class(x);
    if (sc.smooth) {
        node.status = NodeStatus::Smooth;
        node.note = to_string(sc);
        return node;
    }
    if (r == 1) {
        auto [p, q] = f.pairs.front();
        node.status = p > 1 && q > 1 ? NodeStatus::Base : NodeStatus::HypothesisFails;
        node.note = "(p^q) with p=" + std::to_string(p) + ", q=" + std::to_string(q);
        return node;
    }
    const auto [pr, qr] = f.pairs.back();
    if (f.multiplicity_sum() == m) {
        // n_a sits in the rectangle (p_r^m); reduce inside Gr(m, n - p_r)
        node.note = "E-side rectangle";
        if (qr < 2) {
            node.status = NodeStatus::HypothesisFails;
            node.note += ", q_r = 1";
            return node;
        }
        InductionNode rect{validate(m, n, std::vector<int>(static_cast<std::size_t>(m), pr)), NodeRole::RectangleB,
                           NodeStatus::Leaf, "minimal rectangle", {}, {}, {}};
        attach_projection(rect, x, ProjectionMode::Inclusion, cap);
        std::vector<int> d = x.parts();
        for (int& v : d) v -= pr;
        node.children.push_back(std::move(rect));
        node.children.push_back(trace_node(validate(m, n - pr, d), NodeRole::ReducedD, cap));
        return node;
    }
    if (x(1) == c) {
        // conjugate side: the first q_1 rows are full, so C^{q_1} lies in every E
        const int q1 = f.pairs.front().second;
        node.note = "Q-side rectangle";
        if (q1 < 2) {
            node.status = NodeStatus::HypothesisFails;
            node.note += ", q'_r = 1";
            return node;
        }
        std::vector<int> b(static_cast<std::size_t>(m), 0);
        std::fill(b.begin(), b.begin() + q1, c);
        InductionNode rect{validate(m, n, b), NodeRole::RectangleB, NodeStatus::Leaf, "minimal rectangle", {}, {}, {}};
        attach_projection(rect, x, ProjectionMode::Inclusion, cap);
        std::vector<int> d(x.parts().begin() + q1, x.parts().end());
        node.children.push_back(std::move(rect));
        node.children.push_back(trace_node(validate(m - q1, n - q1, d), NodeRole::ReducedD, cap));
        return node;
    }
    // foliation by b, leaf space c in Gr(q, n), then d in the sub-Grassmannian of c
    const int q = f.multiplicity_sum();
    FoliationData fd = foliation_data(x);
    node.note = "foliation";
    InductionNode fb{fd.b, NodeRole::FoliationB, NodeStatus::Leaf, "leaves", {}, {}, {}};
    attach_projection(fb, x, ProjectionMode::Foliation, cap);
    InductionNode lc{fd.c, NodeRole::LeafSpaceC, NodeStatus::Reduced, "E-side rectangle", {}, {}, {}};
    const int shift = pr + m - q;
    if (qr < 2) {
        lc.status = NodeStatus::HypothesisFails;
        lc.note += ", q_r = 1";
    } else {
        InductionNode rect{validate(q, n, std::vector<int>(static_cast<std::size_t>(q), shift)), NodeRole::RectangleB,
                           NodeStatus::Leaf, "minimal rectangle", {}, {}, {}};
        attach_projection(rect, fd.c, ProjectionMode::Inclusion, cap);
        std::vector<int> d;
        for (auto [p, mult] : f.pairs) d.insert(d.end(), static_cast<std::size_t>(mult), p - pr);
        lc.children.push_back(std::move(rect));
        lc.children.push_back(trace_node(validate(q, n - shift, d), NodeRole::ReducedD, cap));
    }
    node.children.push_back(std::move(fb));
    node.children.push_back(std::move(lc));
    return node;
}

} // namespace detail

/// Tree of the partitions met by the induction on r. Needs the theorem condition.
inline InductionNode induction_trace(const Partition& a, long max_dim = default_max_wedge_dim) {
    require_nondegenerate(a);
    if (!theorem_condition(a)) throw NotApplicable("induction needs every q_i, q'_i >= 2");
    return detail::trace_node(a, NodeRole::Root, max_dim);
}

// --- verdict ---------------------------------------------------------------------

enum class VerdictKind { SchurRigid, NotCertified, Trivial, Skipped, ConsistencyFailure };

inline const char* to_string(VerdictKind v) {
    switch (v) {
    case VerdictKind::SchurRigid: return "SchurRigid";
    case VerdictKind::NotCertified: return "NotCertified";
    case VerdictKind::Trivial: return "Trivial";
    case VerdictKind::Skipped: return "Skipped";
    case VerdictKind::ConsistencyFailure: return "ConsistencyFailure";
    }
    return "?";
}

struct RigidityReport {
    Partition a;
    ExpForm exp_a, exp_conj;
    VerdictKind kind = VerdictKind::NotCertified;
    std::string trivial_reason; // point / whole Grassmannian
    bool theorem_verdict = false;
    std::optional<long long> h11_dim;
    std::vector<CertificateResult> certificates;
    std::optional<TangentComparison> equality;
    std::vector<std::pair<int, int>> exception_boxes;
    std::optional<AuditReport> audit;
    std::optional<InductionNode> trace;
    std::string trace_note;
    std::optional<SmoothClass> smoothness;
    std::string smoothable;
    std::vector<std::string> problems; // consistency violations, skip reasons

    bool certified() const { return equality && all_false(certificates) && equality->verdict == Equality::Equal; }
};

inline RigidityReport verdict(const Partition& a, long max_wedge_dim = default_max_wedge_dim) {
    RigidityReport rep;
    rep.a = a;
    rep.exp_a = exp_form(a);
    rep.exp_conj = exp_form(conjugate(a));
    if (a.is_degenerate()) {
        rep.kind = VerdictKind::Trivial;
        rep.trivial_reason = a.is_zero() ? "whole Grassmannian" : "point";
        rep.smoothable = "smooth";
        return rep;
    }
    rep.theorem_verdict = theorem_condition(a);
    rep.smoothness = smoothness_class(a);
    rep.exception_boxes = exception_boxes(a);
    try {
        auto t = tangent_model(a);
        rep.h11_dim = static_cast<long long>(h11(a, max_wedge_dim).dim());
        rep.audit = decomposition_audit(t, max_wedge_dim);
        SchurModule ia = build_Ia(t, max_wedge_dim);
        rep.certificates = certificate_check(t, ia);
        rep.equality = tangent_comparison(t, ia);
    } catch (const ResourceExceeded& e) {
        rep.kind = VerdictKind::Skipped;
        rep.problems.emplace_back(e.what());
        rep.smoothable = rep.smoothness->smooth ? "smooth" : "not evaluated";
        return rep;
    } catch (const AuditFailure& e) {
        rep.kind = VerdictKind::ConsistencyFailure;
        rep.problems.emplace_back(e.what());
        rep.smoothable = "not evaluated";
        return rep;
    }
    if (rep.theorem_verdict) {
        rep.trace = induction_trace(a, max_wedge_dim);
        rep.trace_note = rep.trace->complete() ? "complete" : "incomplete";
    } else {
        rep.trace_note = "not applicable: theorem condition fails";
    }

    const bool certs_false = all_false(rep.certificates);
    const bool equal = rep.equality->verdict == Equality::Equal;
    if (certs_false != equal) rep.problems.emplace_back("certificate check and tangent comparison disagree");
    if (!rep.exception_boxes.empty() && equal) rep.problems.emplace_back("exception box present but T_a = m_a");
    if (rep.theorem_verdict && !(certs_false && equal)) rep.problems.emplace_back("theorem condition holds but equality fails");
    if (rep.theorem_verdict && !rep.exception_boxes.empty())
        rep.problems.emplace_back("theorem condition holds but exception boxes exist");
    if (rep.trace && !rep.trace->complete()) rep.problems.emplace_back("theorem condition holds but induction trace is incomplete");

    if (!rep.problems.empty())
        rep.kind = VerdictKind::ConsistencyFailure;
    else if (rep.theorem_verdict && rep.certified() && rep.trace && rep.trace->complete())
        rep.kind = VerdictKind::SchurRigid;
    else
        rep.kind = VerdictKind::NotCertified;

    if (rep.kind == VerdictKind::SchurRigid && !rep.smoothness->smooth)
        rep.smoothable = "not smoothable";
    else if (rep.smoothness->smooth)
        rep.smoothable = "smooth";
    else
        rep.smoothable = "not evaluated";
    return rep;
}

} // namespace schubert
