#include <gtest/gtest.h>

#include <schubert/hwv.hpp>

using namespace schubert;

namespace {

int cell(int col, int row, int m) { return cell_index(Cell{col, row}, m); }

} // namespace

TEST(Hwv, SingleComponentOf220) {
    auto a = validate(3, 5, {2, 2, 0});
    auto t = tangent_model(a);
    auto comps = complement_components(t);
    ASSERT_EQ(comps.size(), 1u);
    const auto& c = comps[0];
    EXPECT_EQ(c.kind, ComponentKind::Type1);
    EXPECT_EQ(std::pair(c.j, c.b), std::pair(2, 1));
    EXPECT_EQ(std::pair(c.i, c.a), std::pair(1, 1));
    EXPECT_EQ(c.dim, 6);
    // cell (3,1) goes to the class of cell (1,2), nothing else
    HomMap expect{{{cell(3, 1, 3), cell(1, 2, 3)}, 1}};
    EXPECT_EQ(certificate_map(c, t), expect);
    EXPECT_EQ(generate_hom_module({c.hwv}, t).rank(), 6u);

    auto rep = decomposition_audit(t);
    EXPECT_EQ(rep.hom_dim, 8);
    EXPECT_EQ(rep.ma_dim, 2);
    EXPECT_TRUE(rep.ok());
}

TEST(Hwv, Type2OfTenRowPartition) {
    auto a = validate(10, 19, {9, 9, 7, 7, 3, 3, 3, 3, 0, 0});
    auto t = tangent_model(a);
    auto comps = complement_components(t);
    int type2 = 0;
    for (auto& c : comps) {
        if (c.kind != ComponentKind::Type2) continue;
        ++type2;
        EXPECT_EQ(c.b, c.a);
        // one term per row of Q_a
        EXPECT_EQ(static_cast<int>(c.hwv.size()), t.blocks.dim_q(c.a));
    }
    EXPECT_GT(type2, 0);

    // j = 4, i = 1: bullets in column 10, crosses in column 1, over Q_2 (rows 3..6) and Q_3 (rows 7..9)
    for (int al : {2, 3}) {
        HomMap expect;
        for (int p = t.blocks.q_start(al); p <= t.blocks.q_end(al); ++p) expect[{cell(10, p, 10), cell(1, p, 10)}] = 1;
        bool found = false;
        for (auto& c : comps)
            if (c.kind == ComponentKind::Type2 && c.j == 4 && c.i == 1 && c.a == al) {
                found = true;
                EXPECT_EQ(certificate_map(c, t), expect);
            }
        EXPECT_TRUE(found) << "Q block " << al;
    }
    // Pi_{1,4} = {1,2,3}; the smallest index carries the m_a trace, so a = 1 is absent
    for (auto& c : comps) EXPECT_FALSE(c.kind == ComponentKind::Type2 && c.j == 4 && c.i == 1 && c.a == 1);
}

TEST(Hwv, DegenerateRejected) {
    EXPECT_THROW(complement_components(validate(3, 5, {0, 0, 0})), DegeneratePartition);
    EXPECT_THROW(complement_components(validate(3, 5, {2, 2, 2})), DegeneratePartition);
    EXPECT_THROW(decomposition_audit(validate(2, 4, {0, 0})), DegeneratePartition);
}

TEST(Hwv, AuditCap) {
    EXPECT_THROW(decomposition_audit(validate(3, 5, {2, 2, 0}), 7), ResourceExceeded);
}

TEST(Hwv, ActionMatchesBracketModNa) {
    // X.p = [X, p(.)] - p([X, .]) computed through gl brackets
    auto t = tangent_model(validate(3, 6, {2, 1, 0}));
    auto gens = levi_block_generators(t.blocks, t.amb);
    for (auto& c : complement_components(t))
        for (auto& x : gens) {
            HomMap got = act_hom(x, c.hwv, t);
            HomMap want;
            for (int v : t.na) {
                // p(v) mod n_a, then X acting
                MVector pv;
                for (auto& [vw, s] : c.hwv)
                    if (vw.first == v) pv[vw.second] += s;
                MVector xpv = levi_action_on_m(x, pv, t.amb);
                MVector xv = levi_action_on_m(x, MVector{{v, 1}}, t.amb);
                MVector pxv;
                for (auto& [u, s] : xv)
                    for (auto& [vw, r] : c.hwv)
                        if (vw.first == u) pxv[vw.second] += s * r;
                for (auto& [w, s] : xpv)
                    if (!t.in_na[static_cast<std::size_t>(w)]) want[{v, w}] += s;
                for (auto& [w, s] : pxv) want[{v, w}] -= s;
            }
            for (auto it = want.begin(); it != want.end();) it = it->second == 0 ? want.erase(it) : std::next(it);
            EXPECT_EQ(got, want);
        }
}

class HwvBoxes : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(HwvBoxes, ComponentInvariants) {
    auto [m, n] = GetParam();
    for (auto& a : enumerate_box(m, n)) {
        if (a.is_degenerate()) continue;
        auto t = tangent_model(a);
        HomEchelon ma;
        for (auto& h : t.ma_embedded) ma.insert(to_row(h));
        std::vector<HomEchelon> gen;
        for (auto& c : complement_components(t)) {
            EXPECT_TRUE(is_highest_weight(c.hwv, t)) << to_string(a);
            EXPECT_TRUE(is_weight_vector(c.hwv, t)) << to_string(a);
            EXPECT_FALSE(ma.contains(to_row(c.hwv))) << to_string(a);
            gen.push_back(generate_hom_module({c.hwv}, t));
            EXPECT_EQ(static_cast<long long>(gen.back().rank()), c.dim) << to_string(a);
        }
        // pairwise trivial intersection: ranks add
        for (std::size_t x = 0; x < gen.size(); ++x)
            for (std::size_t y = x + 1; y < gen.size(); ++y) {
                HomEchelon both = gen[x];
                for (auto& [k, r] : gen[y].rows()) both.insert(r);
                EXPECT_EQ(both.rank(), gen[x].rank() + gen[y].rank()) << to_string(a);
            }
        AuditReport rep;
        ASSERT_NO_THROW(rep = decomposition_audit(t)) << to_string(a);
        EXPECT_TRUE(rep.ok()) << to_string(a);
        EXPECT_EQ(rep.missing, 0);
    }
}

INSTANTIATE_TEST_SUITE_P(Boxes, HwvBoxes,
                         ::testing::Values(std::pair{2, 4}, std::pair{2, 5}, std::pair{3, 5}, std::pair{3, 6},
                                           std::pair{4, 8}));

TEST(Hwv, AuditExamples) {
    EXPECT_TRUE(decomposition_audit(validate(3, 5, {2, 1, 0})).ok());
    EXPECT_TRUE(decomposition_audit(validate(2, 5, {2, 2})).ok());
    EXPECT_TRUE(decomposition_audit(validate(10, 19, {9, 9, 7, 7, 3, 3, 3, 3, 0, 0})).ok());
}
