#include <gtest/gtest.h>

#include <random>

#include <schubert/linalg.hpp>

using namespace schubert;

TEST(Linalg, RrefExamples) {
    auto id = ExactMatrix::identity(3);
    auto r = rref(id);
    EXPECT_EQ(r.rank, 3u);
    EXPECT_EQ(r.form, id);

    ExactMatrix z(2, 3);
    EXPECT_EQ(rref(z).rank, 0u);
    EXPECT_EQ(rref(z).form, z);

    ExactMatrix m{{1, 2}, {2, 4}};
    auto rm = rref(m);
    EXPECT_EQ(rm.rank, 1u);
    EXPECT_EQ(rm.form, (ExactMatrix{{1, 2}, {0, 0}}));

    ExactMatrix q{{2, 4, 6}, {1, 3, 5}};
    EXPECT_EQ(rref(q).form, (ExactMatrix{{1, 0, -1}, {0, 1, 2}}));
}

TEST(Linalg, KernelExamples) {
    EXPECT_EQ(kernel(ExactMatrix::identity(3)).dim(), 0u);
    EXPECT_EQ(kernel(ExactMatrix(2, 3)).dim(), 3u);
    auto k = kernel(ExactMatrix{{1, 1, 0}});
    EXPECT_EQ(k.dim(), 2u);
    EXPECT_TRUE(k.member({1, -1, 0}));
    EXPECT_FALSE(k.member({1, 0, 0}));
}

TEST(Linalg, SubspaceOps) {
    auto s = Subspace::span(3, {{1, 0, 0}, {0, 1, 0}});
    auto t = Subspace::span(3, {{0, 1, 0}, {0, 0, 1}});
    EXPECT_TRUE(member({0, 0, 0}, s));
    EXPECT_EQ(intersect(s, s), s);
    EXPECT_EQ(intersect(s, t), Subspace::span(3, {{0, 1, 0}}));
    EXPECT_EQ(sum(s, t), Subspace::full(3));
    EXPECT_THROW(sum(s, Subspace(4)), DimensionMismatch);
    EXPECT_THROW(s.member({1, 0}), DimensionMismatch);
}

TEST(Linalg, ScalarRoundTripAndLowestTerms) {
    for (const char* txt : {"0", "-3/7", "12345678901234567890/7", "5"}) {
        Scalar x = parse_scalar(txt);
        EXPECT_EQ(parse_scalar(to_string(x)), x);
    }
    EXPECT_EQ(to_string(parse_scalar("4/6")), "2/3");
    EXPECT_EQ(to_string(parse_scalar("3/-6")), "-1/2");
}

namespace {

std::vector<Vector> random_vectors(std::mt19937& rng, std::size_t count, std::size_t d) {
    std::uniform_int_distribution<int> val(-3, 3), den(1, 4);
    std::vector<Vector> out;
    for (std::size_t i = 0; i < count; ++i) {
        Vector v(d);
        for (auto& x : v) {
            x = Scalar(val(rng), den(rng));
            x.canonicalize();
        }
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST(Linalg, ModularLawRandomized) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t d = 2 + static_cast<std::size_t>(trial % 5);
        std::uniform_int_distribution<std::size_t> cnt(0, d);
        auto gs = random_vectors(rng, cnt(rng), d);
        auto gt = random_vectors(rng, cnt(rng), d);
        // force some overlap
        if (!gs.empty() && trial % 2) gt.push_back(gs.front());
        auto s = Subspace::span(d, gs), t = Subspace::span(d, gt);
        EXPECT_EQ(sum(s, t).dim() + intersect(s, t).dim(), s.dim() + t.dim());
        const Subspace both = intersect(s, t);
        for (auto& v : both.basis()) {
            EXPECT_TRUE(s.member(v));
            EXPECT_TRUE(t.member(v));
        }
    }
}

TEST(Linalg, RrefCanonicalAndIdempotent) {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        auto rows = random_vectors(rng, 4, 5);
        ExactMatrix m(4, 5), p(4, 5);
        std::vector<std::size_t> perm{2, 0, 3, 1};
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 5; ++c) {
                m(r, c) = rows[r][c];
                p(r, c) = rows[perm[r]][c] * (r + 1);
            }
        auto a = rref(m), b = rref(p);
        EXPECT_EQ(a.form, b.form);
        EXPECT_EQ(rref(a.form).form, a.form);
        EXPECT_EQ(kernel(m).dim(), 5 - a.rank);
        const Subspace ker = kernel(m);
        for (auto& v : ker.basis())
            for (std::size_t r = 0; r < 4; ++r) {
                Scalar dot = 0;
                for (std::size_t c = 0; c < 5; ++c) dot += m(r, c) * v[c];
                EXPECT_EQ(dot, 0);
            }
    }
}

TEST(Linalg, LargeCoefficientsStayExact) {
    // Hilbert matrix: nonsingular, badly conditioned
    const std::size_t n = 8;
    ExactMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = Scalar(1, static_cast<unsigned long>(i + j + 1));
    auto r = rref(h);
    EXPECT_EQ(r.rank, n);
    EXPECT_EQ(r.form, ExactMatrix::identity(n));
}
