#include <random>
#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "platgroup/invariants.hpp"
#include "platgroup/surface_braid.hpp"
#include "platgroup/verify.hpp"

using namespace platgroup;

namespace {

GroupWord w(const char* text) { return parse_word(text); }

BraidWord braid(int m, std::initializer_list<int> ls) {
    BraidWord b{m, {}};
    for (int l : ls) b.letters.push_back({l < 0 ? -l : l, l < 0 ? -1 : 1});
    return b;
}

int count_family(const std::vector<TaggedRelator>& rs, RelatorFamily f) {
    int n = 0;
    for (const auto& r : rs) n += r.family == f;
    return n;
}

bool same_on_generators(const BraidWord& a, const BraidWord& b, const SurfaceBraidParams& params) {
    for (const auto& g : params.alphabet())
        if (braid_action(a, GroupWord(g), params) != braid_action(b, GroupWord(g), params)) return false;
    return true;
}

} // namespace

TEST(SurfaceBraid, SmallPresentations) {
    const auto p12 = punctured_disk_presentation({1, 2});
    EXPECT_EQ(p12.generators.size(), 2u);
    EXPECT_TRUE(p12.relators.empty());

    const auto r22 = punctured_disk_relators({2, 2});
    EXPECT_EQ(r22.size(), 5u);
    EXPECT_EQ(count_family(r22, RelatorFamily::Disjoint), 1);
    EXPECT_EQ(count_family(r22, RelatorFamily::Conjugate), 2);
    EXPECT_EQ(count_family(r22, RelatorFamily::SelfLink), 2);
    EXPECT_EQ(punctured_disk_presentation({2, 2}).generators.size(), 5u);

    const auto r31 = punctured_disk_relators({3, 1});
    EXPECT_EQ(count_family(r31, RelatorFamily::BraidRelation), 1);
    EXPECT_EQ(count_family(r31, RelatorFamily::PointFar), 2); // (i=3, j=1) and (i=1, j=2)
    EXPECT_EQ(r31.size(), 7u);
}

TEST(SurfaceBraid, FamiliesMatchRangeEnumeration) {
    for (int k = 1; k <= 4; ++k)
        for (int m = 0; m <= 5; ++m) {
            const auto rs = punctured_disk_relators({k, m});
            const auto expect = oracle::family_counts(k, m);
            EXPECT_EQ(count_family(rs, RelatorFamily::FarCommute), expect.far) << k << "," << m;
            EXPECT_EQ(count_family(rs, RelatorFamily::BraidRelation), expect.braid) << k << "," << m;
            EXPECT_EQ(count_family(rs, RelatorFamily::Disjoint), expect.disjoint) << k << "," << m;
            EXPECT_EQ(count_family(rs, RelatorFamily::Conjugate), expect.conjugate) << k << "," << m;
            EXPECT_EQ(count_family(rs, RelatorFamily::SelfLink), expect.self_link) << k << "," << m;
            EXPECT_EQ(count_family(rs, RelatorFamily::PointFar), expect.point_far) << k << "," << m;
            std::multiset<std::string> got;
            for (const auto& r : rs) got.insert(to_string(r.word));
            EXPECT_EQ(got, oracle::relator_strings(k, m)) << k << "," << m;
            EXPECT_EQ(punctured_disk_presentation({k, m}).generators.size(), static_cast<std::size_t>(k - 1 + k * m));
        }
}

TEST(SurfaceBraid, TwistExamples) {
    const SurfaceBraidParams p{1, 3};
    const auto t = puncture_twist(1, 1, p);
    EXPECT_EQ(t.image(Generator::g(1, 3)), w("g1_3"));
    EXPECT_EQ(t.image(Generator::g(1, 1)), w("g1_1 g1_2 g1_1^-1"));
    EXPECT_EQ(t.image(Generator::g(1, 2)), w("g1_1"));
    const auto back = puncture_twist(1, -1, p);
    for (const auto& g : p.alphabet()) EXPECT_EQ(apply_substitution(back, t.image(g)), GroupWord(g));
    EXPECT_THROW(puncture_twist(3, 1, p), input_error);
    EXPECT_THROW(puncture_twist(0, 1, p), input_error);
}

TEST(SurfaceBraid, TwistsFixSigmas) {
    const SurfaceBraidParams p{3, 3};
    for (int q = 1; q < 3; ++q)
        for (int i = 1; i < 3; ++i) EXPECT_EQ(puncture_twist(q, 1, p).image(Generator::sigma(i)), w(("s" + std::to_string(i)).c_str()));
}

TEST(SurfaceBraid, ActionExamples) {
    const SurfaceBraidParams p{1, 2};
    EXPECT_EQ(braid_action(braid(2, {}), w("g1_1 g1_2^-1"), p), w("g1_1 g1_2^-1"));
    EXPECT_EQ(braid_action(braid(2, {1}), w("g1_2"), p), w("g1_1"));
    EXPECT_THROW(braid_action(braid(3, {1}), w("g1_2"), p), input_error);
}

TEST(SurfaceBraid, ArtinRelationsHoldExactlyAtKOne) {
    for (int m = 2; m <= 6; ++m) {
        const SurfaceBraidParams p{1, m};
        for (int a = 1; a < m; ++a) {
            EXPECT_TRUE(same_on_generators(braid(m, {a, -a}), braid(m, {}), p));
            for (int b = a + 1; b < m; ++b) {
                if (b == a + 1)
                    EXPECT_TRUE(same_on_generators(braid(m, {a, b, a}), braid(m, {b, a, b}), p)) << m << " " << a;
                else
                    EXPECT_TRUE(same_on_generators(braid(m, {a, b}), braid(m, {b, a}), p)) << m << " " << a << " " << b;
            }
        }
    }
}

TEST(SurfaceBraid, BoundaryLoopPreserved) {
    for (int m = 2; m <= 6; ++m) {
        const SurfaceBraidParams p{1, m};
        GroupWord boundary;
        for (int q = 1; q <= m; ++q) boundary = boundary * GroupWord(Generator::g(1, q));
        for (int a = 1; a < m; ++a)
            for (int sign : {1, -1}) EXPECT_EQ(braid_action(braid(m, {sign * a}), boundary, p), boundary);
    }
}

TEST(SurfaceBraid, ActionComposesLeftLetterFirst) {
    std::mt19937 rng(31);
    const SurfaceBraidParams p{2, 4};
    for (int trial = 0; trial < 30; ++trial) {
        BraidWord a{4, {}}, b{4, {}};
        for (int n = 0; n < 3; ++n) {
            a.letters.push_back({1 + static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1});
            b.letters.push_back({1 + static_cast<int>(rng() % 3), rng() % 2 ? 1 : -1});
        }
        const auto sa = braid_substitution(a, p), sb = braid_substitution(b, p);
        for (const auto& g : p.alphabet())
            EXPECT_EQ(braid_action(a * b, GroupWord(g), p), apply_substitution(sb, sa.image(g)));
    }
}

TEST(SurfaceBraid, TwistsRespectRelatorsInQuotients) {
    for (int k = 2; k <= 3; ++k)
        for (int m = 1; m <= 4; ++m)
            for (const auto& q : {groups::S3(), groups::S4()}) {
                if (k == 3 && m > 2 && q.name() == "S4") continue;
                EXPECT_TRUE(twists_respect_relators({k, m}, q)) << k << "," << m << " " << q.name();
            }
}

TEST(SurfaceBraid, Permutation) {
    EXPECT_EQ(braid_permutation(braid(3, {1})), (std::vector<int>{1, 0, 2}));
    EXPECT_EQ(braid_permutation(braid(3, {1, 2})).size(), 3u);
    EXPECT_EQ(braid_permutation(braid(4, {2, 2})), (std::vector<int>{0, 1, 2, 3}));
}

TEST(SurfaceBraid, BraidText) {
    EXPECT_EQ(to_string(parse_braid("2 -1 2", 3)), "2 -1 2");
    EXPECT_TRUE(parse_braid("", 3).letters.empty());
    EXPECT_THROW(parse_braid("3", 3), input_error);
    EXPECT_THROW(parse_braid("0", 3), input_error);
    EXPECT_THROW(parse_braid("a", 3), input_error);
}
