#include <cstdlib>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "platgroup/invariants.hpp"

using namespace platgroup;

namespace {

std::vector<std::vector<Integer>> rows_of(const IntMatrix& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

IntMatrix random_matrix(std::mt19937& rng) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long long>(rng() % 19) - 9;
    return m;
}

Presentation pres(std::initializer_list<const char*> gens, std::initializer_list<const char*> rels) {
    Presentation p;
    for (auto g : gens) p.generators.push_back(parse_generator(g));
    for (auto r : rels) p.relators.push_back(parse_word(r));
    return p;
}

std::vector<std::string> texts(const Presentation& p, bool gens) {
    std::vector<std::string> out;
    if (gens)
        for (const auto& g : p.generators) out.push_back(to_string(g));
    else
        for (const auto& r : p.relators) out.push_back(to_string(r));
    return out;
}

} // namespace

TEST(Smith, SmallExamples) {
    const auto snf = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    EXPECT_EQ(snf.diagonal(), (std::vector<Integer>{2, 6, 12}));
    EXPECT_EQ(smith_normal_form(IntMatrix{{0, 0}, {0, 0}}).rank(), 0u);
    EXPECT_EQ(smith_normal_form(IntMatrix{{2, 0}, {0, 3}}).diagonal(), (std::vector<Integer>{1, 6}));
    EXPECT_EQ(smith_normal_form(IntMatrix(0, 3)).rank(), 0u);
}

TEST(Smith, PostconditionsOnRandomMatrices) {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix m = random_matrix(rng);
        const SmithForm snf = smith_normal_form(m);
        EXPECT_EQ(snf.U * m * snf.V, snf.D);
        EXPECT_EQ(abs(oracle::det_laplace(rows_of(snf.U))), 1);
        EXPECT_EQ(abs(oracle::det_laplace(rows_of(snf.V))), 1);
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (r != c) {
                    EXPECT_EQ(snf.D(r, c), 0);
                }
        const auto d = snf.diagonal();
        oracle::IMat plain(m.rows(), std::vector<long long>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) plain[r][c] = static_cast<long long>(m(r, c));
        Integer prod = 1;
        for (std::size_t i = 0; i < d.size(); ++i) {
            EXPECT_GE(d[i], 0);
            if (i + 1 < d.size()) {
                EXPECT_EQ(d[i] == 0 ? d[i + 1] : Integer(d[i + 1] % d[i]), 0);
            }
            prod *= d[i];
            EXPECT_EQ(prod, oracle::minor_gcd(plain, i + 1)) << "minor size " << i + 1;
        }
    }
}

TEST(Abelianization, Examples) {
    EXPECT_EQ(abelianization(pres({"x1"}, {})), (Abelianization{1, {}}));
    EXPECT_EQ(abelianization(pres({"x1", "x2"}, {"x1 x1 x2 x2 x2", "x1 x2 x1^-1 x2^-1"})), (Abelianization{1, {}}));
    EXPECT_EQ(abelianization(pres({"x1", "x2"}, {"x1 x1", "x2 x2 x2 x2"})), (Abelianization{0, {2, 4}}));
    EXPECT_EQ(abelianization(pres({"x1", "x2"}, {"x1 x1 x1 x1 x1 x1"})), (Abelianization{1, {6}}));
}

TEST(FiniteGroups, Orders) {
    EXPECT_EQ(groups::S3().order(), 6u);
    EXPECT_EQ(groups::S4().order(), 24u);
    EXPECT_EQ(groups::A4().order(), 12u);
    EXPECT_EQ(groups::D5().order(), 10u);
    EXPECT_EQ(groups::A5().order(), 60u);
    EXPECT_EQ(groups::by_name("d5").name(), "D5");
    EXPECT_THROW(groups::by_name("z7"), input_error);
    const auto g = groups::S4();
    for (int a = 0; a < 24; ++a) {
        EXPECT_EQ(g.mul(a, g.inv(a)), 0);
        EXPECT_EQ(g.mul(0, a), a);
    }
}

TEST(Homs, Examples) {
    EXPECT_EQ(count_homs(pres({"x1"}, {}), groups::S3()), 6u);
    EXPECT_EQ(count_homs(pres({"x1", "x2"}, {"x1 x2 x1 x2^-1 x1^-1 x2^-1"}), groups::S3()), 12u);
    EXPECT_EQ(count_homs(pres({"x1", "x2"}, {"x1 x2 x1^-1 x2^-1"}), groups::S3()), 18u);
    EXPECT_EQ(count_homs(pres({}, {}), groups::S4()), 1u);
    EXPECT_EQ(count_homs(pres({"x1", "x2", "x3"}, {"x1 x1"}), groups::S3()), 4u * 36u);
}

TEST(Homs, MatchExhaustiveSearch) {
    std::mt19937 rng(52);
    const std::vector<std::pair<FiniteGroupSpec, std::vector<oracle::Perm>>> targets{
        {groups::S3(), oracle::symmetric_group(3)},
        {groups::A4(), oracle::symmetric_group(4, true)},
        {groups::D5(), oracle::dihedral5()},
    };
    for (int trial = 0; trial < 40; ++trial) {
        Presentation p;
        const int ngen = 1 + static_cast<int>(rng() % 3);
        for (int g = 1; g <= ngen; ++g) p.generators.push_back(Generator::free(g));
        for (int r = 0; r < 2; ++r) {
            GroupWord w;
            for (int t = 0; t < 1 + static_cast<int>(rng() % 6); ++t)
                w.push_back({Generator::free(1 + static_cast<int>(rng() % static_cast<unsigned>(ngen))), rng() % 2 ? 1 : -1});
            p.relators.push_back(w);
        }
        for (const auto& [q, perms] : targets)
            EXPECT_EQ(count_homs(p, q), oracle::count_homs(texts(p, true), texts(p, false), perms)) << to_text(p) << q.name();
    }
}

TEST(Homs, NodeLimit) {
    const auto p = pres({"x1", "x2", "x3", "x4"}, {"x1 x2 x3 x4"});
    EXPECT_THROW(count_homs(p, groups::S4(), {100}), limit_exceeded);
    const auto fp = fingerprint(p, {groups::S3(), groups::S4()}, {0, {2000}});
    EXPECT_TRUE(fp.hom_counts.at("S3").has_value());
    EXPECT_FALSE(fp.hom_counts.at("S4").has_value());
    EXPECT_FALSE(fp.complete());
    EXPECT_TRUE(to_json(fp)["homs"]["S4"].is_null());
}

TEST(Homs, ThreadCountDoesNotChangeCounts) {
    const auto p = pres({"x1", "x2", "x3"}, {"x1 x2 x1 x2^-1 x1^-1 x2^-1", "x3 x1 x3^-1 x2^-1"});
    setenv("PLATGROUP_THREADS", "1", 1);
    const auto one = count_homs(p, groups::A5());
    setenv("PLATGROUP_THREADS", "7", 1);
    const auto seven = count_homs(p, groups::A5());
    unsetenv("PLATGROUP_THREADS");
    EXPECT_EQ(one, seven);
}

TEST(Fingerprint, Json) {
    const auto fp = fingerprint(pres({"x1"}, {}), {groups::S3()});
    EXPECT_EQ(to_json(fp).dump(), R"({"free_rank":1,"homs":{"S3":6},"torsion":[]})");
    const auto t = fingerprint(pres({"x1"}, {"x1 x1 x1"}), {groups::S3()});
    EXPECT_EQ(to_json(t).dump(), R"({"free_rank":0,"homs":{"S3":3},"torsion":[3]})");
}
