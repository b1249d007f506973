// Acceptance gate: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "platgroup/platgroup.hpp"

using namespace platgroup;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int n, const std::string& title, double max_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (max_seconds > 0 && secs > max_seconds) out.require(false, "took " + std::to_string(secs) + " s");
    std::ostringstream line;
    line << (out.ok ? "PASS " : "FAIL ") << n << " " << title;
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.2f s)", secs);
    line << buf;
    if (!out.note.empty()) line << " -- " << out.note;
    std::cout << line.str() << std::endl;
    failures += !out.ok;
}

PlatDiagram diagram(int m, const char* alpha, const char* beta, int k = 1) {
    PlatDiagram d;
    d.m = m;
    d.k = k;
    d.alpha = parse_braid(alpha, m);
    d.beta = parse_braid(beta, m);
    return d;
}

BraidWord braid(int n, const std::vector<int>& word) {
    BraidWord b{n, {}};
    for (int l : word) b.letters.push_back({std::abs(l), l < 0 ? -1 : 1});
    return b;
}

LaurentPoly poly(const oracle::Poly& p) {
    return LaurentPoly::from_coeffs(0, std::vector<Integer>(p.begin(), p.end()));
}

} // namespace

int main(int argc, char** argv) {
    const std::filesystem::path corpus = argc > 1 ? argv[1] : "corpus";
    const auto battery = groups::default_battery();

    criterion(1, "fingerprints invariant under stabilizations and 3 seeded Heegaard moves, k in {1,2}", 300, [&] {
        Outcome o;
        VerifyOptions opts;
        opts.ks = {1, 2};
        opts.moves = 3;
        opts.seed = 7;
        opts.battery = battery;
        opts.lemma_checks = false;
        const auto rep = verify_corpus(corpus, opts);
        std::set<std::string> names;
        bool has_m6_knot = false;
        std::size_t checks = 0;
        for (const auto& e : rep.entries) {
            names.insert(e.name);
            checks += e.checks.size();
            o.require(e.error.empty(), e.name + ": " + e.error);
            for (const auto& c : e.checks) o.require(c.ok, e.name + " k=" + std::to_string(e.k) + " " + c.step);
            const auto d = read_plat_file((corpus / e.name).string());
            has_m6_knot = has_m6_knot || (d.m == 6 && validate(d).components == 1);
        }
        for (const char* need : {"unknot.plat", "trefoil.plat", "hopf.plat"}) o.require(names.contains(need), std::string("corpus lacks ") + need);
        o.require(has_m6_knot, "corpus lacks a one-component m=6 diagram");
        if (o.ok) o.note = std::to_string(rep.entries.size()) + " entries, " + std::to_string(checks) + " comparisons";
        return o;
    });

    criterion(2, "unknot vs trefoil at k=1: S3 counts 6 vs 12, both abelianize to Z", 0, [&] {
        Outcome o;
        const auto u = fingerprint(plat_group(diagram(2, "", "")), battery);
        const auto t = fingerprint(plat_group(diagram(4, "", "2 2 2")), battery);
        o.require(u.hom_counts.at("S3") == 6u, "unknot S3 count");
        o.require(t.hom_counts.at("S3") == 12u, "trefoil S3 count");
        o.require(u.free_rank == 1 && u.torsion.empty() && t.free_rank == 1 && t.torsion.empty(), "abelianizations");
        o.require(!(u == t), "fingerprints coincide");
        return o;
    });

    criterion(3, "k=1 abelianization is Z^c, c = component count, every corpus entry", 0, [&] {
        Outcome o;
        std::vector<std::filesystem::path> files;
        for (const auto& e : std::filesystem::directory_iterator(corpus))
            if (e.path().extension() == ".plat") files.push_back(e.path());
        for (const auto& f : files) {
            PlatDiagram d = read_plat_file(f.string());
            d.k = 1;
            const auto ab = abelianization(plat_group(d));
            o.require(ab.torsion.empty() && ab.free_rank == validate(d).components, f.filename().string());
        }
        o.require(abelianization(plat_group(diagram(2, "", ""))) == Abelianization{1, {}}, "unknot");
        o.require(abelianization(plat_group(diagram(4, "", "2 2"))) == Abelianization{2, {}}, "hopf");
        o.require(abelianization(plat_group(diagram(4, "", "2 2 2"))) == Abelianization{1, {}}, "trefoil");
        o.require(!files.empty(), "empty corpus");
        return o;
    });

    criterion(4, "U1/U2/U3 checks for n in {2,3,4}, k in {1,2}, targets S3 and S4", 120, [&] {
        Outcome o;
        for (int k = 1; k <= 2; ++k)
            for (int n = 2; n <= 4; ++n) {
                const auto rep = check_lemma_isomorphism(n, k, {groups::S3(), groups::S4()});
                o.require(rep.passed(), "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                                            (rep.failures.empty() ? "" : rep.failures.front()));
            }
        return o;
    });

    criterion(5, "relator families match range enumeration for k<=3, m<=4; k=1 is free of rank m", 0, [&] {
        Outcome o;
        for (int k = 1; k <= 3; ++k)
            for (int m = 0; m <= 4; ++m) {
                const auto rs = punctured_disk_relators({k, m});
                std::multiset<std::string> got;
                for (const auto& r : rs) got.insert(to_string(r.word));
                const std::string at = "(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")";
                o.require(static_cast<int>(rs.size()) == oracle::family_counts(k, m).total(), at + " count");
                o.require(got == oracle::relator_strings(k, m), at + " words");
                if (k == 1) {
                    const auto p = punctured_disk_presentation({1, m});
                    o.require(p.relators.empty() && p.generators.size() == static_cast<std::size_t>(m), at + " not free");
                }
            }
        o.require(punctured_disk_relators({2, 2}).size() == 5, "(k=2,m=2) should have 5 relators");
        return o;
    });

    criterion(6, "Artin relations exact at k=1, m<=6; twists kill relators in every quotient at k=2, m<=4", 0, [&] {
        Outcome o;
        auto same = [](const BraidWord& a, const BraidWord& b, const SurfaceBraidParams& p) {
            for (const auto& g : p.alphabet())
                if (braid_action(a, GroupWord(g), p) != braid_action(b, GroupWord(g), p)) return false;
            return true;
        };
        for (int m = 2; m <= 6; ++m) {
            const SurfaceBraidParams p{1, m};
            for (int a = 1; a < m; ++a)
                for (int b = a + 1; b < m; ++b) {
                    const bool ok = b == a + 1 ? same(braid(m, {a, b, a}), braid(m, {b, a, b}), p)
                                               : same(braid(m, {a, b}), braid(m, {b, a}), p);
                    o.require(ok, "m=" + std::to_string(m) + " letters " + std::to_string(a) + "," + std::to_string(b));
                }
        }
        for (int m = 1; m <= 4; ++m)
            for (const auto& q : battery)
                o.require(twists_respect_relators({2, m}, q), "k=2 m=" + std::to_string(m) + " " + q.name());
        return o;
    });

    criterion(7, "Burau, Alexander and Lawrence-dimension identities", 0, [&] {
        Outcome o;
        o.require(to_json(burau(braid(2, {1}))).dump() == R"([["1 - t","t"],["1","0"]])", "burau(s1)");
        for (int n = 2; n <= 5; ++n)
            for (int i = 1; i < n; ++i) {
                const auto b = burau(braid(n, {i}));
                o.require(determinant(b) == -LaurentPoly::t(), "det burau");
                IntMatrix perm(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
                const auto pi = braid_permutation(braid(n, {i}));
                for (int r = 0; r < n; ++r) perm(static_cast<std::size_t>(r), static_cast<std::size_t>(pi[static_cast<std::size_t>(r)])) = 1;
                o.require(b.at_one() == perm, "t=1 permutation");
                for (int j = i + 1; j < n; ++j)
                    o.require(j == i + 1 ? burau(braid(n, {i, j, i})) == burau(braid(n, {j, i, j}))
                                         : burau(braid(n, {i, j})) == burau(braid(n, {j, i})),
                              "braid relation n=" + std::to_string(n));
            }
        o.require(alexander_invariant(diagram(2, "", "")) == LaurentPoly(1), "unknot");
        const auto wirtinger = oracle::wirtinger_alexander(3, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
        o.require(alexander_invariant(diagram(4, "", "2 2 2")) == poly(wirtinger), "trefoil vs Wirtinger");
        o.require(alexander_invariant(diagram(4, "", "2 2 2")).to_string() == "1 - t + t^2", "trefoil rendering");
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; k <= 4; ++k)
                o.require(lawrence_dim(n, k) == static_cast<std::uint64_t>(oracle::binom(n + k - 2, k)), "lawrence_dim");
        return o;
    });

    criterion(8, "Smith normal form post-conditions on 200 seeded random matrices up to 5x5", 30, [&] {
        Outcome o;
        std::mt19937 rng(2024);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            IntMatrix m(r, c);
            oracle::IMat plain(r, std::vector<long long>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) {
                    plain[i][j] = static_cast<long long>(rng() % 19) - 9;
                    m(i, j) = plain[i][j];
                }
            const auto snf = smith_normal_form(m);
            auto rows_of = [](const IntMatrix& a) {
                std::vector<std::vector<Integer>> out(a.rows(), std::vector<Integer>(a.cols()));
                for (std::size_t i = 0; i < a.rows(); ++i)
                    for (std::size_t j = 0; j < a.cols(); ++j) out[i][j] = a(i, j);
                return out;
            };
            o.require(snf.U * m * snf.V == snf.D, "U M V != D");
            o.require(abs(oracle::det_laplace(rows_of(snf.U))) == 1 && abs(oracle::det_laplace(rows_of(snf.V))) == 1,
                      "factor not unimodular");
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (i != j) o.require(snf.D(i, j) == 0, "off-diagonal entry");
            const auto d = snf.diagonal();
            Integer prod = 1;
            for (std::size_t i = 0; i < d.size(); ++i) {
                o.require(d[i] >= 0, "negative invariant factor");
                if (i + 1 < d.size()) o.require(d[i] == 0 ? d[i + 1] == 0 : d[i + 1] % d[i] == 0, "divisibility chain");
                prod *= d[i];
                o.require(prod == oracle::minor_gcd(plain, i + 1), "minor-gcd identity");
            }
        }
        return o;
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures;
}
