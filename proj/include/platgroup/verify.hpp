#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "platgroup/invariants.hpp"
#include "platgroup/plat.hpp"

namespace platgroup {

// ---- quotient-sampled relator checks --------------------------------------------

/// True when every word dies under every homomorphism base → q. The words
/// may use any generator of `base`.
inline bool words_die_in_quotient(const Presentation& base, const std::vector<GroupWord>& words,
                                  const FiniteGroupSpec& q, HomLimits limits = {}) {
    const TietzeResult tr = tietze_simplify_tracked(base);
    std::vector<std::vector<std::pair<std::size_t, bool>>> compiled;
    std::map<Generator, std::size_t> index;
    for (std::size_t g = 0; g < tr.presentation.generators.size(); ++g) index[tr.presentation.generators[g]] = g;
    for (const auto& w : words) {
        std::vector<std::pair<std::size_t, bool>> c;
        for (const Letter& l : apply_substitution(tr.expressions, w)) c.emplace_back(index.at(l.gen), l.exp < 0);
        if (!c.empty()) compiled.push_back(std::move(c));
    }
    bool ok = true;
    enumerate_homs(tr.presentation, q, [&](const std::vector<int>& images) {
        if (!ok) return;
        for (const auto& w : compiled) {
            int acc = FiniteGroupSpec::identity();
            for (auto [g, inv] : w) acc = q.mul(acc, inv ? q.inv(images[g]) : images[g]);
            if (acc != FiniteGroupSpec::identity()) {
                ok = false;
                return;
            }
        }
    }, limits);
    return ok;
}

/// Images of every relator of G₀(k, m) under every puncture twist die in
/// every homomorphism G₀ → q.
inline bool twists_respect_relators(const SurfaceBraidParams& params, const FiniteGroupSpec& q, HomLimits limits = {}) {
    const Presentation g0 = punctured_disk_presentation(params);
    std::vector<GroupWord> images;
    for (int p = 1; p < params.m; ++p)
        for (int sign : {1, -1}) {
            const Substitution tw = puncture_twist(p, sign, params);
            for (const auto& r : g0.relators) images.push_back(apply_substitution(tw, r));
        }
    return words_die_in_quotient(g0, images, q, limits);
}

// ---- the U1/U2/U3 lemma checks ---------------------------------------------------

struct LemmaReport {
    int n = 0, k = 0;
    std::vector<std::string> failures;
    nlohmann::json details = nlohmann::json::object();
    bool passed() const { return failures.empty(); }
};

/// Builds f: G(U2) → G(U1) (g_{i,n+1} ↦ g_{i,n-1}) and f': G(U3) → G(U2)
/// (g_{i,n+2} ↦ g_{i,n}); checks that transported relators die in every
/// sampled quotient of the target, and that abelianizations and hom counts
/// agree across U1, U2, U3.
inline LemmaReport check_lemma_isomorphism(int n, int k, const std::vector<FiniteGroupSpec>& battery,
                                           const FingerprintOptions& opts = {}) {
    LemmaReport rep{n, k, {}, nlohmann::json::object()};
    const Presentation u1 = fixture_U(1, n, k), u2 = fixture_U(2, n, k), u3 = fixture_U(3, n, k);
    const Substitution f = fixture_collapse(n, k, 2);
    const Substitution f2 = fixture_collapse(n, k, 3);
    const Substitution q = compose(f, f2);

    auto transport = [](const Substitution& s, const Presentation& p) {
        std::vector<GroupWord> out;
        for (const auto& r : p.relators) out.push_back(apply_substitution(s, r));
        return out;
    };
    const auto t21 = transport(f, u2), t32 = transport(f2, u3), t31 = transport(q, u3);

    const Abelianization a1 = abelianization(u1), a2 = abelianization(u2), a3 = abelianization(u3);
    if (!(a1 == a2 && a2 == a3)) rep.failures.push_back("abelianizations differ across U1, U2, U3");
    rep.details["free_rank"] = {a1.free_rank, a2.free_rank, a3.free_rank};

    const Presentation s1 = tietze_simplify(u1, opts.budget), s2 = tietze_simplify(u2, opts.budget),
                       s3 = tietze_simplify(u3, opts.budget);
    for (const auto& grp : battery) {
        const auto c1 = count_homs(s1, grp, opts.limits), c2 = count_homs(s2, grp, opts.limits),
                   c3 = count_homs(s3, grp, opts.limits);
        rep.details["homs"][grp.name()] = {c1, c2, c3};
        if (c1 != c2 || c2 != c3) rep.failures.push_back("hom counts into " + grp.name() + " differ across U1, U2, U3");
        if (!words_die_in_quotient(u1, t21, grp, opts.limits))
            rep.failures.push_back("f(relators of U2) survive in a quotient of U1 onto " + grp.name());
        if (!words_die_in_quotient(u2, t32, grp, opts.limits))
            rep.failures.push_back("f'(relators of U3) survive in a quotient of U2 onto " + grp.name());
        if (!words_die_in_quotient(u1, t31, grp, opts.limits))
            rep.failures.push_back("f f'(relators of U3) survive in a quotient of U1 onto " + grp.name());
    }
    return rep;
}

// ---- invariance runner -------------------------------------------------------------

/// A move applied to a diagram, with a label for reports.
struct DiagramStep {
    std::string label;
    std::function<PlatDiagram(const PlatDiagram&)> apply;
};

namespace detail {

// Deterministic across platforms (std distributions are not).
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

} // namespace detail

/// A random Heegaard move valid for d: cap twist, cup twist, or reparametrization by 1–2 letters.
inline HeegaardMove random_heegaard_move(const PlatDiagram& d, std::mt19937_64& rng) {
    const int sign = detail::draw(rng, 2) ? 1 : -1;
    switch (detail::draw(rng, 3)) {
    case 0: return HeegaardMove::cap_twist(1 + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(d.m / 2))), sign);
    case 1: return HeegaardMove::cup_twist(1 + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(d.m / 2))), sign);
    default: break;
    }
    BraidWord gamma{d.m, {}};
    const int len = 1 + static_cast<int>(detail::draw(rng, 2));
    for (int t = 0; t < len; ++t)
        gamma.letters.push_back({1 + static_cast<int>(detail::draw(rng, static_cast<std::uint64_t>(d.m - 1))),
                                 detail::draw(rng, 2) ? 1 : -1});
    return HeegaardMove::reparametrize(std::move(gamma));
}

struct VerifyOptions {
    int moves = 3;
    std::uint64_t seed = 7;
    std::vector<int> ks; // empty: use each file's k
    std::vector<FiniteGroupSpec> battery = groups::default_battery();
    FingerprintOptions fingerprint;
    bool lemma_checks = true;
    std::vector<int> lemma_ns{2, 3, 4};
    std::vector<int> lemma_ks{1, 2};
    // Applied to every moved diagram's presentation; for negative controls.
    std::function<Presentation(Presentation)> fault;
};

struct VerifyCheck {
    std::string step;
    bool ok = true;
    nlohmann::json before, after;
};

struct VerifyEntry {
    std::string name;
    int k = 1;
    std::string error;
    std::vector<VerifyCheck> checks;
    bool ok() const {
        return error.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
    }
};

struct VerifyReport {
    std::vector<VerifyEntry> entries;
    std::vector<LemmaReport> lemmas;
    std::vector<std::string> warnings;
    bool ok() const {
        return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); }) &&
               std::all_of(lemmas.begin(), lemmas.end(), [](const auto& l) { return l.passed(); });
    }
};

inline Fingerprint diagram_fingerprint(const PlatDiagram& d, const VerifyOptions& opts, bool moved) {
    Presentation p = plat_group(d);
    if (moved && opts.fault) p = opts.fault(std::move(p));
    return fingerprint(p, opts.battery, opts.fingerprint);
}

/// Both single stabilizations, then `moves` random Heegaard moves applied in
/// sequence; every resulting fingerprint is compared with the original.
inline VerifyEntry verify_diagram(const std::string& name, const PlatDiagram& d, std::uint64_t seed,
                                  const VerifyOptions& opts) {
    VerifyEntry entry{name, d.k, {}, {}};
    try {
        validate(d);
        const Fingerprint base = diagram_fingerprint(d, opts, false);
        auto compare = [&](const std::string& label, const PlatDiagram& moved) {
            const Fingerprint fp = diagram_fingerprint(moved, opts, true);
            VerifyCheck c{label, fp == base && fp.complete() && base.complete(), to_json(base), to_json(fp)};
            entry.checks.push_back(std::move(c));
        };
        compare("stabilize upper", stabilize(d, Side::Upper));
        compare("stabilize lower", stabilize(d, Side::Lower));
        std::mt19937_64 rng(seed);
        PlatDiagram cur = d;
        std::string trail;
        for (int s = 0; s < opts.moves; ++s) {
            const HeegaardMove mv = random_heegaard_move(cur, rng);
            cur = heegaard_move(cur, mv);
            trail += (trail.empty() ? "" : "; ") + to_string(mv);
            compare(trail, cur);
        }
    } catch (const std::exception& e) {
        entry.error = e.what();
    }
    return entry;
}

/// Runs every `*.plat` file in `dir` (sorted by name) at each requested k,
/// then the lemma checks. Entries run concurrently; results keep input order.
inline VerifyReport verify_corpus(const std::filesystem::path& dir, const VerifyOptions& opts) {
    VerifyReport rep;
    if (!std::filesystem::is_directory(dir)) throw input_error("corpus directory '" + dir.string() + "' not found");
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".plat") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) rep.warnings.push_back("corpus '" + dir.string() + "' has no .plat files; nothing to verify");

    struct Job {
        std::string name;
        PlatDiagram d;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const auto& f : files) {
        const PlatDiagram d = read_plat_file(f.string());
        try {
            validate(d);
        } catch (const input_error& e) {
            throw input_error(f.string() + ": " + e.what());
        }
        const std::vector<int> ks = opts.ks.empty() ? std::vector<int>{d.k} : opts.ks;
        for (int k : ks) {
            PlatDiagram dk = d;
            dk.k = k;
            const std::uint64_t seed = opts.seed * 1'000'003u + jobs.size();
            jobs.push_back({f.filename().string(), dk, seed});
        }
    }

    rep.entries.resize(jobs.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(jobs.size())));
    // count_homs is itself parallel; keep the inner level serial when running entries side by side.
    VerifyOptions inner = opts;
    auto run = [&](unsigned w) {
        for (std::size_t j = w; j < jobs.size(); j += workers)
            rep.entries[j] = verify_diagram(jobs[j].name, jobs[j].d, jobs[j].seed, inner);
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    if (opts.lemma_checks)
        for (int k : opts.lemma_ks)
            for (int n : opts.lemma_ns) rep.lemmas.push_back(check_lemma_isomorphism(n, k, opts.battery, opts.fingerprint));
    return rep;
}

inline nlohmann::json to_json(const VerifyReport& rep) {
    nlohmann::json out;
    out["ok"] = rep.ok();
    out["warnings"] = rep.warnings;
    out["entries"] = nlohmann::json::array();
    for (const auto& e : rep.entries) {
        nlohmann::json je{{"file", e.name}, {"k", e.k}, {"ok", e.ok()}};
        if (!e.error.empty()) je["error"] = e.error;
        je["checks"] = nlohmann::json::array();
        for (const auto& c : e.checks) {
            nlohmann::json jc{{"step", c.step}, {"ok", c.ok}};
            if (!c.ok) jc["diff"] = {{"before", c.before}, {"after", c.after}};
            je["checks"].push_back(std::move(jc));
        }
        out["entries"].push_back(std::move(je));
    }
    out["lemmas"] = nlohmann::json::array();
    for (const auto& l : rep.lemmas)
        out["lemmas"].push_back({{"n", l.n}, {"k", l.k}, {"ok", l.passed()}, {"failures", l.failures}, {"details", l.details}});
    return out;
}

} // namespace platgroup
