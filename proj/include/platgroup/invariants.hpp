#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "platgroup/finite_group.hpp"
#include "platgroup/presentation.hpp"
#include "platgroup/smith.hpp"

namespace platgroup {

/// Worker count: hardware concurrency, capped by PLATGROUP_THREADS when set.
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("PLATGROUP_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

// ---- abelianization -----------------------------------------------------------

struct Abelianization {
    int free_rank = 0;
    std::vector<Integer> torsion; // invariant factors > 1, divisibility chain
    friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

/// One row per relator, one column per generator.
inline IntMatrix exponent_matrix(const Presentation& p) {
    std::map<Generator, std::size_t> col;
    for (std::size_t c = 0; c < p.generators.size(); ++c) col[p.generators[c]] = c;
    IntMatrix M(p.relators.size(), p.generators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (const Letter& l : p.relators[r]) {
            auto it = col.find(l.gen);
            if (it == col.end()) throw domain_error("relator uses generator " + to_string(l.gen) + " outside alphabet");
            M(r, it->second) += l.exp;
        }
    return M;
}

inline Abelianization abelianization(const Presentation& p) {
    const SmithForm snf = smith_normal_form(exponent_matrix(p));
    Abelianization out;
    out.free_rank = static_cast<int>(p.generators.size() - snf.rank());
    for (const auto& d : snf.diagonal())
        if (d > 1) out.torsion.push_back(d);
    return out;
}

// ---- homomorphism search ------------------------------------------------------

struct HomLimits {
    std::uint64_t max_nodes = 100'000'000;
};

namespace detail {

// Relators as (generator index, inverse?) sequences, grouped by the search
// level at which all their generators have images.
struct HomPlan {
    std::vector<std::size_t> order;
    std::vector<std::vector<std::vector<std::pair<std::size_t, bool>>>> checks;
    std::size_t unconstrained = 0;
};

inline HomPlan plan_search(const Presentation& p) {
    const std::size_t n = p.generators.size();
    std::map<Generator, std::size_t> index;
    for (std::size_t g = 0; g < n; ++g) index[p.generators[g]] = g;
    std::vector<std::vector<std::pair<std::size_t, bool>>> rels;
    std::vector<std::vector<std::size_t>> uses;
    std::vector<bool> constrained(n);
    for (const auto& r : p.relators) {
        std::vector<std::pair<std::size_t, bool>> w;
        std::vector<std::size_t> u;
        for (const Letter& l : r) {
            auto it = index.find(l.gen);
            if (it == index.end()) throw domain_error("relator uses generator " + to_string(l.gen) + " outside alphabet");
            w.emplace_back(it->second, l.exp < 0);
            u.push_back(it->second);
            constrained[it->second] = true;
        }
        std::sort(u.begin(), u.end());
        u.erase(std::unique(u.begin(), u.end()), u.end());
        rels.push_back(std::move(w));
        uses.push_back(std::move(u));
    }

    HomPlan plan;
    std::vector<bool> placed(n);
    std::vector<std::size_t> missing(rels.size());
    for (std::size_t r = 0; r < rels.size(); ++r) missing[r] = uses[r].size();
    std::size_t remaining = static_cast<std::size_t>(std::count(constrained.begin(), constrained.end(), true));
    plan.unconstrained = n - remaining;
    // Greedy: next generator closes the most relators, then touches the most open ones.
    while (remaining-- > 0) {
        std::size_t best = n;
        std::pair<std::size_t, std::size_t> best_score{0, 0};
        for (std::size_t g = 0; g < n; ++g) {
            if (placed[g] || !constrained[g]) continue;
            std::pair<std::size_t, std::size_t> score{0, 0};
            for (std::size_t r = 0; r < rels.size(); ++r) {
                if (!std::binary_search(uses[r].begin(), uses[r].end(), g)) continue;
                if (missing[r] == 1) ++score.first;
                ++score.second;
            }
            if (best == n || score > best_score) {
                best = g;
                best_score = score;
            }
        }
        placed[best] = true;
        plan.order.push_back(best);
        plan.checks.emplace_back();
        for (std::size_t r = 0; r < rels.size(); ++r) {
            if (!std::binary_search(uses[r].begin(), uses[r].end(), best)) continue;
            if (--missing[r] == 0) plan.checks.back().push_back(rels[r]);
        }
    }
    return plan;
}

class HomSearch {
public:
    HomSearch(const HomPlan& plan, const FiniteGroupSpec& q, std::size_t ngen)
        : plan_(plan), q_(q), images_(ngen, 0) {}

    // Visits every consistent assignment below `level`; returns the number found.
    template <class Visit, class Tick>
    std::uint64_t run(std::size_t level, Visit&& visit, Tick&& tick) {
        if (level == plan_.order.size()) {
            visit(images_);
            return 1;
        }
        std::uint64_t found = 0;
        const std::size_t g = plan_.order[level];
        for (int e = 0; e < static_cast<int>(q_.order()); ++e) {
            images_[g] = e;
            tick();
            if (consistent(level)) found += run(level + 1, visit, tick);
        }
        return found;
    }

    std::vector<int>& images() { return images_; }

    bool consistent(std::size_t level) const {
        for (const auto& w : plan_.checks[level]) {
            int acc = FiniteGroupSpec::identity();
            for (auto [g, inv] : w) acc = q_.mul(acc, inv ? q_.inv(images_[g]) : images_[g]);
            if (acc != FiniteGroupSpec::identity()) return false;
        }
        return true;
    }

private:
    const HomPlan& plan_;
    const FiniteGroupSpec& q_;
    std::vector<int> images_;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > UINT64_MAX / a) throw limit_exceeded("homomorphism count overflows 64 bits");
    return a * b;
}

} // namespace detail

/// Calls visit(images) for every homomorphism p → q, where images[g] is the
/// element index of generator g (in p.generators order). Serial.
template <class Visit>
void enumerate_homs(const Presentation& p, const FiniteGroupSpec& q, Visit&& visit, HomLimits limits = {}) {
    const auto plan = detail::plan_search(p);
    detail::HomSearch search(plan, q, p.generators.size());
    std::uint64_t nodes = 0;
    auto tick = [&] {
        if (++nodes > limits.max_nodes) throw limit_exceeded("homomorphism search exceeded node limit");
    };
    // Unconstrained generators range freely.
    std::vector<std::size_t> loose;
    std::vector<bool> in_order(p.generators.size());
    for (auto g : plan.order) in_order[g] = true;
    for (std::size_t g = 0; g < p.generators.size(); ++g)
        if (!in_order[g]) loose.push_back(g);
    search.run(0, [&](std::vector<int>& images) {
        std::function<void(std::size_t)> spread = [&](std::size_t at) {
            if (at == loose.size()) {
                visit(static_cast<const std::vector<int>&>(images));
                return;
            }
            for (int e = 0; e < static_cast<int>(q.order()); ++e) {
                images[loose[at]] = e;
                tick();
                spread(at + 1);
            }
        };
        spread(0);
    }, tick);
}

/// |Hom(p, q)|, exact. Throws limit_exceeded past limits.max_nodes search nodes.
inline std::uint64_t count_homs(const Presentation& p, const FiniteGroupSpec& q, HomLimits limits = {}) {
    const auto plan = detail::plan_search(p);
    std::uint64_t factor = 1;
    for (std::size_t f = 0; f < plan.unconstrained; ++f) factor = detail::checked_mul(factor, q.order());
    if (plan.order.empty()) return factor;

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(q.order()));
    std::vector<std::uint64_t> found(workers, 0);
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](unsigned w) {
        try {
            detail::HomSearch search(plan, q, p.generators.size());
            std::uint64_t local = 0;
            auto flush = [&] {
                if (nodes.fetch_add(local) + local > limits.max_nodes) {
                    aborted = true;
                    throw limit_exceeded("homomorphism search exceeded node limit");
                }
                local = 0;
            };
            auto tick = [&] {
                if (++local == 4096) flush();
                if (aborted) throw limit_exceeded("homomorphism search exceeded node limit");
            };
            auto none = [](const std::vector<int>&) {};
            const std::size_t g0 = plan.order[0];
            for (int e = static_cast<int>(w); e < static_cast<int>(q.order()); e += static_cast<int>(workers)) {
                search.images()[g0] = e;
                tick();
                if (search.consistent(0)) found[w] += search.run(1, none, tick);
            }
            flush();
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::uint64_t total = 0;
    for (auto f : found) total += f;
    return detail::checked_mul(total, factor);
}

// ---- fingerprints -------------------------------------------------------------

/// Abelianization plus hom counts into a battery of finite groups. A hom count
/// that hit the search limit is recorded as absent.
struct Fingerprint {
    int free_rank = 0;
    std::vector<Integer> torsion;
    std::map<std::string, std::optional<std::uint64_t>> hom_counts;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    bool complete() const {
        return std::all_of(hom_counts.begin(), hom_counts.end(), [](const auto& kv) { return kv.second.has_value(); });
    }
};

struct FingerprintOptions {
    int budget = default_tietze_budget;
    HomLimits limits;
};

inline Fingerprint fingerprint(const Presentation& p, const std::vector<FiniteGroupSpec>& battery,
                               const FingerprintOptions& opts = {}) {
    const Presentation simple = tietze_simplify(p, opts.budget);
    const Abelianization ab = abelianization(simple);
    Fingerprint fp{ab.free_rank, ab.torsion, {}};
    for (const auto& q : battery) {
        try {
            fp.hom_counts[q.name()] = count_homs(simple, q, opts.limits);
        } catch (const limit_exceeded&) {
            fp.hom_counts[q.name()] = std::nullopt;
        }
    }
    return fp;
}

inline nlohmann::json to_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

/// {"free_rank": n, "homs": {...}, "torsion": [...]}; an aborted count is null.
inline nlohmann::json to_json(const Fingerprint& fp) {
    nlohmann::json homs = nlohmann::json::object();
    for (const auto& [name, count] : fp.hom_counts) homs[name] = count ? nlohmann::json(*count) : nlohmann::json();
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : fp.torsion) torsion.push_back(to_json(t));
    return {{"free_rank", fp.free_rank}, {"torsion", torsion}, {"homs", homs}};
}

} // namespace platgroup
