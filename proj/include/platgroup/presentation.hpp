#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "platgroup/word.hpp"

namespace platgroup {

/// A finite presentation ⟨generators | relators⟩.
struct Presentation {
    std::vector<Generator> generators;
    std::vector<GroupWord> relators;

    std::size_t total_length() const {
        std::size_t n = 0;
        for (const auto& r : relators) n += r.size();
        return n;
    }

    friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Smallest word among the rotations of a cyclically reduced word and of its inverse.
inline GroupWord canonical_relator(const GroupWord& w) {
    const GroupWord core = cyclic_reduce(free_reduce(w)).core;
    if (core.empty()) return core;
    const std::size_t n = core.size();
    const GroupWord inv = inverse(core);
    const GroupWord* best_src = &core;
    std::size_t best_off = 0;
    auto less_rot = [n](const GroupWord& a, std::size_t oa, const GroupWord& b, std::size_t ob) {
        for (std::size_t t = 0; t < n; ++t) {
            const auto c = a[(oa + t) % n] <=> b[(ob + t) % n];
            if (c != 0) return c < 0;
        }
        return false;
    };
    for (const GroupWord* src : {&core, &inv})
        for (std::size_t off = 0; off < n; ++off)
            if (less_rot(*src, off, *best_src, best_off)) {
                best_src = src;
                best_off = off;
            }
    std::vector<Letter> out;
    out.reserve(n);
    for (std::size_t t = 0; t < n; ++t) out.push_back((*best_src)[(best_off + t) % n]);
    return GroupWord(std::move(out));
}

/// Reduces and cyclically reduces every relator, identifies rotations and
/// inverses, drops trivial relators, and sorts by (length, letters).
/// Generators are sorted and deduplicated.
inline Presentation normalize(const Presentation& p) {
    Presentation out;
    out.generators = p.generators;
    std::sort(out.generators.begin(), out.generators.end());
    out.generators.erase(std::unique(out.generators.begin(), out.generators.end()), out.generators.end());
    for (const auto& r : p.relators) {
        GroupWord c = canonical_relator(r);
        if (!c.empty()) out.relators.push_back(std::move(c));
    }
    std::sort(out.relators.begin(), out.relators.end(), [](const GroupWord& a, const GroupWord& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    out.relators.erase(std::unique(out.relators.begin(), out.relators.end()), out.relators.end());
    return out;
}

// ---- Tietze simplification ------------------------------------------------

inline constexpr int default_tietze_budget = 10'000;

/// Simplified presentation plus, for every input generator, its value as a
/// word in the surviving generators.
struct TietzeResult {
    Presentation presentation;
    Substitution expressions;
    int moves = 0;
};

namespace detail {

// Letters are ±(index+1); index order equals generator order.
using IntWord = std::vector<int>;

inline void push_reduced(IntWord& w, int c) {
    if (!w.empty() && w.back() == -c)
        w.pop_back();
    else
        w.push_back(c);
}

inline IntWord reduce(const IntWord& w) {
    IntWord out;
    out.reserve(w.size());
    for (int c : w) push_reduced(out, c);
    return out;
}

inline IntWord invert(const IntWord& w) {
    IntWord out(w.rbegin(), w.rend());
    for (int& c : out) c = -c;
    return out;
}

inline IntWord cyclic_core(IntWord w) {
    w = reduce(w);
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return IntWord(w.begin() + lo, w.begin() + hi);
}

inline bool letter_less(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a > b; // x before x^-1
}

inline IntWord canonical(const IntWord& w) {
    IntWord core = cyclic_core(w);
    const std::size_t n = core.size();
    if (n == 0) return core;
    const IntWord inv = invert(core);
    const IntWord* best = &core;
    std::size_t best_off = 0;
    for (const IntWord* src : std::initializer_list<const IntWord*>{&core, &inv})
        for (std::size_t off = 0; off < n; ++off)
            for (std::size_t t = 0; t < n; ++t) {
                const int a = (*src)[(off + t) % n], b = (*best)[(best_off + t) % n];
                if (a == b) continue;
                if (letter_less(a, b)) {
                    best = src;
                    best_off = off;
                }
                break;
            }
    IntWord out(n);
    for (std::size_t t = 0; t < n; ++t) out[t] = (*best)[(best_off + t) % n];
    return out;
}

inline bool word_less(const IntWord& a, const IntWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t t = 0; t < a.size(); ++t)
        if (a[t] != b[t]) return letter_less(a[t], b[t]);
    return false;
}

inline void canonicalize_all(std::vector<IntWord>& rels) {
    for (auto& r : rels) r = canonical(r);
    rels.erase(std::remove_if(rels.begin(), rels.end(), [](const IntWord& r) { return r.empty(); }), rels.end());
    std::sort(rels.begin(), rels.end(), word_less);
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
}

inline IntWord substitute(const IntWord& w, int gen, const IntWord& value) {
    const IntWord value_inv = invert(value);
    IntWord out;
    out.reserve(w.size());
    for (int c : w) {
        if (std::abs(c) - 1 == gen) {
            for (int x : (c > 0 ? value : value_inv)) push_reduced(out, x);
        } else {
            push_reduced(out, c);
        }
    }
    return out;
}

struct TietzeState {
    std::vector<bool> alive;
    std::vector<IntWord> rels;
    std::vector<IntWord> expr; // value of each original generator

    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& r : rels) n += r.size();
        return n;
    }
    std::size_t gens() const { return static_cast<std::size_t>(std::count(alive.begin(), alive.end(), true)); }
};

// Move (a): eliminate a generator occurring exactly once in some relator.
// Picks the shortest solved expression, ties by generator order.
inline bool eliminate_one(TietzeState& st) {
    const std::size_t ngen = st.alive.size();
    std::size_t best_len = SIZE_MAX;
    int best_gen = -1;
    std::size_t best_rel = 0, best_pos = 0;
    std::vector<int> count(ngen);
    std::vector<std::size_t> where(ngen);
    for (std::size_t ri = 0; ri < st.rels.size(); ++ri) {
        const IntWord& r = st.rels[ri];
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t pos = 0; pos < r.size(); ++pos) {
            const int g = std::abs(r[pos]) - 1;
            if (count[g]++ == 0) where[g] = pos;
        }
        const std::size_t len = r.size() - 1;
        for (std::size_t g = 0; g < ngen; ++g) {
            if (count[g] != 1) continue;
            if (len < best_len || (len == best_len && static_cast<int>(g) < best_gen)) {
                best_len = len;
                best_gen = static_cast<int>(g);
                best_rel = ri;
                best_pos = where[g];
            }
        }
    }
    if (best_gen < 0) return false;

    const IntWord& r = st.rels[best_rel];
    const std::size_t n = r.size();
    IntWord rest;
    for (std::size_t t = 1; t < n; ++t) rest.push_back(r[(best_pos + t) % n]);
    // r ~ x^e rest  =>  x = rest^-1 (e = +1) or rest (e = -1)
    const IntWord value = r[best_pos] > 0 ? invert(rest) : rest;

    st.rels.erase(st.rels.begin() + static_cast<std::ptrdiff_t>(best_rel));
    for (auto& w : st.rels) w = substitute(w, best_gen, value);
    for (auto& w : st.expr) w = substitute(w, best_gen, value);
    st.alive[static_cast<std::size_t>(best_gen)] = false;
    canonicalize_all(st.rels);
    return true;
}

// Move (b): replace a cyclic subword of one relator that is more than half of
// another relator (or its inverse, any rotation) by the complementary word.
inline bool shorten_one(TietzeState& st) {
    struct Best {
        std::size_t gain = 0;
        std::size_t target = 0;
        IntWord word;
    } best;
    for (std::size_t si = 0; si < st.rels.size(); ++si) {
        const IntWord& s = st.rels[si];
        const std::size_t L = s.size();
        const IntWord sinv = invert(s);
        for (std::size_t ri = 0; ri < st.rels.size(); ++ri) {
            if (ri == si) continue;
            const IntWord& r = st.rels[ri];
            const std::size_t R = r.size();
            const std::size_t cap = std::min(L, R);
            if (2 * cap <= L) continue;
            for (const IntWord* sv : {&s, &sinv}) {
                for (std::size_t a = 0; a < R; ++a) {
                    for (std::size_t b = 0; b < L; ++b) {
                        std::size_t len = 0;
                        while (len < cap && r[(a + len) % R] == (*sv)[(b + len) % L]) ++len;
                        if (2 * len <= L) continue;
                        const std::size_t gain = 2 * len - L;
                        if (gain <= best.gain) continue;
                        IntWord w;
                        for (std::size_t t = 0; t < L - len; ++t) w.push_back((*sv)[(b + len + t) % L]);
                        w = invert(w);
                        for (std::size_t t = len; t < R; ++t) w.push_back(r[(a + t) % R]);
                        best = {gain, ri, std::move(w)};
                    }
                }
            }
        }
    }
    if (best.gain == 0) return false;
    st.rels[best.target] = best.word;
    canonicalize_all(st.rels);
    return true;
}

} // namespace detail

/// Tietze simplification that also reports how each input generator is
/// expressed in the surviving ones. Deterministic in (p, budget); the result
/// never has more total relator length than normalize(p).
inline TietzeResult tietze_simplify_tracked(const Presentation& p, int budget = default_tietze_budget) {
    using detail::IntWord;
    const Presentation np = normalize(p);
    const auto& gens = np.generators;
    const std::size_t ngen = gens.size();
    std::map<Generator, int> index;
    for (std::size_t g = 0; g < ngen; ++g) index[gens[g]] = static_cast<int>(g);

    detail::TietzeState st;
    st.alive.assign(ngen, true);
    for (const auto& r : np.relators) {
        IntWord w;
        for (const Letter& l : r) {
            auto it = index.find(l.gen);
            if (it == index.end()) throw domain_error("relator uses generator " + to_string(l.gen) + " outside alphabet");
            w.push_back(l.exp * (it->second + 1));
        }
        st.rels.push_back(std::move(w));
    }
    detail::canonicalize_all(st.rels);
    for (std::size_t g = 0; g < ngen; ++g) st.expr.push_back({static_cast<int>(g) + 1});

    const std::size_t input_total = st.total();
    detail::TietzeState best = st;
    int moves = 0, best_moves = 0;
    while (moves < budget) {
        if (!detail::eliminate_one(st) && !detail::shorten_one(st)) break;
        ++moves;
        const std::size_t total = st.total();
        if (total <= input_total &&
            (st.gens() < best.gens() || (st.gens() == best.gens() && total < best.total()))) {
            best = st;
            best_moves = moves;
        }
    }

    auto to_word = [&gens](const IntWord& w) {
        std::vector<Letter> ls;
        ls.reserve(w.size());
        for (int c : w) ls.push_back({gens[static_cast<std::size_t>(std::abs(c) - 1)], c > 0 ? 1 : -1});
        return GroupWord(std::move(ls));
    };
    TietzeResult out;
    out.moves = best_moves;
    for (std::size_t g = 0; g < ngen; ++g)
        if (best.alive[g]) out.presentation.generators.push_back(gens[g]);
    for (const auto& r : best.rels) out.presentation.relators.push_back(to_word(r));
    out.presentation = normalize(out.presentation);
    for (std::size_t g = 0; g < ngen; ++g) out.expressions.set(gens[g], to_word(best.expr[g]));
    return out;
}

inline Presentation tietze_simplify(const Presentation& p, int budget = default_tietze_budget) {
    return tietze_simplify_tracked(p, budget).presentation;
}

// ---- text form ------------------------------------------------------------

/// `gens: <tokens>` followed by one relator per line.
inline std::string to_text(const Presentation& p) {
    std::string out = "gens:";
    for (const auto& g : p.generators) out += " " + to_string(g);
    out += '\n';
    for (const auto& r : p.relators) out += to_string(r) + '\n';
    return out;
}

inline Presentation parse_presentation(std::string_view text) {
    std::istringstream in{std::string(text)};
    Presentation p;
    std::string line;
    bool have_gens = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!have_gens) {
            const auto pos = line.find("gens:");
            if (pos == std::string::npos) throw input_error("line " + std::to_string(lineno) + ": expected 'gens:'");
            std::istringstream toks(line.substr(pos + 5));
            std::string tok;
            while (toks >> tok) p.generators.push_back(parse_generator(tok));
            have_gens = true;
            continue;
        }
        GroupWord w;
        try {
            w = parse_word(line);
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        for (const Letter& l : w)
            if (std::find(p.generators.begin(), p.generators.end(), l.gen) == p.generators.end())
                throw input_error("line " + std::to_string(lineno) + ": generator " + to_string(l.gen) + " not declared");
        p.relators.push_back(std::move(w));
    }
    if (!have_gens) throw input_error("missing 'gens:' line");
    return p;
}

} // namespace platgroup
