#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "platgroup/error.hpp"

namespace platgroup {

/// Generator of a surface braid group: a point swap `s<i>`, a puncture loop
/// `g<i>_<p>` (point i around puncture p), or an abstract generator `x<n>`
/// used for hand-written presentations.
struct Generator {
    enum class Kind : std::uint8_t { Sigma = 0, G = 1, Free = 2 };

    Kind kind = Kind::Free;
    int i = 0;
    int p = 0;

    static constexpr Generator sigma(int i) { return {Kind::Sigma, i, 0}; }
    static constexpr Generator g(int i, int p) { return {Kind::G, i, p}; }
    static constexpr Generator free(int n) { return {Kind::Free, n, 0}; }

    constexpr bool is_sigma() const { return kind == Kind::Sigma; }
    constexpr bool is_g() const { return kind == Kind::G; }

    // Sigma < G < Free; G ordered row-major in (i, p).
    friend constexpr auto operator<=>(const Generator&, const Generator&) = default;
    friend constexpr bool operator==(const Generator&, const Generator&) = default;
};

struct Letter {
    Generator gen;
    int exp = 1; // +1 or -1

    constexpr Letter inverse() const { return {gen, -exp}; }
    constexpr bool cancels(const Letter& other) const { return gen == other.gen && exp == -other.exp; }

    friend constexpr bool operator==(const Letter&, const Letter&) = default;
    // Generator order first, then x before x^-1.
    friend constexpr std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.gen <=> b.gen; c != 0) return c;
        return (a.exp < 0) <=> (b.exp < 0);
    }
};

/// A word in typed generators. Not reduced unless produced by free_reduce
/// (every function below that returns a word returns it reduced).
class GroupWord {
public:
    GroupWord() = default;
    GroupWord(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit GroupWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    explicit GroupWord(Generator g, int exp = 1) : letters_{Letter{g, exp}} {}

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const Letter& operator[](std::size_t n) const { return letters_[n]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter l) { letters_.push_back(l); }

    friend bool operator==(const GroupWord&, const GroupWord&) = default;
    friend auto operator<=>(const GroupWord& a, const GroupWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

inline GroupWord free_reduce(const GroupWord& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back().cancels(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return GroupWord(std::move(out));
}

inline GroupWord inverse(const GroupWord& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        out.push_back(it->inverse());
    return GroupWord(std::move(out));
}

/// Reduced product.
inline GroupWord operator*(const GroupWord& a, const GroupWord& b) {
    std::vector<Letter> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(GroupWord(std::move(out)));
}

struct CyclicReduction {
    GroupWord core;
    GroupWord conjugator;
};

/// For reduced w, returns (core, c) with w = c core c^-1 and core cyclically reduced.
inline CyclicReduction cyclic_reduce(const GroupWord& w) {
    const auto& ls = w.letters();
    std::size_t lo = 0, hi = ls.size();
    while (hi - lo >= 2 && ls[lo].cancels(ls[hi - 1])) {
        ++lo;
        --hi;
    }
    return {GroupWord(std::vector<Letter>(ls.begin() + lo, ls.begin() + hi)),
            GroupWord(std::vector<Letter>(ls.begin(), ls.begin() + lo))};
}

inline GroupWord power(const GroupWord& w, int n) {
    GroupWord base = n < 0 ? inverse(w) : w;
    GroupWord out;
    for (int r = 0; r < (n < 0 ? -n : n); ++r) out = out * base;
    return out;
}

inline GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return a * b * inverse(a) * inverse(b);
}

// ---- text rendering -------------------------------------------------------

inline std::string to_string(const Generator& g) {
    switch (g.kind) {
    case Generator::Kind::Sigma: return "s" + std::to_string(g.i);
    case Generator::Kind::G: return "g" + std::to_string(g.i) + "_" + std::to_string(g.p);
    case Generator::Kind::Free: break;
    }
    return "x" + std::to_string(g.i);
}

inline std::string to_string(const Letter& l) {
    return l.exp < 0 ? to_string(l.gen) + "^-1" : to_string(l.gen);
}

/// Tokens joined by single spaces; the empty word renders as `1`.
inline std::string to_string(const GroupWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        out += to_string(l);
    }
    return out;
}

namespace detail {

inline int parse_positive(std::string_view s, std::string_view token) {
    if (s.empty() || s.size() > 9) throw input_error("bad generator token '" + std::string(token) + "'");
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw input_error("bad generator token '" + std::string(token) + "'");
        v = v * 10 + (c - '0');
    }
    if (v < 1) throw input_error("generator index must be positive in '" + std::string(token) + "'");
    return v;
}

} // namespace detail

inline Generator parse_generator(std::string_view token) {
    if (token.size() < 2) throw input_error("bad generator token '" + std::string(token) + "'");
    const std::string_view body = token.substr(1);
    switch (token.front()) {
    case 's': return Generator::sigma(detail::parse_positive(body, token));
    case 'x': return Generator::free(detail::parse_positive(body, token));
    case 'g': {
        const auto us = body.find('_');
        if (us == std::string_view::npos) throw input_error("bad generator token '" + std::string(token) + "'");
        return Generator::g(detail::parse_positive(body.substr(0, us), token),
                            detail::parse_positive(body.substr(us + 1), token));
    }
    default: break;
    }
    throw input_error("bad generator token '" + std::string(token) + "'");
}

inline Letter parse_letter(std::string_view token) {
    constexpr std::string_view inv = "^-1";
    if (token.size() > inv.size() && token.substr(token.size() - inv.size()) == inv)
        return {parse_generator(token.substr(0, token.size() - inv.size())), -1};
    return {parse_generator(token), 1};
}

/// Parses the canonical rendering (`1` or empty for the identity). The result is not reduced.
inline GroupWord parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<Letter> out;
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        out.push_back(parse_letter(tok));
    }
    return GroupWord(std::move(out));
}

// ---- substitutions --------------------------------------------------------

/// A homomorphism of free groups given on generators.
class Substitution {
public:
    Substitution() = default;

    void set(Generator g, GroupWord image) { images_[g] = free_reduce(image); }
    bool defined_on(const Generator& g) const { return images_.contains(g); }
    const GroupWord& image(const Generator& g) const {
        auto it = images_.find(g);
        if (it == images_.end()) throw domain_error("generator " + to_string(g) + " outside substitution domain");
        return it->second;
    }
    const std::map<Generator, GroupWord>& images() const { return images_; }

    static Substitution identity(const std::vector<Generator>& alphabet) {
        Substitution s;
        for (const auto& g : alphabet) s.set(g, GroupWord(g));
        return s;
    }

private:
    std::map<Generator, GroupWord> images_;
};

inline GroupWord apply_substitution(const Substitution& s, const GroupWord& w) {
    std::vector<Letter> out;
    auto push = [&out](const Letter& l) {
        if (!out.empty() && out.back().cancels(l))
            out.pop_back();
        else
            out.push_back(l);
    };
    for (const Letter& l : w) {
        const GroupWord& img = s.image(l.gen);
        if (l.exp > 0) {
            for (const Letter& x : img) push(x);
        } else {
            for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) push(it->inverse());
        }
    }
    return GroupWord(std::move(out));
}

/// (outer ∘ inner)(x) = outer(inner(x)), on the domain of inner.
inline Substitution compose(const Substitution& outer, const Substitution& inner) {
    Substitution out;
    for (const auto& [g, w] : inner.images()) out.set(g, apply_substitution(outer, w));
    return out;
}

} // namespace platgroup
