#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "platgroup/surface_braid.hpp"

namespace platgroup {

/// A link in plat position: m punctures on the Heegaard plane, standard caps
/// on (2j-1, 2j) above through the braid alpha, standard cups below through beta.
struct PlatDiagram {
    int m = 2;
    int k = 1;
    BraidWord alpha{2, {}};
    BraidWord beta{2, {}};

    SurfaceBraidParams params() const { return {k, m}; }
    friend bool operator==(const PlatDiagram&, const PlatDiagram&) = default;
};

enum class Side { Upper, Lower };

inline const char* to_string(Side s) { return s == Side::Upper ? "upper" : "lower"; }

struct PlatInfo {
    int components = 0;
    std::vector<int> orientation; // ±1 per puncture, alternating along each component
};

namespace detail {

// Punctures joined by the arc j on one side, 0-based.
inline std::vector<std::pair<int, int>> arc_endpoints(const BraidWord& b) {
    const auto pi = braid_permutation(b);
    std::vector<std::pair<int, int>> out;
    for (int j = 0; 2 * j + 1 < b.strands; ++j) out.emplace_back(pi[static_cast<std::size_t>(2 * j)], pi[static_cast<std::size_t>(2 * j + 1)]);
    return out;
}

} // namespace detail

/// Checks the diagram and traces its components. Throws input_error when malformed.
inline PlatInfo validate(const PlatDiagram& d) {
    if (d.m < 2) throw input_error("m must be at least 2");
    if (d.m % 2 != 0) throw input_error("m must be even");
    if (d.k < 1) throw input_error("k must be at least 1");
    if (d.alpha.strands != d.m) throw input_error("alpha must act on m strands");
    if (d.beta.strands != d.m) throw input_error("beta must act on m strands");
    try {
        d.alpha.check();
    } catch (const input_error& e) {
        throw input_error(std::string("alpha: ") + e.what());
    }
    try {
        d.beta.check();
    } catch (const input_error& e) {
        throw input_error(std::string("beta: ") + e.what());
    }

    const auto m = static_cast<std::size_t>(d.m);
    std::vector<int> upper(m), lower(m);
    for (auto [a, b] : detail::arc_endpoints(d.alpha)) {
        upper[static_cast<std::size_t>(a)] = b;
        upper[static_cast<std::size_t>(b)] = a;
    }
    for (auto [a, b] : detail::arc_endpoints(d.beta)) {
        lower[static_cast<std::size_t>(a)] = b;
        lower[static_cast<std::size_t>(b)] = a;
    }
    PlatInfo info;
    info.orientation.assign(m, 0);
    for (std::size_t start = 0; start < m; ++start) {
        if (info.orientation[start] != 0) continue;
        ++info.components;
        // Walk cap, cup, cap, ...; the strand crosses the plane in alternating directions.
        auto at = static_cast<int>(start);
        int sign = 1;
        bool via_upper = true;
        while (info.orientation[static_cast<std::size_t>(at)] == 0) {
            info.orientation[static_cast<std::size_t>(at)] = sign;
            at = via_upper ? upper[static_cast<std::size_t>(at)] : lower[static_cast<std::size_t>(at)];
            via_upper = !via_upper;
            sign = -sign;
        }
    }
    return info;
}

/// The relators killing the cap (upper) or cup (lower) disks: A(braid)(g_{i,2j-1} g_{i,2j}).
inline std::vector<GroupWord> cap_relators(const PlatDiagram& d, Side side) {
    validate(d);
    const BraidWord& b = side == Side::Upper ? d.alpha : d.beta;
    const auto params = d.params();
    std::vector<GroupWord> out;
    for (int i = 1; i <= d.k; ++i)
        for (int j = 1; 2 * j <= d.m; ++j) {
            const GroupWord disk = GroupWord(Generator::g(i, 2 * j - 1)) * GroupWord(Generator::g(i, 2 * j));
            out.push_back(braid_action(b, disk, params));
        }
    return out;
}

/// The group of horizontal k-point configurations in the link complement:
/// G₀ modulo the upper and lower disk relators, normalized.
inline Presentation plat_group(const PlatDiagram& d) {
    Presentation p = punctured_disk_presentation(d.params());
    for (auto side : {Side::Upper, Side::Lower})
        for (auto& r : cap_relators(d, side)) p.relators.push_back(std::move(r));
    return normalize(p);
}

/// Elementary stabilization at the right end: two new punctures, a new arc on
/// `side` pairing them, and σ_m appended to that side's braid.
inline PlatDiagram stabilize(const PlatDiagram& d, Side side) {
    validate(d);
    PlatDiagram out = d;
    out.m = d.m + 2;
    out.alpha = d.alpha.widened(out.m);
    out.beta = d.beta.widened(out.m);
    BraidWord& target = side == Side::Upper ? out.alpha : out.beta;
    target.letters.push_back({d.m, 1});
    return out;
}

/// Moves that preserve the Heegaard isotopy class.
struct HeegaardMove {
    enum class Kind { CapTwist, CupTwist, Reparametrize };
    Kind kind = Kind::Reparametrize;
    int pair = 1; // arc index j for twists
    int sign = 1;
    BraidWord gamma; // for Reparametrize

    static HeegaardMove cap_twist(int j, int sign) { return {Kind::CapTwist, j, sign, {}}; }
    static HeegaardMove cup_twist(int j, int sign) { return {Kind::CupTwist, j, sign, {}}; }
    static HeegaardMove reparametrize(BraidWord gamma) { return {Kind::Reparametrize, 1, 1, std::move(gamma)}; }
};

inline std::string to_string(const HeegaardMove& mv) {
    switch (mv.kind) {
    case HeegaardMove::Kind::CapTwist: return "cap-twist j=" + std::to_string(mv.pair) + " sign=" + std::to_string(mv.sign);
    case HeegaardMove::Kind::CupTwist: return "cup-twist j=" + std::to_string(mv.pair) + " sign=" + std::to_string(mv.sign);
    case HeegaardMove::Kind::Reparametrize: break;
    }
    return "reparametrize gamma=[" + to_string(mv.gamma) + "]";
}

/// (a) alpha ↦ σ_{2j-1}^{±1}·alpha, (b) beta ↦ σ_{2j-1}^{±1}·beta,
/// (c) (alpha, beta) ↦ (alpha·γ, beta·γ).
inline PlatDiagram heegaard_move(const PlatDiagram& d, const HeegaardMove& mv) {
    validate(d);
    PlatDiagram out = d;
    switch (mv.kind) {
    case HeegaardMove::Kind::CapTwist:
    case HeegaardMove::Kind::CupTwist: {
        if (mv.pair < 1 || 2 * mv.pair > d.m) throw input_error("arc index " + std::to_string(mv.pair) + " out of range");
        if (mv.sign != 1 && mv.sign != -1) throw input_error("twist sign must be +1 or -1");
        BraidWord& b = mv.kind == HeegaardMove::Kind::CapTwist ? out.alpha : out.beta;
        b.letters.insert(b.letters.begin(), BraidLetter{2 * mv.pair - 1, mv.sign});
        break;
    }
    case HeegaardMove::Kind::Reparametrize:
        if (mv.gamma.strands != d.m) throw input_error("gamma must act on m strands");
        mv.gamma.check();
        out.alpha = d.alpha * mv.gamma;
        out.beta = d.beta * mv.gamma;
        break;
    }
    return out;
}

// ---- the three local models ------------------------------------------------

/// Upper-half models around a stabilization: U1 has one cap on (n-1, n);
/// U2 adds a cup (n, n+1); U3 adds a further cap (n+1, n+2).
inline Presentation fixture_U(int variant, int n, int k) {
    if (n < 2) throw input_error("fixture parameter n must be at least 2");
    if (variant < 1 || variant > 3) throw input_error("fixture variant must be 1, 2 or 3");
    const int m = n + variant - 1;
    Presentation p = punctured_disk_presentation({k, m});
    for (int i = 1; i <= k; ++i)
        for (int q = n - 1; q + 1 <= m; ++q)
            p.relators.push_back(GroupWord(Generator::g(i, q)) * GroupWord(Generator::g(i, q + 1)));
    return normalize(p);
}

/// g_{i,top} ↦ g_{i,top-2}, all else fixed: the map G(U_{v+1}) → G(U_v) with top = n + v.
inline Substitution fixture_collapse(int n, int k, int from_variant) {
    const int m = n + from_variant - 1;
    Substitution s = Substitution::identity(SurfaceBraidParams{k, m}.alphabet());
    for (int i = 1; i <= k; ++i) s.set(Generator::g(i, m), GroupWord(Generator::g(i, m - 2)));
    return s;
}

// ---- plat file format -------------------------------------------------------

inline std::string to_plat_text(const PlatDiagram& d) {
    std::ostringstream out;
    out << "m = " << d.m << "\n"
        << "k = " << d.k << "\n"
        << "alpha = " << to_string(d.alpha) << "\n"
        << "beta = " << to_string(d.beta) << "\n";
    return out.str();
}

/// `key = value` lines (m, k, alpha, beta); `#` starts a comment. Missing k
/// defaults to 1 and missing braids to the identity.
inline PlatDiagram parse_plat(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    std::optional<int> m, k;
    std::optional<std::pair<int, std::string>> alpha, beta;
    auto fail = [&lineno](const std::string& msg) { throw input_error("line " + std::to_string(lineno) + ": " + msg); };
    auto trim = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    auto parse_int = [&](const std::string& v) {
        std::size_t used = 0;
        int out = 0;
        try {
            out = std::stoi(v, &used);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + v + "'");
        }
        if (used != v.size()) fail("expected an integer, got '" + v + "'");
        return out;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        auto dup = [&](bool seen) {
            if (seen) fail("duplicate key '" + key + "'");
        };
        if (key == "m") {
            dup(m.has_value());
            m = parse_int(value);
        } else if (key == "k") {
            dup(k.has_value());
            k = parse_int(value);
        } else if (key == "alpha") {
            dup(alpha.has_value());
            alpha.emplace(lineno, value);
        } else if (key == "beta") {
            dup(beta.has_value());
            beta.emplace(lineno, value);
        } else {
            fail("unknown key '" + key + "'");
        }
    }
    if (!m) throw input_error("missing key 'm'");
    PlatDiagram d;
    d.m = *m;
    d.k = k.value_or(1);
    auto braid = [&](const std::optional<std::pair<int, std::string>>& src, const char* name) {
        if (!src) return BraidWord{d.m, {}};
        try {
            BraidWord b{d.m, {}};
            std::istringstream toks(src->second);
            std::string tok;
            while (toks >> tok) {
                std::size_t used = 0;
                int v = 0;
                try {
                    v = std::stoi(tok, &used);
                } catch (const std::exception&) {
                    throw input_error("bad braid token '" + tok + "'");
                }
                if (used != tok.size() || v == 0) throw input_error("bad braid token '" + tok + "'");
                b.letters.push_back({v < 0 ? -v : v, v < 0 ? -1 : 1});
            }
            b.check();
            return b;
        } catch (const input_error& e) {
            throw input_error("line " + std::to_string(src->first) + ": " + name + ": " + e.what());
        }
    };
    d.alpha = braid(alpha, "alpha");
    d.beta = braid(beta, "beta");
    return d;
}

inline PlatDiagram read_plat_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_plat(buf.str());
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

} // namespace platgroup
