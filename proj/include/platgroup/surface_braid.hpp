#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "platgroup/presentation.hpp"

namespace platgroup {

/// k configuration points in a disk with m punctures.
struct SurfaceBraidParams {
    int k = 1;
    int m = 0;

    void check() const {
        if (k < 1) throw input_error("k must be at least 1");
        if (m < 0) throw input_error("m must be non-negative");
    }

    /// σ_1 < … < σ_{k-1} < g_{1,1} < g_{1,2} < … < g_{k,m}.
    std::vector<Generator> alphabet() const {
        std::vector<Generator> out;
        for (int i = 1; i < k; ++i) out.push_back(Generator::sigma(i));
        for (int i = 1; i <= k; ++i)
            for (int p = 1; p <= m; ++p) out.push_back(Generator::g(i, p));
        return out;
    }
};

struct BraidLetter {
    int index = 1; // σ_index, 1 ≤ index ≤ strands-1
    int exp = 1;
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

/// Element of the Artin braid group on `strands` strands, as a word in σ_p^{±1}.
struct BraidWord {
    int strands = 0;
    std::vector<BraidLetter> letters;

    void check() const {
        for (const auto& l : letters)
            if (l.index < 1 || l.index >= strands || (l.exp != 1 && l.exp != -1))
                throw input_error("braid generator " + std::to_string(l.index * l.exp) + " out of range for " +
                                  std::to_string(strands) + " strands");
    }

    BraidWord operator*(const BraidWord& other) const {
        BraidWord out = *this;
        out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
        return out;
    }

    BraidWord inverse() const {
        BraidWord out{strands, {}};
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->index, -it->exp});
        return out;
    }

    /// The same word on more strands (new strands appended on the right).
    BraidWord widened(int new_strands) const { return {new_strands, letters}; }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Space-separated signed integers: `2 -1 2` is σ₂σ₁⁻¹σ₂; empty is the identity.
inline std::string to_string(const BraidWord& b) {
    std::string out;
    for (const auto& l : b.letters) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l.index * l.exp);
    }
    return out;
}

inline BraidWord parse_braid(std::string_view text, int strands) {
    BraidWord b{strands, {}};
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
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
}

// ---- the punctured-disk braid group ---------------------------------------

/// Relator families of the k-string braid group of the m-punctured disk.
enum class RelatorFamily { FarCommute, BraidRelation, Disjoint, Conjugate, SelfLink, PointFar };

struct TaggedRelator {
    RelatorFamily family;
    GroupWord word;
};

/// All relators of the standard presentation, tagged by family, in generation order.
inline std::vector<TaggedRelator> punctured_disk_relators(const SurfaceBraidParams& params) {
    params.check();
    const int k = params.k, m = params.m;
    auto s = [](int i) { return GroupWord(Generator::sigma(i)); };
    auto g = [](int i, int p) { return GroupWord(Generator::g(i, p)); };
    std::vector<TaggedRelator> out;
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (j - i > 1)
                out.push_back({RelatorFamily::FarCommute, commutator(s(i), s(j))});
            else
                out.push_back({RelatorFamily::BraidRelation, s(i) * s(j) * s(i) * inverse(s(j) * s(i) * s(j))});
        }
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int p = 1; p <= m; ++p)
                for (int q = p + 1; q <= m; ++q) out.push_back({RelatorFamily::Disjoint, commutator(g(i, p), g(j, q))});
    for (int i = 1; i < k; ++i)
        for (int p = 1; p <= m; ++p)
            out.push_back({RelatorFamily::Conjugate, s(i) * g(i + 1, p) * inverse(s(i)) * inverse(g(i, p))});
    for (int i = 1; i < k; ++i)
        for (int p = 1; p <= m; ++p)
            out.push_back({RelatorFamily::SelfLink, commutator(g(i, p), s(i) * g(i, p) * s(i))});
    for (int j = 1; j < k; ++j)
        for (int i = 1; i <= k; ++i) {
            if (i == j || i == j + 1) continue;
            for (int p = 1; p <= m; ++p) out.push_back({RelatorFamily::PointFar, commutator(g(i, p), s(j))});
        }
    return out;
}

/// Presentation of G₀, the k-string braid group of the m-punctured disk.
inline Presentation punctured_disk_presentation(const SurfaceBraidParams& params) {
    Presentation p;
    p.generators = params.alphabet();
    for (auto& r : punctured_disk_relators(params)) p.relators.push_back(std::move(r.word));
    return p;
}

/// Half twist of punctures p, p+1 acting on G₀. For sign +1:
/// g_{i,p} ↦ g_{i,p} g_{i,p+1} g_{i,p}⁻¹, g_{i,p+1} ↦ g_{i,p}; everything else fixed.
inline Substitution puncture_twist(int p, int sign, const SurfaceBraidParams& params) {
    params.check();
    if (p < 1 || p >= params.m) throw input_error("puncture twist index " + std::to_string(p) + " out of range");
    if (sign != 1 && sign != -1) throw input_error("puncture twist sign must be +1 or -1");
    Substitution s = Substitution::identity(params.alphabet());
    for (int i = 1; i <= params.k; ++i) {
        const GroupWord a(Generator::g(i, p)), b(Generator::g(i, p + 1));
        if (sign > 0) {
            s.set(Generator::g(i, p), a * b * inverse(a));
            s.set(Generator::g(i, p + 1), a);
        } else {
            s.set(Generator::g(i, p), b);
            s.set(Generator::g(i, p + 1), inverse(b) * a * b);
        }
    }
    return s;
}

/// The automorphism A(b) of G₀. Letters act left to right:
/// A(b₁b₂) = A(b₂) ∘ A(b₁), so the leftmost letter is applied to w first.
inline GroupWord braid_action(const BraidWord& b, const GroupWord& w, const SurfaceBraidParams& params) {
    if (b.strands != params.m)
        throw input_error("braid on " + std::to_string(b.strands) + " strands acting on " + std::to_string(params.m) +
                          " punctures");
    b.check();
    std::vector<Substitution> twists_pos, twists_neg;
    for (int p = 1; p < params.m; ++p) {
        twists_pos.push_back(puncture_twist(p, 1, params));
        twists_neg.push_back(puncture_twist(p, -1, params));
    }
    GroupWord out = free_reduce(w);
    for (const auto& l : b.letters) {
        const auto& t = l.exp > 0 ? twists_pos : twists_neg;
        out = apply_substitution(t[static_cast<std::size_t>(l.index - 1)], out);
    }
    return out;
}

/// A(b) as a substitution on the whole alphabet.
inline Substitution braid_substitution(const BraidWord& b, const SurfaceBraidParams& params) {
    Substitution s;
    for (const auto& g : params.alphabet()) s.set(g, braid_action(b, GroupWord(g), params));
    return s;
}

/// Permutation π (0-based) with A(b)(g_{i,q}) ≡ g_{i,π(q)} in the abelianization.
inline std::vector<int> braid_permutation(const BraidWord& b) {
    b.check();
    std::vector<int> pi(static_cast<std::size_t>(b.strands));
    std::iota(pi.begin(), pi.end(), 0);
    for (const auto& l : b.letters)
        for (int& x : pi) {
            if (x == l.index - 1)
                x = l.index;
            else if (x == l.index)
                x = l.index - 1;
        }
    return pi;
}

} // namespace platgroup
