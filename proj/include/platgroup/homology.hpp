#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "platgroup/laurent.hpp"
#include "platgroup/plat.hpp"

namespace platgroup {

/// Images of generators in the units ±t^j of ℤ[t, t⁻¹].
using UnitMap = std::map<Generator, LaurentPoly>;

namespace detail {

inline const LaurentPoly& unit_of(const UnitMap& phi, const Generator& g) {
    auto it = phi.find(g);
    if (it == phi.end()) throw domain_error("no value assigned to generator " + to_string(g));
    if (!it->second.is_unit()) throw domain_error("value " + it->second.to_string() + " of " + to_string(g) + " is not a unit");
    return it->second;
}

} // namespace detail

/// Fox derivative ∂w/∂x, specialized through phi.
inline LaurentPoly fox_derivative(const GroupWord& w, const Generator& x, const UnitMap& phi) {
    LaurentPoly acc, prefix(1);
    for (const Letter& l : w) {
        const LaurentPoly& u = detail::unit_of(phi, l.gen);
        if (l.exp > 0) {
            if (l.gen == x) acc += prefix;
            prefix *= u;
        } else {
            prefix *= u.unit_inverse();
            if (l.gen == x) acc -= prefix;
        }
    }
    return acc;
}

/// Rows are relators, columns generators.
inline LaurentMatrix fox_jacobian(const Presentation& p, const UnitMap& phi) {
    LaurentMatrix J(p.relators.size(), p.generators.size());
    for (std::size_t r = 0; r < p.relators.size(); ++r)
        for (std::size_t c = 0; c < p.generators.size(); ++c) J(r, c) = fox_derivative(p.relators[r], p.generators[c], phi);
    return J;
}

/// gcd of all (n-1)×(n-1) minors of an r×n matrix, normalized up to units.
inline LaurentPoly first_elementary_ideal_gcd(const LaurentMatrix& J) {
    const std::size_t n = J.cols();
    if (n == 0) return LaurentPoly(1);
    const std::size_t size = n - 1;
    if (J.rows() < size) return {};
    LaurentPoly g;
    std::vector<bool> pick(J.rows());
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
        std::vector<std::size_t> rows;
        for (std::size_t r = 0; r < pick.size(); ++r)
            if (pick[r]) rows.push_back(r);
        for (std::size_t drop = 0; drop < n; ++drop) {
            std::vector<std::size_t> cols;
            for (std::size_t c = 0; c < n; ++c)
                if (c != drop) cols.push_back(c);
            g = gcd(g, determinant(J.submatrix(rows, cols)));
            if (g == LaurentPoly(1)) return g;
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return g;
}

/// Alexander polynomial of a knot in plat position, from the k = 1 group with
/// every meridian sent to t^{±1} according to the strand orientation.
inline LaurentPoly alexander_invariant(const PlatDiagram& d) {
    const PlatInfo info = validate(d);
    if (d.k != 1) throw domain_error("the Alexander invariant is defined here for k = 1 only");
    if (info.components != 1)
        throw domain_error("the diagram has " + std::to_string(info.components) +
                           " components; only the single-variable knot case is supported");
    const Presentation p = plat_group(d);
    UnitMap phi;
    for (int q = 1; q <= d.m; ++q) phi[Generator::g(1, q)] = LaurentPoly::t(info.orientation[static_cast<std::size_t>(q - 1)]);
    return first_elementary_ideal_gcd(fox_jacobian(p, phi)).normalized();
}

/// Burau matrix of b: row q holds the Fox derivatives of A(b)(g_q), all g ↦ t.
/// Multiplicative: burau(b₁b₂) = burau(b₁)·burau(b₂).
inline LaurentMatrix burau(const BraidWord& b) {
    const SurfaceBraidParams params{1, b.strands};
    const auto n = static_cast<std::size_t>(b.strands);
    UnitMap phi;
    for (int q = 1; q <= b.strands; ++q) phi[Generator::g(1, q)] = LaurentPoly::t();
    LaurentMatrix M(n, n);
    for (int q = 1; q <= b.strands; ++q) {
        const GroupWord img = braid_action(b, GroupWord(Generator::g(1, q)), params);
        for (int c = 1; c <= b.strands; ++c)
            M(static_cast<std::size_t>(q - 1), static_cast<std::size_t>(c - 1)) = fox_derivative(img, Generator::g(1, c), phi);
    }
    return M;
}

/// Row-major JSON array of polynomial strings.
inline nlohmann::json to_json(const LaurentMatrix& M) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(M(r, c).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

/// binom(n + k - 2, k): rank of the Lawrence representation on n punctures, k points.
inline std::uint64_t lawrence_dim(int n, int k) {
    if (n < 1 || k < 1) throw domain_error("lawrence_dim needs n >= 1 and k >= 1");
    const std::uint64_t top = static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(k) - 2;
    const std::uint64_t r = static_cast<std::uint64_t>(k);
    if (r > top) return 0;
    Integer acc = 1;
    for (std::uint64_t j = 1; j <= r; ++j) acc = acc * (top - r + j) / j;
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw limit_exceeded("lawrence_dim overflows 64 bits");
    return static_cast<std::uint64_t>(acc);
}

/// The map to B_k forgetting the punctures: erase every g letter.
inline BraidWord project_to_braid(const GroupWord& w, int k) {
    BraidWord out{k, {}};
    for (const Letter& l : w) {
        if (!l.gen.is_sigma()) continue;
        if (l.gen.i >= k) throw domain_error("generator " + to_string(l.gen) + " outside B_" + std::to_string(k));
        out.letters.push_back({l.gen.i, l.exp});
    }
    return out;
}

} // namespace platgroup
