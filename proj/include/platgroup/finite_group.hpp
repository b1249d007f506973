#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "platgroup/error.hpp"

namespace platgroup {

using Permutation = std::vector<std::uint8_t>; // images of 0..d-1

/// A permutation group given by generators, with its element list and
/// multiplication table precomputed. Elements are indexed; identity is 0.
class FiniteGroupSpec {
public:
    FiniteGroupSpec(std::string name, int degree, std::vector<Permutation> generators)
        : name_(std::move(name)), degree_(degree), generators_(std::move(generators)) {
        for (const auto& g : generators_) check_perm(g);
        Permutation id(static_cast<std::size_t>(degree_));
        for (int x = 0; x < degree_; ++x) id[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(x);
        std::map<Permutation, int> index{{id, 0}};
        elements_.push_back(id);
        for (std::size_t at = 0; at < elements_.size(); ++at)
            for (const auto& g : generators_) {
                Permutation e = compose(elements_[at], g);
                if (index.emplace(e, static_cast<int>(elements_.size())).second) elements_.push_back(std::move(e));
            }
        const std::size_t n = elements_.size();
        table_.resize(n * n);
        inverse_.resize(n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const int c = index.at(compose(elements_[a], elements_[b]));
                table_[a * n + b] = static_cast<std::uint16_t>(c);
                if (c == 0) inverse_[a] = static_cast<std::uint16_t>(b);
            }
    }

    const std::string& name() const { return name_; }
    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Permutation>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)]; }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    static constexpr int identity() { return 0; }

    /// (a·b)(x) = a(b(x)).
    static Permutation compose(const Permutation& a, const Permutation& b) {
        Permutation out(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
        return out;
    }

private:
    void check_perm(const Permutation& p) const {
        if (static_cast<int>(p.size()) != degree_) throw input_error(name_ + ": generator has wrong degree");
        std::vector<bool> seen(p.size());
        for (auto x : p) {
            if (x >= p.size() || seen[x]) throw input_error(name_ + ": generator is not a permutation");
            seen[x] = true;
        }
    }

    std::string name_;
    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inverse_;
};

namespace groups {

inline FiniteGroupSpec S3() { return {"S3", 3, {{1, 0, 2}, {1, 2, 0}}}; }
inline FiniteGroupSpec S4() { return {"S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}}; }
inline FiniteGroupSpec A4() { return {"A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}}; }
// rotation and reflection of a pentagon
inline FiniteGroupSpec D5() { return {"D5", 5, {{1, 2, 3, 4, 0}, {0, 4, 3, 2, 1}}}; }
inline FiniteGroupSpec A5() { return {"A5", 5, {{1, 2, 0, 3, 4}, {1, 2, 3, 4, 0}}}; }

/// Looks up a group by case-insensitive name (s3, s4, a4, d5, a5).
inline FiniteGroupSpec by_name(std::string name) {
    for (auto& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (name == "S3") return S3();
    if (name == "S4") return S4();
    if (name == "A4") return A4();
    if (name == "D5") return D5();
    if (name == "A5") return A5();
    throw input_error("unknown target group '" + name + "'");
}

inline std::vector<FiniteGroupSpec> default_battery(bool with_a5 = false) {
    std::vector<FiniteGroupSpec> out{S3(), S4(), A4(), D5()};
    if (with_a5) out.push_back(A5());
    return out;
}

} // namespace groups

} // namespace platgroup
