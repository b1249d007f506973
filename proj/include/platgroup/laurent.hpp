#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "platgroup/error.hpp"
#include "platgroup/smith.hpp"

namespace platgroup {

/// Element of ℤ[t, t⁻¹]: coefficients of t^low, t^(low+1), … with no zero at either end.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}
    LaurentPoly(Integer c) {
        if (c != 0) coeffs_.push_back(std::move(c));
    }

    static LaurentPoly monomial(Integer c, int exp) {
        LaurentPoly p(std::move(c));
        p.low_ = exp;
        return p;
    }
    static LaurentPoly t(int exp = 1) { return monomial(1, exp); }
    static LaurentPoly from_coeffs(int low, std::vector<Integer> coeffs) {
        LaurentPoly p;
        p.low_ = low;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    Integer coeff(int exp) const {
        if (is_zero() || exp < low_ || exp > high()) return 0;
        return coeffs_[static_cast<std::size_t>(exp - low_)];
    }
    const Integer& leading() const { return coeffs_.back(); }

    /// ±t^j
    bool is_unit() const { return coeffs_.size() == 1 && abs(coeffs_[0]) == 1; }
    LaurentPoly unit_inverse() const {
        if (!is_unit()) throw domain_error(to_string() + " is not a unit of Z[t, t^-1]");
        return monomial(coeffs_[0], -low_);
    }

    Integer at_one() const {
        Integer s = 0;
        for (const auto& c : coeffs_) s += c;
        return s;
    }

    LaurentPoly shifted(int by) const {
        LaurentPoly p = *this;
        p.low_ += by;
        return p;
    }

    /// The associate with lowest exponent 0 and positive leading coefficient.
    LaurentPoly normalized() const {
        if (is_zero()) return {};
        LaurentPoly p = *this;
        p.low_ = 0;
        if (p.leading() < 0) p = -p;
        return p;
    }

    Integer content() const {
        Integer g = 0;
        for (const auto& c : coeffs_) g = gcd(g, abs(c));
        return g;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const int lo = std::min(a.low_, b.low_), hi = std::max(a.high(), b.high());
        std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1));
        for (int e = a.low_; e <= a.high(); ++e) c[static_cast<std::size_t>(e - lo)] += a.coeffs_[static_cast<std::size_t>(e - a.low_)];
        for (int e = b.low_; e <= b.high(); ++e) c[static_cast<std::size_t>(e - lo)] += b.coeffs_[static_cast<std::size_t>(e - b.low_)];
        return from_coeffs(lo, std::move(c));
    }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly p = a;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coeffs(a.low_ + b.low_, std::move(c));
    }
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
    }

    /// Ascending powers: `1 - t + t^2`, `-t^-1 + 3t`; zero renders as `0`.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (int e = low_; e <= high(); ++e) {
            Integer c = coeffs_[static_cast<std::size_t>(e - low_)];
            if (c == 0) continue;
            const bool neg = c < 0;
            if (neg) c = -c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string mono;
            if (e == 1)
                mono = "t";
            else if (e != 0)
                mono = "t^" + std::to_string(e);
            if (mono.empty())
                out += c.str();
            else if (c == 1)
                out += mono;
            else
                out += c.str() + mono;
        }
        return out;
    }

private:
    void trim() {
        std::size_t lead = 0;
        while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
        if (lead == coeffs_.size()) {
            coeffs_.clear();
            low_ = 0;
            return;
        }
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        low_ += static_cast<int>(lead);
        while (coeffs_.back() == 0) coeffs_.pop_back();
    }

    int low_ = 0;
    std::vector<Integer> coeffs_;
};

inline std::string to_string(const LaurentPoly& p) { return p.to_string(); }

/// a / b when b divides a in ℤ[t, t⁻¹]; throws domain_error otherwise.
inline LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    const auto& bc = b.coeffs();
    std::vector<Integer> rem = a.coeffs();
    if (rem.size() < bc.size()) throw domain_error("inexact polynomial division");
    std::vector<Integer> q(rem.size() - bc.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        const Integer& top = rem[i + bc.size() - 1];
        if (top % bc.back() != 0) throw domain_error("inexact polynomial division");
        q[i] = top / bc.back();
        if (q[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[i + j] -= q[i] * bc[j];
    }
    for (const auto& r : rem)
        if (r != 0) throw domain_error("inexact polynomial division");
    return LaurentPoly::from_coeffs(a.low() - b.low(), std::move(q));
}

namespace detail {

inline LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    const Integer c = p.content();
    std::vector<Integer> out = p.coeffs();
    for (auto& x : out) x /= c;
    return LaurentPoly::from_coeffs(0, std::move(out));
}

// lc(b)^k · a reduced modulo b, for polynomials with low() == 0.
inline LaurentPoly pseudo_remainder(LaurentPoly a, const LaurentPoly& b) {
    while (!a.is_zero() && a.high() >= b.high()) {
        const int shift = a.high() - b.high();
        a = a * LaurentPoly(b.leading()) - b * LaurentPoly::monomial(a.leading(), shift);
    }
    return a;
}

} // namespace detail

/// Greatest common divisor in ℤ[t, t⁻¹], normalized up to units.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    const Integer content = gcd(a.content(), b.content());
    LaurentPoly x = detail::primitive_part(a), y = detail::primitive_part(b);
    if (x.high() < y.high()) std::swap(x, y);
    while (!y.is_zero()) {
        LaurentPoly r = detail::pseudo_remainder(x, y);
        x = std::move(y);
        y = detail::primitive_part(r);
    }
    return (detail::primitive_part(x) * LaurentPoly(content)).normalized();
}

/// Rectangular matrix over ℤ[t, t⁻¹].
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static LaurentMatrix identity(std::size_t n) {
        LaurentMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LaurentPoly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const LaurentPoly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        LaurentMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a(i, l).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, l) * b(l, j);
            }
        return out;
    }

    friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

    /// Entrywise value at t = 1.
    IntMatrix at_one() const {
        IntMatrix m(rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c).at_one();
        return m;
    }

    LaurentMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
        LaurentMatrix m(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*this)(rows[r], cols[c]);
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> data_;
};

/// Fraction-free (Bareiss) elimination; every division is exact.
inline LaurentPoly determinant(LaurentMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return LaurentPoly(1);
    LaurentPoly prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m(r, k).is_zero()) ++r;
            if (r == n) return {};
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(r, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_divide(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            m(i, k) = LaurentPoly();
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

} // namespace platgroup
