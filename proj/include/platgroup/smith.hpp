#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace platgroup {

using Integer = boost::multiprecision::cpp_int;

/// Dense rectangular matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
            for (long long v : r) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                if (a(i, l) == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, l) * b(l, j);
            }
        return out;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// U·M·V = D, U and V unimodular, D diagonal with d₁ | d₂ | … and dᵢ ≥ 0.
struct SmithForm {
    IntMatrix U, D, V;

    std::vector<Integer> diagonal() const {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
        return out;
    }
    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& d : diagonal())
            if (d != 0) ++r;
        return r;
    }
};

inline SmithForm smith_normal_form(const IntMatrix& M) {
    const std::size_t rows = M.rows(), cols = M.cols();
    IntMatrix A = M, U = IntMatrix::identity(rows), V = IntMatrix::identity(cols);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols; ++c) std::swap(A(a, c), A(b, c));
        for (std::size_t c = 0; c < rows; ++c) std::swap(U(a, c), U(b, c));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(A(r, a), A(r, b));
        for (std::size_t r = 0; r < cols; ++r) std::swap(V(r, a), V(r, b));
    };
    // row[dst] -= q·row[src]
    auto add_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t c = 0; c < cols; ++c) A(dst, c) -= q * A(src, c);
        for (std::size_t c = 0; c < rows; ++c) U(dst, c) -= q * U(src, c);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t r = 0; r < rows; ++r) A(r, dst) -= q * A(r, src);
        for (std::size_t r = 0; r < cols; ++r) V(r, dst) -= q * V(r, src);
    };

    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pr = t, pc = t;
        Integer best;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c)
                if (A(r, c) != 0 && (!found || abs(A(r, c)) < best)) {
                    best = abs(A(r, c));
                    pr = r;
                    pc = c;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pr);
        swap_cols(t, pc);

        for (;;) {
            bool dirty = false;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (A(r, t) == 0) continue;
                add_row(r, t, A(r, t) / A(t, t));
                if (A(r, t) != 0) {
                    swap_rows(t, r);
                    dirty = true;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (A(t, c) == 0) continue;
                add_col(c, t, A(t, c) / A(t, t));
                if (A(t, c) != 0) {
                    swap_cols(t, c);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the whole trailing block; otherwise fold the offending row in.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (A(r, c) % A(t, t) != 0) {
                        bad = r;
                        break;
                    }
            if (bad == rows) break;
            add_row(t, bad, Integer(-1));
        }
        if (A(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) A(t, c) = -A(t, c);
            for (std::size_t c = 0; c < rows; ++c) U(t, c) = -U(t, c);
        }
    }
    return {std::move(U), std::move(A), std::move(V)};
}

} // namespace platgroup
