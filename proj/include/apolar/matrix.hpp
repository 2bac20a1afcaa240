// Exact dense matrices with reduced row echelon form, rank, kernel and
// linear solves.  Over the rationals the forward pass is fraction-free
// (integer rows, cross-multiplication updates, content normalization);
// over F_p it is plain Gauss-Jordan.  RREF output is unique for a given
// row space, so every basis the engine stores is canonical.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "apolar/fields.hpp"

namespace apolar {

namespace detail {

// scale a rational row to a primitive integer vector (sign: first nonzero > 0)
inline void normalize_row_primitive(std::vector<Rational>& row) {
    Int l = 1;
    for (const Rational& x : row)
        if (!x.is_zero()) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    Int g = 0;
    for (Rational& x : row) {
        if (l != 1) x *= Rational(l);
        if (!x.is_zero()) g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(x));
    }
    if (g > 1) {
        for (Rational& x : row)
            if (!x.is_zero()) x /= Rational(g);
    }
    for (const Rational& x : row) {
        if (x.is_zero()) continue;
        if (x < 0) {
            for (Rational& y : row) y = -y;
        }
        break;
    }
}

template <class K>
void eliminate_rows(std::vector<std::vector<K>>& rows, std::size_t pivot_row, std::size_t target_row, int col) {
    if constexpr (field_traits<K>::is_prime_field) {
        K factor = rows[target_row][static_cast<std::size_t>(col)];
        if (is_zero(factor)) return;
        auto& t = rows[target_row];
        const auto& p = rows[pivot_row];
        for (std::size_t j = 0; j < t.size(); ++j) t[j] -= factor * p[j];
    } else {
        K b = rows[target_row][static_cast<std::size_t>(col)];
        if (is_zero(b)) return;
        K a = rows[pivot_row][static_cast<std::size_t>(col)];
        auto& t = rows[target_row];
        const auto& p = rows[pivot_row];
        for (std::size_t j = 0; j < t.size(); ++j) t[j] = a * t[j] - b * p[j];
        normalize_row_primitive(t);
    }
}

}  // namespace detail

template <class K>
class ExactMatrix {
  public:
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, K(0)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimensions");
    }

    static ExactMatrix from_rows(const std::vector<std::vector<K>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
        ExactMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c)
                throw std::invalid_argument("ragged row list");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    K& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const K& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    // reduced row echelon form (dropping zero rows); pivot columns ascending
    std::vector<std::vector<K>> rref(std::vector<int>* pivot_cols = nullptr) const {
        std::vector<std::vector<K>> rows;
        rows.reserve(static_cast<std::size_t>(rows_));
        for (int i = 0; i < rows_; ++i) {
            std::vector<K> row(a_.begin() + static_cast<std::size_t>(i) * cols_,
                               a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
            if constexpr (!field_traits<K>::is_prime_field) detail::normalize_row_primitive(row);
            rows.push_back(std::move(row));
        }
        std::vector<int> pivots;
        std::size_t next = 0;
        for (int c = 0; c < cols_ && next < rows.size(); ++c) {
            std::size_t pr = next;
            while (pr < rows.size() && is_zero(rows[pr][static_cast<std::size_t>(c)])) ++pr;
            if (pr == rows.size()) continue;
            std::swap(rows[next], rows[pr]);
            if constexpr (field_traits<K>::is_prime_field) {
                K inv = field_inverse(rows[next][static_cast<std::size_t>(c)]);
                for (K& x : rows[next]) x *= inv;
            }
            for (std::size_t i = next + 1; i < rows.size(); ++i) detail::eliminate_rows(rows, next, i, c);
            pivots.push_back(c);
            ++next;
        }
        rows.resize(pivots.size());
        for (std::size_t k = pivots.size(); k-- > 0;) {
            for (std::size_t i = 0; i < k; ++i) detail::eliminate_rows(rows, k, i, pivots[k]);
        }
        if constexpr (!field_traits<K>::is_prime_field) {
            for (std::size_t k = 0; k < pivots.size(); ++k) {
                K lead = rows[k][static_cast<std::size_t>(pivots[k])];
                if (!(lead == K(1))) {
                    K inv = field_inverse(lead);
                    for (K& x : rows[k]) x *= inv;
                }
            }
        }
        if (pivot_cols) *pivot_cols = pivots;
        return rows;
    }

    int rank() const {
        std::vector<int> pivots;
        rref(&pivots);
        return static_cast<int>(pivots.size());
    }

    // canonical (RREF) basis of the right null space
    std::vector<std::vector<K>> kernel() const {
        std::vector<int> pivots;
        auto r = rref(&pivots);
        std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
        for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
        std::vector<std::vector<K>> basis;
        for (int f = 0; f < cols_; ++f) {
            if (is_pivot[static_cast<std::size_t>(f)]) continue;
            std::vector<K> v(static_cast<std::size_t>(cols_), K(0));
            v[static_cast<std::size_t>(f)] = K(1);
            for (std::size_t i = 0; i < pivots.size(); ++i)
                v[static_cast<std::size_t>(pivots[i])] = -r[i][static_cast<std::size_t>(f)];
            basis.push_back(std::move(v));
        }
        if (basis.empty()) return basis;
        return ExactMatrix::from_rows(basis).rref();
    }

    // one exact solution of A x = b (free variables set to zero), if any
    std::optional<std::vector<K>> solve(const std::vector<K>& rhs) const {
        if (static_cast<int>(rhs.size()) != rows_) throw std::invalid_argument("solve: rhs size mismatch");
        ExactMatrix aug(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = rhs[static_cast<std::size_t>(i)];
        }
        std::vector<int> pivots;
        auto r = aug.rref(&pivots);
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
        std::vector<K> x(static_cast<std::size_t>(cols_), K(0));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[static_cast<std::size_t>(pivots[i])] = r[i][static_cast<std::size_t>(cols_)];
        return x;
    }

  private:
    int rows_;
    int cols_;
    std::vector<K> a_;
};

}  // namespace apolar
