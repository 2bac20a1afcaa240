// Invertible linear coordinate changes on S_1 and the induced dual change
// on T_1; dehomogenization of a form with respect to a linear form l and
// homogenization of affine operators back into the graded dual ring.

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/poly.hpp"

namespace apolar {

// Replace variable i of P by the linear form sum_j A[i][j] * v_j and expand.
template <class K>
Poly<K> apply_linear(const Poly<K>& P, const std::vector<std::vector<K>>& A) {
    const int n = P.nvars();
    if (static_cast<int>(A.size()) != n) throw std::invalid_argument("apply_linear: matrix size mismatch");
    std::vector<Poly<K>> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(A[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("apply_linear: matrix size mismatch");
        Poly<K> li(n, P.side());
        for (int j = 0; j < n; ++j) {
            Monomial m(n);
            m[j] = 1;
            li.add_term(m, A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        images.push_back(std::move(li));
    }
    // per-variable power cache
    std::vector<std::vector<Poly<K>>> powers(static_cast<std::size_t>(n),
                                             std::vector<Poly<K>>{Poly<K>::constant(n, K(1), P.side())});
    auto power = [&](int i, int e) -> const Poly<K>& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[static_cast<std::size_t>(i)]);
        return cache[static_cast<std::size_t>(e)];
    };
    Poly<K> result(n, P.side());
    for (const auto& [m, c] : P.terms()) {
        Poly<K> t = Poly<K>::constant(n, c, P.side());
        for (int i = 0; i < n; ++i)
            if (m[i] > 0) t = t * power(i, m[i]);
        result += t;
    }
    return result;
}

// A basis (l, l_1, ..., l_n) of S_1 stored as the rows of an invertible
// matrix, together with its exact inverse.  Row 0 is the distinguished
// form l; the dual basis of T_1 is given by the inverse transpose.
template <class K>
class LinearSubstitution {
  public:
    explicit LinearSubstitution(std::vector<std::vector<K>> rows, int pivot = 0)
        : nvars_(static_cast<int>(rows.size())), rows_(std::move(rows)), pivot_(pivot) {
        auto m = ExactMatrix<K>::from_rows(rows_);
        if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("substitution matrix must be square");
        // invert via RREF of [B | I]
        ExactMatrix<K> aug(nvars_, 2 * nvars_);
        for (int i = 0; i < nvars_; ++i) {
            for (int j = 0; j < nvars_; ++j) aug.at(i, j) = rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            aug.at(i, nvars_ + i) = K(1);
        }
        std::vector<int> pivots;
        auto r = aug.rref(&pivots);
        if (static_cast<int>(pivots.size()) < nvars_ || pivots[static_cast<std::size_t>(nvars_ - 1)] != nvars_ - 1)
            throw std::invalid_argument("singular substitution matrix");
        inv_.assign(static_cast<std::size_t>(nvars_), std::vector<K>(static_cast<std::size_t>(nvars_), K(0)));
        for (int i = 0; i < nvars_; ++i)
            for (int j = 0; j < nvars_; ++j) inv_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(nvars_ + j)];
    }

    static LinearSubstitution identity(int nvars) {
        std::vector<std::vector<K>> rows(static_cast<std::size_t>(nvars),
                                         std::vector<K>(static_cast<std::size_t>(nvars), K(0)));
        for (int i = 0; i < nvars; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = K(1);
        return LinearSubstitution(std::move(rows));
    }

    int nvars() const { return nvars_; }
    int pivot() const { return pivot_; }
    const std::vector<std::vector<K>>& matrix() const { return rows_; }
    const std::vector<std::vector<K>>& inverse() const { return inv_; }

    // the basis form encoded by row i, as an S-side polynomial
    Poly<K> basis_form(int i) const {
        Poly<K> l(nvars_, Side::S);
        for (int j = 0; j < nvars_; ++j) {
            Monomial m(nvars_);
            m[j] = 1;
            l.add_term(m, rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
        return l;
    }

    // rewrite an S-side polynomial in the coordinates of this basis
    Poly<K> to_new_coords(const Poly<K>& F) const { return apply_linear(F, inv_); }
    Poly<K> from_new_coords(const Poly<K>& F) const { return apply_linear(F, rows_); }

    // the induced change for T-side operators (dual basis = inverse transpose)
    Poly<K> operator_to_new_coords(const Poly<K>& g) const { return apply_linear(g, transposed(rows_)); }
    Poly<K> operator_from_new_coords(const Poly<K>& g) const { return apply_linear(g, transposed(inv_)); }

  private:
    static std::vector<std::vector<K>> transposed(const std::vector<std::vector<K>>& a) {
        std::size_t n = a.size();
        std::vector<std::vector<K>> t(n, std::vector<K>(n, K(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
        return t;
    }

    int nvars_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::vector<K>> inv_;
    int pivot_;
};

template <class K>
Poly<K> substitute(const Poly<K>& F, const LinearSubstitution<K>& M) {
    if (F.nvars() != M.nvars()) throw std::invalid_argument("substitute: variable count mismatch");
    return F.side() == Side::S ? M.to_new_coords(F) : M.operator_to_new_coords(F);
}

template <class K>
struct Dehomogenization {
    Poly<K> f;                   // F_l, affine (variable 0 frozen to 1)
    LinearSubstitution<K> M;     // basis (l, remaining coordinate forms)
};

// Extend l to a basis (pivot = first variable with nonzero coefficient,
// remaining basis vectors = the other coordinate forms), rewrite F in the
// new coordinates and set the l-coordinate to 1.
template <class K>
Dehomogenization<K> dehomogenize(const Poly<K>& F, const Poly<K>& l) {
    if (l.is_zero()) throw std::invalid_argument("dehomogenize: l must be nonzero");
    if (l.degree() != 1 || !l.is_homogeneous()) throw std::invalid_argument("dehomogenize: l must be linear");
    if (!F.is_homogeneous()) throw std::invalid_argument("dehomogenize: F must be homogeneous");
    if (F.nvars() != l.nvars()) throw std::invalid_argument("dehomogenize: variable count mismatch");
    const int n = F.nvars();
    int pivot = -1;
    std::vector<K> coeffs(static_cast<std::size_t>(n), K(0));
    for (int j = 0; j < n; ++j) {
        Monomial m(n);
        m[j] = 1;
        coeffs[static_cast<std::size_t>(j)] = l.coefficient(m);
        if (pivot < 0 && !is_zero(coeffs[static_cast<std::size_t>(j)])) pivot = j;
    }
    std::vector<std::vector<K>> rows;
    rows.push_back(coeffs);
    for (int j = 0; j < n; ++j) {
        if (j == pivot) continue;
        std::vector<K> e(static_cast<std::size_t>(n), K(0));
        e[static_cast<std::size_t>(j)] = K(1);
        rows.push_back(std::move(e));
    }
    LinearSubstitution<K> M(std::move(rows), pivot);
    Poly<K> Fz = M.to_new_coords(F);
    Poly<K> f(n, Side::S);
    for (const auto& [m, c] : Fz.terms()) {
        Monomial q(m);
        q[0] = 0;
        f.add_term(q, c);
    }
    return Dehomogenization<K>{std::move(f), std::move(M)};
}

// sum_i (l')^{r-i} g_i for the graded parts g_i of an affine operator g;
// variable 0 plays the role of l' in the coordinates of the accompanying
// substitution.
template <class K>
Poly<K> homogenize_element(const Poly<K>& g, int r) {
    if (g.side() != Side::T) throw std::invalid_argument("homogenize_element expects a T-side operator");
    if (!g.is_affine()) throw std::invalid_argument("homogenize_element expects an affine operator");
    if (r < g.degree()) throw std::invalid_argument("homogenize_element: degree r below deg g");
    Poly<K> out(g.nvars(), Side::T);
    for (const auto& [m, c] : g.terms()) {
        Monomial h(m);
        h[0] = r - m.degree();
        out.add_term(h, c);
    }
    return out;
}

}  // namespace apolar
