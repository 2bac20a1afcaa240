// Exponent vectors with the graded lexicographic order (variable 0 greatest)
// and enumeration of monomial bases of graded pieces.

#pragma once

#include <stdexcept>
#include <vector>

#include "apolar/fields.hpp"

namespace apolar {

inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

class Monomial {
  public:
    explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {
        if (nvars < 0) throw std::invalid_argument("negative variable count");
    }
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int v : e_)
            if (v < 0) throw std::invalid_argument("negative exponent");
    }

    int nvars() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const {
        int d = 0;
        for (int v : e_) d += v;
        return d;
    }

    bool divides(const Monomial& m) const {
        for (int i = 0; i < nvars(); ++i)
            if (e_[static_cast<std::size_t>(i)] > m[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r[i] += m[i];
        return r;
    }

    // componentwise difference; caller guarantees m.divides(*this)
    Monomial operator/(const Monomial& m) const {
        Monomial r(*this);
        for (int i = 0; i < nvars(); ++i) r[i] -= m[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        int n = a.nvars() > b.nvars() ? a.nvars() : b.nvars();
        for (int i = 0; i < n; ++i) {
            int av = i < a.nvars() ? a[i] : 0;
            int bv = i < b.nvars() ? b[i] : 0;
            if (av != bv) return false;
        }
        return true;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  private:
    std::vector<int> e_;
};

// a > b in graded lex: higher total degree wins, ties broken by the first
// variable (x0 greatest) with a larger exponent.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    int n = a.nvars() > b.nvars() ? a.nvars() : b.nvars();
    for (int i = 0; i < n; ++i) {
        int av = i < a.nvars() ? a[i] : 0;
        int bv = i < b.nvars() ? b[i] : 0;
        if (av != bv) return av > bv;
    }
    return false;
}

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

namespace detail {

inline void enumerate_degree(int nvars, int k, int from, Monomial& scratch, std::vector<Monomial>& out) {
    if (from == nvars - 1) {
        scratch[from] = k;
        out.push_back(scratch);
        scratch[from] = 0;
        return;
    }
    for (int e = k; e >= 0; --e) {
        scratch[from] = e;
        enumerate_degree(nvars, k - e, from + 1, scratch, out);
    }
    scratch[from] = 0;
}

}  // namespace detail

// All degree-k monomials in `nvars` variables, graded-lex descending.
inline std::vector<Monomial> monomials_of_degree(int nvars, int k) {
    if (nvars < 0 || k < 0) throw std::invalid_argument("monomials_of_degree: bad arguments");
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (k == 0) out.push_back(Monomial(0));
        return out;
    }
    Monomial scratch(nvars);
    detail::enumerate_degree(nvars, k, 0, scratch, out);
    return out;
}

// Degree-k monomial basis of n+1 variables (the degree-k piece of a
// polynomial ring over P^n); length C(n+k, k).
inline std::vector<Monomial> monomial_basis(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("monomial_basis: bad arguments");
    return monomials_of_degree(n + 1, k);
}

// Monomials of degree <= k with variable 0 unused (the affine subring in
// variables 1..nvars-1), graded-lex descending across degrees.
inline std::vector<Monomial> affine_monomials_up_to(int nvars, int k) {
    if (nvars < 1 || k < 0) throw std::invalid_argument("affine_monomials_up_to: bad arguments");
    std::vector<Monomial> out;
    for (int d = k; d >= 0; --d) {
        for (const Monomial& m : monomials_of_degree(nvars - 1, d)) {
            Monomial shifted(nvars);
            for (int i = 0; i + 1 < nvars; ++i) shifted[i + 1] = m[i];
            out.push_back(shifted);
        }
    }
    return out;
}

}  // namespace apolar
