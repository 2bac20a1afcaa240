// Sparse multivariate polynomials over an exact field, tagged by ring side:
// forms live in S = K[x0..xn], differential operators in the dual ring
// T = K[y0..yn] acting on S by partial differentiation.

#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "apolar/fields.hpp"
#include "apolar/monomial.hpp"

namespace apolar {

enum class Side { S, T };  // S: forms (x variables), T: operators (y variables)

template <class K>
class Poly {
  public:
    using TermMap = std::map<Monomial, K, GrlexGreater>;

    explicit Poly(int nvars, Side side = Side::S) : nvars_(nvars), side_(side) {
        if (nvars < 1) throw std::invalid_argument("Poly needs at least one variable");
    }

    static Poly constant(int nvars, const K& c, Side side = Side::S) {
        Poly p(nvars, side);
        p.add_term(Monomial(nvars), c);
        return p;
    }
    static Poly variable(int nvars, int i, Side side = Side::S) {
        Poly p(nvars, side);
        Monomial m(nvars);
        m[i] = 1;
        p.add_term(m, K(1));
        return p;
    }
    static Poly from_term(int nvars, const Monomial& m, const K& c, Side side = Side::S) {
        Poly p(nvars, side);
        p.add_term(m, c);
        return p;
    }

    int nvars() const { return nvars_; }
    Side side() const { return side_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // -1 for the zero polynomial
    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_)
            if (m.degree() > d) d = m.degree();
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    // true when variable 0 appears in no term (the affine subring)
    bool is_affine() const {
        for (const auto& [m, c] : terms_)
            if (m[0] != 0) return false;
        return true;
    }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw std::domain_error("leading monomial of zero polynomial");
        return terms_.begin()->first;
    }
    const K& leading_coefficient() const {
        if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return terms_.begin()->second;
    }

    void add_term(const Monomial& m, const K& c) {
        if (apolar::is_zero(c)) return;
        if (m.nvars() != nvars_) throw std::invalid_argument("monomial/polynomial variable count mismatch");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (apolar::is_zero(it->second)) terms_.erase(it);
        }
    }

    Poly operator-() const {
        Poly r(nvars_, side_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const K& c) {
        if (apolar::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const K& c) { return a *= c; }
    friend Poly operator*(const K& c, Poly a) { return a *= c; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_compatible(b);
        Poly r(a.nvars_, a.side_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::invalid_argument("negative polynomial power");
        Poly r = constant(nvars_, K(1), side_);
        for (int i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    // formal partial derivative with respect to variable i
    Poly derivative(int i) const {
        Poly r(nvars_, side_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial q(m);
            q[i] -= 1;
            r.add_term(q, c * K(m[i]));
        }
        return r;
    }

    // degree-k graded part
    Poly graded_part(int k) const {
        Poly r(nvars_, side_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == k) r.terms_.emplace(m, c);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.side_ != b.side_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
        }
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // same polynomial re-tagged (used when moving between S and T conventions)
    Poly with_side(Side s) const {
        Poly r(nvars_, s);
        r.terms_ = terms_;
        return r;
    }

    // same polynomial embedded in a ring with more variables
    Poly extended(int nvars) const {
        if (nvars < nvars_) throw std::invalid_argument("cannot shrink variable count");
        Poly r(nvars, side_);
        for (const auto& [m, c] : terms_) {
            std::vector<int> e = m.exponents();
            e.resize(static_cast<std::size_t>(nvars), 0);
            r.terms_.emplace(Monomial(std::move(e)), c);
        }
        return r;
    }

  private:
    void check_compatible(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial variable count mismatch");
        if (side_ != o.side_) throw std::invalid_argument("polynomial ring side mismatch");
    }

    TermMap terms_;
    int nvars_;
    Side side_;
};

namespace detail {

// b_i!/(b_i-a_i)! taken componentwise; factors stay below the characteristic
// whenever char(K) > deg, which callers must have checked.
template <class K>
K falling_factorial(const Monomial& b, const Monomial& a) {
    K r(1);
    for (int i = 0; i < b.nvars(); ++i) {
        for (int j = 0; j < a[i]; ++j) r *= K(b[i] - j);
    }
    return r;
}

}  // namespace detail

// The dual action: y^a sends x^b to prod_i b_i!/(b_i-a_i)! x^{b-a} when a
// divides b and to zero otherwise, extended bilinearly.
template <class K>
Poly<K> apply_op(const Poly<K>& g, const Poly<K>& f) {
    if (g.side() != Side::T || f.side() != Side::S)
        throw std::invalid_argument("apply_op expects a T-side operator acting on an S-side polynomial");
    if (g.nvars() != f.nvars()) throw std::invalid_argument("apply_op: variable count mismatch");
    const std::uint64_t p = field_traits<K>::characteristic();
    if (p != 0 && f.degree() >= 0 && static_cast<std::uint64_t>(f.degree()) >= p)
        throw std::domain_error("characteristic too small: need p > deg F for the differentiation action");
    Poly<K> r(f.nvars(), Side::S);
    for (const auto& [a, cg] : g.terms()) {
        for (const auto& [b, cf] : f.terms()) {
            if (!a.divides(b)) continue;
            r.add_term(b / a, cg * cf * detail::falling_factorial<K>(b, a));
        }
    }
    return r;
}

}  // namespace apolar
