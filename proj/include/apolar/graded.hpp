// Graded pieces of polynomial ideals as echelonized subspace bases, with
// degreewise ideal generation, containment tests and the linear-algebra
// certificate that a set of forms has no common projective zero.

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "apolar/matrix.hpp"
#include "apolar/monomial.hpp"
#include "apolar/poly.hpp"

namespace apolar {

// Reduce P against a basis with pairwise distinct leading monomials, sorted
// descending; one pass suffices when the basis is echelon-reduced.
template <class K>
Poly<K> reduce_against(Poly<K> P, const std::vector<Poly<K>>& basis) {
    for (const Poly<K>& b : basis) {
        if (P.is_zero()) break;
        K c = P.coefficient(b.leading_monomial());
        if (!is_zero(c)) P -= b * (c / b.leading_coefficient());
    }
    return P;
}

// Canonical reduced echelon basis of the span of `polys` (any degrees);
// leading coefficients 1, leading monomials strictly decreasing.
template <class K>
std::vector<Poly<K>> echelon_basis(const std::vector<Poly<K>>& polys, int nvars, Side side) {
    std::map<Monomial, int, GrlexGreater> columns;
    for (const Poly<K>& p : polys) {
        if (p.nvars() != nvars || p.side() != side) throw std::invalid_argument("echelon_basis: inconsistent polynomials");
        for (const auto& [m, c] : p.terms()) columns.emplace(m, 0);
    }
    std::vector<Monomial> universe;
    universe.reserve(columns.size());
    for (auto& [m, idx] : columns) {
        idx = static_cast<int>(universe.size());
        universe.push_back(m);
    }
    if (universe.empty()) return {};
    ExactMatrix<K> mat(static_cast<int>(polys.size()), static_cast<int>(universe.size()));
    for (int i = 0; i < static_cast<int>(polys.size()); ++i)
        for (const auto& [m, c] : polys[static_cast<std::size_t>(i)].terms()) mat.at(i, columns.at(m)) = c;
    std::vector<Poly<K>> out;
    for (const auto& row : mat.rref()) {
        Poly<K> p(nvars, side);
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!is_zero(row[j])) p.add_term(universe[j], row[j]);
        out.push_back(std::move(p));
    }
    return out;
}

// Echelonized basis of a subspace of the degree-k piece of S or T.
template <class K>
class GradedPiece {
  public:
    GradedPiece(int degree, int nvars, Side side) : degree_(degree), nvars_(nvars), side_(side) {
        if (degree < 0 || nvars < 1) throw std::invalid_argument("GradedPiece: bad degree or variable count");
    }

    static GradedPiece from_polys(int degree, int nvars, Side side, const std::vector<Poly<K>>& polys) {
        GradedPiece piece(degree, nvars, side);
        for (const Poly<K>& p : polys) {
            if (p.is_zero()) continue;
            if (!p.is_homogeneous() || p.degree() != degree)
                throw std::invalid_argument("GradedPiece: element not homogeneous of the stated degree");
        }
        piece.basis_ = echelon_basis(polys, nvars, side);
        return piece;
    }

    static GradedPiece full_space(int degree, int nvars, Side side) {
        std::vector<Poly<K>> monos;
        for (const Monomial& m : monomials_of_degree(nvars, degree))
            monos.push_back(Poly<K>::from_term(nvars, m, K(1), side));
        return from_polys(degree, nvars, side, monos);
    }

    int degree() const { return degree_; }
    int nvars() const { return nvars_; }
    Side side() const { return side_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const std::vector<Poly<K>>& basis() const { return basis_; }

    bool contains(const Poly<K>& p) const { return reduce_against(p, basis_).is_zero(); }

  private:
    int degree_;
    int nvars_;
    Side side_;
    std::vector<Poly<K>> basis_;
};

// Degree-t piece of the ideal generated by the given graded pieces:
// span{ m * g : g in G of degree k, m a monomial of degree t-k }.
// Generators of degree above t contribute nothing; it is an error if no
// generator has degree <= t.
template <class K>
GradedPiece<K> ideal_piece(const std::vector<GradedPiece<K>>& generators, int t, int nvars_hint = 0,
                           Side side_hint = Side::T) {
    if (generators.empty()) {
        if (nvars_hint > 0) return GradedPiece<K>(t, nvars_hint, side_hint);  // zero piece
        throw std::invalid_argument("ideal_piece: no generators and no ring hint");
    }
    const int nvars = generators.front().nvars();
    const Side side = generators.front().side();
    bool any_usable = false;
    std::vector<Poly<K>> products;
    for (const GradedPiece<K>& g : generators) {
        if (g.nvars() != nvars || g.side() != side) throw std::invalid_argument("ideal_piece: inconsistent generators");
        if (g.degree() > t || g.dimension() == 0) continue;
        any_usable = true;
        for (const Monomial& m : monomials_of_degree(nvars, t - g.degree())) {
            Poly<K> mono = Poly<K>::from_term(nvars, m, K(1), side);
            for (const Poly<K>& b : g.basis()) products.push_back(mono * b);
        }
    }
    bool all_empty = true;
    for (const GradedPiece<K>& g : generators)
        if (g.dimension() > 0) all_empty = false;
    if (!any_usable && !all_empty) throw std::invalid_argument("ideal_piece: degree t below all generator degrees");
    return GradedPiece<K>::from_polys(t, nvars, side, products);
}

template <class K>
GradedPiece<K> ideal_piece(const GradedPiece<K>& generators, int t) {
    return ideal_piece(std::vector<GradedPiece<K>>{generators}, t);
}

template <class K>
bool piece_contained(const GradedPiece<K>& A, const GradedPiece<K>& B) {
    if (A.degree() != B.degree()) throw std::invalid_argument("piece_contained: degree mismatch");
    if (A.nvars() != B.nvars() || A.side() != B.side())
        throw std::invalid_argument("piece_contained: incompatible pieces");
    for (const Poly<K>& a : A.basis())
        if (!B.contains(a)) return false;
    return true;
}

struct EmptinessReport {
    bool certified_empty = false;
    int certificate_degree = -1;      // first t with quotient dimension 0
    int t_start = 0;
    std::vector<long long> quotient_dims;  // q_t for t = t_start..t_max (stops at certificate)
};

// Degreewise Nullstellensatz-free emptiness certificate: if the ideal
// generated by the pieces contains the full degree-t space for some t, the
// generators have no common projective zero over the algebraic closure.
// Never claims non-emptiness.
template <class K>
EmptinessReport empty_projective(const std::vector<GradedPiece<K>>& generators, int t_max) {
    if (generators.empty()) throw std::invalid_argument("empty_projective: no generators");
    const int nvars = generators.front().nvars();
    int max_deg = 0;
    bool any = false;
    for (const GradedPiece<K>& g : generators) {
        if (g.dimension() == 0) continue;
        any = true;
        if (g.degree() > max_deg) max_deg = g.degree();
    }
    EmptinessReport rep;
    rep.t_start = any ? max_deg : 0;
    if (!any) {
        // zero ideal: every quotient piece is the full space
        for (int t = 0; t <= t_max; ++t)
            rep.quotient_dims.push_back(binomial(nvars - 1 + t, t).convert_to<long long>());
        return rep;
    }
    if (t_max < max_deg) throw std::invalid_argument("empty_projective: t_max below generator degree");
    for (int t = rep.t_start; t <= t_max; ++t) {
        long long full = binomial(nvars - 1 + t, t).convert_to<long long>();
        long long q = full - ideal_piece(generators, t).dimension();
        rep.quotient_dims.push_back(q);
        if (q == 0) {
            rep.certified_empty = true;
            rep.certificate_degree = t;
            break;
        }
    }
    return rep;
}

template <class K>
EmptinessReport empty_projective(const GradedPiece<K>& generators, int t_max) {
    return empty_projective(std::vector<GradedPiece<K>>{generators}, t_max);
}

}  // namespace apolar
