// The apolarity engine: catalecticant matrices, Hilbert functions of the
// apolar quotient, annihilator pieces, spaces of partial derivatives,
// affine annihilators and their homogenizations, the apolar scheme of a
// dehomogenized form, point ideals and the powersum decomposition check.

#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "apolar/graded.hpp"
#include "apolar/matrix.hpp"
#include "apolar/monomial.hpp"
#include "apolar/poly.hpp"
#include "apolar/substitution.hpp"

namespace apolar {

namespace detail {

template <class K>
void check_characteristic(int degree) {
    const std::uint64_t p = field_traits<K>::characteristic();
    if (p != 0 && degree >= 0 && static_cast<std::uint64_t>(degree) >= p)
        throw std::domain_error("characteristic too small: need p > degree");
}

template <class K>
std::vector<Poly<K>> kernel_as_polys(const ExactMatrix<K>& m, const std::vector<Monomial>& columns, int nvars,
                                     Side side) {
    std::vector<Poly<K>> out;
    for (const auto& v : m.kernel()) {
        Poly<K> p(nvars, side);
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero(v[j])) p.add_term(columns[j], v[j]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

// Matrix of the contraction map T_k -> S_{d-k}, g |-> g(F); columns indexed
// by the degree-k monomials of T, rows by the degree-(d-k) monomials of S,
// both graded-lex descending.
template <class K>
ExactMatrix<K> catalecticant(const Poly<K>& F, int k) {
    if (F.is_zero()) throw std::invalid_argument("catalecticant: F must be nonzero");
    if (!F.is_homogeneous()) throw std::invalid_argument("catalecticant: F must be homogeneous");
    const int d = F.degree();
    if (k < 0 || k > d) throw std::domain_error("catalecticant: k out of range 0..deg F");
    detail::check_characteristic<K>(d);
    const int nvars = F.nvars();
    const auto cols = monomials_of_degree(nvars, k);
    const auto rows = monomials_of_degree(nvars, d - k);
    std::map<Monomial, int, GrlexGreater> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));
    ExactMatrix<K> m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        Poly<K> image = apply_op(Poly<K>::from_term(nvars, cols[j], K(1), Side::T), F);
        for (const auto& [mono, c] : image.terms()) m.at(row_index.at(mono), static_cast<int>(j)) = c;
    }
    return m;
}

// Hilbert function of the apolar quotient T/F^perp, h_k = rank of the
// degree-k catalecticant.
struct HilbertFunction {
    std::vector<long long> values;  // h_0..h_d

    long long operator[](std::size_t k) const { return values[k]; }
    int top_degree() const { return static_cast<int>(values.size()) - 1; }
    long long max() const {
        long long m = 0;
        for (long long v : values)
            if (v > m) m = v;
        return m;
    }
    bool symmetric() const {
        for (std::size_t k = 0; k < values.size(); ++k)
            if (values[k] != values[values.size() - 1 - k]) return false;
        return true;
    }
    friend bool operator==(const HilbertFunction& a, const HilbertFunction& b) { return a.values == b.values; }
};

template <class K>
HilbertFunction hilbert_function(const Poly<K>& F) {
    if (F.is_zero()) throw std::invalid_argument("hilbert_function: F must be nonzero");
    HilbertFunction h;
    const int d = F.degree();
    for (int k = 0; k <= d; ++k) h.values.push_back(catalecticant(F, k).rank());
    return h;
}

// Degree-k piece of the annihilator ideal F^perp, i.e. the kernel of the
// degree-k catalecticant; for k = deg F + 1 the full space.
template <class K>
GradedPiece<K> annihilator_piece(const Poly<K>& F, int k) {
    if (F.is_zero()) throw std::invalid_argument("annihilator_piece: F must be nonzero");
    if (!F.is_homogeneous()) throw std::invalid_argument("annihilator_piece: F must be homogeneous");
    const int d = F.degree();
    if (k < 0 || k > d + 1) throw std::domain_error("annihilator_piece: k out of range 0..deg F + 1");
    if (k == d + 1) return GradedPiece<K>::full_space(k, F.nvars(), Side::T);
    auto cols = monomials_of_degree(F.nvars(), k);
    auto polys = detail::kernel_as_polys(catalecticant(F, k), cols, F.nvars(), Side::T);
    return GradedPiece<K>::from_polys(k, F.nvars(), Side::T, polys);
}

// Span of the partials of all orders (0..deg f) of an affine polynomial,
// stored as a canonical reduced echelon basis.
template <class K>
struct DiffSpace {
    std::vector<Poly<K>> basis;
    int dimension() const { return static_cast<int>(basis.size()); }
};

namespace detail {

// insert into an interreduced echelon basis (leading monomials strictly
// decreasing, leading coefficients 1); returns false if P reduces to zero
template <class K>
bool echelon_insert(std::vector<Poly<K>>& basis, Poly<K> P) {
    P = reduce_against(std::move(P), basis);
    if (P.is_zero()) return false;
    P *= field_inverse(P.leading_coefficient());
    for (Poly<K>& b : basis) {
        K c = b.coefficient(P.leading_monomial());
        if (!is_zero(c)) b -= P * c;
    }
    auto pos = basis.begin();
    while (pos != basis.end() && grlex_greater(pos->leading_monomial(), P.leading_monomial())) ++pos;
    basis.insert(pos, std::move(P));
    return true;
}

}  // namespace detail

// Closure of {f} under all first partials in the affine variables 1..n,
// iterated to a fixpoint.  The stored basis is the unique RREF of the span.
template <class K>
DiffSpace<K> diff_space(const Poly<K>& f) {
    if (f.is_zero()) throw std::invalid_argument("diff_space: f must be nonzero");
    if (!f.is_affine()) throw std::invalid_argument("diff_space: f must be affine (variable 0 unused)");
    detail::check_characteristic<K>(f.degree());
    DiffSpace<K> space;
    detail::echelon_insert(space.basis, f);
    bool changed = true;
    while (changed) {
        changed = false;
        auto snapshot = space.basis;
        for (const Poly<K>& b : snapshot) {
            for (int v = 1; v < f.nvars(); ++v) {
                Poly<K> der = b.derivative(v);
                if (!der.is_zero() && detail::echelon_insert(space.basis, std::move(der))) changed = true;
            }
        }
    }
    return space;
}

// Echelon basis of { g in T_{l'} : deg g <= k, g(f) = 0 }: the kernel of
// the action of affine operators of degree <= k on the graded parts of f.
template <class K>
std::vector<Poly<K>> affine_annihilator(const Poly<K>& f, int k) {
    if (f.is_zero()) throw std::invalid_argument("affine_annihilator: f must be nonzero");
    if (!f.is_affine()) throw std::invalid_argument("affine_annihilator: f must be affine");
    if (k < 0) throw std::invalid_argument("affine_annihilator: k must be non-negative");
    const int nvars = f.nvars();
    const auto ops = affine_monomials_up_to(nvars, k);
    const auto targets = affine_monomials_up_to(nvars, f.degree());
    std::map<Monomial, int, GrlexGreater> row_index;
    for (std::size_t i = 0; i < targets.size(); ++i) row_index.emplace(targets[i], static_cast<int>(i));
    ExactMatrix<K> m(static_cast<int>(targets.size()), static_cast<int>(ops.size()));
    const Poly<K> fs = f.side() == Side::S ? f : f.with_side(Side::S);
    for (std::size_t j = 0; j < ops.size(); ++j) {
        Poly<K> image = apply_op(Poly<K>::from_term(nvars, ops[j], K(1), Side::T), fs);
        for (const auto& [mono, c] : image.terms()) m.at(row_index.at(mono), static_cast<int>(j)) = c;
    }
    return detail::kernel_as_polys(m, ops, nvars, Side::T);
}

// Degree-t piece of the homogenized ideal (f^perp)^h in the coordinates of
// the accompanying substitution, expressed in the original dual variables.
// Every homogeneous degree-t element of the homogenized ideal is l'^s g^h
// for some g in the annihilator of degree <= t, so homogenizing an echelon
// basis of f^perp_{<=t} to degree t spans the piece exactly.
template <class K>
GradedPiece<K> homogenized_annihilator_piece(const Poly<K>& f, const LinearSubstitution<K>& M, int t) {
    std::vector<Poly<K>> polys;
    for (const Poly<K>& g : affine_annihilator(f, t))
        polys.push_back(M.operator_from_new_coords(homogenize_element(g, t)));
    return GradedPiece<K>::from_polys(t, f.nvars(), Side::T, polys);
}

// The apolar scheme Gamma(F_l): the affine Gorenstein scheme defined by the
// annihilator of the dehomogenization F_l, together with the homogenized
// generators certified to annihilate F.
template <class K>
struct ApolarScheme {
    Poly<K> witness;                              // l
    LinearSubstitution<K> substitution;           // basis (l, l_1, ..., l_n)
    Poly<K> dehomogenized;                        // f = F_l in the new coordinates
    long long length = 0;                         // dim Diff(F_l)
    std::vector<Poly<K>> affine_annihilator_basis;  // f^perp through degree deg f + 1
    std::vector<Poly<K>> homogenized_generators;  // original dual coordinates
    bool verified = false;                        // every generator annihilates F
};

template <class K>
ApolarScheme<K> gamma_scheme(const Poly<K>& F, const Poly<K>& l) {
    if (F.is_zero()) throw std::invalid_argument("gamma_scheme: F must be nonzero");
    auto de = dehomogenize(F, l);
    DiffSpace<K> D = diff_space(de.f);
    auto ann = affine_annihilator(de.f, de.f.degree() + 1);
    std::vector<Poly<K>> homogenized;
    homogenized.reserve(ann.size());
    for (const Poly<K>& g : ann) {
        Poly<K> G = de.M.operator_from_new_coords(homogenize_element(g, g.degree()));
        if (!apply_op(G, F).is_zero())
            throw std::logic_error("gamma_scheme: homogenized annihilator element fails to annihilate F");
        homogenized.push_back(std::move(G));
    }
    return ApolarScheme<K>{l, std::move(de.M), std::move(de.f), D.dimension(), std::move(ann),
                           std::move(homogenized), true};
}

// Report for the check that the degree-(d-e) annihilator piece of
// F_{2(d-e)} = l^{d-e} F' (a) annihilates l^{d-e} and (b) generates, degree
// by degree, a subideal of the homogenized annihilator of F_l that
// eventually agrees with it in dimension.
struct Remark2Report {
    bool part_a_ok = false;
    int generator_degree = 0;  // d - e
    struct Row {
        int t;
        long long ideal_dim;
        long long homogenized_dim;
        bool contained;
    };
    std::vector<Row> rows;
    int first_agreement_degree = -1;   // first t with equal dimensions
    int stable_agreement_degree = -1;  // first t from which dimensions agree through t_max
    bool all_contained = false;
};

template <class K>
Remark2Report remark2_check(const Poly<K>& F, const Poly<K>& l, int e, int t_max) {
    if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("remark2_check: F must be a nonzero form");
    const int d = F.degree();
    if (e < 0 || d - e < 1) throw std::invalid_argument("remark2_check: need 0 <= e and deg F - e >= 1");
    auto de = dehomogenize(F, l);
    // factorization hypothesis: the exact power of l dividing F is l^e
    Poly<K> Fz = de.M.to_new_coords(F);
    int min_e = d;
    for (const auto& [m, c] : Fz.terms())
        if (m[0] < min_e) min_e = m[0];
    if (min_e > e) throw std::invalid_argument("remark2_check: l divides F' (l-power exceeds e)");
    if (min_e < e) throw std::invalid_argument("remark2_check: l^e does not divide F");
    // F_{2(d-e)} = l^{d-e} F' in the original coordinates
    Poly<K> F2z(F.nvars(), Side::S);
    for (const auto& [m, c] : Fz.terms()) {
        Monomial q(m);
        q[0] = m[0] - e + (d - e);
        F2z.add_term(q, c);
    }
    Poly<K> F2 = de.M.from_new_coords(F2z);
    GradedPiece<K> B = annihilator_piece(F2, d - e);

    Remark2Report rep;
    rep.generator_degree = d - e;
    Poly<K> l_power = l.pow(d - e);
    rep.part_a_ok = true;
    for (const Poly<K>& b : B.basis())
        if (!apply_op(b, l_power).is_zero()) rep.part_a_ok = false;

    rep.all_contained = true;
    for (int t = d - e; t <= t_max; ++t) {
        GradedPiece<K> A_t = ideal_piece(B, t);
        GradedPiece<K> H_t = homogenized_annihilator_piece(de.f, de.M, t);
        bool contained = piece_contained(A_t, H_t);
        if (!contained) rep.all_contained = false;
        rep.rows.push_back({t, A_t.dimension(), H_t.dimension(), contained});
        if (rep.first_agreement_degree < 0 && A_t.dimension() == H_t.dimension()) rep.first_agreement_degree = t;
    }
    for (std::size_t i = rep.rows.size(); i-- > 0;) {
        if (rep.rows[i].ideal_dim == rep.rows[i].homogenized_dim)
            rep.stable_agreement_degree = rep.rows[i].t;
        else
            break;
    }
    if (!rep.rows.empty() && rep.rows.back().ideal_dim != rep.rows.back().homogenized_dim)
        rep.stable_agreement_degree = -1;
    return rep;
}

// Degree-k piece of the ideal of a reduced set of points [l_i] in P(S_1):
// the kernel of the evaluation map T_k -> K^r at the point coordinates.
template <class K>
GradedPiece<K> point_ideal_piece(const std::vector<Poly<K>>& points, int k) {
    if (points.empty()) throw std::invalid_argument("point_ideal_piece: no points");
    const int nvars = points.front().nvars();
    std::vector<std::vector<K>> coords;
    for (const Poly<K>& l : points) {
        if (l.is_zero() || l.degree() != 1 || !l.is_homogeneous() || l.nvars() != nvars)
            throw std::invalid_argument("point_ideal_piece: points must be nonzero linear forms");
        std::vector<K> c(static_cast<std::size_t>(nvars), K(0));
        for (int j = 0; j < nvars; ++j) {
            Monomial m(nvars);
            m[j] = 1;
            c[static_cast<std::size_t>(j)] = l.coefficient(m);
        }
        coords.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = i + 1; j < coords.size(); ++j) {
            bool proportional = true;
            for (int a = 0; a < nvars && proportional; ++a)
                for (int b = a + 1; b < nvars && proportional; ++b)
                    if (!is_zero(coords[i][static_cast<std::size_t>(a)] * coords[j][static_cast<std::size_t>(b)] -
                                 coords[i][static_cast<std::size_t>(b)] * coords[j][static_cast<std::size_t>(a)]))
                        proportional = false;
            if (proportional) throw std::invalid_argument("point_ideal_piece: proportional points");
        }
    const auto cols = monomials_of_degree(nvars, k);
    ExactMatrix<K> m(static_cast<int>(points.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            K v(1);
            for (int a = 0; a < nvars; ++a)
                for (int rep = 0; rep < cols[j][a]; ++rep) v *= coords[i][static_cast<std::size_t>(a)];
            m.at(static_cast<int>(i), static_cast<int>(j)) = v;
        }
    }
    return GradedPiece<K>::from_polys(k, nvars, Side::T, detail::kernel_as_polys(m, cols, nvars, Side::T));
}

// Exact powersum solve F = sum c_i l_i^d, cross-checked against degreewise
// containment of the point ideal in the annihilator (both directions).  A
// mismatch between the two routes is an internal error.
template <class K>
struct DecomposeOutcome {
    std::optional<std::vector<K>> coefficients;
    bool containment_holds = false;  // I_{Gamma,k} in F^perp_k for all k <= d
    int first_failing_degree = -1;
};

template <class K>
DecomposeOutcome<K> decompose_check(const Poly<K>& F, const std::vector<Poly<K>>& points) {
    if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("decompose_check: F must be a nonzero form");
    const int d = F.degree();
    const int nvars = F.nvars();
    const auto rows = monomials_of_degree(nvars, d);
    std::map<Monomial, int, GrlexGreater> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));
    ExactMatrix<K> m(static_cast<int>(rows.size()), static_cast<int>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        Poly<K> pw = points[j].pow(d);
        for (const auto& [mono, c] : pw.terms()) m.at(row_index.at(mono), static_cast<int>(j)) = c;
    }
    std::vector<K> rhs(rows.size(), K(0));
    for (const auto& [mono, c] : F.terms()) rhs[static_cast<std::size_t>(row_index.at(mono))] = c;

    DecomposeOutcome<K> out;
    out.coefficients = m.solve(rhs);
    out.containment_holds = true;
    for (int k = 0; k <= d; ++k) {
        if (!piece_contained(point_ideal_piece(points, k), annihilator_piece(F, k))) {
            out.containment_holds = false;
            out.first_failing_degree = k;
            break;
        }
    }
    if (out.coefficients.has_value() != out.containment_holds)
        throw std::logic_error("decompose_check: powersum solve and apolarity containment disagree");
    return out;
}

}  // namespace apolar
