// Rank-theoretic bounds: the closed-form bound N_d for the dimension of a
// space of partials, the Alexander-Hirschowitz generic rank with its
// exceptional cases, a Terracini-style secant dimension oracle, the
// differential length lower bound, the dehomogenization upper bound with
// witness search, and the consolidated bracketing report.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/poly.hpp"
#include "apolar/rng.hpp"

namespace apolar {

// N_d = 2 C(n+k,k) for d = 2k+1, C(n+k,k) + C(n+k+1,k+1) for d = 2k+2.
inline long long nd_bound(int n, int d) {
    if (n < 0 || d < 1) throw std::invalid_argument("nd_bound: need n >= 0 and d >= 1");
    Int v;
    if (d % 2 == 1) {
        int k = (d - 1) / 2;
        v = 2 * binomial(n + k, k);
    } else {
        int k = (d - 2) / 2;
        v = binomial(n + k, k) + binomial(n + k + 1, k + 1);
    }
    if (v > Int(1) << 62) throw std::overflow_error("nd_bound: value out of range");
    return v.convert_to<long long>();
}

struct GenericRank {
    long long value = 0;
    bool exceptional = false;
};

// ceil(C(n+d,d) / (n+1)) for d > 2 away from the four exceptional pairs,
// where the formula value is defective by one; n+1 for quadrics.
inline GenericRank generic_rank(int n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("generic_rank: need n >= 1 and d >= 2");
    if (d == 2) return {n + 1, false};  // full-rank quadric convention
    Int total = binomial(n + d, d);
    Int denom = n + 1;
    Int value = (total + denom - 1) / denom;
    GenericRank r;
    r.value = value.convert_to<long long>();
    if ((n == 2 && d == 4) || (n == 3 && d == 4) || (n == 4 && d == 3) || (n == 4 && d == 4)) {
        r.value += 1;
        r.exceptional = true;
    }
    return r;
}

// Projective dimension of the span of the tangent spaces to the d-th
// Veronese at r seeded random points: rank of span{ l_j^{d-1} x_i } - 1.
// Meaningful over a large prime field; callers pass K = Fp.
template <class K>
long long secant_dimension(int n, int d, int r, std::uint64_t seed) {
    if (r < 1 || n < 0 || d < 1) throw std::invalid_argument("secant_dimension: bad arguments");
    const int nvars = n + 1;
    const auto basis = monomials_of_degree(nvars, d);
    std::map<Monomial, int, GrlexGreater> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], static_cast<int>(i));
    ExactMatrix<K> m(r * nvars, static_cast<int>(basis.size()));
    int row = 0;
    for (int j = 0; j < r; ++j) {
        Poly<K> l = random_linear_form<K>(n, mix_seed(seed, static_cast<std::uint64_t>(j)));
        Poly<K> lp = l.pow(d - 1);
        for (int i = 0; i < nvars; ++i) {
            Poly<K> t = lp * Poly<K>::variable(nvars, i);
            for (const auto& [mono, c] : t.terms()) m.at(row, index.at(mono)) = c;
            ++row;
        }
    }
    return m.rank() - 1;
}

// expected projective dimension of the r-th secant of the d-th Veronese
inline long long expected_secant_dimension(int n, int d, int r) {
    Int ambient = binomial(n + d, d);
    Int span = Int(r) * (n + 1);
    Int dim = (span < ambient ? span : ambient) - 1;
    return dim.convert_to<long long>();
}

// max_k rank of the degree-k catalecticant; a lower bound for the cactus rank
template <class K>
long long diff_length(const Poly<K>& F) {
    return hilbert_function(F).max();
}

template <class K>
struct CactusBound {
    long long bound = 0;
    Poly<K> witness;
    std::vector<long long> candidate_lengths;  // in candidate order
};

// min over candidate linear forms of the length of Gamma(F_l); ties broken
// by candidate order.  The per-candidate length is dim Diff(F_l); the full
// verified scheme is constructed for the winning witness only.
template <class K>
CactusBound<K> cactus_upper_bound(const Poly<K>& F, const std::vector<Poly<K>>& candidates) {
    if (candidates.empty()) throw std::invalid_argument("cactus_upper_bound: no candidate linear forms");
    CactusBound<K> out{0, candidates.front(), {}};
    long long best = -1;
    for (const Poly<K>& l : candidates) {
        long long len = diff_space(dehomogenize(F, l).f).dimension();
        out.candidate_lengths.push_back(len);
        if (best < 0 || len < best) {
            best = len;
            out.witness = l;
        }
    }
    out.bound = best;
    ApolarScheme<K> scheme = gamma_scheme(F, out.witness);  // certifies the witness
    if (scheme.length != best) throw std::logic_error("cactus_upper_bound: witness length mismatch");
    return out;
}

// default candidate set: the coordinate forms plus seeded random linear forms
template <class K>
std::vector<Poly<K>> default_candidates(int nvars, int extra_random, std::uint64_t seed) {
    std::vector<Poly<K>> out;
    for (int i = 0; i < nvars; ++i) out.push_back(Poly<K>::variable(nvars, i));
    for (int j = 0; j < extra_random; ++j)
        out.push_back(random_linear_form<K>(nvars - 1, mix_seed(seed, 0x1f0000ull + static_cast<std::uint64_t>(j))));
    return out;
}

struct RankReportOptions {
    int extra_candidates = 8;
    std::uint64_t seed = 0;
};

// Bracketing report: the exact machinery pins cr(F) between the maximal
// catalecticant rank and the best dehomogenization bound; the closed-form
// bound and the generic rank give context.  Nothing here claims to compute
// cr, sr or br exactly.
template <class K>
struct RankReport {
    int n = 0;
    int d = 0;
    HilbertFunction hilbert;
    long long ldiff = 0;                    // lower bound for cr(F)
    long long cactus_bound = 0;             // upper bound for cr(F)
    Poly<K> witness;
    long long nd = 0;                       // closed-form bound N_d
    GenericRank generic;                    // rank of a general form (flagged exceptions)
    std::string candidate_description;
    std::string field_name;
    std::uint64_t seed = 0;
};

template <class K>
RankReport<K> rank_report(const Poly<K>& F, const RankReportOptions& options = {}) {
    if (F.is_zero() || !F.is_homogeneous()) throw std::invalid_argument("rank_report: F must be a nonzero form");
    const int n = F.nvars() - 1;
    const int d = F.degree();
    RankReport<K> rep{n, d, hilbert_function(F), 0, 0, F, 0, {}, "", field_traits<K>::name(), options.seed};
    rep.ldiff = rep.hilbert.max();
    auto candidates = default_candidates<K>(F.nvars(), options.extra_candidates, options.seed);
    auto cb = cactus_upper_bound(F, candidates);
    rep.cactus_bound = cb.bound;
    rep.witness = cb.witness;
    rep.nd = nd_bound(n, d);
    if (n >= 1 && d >= 2) rep.generic = generic_rank(n, d);
    rep.candidate_description =
        "coordinate forms + " + std::to_string(options.extra_candidates) + " seeded random linear forms";
    if (rep.ldiff > rep.cactus_bound || rep.cactus_bound > rep.nd)
        throw std::logic_error("rank_report: bound chain violated");
    return rep;
}

}  // namespace apolar
