#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "apolar/apolarity.hpp"
#include "apolar/fields.hpp"
#include "apolar/monomial.hpp"
#include "apolar/parse.hpp"
#include "apolar/poly.hpp"
#include "apolar/rng.hpp"
#include "apolar/substitution.hpp"

using namespace apolar;

namespace {

struct ModulusGuard {
    explicit ModulusGuard(std::uint64_t p) : saved(Fp::modulus()) { Fp::set_modulus(p); }
    ~ModulusGuard() { Fp::set_modulus(saved); }
    std::uint64_t saved;
};

template <class K>
Poly<K> P(const std::string& text, Side side = Side::S) {
    return parse_poly<K>(text, side);
}

LinearSubstitution<Rational> random_invertible(int nvars, std::uint64_t seed) {
    SeededRng rng(seed);
    for (;;) {
        std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(nvars),
                                                std::vector<Rational>(static_cast<std::size_t>(nvars)));
        for (auto& row : rows)
            for (auto& v : row) v = Rational(rng.uniform_int(-5, 5));
        try {
            return LinearSubstitution<Rational>(std::move(rows));
        } catch (const std::invalid_argument&) {
            // singular draw, try again
        }
    }
}

}  // namespace

TEST(Fields, FpArithmetic) {
    ModulusGuard g(2147483647ull);
    Fp a(5), b(-3);
    EXPECT_EQ((a + b).value(), 2u);
    EXPECT_EQ((a * b), Fp(-15));
    EXPECT_EQ(a * a.inverse(), Fp(1));
    EXPECT_EQ(Fp(2147483647ll), Fp(0));
    EXPECT_THROW(Fp(0).inverse(), std::domain_error);
    EXPECT_THROW((void)(a / Fp(0)), std::domain_error);
}

TEST(Fields, ModulusValidation) {
    EXPECT_THROW(Fp::set_modulus(10), std::invalid_argument);
    EXPECT_THROW(Fp::set_modulus(1), std::invalid_argument);
    ModulusGuard g(101);
    EXPECT_EQ(Fp::modulus(), 101u);
    EXPECT_EQ(Fp(100) + Fp(2), Fp(1));
}

TEST(Fields, RationalExact) {
    Rational a(1, 3), b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_THROW(field_inverse(Rational(0)), std::domain_error);
}

TEST(MonomialOrder, BasisExamples) {
    auto b = monomial_basis(1, 2);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b[0], Monomial(std::vector<int>{2, 0}));
    EXPECT_EQ(b[1], Monomial(std::vector<int>{1, 1}));
    EXPECT_EQ(b[2], Monomial(std::vector<int>{0, 2}));
    EXPECT_EQ(monomial_basis(8, 3).size(), 165u);
    auto single = monomial_basis(0, 5);
    ASSERT_EQ(single.size(), 1u);
    EXPECT_EQ(single[0], Monomial(std::vector<int>{5}));
}

TEST(MonomialOrder, TotalAndDeterministic) {
    SeededRng rng(7);
    std::vector<Monomial> monos;
    for (int i = 0; i < 60; ++i) {
        std::vector<int> e(4);
        for (auto& x : e) x = static_cast<int>(rng.uniform(5));
        monos.emplace_back(std::move(e));
    }
    for (const auto& a : monos)
        for (const auto& b : monos) {
            if (a == b) {
                EXPECT_FALSE(grlex_greater(a, b));
                EXPECT_FALSE(grlex_greater(b, a));
            } else {
                EXPECT_NE(grlex_greater(a, b), grlex_greater(b, a));
            }
        }
    auto sorted1 = monos;
    std::sort(sorted1.begin(), sorted1.end(), GrlexGreater{});
    auto sorted2 = monos;
    std::shuffle(sorted2.begin(), sorted2.end(), std::mt19937(99));
    std::sort(sorted2.begin(), sorted2.end(), GrlexGreater{});
    for (std::size_t i = 0; i < sorted1.size(); ++i) EXPECT_EQ(sorted1[i], sorted2[i]);
}

TEST(ApplyOp, TrivialExamples) {
    EXPECT_EQ(apply_op(P<Rational>("y0^2", Side::T), P<Rational>("x0^3")), P<Rational>("6*x0"));
    EXPECT_EQ(apply_op(P<Rational>("y0*y1", Side::T), P<Rational>("x0^2*x1")), P<Rational>("2*x0"));
    EXPECT_TRUE(apply_op(parse_poly<Rational>("y1", Side::T, 2), P<Rational>("x0^2", Side::S).extended(2)).is_zero());
}

TEST(ApplyOp, RingActionProperty) {
    for (std::uint64_t s = 0; s < 12; ++s) {
        auto F = random_form<Rational>(2, 4, mix_seed(900, s));
        auto g1 = random_form<Rational>(2, 1, mix_seed(901, s)).with_side(Side::T);
        auto g2 = random_form<Rational>(2, 2, mix_seed(902, s)).with_side(Side::T);
        EXPECT_EQ(apply_op(g1 * g2, F), apply_op(g1, apply_op(g2, F)));
        EXPECT_EQ(apply_op(g1 * g2, F), apply_op(g2, apply_op(g1, F)));
    }
}

TEST(ApplyOp, Bilinear) {
    ModulusGuard g(2147483647ull);
    for (std::uint64_t s = 0; s < 8; ++s) {
        auto F1 = random_form<Fp>(2, 3, mix_seed(910, s));
        auto F2 = random_form<Fp>(2, 3, mix_seed(911, s));
        auto g1 = random_form<Fp>(2, 2, mix_seed(912, s)).with_side(Side::T);
        auto g2 = random_form<Fp>(2, 2, mix_seed(913, s)).with_side(Side::T);
        Fp c(17);
        EXPECT_EQ(apply_op(g1 + g2 * c, F1), apply_op(g1, F1) + apply_op(g2, F1) * c);
        EXPECT_EQ(apply_op(g1, F1 + F2 * c), apply_op(g1, F1) + apply_op(g1, F2) * c);
    }
}

TEST(ApplyOp, Errors) {
    {
        ModulusGuard g(3);
        auto F = P<Fp>("x0^3");
        EXPECT_THROW(apply_op(P<Fp>("y0", Side::T), F), std::domain_error);
    }
    auto F = P<Rational>("x0^2");
    EXPECT_THROW(apply_op(parse_poly<Rational>("y0*y1", Side::T), F), std::invalid_argument);  // nvars mismatch
    EXPECT_THROW(apply_op(P<Rational>("x0"), F), std::invalid_argument);                       // side mismatch
}

TEST(Substitute, IdentityAndPermutation) {
    auto F = P<Rational>("x0^3 - 2/3*x1*x2^2");
    EXPECT_EQ(substitute(F, LinearSubstitution<Rational>::identity(3)), F);
    // swap x0 <-> x1
    std::vector<std::vector<Rational>> swap01 = {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    auto G = substitute(parse_poly<Rational>("x0^3", Side::S, 3), LinearSubstitution<Rational>(swap01));
    EXPECT_EQ(G, parse_poly<Rational>("x1^3", Side::S, 3));
}

TEST(Substitute, SingularRejected) {
    std::vector<std::vector<Rational>> rows = {{1, 1}, {2, 2}};
    EXPECT_THROW(LinearSubstitution<Rational>(rows), std::invalid_argument);
}

TEST(Substitute, RoundTrip) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto M = random_invertible(3, mix_seed(920, s));
        auto F = random_form<Rational>(2, 3, mix_seed(921, s));
        std::vector<std::vector<Rational>> inv_rows = M.inverse();
        LinearSubstitution<Rational> Minv(inv_rows);
        EXPECT_EQ(substitute(substitute(F, M), Minv), F);
    }
}

TEST(Substitute, HilbertFunctionInvariant) {
    for (std::uint64_t s = 0; s < 6; ++s) {
        auto M = random_invertible(3, mix_seed(930, s));
        auto F = random_form<Rational>(2, 3, mix_seed(931, s));
        EXPECT_EQ(hilbert_function(substitute(F, M)), hilbert_function(F));
    }
}

TEST(Substitute, PairingPreserved) {
    // the action computed in new coordinates matches the action in the old ones
    for (std::uint64_t s = 0; s < 6; ++s) {
        auto M = random_invertible(3, mix_seed(940, s));
        auto F = random_form<Rational>(2, 3, mix_seed(941, s));
        auto g = random_form<Rational>(2, 2, mix_seed(942, s)).with_side(Side::T);
        auto lhs = M.from_new_coords(apply_op(substitute(g, M), substitute(F, M)));
        EXPECT_EQ(lhs, apply_op(g, F));
    }
}

TEST(Dehomogenize, Examples) {
    auto d1 = dehomogenize(P<Rational>("x0^3 + x1^3"), parse_poly<Rational>("x0", Side::S, 2));
    EXPECT_EQ(d1.f, parse_poly<Rational>("1 + x1^3", Side::S, 2));

    auto F = P<Rational>("x0^3 + x0*x1^2 + x0*x2^2");
    auto d2 = dehomogenize(F, parse_poly<Rational>("x0", Side::S, 3));
    EXPECT_EQ(d2.f, parse_poly<Rational>("1 + x1^2 + x2^2", Side::S, 3));

    auto l = P<Rational>("x0 + 2*x1");
    auto d3 = dehomogenize(l.pow(3), l);
    EXPECT_EQ(d3.f, Poly<Rational>::constant(2, Rational(1)));

    EXPECT_THROW(dehomogenize(F, Poly<Rational>(3)), std::invalid_argument);
}

TEST(Dehomogenize, PivotRule) {
    // first nonzero coefficient of l gives the pivot
    auto l = parse_poly<Rational>("3*x1 - x2", Side::S, 3);
    auto F = P<Rational>("x0^3 + x1^3 + x2^3");
    auto d = dehomogenize(F, l);
    EXPECT_EQ(d.M.pivot(), 1);
    EXPECT_EQ(d.M.basis_form(0), l);
    EXPECT_EQ(d.M.basis_form(1), parse_poly<Rational>("x0", Side::S, 3));
    EXPECT_EQ(d.M.basis_form(2), parse_poly<Rational>("x2", Side::S, 3));
}

TEST(Dehomogenize, RehomogenizationRecoversF) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        int n = 1 + static_cast<int>(s % 3);
        int d = 2 + static_cast<int>(s % 3);
        auto F = random_form<Rational>(n, d, mix_seed(950, s));
        auto l = random_linear_form<Rational>(n, mix_seed(951, s));
        auto de = dehomogenize(F, l);
        Poly<Rational> rehom(F.nvars(), Side::S);
        for (int i = 0; i <= de.f.degree(); ++i) {
            auto fi = de.f.graded_part(i);
            if (fi.is_zero()) continue;
            rehom += fi * Poly<Rational>::variable(F.nvars(), 0).pow(d - i);
        }
        EXPECT_EQ(de.M.from_new_coords(rehom), F);
    }
}

TEST(HomogenizeElement, Examples) {
    auto g = parse_poly<Rational>("y2 - y1^2", Side::T);
    EXPECT_EQ(homogenize_element(g, 2), parse_poly<Rational>("y0*y2 - y1^2", Side::T));
    auto y1 = parse_poly<Rational>("y1", Side::T);
    EXPECT_EQ(homogenize_element(y1, 1), y1);
    auto h = parse_poly<Rational>("1 + y1", Side::T);
    EXPECT_EQ(homogenize_element(h, 3), parse_poly<Rational>("y0^3 + y0^2*y1", Side::T));
    EXPECT_THROW(homogenize_element(g, 1), std::invalid_argument);
}

TEST(RandomForm, Contracts) {
    ModulusGuard g(2147483647ull);
    auto F = random_form<Fp>(2, 3, 12345);
    EXPECT_TRUE(F.is_homogeneous());
    EXPECT_EQ(F.degree(), 3);
    EXPECT_LE(F.term_count(), 10u);
    EXPECT_EQ(F, random_form<Fp>(2, 3, 12345));
    EXPECT_NE(F, random_form<Fp>(2, 3, 12346));
    auto Q = random_form<Rational>(3, 2, 5);
    for (const auto& [m, c] : Q.terms()) {
        EXPECT_LE(boost::multiprecision::abs(boost::multiprecision::numerator(c)), Int(1000));
        EXPECT_EQ(boost::multiprecision::denominator(c), Int(1));
    }
}

TEST(RandomForm, GenericCubicHilbert) {
    ModulusGuard g(2147483647ull);
    int generic = 0;
    const HilbertFunction expected{{1, 9, 9, 1}};
    for (std::uint64_t s = 0; s < 100; ++s) {
        if (hilbert_function(random_form<Fp>(8, 3, mix_seed(960, s))) == expected) ++generic;
    }
    EXPECT_GE(generic, 99);
}
