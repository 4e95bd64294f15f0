#include "oracles.hpp"

#include <sbar/sbar.hpp>
#include <sbar/vector_field.hpp>

#include <gtest/gtest.h>

using namespace sbar;

namespace {

VectorField mono(int a, int b, int dir, const Scalar& c = 1) { return VectorField::monomial({a, b}, dir, c); }
SbarElement L(int a, int b, const Scalar& c = 1) { return SbarElement(Letter::L(a, b), c); }

std::vector<oracle::Poly> probes()
{
    // every monomial of degree <= 4 separates polynomial vector fields of small degree
    std::vector<oracle::Poly> out;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b)
            out.push_back({{{a, b}, 1}});
    return out;
}

TEST(LBasis, Examples)
{
    EXPECT_EQ(l_basis({1, -1}), mono(1, 0, 2, -2));
    EXPECT_EQ(l_basis({-1, 0}), VectorField::partial(1));
    EXPECT_EQ(l_basis({0, 0}), mono(1, 0, 1) - mono(0, 1, 2));
    EXPECT_EQ(l_basis({1, 0}), mono(2, 0, 1) + mono(1, 1, 2, -2));
    EXPECT_THROW(l_basis({-1, -1}), std::out_of_range);
    EXPECT_THROW(l_basis({-2, 3}), std::out_of_range);
}

TEST(LBasis, MatchesDefinitionOnPolynomials)
{
    for (int deg = -1; deg <= 5; ++deg)
        for (int a1 = -1; a1 <= deg + 1; ++a1) {
            if (!in_phi({a1, deg - a1}))
                continue;
            const Letter l = Letter::L(a1, deg - a1);
            for (const auto& f : probes())
                EXPECT_EQ(oracle::apply_field(l_basis(l.index()), f), oracle::apply_letter(l, f)) << l.str();
        }
}

TEST(VfBracket, Examples)
{
    EXPECT_TRUE(vf_bracket(VectorField::partial(1), VectorField::partial(2)).is_zero());
    EXPECT_EQ(vf_bracket(mono(1, 0, 2), mono(0, 1, 1)), mono(1, 0, 1) - mono(0, 1, 2));
    const VectorField d = VectorField::euler(1) + VectorField::euler(2);
    EXPECT_EQ(vf_bracket(d, l_basis({2, 0})), l_basis({2, 0}) * Scalar(2));
}

TEST(VfBracket, AgreesWithCommutatorOfDerivations)
{
    oracle::Gen g(21);
    for (int i = 0; i < 100; ++i) {
        VectorField x, y;
        for (int k = 0; k < 3; ++k) {
            x += mono(g.integer(0, 2), g.integer(0, 2), g.integer(1, 2), g.scalar());
            y += mono(g.integer(0, 2), g.integer(0, 2), g.integer(1, 2), g.scalar());
        }
        const VectorField b = vf_bracket(x, y);
        for (const auto& f : probes()) {
            const auto lhs = oracle::apply_field(b, f);
            const auto rhs = oracle::plus(oracle::apply_field(x, oracle::apply_field(y, f)),
                                          oracle::apply_field(y, oracle::apply_field(x, f)), -1);
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(SbarBracket, Examples)
{
    EXPECT_EQ(sbar_bracket(Letter::L(1, -1), Letter::L(-1, 1)), L(0, 0, -4));
    EXPECT_TRUE(sbar_bracket(Letter::L(2, 1), Letter::L(2, 1)).is_zero());
    EXPECT_EQ(sbar_bracket(Letter::L(-1, 0), Letter::L(1, 0)), L(0, 0, 2));
    EXPECT_EQ(sbar_bracket(Letter::d2(), Letter::L(1, 3)), L(1, 3, 3));
    EXPECT_EQ(sbar_bracket(Letter::L(1, 0), Letter::L(0, 1)), L(1, 1, -3));
    EXPECT_EQ(sbar_bracket(Letter::L(1, -1), Letter::L(0, 1)), L(1, 0, -4));
}

TEST(SbarBracket, LandingOnMinusOneMinusOneIsZero)
{
    // the only pair in Phi summing to (-1,-1); its determinant is 1, the field bracket is 0
    EXPECT_TRUE(sbar_bracket(Letter::L(-1, 0), Letter::L(0, -1)).is_zero());
    EXPECT_TRUE(sbar_bracket(Letter::L(0, -1), Letter::L(-1, 0)).is_zero());
    EXPECT_TRUE(vf_bracket(l_basis({-1, 0}), l_basis({0, -1})).is_zero());
}

TEST(SbarBracket, DerivedElementsD1D)
{
    EXPECT_EQ(to_vector_field(sbar_d1()), VectorField::euler(1));
    EXPECT_EQ(to_vector_field(sbar_d()), VectorField::euler(1) + VectorField::euler(2));
}

TEST(Divergence, Examples)
{
    EXPECT_TRUE(divergence(l_basis({1, 0})).is_zero());
    EXPECT_EQ(divergence(to_vector_field(sbar_d())), Poly2::constant(2));
    EXPECT_EQ(divergence(mono(2, 0, 1)), Poly2::monomial({1, 0}, 2));
    EXPECT_FALSE(has_constant_divergence(mono(2, 0, 1)));
    EXPECT_TRUE(has_constant_divergence(to_vector_field(sbar_d())));
}

TEST(Conversion, RoundTripAndRejection)
{
    oracle::Gen g(22);
    for (int i = 0; i < 100; ++i) {
        SbarElement x;
        for (int k = 0; k < 4; ++k)
            x.add_term(g.letter(4), g.scalar());
        EXPECT_EQ(from_vector_field(to_vector_field(x)), x);
    }
    EXPECT_THROW(from_vector_field(mono(2, 0, 1)), std::invalid_argument);
    EXPECT_EQ(from_vector_field(VectorField::euler(2)), SbarElement(Letter::d2()));
    EXPECT_EQ(from_vector_field(VectorField::euler(1)), sbar_d1());
}

TEST(Twist, ScalingExamples)
{
    const Scalar a1 = make_scalar(2), a2 = make_scalar(-5, 3);
    EXPECT_EQ(scaling_twist(a1, a2, VectorField::partial(1)), VectorField::partial(1) * a1);
    EXPECT_EQ(scaling_twist(a1, a2, VectorField::partial(2)), VectorField::partial(2) * a2);
    EXPECT_EQ(scaling_twist(a1, a2, VectorField::euler(1)), VectorField::euler(1));
    EXPECT_EQ(scaling_twist(a1, a2, VectorField::euler(2)), VectorField::euler(2));
    EXPECT_EQ(scaling_twist(2, 3, l_basis({1, -1})), mono(1, 0, 2, -3));
    EXPECT_THROW(scaling_twist(0, 1, VectorField::partial(1)), std::invalid_argument);
}

TEST(Twist, UnipotentExamples)
{
    EXPECT_EQ(unipotent_twist(make_scalar(7, 3), VectorField::partial(1)), VectorField::partial(1));
    EXPECT_EQ(unipotent_twist(-1, VectorField::partial(2)), VectorField::partial(2) + VectorField::partial(1));
    EXPECT_EQ(unipotent_twist(-1, VectorField::euler(2)), VectorField::euler(2) + mono(0, 1, 1));
}

TEST(Twist, UnipotentMatchesConjugationSeries)
{
    // test-side sum_k c^k/k! (ad t2 p1)^k x
    const VectorField n = mono(0, 1, 1);
    oracle::Gen g(23);
    for (int i = 0; i < 50; ++i) {
        const Letter l = g.letter(4);
        const VectorField x = to_vector_field(l);
        const Scalar c = g.scalar();
        VectorField sum, term = x;
        Scalar coeff = 1;
        for (int k = 0; !term.is_zero(); ++k) {
            sum += term * coeff;
            term = vf_bracket(n, term);
            coeff = coeff * c / (k + 1);
        }
        EXPECT_EQ(unipotent_twist(c, x), sum) << l.str();
    }
}

} // namespace
