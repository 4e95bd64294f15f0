#include "oracles.hpp"

#include "sbarlab/reference.hpp"

#include <sbar/halgebra.hpp>

#include <gtest/gtest.h>

using namespace sbar;

namespace {

UGl2Element E(int i, int j) { return UGl2::letter(gl_letter(i, j)); }

TEST(YIndex, Range)
{
    EXPECT_TRUE(is_y_index({1, -1}));
    EXPECT_TRUE(is_y_index({-1, 1}));
    EXPECT_FALSE(is_y_index({0, 0}));
    EXPECT_FALSE(is_y_index({-1, 0}));
    EXPECT_FALSE(is_y_index({2, -2}));
    EXPECT_EQ(y_indices(1).size(), 2u + 4u);
    EXPECT_THROW(y_element({0, 0}), std::out_of_range);
}

TEST(YElement, Displays)
{
    for (const auto& a : y_generators()) {
        EXPECT_EQ(y_element(a), sbarlab::y_reference(a)) << a.str();
        EXPECT_EQ(xi_y(a), sbarlab::xi_reference(a)) << a.str();
    }
}

TEST(YElement, XiOfY1m1InLetters)
{
    const SbarElement want = SbarElement(Letter::L(1, -1)) + sbar_d1() * Scalar(2);
    EXPECT_EQ(xi_y({1, -1}), u_from_sbar(want));
}

TEST(YElement, XiDropsPartials)
{
    for (const auto& a : y_indices(3)) {
        UEnvElement dropped;
        for (const auto& [m, c] : y_element(a))
            dropped.add_term(m.head, c);
        EXPECT_EQ(xi_y(a), dropped);
        EXPECT_TRUE(in_nonneg_part(xi_y(a)));
    }
}

TEST(GPoly, TailAndLeading)
{
    const Poly2 d1 = Poly2::variable(1), one = Poly2::constant(1);
    EXPECT_EQ(g_poly({1, 0}, {1, 0}), one);
    EXPECT_EQ(g_poly({1, 0}, {0, 0}), Poly2::constant(-1) * (d1 + one) * d1);
    // Y_(1,-1) = L_(1,-1) p_1 p_2^{-1} + 2 d_1
    EXPECT_EQ(h_poly_to_u(g_poly({1, -1}, {0, 0})), u_d(1) * Scalar(2));
    EXPECT_TRUE(g_poly({1, 0}, {2, 0}).is_zero());
    EXPECT_TRUE(g_poly({1, 0}, {-1, -1}).is_zero());
}

TEST(GPoly, RecurrencesUpToFive)
{
    for (const auto& a : y_indices(5))
        for (const auto& [b, r] : g_recurrence_residuals(a))
            EXPECT_TRUE(r.is_zero()) << a.str() << " " << b.str() << " " << r.str();
}

TEST(Centralizer, Examples)
{
    for (const auto& a : {MultiIndex{1, -1}, MultiIndex{1, 0}, MultiIndex{2, 1}}) {
        const auto r = centralizer_check(a);
        EXPECT_TRUE(r.all_zero()) << a.str();
    }
}

TEST(Centralizer, InversePartials)
{
    for (const auto& a : y_indices(2))
        for (int i = 1; i <= 2; ++i)
            EXPECT_TRUE(loc_commutator(loc_partial_power(-unit(i)), y_element(a)).is_zero()) << a.str();
}

TEST(Centralizer, BrokenElementIsDetected)
{
    // dropping the tail of Y_(1,0) leaves something outside H
    LocElement y = y_element({1, 0});
    LocElement truncated;
    for (const auto& [m, c] : y)
        if (m.partials != MultiIndex{0, 0})
            truncated.add_term(m, c);
    EXPECT_FALSE(loc_commutator(loc_partial_power({1, 0}), truncated).is_zero());
}

TEST(Pi1, Displays)
{
    EXPECT_EQ(pi1({1, -1}), E(1, 2) * Scalar(-2) + E(1, 1) * Scalar(2));
    EXPECT_EQ(pi1({-1, 1}), E(2, 1) * Scalar(2) - E(2, 2) * Scalar(2));
    EXPECT_EQ(pi1({1, 0}), UGl2::multiply(E(1, 2), E(2, 2)) * Scalar(2) - UGl2::multiply(E(1, 1), E(1, 1)) - E(1, 1));
    EXPECT_EQ(pi1({0, 1}), sbarlab::pi1_reference({0, 1}));
}

TEST(Pi1, MatrixOnV10)
{
    const Matrix m = pi1_matrix({1, 0}, Gl2Module(1, 0));
    ASSERT_EQ(m.rows(), 2u);
    EXPECT_EQ(m(0, 0), -2);
    EXPECT_EQ(m(0, 1), 2);
    EXPECT_EQ(m(1, 0), 0);
    EXPECT_EQ(m(1, 1), 0);
}

TEST(Pi1, IsMultiplicativeOnGenerators)
{
    // pi_1(Y_a Y_b) = pi_1(Y_a) pi_1(Y_b)
    const auto gens = y_generators();
    for (const auto& a : gens)
        for (const auto& b : gens) {
            EXPECT_EQ(pi_iso(u_mul(xi_y(a), xi_y(b))), UGl2::multiply(pi1(a), pi1(b)));
        }
}

TEST(WhCompare, Examples)
{
    const auto zero = wh_action_compare({1, -1}, Gl2Module(0, 0));
    EXPECT_TRUE(zero.equal());
    EXPECT_TRUE(zero.on_whittaker.is_zero());
    EXPECT_EQ(zero.on_whittaker.rows(), 1u);
    EXPECT_TRUE(wh_action_compare({1, -1}, Gl2Module(1, 0)).equal());
    EXPECT_TRUE(wh_action_compare({0, 1}, Gl2Module(1, 0)).equal());
}

TEST(YBasis, Examples)
{
    EXPECT_EQ(y_basis_probe({{1, -1}, {-1, 1}}, 1).rank, 2u);
    EXPECT_EQ(y_basis_probe({}, 2).rank, 0u);
    const auto r = y_basis_probe(y_indices(1), 2);
    EXPECT_EQ(r.monomials, 6u + 21u);
    EXPECT_TRUE(r.independent());
}

TEST(YGeneration, Examples)
{
    const auto self = y_generation_search({1, -1}, 1);
    ASSERT_TRUE(self.has_value());
    ASSERT_EQ(self->size(), 1u);
    EXPECT_EQ(self->front().coeff, 1);

    const auto y11 = y_generation_search({1, 1}, 3);
    ASSERT_TRUE(y11.has_value());
    LocElement rebuilt;
    for (const auto& term : *y11) {
        LocElement w = loc_one();
        for (const auto& a : term.word)
            w = loc_mul(w, y_element(a));
        rebuilt += w * term.coeff;
    }
    EXPECT_EQ(rebuilt, y_element({1, 1}));

    EXPECT_FALSE(y_generation_search({2, -1}, 1).has_value());
}

} // namespace
