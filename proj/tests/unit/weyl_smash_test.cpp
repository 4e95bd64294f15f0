#include "oracles.hpp"

#include <sbar/smash.hpp>
#include <sbar/tmodule.hpp>
#include <sbar/weyl.hpp>

#include <gtest/gtest.h>

using namespace sbar;

namespace {

WeylElement t(int a, int b, const Scalar& c = 1) { return weyl_t({a, b}, c); }
WeylElement p(int a, int b, const Scalar& c = 1) { return weyl_partial({a, b}, c); }
WeylElement tp(int ta, int tb, int da, int db, const Scalar& c = 1)
{
    return WeylElement(WeylMonomial{{ta, tb}, {da, db}}, c);
}

TEST(Weyl, Examples)
{
    EXPECT_EQ(weyl_mul(p(1, 0), t(1, 0)), tp(1, 0, 1, 0) + weyl_one());
    EXPECT_EQ(weyl_mul(tp(1, 0, 0, 1), tp(0, 1, 1, 0)), tp(1, 1, 1, 1) + tp(1, 0, 1, 0));
    EXPECT_EQ(weyl_mul(t(1, 0), t(0, 1)), t(1, 1));
}

TEST(Weyl, CanonicalCommutators)
{
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            const WeylElement c = weyl_commutator(weyl_partial(unit(i)), weyl_t(unit(j)));
            EXPECT_EQ(c, i == j ? weyl_one() : WeylElement());
        }
}

TEST(A2a, Examples)
{
    const A2aVector t1{Poly2::variable(1), 1, 1};
    EXPECT_EQ(a2a_act(p(1, 0), t1).poly, Poly2::constant(1) + Poly2::variable(1));
    EXPECT_EQ(a2a_act(weyl_from_field(VectorField::euler(1)), t1).poly,
              Poly2::variable(1) + Poly2::monomial({2, 0}));
    const A2aVector one{Poly2::constant(1), 0, 0};
    EXPECT_TRUE(a2a_act(p(1, 0), one).poly.is_zero());
    EXPECT_EQ(twisted_partial(2, 3, Poly2::monomial({0, 2})), Poly2::monomial({0, 1}, 2) + Poly2::monomial({0, 2}, 3));
}

TEST(Phi, Examples)
{
    EXPECT_EQ(phi(SmashGenerator::t({2, 1})), tensor(t(2, 1), u_one()));
    EXPECT_EQ(phi(SmashGenerator::d2()),
              tensor(weyl_from_field(VectorField::euler(2)), u_one()) + tensor(weyl_one(), u_letter(Letter::d2())));
    const TensorAlgElement want = tensor(weyl_from_sbar(SbarElement(Letter::L(1, 0))), u_one()) +
                                  tensor(weyl_one(), u_letter(Letter::L(1, 0))) +
                                  tensor(t(1, 0, 2), u_letter(Letter::L(0, 0))) +
                                  tensor(t(0, 1), u_letter(Letter::L(1, -1)));
    EXPECT_EQ(phi(Letter::L(1, 0)), want);
}

TEST(Phi, DegreeMinusOneLettersHaveNoEnvelopingPart)
{
    EXPECT_EQ(phi(Letter::L(-1, 0)), tensor(p(1, 0), u_one()));
    EXPECT_EQ(phi(Letter::L(0, -1)), tensor(p(0, 1, -1), u_one()));
}

TEST(Phi, HomCheckExamples)
{
    EXPECT_TRUE(phi_hom_check(SmashGenerator::L({-1, 0}), SmashGenerator::t({1, 0})).is_zero());
    EXPECT_TRUE(phi_hom_check(SmashGenerator::L({1, -1}), SmashGenerator::L({0, 1})).is_zero());
    EXPECT_TRUE(phi_hom_check(SmashGenerator::L({2, 1}), SmashGenerator::L({2, 1})).is_zero());
    EXPECT_TRUE(phi_hom_check(SmashGenerator::L({0, 0}), SmashGenerator::L({1, 0})).is_zero());
    EXPECT_TRUE(phi_hom_check(SmashGenerator::t({1, 2}), SmashGenerator::t({2, 0})).is_zero());
}

TEST(Phi, GeneratorList)
{
    const auto gens = smash_generators(1);
    // t: 1 + 2 monomials; d2; L: degree -1 (2), 0 (3), 1 (4)
    EXPECT_EQ(gens.size(), 3u + 1u + 9u);
}

TEST(Property, WeylAssociativeAndFaithful)
{
    oracle::Gen g(31);
    for (int i = 0; i < 100; ++i) {
        const WeylElement x = g.weyl(2, 3), y = g.weyl(2, 3), z = g.weyl(2, 3);
        EXPECT_EQ(weyl_mul(weyl_mul(x, y), z), weyl_mul(x, weyl_mul(y, z)));
        const oracle::Poly f = oracle::to_poly(g.poly(5, 6));
        EXPECT_EQ(oracle::apply_weyl(weyl_mul(x, y), f), oracle::apply_weyl(x, oracle::apply_weyl(y, f)));
    }
}

TEST(Property, A2aIsAModuleAction)
{
    oracle::Gen g(32);
    const std::vector<std::pair<int, int>> types{{1, 1}, {0, 0}, {2, -3}};
    for (const auto& [a1, a2] : types)
        for (int i = 0; i < 60; ++i) {
            const WeylElement x = g.weyl(2, 2), y = g.weyl(2, 2);
            const A2aVector f{g.poly(5, 5), a1, a2};
            const Poly2 lhs = a2a_act(x, a2a_act(y, f)).poly - a2a_act(y, a2a_act(x, f)).poly;
            EXPECT_EQ(lhs, a2a_act(weyl_commutator(x, y), f).poly);
        }
}

TEST(Property, PhiDisplayOnTensorModules)
{
    for (const auto& [l1, l2] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {1, 1}}) {
        const TModule m(1, 2, Gl2Module(l1, l2));
        for (int deg = -1; deg <= 3; ++deg)
            for (int a1 = -1; a1 <= deg + 1; ++a1) {
                if (!in_phi({a1, deg - a1}))
                    continue;
                const Letter l = Letter::L(a1, deg - a1);
                for (const auto& b : m.slice(3)) {
                    const TVector w(b, 1);
                    EXPECT_EQ(m.act_tensor(phi(l), w), m.act(l, w)) << l.str();
                }
            }
    }
}

} // namespace
