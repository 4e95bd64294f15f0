#include "sbarlab/reference.hpp"

#include <sbar/sbar.hpp>

#include <stdexcept>
#include <vector>

namespace sbarlab {

using namespace sbar;

namespace {

// c * t^e * partial_i as an element of U(Sbar_2); only used for divergence-free sums
UEnvElement field(std::initializer_list<std::tuple<int, int, int, int>> terms)
{
    VectorField v;
    for (const auto& [c, a, b, i] : terms)
        v += VectorField::monomial({a, b}, i, c);
    return u_from_sbar(from_vector_field(v));
}

UEnvElement prod(std::initializer_list<UEnvElement> factors)
{
    UEnvElement out = u_one();
    for (const auto& f : factors)
        out = u_mul(out, f);
    return out;
}

struct Term {
    UEnvElement head;
    MultiIndex partials;
};

std::vector<Term> terms(MultiIndex alpha)
{
    const UEnvElement t1p1 = field({{1, 1, 0, 1}});
    const UEnvElement t2p2 = field({{1, 0, 1, 2}});
    if (alpha == MultiIndex{1, -1})
        return {{field({{-2, 1, 0, 2}}), {1, -1}}, {t1p1 * Scalar(2), {0, 0}}};
    if (alpha == MultiIndex{-1, 1})
        return {{field({{2, 0, 1, 1}}), {-1, 1}}, {t2p2 * Scalar(-2), {0, 0}}};
    if (alpha == MultiIndex{1, 0})
        return {{field({{1, 2, 0, 1}, {-2, 1, 1, 2}}), {1, 0}},
                {prod({field({{2, 1, 0, 2}}), t2p2}), {1, -1}},
                {-prod({t1p1, t1p1}) - t1p1, {0, 0}}};
    if (alpha == MultiIndex{0, 1})
        return {{field({{2, 1, 1, 1}, {-1, 0, 2, 2}}), {0, 1}},
                {prod({field({{-2, 0, 1, 1}}), t1p1}), {-1, 1}},
                {prod({t2p2, t2p2}) + t2p2, {0, 0}}};
    throw std::out_of_range("no closed form recorded for Y" + alpha.str());
}

} // namespace

LocElement y_reference(MultiIndex alpha)
{
    LocElement out;
    for (const auto& t : terms(alpha))
        out += loc_mul(to_loc(t.head), loc_partial_power(t.partials));
    return out;
}

UEnvElement xi_reference(MultiIndex alpha)
{
    UEnvElement out;
    for (const auto& t : terms(alpha))
        out += t.head;
    return out;
}

UGl2Element pi1_reference(MultiIndex alpha)
{
    const auto E = [](int i, int j) { return UGl2::letter(gl_letter(i, j)); };
    const auto mul = [](const UGl2Element& a, const UGl2Element& b) { return UGl2::multiply(a, b); };
    if (alpha == MultiIndex{1, -1})
        return E(1, 2) * Scalar(-2) + E(1, 1) * Scalar(2);
    if (alpha == MultiIndex{-1, 1})
        return E(2, 1) * Scalar(2) - E(2, 2) * Scalar(2);
    if (alpha == MultiIndex{1, 0})
        return mul(E(1, 2), E(2, 2)) * Scalar(2) - mul(E(1, 1), E(1, 1)) - E(1, 1);
    if (alpha == MultiIndex{0, 1})
        return mul(E(2, 1), E(1, 1)) * Scalar(-2) + mul(E(2, 2), E(2, 2)) + E(2, 2);
    throw std::out_of_range("no closed form recorded for pi_1(Y" + alpha.str() + ")");
}

} // namespace sbarlab
