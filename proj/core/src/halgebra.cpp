#include "sbar/halgebra.hpp"

#include "sbar/linalg.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sbar {

bool is_y_index(MultiIndex alpha)
{
    return alpha.is_ge_minus_one() && alpha.degree() >= 0 && alpha != MultiIndex{0, 0};
}

std::vector<MultiIndex> y_indices(int max_degree)
{
    std::vector<MultiIndex> out;
    for (int deg = 0; deg <= max_degree; ++deg)
        for (int a1 = -1; a1 <= deg + 1; ++a1)
            if (is_y_index({a1, deg - a1}))
                out.push_back({a1, deg - a1});
    return out;
}

std::array<MultiIndex, 4> y_generators() { return {MultiIndex{1, -1}, {-1, 1}, {1, 0}, {0, 1}}; }

namespace {

void require_index(MultiIndex alpha)
{
    if (!is_y_index(alpha))
        throw std::out_of_range("Y index " + alpha.str() + " needs alpha in Z^2_{>=-1}, |alpha| >= 0, alpha != 0");
}

Scalar sign(int e) { return e % 2 == 0 ? 1 : -1; }

HPoly g_zero(MultiIndex alpha)
{
    const int a1 = alpha.first, a2 = alpha.second, n = alpha.degree();
    HPoly out;
    out.add_scaled(falling_product(1, -1, a1 - 1) * falling_product(2, 0, a2 - 1), sign(n) * a1 * (a2 + 1));
    out.add_scaled(falling_product(1, 0, a1 - 1) * falling_product(2, -1, a2 - 1), sign(n - 1) * (a1 + 1) * a2);
    return out;
}

} // namespace

HPoly g_poly(MultiIndex alpha, MultiIndex gamma)
{
    require_index(alpha);
    if (gamma == alpha)
        return HPoly::constant(1);
    if (gamma == MultiIndex{0, 0})
        return g_zero(alpha);
    if (!gamma.is_ge_minus_one() || gamma.degree() < 0 || gamma.degree() >= alpha.degree())
        return {};
    const Scalar c = sign((alpha - gamma).degree()) * binomial_shifted(alpha, gamma);
    if (is_zero(c))
        return {};
    HPoly out = falling_product(1, 0, alpha.first - gamma.first - 1) * falling_product(2, 0, alpha.second - gamma.second - 1);
    out *= c;
    return out;
}

std::vector<MultiIndex> y_support(MultiIndex alpha)
{
    require_index(alpha);
    std::vector<MultiIndex> out;
    for (int deg = 0; deg <= alpha.degree(); ++deg)
        for (int g1 = -1; g1 <= deg + 1; ++g1) {
            const MultiIndex gamma{g1, deg - g1};
            if (gamma.is_ge_minus_one() && !g_poly(alpha, gamma).is_zero())
                out.push_back(gamma);
        }
    return out;
}

UEnvElement h_poly_to_u(const HPoly& p)
{
    UEnvElement out;
    for (const auto& [m, c] : p)
        out.add_scaled(u_h_power(m), c);
    return out;
}

namespace {

/// T_gamma g_gamma(d) for every gamma in the support.
std::vector<std::pair<MultiIndex, UEnvElement>> y_parts(MultiIndex alpha)
{
    std::vector<std::pair<MultiIndex, UEnvElement>> out;
    for (const auto& gamma : y_support(alpha)) {
        UEnvElement g = h_poly_to_u(g_poly(alpha, gamma));
        if (gamma != MultiIndex{0, 0})
            g = u_mul(u_letter(Letter::L(gamma)), g);
        out.emplace_back(gamma, std::move(g));
    }
    return out;
}

} // namespace

LocElement y_element(MultiIndex alpha)
{
    LocElement out;
    for (const auto& [gamma, head] : y_parts(alpha))
        for (const auto& [w, c] : head)
            out.add_term(LocMonomial{w, gamma}, c);
    return out;
}

UEnvElement xi_y(MultiIndex alpha)
{
    UEnvElement out;
    for (const auto& [gamma, head] : y_parts(alpha))
        out += head;
    return out;
}

CentralizerReport centralizer_check(MultiIndex alpha)
{
    const LocElement y = y_element(alpha);
    CentralizerReport r;
    r.with_partial1 = loc_commutator(loc_partial_power(e1), y);
    r.with_partial2 = loc_commutator(loc_partial_power(e2), y);
    r.with_d1 = loc_commutator(to_loc(u_d(1)), y);
    r.with_d2 = loc_commutator(to_loc(u_d(2)), y);
    return r;
}

std::vector<std::pair<MultiIndex, HPoly>> g_recurrence_residuals(MultiIndex alpha)
{
    require_index(alpha);
    std::vector<std::pair<MultiIndex, HPoly>> out;
    for (int deg = 0; deg < alpha.degree(); ++deg)
        for (int b1 = -1; b1 <= deg + 1; ++b1) {
            const MultiIndex beta{b1, deg - b1};
            if (!is_y_index(beta))
                continue;
            const HPoly g = g_poly(alpha, beta);
            HPoly r = poly_shift(g, e1) - g;
            r.add_scaled(g_poly(alpha, beta + e1), b1 + 2);
            out.emplace_back(beta, r);
        }
    const HPoly g0 = g_zero(alpha);
    HPoly r = poly_shift(g0, e1) - g0;
    const HPoly d1_minus_d2 = HPoly::variable(1) - HPoly::variable(2);
    r.add_scaled(d1_minus_d2 * g_poly(alpha, {1, 0}), 2);
    r.add_scaled(poly_shift(g_poly(alpha, {1, -1}), e2), -2);
    out.emplace_back(MultiIndex{0, 0}, r);
    return out;
}

UGl2Element pi1(MultiIndex alpha) { return pi_iso(xi_y(alpha)); }

Matrix pi1_matrix(MultiIndex alpha, const Gl2Module& v) { return v.evaluate(pi1(alpha)); }

WhCompare wh_action_compare(MultiIndex alpha, const Gl2Module& v)
{
    const TModule module(1, 1, v);
    std::vector<TVector> basis;
    for (int k = 0; k < static_cast<int>(v.dim()); ++k)
        basis.push_back(module.basis_vector({0, 0}, k));
    return {action_matrix(module, y_element(alpha), basis), pi1_matrix(alpha, v)};
}

YBasisReport y_basis_probe(std::vector<MultiIndex> window, int max_length)
{
    for (const auto& a : window)
        require_index(a);
    std::sort(window.begin(), window.end());
    window.erase(std::unique(window.begin(), window.end()), window.end());
    std::vector<LocElement> ys;
    for (const auto& a : window)
        ys.push_back(y_element(a));

    YBasisReport report;
    EchelonBasis<LocMonomial> eb;
    std::function<void(std::size_t, int, const LocElement&)> extend = [&](std::size_t from, int length,
                                                                          const LocElement& prefix) {
        if (length == max_length)
            return;
        for (std::size_t i = from; i < ys.size(); ++i) {
            const LocElement next = length == 0 ? ys[i] : loc_mul(prefix, ys[i]);
            ++report.monomials;
            eb.insert(next);
            extend(i, length + 1, next);
        }
    };
    extend(0, 0, loc_one());
    report.rank = eb.rank();
    return report;
}

std::optional<std::vector<YWordTerm>> y_generation_search(MultiIndex target, int max_length)
{
    const auto gens = y_generators();
    std::array<LocElement, 4> ys;
    for (std::size_t i = 0; i < gens.size(); ++i)
        ys[i] = y_element(gens[i]);

    std::vector<std::vector<MultiIndex>> words{{}};
    std::vector<LocElement> values{loc_one()};
    for (std::size_t start = 0, length = 0; static_cast<int>(length) < max_length; ++length) {
        const std::size_t end = words.size();
        for (std::size_t w = start; w < end; ++w)
            for (std::size_t g = 0; g < gens.size(); ++g) {
                auto word = words[w];
                word.push_back(gens[g]);
                words.push_back(std::move(word));
                values.push_back(loc_mul(values[w], ys[g]));
            }
        start = end;
    }

    EchelonBasis<LocMonomial> eb(true);
    for (const auto& v : values)
        eb.insert(v);
    const auto comb = eb.solve(y_element(target));
    if (!comb)
        return std::nullopt;
    std::vector<YWordTerm> out;
    for (const auto& [i, c] : *comb)
        out.push_back({words[static_cast<std::size_t>(i)], c});
    return out;
}

} // namespace sbar
