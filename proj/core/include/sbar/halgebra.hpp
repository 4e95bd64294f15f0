#pragma once

#include "sbar/enveloping.hpp"
#include "sbar/gl2.hpp"
#include "sbar/poly2.hpp"
#include "sbar/tmodule.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace sbar {

/// Indices alpha in Z^2_{>=-1} with |alpha| >= 0 and alpha != 0.
bool is_y_index(MultiIndex alpha);
/// All Y indices with |alpha| <= max_degree, in (|alpha|, alpha_1, alpha_2) order.
std::vector<MultiIndex> y_indices(int max_degree);
/// The four generators (1,-1), (-1,1), (1,0), (0,1).
std::array<MultiIndex, 4> y_generators();

/// Coefficient polynomial g_gamma(d_1, d_2) of Y_alpha = sum_gamma T_gamma g_gamma(d) partial^gamma:
/// g_alpha = 1, g_0 is the constant tail, and for 0 <= |gamma| < |alpha|, gamma != 0,
///   g_gamma = (-1)^{|alpha-gamma|} binom(alpha+1, gamma+1)
///             prod_{m=0}^{alpha_1-gamma_1-1} (d_1 - m) prod_{m=0}^{alpha_2-gamma_2-1} (d_2 - m).
/// Any other gamma gives 0.
HPoly g_poly(MultiIndex alpha, MultiIndex gamma);

/// Indices gamma with nonzero g_gamma for the given alpha (including alpha and 0 when present).
std::vector<MultiIndex> y_support(MultiIndex alpha);

/// g(d_1, d_2) as an element of U(Sbar_2); d_1 and d_2 commute.
UEnvElement h_poly_to_u(const HPoly& p);

/// Y_alpha in the localization. Throws std::out_of_range for an invalid index.
LocElement y_element(MultiIndex alpha);

/// xi(Y_alpha): Y_alpha with the trailing partial powers removed, in U(Sbar_2^{>=0}).
UEnvElement xi_y(MultiIndex alpha);

struct CentralizerReport {
    LocElement with_partial1;
    LocElement with_partial2;
    LocElement with_d1;
    LocElement with_d2;
    bool all_zero() const
    {
        return with_partial1.is_zero() && with_partial2.is_zero() && with_d1.is_zero() && with_d2.is_zero();
    }
};

/// [partial_i, Y_alpha] and [d_i, Y_alpha] for i = 1, 2.
CentralizerReport centralizer_check(MultiIndex alpha);

/// The two identities satisfied by the g polynomials of Y_alpha:
///   g_b(d_1+1,d_2) - g_b(d_1,d_2) + (b_1+2) g_{b+e_1}(d_1,d_2)       for admissible b,
///   g_0(d_1+1,d_2) - g_0 + 2(d_1-d_2) g_(1,0) - 2 g_(1,-1)(d_1,d_2+1).
/// Returns the residuals (all zero when the identities hold), the tail identity last.
std::vector<std::pair<MultiIndex, HPoly>> g_recurrence_residuals(MultiIndex alpha);

/// pi_1(Y_alpha) = pi(xi(Y_alpha)) in U(gl_2); letters of degree >= 1 vanish.
UGl2Element pi1(MultiIndex alpha);
Matrix pi1_matrix(MultiIndex alpha, const Gl2Module& v);

struct WhCompare {
    Matrix on_whittaker; // Y_alpha on 1 (x) v_0 .. 1 (x) v_n inside T(A_2^1, V)
    Matrix via_pi1;      // pi_1(Y_alpha) on v_0 .. v_n
    bool equal() const { return on_whittaker == via_pi1; }
};

WhCompare wh_action_compare(MultiIndex alpha, const Gl2Module& v);

struct YBasisReport {
    std::size_t monomials = 0;
    std::size_t rank = 0;
    bool independent() const { return rank == monomials; }
};

/// Rank of the ordered monomials Y_{a_1} ... Y_{a_k}, 1 <= k <= max_length,
/// a_1 <= ... <= a_k in (|alpha|, alpha_1, alpha_2) order.
YBasisReport y_basis_probe(std::vector<MultiIndex> window, int max_length);

struct YWordTerm {
    std::vector<MultiIndex> word; // empty word = 1
    Scalar coeff;
};

/// Writes Y_target as a combination of products of the four generators of length <= max_length
/// (all words, the empty word included). nullopt means not found within the bound.
std::optional<std::vector<YWordTerm>> y_generation_search(MultiIndex target, int max_length);

} // namespace sbar
