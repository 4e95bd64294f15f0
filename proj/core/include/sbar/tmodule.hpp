#pragma once

#include "sbar/enveloping.hpp"
#include "sbar/gl2.hpp"
#include "sbar/linalg.hpp"
#include "sbar/smash.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace sbar {

/// Basis vector t^exponent (x) v_k of T(A_2^a, V). The order is graded by
/// polynomial degree, so echelon pivots read off filtration dimensions.
struct TBasisKey {
    MultiIndex exponent;
    int k = 0;

    bool operator==(const TBasisKey&) const = default;
    std::strong_ordering operator<=>(const TBasisKey& o) const
    {
        if (auto c = exponent <=> o.exponent; c != 0)
            return c;
        return k <=> o.k;
    }
};

using TVector = LinComb<TBasisKey>;

/// Polynomial degree of the highest term, -1 for the zero vector.
int tvector_degree(const TVector& v);
std::string to_string(const TVector& v);

/// The gl_2 element attached to x in Sbar_2^{>=0} modulo Sbar_2^{>=1}:
/// L_(0,0) -> E11 - E22, L_(1,-1) -> -2 E12, L_(-1,1) -> 2 E21, d_2 -> E22,
/// and letters of degree >= 1 -> 0. Throws std::invalid_argument on a degree -1 component.
Gl2Element pi_iso(const Letter& l);
Gl2Element pi_iso(const SbarElement& x);
/// The induced algebra map U(Sbar_2^{>=0}) -> U(gl_2).
UGl2Element pi_iso(const UEnvElement& x);

/// Whittaker tensor module T(A_2^a, V(lambda)) with exact actions.
class TModule {
public:
    TModule(Scalar a1, Scalar a2, Gl2Module v);

    const Scalar& a1() const { return a1_; }
    const Scalar& a2() const { return a2_; }
    const Scalar& a(int i) const { return i == 1 ? a1_ : a2_; }
    const Gl2Module& gl2() const { return v_; }
    std::string label() const;

    TVector basis_vector(MultiIndex exponent, int k, const Scalar& c = 1) const;
    /// t^exponent (x) v_k for |exponent| <= max_degree and all k.
    std::vector<TBasisKey> slice(int max_degree) const;

    /// L_alpha(p (x) v) = L_alpha p (x) v + (1+a1)(1+a2) t^a p (x) (E11-E22) v
    ///                  + a2(1+a2) t^{a+e1-e2} p (x) E21 v - a1(1+a1) t^{a+e2-e1} p (x) E12 v,
    /// d_2(p (x) v) = d_2 p (x) v + p (x) E22 v, with L_alpha p computed in A_2^a.
    TVector act(const Letter& x, const TVector& w) const;
    TVector act(const SbarElement& x, const TVector& w) const;
    TVector act(const UEnvElement& x, const TVector& w) const;
    /// Localized action; negative partial powers need a_i != 0 (std::domain_error otherwise).
    TVector act(const LocElement& x, const TVector& w) const;
    /// partial_i^m for any integer m.
    TVector act_partial(int i, int m, const TVector& w) const;
    /// Multiplication by a polynomial in t.
    TVector act_poly(const Poly2& p, const TVector& w) const;
    /// Weyl element acting through the module's own t and partial actions.
    TVector act_weyl(const WeylElement& x, const TVector& w) const;
    /// D_2 (x) U(Sbar_2^{>=0}) acting factorwise: the Weyl part on A_2^a, the enveloping
    /// part on V through pi_iso.
    TVector act_tensor(const TensorAlgElement& x, const TVector& w) const;

    /// The matrix of pi_iso(x) on V in the basis v_0..v_n.
    Matrix gl2_matrix(const SbarElement& x) const;

private:
    Scalar a1_, a2_;
    Gl2Module v_;
    TVector act_basis(const Letter& x, const TBasisKey& b) const;
    void add_matrix_image(TVector& out, MultiIndex exponent, const Matrix& m, int k, const Scalar& c) const;
};

/// Exact basis of the Whittaker vectors (partial_i - a_i) w = 0 inside the slice of degree <= max_degree.
std::vector<TVector> whittaker_space(const TModule& m, int max_degree);

/// Whittaker vectors of type b for the module twisted by theta = unipotent_twist(c, .),
/// i.e. solutions of theta(partial_i) w = b_i w in the slice of degree <= max_degree.
std::vector<TVector> twisted_whittaker_space(const TModule& m, const Scalar& c, const Scalar& b1, const Scalar& b2,
                                             int max_degree);

struct FreenessReport {
    int monomials = 0;
    std::size_t dim_v = 0;
    std::size_t rank = 0;
    bool full_rank() const { return rank == static_cast<std::size_t>(monomials) * dim_v; }
};

/// Rank of {h^m (1 (x) v_k) : |m| <= max_degree}.
FreenessReport uh_freeness_check(const TModule& m, int max_degree);

/// sigma^{m,j}_{alpha,beta} = sum_i (-1)^i binom(m,i) l_{alpha+(m-i)e_j} l_{beta+i e_j}, with
/// l_gamma = L_gamma on Phi and l_(-1,-1) = 0.
struct SigmaOperator {
    int m = 0;
    int j = 1;
    MultiIndex alpha;
    MultiIndex beta;
};

TVector sigma_act(const TModule& module, const SigmaOperator& op, const TVector& w);

struct SigmaSearchResult {
    std::optional<int> minimal_m;
    /// For each tried m: a witness operator and vector that did not vanish, if any.
    std::vector<std::optional<std::pair<SigmaOperator, TBasisKey>>> witnesses;
};

/// Smallest m <= max_m with sigma^{m,j}_{alpha,beta} w = 0 for all alpha, beta in Z^2_{>=-1}
/// with |alpha|, |beta| <= index_degree, j = 1, 2, and all basis w of degree <= vector_degree.
SigmaSearchResult sigma_annihilation_search(const TModule& module, int max_m, int index_degree, int vector_degree);

struct ClosureRow {
    int degree = 0;
    std::size_t closure_dim = 0;
    std::size_t ambient_dim = 0;
};

struct ClosureReport {
    int max_degree = 0;
    int generator_degree = 0;
    std::size_t total_dim = 0;
    std::vector<ClosureRow> rows; // degrees 0 .. max_degree - generator_degree
};

/// Span of the seeds under d_2 and all L_alpha with -1 <= |alpha| <= generator_degree.
/// Images of polynomial degree above max_degree are discarded, so every vector
/// kept is an exact element of the generated submodule; the rows report the
/// dimension of (closure intersect degree <= k) against the ambient slice.
ClosureReport closure_probe(const TModule& module, const std::vector<TVector>& seeds, int max_degree,
                            int generator_degree);
ClosureReport closure_probe(const TModule& module, const TVector& seed, int max_degree, int generator_degree);

/// Matrix of x in {d_2, L_(0,0), L_(1,-1), L_(-1,1)} on Whittaker vectors, through the part of
/// the action commuting with D_2: x acts as x_M - (Weyl realization of x), which is 1 (x) x
/// under phi. Columns are coordinates in `basis`; throws std::logic_error if the image leaves its span.
Matrix whittaker_gl2_action(const TModule& module, const Letter& x, const std::vector<TVector>& basis);

/// Matrix of a localized element on a family of vectors whose span it preserves.
Matrix action_matrix(const TModule& module, const LocElement& x, const std::vector<TVector>& basis);

} // namespace sbar
