#pragma once

#include "sbar/lincomb.hpp"
#include "sbar/multi_index.hpp"

#include <string>

namespace sbar {

/// Commutative polynomial in two symbols; exponents live in Z_+^2.
/// Used both for the d-polynomials g(d1, d2) and for polynomials in t1, t2.
class Poly2 : public LinComb<MultiIndex> {
public:
    using LinComb::LinComb;
    Poly2(const LinComb<MultiIndex>& base) : LinComb(base) {}

    static Poly2 constant(const Scalar& c) { return Poly2(MultiIndex{0, 0}, c); }
    /// The i-th symbol (i = 1 or 2).
    static Poly2 variable(int i) { return Poly2(unit(i), 1); }
    static Poly2 monomial(MultiIndex exponent, const Scalar& c = 1);

    /// Highest total degree, -1 for the zero polynomial.
    int total_degree() const;
    bool is_constant() const;
    Scalar constant_term() const { return coeff({0, 0}); }

    /// Partial derivative with respect to symbol i.
    Poly2 derivative(int i) const;

    /// Pretty form using the two symbol names, e.g. "d1^2*d2 - 3/2".
    std::string str(const std::string& x1 = "d1", const std::string& x2 = "d2") const;
};

using HPoly = Poly2;

Poly2 poly_mul(const Poly2& p, const Poly2& q);

/// p(x1 + delta1, x2 + delta2), expanded exactly.
Poly2 poly_shift(const Poly2& p, MultiIndex delta);

/// prod_{k=lo}^{hi} (x_i - k); the empty product (hi < lo) is 1.
Poly2 falling_product(int i, int lo, int hi);

/// binom(alpha + 1, beta + 1) = binom(alpha1+1, beta1+1) * binom(alpha2+1, beta2+1),
/// zero whenever a lower entry is negative or exceeds its upper entry.
Scalar binomial_shifted(MultiIndex alpha, MultiIndex beta);

inline Poly2 operator*(const Poly2& p, const Poly2& q) { return poly_mul(p, q); }

} // namespace sbar
