#pragma once

#include "sbar/lincomb.hpp"
#include "sbar/multi_index.hpp"
#include "sbar/poly2.hpp"

#include <compare>
#include <string>

namespace sbar {

/// The monomial field t^exponent * partial_direction.
struct FieldMonomial {
    MultiIndex exponent;
    int direction = 1; // 1 or 2

    bool operator==(const FieldMonomial&) const = default;
    std::strong_ordering operator<=>(const FieldMonomial& o) const
    {
        if (auto c = exponent <=> o.exponent; c != 0)
            return c;
        return direction <=> o.direction;
    }
};

/// Element of W_2: a finite combination of monomial fields with exponents in Z_+^2.
class VectorField : public LinComb<FieldMonomial> {
public:
    using LinComb::LinComb;
    VectorField(const LinComb<FieldMonomial>& base) : LinComb(base) {}

    /// c * t^exponent * partial_direction; rejects exponents outside Z_+^2.
    static VectorField monomial(MultiIndex exponent, int direction, const Scalar& c = 1);
    static VectorField partial(int i) { return monomial({0, 0}, i); }
    /// d_i = t_i partial_i
    static VectorField euler(int i) { return monomial(unit(i), i); }

    /// Components p_1, p_2 of p_1 partial_1 + p_2 partial_2.
    Poly2 component(int i) const;

    /// Derivation action on a polynomial in t.
    Poly2 apply(const Poly2& f) const;

    std::string str() const;
};

/// [t^a partial_i, t^b partial_j] = b_i t^{a+b-e_i} partial_j - a_j t^{a+b-e_j} partial_i, extended bilinearly.
VectorField vf_bracket(const VectorField& x, const VectorField& y);

/// partial_1(p_1) + partial_2(p_2).
Poly2 divergence(const VectorField& x);
bool has_constant_divergence(const VectorField& x);

/// t^alpha partial_j -> a_j a_1^{-alpha_1} a_2^{-alpha_2} t^alpha partial_j.
/// This is exp(ad(-b_1 d_1 - b_2 d_2)) written with a_i = e^{b_i}.
/// Throws std::invalid_argument for a zero scale factor.
VectorField scaling_twist(const Scalar& a1, const Scalar& a2, const VectorField& x);

/// sum_k c^k/k! (ad t_2 partial_1)^k (x). The series terminates because
/// ad(t_2 partial_1) lowers the t_1-minus-t_2 weight; a runaway expansion
/// throws std::logic_error after `guard` steps.
VectorField unipotent_twist(const Scalar& c, const VectorField& x, int guard = 64);

} // namespace sbar
