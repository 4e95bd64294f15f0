#pragma once

#include "sbar/lincomb.hpp"
#include "sbar/multi_index.hpp"
#include "sbar/poly2.hpp"
#include "sbar/sbar.hpp"
#include "sbar/vector_field.hpp"

#include <compare>
#include <string>

namespace sbar {

/// Normally ordered Weyl monomial t^t_exp partial^d_exp.
struct WeylMonomial {
    MultiIndex t_exp;
    MultiIndex d_exp;

    bool operator==(const WeylMonomial&) const = default;
    std::strong_ordering operator<=>(const WeylMonomial& o) const
    {
        if (auto c = t_exp <=> o.t_exp; c != 0)
            return c;
        return d_exp <=> o.d_exp;
    }
};

/// Element of the Weyl algebra D_2, with t's stored to the left of partials.
using WeylElement = LinComb<WeylMonomial>;

WeylElement weyl_t(MultiIndex exponent, const Scalar& c = 1);
WeylElement weyl_partial(MultiIndex exponent, const Scalar& c = 1);
WeylElement weyl_one();
WeylElement weyl_from_poly(const Poly2& p);
/// t^a partial_i is already a normally ordered Weyl monomial.
WeylElement weyl_from_field(const VectorField& v);
WeylElement weyl_from_sbar(const SbarElement& x);

/// Product using [partial_i, t_j] = delta_ij.
WeylElement weyl_mul(const WeylElement& x, const WeylElement& y);
WeylElement weyl_commutator(const WeylElement& x, const WeylElement& y);

std::string to_string(const WeylElement& x);

/// A polynomial f(t) viewed in the twisted module A_2^a, where x acts by sigma_a(x):
/// t_i -> t_i, partial_i -> partial_i + a_i.
struct A2aVector {
    Poly2 poly;
    Scalar a1 = 0;
    Scalar a2 = 0;
};

/// sigma_a(x) applied to f; the result keeps the type vector of f.
A2aVector a2a_act(const WeylElement& x, const A2aVector& f);

/// (partial_i + a_i) applied to p.
Poly2 twisted_partial(int i, const Scalar& a, const Poly2& p);

} // namespace sbar
