#pragma once

#include "sbar/enveloping.hpp"
#include "sbar/weyl.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sbar {

/// Basis monomial of D_2 (x) U(Sbar_2^{>=0}).
struct TensorMonomial {
    WeylMonomial weyl;
    PBWWord env;

    bool operator==(const TensorMonomial&) const = default;
    std::strong_ordering operator<=>(const TensorMonomial& o) const
    {
        if (auto c = weyl <=> o.weyl; c != 0)
            return c;
        return env <=> o.env;
    }
};

using TensorAlgElement = LinComb<TensorMonomial>;

TensorAlgElement tensor(const WeylElement& w, const UEnvElement& u);
TensorAlgElement tensor_one();
/// (w (x) u)(w' (x) u') = ww' (x) uu'; the two factors commute.
TensorAlgElement tensor_mul(const TensorAlgElement& x, const TensorAlgElement& y);
TensorAlgElement tensor_commutator(const TensorAlgElement& x, const TensorAlgElement& y);
std::string to_string(const TensorAlgElement& x);

/// Generator of the smash product A_2 # U(Sbar_2): t^beta, d_2, or L_alpha.
struct SmashGenerator {
    enum class Kind { Poly, D2, L };
    Kind kind;
    MultiIndex index; // beta for Poly, alpha for L

    static SmashGenerator t(MultiIndex beta);
    static SmashGenerator d2() { return {Kind::D2, {0, 0}}; }
    static SmashGenerator L(MultiIndex alpha);
    static SmashGenerator from_letter(const Letter& l);

    bool is_lie() const { return kind != Kind::Poly; }
    Letter letter() const;
    std::string str() const;
};

/// phi(t^beta) = t^beta (x) 1, phi(d_2) = d_2 (x) 1 + 1 (x) d_2,
/// phi(L_alpha) = L_alpha (x) 1 + sum_r binom(alpha+e_1+e_2, r) t^r (x) L_{alpha-r},
/// where r runs over Z_+^2 with alpha - r in Z^2_{>=-1} and |alpha - r| >= 0
/// (the r = 0 and r = alpha terms are both included).
TensorAlgElement phi(const SmashGenerator& g);
TensorAlgElement phi(const Letter& l);
TensorAlgElement phi(const SbarElement& x);
TensorAlgElement phi(const Poly2& p);

/// Relation defect of phi on a generator pair; zero iff phi respects the relation:
///   Lie pairs:    phi([x,y]) - [phi(x), phi(y)]
///   mixed pairs:  phi(x(t^beta)) - [phi(x), phi(t^beta)]   (x(t^beta) = derivation action)
///   poly pairs:   phi(t^a t^b) - phi(t^a) phi(t^b)
TensorAlgElement phi_hom_check(const SmashGenerator& x, const SmashGenerator& y);

/// {t^beta : |beta| <= max} u {d_2} u {L_alpha : alpha in Phi, |alpha| <= max}.
std::vector<SmashGenerator> smash_generators(int max_degree);

} // namespace sbar
