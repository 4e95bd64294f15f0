#pragma once

#include "sbar/lincomb.hpp"
#include "sbar/multi_index.hpp"
#include "sbar/vector_field.hpp"

#include <compare>
#include <functional>
#include <string>
#include <tuple>

namespace sbar {

/// Basis letter of Sbar_2: either d_2 or L_alpha with alpha in
/// Phi = Z^2_{>=-1} minus (-1,-1).
///
/// The total order is the PBW order used everywhere: d_2 first, then the L_alpha
/// with |alpha| >= 0 by (|alpha|, alpha_1, alpha_2), then L_{(-1,0)} = partial_1,
/// and L_{(0,-1)} = -partial_2 last.
class Letter {
public:
    static Letter d2() { return Letter(true, {0, 0}); }
    /// Throws std::out_of_range when alpha is not in Phi.
    static Letter L(MultiIndex alpha);
    static Letter L(int a1, int a2) { return L({a1, a2}); }

    bool is_d2() const { return d2_; }
    MultiIndex index() const { return alpha_; }
    /// Grading by ad d: |alpha| for L_alpha, 0 for d_2.
    int degree() const { return d2_ ? 0 : alpha_.degree(); }
    /// True for the two degree -1 letters.
    bool is_partial() const { return !d2_ && alpha_.degree() == -1; }

    std::string str() const;

    bool operator==(const Letter&) const = default;
    std::strong_ordering operator<=>(const Letter& o) const { return sort_key() <=> o.sort_key(); }

private:
    Letter(bool d2, MultiIndex alpha) : d2_(d2), alpha_(alpha) {}
    std::tuple<int, int, int, int> sort_key() const
    {
        if (d2_)
            return {0, 0, 0, 0};
        const int deg = alpha_.degree();
        if (deg >= 0)
            return {1, deg, alpha_.first, alpha_.second};
        return {alpha_.first == -1 ? 2 : 3, 0, 0, 0};
    }

    bool d2_;
    MultiIndex alpha_;
};

struct LetterHash {
    std::size_t operator()(const Letter& l) const noexcept
    {
        return l.is_d2() ? 0x9e3779b9u : MultiIndexHash{}(l.index()) * 31 + 7;
    }
};

bool in_phi(MultiIndex alpha);

/// Element of Sbar_2 in the basis {d_2} u {L_alpha}.
using SbarElement = LinComb<Letter>;

/// d_1 = L_(0,0) + d_2.
SbarElement sbar_d1();
/// d = d_1 + d_2 = L_(0,0) + 2 d_2.
SbarElement sbar_d();

/// (1+alpha_2) t^{alpha+e_1} partial_1 - (1+alpha_1) t^{alpha+e_2} partial_2, dropping
/// the terms whose coefficient vanishes. Throws std::out_of_range outside Phi.
VectorField l_basis(MultiIndex alpha);

VectorField to_vector_field(const Letter& l);
VectorField to_vector_field(const SbarElement& x);

/// Inverse of to_vector_field on Sbar_2. Throws std::invalid_argument when the
/// field does not have constant divergence.
SbarElement from_vector_field(const VectorField& v);

/// Structure constants: [L_a, L_b] = det(1+a_2, 1+a_1; 1+b_2, 1+b_1) L_{a+b},
/// [d_2, L_a] = a_2 L_a. A bracket landing on (-1,-1) is 0 (L_{(-1,-1)} is the zero field).
SbarElement sbar_bracket(const Letter& x, const Letter& y);
SbarElement sbar_bracket(const SbarElement& x, const SbarElement& y);

std::string to_string(const SbarElement& x);

} // namespace sbar
