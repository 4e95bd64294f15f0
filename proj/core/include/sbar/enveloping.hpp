#pragma once

#include "sbar/lincomb.hpp"
#include "sbar/multi_index.hpp"
#include "sbar/pbw.hpp"
#include "sbar/sbar.hpp"

#include <compare>
#include <span>
#include <string>

namespace sbar {

struct SbarBasis {
    using Letter = sbar::Letter;
    using LetterHash = sbar::LetterHash;
    static SbarElement bracket(const Letter& x, const Letter& y) { return sbar_bracket(x, y); }
};

/// U(Sbar_2) in PBW normal form. Because the two partial letters sort last,
/// every word reads head * partial_1^k * (-partial_2)^l.
using UEnv = Pbw<SbarBasis>;
using PBWWord = UEnv::Word;
using UEnvElement = UEnv::Element;

UEnvElement u_letter(const Letter& l, const Scalar& c = 1);
UEnvElement u_from_sbar(const SbarElement& x);
inline UEnvElement u_one() { return UEnv::one(); }
inline UEnvElement u_scalar(const Scalar& c) { return UEnv::scalar(c); }
/// d_1 and d_2 as enveloping elements.
UEnvElement u_d(int i);
/// partial_i (partial_2 is -L_(0,-1)).
UEnvElement u_partial(int i);
/// h^m = d_1^{m_1} d_2^{m_2}.
UEnvElement u_h_power(MultiIndex m);

UEnvElement pbw_normalize(std::span<const Letter> seq, const Scalar& c = 1);
UEnvElement u_mul(const UEnvElement& x, const UEnvElement& y);
UEnvElement u_commutator(const UEnvElement& x, const UEnvElement& y);
UEnvElement u_pow(const UEnvElement& x, int n);

bool has_partial_letter(const PBWWord& w);
/// True when no word uses a degree -1 letter, i.e. the element lies in U(Sbar_2^{>=0}).
bool in_nonneg_part(const UEnvElement& x);

/// "L(1,0)^2*d2" style; the empty word prints as "1".
std::string word_str(const PBWWord& w);
std::string to_string(const UEnvElement& x);

/// Monomial head * partial_1^{m_1} partial_2^{m_2} of the localization U_(-1);
/// head avoids partial letters and the exponents may be negative.
struct LocMonomial {
    PBWWord head;
    MultiIndex partials;

    bool operator==(const LocMonomial&) const = default;
    std::strong_ordering operator<=>(const LocMonomial& o) const
    {
        if (auto c = head <=> o.head; c != 0)
            return c;
        if (auto c = partials.first <=> o.partials.first; c != 0)
            return c;
        return partials.second <=> o.partials.second;
    }
};

using LocElement = LinComb<LocMonomial>;

LocElement loc_one();
LocElement loc_scalar(const Scalar& c);
/// partial_1^{m_1} partial_2^{m_2}, m in Z^2.
LocElement loc_partial_power(MultiIndex m, const Scalar& c = 1);
/// Reads trailing partial letters off each PBW word.
LocElement to_loc(const UEnvElement& x);
/// Inverse of to_loc on elements without negative exponents; throws std::domain_error otherwise.
UEnvElement from_loc(const LocElement& x);

/// Product in U_(-1). Partial powers of the left factor are moved across the
/// right factor with partial^m u = sum_k binom(m,k) (ad partial)^k(u) partial^{m-k};
/// ad partial_i is locally nilpotent and the expansion is capped at `guard` steps.
LocElement loc_mul(const LocElement& x, const LocElement& y, int guard = 64);
LocElement loc_commutator(const LocElement& x, const LocElement& y);

std::string to_string(const LocElement& x);

/// Residue class u v_1 in Q_1 = U(Sbar_2) (x) C_1, stored as a combination of
/// partial-free PBW words.
using Q1Element = LinComb<PBWWord>;

Q1Element q1_generator();
/// Substitutes partial_i -> 1 after moving partials to the right.
Q1Element reduce_mod_I1(const UEnvElement& x);
Q1Element q1_act(const UEnvElement& x, const Q1Element& q);
/// Localized action: partial_i^{-1} acts as sum_k (-1)^k (partial_i - 1)^k, a finite sum on
/// every vector. Throws std::logic_error when the series does not terminate within `guard`.
Q1Element q1_act(const LocElement& x, const Q1Element& q, int guard = 64);
UEnvElement q1_lift(const Q1Element& q);

} // namespace sbar
