#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sbar {

/// Exact rational number, always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

/// Builds p/q and canonicalizes it.
inline Scalar make_scalar(long p, long q = 1)
{
    Scalar s(p, q);
    s.canonicalize();
    return s;
}

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// "p" or "p/q"; negative values carry a leading '-'.
std::string to_string(const Scalar& s);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text or zero denominator.
Scalar parse_scalar(std::string_view text);

/// Binomial coefficient for an arbitrary integer top and non-negative bottom
/// (generalized: n(n-1)...(n-k+1)/k!). Returns 0 for k < 0.
Scalar binomial(long n, long k);

/// Ordinary binomial restricted to 0 <= k <= n; 0 otherwise (including n < 0).
Scalar binomial_nonneg(long n, long k);

Scalar power(const Scalar& base, long exponent);

} // namespace sbar
