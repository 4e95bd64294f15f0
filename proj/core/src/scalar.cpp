#include "sbar/scalar.hpp"

#include <stdexcept>

namespace sbar {

std::string to_string(const Scalar& s) { return s.get_str(10); }

Scalar parse_scalar(std::string_view text)
{
    const std::string str(text);
    if (str.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = str.find('/');
    auto check_digits = [&](std::string_view part, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
            ++i;
        if (i == part.size())
            throw std::invalid_argument("malformed rational literal '" + str + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw std::invalid_argument("malformed rational literal '" + str + "'");
    };
    if (slash == std::string::npos) {
        check_digits(str, true);
        return Scalar(mpz_class(str[0] == '+' ? str.substr(1) : str, 10));
    }
    const std::string num = str.substr(0, slash);
    const std::string den = str.substr(slash + 1);
    check_digits(num, true);
    check_digits(den, false);
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + str + "'");
    Scalar s(n, d);
    s.canonicalize();
    return s;
}

Scalar binomial(long n, long k)
{
    if (k < 0)
        return 0;
    Scalar r = 1;
    for (long i = 0; i < k; ++i) {
        r *= Scalar(n - i);
        r /= Scalar(i + 1);
    }
    return r;
}

Scalar binomial_nonneg(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Scalar(r);
}

Scalar power(const Scalar& base, long exponent)
{
    if (exponent < 0) {
        if (is_zero(base))
            throw std::domain_error("zero raised to a negative power");
        Scalar inv = 1 / base;
        return power(inv, -exponent);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Scalar r(n, d);
    r.canonicalize();
    return r;
}

} // namespace sbar
