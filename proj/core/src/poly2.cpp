#include "sbar/poly2.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sbar {

Poly2 Poly2::monomial(MultiIndex exponent, const Scalar& c)
{
    if (!exponent.is_nonneg())
        throw std::invalid_argument("polynomial exponent " + exponent.str() + " is not in Z_+^2");
    return Poly2(exponent, c);
}

int Poly2::total_degree() const
{
    int d = -1;
    for (const auto& [m, c] : *this)
        d = std::max(d, m.degree());
    return d;
}

bool Poly2::is_constant() const { return total_degree() <= 0; }

Poly2 Poly2::derivative(int i) const
{
    Poly2 out;
    for (const auto& [m, c] : *this) {
        const int k = m[i - 1];
        if (k == 0)
            continue;
        out.add_term(m - unit(i), c * k);
    }
    return out;
}

std::string Poly2::str(const std::string& x1, const std::string& x2) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    // highest degree first
    for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        const bool unit_coeff = mag == 1;
        bool wrote = false;
        if (!unit_coeff || m.degree() == 0) {
            os << to_string(mag);
            wrote = true;
        }
        auto emit = [&](const std::string& name, int e) {
            if (e == 0)
                return;
            if (wrote)
                os << '*';
            os << name;
            if (e != 1)
                os << '^' << e;
            wrote = true;
        };
        emit(x1, m.first);
        emit(x2, m.second);
    }
    return os.str();
}

Poly2 poly_mul(const Poly2& p, const Poly2& q)
{
    Poly2 out;
    for (const auto& [mp, cp] : p)
        for (const auto& [mq, cq] : q)
            out.add_term(mp + mq, cp * cq);
    return out;
}

Poly2 poly_shift(const Poly2& p, MultiIndex delta)
{
    Poly2 out;
    for (const auto& [m, c] : p) {
        // (x1 + a)^m1 (x2 + b)^m2 expanded binomially
        for (int i = 0; i <= m.first; ++i) {
            const Scalar ci = binomial_nonneg(m.first, i) * power(Scalar(delta.first), m.first - i);
            if (is_zero(ci))
                continue;
            for (int j = 0; j <= m.second; ++j) {
                const Scalar cj = binomial_nonneg(m.second, j) * power(Scalar(delta.second), m.second - j);
                out.add_term({i, j}, c * ci * cj);
            }
        }
    }
    return out;
}

Poly2 falling_product(int i, int lo, int hi)
{
    Poly2 out = Poly2::constant(1);
    for (int k = lo; k <= hi; ++k) {
        Poly2 factor = Poly2::variable(i);
        factor.add_term({0, 0}, Scalar(-k));
        out = poly_mul(out, factor);
    }
    return out;
}

Scalar binomial_shifted(MultiIndex alpha, MultiIndex beta)
{
    return binomial_nonneg(alpha.first + 1, beta.first + 1) * binomial_nonneg(alpha.second + 1, beta.second + 1);
}

} // namespace sbar
