#include "sbar/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace sbar {

namespace {

Scalar falling(int n, int k)
{
    Scalar r = 1;
    for (int i = 0; i < k; ++i)
        r *= (n - i);
    return r;
}

std::string power_str(const char* name, int e)
{
    if (e == 0)
        return "";
    return std::string(name) + (e == 1 ? "" : "^" + std::to_string(e));
}

} // namespace

WeylElement weyl_t(MultiIndex exponent, const Scalar& c)
{
    if (!exponent.is_nonneg())
        throw std::invalid_argument("Weyl exponent " + exponent.str() + " is not in Z_+^2");
    return WeylElement(WeylMonomial{exponent, {0, 0}}, c);
}

WeylElement weyl_partial(MultiIndex exponent, const Scalar& c)
{
    if (!exponent.is_nonneg())
        throw std::invalid_argument("Weyl exponent " + exponent.str() + " is not in Z_+^2");
    return WeylElement(WeylMonomial{{0, 0}, exponent}, c);
}

WeylElement weyl_one() { return WeylElement(WeylMonomial{{0, 0}, {0, 0}}, 1); }

WeylElement weyl_from_poly(const Poly2& p)
{
    WeylElement out;
    for (const auto& [m, c] : p)
        out.add_term(WeylMonomial{m, {0, 0}}, c);
    return out;
}

WeylElement weyl_from_field(const VectorField& v)
{
    WeylElement out;
    for (const auto& [m, c] : v)
        out.add_term(WeylMonomial{m.exponent, unit(m.direction)}, c);
    return out;
}

WeylElement weyl_from_sbar(const SbarElement& x) { return weyl_from_field(to_vector_field(x)); }

WeylElement weyl_mul(const WeylElement& x, const WeylElement& y)
{
    WeylElement out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            // partial^b t^c = sum_k binom(b,k) (c)_k t^{c-k} partial^{b-k}, per variable
            const MultiIndex b = mx.d_exp;
            const MultiIndex c = my.t_exp;
            for (int k1 = 0; k1 <= std::min(b.first, c.first); ++k1) {
                const Scalar f1 = binomial_nonneg(b.first, k1) * falling(c.first, k1);
                for (int k2 = 0; k2 <= std::min(b.second, c.second); ++k2) {
                    const Scalar f2 = binomial_nonneg(b.second, k2) * falling(c.second, k2);
                    const MultiIndex k{k1, k2};
                    out.add_term(WeylMonomial{mx.t_exp + c - k, b - k + my.d_exp}, cx * cy * f1 * f2);
                }
            }
        }
    }
    return out;
}

WeylElement weyl_commutator(const WeylElement& x, const WeylElement& y) { return weyl_mul(x, y) - weyl_mul(y, x); }

std::string to_string(const WeylElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : x) {
        const Scalar mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        std::string body;
        for (const auto& part : {power_str("t1", m.t_exp.first), power_str("t2", m.t_exp.second),
                                 power_str("p1", m.d_exp.first), power_str("p2", m.d_exp.second)}) {
            if (part.empty())
                continue;
            if (!body.empty())
                body += '*';
            body += part;
        }
        if (body.empty())
            os << to_string(mag);
        else if (mag == 1)
            os << body;
        else
            os << to_string(mag) << '*' << body;
    }
    return os.str();
}

Poly2 twisted_partial(int i, const Scalar& a, const Poly2& p)
{
    Poly2 out = p.derivative(i);
    out.add_scaled(p, a);
    return out;
}

A2aVector a2a_act(const WeylElement& x, const A2aVector& f)
{
    A2aVector out{{}, f.a1, f.a2};
    for (const auto& [m, c] : x) {
        Poly2 g = f.poly;
        for (int k = 0; k < m.d_exp.second; ++k)
            g = twisted_partial(2, f.a2, g);
        for (int k = 0; k < m.d_exp.first; ++k)
            g = twisted_partial(1, f.a1, g);
        for (const auto& [e, v] : g)
            out.poly.add_term(e + m.t_exp, v * c);
    }
    return out;
}

} // namespace sbar
