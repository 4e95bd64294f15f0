#include "sbar/vector_field.hpp"

#include <sstream>
#include <stdexcept>

namespace sbar {

VectorField VectorField::monomial(MultiIndex exponent, int direction, const Scalar& c)
{
    if (!exponent.is_nonneg())
        throw std::invalid_argument("field exponent " + exponent.str() + " is not in Z_+^2");
    if (direction != 1 && direction != 2)
        throw std::invalid_argument("field direction must be 1 or 2");
    return VectorField(FieldMonomial{exponent, direction}, c);
}

Poly2 VectorField::component(int i) const
{
    Poly2 out;
    for (const auto& [m, c] : *this)
        if (m.direction == i)
            out.add_term(m.exponent, c);
    return out;
}

Poly2 VectorField::apply(const Poly2& f) const
{
    Poly2 out;
    for (const auto& [m, c] : *this) {
        const Poly2 df = f.derivative(m.direction);
        for (const auto& [e, v] : df)
            out.add_term(e + m.exponent, c * v);
    }
    return out;
}

std::string VectorField::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms().rbegin(); it != terms().rend(); ++it) {
        const auto& [m, c] = *it;
        const Scalar mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            os << to_string(mag) << '*';
        if (m.exponent.first > 0)
            os << "t1" << (m.exponent.first > 1 ? "^" + std::to_string(m.exponent.first) : "") << '*';
        if (m.exponent.second > 0)
            os << "t2" << (m.exponent.second > 1 ? "^" + std::to_string(m.exponent.second) : "") << '*';
        os << 'p' << m.direction;
    }
    return os.str();
}

VectorField vf_bracket(const VectorField& x, const VectorField& y)
{
    VectorField out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            const int i = mx.direction;
            const int j = my.direction;
            const MultiIndex& a = mx.exponent;
            const MultiIndex& b = my.exponent;
            const Scalar c = cx * cy;
            if (b[i - 1] != 0)
                out.add_term({a + b - unit(i), j}, c * b[i - 1]);
            if (a[j - 1] != 0)
                out.add_term({a + b - unit(j), i}, -c * a[j - 1]);
        }
    }
    return out;
}

Poly2 divergence(const VectorField& x)
{
    Poly2 out = x.component(1).derivative(1);
    out += x.component(2).derivative(2);
    return out;
}

bool has_constant_divergence(const VectorField& x) { return divergence(x).is_constant(); }

VectorField scaling_twist(const Scalar& a1, const Scalar& a2, const VectorField& x)
{
    if (is_zero(a1) || is_zero(a2))
        throw std::invalid_argument("scaling twist needs nonzero factors");
    VectorField out;
    for (const auto& [m, c] : x) {
        const Scalar aj = m.direction == 1 ? a1 : a2;
        out.add_term(m, c * aj * power(a1, -m.exponent.first) * power(a2, -m.exponent.second));
    }
    return out;
}

VectorField unipotent_twist(const Scalar& c, const VectorField& x, int guard)
{
    const VectorField nilpotent = VectorField::monomial(e2, 1);
    VectorField out = x;
    VectorField term = x;
    for (int k = 1;; ++k) {
        term = vf_bracket(nilpotent, term) * (c / k);
        if (term.is_zero())
            break;
        if (k > guard)
            throw std::logic_error("unipotent twist: ad(t2 p1) failed to terminate");
        out += term;
    }
    return out;
}

} // namespace sbar
