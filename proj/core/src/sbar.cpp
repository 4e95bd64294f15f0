#include "sbar/sbar.hpp"

#include <sstream>
#include <stdexcept>

namespace sbar {

bool in_phi(MultiIndex alpha) { return alpha.is_ge_minus_one() && alpha != MultiIndex{-1, -1}; }

Letter Letter::L(MultiIndex alpha)
{
    if (!in_phi(alpha))
        throw std::out_of_range("L index " + alpha.str() + " is outside Phi");
    return Letter(false, alpha);
}

std::string Letter::str() const
{
    if (d2_)
        return "d2";
    return "L(" + std::to_string(alpha_.first) + "," + std::to_string(alpha_.second) + ")";
}

SbarElement sbar_d1() { return SbarElement{{Letter::L(0, 0), 1}, {Letter::d2(), 1}}; }
SbarElement sbar_d() { return SbarElement{{Letter::L(0, 0), 1}, {Letter::d2(), 2}}; }

VectorField l_basis(MultiIndex alpha)
{
    if (!in_phi(alpha))
        throw std::out_of_range("L index " + alpha.str() + " is outside Phi");
    VectorField out;
    if (alpha.second != -1)
        out += VectorField::monomial(alpha + e1, 1, 1 + alpha.second);
    if (alpha.first != -1)
        out += VectorField::monomial(alpha + e2, 2, -(1 + alpha.first));
    return out;
}

VectorField to_vector_field(const Letter& l)
{
    return l.is_d2() ? VectorField::euler(2) : l_basis(l.index());
}

VectorField to_vector_field(const SbarElement& x)
{
    return x.map_linear<VectorField>([](const Letter& l) { return to_vector_field(l); });
}

SbarElement from_vector_field(const VectorField& v)
{
    const Poly2 div = divergence(v);
    if (!div.is_constant())
        throw std::invalid_argument("field " + v.str() + " has non-constant divergence " + div.str("t1", "t2"));
    SbarElement out;
    VectorField rest = v;
    // d_2 carries divergence 1 and every L_alpha is divergence free.
    const Scalar c = div.constant_term();
    if (!is_zero(c)) {
        out.add_term(Letter::d2(), c);
        rest -= VectorField::euler(2) * c;
    }
    // Clear partial_1 terms: t^b partial_1 is the leading term of L_{b-e_1} with coefficient 1+b_2.
    while (true) {
        const FieldMonomial* lead = nullptr;
        Scalar coeff;
        for (const auto& [m, cm] : rest)
            if (m.direction == 1) {
                lead = &m;
                coeff = cm;
                break;
            }
        if (!lead)
            break;
        const MultiIndex alpha = lead->exponent - e1;
        const Scalar s = coeff / (1 + alpha.second);
        out.add_term(Letter::L(alpha), s);
        rest -= l_basis(alpha) * s;
    }
    // What remains is q(t_1) partial_2, i.e. multiples of L_{(k,-1)} = -(1+k) t_1^k partial_2.
    for (const auto& [m, cm] : VectorField(rest)) {
        if (m.exponent.second != 0)
            throw std::logic_error("from_vector_field: unexpected residual " + rest.str());
        const int k = m.exponent.first;
        out.add_term(Letter::L(k, -1), -cm / (1 + k));
    }
    return out;
}

SbarElement sbar_bracket(const Letter& x, const Letter& y)
{
    if (x.is_d2() && y.is_d2())
        return {};
    if (x.is_d2())
        return SbarElement(y, y.index().second);
    if (y.is_d2())
        return SbarElement(x, -x.index().second);
    const MultiIndex a = x.index();
    const MultiIndex b = y.index();
    const int det = (1 + a.second) * (1 + b.first) - (1 + a.first) * (1 + b.second);
    if (det == 0)
        return {};
    const MultiIndex s = a + b;
    // Only (-1,0),(0,-1) reach (-1,-1) with det != 0; L_{(-1,-1)} vanishes as a field.
    if (s == MultiIndex{-1, -1})
        return {};
    return SbarElement(Letter::L(s), det);
}

SbarElement sbar_bracket(const SbarElement& x, const SbarElement& y)
{
    SbarElement out;
    for (const auto& [lx, cx] : x)
        for (const auto& [ly, cy] : y)
            out.add_scaled(sbar_bracket(lx, ly), cx * cy);
    return out;
}

std::string to_string(const SbarElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, c] : x) {
        const Scalar mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (mag != 1)
            os << to_string(mag) << '*';
        os << l.str();
    }
    return os.str();
}

} // namespace sbar
