#include "sbar/smash.hpp"

#include <sstream>
#include <stdexcept>

namespace sbar {

TensorAlgElement tensor(const WeylElement& w, const UEnvElement& u)
{
    TensorAlgElement out;
    for (const auto& [mw, cw] : w)
        for (const auto& [mu, cu] : u)
            out.add_term(TensorMonomial{mw, mu}, cw * cu);
    return out;
}

TensorAlgElement tensor_one() { return tensor(weyl_one(), u_one()); }

TensorAlgElement tensor_mul(const TensorAlgElement& x, const TensorAlgElement& y)
{
    TensorAlgElement out;
    for (const auto& [mx, cx] : x) {
        for (const auto& [my, cy] : y) {
            const WeylElement w = weyl_mul(WeylElement(mx.weyl, 1), WeylElement(my.weyl, 1));
            const UEnvElement u = u_mul(UEnvElement(mx.env, 1), UEnvElement(my.env, 1));
            for (const auto& [mw, cw] : w)
                for (const auto& [mu, cu] : u)
                    out.add_term(TensorMonomial{mw, mu}, cx * cy * cw * cu);
        }
    }
    return out;
}

TensorAlgElement tensor_commutator(const TensorAlgElement& x, const TensorAlgElement& y)
{
    return tensor_mul(x, y) - tensor_mul(y, x);
}

std::string to_string(const TensorAlgElement& x)
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
        if (mag != 1)
            os << to_string(mag) << '*';
        os << '(' << to_string(WeylElement(m.weyl, 1)) << ")(x)(" << word_str(m.env) << ')';
    }
    return os.str();
}

SmashGenerator SmashGenerator::t(MultiIndex beta)
{
    if (!beta.is_nonneg())
        throw std::out_of_range("polynomial generator exponent " + beta.str() + " is not in Z_+^2");
    return {Kind::Poly, beta};
}

SmashGenerator SmashGenerator::L(MultiIndex alpha)
{
    if (!in_phi(alpha))
        throw std::out_of_range("L index " + alpha.str() + " is outside Phi");
    return {Kind::L, alpha};
}

SmashGenerator SmashGenerator::from_letter(const Letter& l) { return l.is_d2() ? d2() : L(l.index()); }

Letter SmashGenerator::letter() const
{
    switch (kind) {
    case Kind::D2:
        return Letter::d2();
    case Kind::L:
        return Letter::L(index);
    default:
        throw std::logic_error("polynomial generator has no Lie letter");
    }
}

std::string SmashGenerator::str() const
{
    switch (kind) {
    case Kind::Poly:
        return "t" + index.str();
    case Kind::D2:
        return "d2";
    default:
        return "L" + index.str();
    }
}

TensorAlgElement phi(const Letter& l)
{
    if (l.is_d2())
        return tensor(weyl_from_field(VectorField::euler(2)), u_one()) + tensor(weyl_one(), u_letter(l));
    const MultiIndex alpha = l.index();
    TensorAlgElement out = tensor(weyl_from_field(l_basis(alpha)), u_one());
    const MultiIndex top = alpha + ones;
    for (int r1 = 0; r1 <= top.first; ++r1) {
        for (int r2 = 0; r2 <= top.second; ++r2) {
            const MultiIndex r{r1, r2};
            const MultiIndex rest = alpha - r;
            if (rest.degree() < 0)
                continue;
            // rest >= (-1,-1) componentwise because r <= alpha + 1
            const Scalar c = binomial_nonneg(top.first, r1) * binomial_nonneg(top.second, r2);
            out += tensor(weyl_t(r, c), u_letter(Letter::L(rest)));
        }
    }
    return out;
}

TensorAlgElement phi(const SmashGenerator& g)
{
    if (g.kind == SmashGenerator::Kind::Poly)
        return tensor(weyl_t(g.index), u_one());
    return phi(g.letter());
}

TensorAlgElement phi(const SbarElement& x)
{
    return x.map_linear<TensorAlgElement>([](const Letter& l) { return phi(l); });
}

TensorAlgElement phi(const Poly2& p) { return tensor(weyl_from_poly(p), u_one()); }

TensorAlgElement phi_hom_check(const SmashGenerator& x, const SmashGenerator& y)
{
    const TensorAlgElement px = phi(x);
    const TensorAlgElement py = phi(y);
    if (x.is_lie() && y.is_lie())
        return phi(sbar_bracket(x.letter(), y.letter())) - tensor_commutator(px, py);
    if (x.is_lie()) {
        const Poly2 image = to_vector_field(x.letter()).apply(Poly2::monomial(y.index));
        return phi(image) - tensor_commutator(px, py);
    }
    if (y.is_lie()) {
        // [t^beta, y] = -y(t^beta)
        const Poly2 image = to_vector_field(y.letter()).apply(Poly2::monomial(x.index));
        return phi(image) * Scalar(-1) - tensor_commutator(px, py);
    }
    return phi(Poly2::monomial(x.index + y.index)) - tensor_mul(px, py);
}

std::vector<SmashGenerator> smash_generators(int max_degree)
{
    std::vector<SmashGenerator> out;
    for (int deg = 0; deg <= max_degree; ++deg)
        for (int b1 = 0; b1 <= deg; ++b1)
            out.push_back(SmashGenerator::t({b1, deg - b1}));
    out.push_back(SmashGenerator::d2());
    for (int deg = -1; deg <= max_degree; ++deg)
        for (int a1 = -1; a1 <= deg + 1; ++a1) {
            const MultiIndex alpha{a1, deg - a1};
            if (in_phi(alpha))
                out.push_back(SmashGenerator::L(alpha));
        }
    return out;
}

} // namespace sbar
