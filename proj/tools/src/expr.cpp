#include "sbarlab/expr.hpp"

#include <sbar/halgebra.hpp>

#include <cctype>

namespace sbarlab {

using namespace sbar;

SyntaxError::SyntaxError(const std::string& what, int l, int c)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + what), line(l), column(c)
{
}

bool operator==(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind)
        return false;
    auto same = [](const ExprPtr& x, const ExprPtr& y) { return (!x && !y) || (x && y && *x == *y); };
    switch (a.kind) {
    case Expr::Kind::Atom:
        return a.atom == b.atom && (!a.has_index() || a.index == b.index);
    case Expr::Kind::Number:
        return a.number == b.number;
    case Expr::Kind::Pow:
        return a.exponent == b.exponent && same(a.lhs, b.lhs);
    case Expr::Kind::Neg:
        return same(a.lhs, b.lhs);
    default:
        return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
    }
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse()
    {
        ExprPtr e = expr();
        skip_space();
        if (pos_ < text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, line_, col_); }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            advance();
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c)
            return false;
        advance();
        return true;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string digits()
    {
        skip_space();
        std::string out;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            out += text_[pos_];
            advance();
        }
        if (out.empty())
            fail("expected an integer");
        return out;
    }

    int small_int(bool allow_sign)
    {
        bool neg = allow_sign && accept('-');
        const int l = line_, c = col_;
        const std::string d = digits();
        if (d.size() > 6)
            throw RangeError("integer " + d + " is too large", l, c);
        const int v = std::stoi(d);
        return neg ? -v : v;
    }

    static ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        while (true) {
            Expr e;
            if (accept('+'))
                e.kind = Expr::Kind::Add;
            else if (accept('-'))
                e.kind = Expr::Kind::Sub;
            else
                return lhs;
            e.lhs = lhs;
            e.rhs = term();
            lhs = make(std::move(e));
        }
    }

    ExprPtr term()
    {
        ExprPtr lhs = unary();
        while (accept('*')) {
            Expr e;
            e.kind = Expr::Kind::Mul;
            e.lhs = lhs;
            e.rhs = unary();
            lhs = make(std::move(e));
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (accept('-')) {
            Expr e;
            e.kind = Expr::Kind::Neg;
            e.lhs = unary();
            return make(std::move(e));
        }
        return power();
    }

    ExprPtr power()
    {
        ExprPtr base = primary();
        if (!accept('^'))
            return base;
        const int l = line_, c = col_;
        Expr e;
        e.kind = Expr::Kind::Pow;
        e.exponent = small_int(true);
        if (e.exponent < 0 && !(base->kind == Expr::Kind::Atom && (base->atom == "p1" || base->atom == "p2")))
            throw RangeError("negative exponents are only allowed on p1 and p2", l, c);
        e.lhs = base;
        return make(std::move(e));
    }

    ExprPtr primary()
    {
        const char c = peek();
        if (c == '(') {
            advance();
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const int l = line_, col = col_;
            std::string lit = digits();
            if (accept('/')) {
                const std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos)
                    throw RangeError("zero denominator", l, col);
                lit += "/" + den;
            }
            Expr e;
            e.kind = Expr::Kind::Number;
            e.number = parse_scalar(lit);
            return make(std::move(e));
        }
        if (std::isalpha(static_cast<unsigned char>(c)))
            return atom();
        if (c == '\0')
            fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    ExprPtr atom()
    {
        const int l = line_, c = col_;
        std::string name;
        while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
            name += text_[pos_];
            advance();
        }
        Expr e;
        e.kind = Expr::Kind::Atom;
        e.atom = name;
        if (name == "L" || name == "t" || name == "Y") {
            expect('(');
            const int a = small_int(true);
            expect(',');
            const int b = small_int(true);
            expect(')');
            e.index = {a, b};
            if (name == "L" && !in_phi(e.index))
                throw RangeError("L" + e.index.str() + " is outside Phi", l, c);
            if (name == "t" && !e.index.is_nonneg())
                throw RangeError("t" + e.index.str() + " needs a non-negative exponent", l, c);
            if (name == "Y" && !is_y_index(e.index))
                throw RangeError("Y" + e.index.str() + " is not a valid index", l, c);
            return make(std::move(e));
        }
        for (const char* known : {"d1", "d2", "d", "p1", "p2", "t1", "t2"})
            if (name == known)
                return make(std::move(e));
        throw SyntaxError("unknown atom '" + name + "'", l, c);
    }
};

} // namespace

ExprPtr parse_element(std::string_view text) { return Parser(text).parse(); }

std::string print(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Atom:
        if (e.has_index())
            return e.atom + "(" + std::to_string(e.index.first) + "," + std::to_string(e.index.second) + ")";
        return e.atom;
    case Expr::Kind::Number:
        return to_string(e.number);
    case Expr::Kind::Add:
        return "(" + print(*e.lhs) + " + " + print(*e.rhs) + ")";
    case Expr::Kind::Sub:
        return "(" + print(*e.lhs) + " - " + print(*e.rhs) + ")";
    case Expr::Kind::Neg:
        return "(-" + print(*e.lhs) + ")";
    case Expr::Kind::Mul:
        return "(" + print(*e.lhs) + "*" + print(*e.rhs) + ")";
    case Expr::Kind::Pow:
        return "(" + print(*e.lhs) + "^" + std::to_string(e.exponent) + ")";
    }
    return {};
}

namespace {

int partial_direction(const Expr& e)
{
    if (e.kind != Expr::Kind::Atom)
        return 0;
    return e.atom == "p1" ? 1 : e.atom == "p2" ? 2 : 0;
}

LocElement loc_atom(const Expr& e)
{
    if (e.atom == "L")
        return to_loc(u_letter(Letter::L(e.index)));
    if (e.atom == "Y")
        return y_element(e.index);
    if (e.atom == "d1")
        return to_loc(u_d(1));
    if (e.atom == "d2")
        return to_loc(u_d(2));
    if (e.atom == "d")
        return to_loc(u_from_sbar(sbar_d()));
    if (e.atom == "p1")
        return loc_partial_power(e1);
    if (e.atom == "p2")
        return loc_partial_power(e2);
    throw EvalError("'" + print(e) + "' is a polynomial generator; use it under phi");
}

TensorAlgElement phi_atom(const Expr& e)
{
    if (e.atom == "L")
        return phi(Letter::L(e.index));
    if (e.atom == "t")
        return phi(Poly2::monomial(e.index));
    if (e.atom == "t1")
        return phi(Poly2::monomial(e1));
    if (e.atom == "t2")
        return phi(Poly2::monomial(e2));
    if (e.atom == "d1")
        return phi(sbar_d1());
    if (e.atom == "d2")
        return phi(Letter::d2());
    if (e.atom == "d")
        return phi(sbar_d());
    if (e.atom == "p1")
        return phi(from_vector_field(VectorField::partial(1)));
    if (e.atom == "p2")
        return phi(from_vector_field(VectorField::partial(2)));
    throw EvalError("'" + print(e) + "' lives in the localization; phi is defined on the smash product");
}

} // namespace

LocElement eval_loc(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Atom:
        return loc_atom(e);
    case Expr::Kind::Number:
        return loc_scalar(e.number);
    case Expr::Kind::Add:
        return eval_loc(*e.lhs) + eval_loc(*e.rhs);
    case Expr::Kind::Sub:
        return eval_loc(*e.lhs) - eval_loc(*e.rhs);
    case Expr::Kind::Neg:
        return -eval_loc(*e.lhs);
    case Expr::Kind::Mul:
        return loc_mul(eval_loc(*e.lhs), eval_loc(*e.rhs));
    case Expr::Kind::Pow: {
        if (const int i = partial_direction(*e.lhs))
            return loc_partial_power(unit(i) * e.exponent);
        const LocElement base = eval_loc(*e.lhs);
        LocElement out = loc_one();
        for (int k = 0; k < e.exponent; ++k)
            out = loc_mul(out, base);
        return out;
    }
    }
    return {};
}

TensorAlgElement eval_phi(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::Atom:
        return phi_atom(e);
    case Expr::Kind::Number:
        return tensor_one() * e.number;
    case Expr::Kind::Add:
        return eval_phi(*e.lhs) + eval_phi(*e.rhs);
    case Expr::Kind::Sub:
        return eval_phi(*e.lhs) - eval_phi(*e.rhs);
    case Expr::Kind::Neg:
        return -eval_phi(*e.lhs);
    case Expr::Kind::Mul:
        return tensor_mul(eval_phi(*e.lhs), eval_phi(*e.rhs));
    case Expr::Kind::Pow: {
        if (e.exponent < 0)
            throw EvalError("negative powers have no image under phi");
        const TensorAlgElement base = eval_phi(*e.lhs);
        TensorAlgElement out = tensor_one();
        for (int k = 0; k < e.exponent; ++k)
            out = tensor_mul(out, base);
        return out;
    }
    }
    return {};
}

} // namespace sbarlab
