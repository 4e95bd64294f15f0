#pragma once

#include <sbar/enveloping.hpp>
#include <sbar/smash.hpp>

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbarlab {

using sbar::MultiIndex;
using sbar::Scalar;

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Element expression AST.
///
/// Atoms: L(a,b), t(a,b), Y(a,b), d1, d2, d, p1, p2, t1, t2.
struct Expr {
    enum class Kind { Atom, Number, Add, Sub, Neg, Mul, Pow };

    Kind kind = Kind::Number;
    std::string atom;      // Atom: name without index
    MultiIndex index;      // Atom: index of L, t, Y
    Scalar number;         // Number: non-negative literal
    int exponent = 0;      // Pow
    ExprPtr lhs, rhs;      // Add/Sub/Mul use both, Neg/Pow use lhs

    bool has_index() const { return atom == "L" || atom == "t" || atom == "Y"; }
};

bool operator==(const Expr& a, const Expr& b);

struct SyntaxError : std::runtime_error {
    SyntaxError(const std::string& what, int line, int column);
    int line;
    int column;
};

/// Well-formed syntax with an index or exponent outside the atom's range.
struct RangeError : SyntaxError {
    using SyntaxError::SyntaxError;
};

/// Element not representable in the requested target algebra.
struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// expr   := term (('+' | '-') term)*
/// term   := unary ('*' unary)*
/// unary  := '-' unary | power
/// power  := primary ('^' '-'? INT)?
/// primary:= INT ('/' INT)? | atom | '(' expr ')'
ExprPtr parse_element(std::string_view text);

/// Fully parenthesized form; parse_element(print(e)) reproduces e.
std::string print(const Expr& e);

/// Normal form in the localization U_(-1). t-atoms are rejected.
sbar::LocElement eval_loc(const Expr& e);

/// Image under phi in D_2 (x) U(Sbar_2^{>=0}). Y-atoms and negative powers are rejected.
sbar::TensorAlgElement eval_phi(const Expr& e);

} // namespace sbarlab
