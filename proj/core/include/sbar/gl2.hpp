#pragma once

#include "sbar/lincomb.hpp"
#include "sbar/matrix.hpp"
#include "sbar/pbw.hpp"

#include <array>
#include <compare>
#include <string>

namespace sbar {

/// Matrix units of gl_2, in PBW order E11 < E12 < E21 < E22.
enum class GlLetter { E11 = 0, E12 = 1, E21 = 2, E22 = 3 };

struct Gl2Basis {
    using Letter = GlLetter;
    struct LetterHash {
        std::size_t operator()(GlLetter l) const noexcept { return static_cast<std::size_t>(l); }
    };
    /// [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
    static LinComb<GlLetter> bracket(GlLetter x, GlLetter y);
};

using UGl2 = Pbw<Gl2Basis>;
using UGl2Element = UGl2::Element;
using Gl2Element = LinComb<GlLetter>;

GlLetter gl_letter(int i, int j);
std::string to_string(GlLetter l);
std::string to_string(const UGl2Element& x);

/// Finite-dimensional simple gl_2-module V(lambda) with basis v_0..v_n, n = lambda_1 - lambda_2:
/// E11 v_k = (lambda_1 - k) v_k, E22 v_k = (lambda_2 + k) v_k, E21 v_k = v_{k+1},
/// E12 v_k = k(n-k+1) v_{k-1}.
class Gl2Module {
public:
    Gl2Module(Scalar lambda1, Scalar lambda2);

    const Scalar& lambda1() const { return lambda1_; }
    const Scalar& lambda2() const { return lambda2_; }
    std::size_t dim() const { return dim_; }

    const Matrix& matrix(GlLetter l) const { return mats_[static_cast<std::size_t>(l)]; }
    Matrix evaluate(const Gl2Element& x) const;
    Matrix evaluate(const UGl2Element& x) const;

    std::string label() const;

private:
    Scalar lambda1_, lambda2_;
    std::size_t dim_;
    std::array<Matrix, 4> mats_;
};

/// Throws std::invalid_argument unless lambda_1 - lambda_2 is a non-negative integer.
Gl2Module gl2_simple(const Scalar& lambda1, const Scalar& lambda2);

} // namespace sbar
