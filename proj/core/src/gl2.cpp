#include "sbar/gl2.hpp"

#include <sstream>
#include <stdexcept>

namespace sbar {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& c)
{
    for (auto& v : data_)
        v *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (is_zero(aik))
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

bool Matrix::is_zero() const
{
    for (const auto& v : data_)
        if (!sbar::is_zero(v))
            return false;
    return true;
}

std::string Matrix::str() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i > 0)
            os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0)
                os << ", ";
            os << to_string((*this)(i, j));
        }
    }
    os << ']';
    return os.str();
}

GlLetter gl_letter(int i, int j)
{
    if (i < 1 || i > 2 || j < 1 || j > 2)
        throw std::out_of_range("gl_2 matrix unit index out of range");
    return static_cast<GlLetter>((i - 1) * 2 + (j - 1));
}

namespace {
int row_of(GlLetter l) { return static_cast<int>(l) / 2 + 1; }
int col_of(GlLetter l) { return static_cast<int>(l) % 2 + 1; }
} // namespace

LinComb<GlLetter> Gl2Basis::bracket(GlLetter x, GlLetter y)
{
    const int i = row_of(x), j = col_of(x), k = row_of(y), l = col_of(y);
    LinComb<GlLetter> out;
    if (j == k)
        out.add_term(gl_letter(i, l), 1);
    if (l == i)
        out.add_term(gl_letter(k, j), -1);
    return out;
}

std::string to_string(GlLetter l) { return "E" + std::to_string(row_of(l)) + std::to_string(col_of(l)); }

std::string to_string(const UGl2Element& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : x) {
        const Scalar mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (w.empty()) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1)
            os << to_string(mag) << '*';
        for (std::size_t i = 0; i < w.size(); ++i)
            os << (i ? "*" : "") << to_string(w[i]);
    }
    return os.str();
}

Gl2Module::Gl2Module(Scalar lambda1, Scalar lambda2) : lambda1_(std::move(lambda1)), lambda2_(std::move(lambda2))
{
    const Scalar diff = lambda1_ - lambda2_;
    if (diff.get_den() != 1 || sgn(diff) < 0)
        throw std::invalid_argument("lambda_1 - lambda_2 must be a non-negative integer");
    const long n = diff.get_num().get_si();
    dim_ = static_cast<std::size_t>(n + 1);
    for (auto& m : mats_)
        m = Matrix(dim_, dim_);
    for (long k = 0; k <= n; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        mats_[0](kk, kk) = lambda1_ - k;
        mats_[3](kk, kk) = lambda2_ + k;
        if (k < n)
            mats_[2](kk + 1, kk) = 1;
        if (k > 0)
            mats_[1](kk - 1, kk) = Scalar(k * (n - k + 1));
    }
}

Matrix Gl2Module::evaluate(const Gl2Element& x) const
{
    Matrix out(dim_, dim_);
    for (const auto& [l, c] : x)
        out += matrix(l) * c;
    return out;
}

Matrix Gl2Module::evaluate(const UGl2Element& x) const
{
    Matrix out(dim_, dim_);
    for (const auto& [w, c] : x) {
        Matrix prod = Matrix::identity(dim_);
        for (const auto& l : w)
            prod = prod * matrix(l);
        out += prod * c;
    }
    return out;
}

std::string Gl2Module::label() const { return "V(" + to_string(lambda1_) + "," + to_string(lambda2_) + ")"; }

Gl2Module gl2_simple(const Scalar& lambda1, const Scalar& lambda2) { return Gl2Module(lambda1, lambda2); }

} // namespace sbar
