#include "sbar/tmodule.hpp"

#include <array>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sbar {

int tvector_degree(const TVector& v)
{
    if (v.is_zero())
        return -1;
    return std::prev(v.end())->first.exponent.degree();
}

std::string to_string(const TVector& v)
{
    if (v.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : v) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << to_string(c) << ")*" << Poly2::monomial(b.exponent).str("t1", "t2") << "(x)v" << b.k;
    }
    return os.str();
}

Gl2Element pi_iso(const Letter& l)
{
    if (l.is_d2())
        return Gl2Element(GlLetter::E22, 1);
    const MultiIndex a = l.index();
    switch (a.degree()) {
    case -1:
        throw std::invalid_argument("pi_iso: " + l.str() + " is not in Sbar_2^{>=0}");
    case 0:
        if (a == MultiIndex{0, 0})
            return Gl2Element{{GlLetter::E11, 1}, {GlLetter::E22, -1}};
        if (a == MultiIndex{1, -1})
            return Gl2Element(GlLetter::E12, -2);
        return Gl2Element(GlLetter::E21, 2);
    default:
        return {};
    }
}

Gl2Element pi_iso(const SbarElement& x)
{
    return x.map_linear<Gl2Element>([](const Letter& l) { return pi_iso(l); });
}

UGl2Element pi_iso(const UEnvElement& x)
{
    UGl2Element out;
    for (const auto& [w, c] : x) {
        UGl2Element prod = UGl2::scalar(c);
        for (const auto& l : w) {
            prod = UGl2::multiply(prod, UGl2::from_lie(pi_iso(l)));
            if (prod.is_zero())
                break;
        }
        out += prod;
    }
    return out;
}

TModule::TModule(Scalar a1, Scalar a2, Gl2Module v) : a1_(std::move(a1)), a2_(std::move(a2)), v_(std::move(v)) {}

std::string TModule::label() const
{
    return "T(A^(" + to_string(a1_) + "," + to_string(a2_) + ")," + v_.label() + ")";
}

TVector TModule::basis_vector(MultiIndex exponent, int k, const Scalar& c) const
{
    if (!exponent.is_nonneg() || k < 0 || static_cast<std::size_t>(k) >= v_.dim())
        throw std::out_of_range("basis vector outside T(A_2^a, V)");
    return TVector(TBasisKey{exponent, k}, c);
}

std::vector<TBasisKey> TModule::slice(int max_degree) const
{
    std::vector<TBasisKey> out;
    for (int deg = 0; deg <= max_degree; ++deg)
        for (int b1 = deg; b1 >= 0; --b1)
            for (int k = 0; k < static_cast<int>(v_.dim()); ++k)
                out.push_back({{b1, deg - b1}, k});
    return out;
}

void TModule::add_matrix_image(TVector& out, MultiIndex exponent, const Matrix& m, int k, const Scalar& c) const
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const Scalar& e = m(r, static_cast<std::size_t>(k));
        if (!is_zero(e))
            out.add_term(TBasisKey{exponent, static_cast<int>(r)}, c * e);
    }
}

TVector TModule::act_basis(const Letter& x, const TBasisKey& b) const
{
    TVector out;
    const MultiIndex beta = b.exponent;
    if (x.is_d2()) {
        out.add_term(b, beta.second);
        out.add_term(TBasisKey{beta + e2, b.k}, a2_);
        add_matrix_image(out, beta, v_.matrix(GlLetter::E22), b.k, 1);
        return out;
    }
    // sigma_a(L_alpha) t^beta: t^e partial_i acts as t^e (partial_i + a_i)
    for (const auto& [fm, c] : to_vector_field(x)) {
        const int i = fm.direction;
        const int bi = i == 1 ? beta.first : beta.second;
        if (bi > 0)
            out.add_term(TBasisKey{fm.exponent + beta - unit(i), b.k}, c * bi);
        out.add_term(TBasisKey{fm.exponent + beta, b.k}, c * a(i));
    }
    const MultiIndex alpha = x.index();
    const long a1 = alpha.first, a2 = alpha.second;
    if (const long c = (1 + a1) * (1 + a2); c != 0) {
        add_matrix_image(out, alpha + beta, v_.matrix(GlLetter::E11), b.k, c);
        add_matrix_image(out, alpha + beta, v_.matrix(GlLetter::E22), b.k, -c);
    }
    if (const long c = a2 * (1 + a2); c != 0)
        add_matrix_image(out, alpha + e1 - e2 + beta, v_.matrix(GlLetter::E21), b.k, c);
    if (const long c = a1 * (1 + a1); c != 0)
        add_matrix_image(out, alpha + e2 - e1 + beta, v_.matrix(GlLetter::E12), b.k, -c);
    return out;
}

TVector TModule::act(const Letter& x, const TVector& w) const
{
    TVector out;
    for (const auto& [b, c] : w)
        out.add_scaled(act_basis(x, b), c);
    return out;
}

TVector TModule::act(const SbarElement& x, const TVector& w) const
{
    TVector out;
    for (const auto& [l, c] : x)
        out.add_scaled(act(l, w), c);
    return out;
}

TVector TModule::act(const UEnvElement& x, const TVector& w) const
{
    TVector out;
    for (const auto& [word, c] : x) {
        TVector cur = w;
        for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it)
            cur = act(*it, cur);
        out.add_scaled(cur, c);
    }
    return out;
}

TVector TModule::act(const LocElement& x, const TVector& w) const
{
    TVector out;
    for (const auto& [m, c] : x) {
        TVector cur = act_partial(2, m.partials.second, w);
        cur = act_partial(1, m.partials.first, cur);
        for (auto it = m.head.rbegin(); it != m.head.rend() && !cur.is_zero(); ++it)
            cur = act(*it, cur);
        out.add_scaled(cur, c);
    }
    return out;
}

TVector TModule::act_partial(int i, int m, const TVector& w) const
{
    const Scalar& ai = a(i);
    auto forward = [&](const TVector& v) {
        TVector out;
        for (const auto& [b, c] : v) {
            const int bi = i == 1 ? b.exponent.first : b.exponent.second;
            if (bi > 0)
                out.add_term(TBasisKey{b.exponent - unit(i), b.k}, c * bi);
            out.add_term(b, c * ai);
        }
        return out;
    };
    TVector cur = w;
    if (m >= 0) {
        for (int s = 0; s < m; ++s)
            cur = forward(cur);
        return cur;
    }
    if (is_zero(ai))
        throw std::domain_error("partial_" + std::to_string(i) + " is not invertible on A_2^a with a_" +
                                std::to_string(i) + " = 0");
    // (partial_i + a_i)^{-1} = sum_k (-1)^k a_i^{-k-1} partial_i^k, finite on polynomials
    const Scalar inv = 1 / ai;
    for (int s = 0; s < -m; ++s) {
        TVector out;
        TVector term = cur;
        Scalar coeff = inv;
        while (!term.is_zero()) {
            out.add_scaled(term, coeff);
            TVector next;
            for (const auto& [b, c] : term) {
                const int bi = i == 1 ? b.exponent.first : b.exponent.second;
                if (bi > 0)
                    next.add_term(TBasisKey{b.exponent - unit(i), b.k}, c * bi);
            }
            term = std::move(next);
            coeff *= -inv;
        }
        cur = std::move(out);
    }
    return cur;
}

TVector TModule::act_poly(const Poly2& p, const TVector& w) const
{
    TVector out;
    for (const auto& [e, cp] : p)
        for (const auto& [b, c] : w)
            out.add_term(TBasisKey{b.exponent + e, b.k}, cp * c);
    return out;
}

TVector TModule::act_weyl(const WeylElement& x, const TVector& w) const
{
    TVector out;
    for (const auto& [m, c] : x) {
        TVector cur = act_partial(2, m.d_exp.second, w);
        cur = act_partial(1, m.d_exp.first, cur);
        out.add_scaled(act_poly(Poly2::monomial(m.t_exp), cur), c);
    }
    return out;
}

TVector TModule::act_tensor(const TensorAlgElement& x, const TVector& w) const
{
    std::map<PBWWord, Matrix> mats;
    TVector out;
    for (const auto& [m, c] : x) {
        auto it = mats.find(m.env);
        if (it == mats.end())
            it = mats.emplace(m.env, v_.evaluate(pi_iso(UEnvElement(m.env, 1)))).first;
        const Matrix& mat = it->second;
        TVector on_v;
        for (const auto& [b, cb] : w)
            add_matrix_image(on_v, b.exponent, mat, b.k, cb);
        out.add_scaled(act_weyl(WeylElement(m.weyl, 1), on_v), c);
    }
    return out;
}

Matrix TModule::gl2_matrix(const SbarElement& x) const { return v_.evaluate(pi_iso(x)); }

namespace {

std::vector<TVector> joint_kernel(const TModule& m, int max_degree, const std::array<SbarElement, 2>& ops,
                                  const std::array<Scalar, 2>& eigen)
{
    using Key = std::pair<int, TBasisKey>;
    const std::vector<TBasisKey> keys = m.slice(max_degree);
    std::vector<LinComb<Key>> images;
    images.reserve(keys.size());
    for (const auto& b : keys) {
        LinComb<Key> img;
        const TVector w(b, 1);
        for (int i = 0; i < 2; ++i) {
            TVector d = m.act(ops[i], w);
            d.add_scaled(w, -eigen[i]);
            for (const auto& [k, c] : d)
                img.add_term(Key{i, k}, c);
        }
        images.push_back(std::move(img));
    }
    std::vector<TVector> out;
    for (const auto& comb : kernel_of(images)) {
        TVector v;
        for (const auto& [j, c] : comb)
            v.add_term(keys[static_cast<std::size_t>(j)], c);
        out.push_back(std::move(v));
    }
    return out;
}

SbarElement sbar_partial(int i) { return from_vector_field(VectorField::partial(i)); }

} // namespace

std::vector<TVector> whittaker_space(const TModule& m, int max_degree)
{
    return joint_kernel(m, max_degree, {sbar_partial(1), sbar_partial(2)}, {m.a1(), m.a2()});
}

std::vector<TVector> twisted_whittaker_space(const TModule& m, const Scalar& c, const Scalar& b1, const Scalar& b2,
                                             int max_degree)
{
    const std::array<SbarElement, 2> ops{from_vector_field(unipotent_twist(c, VectorField::partial(1))),
                                         from_vector_field(unipotent_twist(c, VectorField::partial(2)))};
    return joint_kernel(m, max_degree, ops, {b1, b2});
}

FreenessReport uh_freeness_check(const TModule& m, int max_degree)
{
    FreenessReport report;
    report.dim_v = m.gl2().dim();
    const SbarElement d1 = sbar_d1();
    const Letter d2 = Letter::d2();
    EchelonBasis<TBasisKey> eb;
    for (int k = 0; k < static_cast<int>(report.dim_v); ++k) {
        // column m2 holds d_2^{m2} (1 (x) v_k); rows apply d_1 repeatedly
        TVector col = m.basis_vector({0, 0}, k);
        for (int m2 = 0; m2 <= max_degree; ++m2) {
            TVector cur = col;
            for (int m1 = 0; m1 + m2 <= max_degree; ++m1) {
                eb.insert(cur);
                if (k == 0)
                    ++report.monomials;
                cur = m.act(d1, cur);
            }
            col = m.act(d2, col);
        }
    }
    report.rank = eb.rank();
    return report;
}

namespace {

TVector act_l(const TModule& module, MultiIndex gamma, const TVector& w)
{
    if (gamma == MultiIndex{-1, -1})
        return {};
    return module.act(Letter::L(gamma), w);
}

} // namespace

TVector sigma_act(const TModule& module, const SigmaOperator& op, const TVector& w)
{
    if (op.m < 0 || (op.j != 1 && op.j != 2))
        throw std::invalid_argument("sigma operator needs m >= 0 and j in {1, 2}");
    if (!op.alpha.is_ge_minus_one() || !op.beta.is_ge_minus_one())
        throw std::out_of_range("sigma indices must lie in Z^2_{>=-1}");
    const MultiIndex ej = unit(op.j);
    TVector out;
    for (int i = 0; i <= op.m; ++i) {
        const TVector inner = act_l(module, op.beta + ej * i, w);
        if (inner.is_zero())
            continue;
        const Scalar c = (i % 2 ? -1 : 1) * binomial_nonneg(op.m, i);
        out.add_scaled(act_l(module, op.alpha + ej * (op.m - i), inner), c);
    }
    return out;
}

SigmaSearchResult sigma_annihilation_search(const TModule& module, int max_m, int index_degree, int vector_degree)
{
    std::vector<MultiIndex> indices;
    for (int deg = -2; deg <= index_degree; ++deg)
        for (int a1 = -1; a1 <= deg + 1; ++a1)
            indices.push_back({a1, deg - a1});
    const std::vector<TBasisKey> keys = module.slice(vector_degree);

    SigmaSearchResult result;
    for (int m = 0; m <= max_m; ++m) {
        std::optional<std::pair<SigmaOperator, TBasisKey>> witness;
        for (int j = 1; j <= 2 && !witness; ++j)
            for (const auto& alpha : indices) {
                for (const auto& beta : indices) {
                    const SigmaOperator op{m, j, alpha, beta};
                    for (const auto& b : keys)
                        if (!sigma_act(module, op, TVector(b, 1)).is_zero()) {
                            witness = std::make_pair(op, b);
                            break;
                        }
                    if (witness)
                        break;
                }
                if (witness)
                    break;
            }
        result.witnesses.push_back(witness);
        if (!witness) {
            result.minimal_m = m;
            break;
        }
    }
    return result;
}

ClosureReport closure_probe(const TModule& module, const TVector& seed, int max_degree, int generator_degree)
{
    return closure_probe(module, std::vector<TVector>{seed}, max_degree, generator_degree);
}

ClosureReport closure_probe(const TModule& module, const std::vector<TVector>& seeds, int max_degree,
                            int generator_degree)
{
    if (generator_degree < 0 || max_degree < generator_degree)
        throw std::invalid_argument("closure probe needs 0 <= G <= D");
    std::vector<Letter> gens{Letter::d2()};
    for (int deg = -1; deg <= generator_degree; ++deg)
        for (int a1 = -1; a1 <= deg + 1; ++a1)
            if (in_phi({a1, deg - a1}))
                gens.push_back(Letter::L(a1, deg - a1));

    EchelonBasis<TBasisKey> eb;
    std::deque<TVector> queue;
    auto offer = [&](const TVector& v) {
        if (v.is_zero() || tvector_degree(v) > max_degree)
            return;
        if (eb.insert(v))
            queue.push_back(v);
    };
    for (const auto& seed : seeds)
        offer(seed);
    while (!queue.empty()) {
        const TVector v = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : gens)
            offer(module.act(g, v));
    }

    ClosureReport report;
    report.max_degree = max_degree;
    report.generator_degree = generator_degree;
    report.total_dim = eb.rank();
    const std::size_t dim_v = module.gl2().dim();
    for (int k = 0; k <= max_degree - generator_degree; ++k) {
        ClosureRow row;
        row.degree = k;
        row.closure_dim = eb.count_pivots([k](const TBasisKey& b) { return b.exponent.degree() <= k; });
        row.ambient_dim = static_cast<std::size_t>((k + 1) * (k + 2) / 2) * dim_v;
        report.rows.push_back(row);
    }
    return report;
}

namespace {

Matrix coordinates(const std::vector<TVector>& basis, const std::vector<TVector>& images)
{
    EchelonBasis<TBasisKey> eb(true);
    for (const auto& b : basis)
        if (!eb.insert(b))
            throw std::invalid_argument("basis vectors are linearly dependent");
    Matrix out(basis.size(), images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
        const auto comb = eb.solve(images[j]);
        if (!comb)
            throw std::logic_error("image leaves the span of the basis");
        for (const auto& [i, c] : *comb)
            out(static_cast<std::size_t>(i), j) = c;
    }
    return out;
}

} // namespace

Matrix whittaker_gl2_action(const TModule& module, const Letter& x, const std::vector<TVector>& basis)
{
    if (x.degree() != 0)
        throw std::invalid_argument("whittaker_gl2_action needs a degree 0 letter");
    const WeylElement realized = weyl_from_field(to_vector_field(x));
    std::vector<TVector> images;
    for (const auto& w : basis)
        images.push_back(module.act(x, w) - module.act_weyl(realized, w));
    return coordinates(basis, images);
}

Matrix action_matrix(const TModule& module, const LocElement& x, const std::vector<TVector>& basis)
{
    std::vector<TVector> images;
    for (const auto& w : basis)
        images.push_back(module.act(x, w));
    return coordinates(basis, images);
}

} // namespace sbar
