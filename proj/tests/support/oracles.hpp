#pragma once

// Test-side oracles. Everything here is written against plain std::map
// polynomials so that it shares no code path with the library beyond the
// element types being compared.

#include <sbar/enveloping.hpp>
#include <sbar/gl2.hpp>
#include <sbar/sbar.hpp>
#include <sbar/weyl.hpp>

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using sbar::MultiIndex;
using sbar::Scalar;

/// Commutative polynomial in t1, t2.
using Poly = std::map<std::pair<int, int>, Scalar>;

inline void add(Poly& p, std::pair<int, int> e, const Scalar& c)
{
    if (sgn(c) == 0)
        return;
    Scalar& slot = p[e];
    slot += c;
    if (sgn(slot) == 0)
        p.erase(e);
}

inline Poly diff(const Poly& p, int i)
{
    Poly out;
    for (const auto& [e, c] : p) {
        const int k = i == 1 ? e.first : e.second;
        if (k == 0)
            continue;
        auto f = e;
        (i == 1 ? f.first : f.second) -= 1;
        add(out, f, c * k);
    }
    return out;
}

inline Poly times_monomial(const Poly& p, std::pair<int, int> m, const Scalar& c)
{
    Poly out;
    for (const auto& [e, v] : p)
        add(out, {e.first + m.first, e.second + m.second}, v * c);
    return out;
}

inline Poly plus(Poly a, const Poly& b, const Scalar& s = 1)
{
    for (const auto& [e, c] : b)
        add(a, e, c * s);
    return a;
}

/// Vector field (exponent, direction) -> coefficient, applied as a derivation.
inline Poly apply_field(const sbar::VectorField& x, const Poly& f)
{
    Poly out;
    for (const auto& [m, c] : x)
        out = plus(out, times_monomial(diff(f, m.direction), {m.exponent.first, m.exponent.second}, c));
    return out;
}

inline Poly apply_letter(const sbar::Letter& l, const Poly& f)
{
    // L_alpha and d_2 written out from their definitions, not via l_basis
    if (l.is_d2())
        return times_monomial(diff(f, 2), {0, 1}, 1);
    const auto a = l.index();
    Poly out;
    if (a.first + 1 >= 0 && a.second >= 0)
        out = plus(out, times_monomial(diff(f, 1), {a.first + 1, a.second}, 1 + a.second));
    if (a.second + 1 >= 0 && a.first >= 0)
        out = plus(out, times_monomial(diff(f, 2), {a.first, a.second + 1}, -(1 + a.first)));
    return out;
}

/// U(Sbar_2) acting on polynomials through the vector-field representation.
inline Poly apply_u(const sbar::UEnvElement& u, const Poly& f)
{
    Poly out;
    for (const auto& [w, c] : u) {
        Poly g = f;
        for (auto it = w.rbegin(); it != w.rend(); ++it)
            g = apply_letter(*it, g);
        out = plus(out, g, c);
    }
    return out;
}

/// Weyl element acting on polynomials: t^a partial^b f.
inline Poly apply_weyl(const sbar::WeylElement& x, const Poly& f)
{
    Poly out;
    for (const auto& [m, c] : x) {
        Poly g = f;
        for (int k = 0; k < m.d_exp.first; ++k)
            g = diff(g, 1);
        for (int k = 0; k < m.d_exp.second; ++k)
            g = diff(g, 2);
        out = plus(out, times_monomial(g, {m.t_exp.first, m.t_exp.second}, c));
    }
    return out;
}

inline Poly to_poly(const sbar::Poly2& p)
{
    Poly out;
    for (const auto& [e, c] : p)
        add(out, {e.first, e.second}, c);
    return out;
}

/// Dense matrix product, independent of sbar::Matrix::operator*.
inline std::vector<std::vector<Scalar>> dense(const sbar::Matrix& m)
{
    std::vector<std::vector<Scalar>> out(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

inline std::vector<std::vector<Scalar>> mul(const std::vector<std::vector<Scalar>>& a,
                                            const std::vector<std::vector<Scalar>>& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t l = 0; l < k; ++l)
                out[i][j] += a[i][l] * b[l][j];
    return out;
}

/// PBW rewriting with a caller-chosen schedule: at each step the rewrite
/// position among the out-of-order adjacent pairs is picked by `rng`.
inline sbar::UEnvElement naive_normalize(const std::vector<sbar::Letter>& seq, std::mt19937_64& rng)
{
    using Word = std::vector<sbar::Letter>;
    std::map<Word, Scalar> pending{{seq, 1}};
    sbar::UEnvElement done;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word w = node.key();
        const Scalar c = node.mapped();
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i + 1] < w[i])
                bad.push_back(i);
        if (bad.empty()) {
            done.add_term(w, c);
            continue;
        }
        const std::size_t i = bad[std::uniform_int_distribution<std::size_t>(0, bad.size() - 1)(rng)];
        Word swapped = w;
        std::swap(swapped[i], swapped[i + 1]);
        auto push = [&](Word key, const Scalar& v) {
            Scalar& slot = pending[key];
            slot += v;
            if (sgn(slot) == 0)
                pending.erase(key);
        };
        push(swapped, c);
        for (const auto& [z, cz] : sbar::sbar_bracket(w[i], w[i + 1])) {
            Word shorter(w.begin(), w.begin() + static_cast<long>(i));
            shorter.push_back(z);
            shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
            push(shorter, c * cz);
        }
    }
    return done;
}

// ---------------------------------------------------------------- generators

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    Scalar scalar(int bound = 7)
    {
        return sbar::make_scalar(integer(-bound, bound), integer(1, bound));
    }

    Scalar nonzero_scalar(int bound = 7)
    {
        Scalar s;
        while (sgn(s) == 0)
            s = scalar(bound);
        return s;
    }

    sbar::Letter letter(int max_degree)
    {
        while (true) {
            if (integer(0, 8) == 0)
                return sbar::Letter::d2();
            const int deg = integer(-1, max_degree);
            const int a1 = integer(-1, deg + 1);
            if (sbar::in_phi({a1, deg - a1}))
                return sbar::Letter::L(a1, deg - a1);
        }
    }

    std::vector<sbar::Letter> word(int max_len, int max_degree)
    {
        std::vector<sbar::Letter> w;
        for (int k = integer(0, max_len); k > 0; --k)
            w.push_back(letter(max_degree));
        return w;
    }

    sbar::UEnvElement uenv(int terms, int max_len, int max_degree)
    {
        sbar::UEnvElement out;
        for (int i = 0; i < terms; ++i)
            out += sbar::pbw_normalize(word(max_len, max_degree), scalar());
        return out;
    }

    sbar::Poly2 poly(int max_degree, int terms)
    {
        sbar::Poly2 p;
        for (int i = 0; i < terms; ++i) {
            const int a = integer(0, max_degree);
            p.add_term(MultiIndex{a, integer(0, max_degree - a)}, scalar());
        }
        return p;
    }

    sbar::WeylElement weyl(int max_degree, int terms)
    {
        sbar::WeylElement w;
        for (int i = 0; i < terms; ++i) {
            const int a = integer(0, max_degree), b = integer(0, max_degree);
            w.add_term({{a, integer(0, max_degree - a)}, {b, integer(0, max_degree - b)}}, scalar());
        }
        return w;
    }

    sbar::LocElement loc(int terms, int max_len, int max_degree, int max_power)
    {
        sbar::LocElement out;
        for (int i = 0; i < terms; ++i) {
            std::vector<sbar::Letter> w;
            for (int k = integer(0, max_len); k > 0; --k) {
                sbar::Letter l = letter(max_degree);
                if (!l.is_partial())
                    w.push_back(l);
            }
            const auto head = sbar::to_loc(sbar::pbw_normalize(w, scalar()));
            out += sbar::loc_mul(head, sbar::loc_partial_power(
                                           {integer(-max_power, max_power), integer(-max_power, max_power)}));
        }
        return out;
    }
};

} // namespace oracle
