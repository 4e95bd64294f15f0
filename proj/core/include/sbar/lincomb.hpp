#pragma once

#include "sbar/scalar.hpp"

#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

namespace sbar {

/// Finite formal combination sum c_k * key_k with no zero coefficients stored.
/// Every element type of the workbench (vector fields, PBW elements, module vectors) is one of these.
template <class Key, class Compare = std::less<Key>>
class LinComb {
public:
    using map_type = std::map<Key, Scalar, Compare>;
    using const_iterator = typename map_type::const_iterator;
    using key_type = Key;

    LinComb() = default;
    explicit LinComb(const Key& k, Scalar c = 1) { add_term(k, std::move(c)); }
    LinComb(std::initializer_list<std::pair<Key, Scalar>> terms)
    {
        for (const auto& [k, c] : terms)
            add_term(k, c);
    }

    void add_term(const Key& k, const Scalar& c)
    {
        if (sbar::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sbar::is_zero(it->second))
                terms_.erase(it);
        }
    }

    void add_term(Key&& k, const Scalar& c)
    {
        if (sbar::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (sbar::is_zero(it->second))
                terms_.erase(it);
        }
    }

    /// this += c * other
    void add_scaled(const LinComb& other, const Scalar& c)
    {
        if (sbar::is_zero(c))
            return;
        for (const auto& [k, v] : other.terms_)
            add_term(k, v * c);
    }

    Scalar coeff(const Key& k) const
    {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    LinComb& operator+=(const LinComb& o)
    {
        for (const auto& [k, v] : o.terms_)
            add_term(k, v);
        return *this;
    }
    LinComb& operator-=(const LinComb& o)
    {
        for (const auto& [k, v] : o.terms_)
            add_term(k, -v);
        return *this;
    }
    LinComb& operator*=(const Scalar& c)
    {
        if (sbar::is_zero(c)) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, v] : terms_)
            v *= c;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
    friend LinComb operator*(LinComb a, const Scalar& c) { return a *= c; }
    friend LinComb operator*(const Scalar& c, LinComb a) { return a *= c; }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }

    /// Applies f(key) -> LinComb to each term and sums the scaled images.
    template <class Out, class F>
    Out map_linear(F&& f) const
    {
        Out out;
        for (const auto& [k, v] : terms_)
            out.add_scaled(f(k), v);
        return out;
    }

private:
    map_type terms_;
};

} // namespace sbar
