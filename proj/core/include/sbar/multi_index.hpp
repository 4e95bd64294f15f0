#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

namespace sbar {

/// Pair of integers (k1, k2). Which range is legal depends on the consumer:
/// polynomial exponents need Z_+^2, L-indices Z^2_{>=-1}, localized derivative powers Z^2.
struct MultiIndex {
    int first = 0;
    int second = 0;

    constexpr MultiIndex() = default;
    constexpr MultiIndex(int a, int b) : first(a), second(b) {}

    constexpr int operator[](int i) const { return i == 0 ? first : second; }
    constexpr int degree() const { return first + second; }

    constexpr bool is_nonneg() const { return first >= 0 && second >= 0; }
    constexpr bool is_ge_minus_one() const { return first >= -1 && second >= -1; }
    /// Componentwise <=.
    constexpr bool dominated_by(MultiIndex o) const { return first <= o.first && second <= o.second; }

    constexpr MultiIndex operator+(MultiIndex o) const { return {first + o.first, second + o.second}; }
    constexpr MultiIndex operator-(MultiIndex o) const { return {first - o.first, second - o.second}; }
    constexpr MultiIndex operator-() const { return {-first, -second}; }
    constexpr MultiIndex operator*(int k) const { return {first * k, second * k}; }
    constexpr MultiIndex& operator+=(MultiIndex o)
    {
        first += o.first;
        second += o.second;
        return *this;
    }

    constexpr bool operator==(const MultiIndex&) const = default;
    /// Graded order: total degree, then first component.
    constexpr std::strong_ordering operator<=>(const MultiIndex& o) const
    {
        if (auto c = degree() <=> o.degree(); c != 0)
            return c;
        return first <=> o.first;
    }

    std::string str() const { return "(" + std::to_string(first) + "," + std::to_string(second) + ")"; }
};

inline constexpr MultiIndex e1{1, 0};
inline constexpr MultiIndex e2{0, 1};
inline constexpr MultiIndex ones{1, 1};

/// e_1 for j == 1, e_2 for j == 2.
constexpr MultiIndex unit(int j) { return j == 1 ? e1 : e2; }

inline std::ostream& operator<<(std::ostream& os, MultiIndex m) { return os << m.str(); }

struct MultiIndexHash {
    std::size_t operator()(MultiIndex m) const noexcept
    {
        return std::hash<long long>{}((static_cast<long long>(m.first) << 32) ^ static_cast<unsigned>(m.second));
    }
};

} // namespace sbar
