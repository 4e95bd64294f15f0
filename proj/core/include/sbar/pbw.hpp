#pragma once

#include "sbar/lincomb.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sbar {

/// PBW rewriting engine for U(g), given a totally ordered basis of g.
///
/// Basis must provide
///   using Letter = ...;                       // totally ordered via operator<
///   using LetterHash = ...;
///   static LinComb<Letter> bracket(const Letter&, const Letter&);
///
/// Words are non-decreasing letter sequences. Products are normalized by
/// repeatedly replacing an adjacent out-of-order pair xy by yx + [x,y].
template <class Basis>
class Pbw {
public:
    using Letter = typename Basis::Letter;
    using Word = std::vector<Letter>;
    using Element = LinComb<Word>;

    static Element one() { return Element(Word{}, 1); }
    static Element scalar(const Scalar& c) { return Element(Word{}, c); }
    static Element letter(const Letter& l, const Scalar& c = 1) { return Element(Word{l}, c); }

    static Element from_lie(const LinComb<Letter>& x)
    {
        Element out;
        for (const auto& [l, c] : x)
            out.add_term(Word{l}, c);
        return out;
    }

    static bool is_sorted(const Word& w)
    {
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] < w[i - 1])
                return false;
        return true;
    }

    /// Normal form of x * w for a sorted word w.
    static const Element& left_multiply(const Letter& x, const Word& w)
    {
        auto& cache = memo();
        Key key{x, w};
        if (auto it = cache.find(key); it != cache.end())
            return it->second;
        Element result;
        if (w.empty() || !(w.front() < x)) {
            Word out;
            out.reserve(w.size() + 1);
            out.push_back(x);
            out.insert(out.end(), w.begin(), w.end());
            result.add_term(std::move(out), 1);
        } else {
            const Letter& y = w.front();
            const Word rest(w.begin() + 1, w.end());
            // x y rest = y (x rest) + [x,y] rest
            const Element tail = left_multiply(x, rest);
            for (const auto& [u, c] : tail)
                result.add_scaled(left_multiply(y, u), c);
            for (const auto& [z, cz] : Basis::bracket(x, y))
                result.add_scaled(left_multiply(z, rest), cz);
        }
        if (cache.size() > kMemoLimit)
            cache.clear();
        return cache.emplace(std::move(key), std::move(result)).first->second;
    }

    /// Normal form of (letters of seq, in order) applied to the element e from the left.
    static Element word_times(std::span<const Letter> seq, const Element& e)
    {
        Element cur = e;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            Element next;
            for (const auto& [w, c] : cur)
                next.add_scaled(left_multiply(*it, w), c);
            cur = std::move(next);
        }
        return cur;
    }

    /// Normal form of c * s_1 s_2 ... s_k for an arbitrary letter sequence.
    static Element normalize(std::span<const Letter> seq, const Scalar& c = 1)
    {
        return word_times(seq, scalar(c));
    }

    static Element multiply(const Element& x, const Element& y)
    {
        Element out;
        for (const auto& [w, c] : x)
            out.add_scaled(word_times(w, y), c);
        return out;
    }

    static Element commutator(const Element& x, const Element& y)
    {
        return multiply(x, y) - multiply(y, x);
    }

    static Element pow(const Element& x, int n)
    {
        if (n < 0)
            throw std::invalid_argument("negative power in an enveloping algebra");
        Element out = one();
        for (int i = 0; i < n; ++i)
            out = multiply(out, x);
        return out;
    }

    static void clear_cache() { memo().clear(); }

private:
    struct Key {
        Letter x;
        Word w;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept
        {
            typename Basis::LetterHash h;
            std::size_t seed = h(k.x);
            for (const auto& l : k.w)
                seed ^= h(l) + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
            return seed;
        }
    };
    static constexpr std::size_t kMemoLimit = 1u << 20;

    // Per-thread memo table: the engine stays pure from the caller's point of view.
    static std::unordered_map<Key, Element, KeyHash>& memo()
    {
        thread_local std::unordered_map<Key, Element, KeyHash> table;
        return table;
    }
};

} // namespace sbar
