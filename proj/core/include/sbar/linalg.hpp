#pragma once

#include "sbar/lincomb.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace sbar {

/// Incremental exact row echelon form over Q for sparse vectors.
///
/// The pivot of a stored vector is its largest key under Compare, so with a
/// degree-compatible key order the pivots read off filtration dimensions
/// directly. Optionally tracks, for every stored vector, its expression in
/// terms of the inputs passed to insert() (indexed by insertion order).
template <class Key, class Compare = std::less<Key>>
class EchelonBasis {
public:
    using Vector = LinComb<Key, Compare>;
    using Combination = LinComb<int>;

    explicit EchelonBasis(bool track_combinations = false) : track_(track_combinations) {}

    struct Reduction {
        Vector residual;
        Combination combination; // residual = input - sum(combination[i] * input_i)
    };

    /// Fully reduces v against the stored vectors.
    Reduction reduce(const Vector& v) const
    {
        Reduction out{v, {}};
        std::optional<Key> upper;
        while (true) {
            const auto& m = out.residual.terms();
            auto it = upper ? m.lower_bound(*upper) : m.end();
            bool found = false;
            while (it != m.begin()) {
                --it;
                if (rows_.count(it->first)) {
                    found = true;
                    break;
                }
            }
            if (!found)
                break;
            const Key k = it->first;
            const Scalar c = it->second;
            const Row& row = rows_.at(k);
            out.residual.add_scaled(row.vector, -c);
            if (track_)
                out.combination.add_scaled(row.combination, c);
            upper = k;
        }
        return out;
    }

    /// Adds v; returns true when v was independent of the current span.
    bool insert(const Vector& v)
    {
        const int index = inserted_++;
        Reduction r = reduce(v);
        if (r.residual.is_zero()) {
            if (track_)
                last_dependency_ = r.combination;
            return false;
        }
        const auto& m = r.residual.terms();
        const Key pivot = std::prev(m.end())->first;
        const Scalar inv = 1 / std::prev(m.end())->second;
        Row row;
        row.vector = r.residual * inv;
        if (track_) {
            Combination comb(index, 1);
            comb.add_scaled(r.combination, -1);
            row.combination = comb * inv;
        }
        rows_.emplace(pivot, std::move(row));
        return true;
    }

    bool contains(const Vector& v) const { return reduce(v).residual.is_zero(); }

    /// Expresses v as a combination of inserted vectors, if it lies in the span.
    /// Requires tracking.
    std::optional<Combination> solve(const Vector& v) const
    {
        Reduction r = reduce(v);
        if (!r.residual.is_zero())
            return std::nullopt;
        return r.combination;
    }

    /// After insert() returned false: the dependency input_last = sum(c_i input_i).
    const Combination& last_dependency() const { return last_dependency_; }

    std::size_t rank() const { return rows_.size(); }
    int inserted() const { return inserted_; }

    /// Number of stored vectors whose pivot satisfies pred.
    template <class Pred>
    std::size_t count_pivots(Pred&& pred) const
    {
        std::size_t n = 0;
        for (const auto& [k, row] : rows_)
            if (pred(k))
                ++n;
        return n;
    }

    std::vector<Vector> basis() const
    {
        std::vector<Vector> out;
        out.reserve(rows_.size());
        for (const auto& [k, row] : rows_)
            out.push_back(row.vector);
        return out;
    }

private:
    struct Row {
        Vector vector;
        Combination combination;
    };
    std::map<Key, Row, Compare> rows_;
    bool track_;
    int inserted_ = 0;
    Combination last_dependency_;
};

/// Rank of a finite family of sparse vectors.
template <class Key, class Compare>
std::size_t rank_of(const std::vector<LinComb<Key, Compare>>& vectors)
{
    EchelonBasis<Key, Compare> eb;
    for (const auto& v : vectors)
        eb.insert(v);
    return eb.rank();
}

/// Kernel of the linear map sending basis vector j to images[j]; each kernel
/// vector is returned as a combination of column indices.
template <class Key, class Compare>
std::vector<LinComb<int>> kernel_of(const std::vector<LinComb<Key, Compare>>& images)
{
    EchelonBasis<Key, Compare> eb(true);
    std::vector<LinComb<int>> out;
    for (int j = 0; j < static_cast<int>(images.size()); ++j) {
        if (!eb.insert(images[j])) {
            LinComb<int> k(j, 1);
            k.add_scaled(eb.last_dependency(), -1);
            out.push_back(k);
        }
    }
    return out;
}

} // namespace sbar
