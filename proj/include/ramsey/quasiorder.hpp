#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "ramsey/errors.hpp"
#include "ramsey/structure.hpp"

namespace ramsey {

/// A total quasiorder on {1..r}: reflexive, transitive, every two elements
/// comparable.  Stored as the rank vector of the induced linear order on
/// equivalence classes: rank(i) = number of classes strictly below i's.
class TotalQuasiorder {
public:
    /// Builds from the explicit pair set {(i,j) : i <= j in the quasiorder}.
    TotalQuasiorder(int r, const std::vector<std::pair<int, int>>& pairs) : r_(r) {
        if (r < 1) throw Error(Errc::InvalidArgument, "arity must be positive", r);
        std::vector<std::vector<bool>> le(r, std::vector<bool>(r, false));
        for (const auto& [i, j] : pairs) {
            if (i < 1 || i > r || j < 1 || j > r)
                throw Error(Errc::InvalidArgument, "pair outside {1..r}", i, j);
            le[i - 1][j - 1] = true;
        }
        for (int i = 0; i < r; ++i)
            if (!le[i][i]) throw Error(Errc::InvalidArgument, "quasiorder not reflexive", i + 1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (!le[i][j] && !le[j][i])
                    throw Error(Errc::InvalidArgument, "quasiorder not total", i + 1, j + 1);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int m = 0; m < r; ++m)
                    if (le[i][j] && le[j][m] && !le[i][m])
                        throw Error(Errc::InvalidArgument, "quasiorder not transitive", i + 1,
                                    m + 1);
        ranks_.resize(r);
        for (int i = 0; i < r; ++i) {
            int below = 0;
            std::vector<bool> seen(r, false);
            for (int j = 0; j < r; ++j)
                if (le[j][i] && !le[i][j] && !seen[j]) {
                    // count j's whole class once
                    for (int m = 0; m < r; ++m)
                        if (le[j][m] && le[m][j]) seen[m] = true;
                    ++below;
                }
            ranks_[i] = below;
        }
    }

    /// Builds from a rank vector: values must cover {0..s-1} for some s.
    static TotalQuasiorder from_ranks(std::vector<int> ranks) {
        const int r = static_cast<int>(ranks.size());
        if (r < 1) throw Error(Errc::InvalidArgument, "arity must be positive", r);
        const int top = *std::max_element(ranks.begin(), ranks.end());
        std::vector<bool> present(top + 1, false);
        for (int v : ranks) {
            if (v < 0 || v > top) throw Error(Errc::InvalidArgument, "rank out of range", v);
            present[v] = true;
        }
        for (int v = 0; v <= top; ++v)
            if (!present[v])
                throw Error(Errc::InvalidArgument, "ranks skip a class", v);
        TotalQuasiorder q;
        q.r_ = r;
        q.ranks_ = std::move(ranks);
        return q;
    }

    int arity() const { return r_; }
    const std::vector<int>& ranks() const { return ranks_; }

    /// (i, j) in the quasiorder, 1-based.
    bool contains(int i, int j) const { return ranks_.at(i - 1) <= ranks_.at(j - 1); }

    int class_count() const {
        return 1 + *std::max_element(ranks_.begin(), ranks_.end());
    }

    /// Equivalence classes in ascending order, members ascending.
    std::vector<std::vector<int>> classes() const {
        std::vector<std::vector<int>> out(class_count());
        for (int i = 1; i <= r_; ++i) out[ranks_[i - 1]].push_back(i);
        return out;
    }

    std::string key() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < ranks_.size(); ++i) out << (i ? "," : "") << ranks_[i];
        return out.str();
    }

    friend bool operator==(const TotalQuasiorder&, const TotalQuasiorder&) = default;
    friend bool operator<(const TotalQuasiorder& a, const TotalQuasiorder& b) {
        return a.ranks_ < b.ranks_;
    }

private:
    TotalQuasiorder() = default;

    int r_ = 0;
    std::vector<int> ranks_;
};

/// Every total quasiorder on {1..r}, in ascending rank-vector order.
inline std::vector<TotalQuasiorder> all_total_quasiorders(int r) {
    if (r < 1) throw Error(Errc::InvalidArgument, "arity must be positive", r);
    std::vector<TotalQuasiorder> out;
    std::vector<int> ranks(r, 0);
    while (true) {
        const int top = *std::max_element(ranks.begin(), ranks.end());
        bool contiguous = true;
        std::vector<bool> present(top + 1, false);
        for (int v : ranks) present[v] = true;
        for (int v = 0; v <= top; ++v) contiguous = contiguous && present[v];
        if (contiguous) out.push_back(TotalQuasiorder::from_ranks(ranks));
        int p = r;
        while (p > 0 && ranks[p - 1] == r - 1) ranks[--p] = 0;
        if (p == 0) break;
        ++ranks[p - 1];
    }
    return out;
}

/// The type of a tuple: tp(a) = {(i,j) : a_i <= a_j}.
inline TotalQuasiorder tp(const Tuple& a) {
    if (a.empty()) throw Error(Errc::InvalidArgument, "type of an empty tuple");
    std::vector<int> distinct(a);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> ranks;
    ranks.reserve(a.size());
    for (int v : a)
        ranks.push_back(static_cast<int>(
            std::lower_bound(distinct.begin(), distinct.end(), v) - distinct.begin()));
    return TotalQuasiorder::from_ranks(std::move(ranks));
}

/// The matrix of a tuple: its distinct values in increasing order, one
/// representative per type class.
inline Tuple mat(const Tuple& a) {
    if (a.empty()) throw Error(Errc::InvalidArgument, "matrix of an empty tuple");
    Tuple distinct(a);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    return distinct;
}

/// Reconstructs the tuple with type sigma and matrix b: entries of class
/// xi all take the value b_xi.
inline Tuple tup(const TotalQuasiorder& sigma, const Tuple& b) {
    if (static_cast<int>(b.size()) != sigma.class_count())
        throw Error(Errc::ClassCountMismatch, "matrix length differs from class count",
                    static_cast<long>(b.size()), sigma.class_count());
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b[i - 1] >= b[i])
            throw Error(Errc::NotStrictlyIncreasing, "matrix must increase", b[i - 1], b[i]);
    Tuple a;
    a.reserve(sigma.arity());
    for (int i = 1; i <= sigma.arity(); ++i) a.push_back(b[sigma.ranks()[i - 1]]);
    return a;
}

}  // namespace ramsey
