#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

namespace siegel2::gf2 {

// Rows are bit vectors of at most 64 columns.
inline int rank(std::vector<std::uint64_t> rows)
{
    int r = 0;
    for (int col = 63; col >= 0 && r < int(rows.size()); --col) {
        std::uint64_t bit = std::uint64_t(1) << col;
        int pivot = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (rows[i] & bit) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = 0; i < int(rows.size()); ++i)
            if (i != r && (rows[i] & bit))
                rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

// Finds x (bit i selects vectors[i]) with XOR of selected vectors == target.
inline std::optional<std::uint64_t> solve(const std::vector<std::uint64_t>& vectors, std::uint64_t target)
{
    // Gaussian elimination carrying the combination that produced each reduced row.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> basis;  // (value, combination)
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        std::uint64_t v = vectors[i], comb = std::uint64_t(1) << i;
        for (auto& [bv, bc] : basis)
            if ((v ^ bv) < v) {
                v ^= bv;
                comb ^= bc;
            }
        if (v)
            basis.push_back({v, comb});
        std::sort(basis.begin(), basis.end(), [](auto& x, auto& y) { return x.first > y.first; });
    }
    std::uint64_t v = target, comb = 0;
    for (auto& [bv, bc] : basis)
        if ((v ^ bv) < v) {
            v ^= bv;
            comb ^= bc;
        }
    if (v)
        return std::nullopt;
    return comb;
}

} // namespace siegel2::gf2

namespace siegel2 {

// Exact rank over Q.
inline int rational_rank(const std::vector<std::vector<long long>>& matrix)
{
    using Q = boost::rational<long long>;
    std::vector<std::vector<Q>> m;
    for (const auto& row : matrix) {
        std::vector<Q> q;
        for (long long v : row)
            q.push_back(Q(v));
        m.push_back(q);
    }
    if (m.empty())
        return 0;
    int rows = int(m.size()), cols = int(m[0].size()), r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != Q(0)) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[r], m[pivot]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == Q(0))
                continue;
            Q f = m[i][c] / m[r][c];
            for (int k = c; k < cols; ++k)
                m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

} // namespace siegel2
