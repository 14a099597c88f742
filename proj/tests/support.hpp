#pragma once

// Conversions between the oracle's plain structs and library types.

#include "mhg/graph_model.hpp"
#include "mhg/ring_matrix.hpp"
#include "oracles.hpp"

namespace support {

inline mhg::WeightedEdgeMap to_map(const std::vector<oracle::Edge> &edges, std::uint64_t d, std::uint32_t n) {
    mhg::WeightedEdgeMap map(d, n);
    for (const auto &e : edges) {
        map.add(mhg::MultiHyperedge(e.vertices, e.exponents), e.weight);
    }
    return map;
}

inline std::vector<oracle::Edge> to_edges(const mhg::WeightedEdgeMap &map) {
    std::vector<oracle::Edge> out;
    for (const auto &[e, w] : map.edges()) {
        out.push_back({e.vertices(), e.exponents(), w});
    }
    return out;
}

inline oracle::Mat to_rows(const mhg::RingMatrix &m) {
    oracle::Mat out;
    for (std::size_t r = 0; r < m.rows(); r++) {
        out.emplace_back(m.row(r).begin(), m.row(r).end());
    }
    return out;
}

inline mhg::RingMatrix from_rows(const oracle::Mat &rows, std::size_t cols, std::uint64_t d) {
    mhg::RingMatrix m(rows.size(), cols, d);
    for (std::size_t r = 0; r < rows.size(); r++) {
        for (std::size_t c = 0; c < cols; c++) {
            m.set(r, c, rows[r][c]);
        }
    }
    return m;
}

}  // namespace support
