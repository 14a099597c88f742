#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mhg {

/// e(v_0, ..., v_{t-1}, s): a nonempty, strictly increasing vertex list with one
/// exponent s_v >= 1 per vertex. All exponents 1 is a plain hyperedge; two vertices is a (multi)graph edge.
class MultiHyperedge {
   public:
    /// Throws std::invalid_argument on an empty, unsorted, or mismatched edge, or a zero exponent.
    MultiHyperedge(std::vector<std::uint32_t> vertices, std::vector<std::uint32_t> exponents);
    /// Plain hyperedge: every exponent 1.
    static MultiHyperedge hyperedge(std::vector<std::uint32_t> vertices);

    const std::vector<std::uint32_t> &vertices() const {
        return vertices_;
    }
    const std::vector<std::uint32_t> &exponents() const {
        return exponents_;
    }
    std::size_t size() const {
        return vertices_.size();
    }
    std::optional<std::uint32_t> exponent_of(std::uint32_t vertex) const;
    bool contains(std::uint32_t vertex) const {
        return exponent_of(vertex).has_value();
    }
    std::uint32_t max_exponent() const;
    /// The edge with `vertex` deleted; nothing when that leaves the empty edge.
    std::optional<MultiHyperedge> without(std::uint32_t vertex) const;

    std::string to_string() const;

    /// Enumeration order: size, then vertex list, then exponent list, each lexicographic.
    std::strong_ordering operator<=>(const MultiHyperedge &o) const;
    bool operator==(const MultiHyperedge &) const = default;

   private:
    std::vector<std::uint32_t> vertices_;
    std::vector<std::uint32_t> exponents_;
};

enum class GraphKind { graph, hypergraph, multigraph, multihypergraph };

std::string_view kind_name(GraphKind kind);
std::optional<GraphKind> parse_kind(std::string_view name);
bool edge_fits_kind(const MultiHyperedge &e, GraphKind kind);

/// Edge -> weight m_e in Z_d over N vertices. Canonical by construction: zero weights are never stored.
class WeightedEdgeMap {
   public:
    WeightedEdgeMap(std::uint64_t d, std::uint32_t n);

    std::uint64_t modulus() const {
        return d_;
    }
    std::uint32_t vertex_count() const {
        return n_;
    }
    const std::map<MultiHyperedge, std::uint32_t> &edges() const {
        return edges_;
    }
    std::size_t size() const {
        return edges_.size();
    }
    bool empty() const {
        return edges_.empty();
    }

    /// Adds `weight` (mod d) to the edge's weight, i.e. applies the gate that many more times.
    /// Throws VertexOutOfRange for vertices >= N and std::invalid_argument for exponents >= d.
    void add(const MultiHyperedge &e, std::int64_t weight);
    void set(const MultiHyperedge &e, std::int64_t weight);
    std::uint32_t weight(const MultiHyperedge &e) const;

    bool operator==(const WeightedEdgeMap &) const = default;

   private:
    void check_edge(const MultiHyperedge &e) const;

    std::uint64_t d_;
    std::uint32_t n_;
    std::map<MultiHyperedge, std::uint32_t> edges_;
};

/// All 2^N - 1 nonempty hyperedges in enumeration order.
std::vector<MultiHyperedge> enumerate_hyperedges(std::uint32_t n);
/// All d^N - 1 multihyperedges: every nonempty subset crossed with every exponent tuple in {1..d-1}^t.
std::vector<MultiHyperedge> enumerate_multihyperedges(std::uint32_t n, std::uint64_t d);

bool validate_kind(const WeightedEdgeMap &map, GraphKind kind);

}  // namespace mhg
