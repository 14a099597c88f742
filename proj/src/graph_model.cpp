#include "mhg/graph_model.hpp"

#include <algorithm>
#include <stdexcept>

#include "mhg/errors.hpp"
#include "mhg/residue.hpp"

namespace mhg {

MultiHyperedge::MultiHyperedge(std::vector<std::uint32_t> vertices, std::vector<std::uint32_t> exponents)
    : vertices_(std::move(vertices)), exponents_(std::move(exponents)) {
    if (vertices_.empty()) {
        throw std::invalid_argument("the empty edge is not a valid multihyperedge");
    }
    if (vertices_.size() != exponents_.size()) {
        throw std::invalid_argument("edge needs one exponent per vertex");
    }
    for (std::size_t i = 1; i < vertices_.size(); i++) {
        if (vertices_[i - 1] >= vertices_[i]) {
            throw std::invalid_argument("edge vertices must be strictly increasing");
        }
    }
    for (auto s : exponents_) {
        if (s == 0) {
            throw std::invalid_argument("edge exponents must be at least 1");
        }
    }
}

MultiHyperedge MultiHyperedge::hyperedge(std::vector<std::uint32_t> vertices) {
    std::vector<std::uint32_t> ones(vertices.size(), 1);
    return MultiHyperedge(std::move(vertices), std::move(ones));
}

std::optional<std::uint32_t> MultiHyperedge::exponent_of(std::uint32_t vertex) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), vertex);
    if (it == vertices_.end() || *it != vertex) {
        return std::nullopt;
    }
    return exponents_[static_cast<std::size_t>(it - vertices_.begin())];
}

std::uint32_t MultiHyperedge::max_exponent() const {
    return *std::max_element(exponents_.begin(), exponents_.end());
}

std::optional<MultiHyperedge> MultiHyperedge::without(std::uint32_t vertex) const {
    std::vector<std::uint32_t> vs, ss;
    for (std::size_t i = 0; i < vertices_.size(); i++) {
        if (vertices_[i] != vertex) {
            vs.push_back(vertices_[i]);
            ss.push_back(exponents_[i]);
        }
    }
    if (vs.empty()) {
        return std::nullopt;
    }
    return MultiHyperedge(std::move(vs), std::move(ss));
}

std::string MultiHyperedge::to_string() const {
    std::string out = "e(";
    for (std::size_t i = 0; i < vertices_.size(); i++) {
        out += (i ? "," : "") + std::to_string(vertices_[i]);
    }
    out += ";s=";
    for (std::size_t i = 0; i < exponents_.size(); i++) {
        out += (i ? "," : "") + std::to_string(exponents_[i]);
    }
    return out + ")";
}

std::strong_ordering MultiHyperedge::operator<=>(const MultiHyperedge &o) const {
    if (auto c = vertices_.size() <=> o.vertices_.size(); c != 0) {
        return c;
    }
    if (auto c = vertices_ <=> o.vertices_; c != 0) {
        return c;
    }
    return exponents_ <=> o.exponents_;
}

std::string_view kind_name(GraphKind kind) {
    switch (kind) {
        case GraphKind::graph:
            return "graph";
        case GraphKind::hypergraph:
            return "hypergraph";
        case GraphKind::multigraph:
            return "multigraph";
        case GraphKind::multihypergraph:
            return "multihypergraph";
    }
    return "";
}

std::optional<GraphKind> parse_kind(std::string_view name) {
    for (auto k : {GraphKind::graph, GraphKind::hypergraph, GraphKind::multigraph, GraphKind::multihypergraph}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool edge_fits_kind(const MultiHyperedge &e, GraphKind kind) {
    const bool pair = e.size() == 2;
    const bool unit = e.max_exponent() == 1;
    switch (kind) {
        case GraphKind::graph:
            return pair && unit;
        case GraphKind::hypergraph:
            return unit;
        case GraphKind::multigraph:
            return pair;
        case GraphKind::multihypergraph:
            return true;
    }
    return false;
}

WeightedEdgeMap::WeightedEdgeMap(std::uint64_t d, std::uint32_t n) : d_(Modulus(d).value()), n_(n) {
    if (n == 0) {
        throw std::invalid_argument("a state needs at least one vertex");
    }
}

void WeightedEdgeMap::check_edge(const MultiHyperedge &e) const {
    if (e.vertices().back() >= n_) {
        throw VertexOutOfRange("edge " + e.to_string() + " references a vertex >= " + std::to_string(n_));
    }
    if (e.max_exponent() >= d_) {
        throw std::invalid_argument("edge " + e.to_string() + " has an exponent >= d = " + std::to_string(d_));
    }
}

void WeightedEdgeMap::add(const MultiHyperedge &e, std::int64_t weight) {
    set(e, static_cast<std::int64_t>(this->weight(e)) + Residue(weight, d_).value());
}

void WeightedEdgeMap::set(const MultiHyperedge &e, std::int64_t weight) {
    check_edge(e);
    const std::uint32_t w = Residue(weight, d_).value();
    if (w == 0) {
        edges_.erase(e);
    } else {
        edges_.insert_or_assign(e, w);
    }
}

std::uint32_t WeightedEdgeMap::weight(const MultiHyperedge &e) const {
    auto it = edges_.find(e);
    return it == edges_.end() ? 0 : it->second;
}

namespace {

void subsets_of_size(std::uint32_t n, std::uint32_t t, std::vector<std::vector<std::uint32_t>> &out) {
    std::vector<std::uint32_t> idx(t);
    for (std::uint32_t i = 0; i < t; i++) {
        idx[i] = i;
    }
    while (true) {
        out.push_back(idx);
        std::int64_t i = static_cast<std::int64_t>(t) - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - t + static_cast<std::uint32_t>(i)) {
            i--;
        }
        if (i < 0) {
            return;
        }
        idx[static_cast<std::size_t>(i)]++;
        for (auto j = static_cast<std::size_t>(i) + 1; j < t; j++) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

std::vector<std::vector<std::uint32_t>> nonempty_subsets(std::uint32_t n) {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint32_t t = 1; t <= n; t++) {
        subsets_of_size(n, t, out);
    }
    return out;
}

}  // namespace

std::vector<MultiHyperedge> enumerate_hyperedges(std::uint32_t n) {
    std::vector<MultiHyperedge> out;
    for (auto &s : nonempty_subsets(n)) {
        out.push_back(MultiHyperedge::hyperedge(std::move(s)));
    }
    return out;
}

std::vector<MultiHyperedge> enumerate_multihyperedges(std::uint32_t n, std::uint64_t d) {
    (void)Modulus(d);
    std::vector<MultiHyperedge> out;
    for (const auto &s : nonempty_subsets(n)) {
        std::vector<std::uint32_t> exps(s.size(), 1);
        while (true) {
            out.emplace_back(s, exps);
            std::size_t i = exps.size();
            while (i > 0 && exps[i - 1] == d - 1) {
                exps[i - 1] = 1;
                i--;
            }
            if (i == 0) {
                break;
            }
            exps[i - 1]++;
        }
    }
    return out;
}

bool validate_kind(const WeightedEdgeMap &map, GraphKind kind) {
    return std::all_of(map.edges().begin(), map.edges().end(),
                       [kind](const auto &kv) { return edge_fits_kind(kv.first, kind); });
}

}  // namespace mhg
