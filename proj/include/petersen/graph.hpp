#pragma once

// Finite simple undirected graphs with string vertex labels, plus the
// Delta-Y / Y-Delta exchanges.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace petersen {

using Label = std::string;

/// Unordered vertex pair, stored with endpoints in sorted order.
using Edge = std::pair<Label, Label>;

inline Edge make_edge(Label a, Label b)
{
    if (b < a) {
        std::swap(a, b);
    }
    return {std::move(a), std::move(b)};
}

class GraphError : public std::invalid_argument {
public:
    enum class Kind {
        duplicate_label,
        self_loop,
        duplicate_edge,
        unknown_vertex,
        not_a_triangle,
        label_collision,
        bad_degree,
        multi_edge,
        size_limit,
    };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Immutable simple graph. Vertices are kept sorted, edges are kept sorted
/// lexicographically with each pair's endpoints sorted, so two graphs built
/// from the same data compare equal regardless of input order.
class Graph {
public:
    Graph() = default;

    static Graph build(std::vector<Label> labels, const std::vector<Edge>& edge_list)
    {
        Graph g;
        std::sort(labels.begin(), labels.end());
        for (std::size_t i = 1; i < labels.size(); ++i) {
            if (labels[i] == labels[i - 1]) {
                throw GraphError(GraphError::Kind::duplicate_label, "duplicate vertex label '" + labels[i] + "'");
            }
        }
        g.labels_ = std::move(labels);
        const std::size_t n = g.labels_.size();
        g.adj_.assign(n, {});
        g.matrix_.assign(n * n, 0);
        for (const auto& [a, b] : edge_list) {
            if (a == b) {
                throw GraphError(GraphError::Kind::self_loop, "self-loop at '" + a + "'");
            }
            const auto ia = g.index_of(a);
            const auto ib = g.index_of(b);
            if (!ia || !ib) {
                throw GraphError(GraphError::Kind::unknown_vertex,
                                 "edge (" + a + "," + b + ") has unknown endpoint '" + (ia ? b : a) + "'");
            }
            if (g.matrix_[*ia * n + *ib]) {
                throw GraphError(GraphError::Kind::duplicate_edge, "duplicate edge (" + a + "," + b + ")");
            }
            g.matrix_[*ia * n + *ib] = 1;
            g.matrix_[*ib * n + *ia] = 1;
            g.adj_[*ia].push_back(*ib);
            g.adj_[*ib].push_back(*ia);
            g.edges_.push_back(make_edge(a, b));
        }
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        return g;
    }

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Label>& vertices() const noexcept { return labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Label& label(std::size_t i) const { return labels_.at(i); }

    std::optional<std::size_t> index_of(const Label& v) const
    {
        const auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
        if (it == labels_.end() || *it != v) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - labels_.begin());
    }

    bool has_vertex(const Label& v) const { return index_of(v).has_value(); }

    bool adjacent(std::size_t i, std::size_t j) const { return matrix_[i * order() + j] != 0; }

    bool adjacent(const Label& a, const Label& b) const
    {
        const auto ia = index_of(a);
        const auto ib = index_of(b);
        return ia && ib && adjacent(*ia, *ib);
    }

    /// Neighbor indices of vertex i, ascending.
    const std::vector<std::size_t>& neighbors(std::size_t i) const { return adj_.at(i); }

    std::vector<Label> neighbor_labels(const Label& v) const
    {
        std::vector<Label> out;
        for (auto j : adj_.at(require(v))) {
            out.push_back(labels_[j]);
        }
        return out;
    }

    std::size_t degree(const Label& v) const { return adj_.at(require(v)).size(); }

    std::size_t require(const Label& v) const
    {
        const auto i = index_of(v);
        if (!i) {
            throw GraphError(GraphError::Kind::unknown_vertex, "unknown vertex '" + v + "'");
        }
        return *i;
    }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Label> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<char> matrix_;
};

inline Graph build_graph(std::vector<Label> labels, const std::vector<Edge>& edge_list)
{
    return Graph::build(std::move(labels), edge_list);
}

inline Graph complete_graph(const std::vector<Label>& labels)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            edges.emplace_back(labels[i], labels[j]);
        }
    }
    return build_graph(labels, edges);
}

/// Complete multipartite graph on the given parts.
inline Graph complete_multipartite(const std::vector<std::vector<Label>>& parts)
{
    std::vector<Label> labels;
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        labels.insert(labels.end(), parts[p].begin(), parts[p].end());
        for (std::size_t q = p + 1; q < parts.size(); ++q) {
            for (const auto& a : parts[p]) {
                for (const auto& b : parts[q]) {
                    edges.emplace_back(a, b);
                }
            }
        }
    }
    return build_graph(labels, edges);
}

template <typename Range>
Graph induced_subgraph(const Graph& g, const Range& subset)
{
    std::vector<Label> keep;
    for (const auto& v : subset) {
        g.require(v);
        keep.push_back(v);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (std::binary_search(keep.begin(), keep.end(), e.first) &&
            std::binary_search(keep.begin(), keep.end(), e.second)) {
            edges.push_back(e);
        }
    }
    return build_graph(std::move(keep), edges);
}

inline Graph induced_subgraph(const Graph& g, std::initializer_list<Label> subset)
{
    return induced_subgraph(g, std::vector<Label>(subset));
}

/// Replaces triangle abc by a new vertex joined to a, b and c.
inline Graph delta_y(const Graph& g, const std::array<Label, 3>& triangle, const Label& new_label)
{
    const auto& [a, b, c] = triangle;
    if (a == b || b == c || a == c || !g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(a, c)) {
        throw GraphError(GraphError::Kind::not_a_triangle, "(" + a + "," + b + "," + c + ") is not a triangle");
    }
    if (g.has_vertex(new_label)) {
        throw GraphError(GraphError::Kind::label_collision, "label '" + new_label + "' already in use");
    }
    const std::set<Edge> removed{make_edge(a, b), make_edge(b, c), make_edge(a, c)};
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (!removed.count(e)) {
            edges.push_back(e);
        }
    }
    for (const auto& v : triangle) {
        edges.emplace_back(new_label, v);
    }
    auto labels = g.vertices();
    labels.push_back(new_label);
    return build_graph(std::move(labels), edges);
}

/// Replaces a degree-3 vertex by a triangle on its neighbors. Fails when two
/// of those neighbors are already adjacent, since the result would not be simple.
inline Graph y_delta(const Graph& g, const Label& center)
{
    const auto nbrs = g.neighbor_labels(center);
    if (nbrs.size() != 3) {
        throw GraphError(GraphError::Kind::bad_degree,
                         "vertex '" + center + "' has degree " + std::to_string(nbrs.size()) + ", expected 3");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (g.adjacent(nbrs[i], nbrs[j])) {
                throw GraphError(GraphError::Kind::multi_edge,
                                 "neighbors '" + nbrs[i] + "' and '" + nbrs[j] + "' of '" + center + "' are already adjacent");
            }
        }
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (e.first != center && e.second != center) {
            edges.push_back(e);
        }
    }
    edges.emplace_back(nbrs[0], nbrs[1]);
    edges.emplace_back(nbrs[1], nbrs[2]);
    edges.emplace_back(nbrs[0], nbrs[2]);
    std::vector<Label> labels;
    for (const auto& v : g.vertices()) {
        if (v != center) {
            labels.push_back(v);
        }
    }
    return build_graph(std::move(labels), edges);
}

/// All triangles, each as a sorted label triple, in lexicographic order.
inline std::vector<std::array<Label, 3>> triangles(const Graph& g)
{
    std::vector<std::array<Label, 3>> out;
    const std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (auto j : g.neighbors(i)) {
            if (j <= i) {
                continue;
            }
            for (auto k : g.neighbors(j)) {
                if (k > j && g.adjacent(i, k)) {
                    out.push_back({g.label(i), g.label(j), g.label(k)});
                }
            }
        }
    }
    return out;
}

/// Returns a copy of g with every label mapped through `relabel`.
template <typename Map>
Graph relabeled(const Graph& g, const Map& relabel)
{
    std::vector<Label> labels;
    for (const auto& v : g.vertices()) {
        labels.push_back(relabel.at(v));
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        edges.emplace_back(relabel.at(a), relabel.at(b));
    }
    return build_graph(std::move(labels), edges);
}

} // namespace petersen
