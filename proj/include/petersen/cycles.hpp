#pragma once

// Simple cycles, their pairwise intersections, and the Bohme-system condition
// (every pair of cycles meets in a connected or empty subgraph).

#include <petersen/graph.hpp>

#include <algorithm>
#include <compare>
#include <iterator>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace petersen {

class CycleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A simple cycle held in canonical form: rotated to start at its smallest
/// label, oriented so the second vertex precedes the last.
class Cycle {
public:
    explicit Cycle(std::vector<Label> seq) : seq_(std::move(seq))
    {
        if (seq_.size() < 3) {
            throw CycleError("cycle needs at least 3 vertices, got " + std::to_string(seq_.size()));
        }
        std::set<Label> seen(seq_.begin(), seq_.end());
        if (seen.size() != seq_.size()) {
            throw CycleError("cycle " + describe(seq_) + " repeats a vertex");
        }
        const auto smallest = std::min_element(seq_.begin(), seq_.end());
        std::rotate(seq_.begin(), smallest, seq_.end());
        if (seq_.back() < seq_[1]) {
            std::reverse(seq_.begin() + 1, seq_.end());
        }
    }

    const std::vector<Label>& seq() const noexcept { return seq_; }
    std::size_t size() const noexcept { return seq_.size(); }

    bool contains(const Label& v) const { return std::find(seq_.begin(), seq_.end(), v) != seq_.end(); }

    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            out.push_back(make_edge(seq_[i], seq_[(i + 1) % seq_.size()]));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::string str() const { return describe(seq_); }

    /// Shorter cycles first, then lexicographic on the canonical sequence.
    friend std::strong_ordering operator<=>(const Cycle& a, const Cycle& b)
    {
        if (auto c = a.seq_.size() <=> b.seq_.size(); c != 0) {
            return c;
        }
        return a.seq_ <=> b.seq_;
    }
    friend bool operator==(const Cycle&, const Cycle&) = default;

    static std::string describe(const std::vector<Label>& seq)
    {
        std::string s = "(";
        for (std::size_t i = 0; i < seq.size(); ++i) {
            s += (i ? "," : "") + seq[i];
        }
        return s + ")";
    }

private:
    std::vector<Label> seq_;
};

/// A subgraph given by explicit vertex and edge sets. Isolated vertices are
/// allowed; edge endpoints must be listed among the vertices.
struct SubgraphPiece {
    std::set<Label> vertices;
    std::set<Edge> edges;

    bool empty() const noexcept { return vertices.empty() && edges.empty(); }

    static SubgraphPiece of(const Cycle& c)
    {
        SubgraphPiece p;
        p.vertices.insert(c.seq().begin(), c.seq().end());
        for (auto& e : c.edges()) {
            p.edges.insert(std::move(e));
        }
        return p;
    }

    void merge(const SubgraphPiece& other)
    {
        vertices.insert(other.vertices.begin(), other.vertices.end());
        edges.insert(other.edges.begin(), other.edges.end());
    }

    bool contains(const SubgraphPiece& other) const
    {
        return std::includes(vertices.begin(), vertices.end(), other.vertices.begin(), other.vertices.end()) &&
               std::includes(edges.begin(), edges.end(), other.edges.begin(), other.edges.end());
    }

    std::string str() const
    {
        std::string s = "{vertices:";
        for (const auto& v : vertices) {
            s += " " + v;
        }
        s += "; edges:";
        for (const auto& [a, b] : edges) {
            s += " " + a + "-" + b;
        }
        return s + "}";
    }

    friend bool operator==(const SubgraphPiece&, const SubgraphPiece&) = default;
};

inline SubgraphPiece intersect(const SubgraphPiece& a, const SubgraphPiece& b)
{
    SubgraphPiece out;
    std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                          std::inserter(out.vertices, out.vertices.end()));
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::inserter(out.edges, out.edges.end()));
    return out;
}

inline SubgraphPiece subtract(const SubgraphPiece& a, const SubgraphPiece& b)
{
    SubgraphPiece out;
    std::set_difference(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                        std::inserter(out.vertices, out.vertices.end()));
    std::set_difference(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                        std::inserter(out.edges, out.edges.end()));
    return out;
}

inline SubgraphPiece cycle_intersection(const Cycle& c1, const Cycle& c2)
{
    return intersect(SubgraphPiece::of(c1), SubgraphPiece::of(c2));
}

/// Connected components of a piece; an isolated vertex is its own component.
inline std::size_t piece_components(const SubgraphPiece& p)
{
    std::map<Label, Label> parent;
    for (const auto& v : p.vertices) {
        parent[v] = v;
    }
    for (const auto& [a, b] : p.edges) {
        parent.try_emplace(a, a);
        parent.try_emplace(b, b);
    }
    std::function<Label(const Label&)> find = [&](const Label& v) -> Label {
        auto& up = parent.at(v);
        if (up != v) {
            up = find(up);
        }
        return up;
    };
    std::size_t components = parent.size();
    for (const auto& [a, b] : p.edges) {
        auto ra = find(a);
        auto rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components;
}

inline bool is_cycle_of(const Cycle& c, const Graph& g)
{
    const auto& s = c.seq();
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!g.adjacent(s[i], s[(i + 1) % s.size()])) {
            return false;
        }
    }
    return true;
}

/// True when no edge of g joins two non-consecutive vertices of c.
inline bool is_induced(const Cycle& c, const Graph& g)
{
    const auto& s = c.seq();
    const std::size_t k = s.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) {
                continue;
            }
            if (g.adjacent(s[i], s[j])) {
                return false;
            }
        }
    }
    return true;
}

/// All simple cycles of g, canonical and sorted. Each cycle is found once by
/// growing paths from its smallest vertex through larger vertices only.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, std::optional<std::size_t> max_len = std::nullopt,
                                           bool induced_only = false)
{
    const std::size_t n = g.order();
    const std::size_t limit = max_len.value_or(n);
    std::vector<Cycle> out;
    std::vector<std::size_t> path;
    std::vector<char> on_path(n, 0);

    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        const std::size_t tip = path.back();
        for (auto w : g.neighbors(tip)) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) {
                std::vector<Label> seq;
                for (auto i : path) {
                    seq.push_back(g.label(i));
                }
                Cycle c(std::move(seq));
                if (!induced_only || is_induced(c, g)) {
                    out.push_back(std::move(c));
                }
            }
            if (w > start && !on_path[w] && path.size() < limit) {
                path.push_back(w);
                on_path[w] = 1;
                extend(start);
                on_path[w] = 0;
                path.pop_back();
            }
        }
    };

    for (std::size_t s = 0; s < n; ++s) {
        path = {s};
        on_path[s] = 1;
        extend(s);
        on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct BohmeVerdict {
    bool ok = true;
    std::optional<std::pair<Cycle, Cycle>> witness;
};

/// Pairwise-connected-intersection test on the cycles as given (sorted and
/// deduplicated first, so the witness is the first failing pair in canonical order).
inline BohmeVerdict bohme_condition(std::vector<Cycle> cycles)
{
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (piece_components(cycle_intersection(cycles[i], cycles[j])) > 1) {
                return {false, std::make_pair(cycles[i], cycles[j])};
            }
        }
    }
    return {};
}

inline BohmeVerdict is_bohme_system(std::vector<Cycle> cycles, const Graph& g)
{
    for (const auto& c : cycles) {
        if (!is_cycle_of(c, g)) {
            throw CycleError("cycle " + c.str() + " is not a cycle of the graph");
        }
    }
    return bohme_condition(std::move(cycles));
}

} // namespace petersen
