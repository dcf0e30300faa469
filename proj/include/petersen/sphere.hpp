#pragma once

// Combinatorial sphere test for a set of paneled cycles: the faces must form
// a connected closed surface (edge degree 2, one closed fan at each vertex)
// with Euler characteristic 2.

#include <petersen/cycles.hpp>

#include <map>
#include <string>
#include <vector>

namespace petersen {

struct CycleSystem {
    std::vector<Cycle> faces;

    friend bool operator==(const CycleSystem&, const CycleSystem&) = default;
};

/// Throws CycleError unless every face is a cycle of host.
inline void validate_system(const CycleSystem& sys, const Graph& host)
{
    for (const auto& f : sys.faces) {
        if (!is_cycle_of(f, host)) {
            throw CycleError("face " + f.str() + " is not a cycle of the host graph");
        }
    }
}

inline SubgraphPiece carrier(const CycleSystem& sys)
{
    SubgraphPiece out;
    for (const auto& f : sys.faces) {
        out.merge(SubgraphPiece::of(f));
    }
    return out;
}

inline long euler_characteristic(const CycleSystem& sys)
{
    const auto c = carrier(sys);
    return static_cast<long>(c.vertices.size()) - static_cast<long>(c.edges.size()) +
           static_cast<long>(sys.faces.size());
}

struct SurfaceFailure {
    enum class Kind { edge_degree, vertex_link, disconnected, chi };
    Kind kind;
    std::string detail;
};

inline std::string to_string(SurfaceFailure::Kind k)
{
    switch (k) {
    case SurfaceFailure::Kind::edge_degree:
        return "edge-degree";
    case SurfaceFailure::Kind::vertex_link:
        return "vertex-link";
    case SurfaceFailure::Kind::disconnected:
        return "disconnected";
    case SurfaceFailure::Kind::chi:
        return "chi";
    }
    return "?";
}

struct SurfaceVerdict {
    bool is_closed_surface = false;
    bool is_sphere = false;
    long euler_characteristic = 0;
    std::vector<SurfaceFailure> failures;
};

namespace detail {

// Nodes 0..k-1 with an edge list; true when the multigraph is one cycle
// through every node (each node degree exactly 2, connected).
inline bool is_single_cycle(std::size_t k, const std::vector<std::pair<std::size_t, std::size_t>>& links)
{
    if (k == 0) {
        return false;
    }
    std::vector<std::size_t> degree(k, 0);
    std::vector<std::vector<std::size_t>> adj(k);
    for (auto [a, b] : links) {
        ++degree[a];
        ++degree[b];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto d : degree) {
        if (d != 2) {
            return false;
        }
    }
    std::vector<char> seen(k, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : adj[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == k;
}

} // namespace detail

inline SurfaceVerdict is_combinatorial_sphere(const CycleSystem& sys)
{
    SurfaceVerdict verdict;
    verdict.euler_characteristic = euler_characteristic(sys);
    const auto& faces = sys.faces;

    std::map<Edge, std::vector<std::size_t>> faces_on_edge;
    std::map<Label, std::vector<std::size_t>> faces_at_vertex;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        for (const auto& e : faces[f].edges()) {
            faces_on_edge[e].push_back(f);
        }
        for (const auto& v : faces[f].seq()) {
            faces_at_vertex[v].push_back(f);
        }
    }

    for (const auto& [e, fs] : faces_on_edge) {
        if (fs.size() != 2) {
            verdict.failures.push_back({SurfaceFailure::Kind::edge_degree,
                                        "edge " + e.first + "-" + e.second + " lies in " + std::to_string(fs.size()) +
                                            " faces"});
        }
    }

    for (const auto& [v, fs] : faces_at_vertex) {
        // Faces around v are joined when they share an edge through v.
        std::map<std::size_t, std::size_t> local;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            local[fs[i]] = i;
        }
        std::vector<std::pair<std::size_t, std::size_t>> links;
        for (const auto& [e, on] : faces_on_edge) {
            if (e.first != v && e.second != v) {
                continue;
            }
            for (std::size_t i = 0; i < on.size(); ++i) {
                for (std::size_t j = i + 1; j < on.size(); ++j) {
                    links.emplace_back(local.at(on[i]), local.at(on[j]));
                }
            }
        }
        if (!detail::is_single_cycle(fs.size(), links)) {
            verdict.failures.push_back(
                {SurfaceFailure::Kind::vertex_link, "faces around vertex " + v + " do not form one closed fan"});
        }
    }

    {
        std::vector<std::pair<std::size_t, std::size_t>> adjacency;
        for (const auto& [e, fs] : faces_on_edge) {
            for (std::size_t i = 1; i < fs.size(); ++i) {
                adjacency.emplace_back(fs[0], fs[i]);
            }
        }
        std::vector<std::size_t> parent(faces.size());
        for (std::size_t i = 0; i < parent.size(); ++i) {
            parent[i] = i;
        }
        auto find = [&](std::size_t x) {
            while (parent[x] != x) {
                x = parent[x] = parent[parent[x]];
            }
            return x;
        };
        std::size_t groups = faces.size();
        for (auto [a, b] : adjacency) {
            auto ra = find(a);
            auto rb = find(b);
            if (ra != rb) {
                parent[ra] = rb;
                --groups;
            }
        }
        if (groups != 1) {
            verdict.failures.push_back({SurfaceFailure::Kind::disconnected,
                                        faces.empty() ? std::string("no faces")
                                                      : std::to_string(groups) + " face-connected components"});
        }
    }

    verdict.is_closed_surface = verdict.failures.empty();
    if (verdict.euler_characteristic != 2) {
        verdict.failures.push_back(
            {SurfaceFailure::Kind::chi, "Euler characteristic " + std::to_string(verdict.euler_characteristic)});
    }
    verdict.is_sphere = verdict.is_closed_surface && verdict.euler_characteristic == 2;
    return verdict;
}

inline SubgraphPiece system_pair_intersection(const CycleSystem& s1, const CycleSystem& s2)
{
    return intersect(carrier(s1), carrier(s2));
}

} // namespace petersen
