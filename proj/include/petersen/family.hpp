#pragma once

// The seven Petersen family graphs: explicit labeled constructions, closure of
// K6 under Delta-Y / Y-Delta exchanges, and identification up to isomorphism.

#include <petersen/canonical.hpp>
#include <petersen/graph.hpp>

#include <array>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace petersen {

enum class FamilyName { K6, P7, K331, P8, K44_MINUS_E, P9, P10 };

inline constexpr std::array<FamilyName, 7> all_family_names{FamilyName::K6,          FamilyName::P7, FamilyName::K331,
                                                            FamilyName::P8,          FamilyName::K44_MINUS_E,
                                                            FamilyName::P9,          FamilyName::P10};

inline std::string to_string(FamilyName name)
{
    switch (name) {
    case FamilyName::K6:
        return "K6";
    case FamilyName::P7:
        return "P7";
    case FamilyName::K331:
        return "K331";
    case FamilyName::P8:
        return "P8";
    case FamilyName::K44_MINUS_E:
        return "K44_MINUS_E";
    case FamilyName::P9:
        return "P9";
    case FamilyName::P10:
        return "P10";
    }
    return "?";
}

inline std::optional<FamilyName> parse_family_name(std::string_view text)
{
    for (auto n : all_family_names) {
        if (to_string(n) == text) {
            return n;
        }
    }
    if (text == "K3,3,1") {
        return FamilyName::K331;
    }
    if (text == "K44-e" || text == "K4,4-e") {
        return FamilyName::K44_MINUS_E;
    }
    return std::nullopt;
}

struct Exchange {
    enum class Kind { delta_y, y_delta };
    Kind kind;
    FamilyName from;
    FamilyName to;

    friend bool operator==(const Exchange&, const Exchange&) = default;
};

inline std::string to_string(Exchange::Kind k)
{
    return k == Exchange::Kind::delta_y ? "delta_y" : "y_delta";
}

struct FamilyMember {
    FamilyName name;
    Graph graph;
    /// Exchanges leading from K6 to this member along the closure search.
    std::vector<Exchange> provenance;
};

/// Classic Petersen graph: outer 5-cycle 0..4, pentagram 5..9, spokes i -- i+5.
inline Graph standard_petersen_graph()
{
    std::vector<Label> labels;
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i) {
        labels.push_back(std::to_string(i));
    }
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(std::to_string(i), std::to_string((i + 1) % 5));
        edges.emplace_back(std::to_string(i), std::to_string(i + 5));
        edges.emplace_back(std::to_string(i + 5), std::to_string((i + 2) % 5 + 5));
    }
    return build_graph(labels, edges);
}

/// Family members with the vertex labels used in the per-graph arguments.
inline Graph named_graph(FamilyName name)
{
    switch (name) {
    case FamilyName::K6:
        return complete_graph({"a", "b", "c", "d", "e", "f"});
    case FamilyName::P7:
        return delta_y(complete_graph({"a", "b", "c", "1", "2", "3"}), {"1", "2", "3"}, "y");
    case FamilyName::K331:
        return complete_multipartite({{"a", "b", "c"}, {"1", "2", "3"}, {"v"}});
    case FamilyName::P8:
        return delta_y(complete_multipartite({{"a", "b", "c"}, {"1", "2", "3"}, {"v"}}), {"v", "a", "1"}, "y");
    case FamilyName::K44_MINUS_E: {
        const auto k44 = complete_multipartite({{"a", "b", "c", "d"}, {"1", "2", "3", "4"}});
        std::vector<Edge> edges;
        for (const auto& e : k44.edges()) {
            if (e != make_edge("4", "a")) {
                edges.push_back(e);
            }
        }
        return build_graph(k44.vertices(), edges);
    }
    case FamilyName::P9:
        return build_graph({"1", "2", "3", "4", "5", "6", "7", "8", "9"},
                           {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}, {"6", "7"},
                            {"7", "3"}, {"2", "8"}, {"8", "5"}, {"1", "9"}, {"9", "4"}, {"7", "8"}, {"8", "9"},
                            {"9", "7"}});
    case FamilyName::P10:
        return build_graph({"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
                           {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "1"}, {"1", "7"}, {"2", "8"},
                            {"3", "9"}, {"4", "10"}, {"5", "6"}, {"7", "10"}, {"10", "8"}, {"8", "6"}, {"6", "9"},
                            {"9", "7"}});
    }
    throw std::logic_error("unknown family name");
}

namespace detail {

inline const std::map<CanonicalLabel, FamilyName>& family_label_table()
{
    static const auto table = [] {
        std::map<CanonicalLabel, FamilyName> t;
        for (auto n : all_family_names) {
            t.emplace(canonical_form(named_graph(n)), n);
        }
        return t;
    }();
    return table;
}

inline Label fresh_label(const Graph& g)
{
    for (int k = 0;; ++k) {
        Label candidate = "y" + std::to_string(k);
        if (!g.has_vertex(candidate)) {
            return candidate;
        }
    }
}

} // namespace detail

inline std::optional<FamilyName> identify_family_member(const Graph& g)
{
    if (g.order() > max_canonical_order || g.size() != 15) {
        return std::nullopt;
    }
    const auto& table = detail::family_label_table();
    const auto it = table.find(canonical_form(g));
    if (it == table.end()) {
        return std::nullopt;
    }
    return it->second;
}

/// Every exchange product of g: Delta-Y on each triangle, Y-Delta at each
/// degree-3 vertex whose neighbors are pairwise non-adjacent.
inline std::vector<std::pair<Exchange::Kind, Graph>> exchange_neighbors(const Graph& g)
{
    std::vector<std::pair<Exchange::Kind, Graph>> out;
    const auto y = detail::fresh_label(g);
    for (const auto& t : triangles(g)) {
        out.emplace_back(Exchange::Kind::delta_y, delta_y(g, t, y));
    }
    for (const auto& v : g.vertices()) {
        if (g.degree(v) != 3) {
            continue;
        }
        try {
            out.emplace_back(Exchange::Kind::y_delta, y_delta(g, v));
        } catch (const GraphError& e) {
            if (e.kind() != GraphError::Kind::multi_edge) {
                throw;
            }
        }
    }
    return out;
}

/// Breadth-first closure of {K6} under both exchanges, deduplicated by
/// canonical form and ordered by vertex count, then canonical label.
inline std::vector<FamilyMember> generate_petersen_family()
{
    struct Found {
        Graph graph;
        std::vector<Exchange> provenance;
    };
    std::map<CanonicalLabel, Found> found;
    std::deque<CanonicalLabel> queue;

    const auto name_of = [](const CanonicalLabel& c) {
        const auto& table = detail::family_label_table();
        const auto it = table.find(c);
        if (it == table.end()) {
            throw std::logic_error("exchange closure produced a graph outside the named family");
        }
        return it->second;
    };

    const auto seed = named_graph(FamilyName::K6);
    const auto seed_label = canonical_form(seed);
    found.emplace(seed_label, Found{seed, {}});
    queue.push_back(seed_label);
    while (!queue.empty()) {
        const auto current = queue.front();
        queue.pop_front();
        const Found here = found.at(current);
        for (auto& [kind, next] : exchange_neighbors(here.graph)) {
            auto label = canonical_form(next);
            if (found.count(label)) {
                continue;
            }
            auto path = here.provenance;
            path.push_back({kind, name_of(current), name_of(label)});
            found.emplace(label, Found{std::move(next), std::move(path)});
            queue.push_back(label);
        }
    }

    std::vector<std::pair<std::pair<std::size_t, CanonicalLabel>, FamilyMember>> members;
    for (auto& [label, f] : found) {
        const auto name = name_of(label);
        members.push_back({{f.graph.order(), label}, FamilyMember{name, named_graph(name), f.provenance}});
    }
    std::sort(members.begin(), members.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<FamilyMember> out;
    for (auto& m : members) {
        out.push_back(std::move(m.second));
    }
    return out;
}

} // namespace petersen
