#pragma once

// Recovers the labeling of the Petersen graph used by the P10 certificate
// from the adjacency facts it relies on.

#include <petersen/cycles.hpp>
#include <petersen/family.hpp>
#include <petersen/graph.hpp>
#include <petersen/sphere.hpp>

#include <map>
#include <vector>

namespace petersen {

/// Adjacencies the P10 labeling must have: the base pentagon (1,2,3,4,5),
/// the cycle (2,3,4,10,8), edges 7-10, 7-9, 8-10, 8-6 and the shared edge 5-6.
inline std::vector<Edge> p10_required_edges()
{
    return {make_edge("1", "2"), make_edge("2", "3"),  make_edge("3", "4"),  make_edge("4", "5"),
            make_edge("5", "1"), make_edge("4", "10"), make_edge("10", "8"), make_edge("8", "2"),
            make_edge("7", "10"), make_edge("7", "9"), make_edge("8", "6"),  make_edge("5", "6")};
}

/// Vertex sets whose induced subgraphs must each panel into a sphere through
/// the base pentagon.
inline std::vector<std::vector<Label>> p10_sphere_sets()
{
    return {{"1", "2", "3", "4", "5", "6", "9"}, {"1", "2", "3", "4", "5", "7", "10"}, {"1", "2", "3", "4", "5", "6", "8"}};
}

/// All bijections from standard_petersen_graph() vertices onto labels 1..10
/// that satisfy the required adjacencies and sphere conditions.
inline std::vector<std::map<Label, Label>> solve_p10_labeling()
{
    const auto std_graph = standard_petersen_graph();
    const auto required = p10_required_edges();
    std::vector<Label> targets;
    for (int i = 1; i <= 10; ++i) {
        targets.push_back(std::to_string(i));
    }
    const Cycle base({"1", "2", "3", "4", "5"});

    const auto& sources = std_graph.vertices();
    std::map<Label, Label> assign;   // source -> target
    std::map<Label, Label> inverse;  // target -> source
    std::vector<std::map<Label, Label>> out;

    const auto consistent = [&] {
        for (const auto& [a, b] : required) {
            const auto ia = inverse.find(a);
            const auto ib = inverse.find(b);
            if (ia != inverse.end() && ib != inverse.end() && !std_graph.adjacent(ia->second, ib->second)) {
                return false;
            }
        }
        return true;
    };

    const auto spheres_ok = [&] {
        const auto labeled = relabeled(std_graph, assign);
        for (const auto& set : p10_sphere_sets()) {
            const auto h = induced_subgraph(labeled, set);
            CycleSystem sys{enumerate_cycles(h, std::nullopt, true)};
            if (!is_combinatorial_sphere(sys).is_sphere || carrier(sys).vertices.size() != set.size() ||
                std::find(sys.faces.begin(), sys.faces.end(), base) == sys.faces.end()) {
                return false;
            }
        }
        return true;
    };

    const auto place = [&](auto&& self, std::size_t k) -> void {
        if (k == sources.size()) {
            if (spheres_ok()) {
                out.push_back(assign);
            }
            return;
        }
        for (const auto& t : targets) {
            if (inverse.count(t)) {
                continue;
            }
            assign[sources[k]] = t;
            inverse[t] = sources[k];
            if (consistent()) {
                self(self, k + 1);
            }
            assign.erase(sources[k]);
            inverse.erase(t);
        }
    };
    place(place, 0);
    return out;
}

} // namespace petersen
