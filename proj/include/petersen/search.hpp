#pragma once

// Exhaustive search for non-flatness certificates on small graphs.
//
// For each base (an induced cycle, or a Y) the search collects apex sets X
// whose induced subgraph G[base + X] has induced cycles forming a sphere
// through the base. Triples of such spheres are then equipped with
// connectors (direct edges between off-base parts, else an outside junction
// vertex) and kept when verify_certificate passes.

#include <petersen/certificate.hpp>
#include <petersen/cycles.hpp>
#include <petersen/graph.hpp>
#include <petersen/sphere.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace petersen {

class SearchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t max_search_order = 12;

struct SearchBounds {
    std::size_t max_base_len = 6;
    /// Largest apex set added to the base to form one sphere.
    std::size_t max_apex_size = 2;
    std::vector<Schema> schemas{all_schemas.begin(), all_schemas.end()};
    std::size_t max_results = 64;
};

namespace detail {

struct BaseCandidate {
    BaseKind kind;
    SubgraphPiece piece;
    std::optional<Cycle> cycle;
};

struct SphereCandidate {
    std::vector<Label> apex;
    CycleSystem system;
    SubgraphPiece carrier;
};

inline std::vector<BaseCandidate> search_bases(const Graph& g, const SearchBounds& bounds)
{
    const auto allowed = [&](Schema s) {
        return std::find(bounds.schemas.begin(), bounds.schemas.end(), s) != bounds.schemas.end();
    };
    std::vector<BaseCandidate> out;
    if (allowed(Schema::triangle_connector) || allowed(Schema::y_connector) || allowed(Schema::p10_pattern)) {
        for (auto& c : enumerate_cycles(g, bounds.max_base_len, true)) {
            out.push_back({BaseKind::cycle, SubgraphPiece::of(c), std::move(c)});
        }
    }
    if (allowed(Schema::y_base)) {
        for (const auto& center : g.vertices()) {
            const auto nb = g.neighbor_labels(center);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                for (std::size_t j = i + 1; j < nb.size(); ++j) {
                    for (std::size_t k = j + 1; k < nb.size(); ++k) {
                        out.push_back({BaseKind::y, y_piece(center, {nb[i], nb[j], nb[k]}), std::nullopt});
                    }
                }
            }
        }
    }
    return out;
}

inline std::vector<std::vector<Label>> apex_sets(const std::vector<Label>& rest, std::size_t max_size)
{
    std::vector<std::vector<Label>> out;
    std::vector<Label> current;
    const auto grow = [&](auto&& self, std::size_t from, std::size_t size) -> void {
        if (current.size() == size) {
            out.push_back(current);
            return;
        }
        for (std::size_t i = from; i < rest.size(); ++i) {
            current.push_back(rest[i]);
            self(self, i + 1, size);
            current.pop_back();
        }
    };
    for (std::size_t size = 1; size <= max_size; ++size) {
        grow(grow, 0, size);
    }
    return out;
}

inline std::vector<SphereCandidate> sphere_candidates(const Graph& g, const BaseCandidate& base,
                                                      std::size_t max_apex_size)
{
    std::vector<Label> rest;
    for (const auto& v : g.vertices()) {
        if (!base.piece.vertices.count(v)) {
            rest.push_back(v);
        }
    }
    std::vector<SphereCandidate> out;
    for (auto& apex : apex_sets(rest, max_apex_size)) {
        std::vector<Label> keep(base.piece.vertices.begin(), base.piece.vertices.end());
        keep.insert(keep.end(), apex.begin(), apex.end());
        const auto h = induced_subgraph(g, keep);
        CycleSystem sys{enumerate_cycles(h, std::nullopt, true)};
        if (sys.faces.empty() || !is_combinatorial_sphere(sys).is_sphere) {
            continue;
        }
        auto car = carrier(sys);
        if (!car.contains(base.piece) || car.vertices.size() != keep.size()) {
            continue;
        }
        if (base.cycle && std::find(sys.faces.begin(), sys.faces.end(), *base.cycle) == sys.faces.end()) {
            continue;
        }
        out.push_back({std::move(apex), std::move(sys), std::move(car)});
    }
    return out;
}

// Connectors linking all three pairs of spheres: direct edges first, then
// outside junction vertices for the pairs still unlinked. Returns nullopt
// when some pair cannot be linked this way.
inline std::optional<std::pair<std::vector<std::vector<Label>>, bool>> build_connectors(
    const Graph& g, const std::array<SubgraphPiece, 3>& carriers, const SubgraphPiece& base,
    const std::set<std::pair<std::size_t, std::size_t>>& pre_linked)
{
    std::array<std::set<Label>, 3> off;
    std::set<Label> on_sphere;
    std::set<Edge> sphere_edges;
    for (std::size_t i = 0; i < 3; ++i) {
        for (const auto& v : carriers[i].vertices) {
            on_sphere.insert(v);
            if (!base.vertices.count(v)) {
                off[i].insert(v);
            }
        }
        sphere_edges.insert(carriers[i].edges.begin(), carriers[i].edges.end());
    }

    std::vector<std::vector<Label>> connectors;
    bool used_junction = false;
    std::set<std::pair<std::size_t, std::size_t>> linked = pre_linked;

    const auto direct_edge = [&](std::size_t i, std::size_t j) -> std::optional<std::vector<Label>> {
        for (const auto& u : off[i]) {
            for (const auto& w : off[j]) {
                if (u != w && g.adjacent(u, w) && !sphere_edges.count(make_edge(u, w))) {
                    return std::vector<Label>{u, w};
                }
            }
        }
        return std::nullopt;
    };

    std::set<std::pair<std::size_t, std::size_t>> missing;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!linked.count({i, j})) {
                missing.emplace(i, j);
            }
        }
    }
    std::vector<std::vector<Label>> direct;
    std::set<std::pair<std::size_t, std::size_t>> still_missing;
    for (auto [i, j] : missing) {
        if (auto e = direct_edge(i, j)) {
            direct.push_back(std::move(*e));
        } else {
            still_missing.emplace(i, j);
        }
    }
    connectors = direct;
    if (still_missing.empty()) {
        return std::make_pair(connectors, used_junction);
    }

    // Outside vertices adjacent to off-base parts.
    const auto attachment = [&](const Label& z, std::size_t i) -> std::optional<Label> {
        for (const auto& u : off[i]) {
            if (g.adjacent(z, u)) {
                return u;
            }
        }
        return std::nullopt;
    };
    const auto outside = [&] {
        std::vector<Label> out;
        for (const auto& v : g.vertices()) {
            if (!on_sphere.count(v)) {
                out.push_back(v);
            }
        }
        return out;
    }();

    // A single junction reaching all three spheres replaces everything else.
    for (const auto& z : outside) {
        std::vector<std::vector<Label>> spokes;
        for (std::size_t i = 0; i < 3; ++i) {
            if (auto u = attachment(z, i)) {
                spokes.push_back({*u, z});
            }
        }
        if (spokes.size() == 3 && pre_linked.empty()) {
            return std::make_pair(spokes, true);
        }
    }
    for (auto [i, j] : still_missing) {
        bool done = false;
        for (const auto& z : outside) {
            const auto ui = attachment(z, i);
            const auto uj = attachment(z, j);
            if (ui && uj) {
                connectors.push_back({*ui, z});
                connectors.push_back({*uj, z});
                used_junction = true;
                done = true;
                break;
            }
        }
        if (!done) {
            return std::nullopt;
        }
    }
    std::sort(connectors.begin(), connectors.end());
    connectors.erase(std::unique(connectors.begin(), connectors.end()), connectors.end());
    return std::make_pair(connectors, used_junction);
}

} // namespace detail

/// Verified certificates for g, in canonical order of (base, spheres, connectors).
inline std::vector<Certificate> search_certificates(const Graph& g, const SearchBounds& bounds = {})
{
    if (g.order() > max_search_order) {
        throw SearchError("certificate search supports at most " + std::to_string(max_search_order) +
                          " vertices, got " + std::to_string(g.order()));
    }
    if (bounds.max_base_len < 3 || bounds.max_base_len > max_search_order) {
        throw SearchError("max_base_len must lie in [3, " + std::to_string(max_search_order) + "]");
    }
    if (bounds.max_apex_size < 1 || bounds.max_apex_size > 3) {
        throw SearchError("max_apex_size must lie in [1, 3]");
    }
    if (bounds.max_results == 0) {
        throw SearchError("max_results must be positive");
    }
    const auto allowed = [&](Schema s) {
        return std::find(bounds.schemas.begin(), bounds.schemas.end(), s) != bounds.schemas.end();
    };

    std::vector<Certificate> results;
    for (const auto& base : detail::search_bases(g, bounds)) {
        const auto spheres = detail::sphere_candidates(g, base, bounds.max_apex_size);
        for (std::size_t i = 0; i < spheres.size(); ++i) {
            for (std::size_t j = i + 1; j < spheres.size(); ++j) {
                for (std::size_t k = j + 1; k < spheres.size(); ++k) {
                    const std::array<const detail::SphereCandidate*, 3> pick{&spheres[i], &spheres[j], &spheres[k]};
                    const std::array<SubgraphPiece, 3> carriers{pick[0]->carrier, pick[1]->carrier, pick[2]->carrier};

                    std::vector<ExtraOverlap> overlaps;
                    for (std::size_t a = 0; a < 3; ++a) {
                        for (std::size_t b = a + 1; b < 3; ++b) {
                            auto extra = subtract(intersect(carriers[a], carriers[b]), base.piece);
                            if (!extra.empty()) {
                                overlaps.push_back({a, b, std::move(extra)});
                            }
                        }
                    }
                    std::set<std::pair<std::size_t, std::size_t>> pre_linked;
                    for (const auto& o : overlaps) {
                        pre_linked.emplace(o.first, o.second);
                    }
                    if (overlaps.size() > 1 || (!overlaps.empty() && base.kind == BaseKind::y)) {
                        continue;
                    }
                    auto connectors = detail::build_connectors(g, carriers, base.piece, pre_linked);
                    if (!connectors) {
                        continue;
                    }
                    Schema schema = Schema::triangle_connector;
                    if (base.kind == BaseKind::y) {
                        schema = Schema::y_base;
                    } else if (!overlaps.empty()) {
                        schema = Schema::p10_pattern;
                    } else if (connectors->second) {
                        schema = Schema::y_connector;
                    }
                    if (!allowed(schema)) {
                        continue;
                    }
                    Certificate cert;
                    cert.schema = schema;
                    cert.base_kind = base.kind;
                    cert.base = base.piece;
                    cert.systems = {pick[0]->system, pick[1]->system, pick[2]->system};
                    cert.extra_overlaps = std::move(overlaps);
                    cert.connectors = std::move(connectors->first);
                    if (verify_certificate(g, cert).pass) {
                        results.push_back(std::move(cert));
                        if (results.size() >= bounds.max_results) {
                            return results;
                        }
                    }
                }
            }
        }
    }
    return results;
}

} // namespace petersen
