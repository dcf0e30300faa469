#pragma once

// Straight-line spatial embeddings with integer coordinates, exact linking
// numbers of disjoint cycles, and the mod-2 sum of linking numbers over
// disjoint cycle pairs.

#include <petersen/cycles.hpp>
#include <petersen/graph.hpp>
#include <petersen/predicates.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace petersen {

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LinkingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Embedding {
    Graph host;
    std::map<Label, Point3> coords;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct EmbeddingVerdict {
    enum class Kind { ok, missing_vertex, unknown_vertex, out_of_range, coincident, collinear, edge_crossing };
    Kind kind = Kind::ok;
    std::string detail;

    bool ok() const noexcept { return kind == Kind::ok; }
};

inline std::string to_string(EmbeddingVerdict::Kind k)
{
    switch (k) {
    case EmbeddingVerdict::Kind::ok:
        return "ok";
    case EmbeddingVerdict::Kind::missing_vertex:
        return "missing-vertex";
    case EmbeddingVerdict::Kind::unknown_vertex:
        return "unknown-vertex";
    case EmbeddingVerdict::Kind::out_of_range:
        return "out-of-range";
    case EmbeddingVerdict::Kind::coincident:
        return "coincident";
    case EmbeddingVerdict::Kind::collinear:
        return "collinear";
    case EmbeddingVerdict::Kind::edge_crossing:
        return "edge-crossing";
    }
    return "?";
}

/// Checks general position: all vertices placed, distinct, no three
/// collinear, and edges meeting only at shared endpoints.
inline EmbeddingVerdict validate_embedding(const Embedding& e)
{
    using Kind = EmbeddingVerdict::Kind;
    const auto& g = e.host;
    for (const auto& v : g.vertices()) {
        if (!e.coords.count(v)) {
            return {Kind::missing_vertex, "vertex " + v + " has no coordinates"};
        }
    }
    for (const auto& [v, p] : e.coords) {
        if (!g.has_vertex(v)) {
            return {Kind::unknown_vertex, "coordinates given for unknown vertex " + v};
        }
        for (auto c : {p.x, p.y, p.z}) {
            if (c > max_coordinate || c < -max_coordinate) {
                return {Kind::out_of_range, "vertex " + v + " has a coordinate beyond +-" +
                                                std::to_string(max_coordinate)};
            }
        }
    }
    const auto& vs = g.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (e.coords.at(vs[i]) == e.coords.at(vs[j])) {
                return {Kind::coincident, "vertices " + vs[i] + " and " + vs[j] + " coincide"};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (collinear(e.coords.at(vs[i]), e.coords.at(vs[j]), e.coords.at(vs[k]))) {
                    return {Kind::collinear, "vertices " + vs[i] + ", " + vs[j] + ", " + vs[k] + " are collinear"};
                }
            }
        }
    }
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& [a, b] = es[i];
            const auto& [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) {
                continue; // with no three collinear these meet only at the shared endpoint
            }
            if (segments_meet_3d(e.coords.at(a), e.coords.at(b), e.coords.at(c), e.coords.at(d))) {
                return {Kind::edge_crossing, "edges " + a + "-" + b + " and " + c + "-" + d + " intersect"};
            }
        }
    }
    return {};
}

inline constexpr int embedding_attempt_budget = 1000;

/// Coordinates drawn uniformly from [-radius, radius]^3 with a seeded
/// mt19937_64, redrawn until the embedding is in general position.
inline Embedding random_embedding(const Graph& g, std::uint64_t seed, std::int64_t radius)
{
    if (radius < static_cast<std::int64_t>(g.order())) {
        throw EmbeddingError("radius " + std::to_string(radius) + " is smaller than the vertex count " +
                             std::to_string(g.order()));
    }
    if (radius > max_coordinate) {
        throw EmbeddingError("radius " + std::to_string(radius) + " exceeds " + std::to_string(max_coordinate));
    }
    std::mt19937_64 rng(seed);
    const auto span = static_cast<std::uint64_t>(2 * radius + 1);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    const auto draw = [&] {
        std::uint64_t r = rng();
        while (r >= limit) {
            r = rng();
        }
        return static_cast<std::int64_t>(r % span) - radius;
    };
    for (int attempt = 1; attempt <= embedding_attempt_budget; ++attempt) {
        Embedding e{g, {}};
        for (const auto& v : g.vertices()) {
            const auto x = draw();
            const auto y = draw();
            const auto z = draw();
            e.coords[v] = Point3{x, y, z};
        }
        if (validate_embedding(e).ok()) {
            return e;
        }
    }
    throw EmbeddingError("no general-position embedding after " + std::to_string(embedding_attempt_budget) +
                         " attempts");
}

/// Moment-curve placement t -> (t, t^2, t^3) for t = 1..n in label order.
inline Embedding moment_curve_embedding(const Graph& g)
{
    Embedding e{g, {}};
    std::int64_t t = 1;
    for (const auto& v : g.vertices()) {
        e.coords[v] = Point3{t, t * t, t * t * t};
        ++t;
    }
    return e;
}

struct Crossing {
    std::size_t segment_a = 0; ///< segment k runs from seq[k] to seq[k+1] of cycle A
    std::size_t segment_b = 0;
    int sign = 0;
};

struct Diagram {
    std::int64_t shear_p = 0;
    std::int64_t shear_q = 0;
    std::vector<Crossing> crossings;

    long linking_number() const
    {
        long total = 0;
        for (const auto& c : crossings) {
            total += c.sign;
        }
        if (total % 2 != 0) {
            throw std::logic_error("odd signed crossing count between two closed polygons");
        }
        return total / 2;
    }
};

inline constexpr int shear_budget = 64;

/// k-th shear (p, q) of the deterministic sequence; projection maps
/// (x, y, z) to (x + p z, y + q z).
inline std::pair<std::int64_t, std::int64_t> shear(int k)
{
    return {(7 * k + 1) % 17 - 8, (11 * k + 3) % 19 - 9};
}

/// Crossings of polygons a and b under shear (p, q), or nullopt when the
/// projection is not generic for this pair (touching or overlapping images).
inline std::optional<Diagram> project_pair(const std::vector<Point3>& a, const std::vector<Point3>& b, std::int64_t p,
                                           std::int64_t q)
{
    const auto flat = [p, q](const Point3& v) { return Point2{Wide(v.x) + Wide(p) * v.z, Wide(v.y) + Wide(q) * v.z}; };
    Diagram d{p, q, {}};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& a0 = a[i];
        const auto& a1 = a[(i + 1) % a.size()];
        const Point2 pa0 = flat(a0);
        const Point2 pa1 = flat(a1);
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto& b0 = b[j];
            const auto& b1 = b[(j + 1) % b.size()];
            const Point2 pb0 = flat(b0);
            const Point2 pb1 = flat(b1);
            const int o1 = orient2d(pa0, pa1, pb0);
            const int o2 = orient2d(pa0, pa1, pb1);
            const int o3 = orient2d(pb0, pb1, pa0);
            const int o4 = orient2d(pb0, pb1, pa1);
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                // Crossing sign depends only on the two directions and the
                // offset between the segments, not on the projection.
                const int s = triple_sign(a1 - a0, b1 - b0, b0 - a0);
                if (s == 0) {
                    throw LinkingError("segments of the two cycles intersect in space");
                }
                d.crossings.push_back({i, j, -s});
            } else if (segments_meet_2d(pa0, pa1, pb0, pb1)) {
                return std::nullopt;
            }
        }
    }
    return d;
}

namespace detail {

inline std::vector<Point3> polygon(const Embedding& e, const Cycle& c)
{
    std::vector<Point3> out;
    for (const auto& v : c.seq()) {
        const auto it = e.coords.find(v);
        if (it == e.coords.end()) {
            throw LinkingError("vertex " + v + " has no coordinates");
        }
        out.push_back(it->second);
    }
    return out;
}

} // namespace detail

/// First `count` generic diagrams for the pair along the shear sequence.
inline std::vector<Diagram> generic_diagrams(const Embedding& e, const Cycle& a, const Cycle& b, std::size_t count)
{
    const auto pa = detail::polygon(e, a);
    const auto pb = detail::polygon(e, b);
    std::vector<Diagram> out;
    for (int k = 0; k < shear_budget && out.size() < count; ++k) {
        const auto [p, q] = shear(k);
        if (auto d = project_pair(pa, pb, p, q)) {
            out.push_back(std::move(*d));
        }
    }
    return out;
}

/// Linking number of the oriented polygons a and b (orientation = canonical
/// vertex order of each cycle). Computed under two different generic shears,
/// which must agree.
inline long linking_number(const Embedding& e, const Cycle& a, const Cycle& b)
{
    for (const auto& v : a.seq()) {
        if (b.contains(v)) {
            throw LinkingError("cycles " + a.str() + " and " + b.str() + " share vertex " + v);
        }
    }
    for (const auto* c : {&a, &b}) {
        if (!is_cycle_of(*c, e.host)) {
            throw LinkingError("cycle " + c->str() + " is not a cycle of the embedded graph");
        }
    }
    const auto diagrams = generic_diagrams(e, a, b, 2);
    if (diagrams.size() < 2) {
        throw LinkingError("fewer than two generic shears found within " + std::to_string(shear_budget) +
                           " for " + a.str() + " and " + b.str());
    }
    const long first = diagrams[0].linking_number();
    const long second = diagrams[1].linking_number();
    if (first != second) {
        throw std::logic_error("linking number depends on the projection: " + std::to_string(first) + " vs " +
                               std::to_string(second));
    }
    return first;
}

/// Linking number of two polygons given directly by their vertex positions
/// in traversal order.
inline long polygon_linking_number(const std::vector<Point3>& a, const std::vector<Point3>& b)
{
    std::vector<Diagram> found;
    for (int k = 0; k < shear_budget && found.size() < 2; ++k) {
        const auto [p, q] = shear(k);
        if (auto d = project_pair(a, b, p, q)) {
            found.push_back(std::move(*d));
        }
    }
    if (found.size() < 2) {
        throw LinkingError("fewer than two generic shears found");
    }
    const long first = found[0].linking_number();
    if (first != found[1].linking_number()) {
        throw std::logic_error("linking number depends on the projection");
    }
    return first;
}

enum class PairMode { triangles_only, all_disjoint_cycles };

inline std::string to_string(PairMode m)
{
    return m == PairMode::triangles_only ? "TRIANGLES_ONLY" : "ALL_DISJOINT_CYCLES";
}

inline std::vector<std::pair<Cycle, Cycle>> disjoint_cycle_pairs(const Graph& g, PairMode mode)
{
    const auto cycles = mode == PairMode::triangles_only ? enumerate_cycles(g, 3) : enumerate_cycles(g);
    std::vector<std::pair<Cycle, Cycle>> out;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            bool disjoint = true;
            for (const auto& v : cycles[i].seq()) {
                disjoint = disjoint && !cycles[j].contains(v);
            }
            if (disjoint) {
                out.emplace_back(cycles[i], cycles[j]);
            }
        }
    }
    return out;
}

struct LinkedPair {
    Cycle a;
    Cycle b;
    long lk = 0;
};

struct OmegaReport {
    PairMode mode = PairMode::all_disjoint_cycles;
    std::vector<LinkedPair> pairs;
    int parity = 0;

    bool has_nonzero_pair() const
    {
        return std::any_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.lk != 0; });
    }
};

/// Linking numbers over all disjoint pairs and their sum mod 2.
inline OmegaReport omega(const Graph& g, const Embedding& e, PairMode mode)
{
    if (!(e.host == g)) {
        throw EmbeddingError("embedding belongs to a different graph");
    }
    if (const auto v = validate_embedding(e); !v.ok()) {
        throw EmbeddingError("invalid embedding: " + v.detail);
    }
    OmegaReport report;
    report.mode = mode;
    long total = 0;
    for (auto& [a, b] : disjoint_cycle_pairs(g, mode)) {
        const long lk = linking_number(e, a, b);
        total += lk;
        report.pairs.push_back({std::move(a), std::move(b), lk});
    }
    report.parity = static_cast<int>(((total % 2) + 2) % 2);
    return report;
}

} // namespace petersen
