#pragma once

// Non-flatness certificates. A certificate names a base (a cycle, or a Y),
// three cycle systems that each panel into a sphere through the base, and
// connector paths outside the spheres. The verifier checks the combinatorial
// hypotheses; it does not attempt any topology.
//
// Hypotheses checked, in order:
//   cycles-valid            every face (and the base) lies in the graph
//   bohme-system            all faces together have pairwise connected intersections
//   each-system-sphere      each system is a combinatorial 2-sphere
//   base-shared             each carrier contains the base; a cycle base is a face of each system
//   pairwise-overlap-exact  carrier_i and carrier_j meet in exactly base + declared overlap
//   connector-disjointness  connectors avoid carrier edges, interiors avoid carriers,
//                           endpoints sit on off-base parts (or on outside junction vertices)
//   connector-connectivity  every pair of systems is linked by a connector component
//                           (or, for P10_PATTERN, by the declared overlap)

#include <petersen/cycles.hpp>
#include <petersen/graph.hpp>
#include <petersen/sphere.hpp>

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace petersen {

enum class Schema { triangle_connector, y_connector, y_base, p10_pattern };

inline constexpr std::array<Schema, 4> all_schemas{Schema::triangle_connector, Schema::y_connector, Schema::y_base,
                                                   Schema::p10_pattern};

inline std::string to_string(Schema s)
{
    switch (s) {
    case Schema::triangle_connector:
        return "TRIANGLE_CONNECTOR";
    case Schema::y_connector:
        return "Y_CONNECTOR";
    case Schema::y_base:
        return "Y_BASE";
    case Schema::p10_pattern:
        return "P10_PATTERN";
    }
    return "?";
}

inline std::optional<Schema> parse_schema(std::string_view text)
{
    for (auto s : all_schemas) {
        if (to_string(s) == text) {
            return s;
        }
    }
    return std::nullopt;
}

enum class BaseKind { cycle, y };

/// Carrier overlap between systems `first` < `second` (0-based) beyond the
/// base. Its edges may end on base vertices.
struct ExtraOverlap {
    std::size_t first = 0;
    std::size_t second = 0;
    SubgraphPiece piece;

    friend bool operator==(const ExtraOverlap&, const ExtraOverlap&) = default;
};

struct Certificate {
    std::string graph_name;
    Schema schema = Schema::triangle_connector;
    BaseKind base_kind = BaseKind::cycle;
    SubgraphPiece base;
    std::vector<CycleSystem> systems;
    std::vector<ExtraOverlap> extra_overlaps;
    std::vector<std::vector<Label>> connectors;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct VerificationReport {
    bool pass = false;
    /// Set when the certificate violates its own structural invariants; no
    /// checks are run in that case.
    std::optional<std::string> malformed;
    std::vector<CheckResult> checks;

    const CheckResult* find(std::string_view name) const
    {
        for (const auto& c : checks) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }

    /// First failing check, if any.
    const CheckResult* first_failure() const
    {
        for (const auto& c : checks) {
            if (!c.pass) {
                return &c;
            }
        }
        return nullptr;
    }
};

inline constexpr std::array<std::string_view, 7> check_names{
    "cycles-valid",           "bohme-system",           "each-system-sphere",    "base-shared",
    "pairwise-overlap-exact", "connector-disjointness", "connector-connectivity"};

/// The base as a cycle, when the piece is one connected 2-regular subgraph.
inline std::optional<Cycle> piece_as_cycle(const SubgraphPiece& p)
{
    if (p.vertices.size() < 3 || p.edges.size() != p.vertices.size()) {
        return std::nullopt;
    }
    std::map<Label, std::vector<Label>> adj;
    for (const auto& [a, b] : p.edges) {
        if (!p.vertices.count(a) || !p.vertices.count(b)) {
            return std::nullopt;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (const auto& v : p.vertices) {
        if (adj[v].size() != 2) {
            return std::nullopt;
        }
    }
    std::vector<Label> seq{*p.vertices.begin()};
    Label prev;
    while (seq.size() < p.vertices.size()) {
        const auto& nb = adj[seq.back()];
        Label next = nb[0] != prev ? nb[0] : nb[1];
        if (std::find(seq.begin(), seq.end(), next) != seq.end()) {
            return std::nullopt;
        }
        prev = seq.back();
        seq.push_back(std::move(next));
    }
    return Cycle(std::move(seq));
}

/// Center of a Y (star with three leaves), when the piece is one.
inline std::optional<Label> piece_as_y(const SubgraphPiece& p)
{
    if (p.vertices.size() != 4 || p.edges.size() != 3) {
        return std::nullopt;
    }
    std::map<Label, int> degree;
    for (const auto& [a, b] : p.edges) {
        if (!p.vertices.count(a) || !p.vertices.count(b)) {
            return std::nullopt;
        }
        ++degree[a];
        ++degree[b];
    }
    for (const auto& [v, d] : degree) {
        if (d == 3) {
            return v;
        }
    }
    return std::nullopt;
}

inline SubgraphPiece y_piece(const Label& center, const std::array<Label, 3>& leaves)
{
    SubgraphPiece p;
    p.vertices.insert(center);
    for (const auto& l : leaves) {
        p.vertices.insert(l);
        p.edges.insert(make_edge(center, l));
    }
    return p;
}

/// Structural problems that make the certificate meaningless to check.
inline std::optional<std::string> certificate_defect(const Graph& g, const Certificate& cert)
{
    if (cert.systems.size() != 3) {
        return "expected 3 systems, got " + std::to_string(cert.systems.size());
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (cert.systems[i].faces.empty()) {
            return "system " + std::to_string(i + 1) + " has no faces";
        }
    }
    if (cert.base_kind == BaseKind::cycle && !piece_as_cycle(cert.base)) {
        return "base is declared a cycle but is not one: " + cert.base.str();
    }
    if (cert.base_kind == BaseKind::y && !piece_as_y(cert.base)) {
        return "base is declared a Y but is not a star with three leaves: " + cert.base.str();
    }
    if ((cert.schema == Schema::y_base) != (cert.base_kind == BaseKind::y)) {
        return "schema " + to_string(cert.schema) + " does not match the base kind";
    }
    if (cert.schema == Schema::p10_pattern) {
        if (cert.extra_overlaps.size() != 1) {
            return "P10_PATTERN needs exactly one extra overlap";
        }
    } else if (!cert.extra_overlaps.empty()) {
        return "extra overlaps are only allowed for P10_PATTERN";
    }
    for (const auto& o : cert.extra_overlaps) {
        if (o.first >= o.second || o.second >= 3) {
            return "overlap pair must name two distinct systems in increasing order";
        }
        if (o.piece.empty()) {
            return "overlap piece is empty";
        }
    }
    if (cert.connectors.empty()) {
        return "no connectors";
    }

    std::set<Label> mentioned(cert.base.vertices);
    for (const auto& s : cert.systems) {
        for (const auto& f : s.faces) {
            mentioned.insert(f.seq().begin(), f.seq().end());
        }
    }
    for (const auto& o : cert.extra_overlaps) {
        mentioned.insert(o.piece.vertices.begin(), o.piece.vertices.end());
        for (const auto& [a, b] : o.piece.edges) {
            mentioned.insert(a);
            mentioned.insert(b);
        }
    }
    for (const auto& path : cert.connectors) {
        if (path.size() < 2) {
            return "connector with fewer than two vertices";
        }
        if (std::set<Label>(path.begin(), path.end()).size() != path.size()) {
            return "connector " + Cycle::describe(path) + " repeats a vertex";
        }
        mentioned.insert(path.begin(), path.end());
    }
    for (const auto& v : mentioned) {
        if (!g.has_vertex(v)) {
            return "vertex '" + v + "' is not in the graph";
        }
    }
    return std::nullopt;
}

namespace detail {

inline std::string pair_name(std::size_t i, std::size_t j)
{
    return "systems " + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

struct CertificateContext {
    std::array<SubgraphPiece, 3> carriers;
    std::array<std::set<Label>, 3> off_base;
    std::set<Label> carrier_vertices;
    std::set<Edge> carrier_edges;

    CertificateContext(const Certificate& cert)
    {
        for (std::size_t i = 0; i < 3; ++i) {
            carriers[i] = carrier(cert.systems[i]);
            for (const auto& v : carriers[i].vertices) {
                if (!cert.base.vertices.count(v)) {
                    off_base[i].insert(v);
                }
                carrier_vertices.insert(v);
            }
            carrier_edges.insert(carriers[i].edges.begin(), carriers[i].edges.end());
        }
    }

    std::set<std::size_t> systems_touching(const Label& v) const
    {
        std::set<std::size_t> out;
        for (std::size_t i = 0; i < 3; ++i) {
            if (off_base[i].count(v)) {
                out.insert(i);
            }
        }
        return out;
    }
};

inline CheckResult check_cycles_valid(const Graph& g, const Certificate& cert)
{
    for (std::size_t i = 0; i < cert.systems.size(); ++i) {
        for (const auto& f : cert.systems[i].faces) {
            if (!is_cycle_of(f, g)) {
                return {"cycles-valid", false,
                        "face " + f.str() + " of system " + std::to_string(i + 1) + " is not a cycle of the graph"};
            }
        }
    }
    for (const auto& [a, b] : cert.base.edges) {
        if (!g.adjacent(a, b)) {
            return {"cycles-valid", false, "base edge " + a + "-" + b + " is not in the graph"};
        }
    }
    return {"cycles-valid", true, ""};
}

inline CheckResult check_bohme(const Certificate& cert)
{
    std::vector<Cycle> all;
    for (const auto& s : cert.systems) {
        all.insert(all.end(), s.faces.begin(), s.faces.end());
    }
    const auto verdict = bohme_condition(std::move(all));
    if (verdict.ok) {
        return {"bohme-system", true, ""};
    }
    const auto& [c1, c2] = *verdict.witness;
    const auto meet = cycle_intersection(c1, c2);
    return {"bohme-system", false,
            c1.str() + " and " + c2.str() + " meet in " + std::to_string(piece_components(meet)) +
                " components: " + meet.str()};
}

inline CheckResult check_spheres(const Certificate& cert)
{
    for (std::size_t i = 0; i < 3; ++i) {
        const auto v = is_combinatorial_sphere(cert.systems[i]);
        if (!v.is_sphere) {
            const auto& f = v.failures.front();
            return {"each-system-sphere", false,
                    "system " + std::to_string(i + 1) + ": " + to_string(f.kind) + ": " + f.detail};
        }
    }
    return {"each-system-sphere", true, ""};
}

inline CheckResult check_base_shared(const Certificate& cert, const CertificateContext& ctx)
{
    const auto base_cycle = cert.base_kind == BaseKind::cycle ? piece_as_cycle(cert.base) : std::nullopt;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!ctx.carriers[i].contains(cert.base)) {
            return {"base-shared", false, "carrier of system " + std::to_string(i + 1) + " does not contain the base"};
        }
        if (base_cycle) {
            const auto& faces = cert.systems[i].faces;
            if (std::find(faces.begin(), faces.end(), *base_cycle) == faces.end()) {
                return {"base-shared", false,
                        "base cycle " + base_cycle->str() + " is not a face of system " + std::to_string(i + 1)};
            }
        }
    }
    return {"base-shared", true, ""};
}

inline CheckResult check_overlaps(const Certificate& cert, const CertificateContext& ctx)
{
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            SubgraphPiece expected = cert.base;
            for (const auto& o : cert.extra_overlaps) {
                if (o.first == i && o.second == j) {
                    expected.merge(o.piece);
                }
            }
            const auto actual = intersect(ctx.carriers[i], ctx.carriers[j]);
            if (actual != expected) {
                return {"pairwise-overlap-exact", false,
                        pair_name(i, j) + " meet in " + actual.str() + ", expected " + expected.str()};
            }
        }
    }
    return {"pairwise-overlap-exact", true, ""};
}

inline CheckResult check_connector_disjointness(const Graph& g, const Certificate& cert, const CertificateContext& ctx)
{
    const auto fail = [](const std::vector<Label>& path, const std::string& why) {
        return CheckResult{"connector-disjointness", false, "connector " + Cycle::describe(path) + ": " + why};
    };
    for (const auto& path : cert.connectors) {
        for (std::size_t k = 0; k + 1 < path.size(); ++k) {
            if (!g.adjacent(path[k], path[k + 1])) {
                return fail(path, "edge " + path[k] + "-" + path[k + 1] + " is not in the graph");
            }
            if (ctx.carrier_edges.count(make_edge(path[k], path[k + 1]))) {
                return fail(path, "edge " + path[k] + "-" + path[k + 1] + " lies on a sphere");
            }
        }
        for (std::size_t k = 1; k + 1 < path.size(); ++k) {
            if (ctx.carrier_vertices.count(path[k])) {
                return fail(path, "interior vertex " + path[k] + " lies on a sphere");
            }
        }
        const auto& head = path.front();
        const auto& tail = path.back();
        const auto head_sys = ctx.systems_touching(head);
        const auto tail_sys = ctx.systems_touching(tail);
        if (head_sys.empty()) {
            return fail(path, "start " + head + " is not on an off-base part");
        }
        if (ctx.carrier_vertices.count(tail)) {
            if (tail_sys.empty()) {
                return fail(path, "end " + tail + " is on a sphere but not on an off-base part");
            }
            bool distinct = false;
            for (auto i : head_sys) {
                for (auto j : tail_sys) {
                    distinct = distinct || i != j;
                }
            }
            if (!distinct) {
                return fail(path, "both ends lie on the same sphere");
            }
        }
    }
    return {"connector-disjointness", true, ""};
}

inline CheckResult check_connector_connectivity(const Certificate& cert, const CertificateContext& ctx)
{
    // Connectors sharing an outside vertex form one connected piece; pieces
    // meeting only on a sphere stay separate.
    const std::size_t n = cert.connectors.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) {
        parent[i] = i;
    }
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x] = parent[parent[x]];
        }
        return x;
    };
    std::map<Label, std::size_t> owner;
    for (std::size_t c = 0; c < n; ++c) {
        for (const auto& v : cert.connectors[c]) {
            if (ctx.carrier_vertices.count(v)) {
                continue;
            }
            auto [it, fresh] = owner.emplace(v, c);
            if (!fresh) {
                parent[find(c)] = find(it->second);
            }
        }
    }
    std::map<std::size_t, std::set<std::size_t>> touched;
    for (std::size_t c = 0; c < n; ++c) {
        auto& t = touched[find(c)];
        for (const auto* end : {&cert.connectors[c].front(), &cert.connectors[c].back()}) {
            const auto s = ctx.systems_touching(*end);
            t.insert(s.begin(), s.end());
        }
    }
    std::set<std::pair<std::size_t, std::size_t>> linked;
    for (const auto& [root, systems] : touched) {
        for (auto i : systems) {
            for (auto j : systems) {
                if (i < j) {
                    linked.emplace(i, j);
                }
            }
        }
    }
    if (cert.schema == Schema::p10_pattern) {
        for (const auto& o : cert.extra_overlaps) {
            bool off_base = false;
            for (const auto& v : o.piece.vertices) {
                off_base = off_base || !cert.base.vertices.count(v);
            }
            if (off_base) {
                linked.emplace(o.first, o.second);
            }
        }
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
            if (!linked.count({i, j})) {
                return {"connector-connectivity", false, pair_name(i, j) + " are not linked by any connector"};
            }
        }
    }
    return {"connector-connectivity", true, ""};
}

} // namespace detail

inline VerificationReport verify_certificate(const Graph& g, const Certificate& cert)
{
    VerificationReport report;
    report.malformed = certificate_defect(g, cert);
    if (report.malformed) {
        return report;
    }
    const detail::CertificateContext ctx(cert);
    report.checks.push_back(detail::check_cycles_valid(g, cert));
    report.checks.push_back(detail::check_bohme(cert));
    report.checks.push_back(detail::check_spheres(cert));
    report.checks.push_back(detail::check_base_shared(cert, ctx));
    report.checks.push_back(detail::check_overlaps(cert, ctx));
    report.checks.push_back(detail::check_connector_disjointness(g, cert, ctx));
    report.checks.push_back(detail::check_connector_connectivity(cert, ctx));
    report.pass = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; });
    return report;
}

/// Applies `relabel` to every label in the certificate.
template <typename Map>
Certificate relabeled(const Certificate& cert, const Map& relabel)
{
    const auto piece = [&](const SubgraphPiece& p) {
        SubgraphPiece out;
        for (const auto& v : p.vertices) {
            out.vertices.insert(relabel.at(v));
        }
        for (const auto& [a, b] : p.edges) {
            out.edges.insert(make_edge(relabel.at(a), relabel.at(b)));
        }
        return out;
    };
    Certificate out = cert;
    out.base = piece(cert.base);
    for (auto& s : out.systems) {
        for (auto& f : s.faces) {
            std::vector<Label> seq;
            for (const auto& v : f.seq()) {
                seq.push_back(relabel.at(v));
            }
            f = Cycle(std::move(seq));
        }
    }
    for (auto& o : out.extra_overlaps) {
        o.piece = piece(o.piece);
    }
    for (auto& path : out.connectors) {
        for (auto& v : path) {
            v = relabel.at(v);
        }
    }
    return out;
}

} // namespace petersen
