#pragma once

// JSON serialization of graphs, cycles, systems, certificates, embeddings and
// reports, plus Graphviz DOT export. Parse errors name the offending field.

#include <petersen/certificate.hpp>
#include <petersen/cycles.hpp>
#include <petersen/graph.hpp>
#include <petersen/linking.hpp>
#include <petersen/sphere.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace petersen {

using json = nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int certificate_format_version = 1;

namespace detail {

inline const json& field(const json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object()) {
        throw FormatError(where + ": expected an object");
    }
    const auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(where + "." + key + ": missing");
    }
    return *it;
}

inline const json& array_at(const json& j, const std::string& where)
{
    if (!j.is_array()) {
        throw FormatError(where + ": expected an array");
    }
    return j;
}

inline std::string string_at(const json& j, const std::string& where)
{
    if (!j.is_string()) {
        throw FormatError(where + ": expected a string");
    }
    return j.get<std::string>();
}

inline std::vector<Label> labels_at(const json& j, const std::string& where)
{
    std::vector<Label> out;
    std::size_t k = 0;
    for (const auto& v : array_at(j, where)) {
        out.push_back(string_at(v, where + "[" + std::to_string(k++) + "]"));
    }
    return out;
}

inline Edge edge_at(const json& j, const std::string& where)
{
    const auto ends = labels_at(j, where);
    if (ends.size() != 2) {
        throw FormatError(where + ": expected a pair of vertex labels");
    }
    return make_edge(ends[0], ends[1]);
}

inline json edge_json(const Edge& e)
{
    return json::array({e.first, e.second});
}

} // namespace detail

inline json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges()) {
        edges.push_back(detail::edge_json(e));
    }
    return {{"vertices", g.vertices()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j, const std::string& where = "graph")
{
    const auto labels = detail::labels_at(detail::field(j, "vertices", where), where + ".vertices");
    std::vector<Edge> edges;
    const auto& ej = detail::array_at(detail::field(j, "edges", where), where + ".edges");
    for (std::size_t k = 0; k < ej.size(); ++k) {
        edges.push_back(detail::edge_at(ej[k], where + ".edges[" + std::to_string(k) + "]"));
    }
    try {
        return build_graph(labels, edges);
    } catch (const GraphError& e) {
        throw FormatError(where + ": " + e.what());
    }
}

inline json cycle_to_json(const Cycle& c)
{
    return c.seq();
}

inline Cycle cycle_from_json(const json& j, const std::string& where)
{
    try {
        return Cycle(detail::labels_at(j, where));
    } catch (const CycleError& e) {
        throw FormatError(where + ": " + e.what());
    }
}

/// Sorted list of cycle arrays.
inline json cycles_to_json(std::vector<Cycle> cycles)
{
    std::sort(cycles.begin(), cycles.end());
    json out = json::array();
    for (const auto& c : cycles) {
        out.push_back(cycle_to_json(c));
    }
    return out;
}

inline std::vector<Cycle> cycles_from_json(const json& j, const std::string& where = "cycles")
{
    std::vector<Cycle> out;
    const auto& arr = detail::array_at(j, where);
    for (std::size_t k = 0; k < arr.size(); ++k) {
        out.push_back(cycle_from_json(arr[k], where + "[" + std::to_string(k) + "]"));
    }
    return out;
}

/// Faces keep their order so systems round-trip exactly.
inline json system_to_json(const CycleSystem& s)
{
    json faces = json::array();
    for (const auto& f : s.faces) {
        faces.push_back(cycle_to_json(f));
    }
    return {{"faces", faces}};
}

inline CycleSystem system_from_json(const json& j, const std::string& where = "system")
{
    return CycleSystem{cycles_from_json(detail::field(j, "faces", where), where + ".faces")};
}

inline json piece_to_json(const SubgraphPiece& p)
{
    json edges = json::array();
    for (const auto& e : p.edges) {
        edges.push_back(detail::edge_json(e));
    }
    return {{"vertices", p.vertices}, {"edges", edges}};
}

inline SubgraphPiece piece_from_json(const json& j, const std::string& where)
{
    SubgraphPiece p;
    for (auto& v : detail::labels_at(detail::field(j, "vertices", where), where + ".vertices")) {
        p.vertices.insert(std::move(v));
    }
    if (j.contains("edges")) {
        const auto& ej = detail::array_at(j.at("edges"), where + ".edges");
        for (std::size_t k = 0; k < ej.size(); ++k) {
            p.edges.insert(detail::edge_at(ej[k], where + ".edges[" + std::to_string(k) + "]"));
        }
    }
    return p;
}

inline json certificate_to_json(const Certificate& c)
{
    json base = piece_to_json(c.base);
    base["kind"] = c.base_kind == BaseKind::cycle ? "cycle" : "y";
    json systems = json::array();
    for (const auto& s : c.systems) {
        systems.push_back(system_to_json(s));
    }
    json overlaps = json::array();
    for (const auto& o : c.extra_overlaps) {
        json entry = piece_to_json(o.piece);
        entry["pair"] = json::array({o.first + 1, o.second + 1});
        overlaps.push_back(entry);
    }
    json out = {{"format", certificate_format_version},
                {"schema", to_string(c.schema)},
                {"base", base},
                {"systems", systems},
                {"extra_overlaps", overlaps},
                {"connectors", c.connectors}};
    if (!c.graph_name.empty()) {
        out["graph"] = c.graph_name;
    }
    return out;
}

/// Parses a certificate. A cycle base may list its vertices in cyclic order
/// and omit "edges"; the edges are then read off that order.
inline Certificate certificate_from_json(const json& j, const std::string& where = "certificate")
{
    Certificate c;
    const auto& fmt = detail::field(j, "format", where);
    if (!fmt.is_number_integer() || fmt.get<int>() != certificate_format_version) {
        throw FormatError(where + ".format: expected " + std::to_string(certificate_format_version));
    }
    if (j.contains("graph")) {
        c.graph_name = detail::string_at(j.at("graph"), where + ".graph");
    }
    const auto schema_text = detail::string_at(detail::field(j, "schema", where), where + ".schema");
    const auto schema = parse_schema(schema_text);
    if (!schema) {
        throw FormatError(where + ".schema: unknown schema '" + schema_text + "'");
    }
    c.schema = *schema;

    const auto& bj = detail::field(j, "base", where);
    const auto kind = detail::string_at(detail::field(bj, "kind", where + ".base"), where + ".base.kind");
    if (kind == "cycle") {
        c.base_kind = BaseKind::cycle;
    } else if (kind == "y") {
        c.base_kind = BaseKind::y;
    } else {
        throw FormatError(where + ".base.kind: expected \"cycle\" or \"y\"");
    }
    c.base = piece_from_json(bj, where + ".base");
    if (c.base_kind == BaseKind::cycle && !bj.contains("edges")) {
        const auto order = detail::labels_at(bj.at("vertices"), where + ".base.vertices");
        for (std::size_t k = 0; k < order.size(); ++k) {
            c.base.edges.insert(make_edge(order[k], order[(k + 1) % order.size()]));
        }
    }

    const auto& sj = detail::array_at(detail::field(j, "systems", where), where + ".systems");
    for (std::size_t k = 0; k < sj.size(); ++k) {
        c.systems.push_back(system_from_json(sj[k], where + ".systems[" + std::to_string(k) + "]"));
    }

    if (j.contains("extra_overlaps")) {
        const auto& oj = detail::array_at(j.at("extra_overlaps"), where + ".extra_overlaps");
        for (std::size_t k = 0; k < oj.size(); ++k) {
            const std::string at = where + ".extra_overlaps[" + std::to_string(k) + "]";
            const auto& pair = detail::array_at(detail::field(oj[k], "pair", at), at + ".pair");
            if (pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer() ||
                pair[0].get<int>() < 1 || pair[1].get<int>() < 1) {
                throw FormatError(at + ".pair: expected two 1-based system indices");
            }
            c.extra_overlaps.push_back({static_cast<std::size_t>(pair[0].get<int>() - 1),
                                        static_cast<std::size_t>(pair[1].get<int>() - 1), piece_from_json(oj[k], at)});
        }
    }

    const auto& cj = detail::array_at(detail::field(j, "connectors", where), where + ".connectors");
    for (std::size_t k = 0; k < cj.size(); ++k) {
        c.connectors.push_back(detail::labels_at(cj[k], where + ".connectors[" + std::to_string(k) + "]"));
    }
    return c;
}

inline json report_to_json(const VerificationReport& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    }
    return {{"pass", r.pass}, {"malformed", r.malformed ? json(*r.malformed) : json(nullptr)}, {"checks", checks}};
}

inline json bohme_to_json(const BohmeVerdict& v)
{
    json out = {{"ok", v.ok}, {"witness", nullptr}};
    if (v.witness) {
        const auto meet = cycle_intersection(v.witness->first, v.witness->second);
        out["witness"] = {{"cycles", json::array({cycle_to_json(v.witness->first), cycle_to_json(v.witness->second)})},
                          {"intersection", piece_to_json(meet)},
                          {"components", piece_components(meet)}};
    }
    return out;
}

inline json surface_to_json(const SurfaceVerdict& v)
{
    json failures = json::array();
    for (const auto& f : v.failures) {
        failures.push_back({{"kind", to_string(f.kind)}, {"detail", f.detail}});
    }
    return {{"is_closed_surface", v.is_closed_surface},
            {"is_sphere", v.is_sphere},
            {"euler_characteristic", v.euler_characteristic},
            {"failures", failures}};
}

inline json embedding_to_json(const Embedding& e)
{
    json coords = json::object();
    for (const auto& [v, p] : e.coords) {
        coords[v] = json::array({p.x, p.y, p.z});
    }
    return {{"coords", coords}};
}

inline Embedding embedding_from_json(const json& j, const Graph& host, const std::string& where = "embedding")
{
    Embedding e{host, {}};
    const auto& cj = detail::field(j, "coords", where);
    if (!cj.is_object()) {
        throw FormatError(where + ".coords: expected an object");
    }
    for (const auto& [v, xyz] : cj.items()) {
        const std::string at = where + ".coords." + v;
        if (!xyz.is_array() || xyz.size() != 3 ||
            !std::all_of(xyz.begin(), xyz.end(), [](const json& c) { return c.is_number_integer(); })) {
            throw FormatError(at + ": expected three integers");
        }
        e.coords[v] = Point3{xyz[0].get<std::int64_t>(), xyz[1].get<std::int64_t>(), xyz[2].get<std::int64_t>()};
    }
    return e;
}

inline json omega_to_json(const OmegaReport& r)
{
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back({{"a", cycle_to_json(p.a)}, {"b", cycle_to_json(p.b)}, {"lk", p.lk}});
    }
    return {{"mode", to_string(r.mode)}, {"pairs", pairs}, {"parity", r.parity}};
}

inline std::string dot_quote(const std::string& s)
{
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
        }
        out += ch;
    }
    return out + "\"";
}

inline std::string to_dot(const Graph& g, const std::string& name = "G")
{
    std::ostringstream os;
    os << "graph " << dot_quote(name) << " {\n";
    for (const auto& v : g.vertices()) {
        os << "  " << dot_quote(v) << ";\n";
    }
    for (const auto& [a, b] : g.edges()) {
        os << "  " << dot_quote(a) << " -- " << dot_quote(b) << ";\n";
    }
    os << "}\n";
    return os.str();
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw FormatError(path + ": cannot open file");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path + ": " + e.what());
    }
}

} // namespace petersen
