#pragma once

// Command-line front end. run() takes the arguments after the program name
// and writes to the given streams so tests can drive it in-process.
//
// Exit codes: 0 success, 1 a check failed (witness printed), 2 usage or
// input format error.

#include <petersen/bundled.hpp>
#include <petersen/certificate.hpp>
#include <petersen/cycles.hpp>
#include <petersen/family.hpp>
#include <petersen/io.hpp>
#include <petersen/linking.hpp>
#include <petersen/search.hpp>
#include <petersen/sphere.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace petersen::cli {

enum ExitCode { ok = 0, check_failed = 1, usage_error = 2 };

struct CliConfig {
    std::string format = "text";
    bool color = false;

    std::string graph;
    std::string input;
    std::optional<std::size_t> max_len;
    bool induced = false;
    bool bundled = false;

    std::size_t max_base_len = SearchBounds{}.max_base_len;
    std::size_t max_apex_size = SearchBounds{}.max_apex_size;
    std::vector<std::string> schemas;
    std::size_t max_results = SearchBounds{}.max_results;

    std::uint64_t seed = 1;
    std::size_t trials = 1;
    std::string mode = "all";
    std::int64_t radius = 1000;
    std::string embedding;
};

namespace detail {

struct Session {
    const CliConfig& cfg;
    std::ostream& out;
    std::ostream& err;

    bool json_mode() const { return cfg.format == "json"; }

    std::string verdict(bool pass) const
    {
        if (!cfg.color) {
            return pass ? "PASS" : "FAIL";
        }
        return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
    }

    void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

struct ResolvedGraph {
    Graph graph;
    std::optional<FamilyName> member;
};

// A family member name or a path to a graph JSON file.
inline ResolvedGraph resolve_graph(const std::string& arg)
{
    if (const auto name = parse_family_name(arg)) {
        return {named_graph(*name), name};
    }
    auto g = graph_from_json(read_json_file(arg));
    auto member = identify_family_member(g);
    return {std::move(g), member};
}

inline std::string provenance_text(const FamilyMember& m)
{
    std::string s = to_string(FamilyName::K6);
    for (const auto& step : m.provenance) {
        s += " -" + to_string(step.kind) + "-> " + to_string(step.to);
    }
    return s;
}

inline int cmd_family(const Session& s)
{
    const auto family = generate_petersen_family();
    if (s.json_mode()) {
        json arr = json::array();
        for (const auto& m : family) {
            json steps = json::array();
            for (const auto& step : m.provenance) {
                steps.push_back({{"kind", to_string(step.kind)}, {"from", to_string(step.from)}, {"to", to_string(step.to)}});
            }
            arr.push_back({{"name", to_string(m.name)},
                           {"vertices", m.graph.order()},
                           {"edges", m.graph.size()},
                           {"provenance", steps},
                           {"graph", graph_to_json(m.graph)}});
        }
        s.emit(arr);
        return ok;
    }
    for (const auto& m : family) {
        s.out << to_string(m.name) << "  vertices=" << m.graph.order() << " edges=" << m.graph.size()
              << "  " << provenance_text(m) << "\n";
    }
    return ok;
}

inline int cmd_cycles(const Session& s)
{
    const auto g = resolve_graph(s.cfg.graph).graph;
    const auto cycles = enumerate_cycles(g, s.cfg.max_len, s.cfg.induced);
    if (s.json_mode()) {
        s.emit({{"count", cycles.size()}, {"cycles", cycles_to_json(cycles)}});
        return ok;
    }
    for (const auto& c : cycles) {
        s.out << c.str() << "\n";
    }
    s.out << cycles.size() << " cycles\n";
    return ok;
}

// Accepts either a bare array of cycles or {"cycles": [...]}.
inline std::vector<Cycle> read_cycles(const std::string& path)
{
    const auto j = read_json_file(path);
    if (j.is_object()) {
        return cycles_from_json(petersen::detail::field(j, "cycles", "cycles file"), "cycles");
    }
    return cycles_from_json(j, "cycles");
}

inline void require_cycles_of(const std::vector<Cycle>& cycles, const Graph& g, const std::string& where)
{
    for (std::size_t k = 0; k < cycles.size(); ++k) {
        if (!is_cycle_of(cycles[k], g)) {
            throw FormatError(where + "[" + std::to_string(k) + "]: " + cycles[k].str() +
                              " is not a cycle of the graph");
        }
    }
}

inline int cmd_bohme(const Session& s)
{
    const auto g = resolve_graph(s.cfg.graph).graph;
    const auto cycles = read_cycles(s.cfg.input);
    require_cycles_of(cycles, g, "cycles");
    const auto v = bohme_condition(cycles);
    if (s.json_mode()) {
        s.emit(bohme_to_json(v));
    } else {
        s.out << "bohme: " << s.verdict(v.ok) << "\n";
        if (v.witness) {
            const auto meet = cycle_intersection(v.witness->first, v.witness->second);
            s.out << "witness: " << v.witness->first.str() << " and " << v.witness->second.str() << " meet in "
                  << piece_components(meet) << " components " << meet.str() << "\n";
        }
    }
    return v.ok ? ok : check_failed;
}

inline int cmd_sphere(const Session& s)
{
    const auto g = resolve_graph(s.cfg.graph).graph;
    const auto sys = system_from_json(read_json_file(s.cfg.input));
    require_cycles_of(sys.faces, g, "system.faces");
    const auto v = is_combinatorial_sphere(sys);
    if (s.json_mode()) {
        s.emit(surface_to_json(v));
    } else {
        s.out << "closed surface: " << (v.is_closed_surface ? "yes" : "no") << "\n"
              << "euler characteristic: " << v.euler_characteristic << "\n"
              << "sphere: " << s.verdict(v.is_sphere) << "\n";
        for (const auto& f : v.failures) {
            s.out << "  " << to_string(f.kind) << ": " << f.detail << "\n";
        }
    }
    return v.is_sphere ? ok : check_failed;
}

inline void print_report(const Session& s, const VerificationReport& r)
{
    if (r.malformed) {
        s.out << "malformed: " << *r.malformed << "\n";
    }
    for (const auto& c : r.checks) {
        s.out << "  " << s.verdict(c.pass) << " " << c.name;
        if (!c.witness.empty()) {
            s.out << ": " << c.witness;
        }
        s.out << "\n";
    }
    s.out << "verdict: " << s.verdict(r.pass) << "\n";
}

inline int cmd_cert_verify(const Session& s)
{
    const auto resolved = resolve_graph(s.cfg.graph);
    Certificate cert;
    if (s.cfg.bundled) {
        if (!resolved.member) {
            throw FormatError("graph: not a Petersen family member, no bundled certificate");
        }
        cert = bundled_certificate(*resolved.member);
    } else {
        if (s.cfg.input.empty()) {
            throw CLI::ValidationError("cert verify", "expected a certificate file or --bundled");
        }
        cert = certificate_from_json(read_json_file(s.cfg.input));
    }
    const auto report = verify_certificate(resolved.graph, cert);
    if (s.json_mode()) {
        s.emit(report_to_json(report));
    } else {
        s.out << "certificate " << (cert.graph_name.empty() ? s.cfg.graph : cert.graph_name) << " ("
              << to_string(cert.schema) << ")\n";
        print_report(s, report);
    }
    return report.pass ? ok : check_failed;
}

inline int cmd_cert_search(const Session& s)
{
    const auto resolved = resolve_graph(s.cfg.graph);
    SearchBounds bounds;
    bounds.max_base_len = s.cfg.max_base_len;
    bounds.max_apex_size = s.cfg.max_apex_size;
    bounds.max_results = s.cfg.max_results;
    if (!s.cfg.schemas.empty()) {
        bounds.schemas.clear();
        for (const auto& text : s.cfg.schemas) {
            const auto schema = parse_schema(text);
            if (!schema) {
                throw FormatError("--schema: unknown schema '" + text + "'");
            }
            bounds.schemas.push_back(*schema);
        }
    }
    auto found = search_certificates(resolved.graph, bounds);
    const auto name = resolved.member ? to_string(*resolved.member) : std::string();
    for (auto& c : found) {
        c.graph_name = name;
    }
    if (s.json_mode()) {
        json arr = json::array();
        for (const auto& c : found) {
            arr.push_back(certificate_to_json(c));
        }
        s.emit({{"count", found.size()}, {"certificates", arr}});
    } else {
        for (const auto& c : found) {
            s.out << to_string(c.schema) << "  base " << c.base.str() << "  systems";
            for (const auto& sys : c.systems) {
                s.out << " " << sys.faces.size();
            }
            s.out << "  connectors";
            for (const auto& conn : c.connectors) {
                std::string path;
                for (const auto& v : conn) {
                    path += (path.empty() ? "" : "-") + v;
                }
                s.out << " " << path;
            }
            s.out << "\n";
        }
        s.out << found.size() << " certificates\n";
    }
    return found.empty() ? check_failed : ok;
}

inline int cmd_omega(const Session& s)
{
    const auto g = resolve_graph(s.cfg.graph).graph;
    const auto mode = s.cfg.mode == "triangles" ? PairMode::triangles_only : PairMode::all_disjoint_cycles;

    std::vector<std::pair<std::uint64_t, Embedding>> runs;
    if (!s.cfg.embedding.empty()) {
        runs.emplace_back(0, embedding_from_json(read_json_file(s.cfg.embedding), g));
    } else {
        for (std::size_t t = 0; t < s.cfg.trials; ++t) {
            const auto seed = s.cfg.seed + t;
            runs.emplace_back(seed, random_embedding(g, seed, s.cfg.radius));
        }
    }

    std::map<int, std::size_t> histogram;
    json trials = json::array();
    std::vector<OmegaReport> reports;
    for (const auto& [seed, e] : runs) {
        auto r = omega(g, e, mode);
        ++histogram[r.parity];
        json entry = {{"seed", seed}, {"parity", r.parity}, {"has_nonzero_pair", r.has_nonzero_pair()}};
        if (runs.size() == 1) {
            entry["report"] = omega_to_json(r);
        }
        trials.push_back(entry);
        reports.push_back(std::move(r));
    }
    const bool all_odd = histogram.size() == 1 && histogram.count(1);

    if (s.json_mode()) {
        json hist = json::object();
        for (const auto& [parity, n] : histogram) {
            hist[std::to_string(parity)] = n;
        }
        s.emit({{"mode", to_string(mode)}, {"trials", trials}, {"histogram", hist}});
    } else {
        s.out << "mode " << to_string(mode) << "\n";
        if (reports.size() == 1) {
            for (const auto& p : reports[0].pairs) {
                s.out << "  lk " << p.a.str() << " " << p.b.str() << " = " << p.lk << "\n";
            }
        }
        for (std::size_t t = 0; t < runs.size(); ++t) {
            s.out << "seed " << runs[t].first << ": parity " << reports[t].parity << "\n";
        }
        for (const auto& [parity, n] : histogram) {
            s.out << "parity " << parity << ": " << n << "\n";
        }
        s.out << "omega: " << s.verdict(all_odd) << "\n";
    }
    return all_odd ? ok : check_failed;
}

inline int cmd_dot(const Session& s)
{
    const auto resolved = resolve_graph(s.cfg.graph);
    s.out << to_dot(resolved.graph, resolved.member ? to_string(*resolved.member) : "G");
    return ok;
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool color = false)
{
    CliConfig cfg;
    cfg.color = color;

    CLI::App app{"Petersen family flatness toolkit", "petersen"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* family = app.add_subcommand("family", "List the seven Petersen family members");

    auto* cycles = app.add_subcommand("cycles", "Enumerate simple cycles of a graph");
    cycles->add_option("graph", cfg.graph, "Graph JSON file or family member name")->required();
    cycles->add_option("--max-len", cfg.max_len, "Longest cycle length")->check(CLI::Range(3, 64));
    cycles->add_flag("--induced", cfg.induced, "Only induced cycles");

    auto* bohme = app.add_subcommand("bohme-check", "Check pairwise connected intersections of cycles");
    bohme->add_option("graph", cfg.graph, "Graph JSON file or family member name")->required();
    bohme->add_option("cycles", cfg.input, "Cycles JSON file")->required();

    auto* sphere = app.add_subcommand("sphere-check", "Check that a cycle system forms a sphere");
    sphere->add_option("graph", cfg.graph, "Graph JSON file or family member name")->required();
    sphere->add_option("system", cfg.input, "System JSON file")->required();

    auto* cert = app.add_subcommand("cert", "Non-flatness certificates");
    cert->require_subcommand(1);
    cert->fallthrough();
    auto* verify = cert->add_subcommand("verify", "Verify a certificate against a graph");
    verify->add_option("graph", cfg.graph, "Graph JSON file or family member name")->required();
    verify->add_option("certificate", cfg.input, "Certificate JSON file");
    verify->add_flag("--bundled", cfg.bundled, "Use the bundled certificate for this member");
    auto* search = cert->add_subcommand("search", "Search for certificates");
    search->add_option("graph", cfg.graph, "Graph JSON file or family member name")->required();
    search->add_option("--max-base-len", cfg.max_base_len, "Longest base cycle")->check(CLI::Range(3, 12));
    search->add_option("--max-apex", cfg.max_apex_size, "Most vertices added to the base per sphere")
        ->check(CLI::Range(1, 3));
    search->add_option("--schema", cfg.schemas, "Allowed schema (repeatable)");
    search->add_option("--max-results", cfg.max_results, "Stop after this many certificates")
        ->check(CLI::Range(1, 100000));

    auto* linking = app.add_subcommand("linking", "Linking number computations");
    linking->require_subcommand(1);
    linking->fallthrough();
    auto* omega_cmd = linking->add_subcommand("omega", "Parity of the summed linking numbers");
    omega_cmd->add_option("graph", cfg.graph, "Graph JSON file or family member name")->required();
    omega_cmd->add_option("--seed", cfg.seed, "Seed of the first random embedding");
    omega_cmd->add_option("--trials", cfg.trials, "Number of random embeddings")->check(CLI::Range(1, 100000));
    omega_cmd->add_option("--mode", cfg.mode, "Disjoint pairs to sum over")
        ->check(CLI::IsMember({"triangles", "all"}));
    omega_cmd->add_option("--radius", cfg.radius, "Coordinate bound of random embeddings")
        ->check(CLI::Range(std::int64_t{1}, max_coordinate));
    omega_cmd->add_option("--embedding", cfg.embedding, "Embedding JSON file instead of random ones");

    auto* exporter = app.add_subcommand("export", "Export a graph");
    exporter->require_subcommand(1);
    exporter->fallthrough();
    auto* dot = exporter->add_subcommand("dot", "Graphviz DOT");
    dot->add_option("graph", cfg.graph, "Graph JSON file or family member name")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    const detail::Session session{cfg, out, err};
    try {
        if (*family) {
            return detail::cmd_family(session);
        }
        if (*cycles) {
            return detail::cmd_cycles(session);
        }
        if (*bohme) {
            return detail::cmd_bohme(session);
        }
        if (*sphere) {
            return detail::cmd_sphere(session);
        }
        if (*verify) {
            return detail::cmd_cert_verify(session);
        }
        if (*search) {
            return detail::cmd_cert_search(session);
        }
        if (*omega_cmd) {
            return detail::cmd_omega(session);
        }
        if (*dot) {
            return detail::cmd_dot(session);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    err << "error: no command given\n";
    return usage_error;
}

} // namespace petersen::cli
