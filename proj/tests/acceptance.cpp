// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <petersen/bundled.hpp>
#include <petersen/canonical.hpp>
#include <petersen/cycles.hpp>
#include <petersen/family.hpp>
#include <petersen/linking.hpp>
#include <petersen/p10.hpp>
#include <petersen/search.hpp>
#include <petersen/sphere.hpp>

#include "support.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace petersen;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Verdict()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) {
        std::ostringstream os;
        os << "took " << secs << " s, limit " << limit_seconds << " s";
        v.fail(os.str());
    }
    failures += !v.pass;
    std::printf("criterion %d %s: %s (%.2f s)%s%s\n", number, title.c_str(), v.pass ? "PASS" : "FAIL", secs,
                v.detail.empty() ? "" : "  ", v.detail.c_str());
    std::fflush(stdout);
}

std::vector<Certificate> single_deletions(const Certificate& cert)
{
    std::vector<Certificate> out;
    for (std::size_t s = 0; s < cert.systems.size(); ++s) {
        for (std::size_t f = 0; f < cert.systems[s].faces.size(); ++f) {
            auto m = cert;
            m.systems[s].faces.erase(m.systems[s].faces.begin() + static_cast<std::ptrdiff_t>(f));
            out.push_back(std::move(m));
        }
    }
    for (std::size_t c = 0; c < cert.connectors.size(); ++c) {
        auto m = cert;
        m.connectors.erase(m.connectors.begin() + static_cast<std::ptrdiff_t>(c));
        out.push_back(std::move(m));
    }
    for (const auto& e : cert.base.edges) {
        auto m = cert;
        m.base.edges.erase(e);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Point3> polygon_of(const Embedding& e, const Cycle& c)
{
    std::vector<Point3> out;
    for (const auto& v : c.seq()) {
        out.push_back(e.coords.at(v));
    }
    return out;
}

Verdict family_closure()
{
    Verdict v;
    const auto family = generate_petersen_family();
    if (family.size() != 7) {
        v.fail(std::to_string(family.size()) + " classes");
        return v;
    }
    std::multiset<std::size_t> orders;
    std::set<FamilyName> names;
    std::set<CanonicalLabel> classes;
    for (const auto& m : family) {
        orders.insert(m.graph.order());
        classes.insert(canonical_form(m.graph));
        if (m.graph.size() != 15) {
            v.fail(to_string(m.name) + " has " + std::to_string(m.graph.size()) + " edges");
        }
        const auto id = identify_family_member(m.graph);
        if (!id) {
            v.fail("a member is not identified");
        } else {
            names.insert(*id);
        }
    }
    if (orders != std::multiset<std::size_t>{6, 7, 7, 8, 8, 9, 10}) {
        v.fail("vertex counts differ");
    }
    if (names.size() != 7 || classes.size() != 7) {
        v.fail("members are not seven distinct named classes");
    }
    return v;
}

Verdict bundled_and_mutants()
{
    Verdict v;
    std::size_t mutants = 0;
    std::string failing;
    for (const auto& m : generate_petersen_family()) {
        const auto& cert = bundled_certificate(m.name);
        const auto report = verify_certificate(m.graph, cert);
        if (!report.pass) {
            const auto* f = report.first_failure();
            failing += (failing.empty() ? "" : "; ") + to_string(m.name) + " fails " +
                       (report.malformed ? "as malformed" : f->name + ": " + f->witness);
        }
        for (const auto& mutant : single_deletions(cert)) {
            ++mutants;
            if (verify_certificate(m.graph, mutant).pass) {
                v.fail("a mutant of " + to_string(m.name) + " still verifies");
            }
        }
    }
    if (!failing.empty()) {
        v.fail(failing);
    }
    v.detail = std::to_string(mutants) + " mutants checked" + (v.detail.empty() ? "" : "; " + v.detail);
    return v;
}

Verdict sphere_checks()
{
    Verdict v;
    for (const auto& [name, cert] : bundled_certificates()) {
        std::vector<Cycle> all;
        for (const auto& s : cert.systems) {
            const auto sv = is_combinatorial_sphere(s);
            if (sv.euler_characteristic != 2 || !sv.is_closed_surface) {
                v.fail(to_string(name) + " has a system that is not a closed surface with chi 2");
            }
            all.insert(all.end(), s.faces.begin(), s.faces.end());
        }
        const auto b = is_bohme_system(all, named_graph(name));
        if (!b.ok) {
            v.fail(to_string(name) + " faces are not a Bohme system: " + b.witness->first.str() + " and " +
                   b.witness->second.str() + " meet in " +
                   std::to_string(piece_components(cycle_intersection(b.witness->first, b.witness->second))) +
                   " components");
        }
    }
    return v;
}

Verdict conway_gordon_parity()
{
    Verdict v;
    const auto k6 = named_graph(FamilyName::K6);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        if (omega(k6, random_embedding(k6, seed, 1000), PairMode::triangles_only).parity != 1) {
            v.fail("K6 seed " + std::to_string(seed) + " has even parity");
        }
    }
    for (const auto name : all_family_names) {
        if (name == FamilyName::K6) {
            continue;
        }
        const auto g = named_graph(name);
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const auto r = omega(g, random_embedding(g, seed, 1000), PairMode::all_disjoint_cycles);
            if (r.parity != 1) {
                v.fail(to_string(name) + " seed " + std::to_string(seed) + " has even parity");
            }
            if (!r.has_nonzero_pair()) {
                v.fail(to_string(name) + " seed " + std::to_string(seed) + " has no linked pair");
            }
        }
    }
    return v;
}

Verdict gauss_oracle()
{
    Verdict v;
    std::mt19937_64 rng(2718);
    double worst = 0;
    int nonzero = 0;
    for (int k = 0; k < 50; ++k) {
        const auto name = all_family_names[rng() % all_family_names.size()];
        const auto g = named_graph(name);
        const auto e = random_embedding(g, rng(), 1000);
        const auto pairs = disjoint_cycle_pairs(g, PairMode::all_disjoint_cycles);
        const auto& [a, b] = pairs[rng() % pairs.size()];
        const long lk = linking_number(e, a, b);
        const double gauss = testing::gauss_linking_integral(polygon_of(e, a), polygon_of(e, b));
        const double residual = std::abs(gauss - static_cast<double>(lk));
        worst = std::max(worst, residual);
        nonzero += lk != 0;
        if (std::lround(gauss) != lk || residual >= 0.1) {
            v.fail("pair " + a.str() + " " + b.str() + " lk " + std::to_string(lk) + " vs " + std::to_string(gauss));
        }
    }
    if (v.pass) {
        std::ostringstream os;
        os << "50 pairs, " << nonzero << " linked, max residual " << worst;
        v.detail = os.str();
    }
    return v;
}

Verdict certificate_search()
{
    Verdict v;
    const auto& bundled = bundled_certificate(FamilyName::K6);
    SearchBounds k6_bounds;
    k6_bounds.max_base_len = 3;
    const auto sort_systems = [](std::vector<CycleSystem> systems) {
        for (auto& s : systems) {
            std::sort(s.faces.begin(), s.faces.end());
        }
        std::sort(systems.begin(), systems.end(),
                  [](const CycleSystem& a, const CycleSystem& b) { return a.faces < b.faces; });
        return systems;
    };
    bool found = false;
    for (const auto& c : search_certificates(named_graph(FamilyName::K6), k6_bounds)) {
        found = found || (c.base == bundled.base && sort_systems(c.systems) == sort_systems(bundled.systems));
    }
    if (!found) {
        v.fail("K6 search misses the base (b,e,f) certificate");
    }
    std::string counts;
    for (const auto name : all_family_names) {
        const auto g = named_graph(name);
        const auto certs = search_certificates(g, SearchBounds{});
        std::size_t verified = 0;
        for (const auto& c : certs) {
            verified += verify_certificate(g, c).pass;
        }
        if (verified == 0) {
            v.fail(to_string(name) + " has no verified certificate");
        }
        counts += (counts.empty() ? "" : " ") + to_string(name) + "=" + std::to_string(verified);
    }
    if (v.pass) {
        v.detail = counts;
    }
    return v;
}

Verdict p10_labeling()
{
    Verdict v;
    const auto labelings = solve_p10_labeling();
    if (labelings.empty()) {
        v.fail("no labeling");
        return v;
    }
    const auto& cert = bundled_certificate(FamilyName::P10);
    const auto std_graph = standard_petersen_graph();
    std::size_t passing = 0;
    std::string first_problem;
    for (const auto& m : labelings) {
        const auto g = relabeled(std_graph, m);
        const bool edges_present = g.adjacent("5", "6") && g.adjacent("7", "9") && g.adjacent("8", "10");
        const auto report = verify_certificate(g, cert);
        if (report.pass && edges_present) {
            ++passing;
        } else if (first_problem.empty()) {
            const auto* f = report.first_failure();
            first_problem = !edges_present ? "declared edges missing"
                                           : (f ? f->name + ": " + f->witness : *report.malformed);
        }
    }
    if (passing != labelings.size()) {
        v.fail(std::to_string(labelings.size()) + " labelings, " + std::to_string(passing) +
               " verify; first failure " + first_problem);
    } else {
        v.detail = std::to_string(labelings.size()) + " labelings";
    }
    return v;
}

Verdict cycle_oracle()
{
    Verdict v;
    std::mt19937_64 rng(8128);
    std::size_t total = 0;
    for (int k = 0; k < 200; ++k) {
        const auto g = testing::random_graph(rng, 8, 0.55);
        std::vector<std::vector<Label>> got;
        for (const auto& c : enumerate_cycles(g)) {
            got.push_back(c.seq());
        }
        const auto expected = testing::brute_force_cycles(g);
        total += expected.size();
        if (got != expected) {
            v.fail("graph " + std::to_string(k) + ": " + std::to_string(got.size()) + " cycles vs oracle " +
                   std::to_string(expected.size()));
        }
    }
    if (v.pass) {
        v.detail = "200 graphs, " + std::to_string(total) + " cycles";
    }
    return v;
}

} // namespace

int main()
{
    criterion(1, "family closure", 5, family_closure);
    criterion(2, "bundled certificates and mutations", 30, bundled_and_mutants);
    criterion(3, "sphere and Bohme checks", 5, sphere_checks);
    criterion(4, "Conway-Gordon parity", 120, conway_gordon_parity);
    criterion(5, "linking oracle equivalence", 60, gauss_oracle);
    criterion(6, "certificate search", 600, certificate_search);
    criterion(7, "P10 labeling", 60, p10_labeling);
    criterion(8, "cycle enumeration oracle", 60, cycle_oracle);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures;
}
