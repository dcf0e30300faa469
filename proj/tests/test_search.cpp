#include <catch_amalgamated.hpp>

#include <petersen/bundled.hpp>
#include <petersen/search.hpp>

#include <algorithm>

using namespace petersen;

namespace {

bool same_systems(const Certificate& a, const Certificate& b)
{
    auto x = a.systems;
    auto y = b.systems;
    const auto by_faces = [](const CycleSystem& s, const CycleSystem& t) { return s.faces < t.faces; };
    for (auto* v : {&x, &y}) {
        for (auto& s : *v) {
            std::sort(s.faces.begin(), s.faces.end());
        }
        std::sort(v->begin(), v->end(), by_faces);
    }
    return x == y;
}

} // namespace

TEST_CASE("K6 has one triangle-connector certificate per base triangle", "[search]")
{
    SearchBounds bounds;
    bounds.max_base_len = 3;
    bounds.schemas = {Schema::triangle_connector};
    const auto found = search_certificates(named_graph(FamilyName::K6), bounds);
    CHECK(found.size() == 20);
    std::set<std::set<Label>> bases;
    for (const auto& c : found) {
        bases.insert(c.base.vertices);
    }
    CHECK(bases.size() == 20);
}

TEST_CASE("K6 search finds the bundled certificate", "[search]")
{
    SearchBounds bounds;
    bounds.max_base_len = 3;
    const auto found = search_certificates(named_graph(FamilyName::K6), bounds);
    const auto& bundled = bundled_certificate(FamilyName::K6);
    const auto match = std::find_if(found.begin(), found.end(), [&](const Certificate& c) {
        return c.base == bundled.base && same_systems(c, bundled);
    });
    CHECK(match != found.end());
}

TEST_CASE("a hexagon has no certificate", "[search]")
{
    const auto c6 = build_graph({"1", "2", "3", "4", "5", "6"},
                                {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"5", "6"}, {"6", "1"}});
    CHECK(search_certificates(c6).empty());
}

TEST_CASE("every family member has a verified certificate", "[search]")
{
    for (const auto name : all_family_names) {
        const auto g = named_graph(name);
        SearchBounds bounds;
        bounds.max_results = 8;
        const auto found = search_certificates(g, bounds);
        INFO(to_string(name));
        CHECK_FALSE(found.empty());
        CHECK(found.size() <= 8);
        for (const auto& c : found) {
            CHECK(verify_certificate(g, c).pass);
        }
    }
}

TEST_CASE("search output is reproducible and respects schemas", "[search]")
{
    const auto g = named_graph(FamilyName::P9);
    CHECK(search_certificates(g) == search_certificates(g));
    SearchBounds only_y;
    only_y.schemas = {Schema::y_connector};
    for (const auto& c : search_certificates(g, only_y)) {
        CHECK(c.schema == Schema::y_connector);
    }
}

TEST_CASE("search bounds are enforced", "[search]")
{
    std::vector<Label> labels;
    for (int i = 0; i < 13; ++i) {
        labels.push_back(std::to_string(i));
    }
    CHECK_THROWS_AS(search_certificates(build_graph(labels, {})), SearchError);
    SearchBounds bad;
    bad.max_base_len = 2;
    CHECK_THROWS_AS(search_certificates(named_graph(FamilyName::K6), bad), SearchError);
    bad = SearchBounds{};
    bad.max_results = 0;
    CHECK_THROWS_AS(search_certificates(named_graph(FamilyName::K6), bad), SearchError);
}
