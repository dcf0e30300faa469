#include <catch_amalgamated.hpp>

#include <petersen/bundled.hpp>
#include <petersen/sphere.hpp>

#include <map>

using namespace petersen;

namespace {

CycleSystem sys(std::initializer_list<std::vector<Label>> faces)
{
    CycleSystem s;
    for (const auto& f : faces) {
        s.faces.emplace_back(f);
    }
    return s;
}

const CycleSystem c1 = sys({{"b", "e", "f"}, {"b", "c", "e"}, {"c", "e", "f"}, {"b", "c", "f"}});
const CycleSystem a1 = sys({{"1", "b", "4", "c"}, {"1", "c", "4", "d"}, {"1", "b", "4", "d"}});
const CycleSystem a2 = sys({{"2", "b", "4", "c"}, {"2", "c", "4", "d"}, {"2", "b", "4", "d"}});
const CycleSystem s3 = sys({{"a", "2", "c", "3"}, {"c", "2", "v"}, {"c", "v", "3"}, {"3", "v", "a"}, {"a", "v", "2"}});
const CycleSystem book = sys({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "e"}});

bool has_failure(const SurfaceVerdict& v, SurfaceFailure::Kind k)
{
    for (const auto& f : v.failures) {
        if (f.kind == k) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("carriers", "[sphere]")
{
    const auto k = carrier(c1);
    CHECK(k.vertices == std::set<Label>{"b", "c", "e", "f"});
    CHECK(k.edges.size() == 6);
    CHECK(carrier(sys({{"a", "b", "c"}})) == SubgraphPiece::of(Cycle({"a", "b", "c"})));
    const auto y = carrier(a1);
    CHECK(y.vertices == std::set<Label>{"1", "4", "b", "c", "d"});
    CHECK(y.edges == std::set<Edge>{{"1", "b"}, {"1", "c"}, {"1", "d"}, {"4", "b"}, {"4", "c"}, {"4", "d"}});
}

TEST_CASE("Euler characteristics", "[sphere]")
{
    CHECK(euler_characteristic(c1) == 2);
    CHECK(euler_characteristic(s3) == 2);
    CHECK(euler_characteristic(book) == 1);
}

TEST_CASE("sphere recognition", "[sphere]")
{
    const auto tetra = is_combinatorial_sphere(c1);
    CHECK(tetra.is_sphere);
    CHECK(tetra.is_closed_surface);
    CHECK(tetra.failures.empty());

    const auto y = is_combinatorial_sphere(a1);
    CHECK(y.is_sphere);
    CHECK(y.euler_characteristic == 2);

    const auto v = is_combinatorial_sphere(book);
    CHECK_FALSE(v.is_sphere);
    CHECK(has_failure(v, SurfaceFailure::Kind::edge_degree));
}

TEST_CASE("pinched and disconnected complexes fail", "[sphere]")
{
    // Two tetrahedra sharing only vertex b: chi = 3.
    auto pinched = c1;
    for (const auto& f : {std::vector<Label>{"b", "x", "y"}, {"b", "y", "z"}, {"b", "x", "z"}, {"x", "y", "z"}}) {
        pinched.faces.emplace_back(f);
    }
    const auto v = is_combinatorial_sphere(pinched);
    CHECK_FALSE(v.is_sphere);
    CHECK(has_failure(v, SurfaceFailure::Kind::vertex_link));

    auto apart = c1;
    for (const auto& f : {std::vector<Label>{"p", "q", "r"}, {"p", "q", "s"}, {"p", "r", "s"}, {"q", "r", "s"}}) {
        apart.faces.emplace_back(f);
    }
    const auto w = is_combinatorial_sphere(apart);
    CHECK_FALSE(w.is_sphere);
    CHECK(has_failure(w, SurfaceFailure::Kind::disconnected));

    CHECK_FALSE(is_combinatorial_sphere(CycleSystem{}).is_sphere);
}

TEST_CASE("torus is a closed surface but not a sphere", "[sphere]")
{
    // 3x3 grid torus, nine quadrilaterals.
    CycleSystem torus;
    const auto at = [](int r, int c) { return std::to_string((r % 3) * 3 + (c % 3)); };
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            torus.faces.emplace_back(std::vector<Label>{at(r, c), at(r, c + 1), at(r + 1, c + 1), at(r + 1, c)});
        }
    }
    const auto v = is_combinatorial_sphere(torus);
    CHECK(v.is_closed_surface);
    CHECK_FALSE(v.is_sphere);
    CHECK(v.euler_characteristic == 0);
    CHECK(has_failure(v, SurfaceFailure::Kind::chi));
}

TEST_CASE("pairwise system intersections", "[sphere]")
{
    const auto y = system_pair_intersection(a1, a2);
    CHECK(y.vertices == std::set<Label>{"4", "b", "c", "d"});
    CHECK(y.edges == std::set<Edge>{{"4", "b"}, {"4", "c"}, {"4", "d"}});

    const auto& p9 = bundled_certificate(FamilyName::P9);
    CHECK(system_pair_intersection(p9.systems[0], p9.systems[1]) ==
          SubgraphPiece::of(Cycle({"1", "2", "3", "4", "5", "6"})));
    CHECK(system_pair_intersection(c1, c1) == carrier(c1));
}

TEST_CASE("every bundled system is a sphere", "[sphere]")
{
    for (const auto& [name, cert] : bundled_certificates()) {
        for (const auto& s : cert.systems) {
            const auto v = is_combinatorial_sphere(s);
            CHECK(v.is_sphere);
            CHECK(v.euler_characteristic == 2);
        }
    }
}

TEST_CASE("removing a face breaks the surface", "[sphere]")
{
    for (const auto& [name, cert] : bundled_certificates()) {
        for (const auto& s : cert.systems) {
            for (std::size_t k = 0; k < s.faces.size(); ++k) {
                auto cut = s;
                cut.faces.erase(cut.faces.begin() + static_cast<std::ptrdiff_t>(k));
                const auto v = is_combinatorial_sphere(cut);
                CHECK_FALSE(v.is_closed_surface);
                CHECK(has_failure(v, SurfaceFailure::Kind::edge_degree));
            }
        }
    }
}

TEST_CASE("Euler characteristic ignores labels", "[sphere]")
{
    for (const auto& [name, cert] : bundled_certificates()) {
        for (const auto& s : cert.systems) {
            CycleSystem renamed;
            for (const auto& f : s.faces) {
                std::vector<Label> seq;
                for (const auto& v : f.seq()) {
                    seq.push_back("r" + v);
                }
                renamed.faces.emplace_back(seq);
            }
            CHECK(euler_characteristic(renamed) == euler_characteristic(s));
        }
    }
}

TEST_CASE("systems are validated against a host", "[sphere]")
{
    const auto k6 = complete_graph({"a", "b", "c", "d", "e", "f"});
    CHECK_NOTHROW(validate_system(c1, k6));
    CHECK_THROWS_AS(validate_system(a1, k6), CycleError);
}
