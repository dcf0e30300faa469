#pragma once

// Independent oracles and generators shared by the unit tests and the
// acceptance binary. None of these call into the code they check.

#include <petersen/graph.hpp>
#include <petersen/predicates.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace petersen::testing {

inline Graph random_graph(std::mt19937_64& rng, std::size_t max_order, double density)
{
    std::uniform_int_distribution<std::size_t> order_dist(1, max_order);
    std::bernoulli_distribution coin(density);
    const auto n = order_dist(rng);
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("v" + std::to_string(i));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                edges.push_back(make_edge(labels[i], labels[j]));
            }
        }
    }
    return build_graph(labels, edges);
}

/// Every simple cycle by brute force: each vertex subset of size >= 3, every
/// ordering starting at its smallest member, kept when consecutive vertices
/// are adjacent. Each cycle is reported once as the ordering whose second
/// vertex is smaller than its last.
inline std::vector<std::vector<Label>> brute_force_cycles(const Graph& g)
{
    const auto& vs = g.vertices();
    const std::size_t n = vs.size();
    std::set<std::pair<std::size_t, std::vector<Label>>> found;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<Label> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                subset.push_back(vs[i]);
            }
        }
        if (subset.size() < 3) {
            continue;
        }
        std::sort(subset.begin(), subset.end());
        std::vector<Label> tail(subset.begin() + 1, subset.end());
        do {
            std::vector<Label> order{subset[0]};
            order.insert(order.end(), tail.begin(), tail.end());
            bool closed = true;
            for (std::size_t k = 0; k < order.size() && closed; ++k) {
                closed = g.adjacent(order[k], order[(k + 1) % order.size()]);
            }
            if (closed && order[1] < order.back()) {
                found.emplace(order.size(), order);
            }
        } while (std::next_permutation(tail.begin(), tail.end()));
    }
    std::vector<std::vector<Label>> out;
    for (auto& [len, seq] : found) {
        out.push_back(seq);
    }
    return out;
}

struct Vec {
    double x, y, z;
};

inline Vec sub(Vec a, Vec b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec crs(Vec a, Vec b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double dt(Vec a, Vec b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec unit(Vec a)
{
    const double len = std::sqrt(dt(a, a));
    return {a.x / len, a.y / len, a.z / len};
}

inline Vec to_vec(const Point3& p)
{
    return {static_cast<double>(p.x), static_cast<double>(p.y), static_cast<double>(p.z)};
}

/// Gauss linking integral of two closed polygons, evaluated segment pair by
/// segment pair with the exact solid-angle formula of Klenin and Langowski.
inline double gauss_linking_integral(const std::vector<Point3>& a, const std::vector<Point3>& b)
{
    const double pi = std::acos(-1.0);
    const auto clamp_asin = [](double v) { return std::asin(std::clamp(v, -1.0, 1.0)); };
    double total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Vec p1 = to_vec(a[i]);
        const Vec p2 = to_vec(a[(i + 1) % a.size()]);
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Vec p3 = to_vec(b[j]);
            const Vec p4 = to_vec(b[(j + 1) % b.size()]);
            const Vec r13 = sub(p3, p1), r14 = sub(p4, p1), r23 = sub(p3, p2), r24 = sub(p4, p2);
            const Vec n1 = unit(crs(r13, r14));
            const Vec n2 = unit(crs(r14, r24));
            const Vec n3 = unit(crs(r24, r23));
            const Vec n4 = unit(crs(r23, r13));
            const double omega_star =
                clamp_asin(dt(n1, n2)) + clamp_asin(dt(n2, n3)) + clamp_asin(dt(n3, n4)) + clamp_asin(dt(n4, n1));
            const double s = dt(crs(sub(p4, p3), sub(p2, p1)), r13);
            total += omega_star * ((s > 0) - (s < 0));
        }
    }
    return total / (4 * pi);
}

} // namespace petersen::testing
