#pragma once

// Canonical forms for small graphs: colour refinement to an equitable
// partition, then individualization of vertices in the first non-singleton
// cell, keeping the lexicographically largest adjacency code over all leaves.

#include <petersen/graph.hpp>

#include <compare>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace petersen {

class CanonicalLabel {
public:
    CanonicalLabel() = default;
    explicit CanonicalLabel(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

    std::string hex() const
    {
        std::ostringstream os;
        for (auto b : bytes_) {
            os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
        }
        return os.str();
    }

    friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
    friend bool operator==(const CanonicalLabel&, const CanonicalLabel&) = default;

private:
    std::vector<std::uint8_t> bytes_;
};

inline constexpr std::size_t max_canonical_order = 16;

namespace detail {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<std::uint8_t> run()
    {
        std::vector<int> colors(n_, 0);
        descend(std::move(colors));
        return best_;
    }

private:
    // Re-ranks vertices by (colour, sorted neighbour colours) until stable.
    void refine(std::vector<int>& colors) const
    {
        std::size_t cells = count_cells(colors);
        while (true) {
            std::vector<std::pair<std::vector<int>, std::size_t>> sigs(n_);
            for (std::size_t v = 0; v < n_; ++v) {
                std::vector<int> sig{colors[v]};
                std::vector<int> nb;
                for (auto w : g_.neighbors(v)) {
                    nb.push_back(colors[w]);
                }
                std::sort(nb.begin(), nb.end());
                sig.insert(sig.end(), nb.begin(), nb.end());
                sigs[v] = {std::move(sig), v};
            }
            rank(sigs, colors);
            const std::size_t next = count_cells(colors);
            if (next == cells) {
                return;
            }
            cells = next;
        }
    }

    static void rank(std::vector<std::pair<std::vector<int>, std::size_t>>& sigs, std::vector<int>& colors)
    {
        std::sort(sigs.begin(), sigs.end());
        int c = 0;
        for (std::size_t i = 0; i < sigs.size(); ++i) {
            if (i > 0 && sigs[i].first != sigs[i - 1].first) {
                ++c;
            }
            colors[sigs[i].second] = c;
        }
    }

    static std::size_t count_cells(const std::vector<int>& colors)
    {
        int hi = -1;
        for (int c : colors) {
            hi = std::max(hi, c);
        }
        return static_cast<std::size_t>(hi + 1);
    }

    bool twins(std::size_t u, std::size_t v) const
    {
        for (std::size_t w = 0; w < n_; ++w) {
            if (w != u && w != v && g_.adjacent(u, w) != g_.adjacent(v, w)) {
                return false;
            }
        }
        return true;
    }

    std::vector<std::uint8_t> encode(const std::vector<int>& colors) const
    {
        std::vector<std::size_t> order(n_);
        for (std::size_t v = 0; v < n_; ++v) {
            order[static_cast<std::size_t>(colors[v])] = v;
        }
        std::vector<std::uint8_t> code{static_cast<std::uint8_t>(n_)};
        std::uint8_t acc = 0;
        int bits = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                acc = static_cast<std::uint8_t>((acc << 1) | (g_.adjacent(order[i], order[j]) ? 1 : 0));
                if (++bits == 8) {
                    code.push_back(acc);
                    acc = 0;
                    bits = 0;
                }
            }
        }
        if (bits > 0) {
            code.push_back(static_cast<std::uint8_t>(acc << (8 - bits)));
        }
        return code;
    }

    void descend(std::vector<int> colors)
    {
        refine(colors);
        if (count_cells(colors) == n_) {
            auto code = encode(colors);
            if (!have_best_ || code > best_) {
                best_ = std::move(code);
                have_best_ = true;
            }
            return;
        }
        // First non-singleton cell.
        std::vector<std::size_t> counts(n_, 0);
        for (int c : colors) {
            ++counts[static_cast<std::size_t>(c)];
        }
        int target = 0;
        while (counts[static_cast<std::size_t>(target)] < 2) {
            ++target;
        }
        // Swapping two twins inside the target cell is an automorphism that
        // fixes every individualized vertex, so their subtrees are identical.
        std::vector<std::size_t> tried;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colors[v] != target) {
                continue;
            }
            bool redundant = false;
            for (auto w : tried) {
                if (twins(v, w)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant) {
                continue;
            }
            tried.push_back(v);
            std::vector<std::pair<std::vector<int>, std::size_t>> sigs(n_);
            for (std::size_t x = 0; x < n_; ++x) {
                sigs[x] = {{colors[x], x == v ? 0 : 1}, x};
            }
            std::vector<int> child(n_);
            rank(sigs, child);
            descend(std::move(child));
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::uint8_t> best_;
    bool have_best_ = false;
};

} // namespace detail

/// Relabeling-invariant code of the isomorphism class of g (at most 16 vertices).
inline CanonicalLabel canonical_form(const Graph& g)
{
    if (g.order() > max_canonical_order) {
        throw GraphError(GraphError::Kind::size_limit,
                         "canonical_form supports at most " + std::to_string(max_canonical_order) + " vertices, got " +
                             std::to_string(g.order()));
    }
    if (g.order() == 0) {
        return CanonicalLabel({0});
    }
    return CanonicalLabel(detail::CanonicalSearch(g).run());
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

} // namespace petersen
