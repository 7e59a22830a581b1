#pragma once

// Shared helpers and independent oracles for the test suites. Oracles here
// deliberately avoid the library's production code paths: the circumcircle
// checker uses the always-exact rational predicate, the MST and reachability
// oracles are plain standalone implementations.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <random>
#include <unordered_map>
#include <vector>

#include "pentropy/alpha.hpp"
#include "pentropy/ingest.hpp"
#include "pentropy/persistence.hpp"
#include "pentropy/point_cloud.hpp"
#include "pentropy/predicates.hpp"

namespace testsupport {

inline pentropy::PointCloud make_cloud(std::initializer_list<std::pair<double, double>> pts) {
    pentropy::PointCloud pc;
    for (auto [x, y] : pts) pc.points.push_back({x, y});
    return pc;
}

inline pentropy::PointCloud random_cloud(std::size_t n, std::uint64_t seed, double box = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, box);
    pentropy::PointCloud pc;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = u(rng);
        const double y = u(rng);
        pc.points.push_back({x, y});
    }
    return pc;
}

/// Brute-force Delaunay verification: no point lies strictly inside any
/// triangle's circumcircle, by the exact rational predicate.
inline bool empty_circumcircles(const pentropy::PointCloud& pc,
                                const std::vector<pentropy::Simplex>& complex_simplices) {
    for (const pentropy::Simplex& s : complex_simplices) {
        if (s.dim() != 2) continue;
        const auto& a = pc.points[s.v[0]];
        const auto& b = pc.points[s.v[1]];
        const auto& c = pc.points[s.v[2]];
        // orient the triple counterclockwise for the incircle sign convention
        const bool ccw = pentropy::orient2d_exact(a, b, c) > 0;
        for (std::uint32_t i = 0; i < pc.points.size(); ++i) {
            if (i == s.v[0] || i == s.v[1] || i == s.v[2]) continue;
            const int side = ccw ? pentropy::incircle_exact(a, b, c, pc.points[i])
                                 : pentropy::incircle_exact(a, c, b, pc.points[i]);
            if (side > 0) return false;
        }
    }
    return true;
}

/// Kruskal minimum spanning tree over the edges of a filtered complex,
/// weighted by filtration value. Returns the sorted multiset of MST weights.
inline std::vector<double> mst_edge_values(const pentropy::FilteredComplex& fc) {
    struct E {
        double w;
        std::uint32_t a, b;
    };
    std::vector<E> edges;
    std::uint32_t n_vertices = 0;
    for (const auto& [s, v] : fc.simplices) {
        if (s.dim() == 0) ++n_vertices;
        if (s.dim() == 1) edges.push_back({v, s.v[0], s.v[1]});
    }
    std::sort(edges.begin(), edges.end(), [](const E& x, const E& y) { return x.w < y.w; });
    std::vector<std::uint32_t> parent(n_vertices);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<double> weights;
    for (const E& e : edges) {
        const auto ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        weights.push_back(e.w);
    }
    std::sort(weights.begin(), weights.end());
    return weights;
}

/// Sorted dim-d finite death values of a barcode.
inline std::vector<double> finite_deaths(const pentropy::Barcode& bc, int dim) {
    std::vector<double> out;
    for (const auto& bar : bc.bars)
        if (bar.dim == dim && !bar.is_infinite()) out.push_back(bar.death);
    std::sort(out.begin(), out.end());
    return out;
}

/// Jittered-grid Voronoi raster: grid*grid sites, every pixel labeled by its
/// nearest site (1-based site index). Jitter is bounded so a 5x5 site
/// neighborhood always contains the nearest site.
inline pentropy::LabelMatrix voronoi_raster(std::size_t rows, std::size_t cols, std::size_t grid,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jit(-0.4, 0.4);
    std::vector<double> sr(grid * grid), sc(grid * grid);
    for (std::size_t i = 0; i < grid; ++i) {
        for (std::size_t j = 0; j < grid; ++j) {
            sr[i * grid + j] = (static_cast<double>(i) + 0.5 + jit(rng)) *
                               static_cast<double>(rows) / static_cast<double>(grid);
            sc[i * grid + j] = (static_cast<double>(j) + 0.5 + jit(rng)) *
                               static_cast<double>(cols) / static_cast<double>(grid);
        }
    }
    pentropy::LabelMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.labels.resize(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const auto gi = std::min(grid - 1, static_cast<std::size_t>(
                                                   static_cast<double>(r) * grid / rows));
            const auto gj = std::min(grid - 1, static_cast<std::size_t>(
                                                   static_cast<double>(c) * grid / cols));
            double best = 1e300;
            std::uint32_t best_label = 0;
            for (long long di = -2; di <= 2; ++di) {
                for (long long dj = -2; dj <= 2; ++dj) {
                    const long long ii = static_cast<long long>(gi) + di;
                    const long long jj = static_cast<long long>(gj) + dj;
                    if (ii < 0 || jj < 0 || ii >= static_cast<long long>(grid) ||
                        jj >= static_cast<long long>(grid))
                        continue;
                    const std::size_t s = static_cast<std::size_t>(ii) * grid +
                                          static_cast<std::size_t>(jj);
                    const double dr = sr[s] - static_cast<double>(r);
                    const double dc = sc[s] - static_cast<double>(c);
                    const double d2 = dr * dr + dc * dc;
                    if (d2 < best) {
                        best = d2;
                        best_label = static_cast<std::uint32_t>(s + 1);
                    }
                }
            }
            m.at(r, c) = best_label;
        }
    }
    return m;
}

/// Independent reachability oracle: distinct nonzero labels reachable from
/// the start pixel by breadth-first search over the 4-connected grid.
inline std::size_t bfs_distinct_labels(const pentropy::LabelMatrix& m, std::size_t r0,
                                       std::size_t c0) {
    std::vector<char> seen(m.rows * m.cols, 0);
    std::vector<char> label_seen;
    std::size_t distinct = 0;
    std::queue<std::pair<std::size_t, std::size_t>> q;
    q.push({r0, c0});
    seen[r0 * m.cols + c0] = 1;
    while (!q.empty()) {
        auto [r, c] = q.front();
        q.pop();
        const std::uint32_t label = m.at(r, c);
        if (label != 0) {
            if (label_seen.size() <= label) label_seen.resize(label + 1, 0);
            if (!label_seen[label]) {
                label_seen[label] = 1;
                ++distinct;
            }
        }
        const long long rr = static_cast<long long>(r), cc = static_cast<long long>(c);
        for (auto [dr, dc] : {std::pair{-1LL, 0LL}, {1LL, 0LL}, {0LL, -1LL}, {0LL, 1LL}}) {
            if (!m.in_bounds(rr + dr, cc + dc)) continue;
            const std::size_t idx = static_cast<std::size_t>(rr + dr) * m.cols +
                                    static_cast<std::size_t>(cc + dc);
            if (!seen[idx]) {
                seen[idx] = 1;
                q.push({static_cast<std::size_t>(rr + dr), static_cast<std::size_t>(cc + dc)});
            }
        }
    }
    return distinct;
}

/// Random noise on positive-dimension simplex values, re-clamped so the
/// filtration stays monotone and within sup-distance delta of the original.
inline pentropy::FilteredComplex perturb_monotone(const pentropy::FilteredComplex& fc,
                                                  double delta, std::mt19937_64& rng) {
    pentropy::FilteredComplex out = fc;
    std::uniform_real_distribution<double> noise(-delta, delta);
    for (auto& [s, v] : out.simplices)
        if (s.dim() >= 1) v += noise(rng);
    // restore monotonicity dimension by dimension; raising a value never
    // exceeds original + delta because the original was monotone
    std::unordered_map<pentropy::Simplex, double, pentropy::SimplexHash> value;
    for (const auto& [s, v] : out.simplices) value[s] = v;
    for (int d = 1; d <= 2; ++d) {
        for (auto& [s, v] : out.simplices) {
            if (s.dim() != d) continue;
            for (const pentropy::Simplex& f : s.facets()) v = std::max(v, value.at(f));
            value[s] = v;
        }
    }
    return out;
}

}  // namespace testsupport
