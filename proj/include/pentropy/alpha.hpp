#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pentropy/point_cloud.hpp"

namespace pentropy {

/// Vertex, edge or triangle over point indices. Vertices are stored strictly
/// increasing; unused slots hold kNone.
struct Simplex {
    static constexpr std::uint32_t kNone = 0xffffffffu;

    std::array<std::uint32_t, 3> v{kNone, kNone, kNone};

    static Simplex vertex(std::uint32_t a);
    static Simplex edge(std::uint32_t a, std::uint32_t b);
    static Simplex triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c);

    int dim() const { return (v[1] == kNone) ? 0 : (v[2] == kNone ? 1 : 2); }

    /// The dim faces of codimension 1 (none for a vertex).
    std::vector<Simplex> facets() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    /// Lexicographic on the vertex list; used for canonical ordering.
    friend auto operator<=>(const Simplex& a, const Simplex& b) { return a.v <=> b.v; }
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const;
};

/// Delaunay triangulation of the point cloud: all vertices, edges and
/// triangles, canonically sorted by (dim, vertex list). Exact predicates
/// guarantee the empty-circumcircle property; cocircular ties resolve to the
/// diagonal whose smaller endpoint index is smaller.
///
/// Throws on fewer than 3 points, all-collinear input, or duplicate points.
std::vector<Simplex> delaunay_triangulate(const PointCloud& pc);

/// Simplicial complex with a monotone filtration value per simplex,
/// in squared-length units for alpha filtrations.
struct FilteredComplex {
    PointCloud points;
    std::vector<std::pair<Simplex, double>> simplices;

    /// Checks face closure and monotonicity; throws naming the violating
    /// face/coface pair.
    void validate() const;
};

/// Alpha-complex filtration on a Delaunay triangulation. Vertices get 0,
/// a triangle gets its squared circumradius, an edge gets its squared
/// half-length when its diametral disk is empty of the opposite vertices of
/// incident triangles (Gabriel edge) and otherwise the minimum incident
/// triangle value. Monotonicity holds exactly on output.
FilteredComplex alpha_filtration(const PointCloud& pc, const std::vector<Simplex>& delaunay);

/// Debug dump: lines "v i val", "e i j val", "t i j k val".
std::string write_complex_dump(const FilteredComplex& fc);

}  // namespace pentropy
