#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pentropy/alpha.hpp"
#include "pentropy/predicates.hpp"

namespace pentropy {

namespace {

// Bowyer-Watson with ghost triangles: the triangulation is kept closed by
// one triangle per hull edge whose third vertex is the symbolic point at
// infinity. A ghost (a, b, inf) covers the open halfplane strictly left of
// a->b plus the open segment ab itself.
constexpr std::uint32_t kInf = 0xfffffffeu;

std::uint64_t ekey(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

struct Tri {
    std::array<std::uint32_t, 3> v;
    bool alive = true;
    bool has_ghost() const { return v[0] == kInf || v[1] == kInf || v[2] == kInf; }
};

// p is exactly on line ab; is it strictly inside the segment?
bool strictly_between(const Point2& a, const Point2& b, const Point2& p) {
    if (a.x != b.x) return (a.x < p.x && p.x < b.x) || (b.x < p.x && p.x < a.x);
    return (a.y < p.y && p.y < b.y) || (b.y < p.y && p.y < a.y);
}

struct Mesh {
    const std::vector<Point2>& pts;
    std::vector<Tri> tris;
    std::unordered_map<std::uint64_t, std::uint32_t> edge_tri;  // directed edge -> tri

    explicit Mesh(const std::vector<Point2>& p) : pts(p) {}

    std::uint32_t add_tri(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
        auto idx = static_cast<std::uint32_t>(tris.size());
        tris.push_back(Tri{{a, b, c}, true});
        edge_tri[ekey(a, b)] = idx;
        edge_tri[ekey(b, c)] = idx;
        edge_tri[ekey(c, a)] = idx;
        return idx;
    }

    void remove_tri(std::uint32_t idx) {
        Tri& t = tris[idx];
        t.alive = false;
        edge_tri.erase(ekey(t.v[0], t.v[1]));
        edge_tri.erase(ekey(t.v[1], t.v[2]));
        edge_tri.erase(ekey(t.v[2], t.v[0]));
    }

    bool conflicts(const Tri& t, const Point2& p) const {
        int g = -1;
        for (int i = 0; i < 3; ++i)
            if (t.v[i] == kInf) g = i;
        if (g < 0) return incircle(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]], p) > 0;
        const Point2& a = pts[t.v[(g + 1) % 3]];
        const Point2& b = pts[t.v[(g + 2) % 3]];
        const int o = orient2d(a, b, p);
        if (o != 0) return o > 0;
        return strictly_between(a, b, p);
    }

    void insert_point(std::uint32_t pi) {
        const Point2& p = pts[pi];
        std::vector<std::uint32_t> cavity;
        for (std::uint32_t i = 0; i < tris.size(); ++i)
            if (tris[i].alive && conflicts(tris[i], p)) cavity.push_back(i);
        if (cavity.empty())
            throw std::logic_error("delaunay: empty cavity (inconsistent predicates)");

        std::unordered_set<std::uint64_t> cavity_edges;
        for (std::uint32_t idx : cavity) {
            const auto& v = tris[idx].v;
            cavity_edges.insert(ekey(v[0], v[1]));
            cavity_edges.insert(ekey(v[1], v[2]));
            cavity_edges.insert(ekey(v[2], v[0]));
        }
        std::vector<std::pair<std::uint32_t, std::uint32_t>> boundary;
        for (std::uint32_t idx : cavity) {
            const auto& v = tris[idx].v;
            for (int e = 0; e < 3; ++e) {
                std::uint32_t x = v[e], y = v[(e + 1) % 3];
                if (!cavity_edges.contains(ekey(y, x))) boundary.emplace_back(x, y);
            }
        }
        for (std::uint32_t idx : cavity) remove_tri(idx);
        for (auto [x, y] : boundary) add_tri(x, y, pi);
    }
};

}  // namespace

std::vector<Simplex> delaunay_triangulate(const PointCloud& pc) {
    const std::vector<Point2>& pts = pc.points;
    const std::size_t n = pts.size();
    if (n < 3) throw std::runtime_error("delaunay: degenerate input, need at least 3 points");

    {
        std::vector<std::uint32_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0u);
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t i, std::uint32_t j) {
            return pts[i].x != pts[j].x ? pts[i].x < pts[j].x : pts[i].y < pts[j].y;
        });
        for (std::size_t i = 1; i < n; ++i) {
            if (pts[idx[i - 1]] == pts[idx[i]]) {
                auto a = std::min(idx[i - 1], idx[i]), b = std::max(idx[i - 1], idx[i]);
                throw std::runtime_error("delaunay: duplicate points at indices " +
                                         std::to_string(a) + " and " + std::to_string(b));
            }
        }
    }

    std::uint32_t third = Simplex::kNone;
    for (std::uint32_t i = 2; i < n; ++i) {
        if (orient2d(pts[0], pts[1], pts[i]) != 0) {
            third = i;
            break;
        }
    }
    if (third == Simplex::kNone)
        throw std::runtime_error("delaunay: degenerate input, all points collinear");

    Mesh mesh(pts);
    {
        std::uint32_t a = 0, b = 1, c = third;
        if (orient2d(pts[a], pts[b], pts[c]) < 0) std::swap(b, c);
        mesh.add_tri(a, b, c);
        mesh.add_tri(b, a, kInf);
        mesh.add_tri(c, b, kInf);
        mesh.add_tri(a, c, kInf);
    }
    for (std::uint32_t i = 2; i < n; ++i) {
        if (i == third) continue;
        mesh.insert_point(i);
    }

    // Canonicalize cocircular ties: flip to the diagonal whose smaller
    // endpoint index is smaller. All four circumcircles of a cocircular quad
    // coincide, so flips preserve the Delaunay property; each flip strictly
    // lowers the sum of minimum edge endpoints, so the sweep terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint32_t ti = 0; ti < mesh.tris.size(); ++ti) {
            if (!mesh.tris[ti].alive || mesh.tris[ti].has_ghost()) continue;
            for (int e = 0; e < 3; ++e) {
                const auto tv = mesh.tris[ti].v;
                const std::uint32_t x = tv[e], y = tv[(e + 1) % 3], c = tv[(e + 2) % 3];
                if (x > y) continue;  // visit each undirected edge once
                auto it = mesh.edge_tri.find(ekey(y, x));
                if (it == mesh.edge_tri.end()) continue;
                const Tri& nb = mesh.tris[it->second];
                if (nb.has_ghost()) continue;
                std::uint32_t d = Simplex::kNone;
                for (std::uint32_t w : nb.v)
                    if (w != x && w != y) d = w;
                if (std::min(c, d) >= std::min(x, y)) continue;
                if (incircle(pts[x], pts[y], pts[c], pts[d]) != 0) continue;
                const std::uint32_t nj = it->second;
                mesh.remove_tri(ti);
                mesh.remove_tri(nj);
                mesh.add_tri(x, d, c);
                mesh.add_tri(d, y, c);
                changed = true;
                break;
            }
        }
    }

    std::vector<Simplex> out;
    out.reserve(6 * n);
    for (std::uint32_t i = 0; i < n; ++i) out.push_back(Simplex::vertex(i));
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<Simplex> triangles;
    for (const Tri& t : mesh.tris) {
        if (!t.alive || t.has_ghost()) continue;
        auto v = t.v;
        std::sort(v.begin(), v.end());
        edges.emplace(v[0], v[1]);
        edges.emplace(v[0], v[2]);
        edges.emplace(v[1], v[2]);
        triangles.push_back(Simplex::triangle(v[0], v[1], v[2]));
    }
    for (auto [a, b] : edges) out.push_back(Simplex::edge(a, b));
    std::sort(triangles.begin(), triangles.end());
    out.insert(out.end(), triangles.begin(), triangles.end());
    return out;
}

}  // namespace pentropy
