#include "pentropy/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace pentropy {

Simplex Simplex::vertex(std::uint32_t a) { return Simplex{{a, kNone, kNone}}; }

Simplex Simplex::edge(std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    return Simplex{{a, b, kNone}};
}

Simplex Simplex::triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
    std::array<std::uint32_t, 3> w{a, b, c};
    std::sort(w.begin(), w.end());
    return Simplex{w};
}

std::vector<Simplex> Simplex::facets() const {
    switch (dim()) {
        case 0:
            return {};
        case 1:
            return {vertex(v[0]), vertex(v[1])};
        default:
            return {edge(v[0], v[1]), edge(v[0], v[2]), edge(v[1], v[2])};
    }
}

std::size_t SimplexHash::operator()(const Simplex& s) const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::uint32_t x : s.v) {
        h ^= x;
        h *= 0x100000001b3ull;
    }
    return h;
}

namespace {

double dist2(const Point2& a, const Point2& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double squared_circumradius(const Point2& a, const Point2& b, const Point2& c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double ux = (cy * b2 - by * c2) / d;
    const double uy = (bx * c2 - cx * b2) / d;
    return ux * ux + uy * uy;
}

std::string simplex_str(const Simplex& s) {
    std::string out = "(";
    for (int i = 0; i <= s.dim(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.v[i]);
    }
    return out + ")";
}

}  // namespace

void FilteredComplex::validate() const {
    std::unordered_map<Simplex, double, SimplexHash> value;
    value.reserve(simplices.size());
    for (const auto& [s, v] : simplices) value.emplace(s, v);
    for (const auto& [s, v] : simplices) {
        for (const Simplex& f : s.facets()) {
            auto it = value.find(f);
            if (it == value.end())
                throw std::runtime_error("complex not closed under faces: " + simplex_str(f) +
                                         " missing, face of " + simplex_str(s));
            if (it->second > v)
                throw std::runtime_error("filtration not monotone: face " + simplex_str(f) +
                                         " value " + std::to_string(it->second) + " > coface " +
                                         simplex_str(s) + " value " + std::to_string(v));
        }
    }
}

FilteredComplex alpha_filtration(const PointCloud& pc, const std::vector<Simplex>& delaunay) {
    const auto& pts = pc.points;
    FilteredComplex fc;
    fc.points = pc;
    fc.simplices.reserve(delaunay.size());

    std::unordered_map<Simplex, double, SimplexHash> tri_value;
    struct EdgeInfo {
        double min_tri = std::numeric_limits<double>::infinity();
        bool gabriel = true;
    };
    std::unordered_map<Simplex, EdgeInfo, SimplexHash> edge_info;

    for (const Simplex& s : delaunay) {
        if (s.dim() != 2) continue;
        const double rr = squared_circumradius(pts[s.v[0]], pts[s.v[1]], pts[s.v[2]]);
        tri_value.emplace(s, rr);
        for (const Simplex& e : s.facets()) {
            EdgeInfo& info = edge_info[e];
            info.min_tri = std::min(info.min_tri, rr);
            // opposite vertex inside the open diametral disk => not Gabriel
            std::uint32_t opp = s.v[0] ^ s.v[1] ^ s.v[2] ^ e.v[0] ^ e.v[1];
            const Point2 mid{(pts[e.v[0]].x + pts[e.v[1]].x) / 2.0,
                             (pts[e.v[0]].y + pts[e.v[1]].y) / 2.0};
            if (dist2(mid, pts[opp]) < dist2(pts[e.v[0]], pts[e.v[1]]) / 4.0) info.gabriel = false;
        }
    }

    for (const Simplex& s : delaunay) {
        switch (s.dim()) {
            case 0:
                fc.simplices.emplace_back(s, 0.0);
                break;
            case 1: {
                auto it = edge_info.find(s);
                const EdgeInfo info = it == edge_info.end() ? EdgeInfo{} : it->second;
                double v = info.min_tri;
                if (info.gabriel) v = std::min(dist2(pts[s.v[0]], pts[s.v[1]]) / 4.0, v);
                fc.simplices.emplace_back(s, v);
                break;
            }
            default:
                fc.simplices.emplace_back(s, tri_value.at(s));
        }
    }
    return fc;
}

std::string write_complex_dump(const FilteredComplex& fc) {
    std::string out;
    for (const auto& [s, v] : fc.simplices) {
        char buf[96];
        const char tag[3] = {'v', 'e', 't'};
        int len = std::snprintf(buf, sizeof(buf), "%c", tag[s.dim()]);
        out.append(buf, len);
        for (int i = 0; i <= s.dim(); ++i) {
            len = std::snprintf(buf, sizeof(buf), " %u", s.v[i]);
            out.append(buf, len);
        }
        len = std::snprintf(buf, sizeof(buf), " %.17g\n", v);
        out.append(buf, len);
    }
    return out;
}

}  // namespace pentropy
