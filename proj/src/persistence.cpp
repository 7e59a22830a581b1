#include "pentropy/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace pentropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Total order on simplices: (value, dim, lexicographic vertex list).
// Any refinement of the filtration preorder yields the same barcode; this one
// fixes internal traces and makes output independent of input ordering.
std::vector<std::uint32_t> filtration_order(const FilteredComplex& fc) {
    std::vector<std::uint32_t> order(fc.simplices.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const auto& [sa, va] = fc.simplices[a];
        const auto& [sb, vb] = fc.simplices[b];
        if (va != vb) return va < vb;
        if (sa.dim() != sb.dim()) return sa.dim() < sb.dim();
        return sa < sb;
    });
    return order;
}

// Symmetric difference of two sorted Z/2 columns.
std::vector<std::uint32_t> add_columns(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

bool Bar::is_infinite() const { return std::isinf(death); }

std::vector<Bar> Barcode::dim_bars(int dim) const {
    std::vector<Bar> out;
    for (const Bar& b : bars)
        if (b.dim == dim) out.push_back(b);
    return out;
}

void Barcode::sort_canonical() {
    std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
}

std::vector<PersistencePair> compute_persistence_pairs(const FilteredComplex& fc) {
    fc.validate();
    const auto order = filtration_order(fc);
    const std::size_t m = order.size();

    std::unordered_map<Simplex, std::uint32_t, SimplexHash> position;
    position.reserve(m);
    for (std::uint32_t j = 0; j < m; ++j) position.emplace(fc.simplices[order[j]].first, j);

    // Standard column reduction over Z/2. pivot_owner maps a column's low
    // index to the column that owns it, which is also the birth -> death
    // pairing.
    std::vector<std::vector<std::uint32_t>> reduced(m);
    std::vector<std::uint32_t> pivot_owner(m, Simplex::kNone);

    for (std::uint32_t j = 0; j < m; ++j) {
        const Simplex& s = fc.simplices[order[j]].first;
        std::vector<std::uint32_t> col;
        for (const Simplex& f : s.facets()) col.push_back(position.at(f));
        std::sort(col.begin(), col.end());
        while (!col.empty() && pivot_owner[col.back()] != Simplex::kNone)
            col = add_columns(col, reduced[pivot_owner[col.back()]]);
        if (!col.empty()) pivot_owner[col.back()] = j;
        reduced[j] = std::move(col);
    }

    std::vector<PersistencePair> pairs;
    pairs.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        if (!reduced[i].empty()) continue;  // i is a death column, not a creator
        const auto& [bs, bv] = fc.simplices[order[i]];
        PersistencePair p;
        p.birth_simplex = bs;
        p.dim = bs.dim();
        p.birth = bv;
        if (pivot_owner[i] != Simplex::kNone) {
            const auto& [ds, dv] = fc.simplices[order[pivot_owner[i]]];
            p.death_simplex = ds;
            p.death = dv;
        } else {
            p.death = kInf;
        }
        pairs.push_back(std::move(p));
    }
    return pairs;
}

Barcode compute_persistence(const FilteredComplex& fc) {
    Barcode bc;
    for (const PersistencePair& p : compute_persistence_pairs(fc)) {
        if (p.birth == p.death) continue;  // zero-length bars are discarded
        if (p.dim > 1)
            throw std::logic_error("persistence: unexpected essential class of dimension " +
                                   std::to_string(p.dim));
        bc.bars.push_back(Bar{p.dim, p.birth, p.death});
    }
    bc.sort_canonical();
    return bc;
}

Barcode dim0_union_find(const FilteredComplex& fc) {
    fc.validate();
    const auto order = filtration_order(fc);

    std::unordered_map<Simplex, std::uint32_t, SimplexHash> position;
    for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(order.size()); ++j)
        position.emplace(fc.simplices[order[j]].first, j);

    // parent indexed by order position of vertices; roots carry the creating
    // vertex's order position so the elder rule can compare entry times.
    std::unordered_map<std::uint32_t, std::uint32_t> parent;
    auto find = [&](std::uint32_t x) {
        while (parent.at(x) != x) {
            parent[x] = parent.at(parent.at(x));
            x = parent.at(x);
        }
        return x;
    };

    Barcode bc;
    for (std::uint32_t j = 0; j < static_cast<std::uint32_t>(order.size()); ++j) {
        const auto& [s, value] = fc.simplices[order[j]];
        if (s.dim() == 0) {
            parent[j] = j;
        } else if (s.dim() == 1) {
            std::uint32_t ra = find(position.at(Simplex::vertex(s.v[0])));
            std::uint32_t rb = find(position.at(Simplex::vertex(s.v[1])));
            if (ra == rb) continue;
            // elder rule: the component whose creating vertex entered later dies
            std::uint32_t dying = std::max(ra, rb);
            std::uint32_t surviving = std::min(ra, rb);
            parent[dying] = surviving;
            const double birth = fc.simplices[order[dying]].second;
            if (birth != value) bc.bars.push_back(Bar{0, birth, value});
        }
    }
    for (const auto& [node, par] : parent) {
        if (node == par) bc.bars.push_back(Bar{0, fc.simplices[order[node]].second, kInf});
    }
    bc.sort_canonical();
    return bc;
}

namespace {

std::string format_value(double v) {
    if (std::isinf(v)) return "inf";
    char buf[40];
    const int len = std::snprintf(buf, sizeof(buf), "%.16e", v);
    return std::string(buf, len);
}

double parse_value(std::string_view field, std::size_t line_no) {
    if (field == "inf") return kInf;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw std::runtime_error("barcode: bad value on line " + std::to_string(line_no));
    return v;
}

}  // namespace

std::string write_barcode_csv(const Barcode& b) {
    std::string out = "dim,birth,death\n";
    for (const Bar& bar : b.bars) {
        out += std::to_string(bar.dim);
        out += ',';
        out += format_value(bar.birth);
        out += ',';
        out += format_value(bar.death);
        out += '\n';
    }
    return out;
}

Barcode read_barcode_csv(std::string_view text) {
    Barcode bc;
    std::size_t pos = 0, line_no = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::size_t end = (eol == std::string_view::npos) ? text.size() : eol;
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        if (!line.empty()) {
            if (!header_seen) {
                if (line != "dim,birth,death")
                    throw std::runtime_error("barcode: expected header \"dim,birth,death\" on line 1");
                header_seen = true;
            } else {
                std::size_t c1 = line.find(',');
                std::size_t c2 = (c1 == std::string_view::npos) ? std::string_view::npos
                                                                : line.find(',', c1 + 1);
                if (c2 == std::string_view::npos)
                    throw std::runtime_error("barcode: expected 3 fields on line " +
                                             std::to_string(line_no));
                int dim = 0;
                auto dfield = line.substr(0, c1);
                auto [p, ec] = std::from_chars(dfield.data(), dfield.data() + dfield.size(), dim);
                if (ec != std::errc() || p != dfield.data() + dfield.size() || dim < 0 || dim > 1)
                    throw std::runtime_error("barcode: bad dimension on line " +
                                             std::to_string(line_no));
                const double birth = parse_value(line.substr(c1 + 1, c2 - c1 - 1), line_no);
                const double death = parse_value(line.substr(c2 + 1), line_no);
                if (std::isinf(birth) || birth > death)
                    throw std::runtime_error("barcode: bad interval on line " +
                                             std::to_string(line_no));
                bc.bars.push_back(Bar{dim, birth, death});
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!header_seen) throw std::runtime_error("barcode: empty file");
    bc.sort_canonical();
    return bc;
}

}  // namespace pentropy
