#include "pentropy/ingest.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace pentropy {

CellSet spiral_select(const LabelMatrix& m, std::size_t n, std::optional<GridPos> start) {
    if (n < 1) throw std::invalid_argument("spiral_select: n must be >= 1");
    if (m.rows == 0 || m.cols == 0) throw std::invalid_argument("spiral_select: empty matrix");
    GridPos s = start.value_or(GridPos{m.rows / 2, m.cols / 2});
    if (s.row >= m.rows || s.col >= m.cols)
        throw std::invalid_argument("spiral_select: start pixel outside the matrix");

    CellSet out;
    out.ids.reserve(n);
    std::unordered_set<std::uint32_t> seen;
    auto visit = [&](long long row, long long col) {
        if (!m.in_bounds(row, col)) return;
        std::uint32_t label = m.at(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
        if (label != 0 && seen.insert(label).second) out.ids.push_back(label);
    };

    long long row = static_cast<long long>(s.row);
    long long col = static_cast<long long>(s.col);
    visit(row, col);

    // Square spiral: leg pair i moves i steps along rows with sign (-1)^(i+1),
    // then i steps along columns with sign (-1)^i. Out-of-bounds positions are
    // skipped; the walk gives up once the ring exceeds twice the diagonal.
    const long long max_leg =
        4 * static_cast<long long>(std::ceil(std::hypot(double(m.rows), double(m.cols)))) + 2;
    for (long long i = 1; out.ids.size() < n; ++i) {
        if (i > max_leg) {
            throw std::runtime_error("spiral_select: insufficient cells, found " +
                                     std::to_string(out.ids.size()) + " of " + std::to_string(n));
        }
        const long long row_step = (i % 2 == 1) ? 1 : -1;  // (-1)^(i+1)
        const long long col_step = (i % 2 == 1) ? -1 : 1;  // (-1)^i
        for (long long k = 0; k < i && out.ids.size() < n; ++k) {
            row += row_step;
            visit(row, col);
        }
        for (long long k = 0; k < i && out.ids.size() < n; ++k) {
            col += col_step;
            visit(row, col);
        }
    }
    return out;
}

PointCloud compute_centroids(const LabelMatrix& m, const CellSet& cells) {
    struct Acc {
        double sum_col = 0.0;
        double sum_row = 0.0;
        std::size_t count = 0;
    };
    std::unordered_map<std::uint32_t, Acc> acc;
    acc.reserve(cells.ids.size());
    for (std::uint32_t id : cells.ids) acc.emplace(id, Acc{});

    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            auto it = acc.find(m.at(r, c));
            if (it != acc.end()) {
                it->second.sum_col += static_cast<double>(c);
                it->second.sum_row += static_cast<double>(r);
                ++it->second.count;
            }
        }
    }

    PointCloud pc;
    pc.points.reserve(cells.ids.size());
    pc.source_ids.reserve(cells.ids.size());
    for (std::uint32_t id : cells.ids) {
        const Acc& a = acc.at(id);
        if (a.count == 0)
            throw std::runtime_error("compute_centroids: cell ID " + std::to_string(id) +
                                     " not present in matrix");
        // x = mean column, y = mean row
        pc.points.push_back({a.sum_col / static_cast<double>(a.count),
                             a.sum_row / static_cast<double>(a.count)});
        pc.source_ids.push_back(id);
    }
    return pc;
}

}  // namespace pentropy
