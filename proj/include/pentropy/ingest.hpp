#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pentropy/label_matrix.hpp"
#include "pentropy/point_cloud.hpp"

namespace pentropy {

/// Distinct positive cell IDs in discovery order.
struct CellSet {
    std::vector<std::uint32_t> ids;
};

struct GridPos {
    std::size_t row = 0;
    std::size_t col = 0;
};

/// Walk a square spiral out from `start` (default: rows/2, cols/2) and collect
/// the first n distinct nonzero labels in encounter order. The start pixel is
/// checked first; the walk then alternates row runs and column runs whose
/// length grows by one every pair of legs. Positions outside the grid are
/// skipped. Fails once the spiral ring exceeds twice the matrix diagonal
/// without having found n labels.
CellSet spiral_select(const LabelMatrix& m, std::size_t n, std::optional<GridPos> start = std::nullopt);

/// Centroid of each selected cell: arithmetic mean of (col, row) over all
/// pixels carrying the label, so x = mean column and y = mean row. Output
/// order matches the cell set.
PointCloud compute_centroids(const LabelMatrix& m, const CellSet& cells);

}  // namespace pentropy
