#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pentropy {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

/// Ordered list of 2D points, optionally carrying the cell IDs they came from.
struct PointCloud {
    std::vector<Point2> points;
    std::vector<std::uint32_t> source_ids;  // empty, or parallel to points

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

/// CSV with header "x,y", one point per line.
PointCloud read_point_cloud_csv(std::string_view text);
std::string write_point_cloud_csv(const PointCloud& pc);

}  // namespace pentropy
