#include "pentropy/point_cloud.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace pentropy {

namespace {

double parse_double(std::string_view field, std::size_t line_no) {
    double v = 0.0;
    std::size_t s = 0, e = field.size();
    while (s < e && (field[s] == ' ' || field[s] == '\t')) ++s;
    while (e > s && (field[e - 1] == ' ' || field[e - 1] == '\t' || field[e - 1] == '\r')) --e;
    auto [ptr, ec] = std::from_chars(field.data() + s, field.data() + e, v);
    if (ec != std::errc() || ptr != field.data() + e)
        throw std::runtime_error("point cloud: bad number on line " + std::to_string(line_no));
    if (!std::isfinite(v))
        throw std::runtime_error("point cloud: non-finite coordinate on line " + std::to_string(line_no));
    return v;
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

PointCloud read_point_cloud_csv(std::string_view text) {
    PointCloud pc;
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
                if (line != "x,y")
                    throw std::runtime_error("point cloud: expected header \"x,y\" on line 1");
                header_seen = true;
            } else {
                std::size_t comma = line.find(',');
                if (comma == std::string_view::npos)
                    throw std::runtime_error("point cloud: missing comma on line " + std::to_string(line_no));
                pc.points.push_back({parse_double(line.substr(0, comma), line_no),
                                     parse_double(line.substr(comma + 1), line_no)});
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (!header_seen) throw std::runtime_error("point cloud: empty file");
    return pc;
}

std::string write_point_cloud_csv(const PointCloud& pc) {
    std::string out = "x,y\n";
    for (const Point2& p : pc.points) {
        out += format_double(p.x);
        out += ',';
        out += format_double(p.y);
        out += '\n';
    }
    return out;
}

}  // namespace pentropy
