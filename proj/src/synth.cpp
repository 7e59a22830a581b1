#include "pentropy/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace pentropy {

PointCloud synth_point_cloud(SynthKind kind, std::size_t n_points, double sigma,
                             std::uint64_t seed) {
    if (n_points < 3) throw std::invalid_argument("synth: need at least 3 points");
    if (sigma < 0.0) throw std::invalid_argument("synth: sigma must be non-negative");

    std::mt19937_64 rng(seed);
    PointCloud pc;
    pc.points.reserve(n_points);

    if (kind == SynthKind::uniform) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (std::size_t i = 0; i < n_points; ++i) {
            const double x = u(rng);
            const double y = u(rng);
            pc.points.push_back({x, y});
        }
        return pc;
    }

    // hexagonal lattice: row pitch spacing*sqrt(3)/2, odd rows offset by half
    const double nd = static_cast<double>(n_points);
    const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(nd / (std::sqrt(3.0) / 2.0))));
    const double spacing = 1.0 / static_cast<double>(cols);
    const double row_pitch = spacing * std::sqrt(3.0) / 2.0;
    std::normal_distribution<double> jitter(0.0, sigma * spacing);
    for (std::size_t r = 0; pc.points.size() < n_points; ++r) {
        for (std::size_t c = 0; c < cols && pc.points.size() < n_points; ++c) {
            double x = static_cast<double>(c) * spacing + (r % 2 ? spacing / 2.0 : 0.0);
            double y = static_cast<double>(r) * row_pitch;
            if (sigma > 0.0) {
                x += jitter(rng);
                y += jitter(rng);
            }
            pc.points.push_back({x, y});
        }
    }
    return pc;
}

}  // namespace pentropy
