#pragma once

#include <cstdint>

#include "pentropy/point_cloud.hpp"

namespace pentropy {

enum class SynthKind { uniform, hexjitter };

/// Synthetic point clouds for desk-scale experiments. uniform: i.i.d. points
/// in the unit square. hexjitter: a hexagonal lattice of n sites scaled to
/// the unit square, each perturbed by i.i.d. Gaussian noise with standard
/// deviation sigma * (lattice spacing). Deterministic for a fixed seed.
PointCloud synth_point_cloud(SynthKind kind, std::size_t n_points, double sigma,
                             std::uint64_t seed);

}  // namespace pentropy
