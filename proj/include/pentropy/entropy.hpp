#pragma once

#include <cstddef>
#include <span>
#include <utility>

#include "pentropy/persistence.hpp"

namespace pentropy {

/// Shannon entropy of the normalized interval lengths:
///   E = -sum (l_i/L) log_b(l_i/L),  L = sum l_i.
/// Maximal (log_b n) for equal lengths, 0 for a single interval.
/// Lengths must be finite and positive; callers apply an infinite-bar policy
/// first.
double persistent_entropy(std::span<const double> lengths, double log_base = 2.0);

enum class InfinitePolicy { drop, cap };

struct EntropySummary {
    double pe0 = 0.0;
    double pe1 = 0.0;
    double pe_all = 0.0;
    std::size_t n0 = 0;  // interval counts actually used
    std::size_t n1 = 0;
    double L0 = 0.0;  // total lengths
    double L1 = 0.0;
    double L_all = 0.0;
};

/// Applies the infinite-bar policy (drop removes essential bars; cap replaces
/// +inf with cap_value, defaulting to the largest finite endpoint in the
/// barcode), then computes the per-dimension entropies and the entropy of the
/// union multiset. A dimension left empty after the policy is an error.
EntropySummary summarize_entropy(const Barcode& b, InfinitePolicy policy,
                                 double log_base = 2.0, double cap_value = -1.0);

struct StabilityBound {
    double value = 0.0;
    bool trivial = false;  // degenerate hypothesis, value is +infinity
};

/// Entropy-stability bound for two barcodes of monotone functions within
/// sup-distance delta:
///   (4 d n / L) * (log_b n - log_b(4 d n / L)),
/// with n = max bar count and L = max total length. Degenerate cases
/// (argument of the log outside (0, n)) yield a flagged +infinity.
StabilityBound stability_bound(const Barcode& b1, const Barcode& b2, double delta,
                               double log_base = 2.0);

/// Exact bottleneck distance between two small sets of finite intervals by
/// exhaustive matching (subset dynamic program): bars may pair with each
/// other at L-infinity cost or project to the diagonal at half their length.
/// Limit: 12 intervals per side.
double bottleneck_bruteforce(std::span<const std::pair<double, double>> a,
                             std::span<const std::pair<double, double>> b);

/// Dimension-respecting variant: max over dimensions of the interval-level
/// distance. Both barcodes must be free of infinite bars.
double bottleneck_bruteforce(const Barcode& a, const Barcode& b);

}  // namespace pentropy
