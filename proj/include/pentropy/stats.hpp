#pragma once

#include <span>
#include <string>
#include <vector>

namespace pentropy {

struct GroupSample {
    struct Group {
        std::string name;
        std::vector<double> values;
    };
    std::vector<Group> groups;
};

struct RankResult {
    std::vector<double> ranks;           // mid-ranks, parallel to the input
    std::vector<std::size_t> tie_sizes;  // size of each tied block (>= 2)
};

/// Mid-ranks of a pooled sample: tied values share the average of the ranks
/// they would occupy.
RankResult rank_with_ties(std::span<const double> values);

enum class Adjustment { none, bonferroni, holm, bh };

Adjustment adjustment_from_name(const std::string& name);
std::string adjustment_name(Adjustment a);

struct PairwiseResult {
    std::string group_a;
    std::string group_b;
    double z = 0.0;
    double p_raw = 1.0;
    double p_adjusted = 1.0;
};

struct TestResult {
    double statistic = 0.0;
    std::size_t df = 0;
    double p_value = 1.0;
    std::vector<PairwiseResult> pairwise;  // Dunn only
};

/// Kruskal-Wallis omnibus test on mid-ranks with tie correction:
///   H = [12/(N(N+1)) sum R_j^2/n_j - 3(N+1)] / [1 - sum(t^3-t)/(N^3-N)],
/// p from the chi-square upper tail with k-1 degrees of freedom.
TestResult kruskal_wallis(const GroupSample& g);

/// Dunn pairwise post-hoc z tests with the same tie correction, two-sided
/// normal p-values, adjusted across all k(k-1)/2 comparisons.
TestResult dunn_test(const GroupSample& g, Adjustment adjustment);

/// Multiple-comparison adjustment of a vector of raw p-values; results are
/// clamped to [0, 1] and monotone in the raw p-values.
std::vector<double> adjust_p_values(std::span<const double> p_raw, Adjustment a);

}  // namespace pentropy
