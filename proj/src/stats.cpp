#include "pentropy/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pentropy/special_functions.hpp"

namespace pentropy {

RankResult rank_with_ties(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("rank_with_ties: empty sample");
    const std::size_t n = values.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    RankResult out;
    out.ranks.resize(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1;
        while (j < n && values[idx[j]] == values[idx[i]]) ++j;
        // sorted positions i..j-1 share the mid-rank (1-based)
        const double rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k) out.ranks[idx[k]] = rank;
        if (j - i >= 2) out.tie_sizes.push_back(j - i);
        i = j;
    }
    return out;
}

Adjustment adjustment_from_name(const std::string& name) {
    if (name == "none") return Adjustment::none;
    if (name == "bonferroni") return Adjustment::bonferroni;
    if (name == "holm") return Adjustment::holm;
    if (name == "bh") return Adjustment::bh;
    throw std::invalid_argument("unknown adjustment: " + name);
}

std::string adjustment_name(Adjustment a) {
    switch (a) {
        case Adjustment::none: return "none";
        case Adjustment::bonferroni: return "bonferroni";
        case Adjustment::holm: return "holm";
        case Adjustment::bh: return "bh";
    }
    return "?";
}

std::vector<double> adjust_p_values(std::span<const double> p_raw, Adjustment a) {
    const std::size_t m = p_raw.size();
    std::vector<double> adj(p_raw.begin(), p_raw.end());
    if (m == 0 || a == Adjustment::none) return adj;
    if (a == Adjustment::bonferroni) {
        for (double& p : adj) p = std::min(1.0, p * static_cast<double>(m));
        return adj;
    }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return p_raw[i] < p_raw[j]; });
    if (a == Adjustment::holm) {
        double running = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            running = std::max(running, p_raw[order[k]] * static_cast<double>(m - k));
            adj[order[k]] = std::min(1.0, running);
        }
    } else {  // Benjamini-Hochberg
        double running = 1.0;
        for (std::size_t k = m; k-- > 0;) {
            running = std::min(running,
                               p_raw[order[k]] * static_cast<double>(m) / static_cast<double>(k + 1));
            adj[order[k]] = std::min(1.0, running);
        }
    }
    return adj;
}

namespace {

struct Pooled {
    std::vector<double> ranks;       // pooled mid-ranks, group-major
    std::vector<std::size_t> sizes;  // per-group sizes
    std::size_t total = 0;
    double tie_sum = 0.0;  // sum of t^3 - t over tie blocks
};

Pooled pool_and_rank(const GroupSample& g, const char* caller) {
    if (g.groups.size() < 2)
        throw std::invalid_argument(std::string(caller) + ": need at least 2 groups");
    Pooled p;
    std::vector<double> values;
    for (const auto& grp : g.groups) {
        if (grp.values.empty())
            throw std::invalid_argument(std::string(caller) + ": group \"" + grp.name +
                                        "\" is empty");
        for (double v : grp.values) {
            if (!std::isfinite(v))
                throw std::invalid_argument(std::string(caller) + ": non-finite value in group \"" +
                                            grp.name + "\"");
            values.push_back(v);
        }
        p.sizes.push_back(grp.values.size());
    }
    p.total = values.size();
    RankResult rr = rank_with_ties(values);
    p.ranks = std::move(rr.ranks);
    for (std::size_t t : rr.tie_sizes) {
        const double td = static_cast<double>(t);
        p.tie_sum += td * td * td - td;
        if (t == p.total)
            throw std::invalid_argument(std::string(caller) +
                                        ": degenerate sample, all values identical");
    }
    return p;
}

std::vector<double> rank_sums(const Pooled& p) {
    std::vector<double> sums(p.sizes.size(), 0.0);
    std::size_t at = 0;
    for (std::size_t gi = 0; gi < p.sizes.size(); ++gi)
        for (std::size_t k = 0; k < p.sizes[gi]; ++k) sums[gi] += p.ranks[at++];
    return sums;
}

}  // namespace

TestResult kruskal_wallis(const GroupSample& g) {
    const Pooled p = pool_and_rank(g, "kruskal_wallis");
    const double n = static_cast<double>(p.total);
    if (p.total < 3) throw std::invalid_argument("kruskal_wallis: need at least 3 observations");

    const std::vector<double> sums = rank_sums(p);
    double h = 0.0;
    for (std::size_t gi = 0; gi < sums.size(); ++gi)
        h += sums[gi] * sums[gi] / static_cast<double>(p.sizes[gi]);
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);
    const double correction = 1.0 - p.tie_sum / (n * n * n - n);
    h /= correction;

    TestResult r;
    r.statistic = h;
    r.df = g.groups.size() - 1;
    r.p_value = chi2_sf(std::max(h, 0.0), r.df);
    return r;
}

TestResult dunn_test(const GroupSample& g, Adjustment adjustment) {
    const Pooled p = pool_and_rank(g, "dunn_test");
    const double n = static_cast<double>(p.total);
    const std::vector<double> sums = rank_sums(p);

    const double sigma_base = n * (n + 1.0) / 12.0 - p.tie_sum / (12.0 * (n - 1.0));

    TestResult r;
    r.df = 0;
    r.statistic = 0.0;
    r.p_value = 1.0;
    std::vector<double> raw;
    for (std::size_t i = 0; i < g.groups.size(); ++i) {
        for (std::size_t j = i + 1; j < g.groups.size(); ++j) {
            const double ni = static_cast<double>(p.sizes[i]);
            const double nj = static_cast<double>(p.sizes[j]);
            const double z = (sums[i] / ni - sums[j] / nj) /
                             std::sqrt(sigma_base * (1.0 / ni + 1.0 / nj));
            PairwiseResult pr;
            pr.group_a = g.groups[i].name;
            pr.group_b = g.groups[j].name;
            pr.z = z;
            pr.p_raw = 2.0 * normal_sf(std::fabs(z));
            raw.push_back(pr.p_raw);
            r.pairwise.push_back(std::move(pr));
        }
    }
    const std::vector<double> adj = adjust_p_values(raw, adjustment);
    for (std::size_t k = 0; k < adj.size(); ++k) r.pairwise[k].p_adjusted = adj[k];
    return r;
}

}  // namespace pentropy
