#include "pentropy/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pentropy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double entropy_bits(std::span<const double> lengths) {
    double total = 0.0;
    for (double l : lengths) total += l;
    double e = 0.0;
    for (double l : lengths) {
        const double p = l / total;
        e -= p * std::log2(p);
    }
    return e;
}

}  // namespace

double persistent_entropy(std::span<const double> lengths, double log_base) {
    if (lengths.empty()) throw std::invalid_argument("persistent_entropy: empty barcode");
    if (!(log_base > 1.0)) throw std::invalid_argument("persistent_entropy: log base must be > 1");
    for (double l : lengths) {
        if (!std::isfinite(l) || l <= 0.0)
            throw std::invalid_argument(
                "persistent_entropy: interval lengths must be finite and positive "
                "(apply an infinite-bar policy first)");
    }
    // summing in sorted order makes the value independent of input order
    std::vector<double> sorted(lengths.begin(), lengths.end());
    std::sort(sorted.begin(), sorted.end());
    double e = entropy_bits(sorted);
    if (log_base != 2.0) e /= std::log2(log_base);
    return e;
}

EntropySummary summarize_entropy(const Barcode& b, InfinitePolicy policy, double log_base,
                                 double cap_value) {
    double cap = cap_value;
    if (policy == InfinitePolicy::cap && !(cap > 0.0)) {
        // default cap: largest finite endpoint present in the barcode
        cap = 0.0;
        for (const Bar& bar : b.bars) {
            cap = std::max(cap, bar.birth);
            if (!bar.is_infinite()) cap = std::max(cap, bar.death);
        }
    }

    std::vector<double> len0, len1;
    for (const Bar& bar : b.bars) {
        double death = bar.death;
        if (bar.is_infinite()) {
            if (policy == InfinitePolicy::drop) continue;
            death = cap;
        }
        const double l = death - bar.birth;
        if (l <= 0.0) continue;  // capping can shrink a bar to nothing
        (bar.dim == 0 ? len0 : len1).push_back(l);
    }
    if (len0.empty())
        throw std::runtime_error("summarize_entropy: no dim-0 intervals left after policy");
    if (len1.empty())
        throw std::runtime_error("summarize_entropy: no dim-1 intervals left after policy");

    EntropySummary s;
    s.n0 = len0.size();
    s.n1 = len1.size();
    for (double l : len0) s.L0 += l;
    for (double l : len1) s.L1 += l;
    s.L_all = s.L0 + s.L1;
    s.pe0 = persistent_entropy(len0, log_base);
    s.pe1 = persistent_entropy(len1, log_base);
    std::vector<double> all(len0);
    all.insert(all.end(), len1.begin(), len1.end());
    s.pe_all = persistent_entropy(all, log_base);
    return s;
}

namespace {

struct BarcodeStats {
    std::size_t n = 0;
    double total_length = 0.0;
};

BarcodeStats finite_stats(const Barcode& b, const char* caller) {
    BarcodeStats s;
    for (const Bar& bar : b.bars) {
        if (bar.is_infinite())
            throw std::invalid_argument(std::string(caller) +
                                        ": barcode has infinite bars, apply a policy first");
        s.total_length += bar.length();
        ++s.n;
    }
    if (s.n == 0) throw std::invalid_argument(std::string(caller) + ": empty barcode");
    return s;
}

}  // namespace

StabilityBound stability_bound(const Barcode& b1, const Barcode& b2, double delta,
                               double log_base) {
    if (!(delta > 0.0)) throw std::invalid_argument("stability_bound: delta must be positive");
    const BarcodeStats s1 = finite_stats(b1, "stability_bound");
    const BarcodeStats s2 = finite_stats(b2, "stability_bound");
    const double n_max = static_cast<double>(std::max(s1.n, s2.n));
    const double l_max = std::max(s1.total_length, s2.total_length);
    if (!(l_max > 0.0)) return {kInf, true};
    const double x = 4.0 * delta * n_max / l_max;
    if (!(x > 0.0) || x >= n_max) return {kInf, true};
    const double bits = x * (std::log2(n_max) - std::log2(x));
    return {bits / std::log2(log_base), false};
}

double bottleneck_bruteforce(std::span<const std::pair<double, double>> a,
                             std::span<const std::pair<double, double>> b) {
    constexpr std::size_t kMax = 12;
    if (a.size() > kMax || b.size() > kMax)
        throw std::invalid_argument("bottleneck_bruteforce: more than 12 intervals");
    for (auto s : {a, b})
        for (auto [birth, death] : s)
            if (!std::isfinite(birth) || !std::isfinite(death) || birth > death)
                throw std::invalid_argument("bottleneck_bruteforce: invalid interval");

    const std::size_t na = a.size(), nb = b.size();
    auto diag = [](const std::pair<double, double>& p) { return (p.second - p.first) / 2.0; };
    auto cost = [](const std::pair<double, double>& p, const std::pair<double, double>& q) {
        return std::max(std::fabs(p.first - q.first), std::fabs(p.second - q.second));
    };

    // f(i, mask): best achievable max-cost matching bars a[i..) given the set
    // of b bars already used; leftover b bars go to the diagonal.
    const std::size_t masks = std::size_t{1} << nb;
    std::vector<double> f((na + 1) * masks, 0.0);
    for (std::size_t mask = 0; mask < masks; ++mask) {
        double worst = 0.0;
        for (std::size_t j = 0; j < nb; ++j)
            if (!(mask & (std::size_t{1} << j))) worst = std::max(worst, diag(b[j]));
        f[na * masks + mask] = worst;
    }
    for (std::size_t i = na; i-- > 0;) {
        for (std::size_t mask = 0; mask < masks; ++mask) {
            double best = std::max(diag(a[i]), f[(i + 1) * masks + mask]);
            for (std::size_t j = 0; j < nb; ++j) {
                if (mask & (std::size_t{1} << j)) continue;
                const double c = std::max(cost(a[i], b[j]),
                                          f[(i + 1) * masks + (mask | (std::size_t{1} << j))]);
                best = std::min(best, c);
            }
            f[i * masks + mask] = best;
        }
    }
    return f[0];
}

double bottleneck_bruteforce(const Barcode& a, const Barcode& b) {
    for (const Barcode* bc : {&a, &b})
        for (const Bar& bar : bc->bars)
            if (bar.is_infinite())
                throw std::invalid_argument(
                    "bottleneck_bruteforce: barcode has infinite bars, apply a policy first");
    double worst = 0.0;
    for (int dim : {0, 1}) {
        std::vector<std::pair<double, double>> ia, ib;
        for (const Bar& bar : a.bars)
            if (bar.dim == dim) ia.emplace_back(bar.birth, bar.death);
        for (const Bar& bar : b.bars)
            if (bar.dim == dim) ib.emplace_back(bar.birth, bar.death);
        worst = std::max(worst, bottleneck_bruteforce(ia, ib));
    }
    return worst;
}

}  // namespace pentropy
