// Acceptance suite: one criterion per function, one [PASS]/[FAIL] line each.
// Run with no arguments for all criteria, or name criteria to run a subset.
// The data directory (holding table2.csv) is the last argument.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pentropy/persistence.hpp"
#include "pentropy/pipeline.hpp"
#include "support.hpp"

using namespace pentropy;
namespace fs = std::filesystem;

namespace {

fs::path g_data_dir = "data";

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
    void note(const std::string& msg) {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

std::vector<SampleRow> fixture_rows() {
    return read_sample_rows(read_file(g_data_dir / "table2.csv"));
}

// Published reference statistics for data/table2.csv (see README, "Reference
// dataset"). Layout: pe0, pe1, pe_all.
constexpr double kReferenceKW[3] = {1.427e-05, 5.768e-07, 2.005e-07};

struct ReferenceDunn {
    const char* a;
    const char* b;
    double p[3];  // per variable
};
const ReferenceDunn kReferenceDunn[] = {
    {"dWL", "dWP", {0.02671554, 0.3271768, 0.1537159}},
    {"cNT", "dWL", {0.01600541, 5.791831e-05, 1.024837e-04}},
    {"dWP", "cNT", {7.574294e-06, 2.162007e-06, 3.865447e-07}},
};

const PairwiseResult* find_pair(const TestResult& r, const std::string& a, const std::string& b) {
    for (const auto& pw : r.pairwise)
        if ((pw.group_a == a && pw.group_b == b) || (pw.group_a == b && pw.group_b == a))
            return &pw;
    return nullptr;
}

// The reference table duplicates the dWL pe1 value 8.436416; the published
// statistics are only consistent with the second copy ranking one slot lower
// (anywhere in the gap between 8.404452 and 8.432509). This diagnostic
// re-runs both tests with that single rank corrected and reports the worst
// deviation across all twelve published values.
std::string anomaly_diagnostic() {
    std::vector<SampleRow> rows = fixture_rows();
    int seen = 0;
    for (SampleRow& r : rows) {
        if (r.group == "dWL" && r.pe1 == 8.436416 && ++seen == 2) {
            r.pe1 = 8.42;
            break;
        }
    }
    PipelineConfig cfg;
    const CompareResult res = run_compare(rows, cfg);
    double worst = 0.0;
    for (int v = 0; v < 3; ++v) {
        worst = std::max(worst, rel_err(res.kruskal[v].p_value, kReferenceKW[v]));
        for (const ReferenceDunn& ref : kReferenceDunn)
            worst = std::max(worst,
                             rel_err(find_pair(res.dunn[v], ref.a, ref.b)->p_adjusted, ref.p[v]));
    }
    return "note: the duplicated dWL pe1 entry 8.436416 is inconsistent with the published "
           "statistics; with its second copy re-ranked one slot lower all twelve reproduce to " +
           fmt(100 * worst) + "% (see README)";
}

Check criterion_table3() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    PipelineConfig cfg;
    const CompareResult res = run_compare(fixture_rows(), cfg);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (int v = 0; v < 3; ++v) {
        const double err = rel_err(res.kruskal[v].p_value, kReferenceKW[v]);
        if (err <= 0.02)
            c.note(std::string(kVariableNames[v]) + " p=" + fmt(res.kruskal[v].p_value) +
                   " err=" + fmt(100 * err) + "%");
        else
            c.fail(std::string(kVariableNames[v]) + " p=" + fmt(res.kruskal[v].p_value) +
                   " vs " + fmt(kReferenceKW[v]) + " err=" + fmt(100 * err) + "% (>2%)");
    }
    if (elapsed >= 1.0) c.fail("runtime " + fmt(elapsed) + "s (>=1s)");
    if (!c.ok) c.note(anomaly_diagnostic());
    return c;
}

Check criterion_table4() {
    Check c;
    PipelineConfig cfg;
    const std::vector<SampleRow> rows = fixture_rows();

    // Calibration: evaluate every adjustment method against all nine
    // published entries, pick the best, require <=5% on all of them.
    const Adjustment methods[] = {Adjustment::none, Adjustment::bonferroni, Adjustment::holm,
                                  Adjustment::bh};
    Adjustment best = Adjustment::none;
    double best_worst = 1e300;
    std::map<Adjustment, double> worst_by_method;
    for (Adjustment m : methods) {
        cfg.adjustment = m;
        const CompareResult res = run_compare(rows, cfg);
        double worst = 0.0;
        for (int v = 0; v < 3; ++v) {
            for (const ReferenceDunn& ref : kReferenceDunn) {
                const PairwiseResult* pw = find_pair(res.dunn[v], ref.a, ref.b);
                worst = std::max(worst, rel_err(pw->p_adjusted, ref.p[v]));
            }
        }
        worst_by_method[m] = worst;
        if (worst < best_worst) {
            best_worst = worst;
            best = m;
        }
    }
    std::string report = "calibration:";
    for (Adjustment m : methods)
        report += " " + adjustment_name(m) + "=" + fmt(100 * worst_by_method[m]) + "%";
    c.note(report);
    c.note("calibrated method: " + adjustment_name(best) + " (repo default: bh)");

    cfg.adjustment = best;
    const CompareResult res = run_compare(rows, cfg);
    for (int v = 0; v < 3; ++v) {
        for (const ReferenceDunn& ref : kReferenceDunn) {
            const PairwiseResult* pw = find_pair(res.dunn[v], ref.a, ref.b);
            const double err = rel_err(pw->p_adjusted, ref.p[v]);
            if (err > 0.05)
                c.fail(std::string(kVariableNames[v]) + " " + ref.a + "/" + ref.b + " p=" +
                       fmt(pw->p_adjusted) + " vs " + fmt(ref.p[v]) + " err=" +
                       fmt(100 * err) + "% (>5%)");
        }
    }
    if (!c.ok) c.note(anomaly_diagnostic());
    return c;
}

Check criterion_significance() {
    Check c;
    PipelineConfig cfg;
    const CompareResult res = run_compare(fixture_rows(), cfg);
    for (int v = 0; v < 3; ++v)
        if (!(res.kruskal[v].p_value < 0.005))
            c.fail(std::string("omnibus ") + kVariableNames[v] + " not significant at 0.005");

    // pe0 must be the only variable whose three pairwise comparisons all
    // clear the tabulated 0.05-scale threshold
    auto all_below = [&](int v, double thresh) {
        return std::all_of(res.dunn[v].pairwise.begin(), res.dunn[v].pairwise.end(),
                           [&](const PairwiseResult& pw) { return pw.p_adjusted < thresh; });
    };
    if (!all_below(0, 0.05)) c.fail("pe0 does not separate all pairs at 0.05");
    if (all_below(1, 0.05)) c.fail("pe1 unexpectedly separates all pairs");
    if (all_below(2, 0.05)) c.fail("pe_all unexpectedly separates all pairs");

    for (int v : {1, 2}) {
        const PairwiseResult* pw = find_pair(res.dunn[v], "dWL", "dWP");
        if (!(pw->p_adjusted > 0.005))
            c.fail(std::string(kVariableNames[v]) + " dWL vs dWP unexpectedly significant");
    }
    if (c.ok) c.note("omnibus all < 0.005; pe0 separates all pairs; dWL/dWP ns for pe1, pe_all");
    return c;
}

Check criterion_entropy_extremes() {
    Check c;
    for (std::size_t n = 1; n <= 64; ++n) {
        const std::vector<double> lengths(n, 0.37);
        const double err = std::fabs(persistent_entropy(lengths) - std::log2(double(n)));
        if (err > 1e-12) c.fail("n=" + std::to_string(n) + " err=" + fmt(err));
    }
    if (persistent_entropy(std::vector<double>{3.25}) != 0.0) c.fail("single bar != 0");
    if (c.ok) c.note("log2(n) within 1e-12 for n in 1..64; single bar exactly 0");
    return c;
}

Check criterion_geometry() {
    Check c;
    const PointCloud pc =
        testsupport::make_cloud({{0, 0}, {1, 0}, {0.5, std::sqrt(3.0) / 2.0}});
    const FilteredComplex fc = alpha_filtration(pc, delaunay_triangulate(pc));
    for (const auto& [s, v] : fc.simplices) {
        const double want = s.dim() == 0 ? 0.0 : (s.dim() == 1 ? 0.25 : 1.0 / 3.0);
        if (std::fabs(v - want) > 1e-12)
            c.fail("simplex dim " + std::to_string(s.dim()) + " value " + fmt(v));
    }
    const Barcode bc = compute_persistence(fc);
    const auto d0 = bc.dim_bars(0);
    const auto d1 = bc.dim_bars(1);
    if (d0.size() != 3 || d1.size() != 1) c.fail("unexpected bar counts");
    if (!d0.empty() && (!d0.back().is_infinite() || std::fabs(d0[0].death - 0.25) > 1e-12))
        c.fail("dim0 bars wrong");
    if (!d1.empty() && (std::fabs(d1[0].birth - 0.25) > 1e-12 ||
                        std::fabs(d1[0].death - 1.0 / 3.0) > 1e-12))
        c.fail("dim1 bar wrong");

    PipelineConfig cfg;
    const EntropySummary s = entropy_of_cloud(pc, cfg);
    // pe_all from first principles: lengths {1/4, 1/4, 1/12}, shares {3/7, 3/7, 1/7}
    const double pe_all_expected = (6.0 / 7.0) * std::log2(7.0 / 3.0) + std::log2(7.0) / 7.0;
    if (std::fabs(s.pe0 - 1.0) > 1e-12) c.fail("pe0 " + fmt(s.pe0));
    if (s.pe1 != 0.0) c.fail("pe1 " + fmt(s.pe1));
    if (std::fabs(s.pe_all - pe_all_expected) > 1e-9) c.fail("pe_all " + fmt(s.pe_all));
    if (c.ok)
        c.note("edges 0.25, triangle 1/3, barcode and entropies (pe_all=" + fmt(s.pe_all) +
               ") as derived");
    return c;
}

Check criterion_oracle() {
    Check c;
    std::size_t clouds = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PointCloud pc = testsupport::random_cloud(50, 7000 + seed);
        const std::vector<Simplex> tri = delaunay_triangulate(pc);
        std::size_t v = 0, e = 0, t = 0;
        for (const Simplex& s : tri) {
            if (s.dim() == 0) ++v;
            if (s.dim() == 1) ++e;
            if (s.dim() == 2) ++t;
        }
        if (v - e + t != 1) {
            c.fail("Euler characteristic != 1 at seed " + std::to_string(seed));
            break;
        }
        const FilteredComplex fc = alpha_filtration(pc, tri);
        const Barcode red = compute_persistence(fc);
        Barcode red0;
        red0.bars = red.dim_bars(0);
        red0.sort_canonical();
        if (!(dim0_union_find(fc) == red0)) {
            c.fail("union-find mismatch at seed " + std::to_string(seed));
            break;
        }
        if (testsupport::finite_deaths(red, 0) != testsupport::mst_edge_values(fc)) {
            c.fail("MST death mismatch at seed " + std::to_string(seed));
            break;
        }
        ++clouds;
    }
    if (c.ok)
        c.note(std::to_string(clouds) +
               " clouds: reduction == union-find, deaths == MST, Euler == 1");
    return c;
}

Check criterion_stability() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();

    const PointCloud pc = testsupport::random_cloud(10, 40);
    const FilteredComplex fc = alpha_filtration(pc, delaunay_triangulate(pc));
    c.note(std::to_string(fc.simplices.size()) + " simplices");

    auto drop_inf = [](Barcode b) {
        b.bars.erase(std::remove_if(b.bars.begin(), b.bars.end(),
                                    [](const Bar& x) { return x.is_infinite(); }),
                     b.bars.end());
        return b;
    };
    auto total_entropy = [](const Barcode& b) {
        std::vector<double> lengths;
        for (const Bar& bar : b.bars) lengths.push_back(bar.length());
        return persistent_entropy(lengths);
    };
    auto total_length = [](const Barcode& b) {
        double l = 0.0;
        for (const Bar& bar : b.bars) l += bar.length();
        return l;
    };

    const Barcode b1 = drop_inf(compute_persistence(fc));
    const double e1 = total_entropy(b1);
    const double l1 = total_length(b1);

    std::mt19937_64 rng(2024);
    int trials = 0, satisfied = 0, violations = 0;
    while (trials < 500) {
        ++trials;
        const double delta = 1e-4 + 2e-3 * std::generate_canonical<double, 53>(rng);
        const FilteredComplex fp = testsupport::perturb_monotone(fc, delta, rng);
        const Barcode b2 = drop_inf(compute_persistence(fp));
        const double d_inf = bottleneck_bruteforce(b1, b2);
        const double n_max = double(std::max(b1.bars.size(), b2.bars.size()));
        const double l_max = std::max(l1, total_length(b2));
        if (d_inf > l_max / (8.0 * n_max)) continue;  // hypothesis not satisfied
        ++satisfied;
        const StabilityBound bound = stability_bound(b1, b2, delta);
        if (std::fabs(e1 - total_entropy(b2)) > bound.value) ++violations;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.note(std::to_string(trials) + " trials, " + std::to_string(satisfied) +
           " satisfied the hypothesis, " + std::to_string(violations) + " violations, " +
           fmt(elapsed) + "s");
    if (violations > 0) c.fail("entropy difference exceeded the bound");
    if (satisfied < 100) c.fail("too few trials satisfied the hypothesis");
    if (elapsed >= 30.0) c.fail("runtime over 30s");
    return c;
}

Check criterion_surrogate() {
    Check c;
    PipelineConfig cfg;
    GroupSample g{{{"ordered", {}}, {"disordered", {}}}};
    const double upper = 8.6403;  // log2(399) rounds below this
    for (int i = 0; i < 15; ++i) {
        for (int which : {0, 1}) {
            const double sigma = which == 0 ? 0.05 : 0.30;
            const PointCloud pc = synth_point_cloud(SynthKind::hexjitter, 400, sigma,
                                                    1000 * (which + 1) + i);
            const EntropySummary s = entropy_of_cloud(pc, cfg);
            if (!(s.pe0 > 8.0 && s.pe0 <= upper))
                c.fail("pe0 " + fmt(s.pe0) + " outside (8.0, 8.6403] at sigma " + fmt(sigma));
            g.groups[which].values.push_back(s.pe0);
        }
    }
    const TestResult kw = kruskal_wallis(g);
    c.note("pe0 ranges [" + fmt(*std::min_element(g.groups[0].values.begin(),
                                                  g.groups[0].values.end())) +
           ", " + fmt(*std::max_element(g.groups[0].values.begin(), g.groups[0].values.end())) +
           "] vs [" + fmt(*std::min_element(g.groups[1].values.begin(),
                                            g.groups[1].values.end())) +
           ", " + fmt(*std::max_element(g.groups[1].values.begin(), g.groups[1].values.end())) +
           "], KW p=" + fmt(kw.p_value));
    if (!(kw.p_value < 0.005)) c.fail("groups not separated at 0.005");
    return c;
}

Check criterion_determinism() {
    Check c;
    const fs::path base = fs::temp_directory_path() / "pentropy_acceptance" / "determinism";
    fs::remove_all(base);
    fs::create_directories(base / "in");

    std::vector<fs::path> inputs;
    for (int i = 0; i < 30; ++i) {
        const SynthKind kind = i % 3 == 2 ? SynthKind::uniform : SynthKind::hexjitter;
        const double sigma = i % 3 == 0 ? 0.05 : 0.30;
        const PointCloud pc = synth_point_cloud(kind, 400, sigma, 500 + i);
        const fs::path p = base / "in" / ("sample" + std::to_string(i) + ".csv");
        write_file(p, write_point_cloud_csv(pc));
        inputs.push_back(p);
    }
    PipelineConfig cfg;
    run_entropy(inputs, cfg, "batch", base / "out1", true);
    run_entropy(inputs, cfg, "batch", base / "out2", true);
    for (const char* name : {"entropy.csv", "entropy.json"}) {
        if (read_file(base / "out1" / name) != read_file(base / "out2" / name))
            c.fail(std::string(name) + " differs between runs");
    }
    for (int i = 0; i < 30; ++i) {
        const std::string bar = "barcodes/sample" + std::to_string(i) + ".barcode.csv";
        if (read_file(base / "out1" / bar) != read_file(base / "out2" / bar)) {
            c.fail("barcode dump differs between runs");
            break;
        }
    }
    if (c.ok) c.note("30-file batch: csv, json and 30 barcode dumps byte-identical");
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    std::map<std::string, std::function<Check()>> criteria{
        {"table3", criterion_table3},
        {"table4", criterion_table4},
        {"significance", criterion_significance},
        {"entropy-extremes", criterion_entropy_extremes},
        {"geometry", criterion_geometry},
        {"oracle", criterion_oracle},
        {"stability", criterion_stability},
        {"surrogate", criterion_surrogate},
        {"determinism", criterion_determinism},
    };

    std::vector<std::string> selected;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--data" && i + 1 < argc) {
            g_data_dir = argv[++i];
        } else if (criteria.count(arg)) {
            selected.push_back(arg);
        } else {
            std::fprintf(stderr, "unknown criterion: %s\n", arg.c_str());
            return 2;
        }
    }
    if (selected.empty())
        for (const auto& [name, fn] : criteria) selected.push_back(name);

    int failures = 0;
    for (const std::string& name : selected) {
        const Check c = criteria.at(name)();
        std::printf("[%s] %s: %s\n", c.ok ? "PASS" : "FAIL", name.c_str(), c.detail.c_str());
        if (!c.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
