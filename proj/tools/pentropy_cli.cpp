#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pentropy/persistence.hpp"
#include "pentropy/pipeline.hpp"

namespace fs = std::filesystem;
using namespace pentropy;

namespace {

struct CommonOpts {
    PipelineConfig cfg;
    std::string infinite = "drop";
    std::string adjust = "bh";
    long long start_row = -1;
    long long start_col = -1;

    void finalize() {
        cfg.infinite_policy = infinite == "cap" ? InfinitePolicy::cap : InfinitePolicy::drop;
        cfg.adjustment = adjustment_from_name(adjust);
        if (start_row >= 0 && start_col >= 0)
            cfg.spiral_start = GridPos{static_cast<std::size_t>(start_row),
                                       static_cast<std::size_t>(start_col)};
        cfg.validate();
    }
};

void emit(const std::optional<std::string>& out_file, const std::string& content) {
    if (out_file)
        write_file(*out_file, content);
    else
        std::cout << content;
}

int cmd_ingest(const std::string& input, CommonOpts& opts,
               const std::optional<std::string>& out_file) {
    opts.finalize();
    const LabelMatrix m = load_label_matrix_file(input);
    const PointCloud pc = cloud_from_matrix(m, opts.cfg);
    emit(out_file, write_point_cloud_csv(pc));
    return 0;
}

int cmd_barcode(const std::string& input, CommonOpts& opts,
                const std::optional<std::string>& out_file,
                const std::optional<std::string>& dump_complex) {
    opts.finalize();
    const PointCloud pc = read_point_cloud_csv(read_file(input));
    const auto tri = delaunay_triangulate(pc);
    const FilteredComplex fc = alpha_filtration(pc, tri);
    if (dump_complex) write_file(*dump_complex, write_complex_dump(fc));
    emit(out_file, write_barcode_csv(compute_persistence(fc)));
    return 0;
}

int cmd_entropy(const std::vector<std::string>& inputs, CommonOpts& opts,
                const std::string& group, const std::optional<std::string>& out_dir,
                bool dump_barcodes) {
    opts.finalize();
    std::vector<fs::path> paths(inputs.begin(), inputs.end());
    std::optional<fs::path> out;
    if (out_dir) out = fs::path(*out_dir);
    const EntropyBatch batch = run_entropy(paths, opts.cfg, group, out, dump_barcodes);
    if (!out) std::cout << write_entropy_csv(batch);
    for (const FileFailure& f : batch.failures)
        std::cerr << "error: " << f.path << ": " << f.message << "\n";
    return batch.failures.empty() ? 0 : 1;
}

int cmd_compare(const std::string& input, CommonOpts& opts,
                const std::optional<std::string>& out_dir) {
    opts.finalize();
    const std::vector<SampleRow> rows = read_sample_rows(read_file(input));
    const CompareResult result = run_compare(rows, opts.cfg);
    const std::string stats = write_stats_json(result);
    if (out_dir) {
        fs::create_directories(*out_dir);
        write_file(fs::path(*out_dir) / "stats.json", stats);
        write_file(fs::path(*out_dir) / "scatter.csv", write_scatter_csv(rows));
        write_file(fs::path(*out_dir) / "boxstats.csv", write_boxstats_csv(rows));
    } else {
        std::cout << stats;
    }
    return 0;
}

int cmd_synth(const std::string& kind, std::size_t points, double sigma, CommonOpts& opts,
              const std::optional<std::string>& out_file) {
    opts.finalize();
    const SynthKind k = kind == "uniform" ? SynthKind::uniform : SynthKind::hexjitter;
    const PointCloud pc = synth_point_cloud(k, points, sigma, opts.cfg.seed);
    emit(out_file, write_point_cloud_csv(pc));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistent entropy of cellular tessellations"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::optional<std::string> out_path;
    std::string group;
    bool dump_barcodes = false;
    std::optional<std::string> dump_complex;
    std::vector<std::string> inputs;
    std::string single_input;
    std::string synth_kind = "uniform";
    std::size_t synth_points = 400;
    double synth_sigma = 0.0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--cells", opts.cfg.n_cells, "cells selected per label matrix");
        sub->add_option("--log-base", opts.cfg.log_base, "entropy log base");
        sub->add_option("--infinite", opts.infinite, "infinite-bar policy")
            ->check(CLI::IsMember({"drop", "cap"}));
        sub->add_option("--adjust", opts.adjust, "p-value adjustment")
            ->check(CLI::IsMember({"none", "bonferroni", "holm", "bh"}));
        sub->add_option("--alpha", opts.cfg.alpha_threshold, "significance threshold");
        sub->add_option("--seed", opts.cfg.seed, "random seed");
    };

    CLI::App* ingest = app.add_subcommand("ingest", "label matrix -> centroid point cloud CSV");
    ingest->add_option("input", single_input, "label matrix (PGM or CSV)")->required();
    ingest->add_option("--start-row", opts.start_row, "spiral start row (default rows/2)");
    ingest->add_option("--start-col", opts.start_col, "spiral start column (default cols/2)");
    ingest->add_option("--out", out_path, "output file (default stdout)");
    add_common(ingest);

    CLI::App* barcode = app.add_subcommand("barcode", "point cloud CSV -> barcode CSV");
    barcode->add_option("input", single_input, "point cloud CSV")->required();
    barcode->add_option("--out", out_path, "output file (default stdout)");
    barcode->add_option("--dump-complex", dump_complex, "also dump the filtered complex");
    add_common(barcode);

    CLI::App* entropy = app.add_subcommand("entropy", "batch inputs -> entropy summary CSV");
    entropy->add_option("inputs", inputs, "label matrices or point clouds")->required();
    entropy->add_option("--group", group, "group label for all inputs");
    entropy->add_option("--out", out_path, "output directory");
    entropy->add_flag("--dump-barcodes", dump_barcodes, "dump per-input barcodes");
    add_common(entropy);

    CLI::App* compare = app.add_subcommand("compare", "summary CSV -> stats JSON + plot data");
    compare->add_option("input", single_input, "summary CSV with a group column")->required();
    compare->add_option("--out", out_path, "output directory (default: JSON to stdout)");
    add_common(compare);

    CLI::App* synth = app.add_subcommand("synth", "generate a synthetic point cloud CSV");
    synth->add_option("--kind", synth_kind, "generator")
        ->check(CLI::IsMember({"uniform", "hexjitter"}));
    synth->add_option("--points", synth_points, "number of points");
    synth->add_option("--sigma", synth_sigma, "jitter std dev in lattice spacings");
    synth->add_option("--out", out_path, "output file (default stdout)");
    add_common(synth);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(ingest)) return cmd_ingest(single_input, opts, out_path);
        if (app.got_subcommand(barcode))
            return cmd_barcode(single_input, opts, out_path, dump_complex);
        if (app.got_subcommand(entropy))
            return cmd_entropy(inputs, opts, group, out_path, dump_barcodes);
        if (app.got_subcommand(compare)) return cmd_compare(single_input, opts, out_path);
        if (app.got_subcommand(synth))
            return cmd_synth(synth_kind, synth_points, synth_sigma, opts, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
