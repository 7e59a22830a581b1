#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pentropy/entropy.hpp"
#include "pentropy/ingest.hpp"
#include "pentropy/stats.hpp"
#include "pentropy/synth.hpp"

namespace pentropy {

struct PipelineConfig {
    std::size_t n_cells = 400;
    double log_base = 2.0;
    InfinitePolicy infinite_policy = InfinitePolicy::drop;
    Adjustment adjustment = Adjustment::bh;  // calibrated default, see README
    double alpha_threshold = 0.005;
    std::uint64_t seed = 0;
    std::optional<GridPos> spiral_start;

    void validate() const;  // n_cells >= 3, log_base > 1, threshold in (0,1)
};

/// Full single-cloud pipeline: Delaunay -> alpha filtration -> persistence ->
/// entropy summary. Optionally hands back the barcode.
EntropySummary entropy_of_cloud(const PointCloud& pc, const PipelineConfig& cfg,
                                Barcode* barcode_out = nullptr);

/// Label-matrix front end: spiral-select cfg.n_cells cells, take centroids.
PointCloud cloud_from_matrix(const LabelMatrix& m, const PipelineConfig& cfg);

struct EntropyRow {
    std::string image;
    std::string group;
    std::size_t n_cells = 0;
    EntropySummary summary;
};

struct FileFailure {
    std::string path;
    std::string message;
};

struct EntropyBatch {
    std::vector<EntropyRow> rows;  // successes, in input order
    std::vector<FileFailure> failures;
};

/// Batch entropy over label-matrix or point-cloud files (format sniffed per
/// file). Failures are collected per file; the batch continues. When out_dir
/// is set, writes entropy.csv and entropy.json there, plus per-input
/// "<stem>.barcode.csv" files under out_dir/barcodes when dump_barcodes.
EntropyBatch run_entropy(std::span<const std::filesystem::path> inputs,
                         const PipelineConfig& cfg, const std::string& group = "",
                         const std::optional<std::filesystem::path>& out_dir = std::nullopt,
                         bool dump_barcodes = false);

std::string write_entropy_csv(const EntropyBatch& batch);
std::string write_entropy_json(const EntropyBatch& batch, const PipelineConfig& cfg);

/// One observation row of a grouped summary table.
struct SampleRow {
    std::string group;
    double pe0 = 0.0;
    double pe1 = 0.0;
    double pe_all = 0.0;
};

/// Reads a CSV whose header names at least group,pe0,pe1,pe_all (extra
/// columns, e.g. image and n_cells from write_entropy_csv, are ignored).
std::vector<SampleRow> read_sample_rows(std::string_view text);

inline constexpr std::array<const char*, 3> kVariableNames{"pe0", "pe1", "pe_all"};

struct CompareResult {
    std::array<TestResult, 3> kruskal;  // per variable: pe0, pe1, pe_all
    std::array<TestResult, 3> dunn;
    Adjustment adjustment = Adjustment::bh;
    double alpha_threshold = 0.005;
};

/// Kruskal-Wallis + Dunn on each of the three entropy variables.
CompareResult run_compare(const std::vector<SampleRow>& rows, const PipelineConfig& cfg);

std::string write_stats_json(const CompareResult& r);
std::string write_scatter_csv(const std::vector<SampleRow>& rows);
/// Per-group five-number summaries (quartiles by linear interpolation).
std::string write_boxstats_csv(const std::vector<SampleRow>& rows);

/// Reads a whole file, throwing with the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace pentropy
