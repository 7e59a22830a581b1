#include "pentropy/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pentropy/persistence.hpp"

namespace pentropy {

namespace {

std::string fmt_g(double v) {
    char buf[40];
    const int len = std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf, len);
}

enum class InputType { pgm, label_csv, cloud_csv };

InputType sniff_input(std::string_view content) {
    if (content.size() >= 3 && content[0] == 'P' && (content[1] == '2' || content[1] == '5') &&
        std::isspace(static_cast<unsigned char>(content[2])))
        return InputType::pgm;
    std::size_t eol = content.find('\n');
    std::string_view first = content.substr(0, eol == std::string_view::npos ? content.size() : eol);
    if (!first.empty() && first.back() == '\r') first.remove_suffix(1);
    if (first == "x,y") return InputType::cloud_csv;
    return InputType::label_csv;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t c = line.find(sep, pos);
        if (c == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, c - pos));
        pos = c + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

void PipelineConfig::validate() const {
    if (n_cells < 3) throw std::invalid_argument("config: cells must be >= 3");
    if (!(log_base > 1.0)) throw std::invalid_argument("config: log base must be > 1");
    if (!(alpha_threshold > 0.0 && alpha_threshold < 1.0))
        throw std::invalid_argument("config: alpha threshold must be in (0,1)");
}

EntropySummary entropy_of_cloud(const PointCloud& pc, const PipelineConfig& cfg,
                                Barcode* barcode_out) {
    const std::vector<Simplex> tri = delaunay_triangulate(pc);
    const FilteredComplex fc = alpha_filtration(pc, tri);
    Barcode bc = compute_persistence(fc);
    EntropySummary s = summarize_entropy(bc, cfg.infinite_policy, cfg.log_base);
    if (barcode_out) *barcode_out = std::move(bc);
    return s;
}

PointCloud cloud_from_matrix(const LabelMatrix& m, const PipelineConfig& cfg) {
    const CellSet cells = spiral_select(m, cfg.n_cells, cfg.spiral_start);
    return compute_centroids(m, cells);
}

EntropyBatch run_entropy(std::span<const std::filesystem::path> inputs,
                         const PipelineConfig& cfg, const std::string& group,
                         const std::optional<std::filesystem::path>& out_dir,
                         bool dump_barcodes) {
    cfg.validate();
    EntropyBatch batch;
    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        if (dump_barcodes) std::filesystem::create_directories(*out_dir / "barcodes");
    }
    for (const auto& path : inputs) {
        try {
            const std::string content = read_file(path);
            PointCloud cloud;
            switch (sniff_input(content)) {
                case InputType::pgm:
                    cloud = cloud_from_matrix(load_label_matrix(content, MatrixFormat::pgm16), cfg);
                    break;
                case InputType::label_csv:
                    cloud = cloud_from_matrix(load_label_matrix(content, MatrixFormat::csv), cfg);
                    break;
                case InputType::cloud_csv:
                    cloud = read_point_cloud_csv(content);
                    break;
            }
            Barcode bc;
            EntropyRow row;
            row.image = path.stem().string();
            row.group = group;
            row.n_cells = cloud.size();
            row.summary = entropy_of_cloud(cloud, cfg, dump_barcodes ? &bc : nullptr);
            if (dump_barcodes && out_dir)
                write_file(*out_dir / "barcodes" / (row.image + ".barcode.csv"),
                           write_barcode_csv(bc));
            batch.rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            batch.failures.push_back({path.string(), e.what()});
        }
    }
    if (out_dir) {
        write_file(*out_dir / "entropy.csv", write_entropy_csv(batch));
        write_file(*out_dir / "entropy.json", write_entropy_json(batch, cfg));
    }
    return batch;
}

std::string write_entropy_csv(const EntropyBatch& batch) {
    std::string out = "image,group,n_cells,pe0,pe1,pe_all\n";
    for (const EntropyRow& r : batch.rows) {
        out += r.image + ',' + r.group + ',' + std::to_string(r.n_cells) + ',' +
               fmt_g(r.summary.pe0) + ',' + fmt_g(r.summary.pe1) + ',' + fmt_g(r.summary.pe_all) +
               '\n';
    }
    return out;
}

std::string write_entropy_json(const EntropyBatch& batch, const PipelineConfig& cfg) {
    nlohmann::json j;
    j["policy"] = {{"infinite", cfg.infinite_policy == InfinitePolicy::drop ? "drop" : "cap"},
                   {"log_base", cfg.log_base},
                   {"cells", cfg.n_cells}};
    j["rows"] = nlohmann::json::array();
    for (const EntropyRow& r : batch.rows) {
        j["rows"].push_back({{"image", r.image},
                             {"group", r.group},
                             {"n_cells", r.n_cells},
                             {"pe0", r.summary.pe0},
                             {"pe1", r.summary.pe1},
                             {"pe_all", r.summary.pe_all},
                             {"n0", r.summary.n0},
                             {"n1", r.summary.n1},
                             {"L0", r.summary.L0},
                             {"L1", r.summary.L1},
                             {"L_all", r.summary.L_all}});
    }
    j["failures"] = nlohmann::json::array();
    for (const FileFailure& f : batch.failures)
        j["failures"].push_back({{"path", f.path}, {"message", f.message}});
    return j.dump(2) + "\n";
}

std::vector<SampleRow> read_sample_rows(std::string_view text) {
    std::vector<SampleRow> rows;
    std::size_t pos = 0, line_no = 0;
    int col_group = -1, col_pe0 = -1, col_pe1 = -1, col_pe_all = -1;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::size_t end = (eol == std::string_view::npos) ? text.size() : eol;
        std::string_view line = trim(text.substr(pos, end - pos));
        ++line_no;
        if (!line.empty()) {
            const auto fields = split(line, ',');
            if (col_group < 0) {
                for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
                    const std::string_view h = trim(fields[i]);
                    if (h == "group") col_group = i;
                    else if (h == "pe0") col_pe0 = i;
                    else if (h == "pe1") col_pe1 = i;
                    else if (h == "pe_all") col_pe_all = i;
                }
                if (col_group < 0 || col_pe0 < 0 || col_pe1 < 0 || col_pe_all < 0)
                    throw std::runtime_error(
                        "summary csv: header must name group, pe0, pe1 and pe_all columns");
            } else {
                const int needed = std::max({col_group, col_pe0, col_pe1, col_pe_all});
                if (static_cast<int>(fields.size()) <= needed)
                    throw std::runtime_error("summary csv: too few fields on line " +
                                             std::to_string(line_no));
                auto num = [&](int col) {
                    const std::string_view f = trim(fields[col]);
                    double v = 0.0;
                    auto [p, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
                    if (ec != std::errc() || p != f.data() + f.size())
                        throw std::runtime_error("summary csv: bad number on line " +
                                                 std::to_string(line_no));
                    return v;
                };
                rows.push_back(SampleRow{std::string(trim(fields[col_group])), num(col_pe0),
                                         num(col_pe1), num(col_pe_all)});
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    if (col_group < 0) throw std::runtime_error("summary csv: empty file");
    return rows;
}

namespace {

GroupSample to_group_sample(const std::vector<SampleRow>& rows, int variable) {
    GroupSample g;
    for (const SampleRow& r : rows) {
        auto it = std::find_if(g.groups.begin(), g.groups.end(),
                               [&](const auto& grp) { return grp.name == r.group; });
        if (it == g.groups.end()) {
            g.groups.push_back({r.group, {}});
            it = std::prev(g.groups.end());
        }
        const double v = variable == 0 ? r.pe0 : (variable == 1 ? r.pe1 : r.pe_all);
        it->values.push_back(v);
    }
    return g;
}

}  // namespace

CompareResult run_compare(const std::vector<SampleRow>& rows, const PipelineConfig& cfg) {
    cfg.validate();
    CompareResult out;
    out.adjustment = cfg.adjustment;
    out.alpha_threshold = cfg.alpha_threshold;
    for (int v = 0; v < 3; ++v) {
        const GroupSample g = to_group_sample(rows, v);
        if (g.groups.size() < 2)
            throw std::runtime_error("compare: need at least 2 groups, got " +
                                     std::to_string(g.groups.size()));
        out.kruskal[v] = kruskal_wallis(g);
        out.dunn[v] = dunn_test(g, cfg.adjustment);
    }
    return out;
}

std::string write_stats_json(const CompareResult& r) {
    nlohmann::json j;
    for (int v = 0; v < 3; ++v) {
        const char* name = kVariableNames[v];
        j["kruskal_wallis"][name] = {{"H", r.kruskal[v].statistic},
                                     {"df", r.kruskal[v].df},
                                     {"p", r.kruskal[v].p_value}};
        j["dunn"][name] = nlohmann::json::array();
        for (const PairwiseResult& pw : r.dunn[v].pairwise) {
            j["dunn"][name].push_back({{"pair", pw.group_a + " vs " + pw.group_b},
                                       {"z", pw.z},
                                       {"p_raw", pw.p_raw},
                                       {"p_adjusted", pw.p_adjusted}});
        }
    }
    j["adjustment"] = adjustment_name(r.adjustment);
    j["alpha"] = r.alpha_threshold;
    return j.dump(2) + "\n";
}

std::string write_scatter_csv(const std::vector<SampleRow>& rows) {
    std::string out = "group,pe0,pe1,pe_all\n";
    for (const SampleRow& r : rows)
        out += r.group + ',' + fmt_g(r.pe0) + ',' + fmt_g(r.pe1) + ',' + fmt_g(r.pe_all) + '\n';
    return out;
}

namespace {

double quantile(const std::vector<double>& sorted, double q) {
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

std::string write_boxstats_csv(const std::vector<SampleRow>& rows) {
    std::string out = "group,variable,min,q1,median,q3,max\n";
    std::vector<std::string> group_order;
    for (const SampleRow& r : rows)
        if (std::find(group_order.begin(), group_order.end(), r.group) == group_order.end())
            group_order.push_back(r.group);
    for (const std::string& g : group_order) {
        for (int v = 0; v < 3; ++v) {
            std::vector<double> vals;
            for (const SampleRow& r : rows)
                if (r.group == g)
                    vals.push_back(v == 0 ? r.pe0 : (v == 1 ? r.pe1 : r.pe_all));
            std::sort(vals.begin(), vals.end());
            out += g + ',' + kVariableNames[v] + ',' + fmt_g(vals.front()) + ',' +
                   fmt_g(quantile(vals, 0.25)) + ',' + fmt_g(quantile(vals, 0.5)) + ',' +
                   fmt_g(quantile(vals, 0.75)) + ',' + fmt_g(vals.back()) + '\n';
        }
    }
    return out;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace pentropy
