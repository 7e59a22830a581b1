#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

namespace pentropy {

/// Integer-labeled segmentation raster. Label 0 marks boundary pixels,
/// any k > 0 is a cell ID.
struct LabelMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> labels;  // row-major, rows*cols entries

    std::uint32_t at(std::size_t r, std::size_t c) const { return labels[r * cols + c]; }
    std::uint32_t& at(std::size_t r, std::size_t c) { return labels[r * cols + c]; }
    bool in_bounds(long long r, long long c) const {
        return r >= 0 && c >= 0 && r < static_cast<long long>(rows) && c < static_cast<long long>(cols);
    }
};

enum class MatrixFormat { pgm16, csv };

/// Parse a label matrix from raw file content. pgm16 accepts PGM P2 (ASCII)
/// and P5 (binary, big-endian 2-byte samples when maxval > 255), maxval up
/// to 65535. csv accepts comma-separated non-negative integers, one row per
/// line, rectangular. Parse errors report the offending byte offset.
LabelMatrix load_label_matrix(std::string_view bytes, MatrixFormat format);

/// Sniffs the format (PGM magic, else CSV) and loads the file.
LabelMatrix load_label_matrix_file(const std::filesystem::path& path);

}  // namespace pentropy
