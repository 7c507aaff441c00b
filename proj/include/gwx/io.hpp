#pragma once

#include "gwx/types.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>
#include <string>

namespace gwx {

// Write-temp-then-rename; the target never exists half-written.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

// SHA-256 hex digests (OpenSSL EVP).
std::string sha256_hex(std::span<const uint8_t> bytes);
std::string sha256_hex(const std::string& s);
std::string sha256_file(const std::filesystem::path& path);

// Shortest round-trip decimal form; canonical number formatting for all
// machine-readable outputs.
std::string fmt_double(double v);

// Minimal CSV reader for the project's own outputs (no quoting/escapes).
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

// Column-aligned text rendering of a row table.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

// Little-endian scalar encoding, independent of host byte order.
void append_f64_le(std::string& out, double v);
void append_i32_le(std::string& out, int32_t v);
double read_f64_le(const char* p);
int32_t read_i32_le(const char* p);

void append_mat_le(std::string& out, const Mat& m);
Mat read_mat_le(const std::string& buf, size_t& offset, Index rows, Index cols);

}  // namespace gwx
