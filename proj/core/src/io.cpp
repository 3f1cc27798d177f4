#include "confetti/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "confetti/errors.hpp"
#include "confetti/version.hpp"

namespace confetti {

const char* build_version() { return kBuildVersion; }

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  if (res.ec != std::errc{}) throw InvariantError("number formatting failed");
  return std::string(buf, res.ptr);
}

std::string format_u64_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

RunManifest make_manifest(std::uint64_t seed, std::string_view canonical_config) {
  return RunManifest{seed, fnv1a64(canonical_config), kBuildVersion};
}

std::string manifest_line(const RunManifest& m) {
  return "confetti schema=1 seed=" + std::to_string(m.seed) +
         " config=" + format_u64_hex(m.config_hash) + " version=" + m.version;
}

namespace {
void write_file(const std::string& path, std::string_view content,
                std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}
}  // namespace

void write_text_file(const std::string& path, std::string_view content) {
  write_file(path, content, std::ios::out | std::ios::trunc);
}

void write_binary_file(const std::string& path, std::string_view content) {
  write_file(path, content, std::ios::out | std::ios::trunc | std::ios::binary);
}

CsvBuilder::CsvBuilder(const RunManifest& manifest,
                       const std::vector<std::string>& columns)
    : ncols_(columns.size()) {
  if (columns.empty()) throw InvariantError("csv needs at least one column");
  text_ = "# " + manifest_line(manifest) + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) text_ += ',';
    text_ += columns[i];
  }
  text_ += '\n';
}

void CsvBuilder::row(const std::vector<std::string>& cells) {
  if (cells.size() != ncols_)
    throw InvariantError("csv row width does not match the header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
}

}  // namespace confetti
