#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace confetti {

// Build stamp (version-control describe output, baked at configure time).
const char* build_version();

std::uint64_t fnv1a64(std::string_view s);

// Shortest decimal text that parses back to exactly the same double;
// locale-independent, so emitted files are byte-stable.
std::string format_double(double v);
std::string format_u64_hex(std::uint64_t v);

// Provenance stamp embedded in every output file.
struct RunManifest {
  std::uint64_t seed = 0;
  std::uint64_t config_hash = 0;  // fnv1a64 of the canonical argument string
  std::string version;
};

RunManifest make_manifest(std::uint64_t seed, std::string_view canonical_config);

// "confetti schema=1 seed=<dec> config=<hex16> version=<describe>"
std::string manifest_line(const RunManifest& m);

void write_text_file(const std::string& path, std::string_view content);
void write_binary_file(const std::string& path, std::string_view content);

// CSV assembled in memory: "# <manifest line>" comment, then the header row,
// then data rows. Cell values are passed pre-formatted (no quoting layer;
// emitters only write numbers and plain tokens).
class CsvBuilder {
 public:
  CsvBuilder(const RunManifest& manifest, const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);
  const std::string& text() const { return text_; }

 private:
  std::string text_;
  std::size_t ncols_;
};

}  // namespace confetti
