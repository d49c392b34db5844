#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cirfocus {

namespace fs = std::filesystem;

// Error hierarchy. The C API maps each subtype onto a status code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct IngestError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};
struct StateError : Error {
  using Error::Error;
};

// FNV-1a, 64 bit. Used for content-stable ids and cache checksums.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

std::string read_file(const fs::path& path);
// write-then-rename; readers never observe a partial file
void atomic_write_file(const fs::path& path, std::string_view contents);

std::vector<std::string> split(std::string_view s, char sep);
std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Deterministic double formatting (round-trip precision) for logs and
// line-delimited records; identical runs must produce identical bytes.
std::string fmt_double(double v);
// Fixed two-decimal formatting for human-readable report tables.
std::string fmt_fixed2(double v);

}  // namespace cirfocus
