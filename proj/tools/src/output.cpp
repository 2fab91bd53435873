#include "mcbdqm_cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include "mcbdqm/errors.hpp"

namespace mcbdqm::cli {

std::string format_sci(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9e", value);
  return buf;
}

std::string format_label(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string join_sci(std::span<const double> values) {
  std::string line;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) line += ',';
    line += format_sci(values[i]);
  }
  return line;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

void ensure_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw ArgumentError("cannot use output directory '" + dir.string() + "'" +
                        (ec ? ": " + ec.message() : std::string()));
  }
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace mcbdqm::cli
