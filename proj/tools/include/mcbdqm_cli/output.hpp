#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace mcbdqm::cli {

/// Scientific notation with 10 significant digits ("%.9e").
std::string format_sci(double value);

/// Shortest "%.10g" form, used for time labels in file names.
std::string format_label(double value);

/// Joins the formatted values with commas.
std::string join_sci(std::span<const double> values);

/// Quotes a text field for CSV when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);

/// Creates `dir` (and parents). Throws ArgumentError if that fails or the
/// path exists and is not a directory.
void ensure_directory(const std::filesystem::path& dir);

/// Writes `content` to `path`, replacing it. Throws std::runtime_error.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mcbdqm::cli
