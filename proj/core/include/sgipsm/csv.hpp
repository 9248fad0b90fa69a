#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sgipsm {

/// printf("%.17g") formatting, the one numeric format used for every CSV field.
std::string format_g17(double v);

/// Comma-joined row terminated by LF. Fields are written verbatim; callers
/// pass numbers through format_g17 and keep commas out of free text.
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

/// Splits one CSV line on commas (no quoting; the files written here never need it).
std::vector<std::string> split_csv_line(std::string_view line);

/// Replaces characters that would break a CSV field (commas, newlines).
std::string csv_safe(std::string_view text);

}  // namespace sgipsm
