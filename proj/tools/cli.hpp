#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spms::cli {

enum ExitCode : int { ok = 0, degenerate_data = 1, bad_config = 2, io_failure = 3 };

/// Reads one number per line, or column `col` of a comma-separated file
/// (1-based index or header name; empty = whole line). Blank lines and
/// lines starting with '#' are skipped, as is a non-numeric header row when
/// the column is given by index.
/// @throws spms::Error (parse_error) naming the offending line.
[[nodiscard]] std::vector<double> read_values(std::istream& in, const std::string& col = {});

/// Entry point shared by main() and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spms::cli
