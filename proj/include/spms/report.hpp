#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "spms/montecarlo.hpp"
#include "spms/skewtests.hpp"

namespace spms::report {

enum class Format { csv, json };

/// @throws spms::Error (invalid_config)
[[nodiscard]] Format parse_format(std::string_view name);

/// Six significant digits, printf %g style; "nan" / "inf" / "-inf" for non-finite values.
[[nodiscard]] std::string number(double v);

/// Levels used for the reject flags of `spms test`.
inline const std::vector<double> test_levels = {0.01, 0.05, 0.10, 0.20};

// Each writer emits `comment` (without the leading '#') as a first line for
// CSV, or as a "comment" member for JSON.

void write_test_results(std::ostream& os, Format f, const std::string& comment, std::size_t n,
                        const std::vector<TestResult>& results);

/// Schema: n,reps,level,rejection_rate,undefined
void write_calibration(std::ostream& os, Format f, const std::string& comment,
                       const std::vector<CalibrationRow>& rows);

/// Schema: alt,n,reps,level,test,power,undefined
void write_power(std::ostream& os, Format f, const std::string& comment, const std::vector<PowerCell>& cells);

/// Schema: bin_left,bin_right,count. Out-of-range and undefined counts go
/// into a second comment line.
void write_histogram(std::ostream& os, Format f, const std::string& comment, const HistogramData& h);

/// Schema: n,reps,quantity,empirical,series,se
void write_moments(std::ostream& os, Format f, const std::string& comment, const std::vector<MomentReport>& rows);

}  // namespace spms::report
