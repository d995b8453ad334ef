#include "spms/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "spms/error.hpp"

namespace spms::report {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw Error(ErrorCode::invalid_config, "unknown output format '" + std::string(name) + "'");
}

std::string number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace {

// JSON values are the printed decimal strings re-read, so CSV and JSON agree digit for digit.
ordered_json jnum(double v) {
    if (!std::isfinite(v)) return number(v);
    return std::stod(number(v));
}

void comment_line(std::ostream& os, const std::string& comment) {
    if (!comment.empty()) os << "# " << comment << '\n';
}

void dump(std::ostream& os, const ordered_json& j) { os << j.dump(2) << '\n'; }

}  // namespace

void write_test_results(std::ostream& os, Format f, const std::string& comment, std::size_t n,
                        const std::vector<TestResult>& results) {
    if (f == Format::json) {
        ordered_json j;
        j["comment"] = comment;
        j["n"] = n;
        for (const auto& r : results) {
            ordered_json row;
            row["test"] = to_string(r.test);
            row["defined"] = r.defined;
            row["statistic"] = jnum(r.raw_statistic);
            row["z"] = jnum(r.z_value);
            row["p"] = jnum(r.p_value);
            for (double l : test_levels) row["reject_" + number(l)] = r.rejects(l);
            j["results"].push_back(row);
        }
        dump(os, j);
        return;
    }
    comment_line(os, comment);
    os << "test,n,defined,statistic,z,p";
    for (double l : test_levels) os << ",reject_" << number(l);
    os << '\n';
    for (const auto& r : results) {
        os << to_string(r.test) << ',' << n << ',' << (r.defined ? 1 : 0) << ',' << number(r.raw_statistic) << ','
           << number(r.z_value) << ',' << number(r.p_value);
        for (double l : test_levels) os << ',' << (r.rejects(l) ? 1 : 0);
        os << '\n';
    }
}

void write_calibration(std::ostream& os, Format f, const std::string& comment,
                       const std::vector<CalibrationRow>& rows) {
    if (f == Format::json) {
        ordered_json j;
        j["comment"] = comment;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < r.levels.size(); ++k) {
                j["rows"].push_back({{"n", r.n},
                                     {"reps", r.reps},
                                     {"level", jnum(r.levels[k])},
                                     {"rejection_rate", jnum(r.rejection_rates[k])},
                                     {"undefined", r.undefined_count}});
            }
        }
        dump(os, j);
        return;
    }
    comment_line(os, comment);
    os << "n,reps,level,rejection_rate,undefined\n";
    for (const auto& r : rows) {
        for (std::size_t k = 0; k < r.levels.size(); ++k) {
            os << r.n << ',' << r.reps << ',' << number(r.levels[k]) << ',' << number(r.rejection_rates[k]) << ','
               << r.undefined_count << '\n';
        }
    }
}

void write_power(std::ostream& os, Format f, const std::string& comment, const std::vector<PowerCell>& cells) {
    if (f == Format::json) {
        ordered_json j;
        j["comment"] = comment;
        j["rows"] = ordered_json::array();
        for (const auto& c : cells) {
            for (TestName t : c.tests) {
                j["rows"].push_back({{"alt", c.alternative.label()},
                                     {"n", c.n},
                                     {"reps", c.reps},
                                     {"level", jnum(c.level)},
                                     {"test", to_string(t)},
                                     {"power", jnum(c.powers.at(t))},
                                     {"undefined", c.undefined_counts.at(t)}});
            }
        }
        dump(os, j);
        return;
    }
    comment_line(os, comment);
    os << "alt,n,reps,level,test,power,undefined\n";
    for (const auto& c : cells) {
        // Labels contain commas (beta:2,1), so they are quoted.
        for (TestName t : c.tests) {
            os << '"' << c.alternative.label() << "\"," << c.n << ',' << c.reps << ',' << number(c.level) << ','
               << to_string(t) << ',' << number(c.powers.at(t)) << ',' << c.undefined_counts.at(t) << '\n';
        }
    }
}

void write_histogram(std::ostream& os, Format f, const std::string& comment, const HistogramData& h) {
    if (f == Format::json) {
        ordered_json j;
        j["comment"] = comment;
        j["n"] = h.n;
        j["reps"] = h.reps;
        j["out_of_range"] = h.out_of_range;
        j["undefined"] = h.undefined;
        j["bins"] = ordered_json::array();
        for (std::size_t b = 0; b < h.counts.size(); ++b) {
            j["bins"].push_back(
                {{"bin_left", jnum(h.bin_edges[b])}, {"bin_right", jnum(h.bin_edges[b + 1])}, {"count", h.counts[b]}});
        }
        dump(os, j);
        return;
    }
    comment_line(os, comment);
    os << "# out_of_range=" << h.out_of_range << " undefined=" << h.undefined << '\n';
    os << "bin_left,bin_right,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        os << number(h.bin_edges[b]) << ',' << number(h.bin_edges[b + 1]) << ',' << h.counts[b] << '\n';
    }
}

void write_moments(std::ostream& os, Format f, const std::string& comment, const std::vector<MomentReport>& rows) {
    auto each = [](const MomentReport& r, auto&& emit) {
        emit("mean", r.mean);
        emit("variance", r.variance);
        emit("third_moment", r.third);
        emit("kurtosis", r.kurtosis);
    };
    if (f == Format::json) {
        ordered_json j;
        j["comment"] = comment;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            each(r, [&](const char* q, const MomentEstimate& e) {
                j["rows"].push_back({{"n", r.n},
                                     {"reps", r.reps},
                                     {"quantity", q},
                                     {"empirical", jnum(e.empirical)},
                                     {"series", jnum(e.series)},
                                     {"se", jnum(e.se)}});
            });
        }
        dump(os, j);
        return;
    }
    comment_line(os, comment);
    os << "n,reps,quantity,empirical,series,se\n";
    for (const auto& r : rows) {
        each(r, [&](const char* q, const MomentEstimate& e) {
            os << r.n << ',' << r.reps << ',' << q << ',' << number(e.empirical) << ',' << number(e.series) << ','
               << number(e.se) << '\n';
        });
    }
}

}  // namespace spms::report
