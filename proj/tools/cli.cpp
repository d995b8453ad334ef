#include "cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spms/distributions.hpp"
#include "spms/error.hpp"
#include "spms/montecarlo.hpp"
#include "spms/report.hpp"
#include "spms/skewtests.hpp"

namespace spms::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::optional<double> to_double(std::string_view tok) {
    tok = trim(tok);
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
    return v;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    for (;;) {
        const auto c = line.find(',');
        out.push_back(trim(line.substr(0, c)));
        if (c == std::string_view::npos) return out;
        line.remove_prefix(c + 1);
    }
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::vector<double> read_values(std::istream& in, const std::string& col) {
    std::vector<double> values;
    std::optional<std::size_t> index;
    if (!col.empty()) {
        if (auto v = to_double(col); v && *v >= 1 && *v == static_cast<std::size_t>(*v)) {
            index = static_cast<std::size_t>(*v) - 1;
        }
    }
    const bool by_name = !col.empty() && !index;

    std::string raw;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (col.empty()) {
            const auto v = to_double(line);
            if (!v) parse_fail(line_no, "not a number: '" + std::string(line) + "'");
            values.push_back(*v);
            continue;
        }
        const auto fields = split_commas(line);
        if (by_name && !index) {
            for (std::size_t k = 0; k < fields.size(); ++k) {
                if (fields[k] == col) index = k;
            }
            if (!index) parse_fail(line_no, "no column named '" + col + "' in header");
            continue;
        }
        if (*index >= fields.size()) parse_fail(line_no, "missing column " + std::to_string(*index + 1));
        const auto v = to_double(fields[*index]);
        if (!v && first_row && !by_name) {
            first_row = false;
            continue;
        }
        first_row = false;
        if (!v) parse_fail(line_no, "not a number: '" + std::string(fields[*index]) + "'");
        values.push_back(*v);
    }
    if (in.bad()) throw Error(ErrorCode::io_error, "read failure");
    return values;
}

namespace {

struct Common {
    std::string out = "-";
    std::string format = "csv";
    std::string variant{to_string(default_variant)};
    int threads = 0;
    std::uint64_t seed = 1;
};

void add_common(CLI::App* cmd, Common& c, bool monte_carlo) {
    cmd->add_option("--out", c.out, "Output path, '-' for stdout")->capture_default_str();
    cmd->add_option("--format", c.format, "csv or json")->capture_default_str();
    cmd->add_option("--variant", c.variant, "S_U constants: published_tables, full_series, as_printed")
        ->capture_default_str();
    if (monte_carlo) {
        cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
        cmd->add_option("--threads", c.threads, "Worker threads (default: SPMS_THREADS or all cores)");
    }
}

int default_threads() {
    if (const char* env = std::getenv("SPMS_THREADS")) {
        if (auto v = to_double(env); v && *v >= 1) return static_cast<int>(*v);
    }
    return 0;
}

RunOptions run_options(const Common& c) {
    return {c.threads > 0 ? c.threads : default_threads(), parse_variant(c.variant)};
}

// Writes through `emit` to stdout or a file.
template <class Emit>
void with_output(const std::string& path, std::ostream& out, Emit&& emit) {
    if (path == "-") {
        emit(out);
        out.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::io_error, "cannot open '" + path + "' for writing");
    emit(f);
    f.close();
    if (!f) throw Error(ErrorCode::io_error, "write to '" + path + "' failed");
}

std::string seed_comment(std::string_view command, const Common& c) {
    return "spms " + std::string(command) + " seed=" + std::to_string(c.seed) + " variant=" + c.variant;
}

std::string where(const std::string& path) { return path == "-" ? "stdout" : path; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Skewness tests for normality based on the sample Pearson measure of skewness"};
    app.require_subcommand(1);

    Common test_c, cal_c, pow_c, hist_c, mom_c;

    auto* test = app.add_subcommand("test", "Apply all four tests to a data file");
    std::string input, col;
    test->add_option("input", input, "Data file ('-' for stdin)")->required();
    test->add_option("--col", col, "CSV column (1-based index or header name)");
    add_common(test, test_c, false);

    auto* cal = app.add_subcommand("calibrate", "Null rejection rates of the spms test");
    std::vector<std::size_t> cal_n{100, 150, 200, 300, 500, 1000};
    std::size_t cal_reps = 100000;
    std::vector<double> cal_levels{0.01, 0.05, 0.10, 0.20};
    cal->add_option("--n", cal_n, "Sample sizes")->delimiter(',')->capture_default_str();
    cal->add_option("--reps", cal_reps, "Replications per n")->capture_default_str();
    cal->add_option("--levels", cal_levels, "Two-sided levels")->delimiter(',')->capture_default_str();
    add_common(cal, cal_c, true);

    auto* pow = app.add_subcommand("power", "Monte Carlo power of the tests");
    std::vector<std::string> alts;
    std::vector<std::size_t> pow_n{40, 50, 60, 80, 100};
    std::size_t pow_reps = 10000, null_reps = 100000;
    double level = 0.05;
    std::vector<std::string> test_names{"spms", "sqrt_b1", "sw", "lm"};
    std::string critical = "empirical";
    pow->add_option("--alt", alts, "Alternative, e.g. beta:2,1 (repeatable; default: the six table alternatives)");
    pow->add_option("--n", pow_n, "Sample sizes")->delimiter(',')->capture_default_str();
    pow->add_option("--reps", pow_reps, "Replications per cell")->capture_default_str();
    pow->add_option("--level", level, "Significance level")->capture_default_str();
    pow->add_option("--tests", test_names, "Tests: spms, sqrt_b1, sw, lm")->delimiter(',')->capture_default_str();
    pow->add_option("--critical", critical, "empirical (simulated null) or asymptotic")->capture_default_str();
    pow->add_option("--null-reps", null_reps, "Null replications for empirical thresholds")->capture_default_str();
    add_common(pow, pow_c, true);

    auto* hist = app.add_subcommand("hist", "Null histogram of spms or its Z transform");
    std::string stat = "z";
    std::size_t hist_n = 200, hist_reps = 100000, bins = 60;
    std::vector<double> range;
    hist->add_option("--stat", stat, "raw or z")->capture_default_str();
    hist->add_option("--n", hist_n, "Sample size")->capture_default_str();
    hist->add_option("--reps", hist_reps, "Replications")->capture_default_str();
    hist->add_option("--bins", bins, "Number of bins")->capture_default_str();
    hist->add_option("--range", range, "lo,hi (default: mean +/- 5 sd)")->delimiter(',')->expected(2);
    add_common(hist, hist_c, true);

    auto* mom = app.add_subcommand("moments", "Empirical null moments of spms against the series");
    std::vector<std::size_t> mom_n{500, 1000};
    std::size_t mom_reps = 100000;
    mom->add_option("--n", mom_n, "Sample sizes")->delimiter(',')->capture_default_str();
    mom->add_option("--reps", mom_reps, "Replications")->capture_default_str();
    add_common(mom, mom_c, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return bad_config;
    }

    try {
        if (*test) {
            const auto fmt = report::parse_format(test_c.format);
            const auto variant = parse_variant(test_c.variant);
            std::vector<double> values;
            if (input == "-") {
                values = read_values(std::cin, col);
            } else {
                std::ifstream f(input);
                if (!f) throw Error(ErrorCode::io_error, "cannot open '" + input + "'");
                values = read_values(f, col);
            }
            if (values.size() < min_test_n) {
                throw Error(ErrorCode::sample_too_small,
                            "all tests need n >= 8, got " + std::to_string(values.size()));
            }
            const Sample sample(std::move(values));
            std::vector<TestResult> results;
            bool degenerate = false;
            for (TestName t : all_tests) {
                if (t == TestName::shapiro_wilk && sample.size() > max_shapiro_wilk_n) continue;
                results.push_back(run_test(t, sample, variant));
                degenerate = degenerate || !results.back().defined;
            }
            with_output(test_c.out, out, [&](std::ostream& os) {
                report::write_test_results(os, fmt, "spms test input=" + input + " variant=" + test_c.variant,
                                           sample.size(), results);
            });
            return degenerate ? degenerate_data : ok;
        }

        if (*cal) {
            const auto fmt = report::parse_format(cal_c.format);
            const RunOptions opts = run_options(cal_c);
            std::vector<CalibrationRow> rows;
            for (std::size_t n : cal_n) rows.push_back(calibrate(n, cal_reps, cal_levels, cal_c.seed, opts));
            with_output(cal_c.out, out, [&](std::ostream& os) {
                report::write_calibration(os, fmt, seed_comment("calibrate", cal_c), rows);
            });
            err << "calibrate: " << rows.size() << " sample sizes x " << cal_levels.size() << " levels -> "
                << where(cal_c.out) << " (seed=" << cal_c.seed << ")\n";
            return ok;
        }

        if (*pow) {
            const auto fmt = report::parse_format(pow_c.format);
            PowerOptions opts;
            opts.run = run_options(pow_c);
            opts.null_reps = null_reps;
            if (critical == "empirical") {
                opts.mode = CriticalMode::empirical;
            } else if (critical == "asymptotic") {
                opts.mode = CriticalMode::asymptotic;
            } else {
                throw Error(ErrorCode::invalid_config, "unknown --critical '" + critical + "'");
            }
            std::vector<TestName> tests;
            for (const auto& t : test_names) tests.push_back(parse_test_name(t));
            std::vector<AlternativeSpec> specs;
            for (const auto& a : alts) specs.push_back(parse_alternative(a));
            if (specs.empty()) specs = table_alternatives();

            std::vector<PowerCell> cells;
            for (std::size_t n : pow_n) {
                // One null simulation per n, shared by every alternative.
                std::optional<CriticalValues> cv;
                if (opts.mode == CriticalMode::empirical) {
                    cv = null_critical_values(n, level, tests, null_reps, pow_c.seed, opts.run);
                }
                PowerOptions cell_opts = opts;
                cell_opts.critical = cv ? &*cv : nullptr;
                for (const auto& spec : specs) {
                    cells.push_back(power_study(spec, n, pow_reps, level, tests, pow_c.seed, cell_opts));
                }
            }
            // Alternative-major order.
            std::stable_sort(cells.begin(), cells.end(), [&](const PowerCell& a, const PowerCell& b) {
                auto pos = [&](const AlternativeSpec& s) {
                    return std::find(specs.begin(), specs.end(), s) - specs.begin();
                };
                return pos(a.alternative) < pos(b.alternative);
            });
            with_output(pow_c.out, out, [&](std::ostream& os) {
                report::write_power(os, fmt,
                                    seed_comment("power", pow_c) + " critical=" + critical +
                                        (opts.mode == CriticalMode::empirical
                                             ? " null_reps=" + std::to_string(null_reps)
                                             : std::string{}),
                                    cells);
            });
            err << "power: " << cells.size() << " cells -> " << where(pow_c.out) << " (seed=" << pow_c.seed << ")\n";
            return ok;
        }

        if (*hist) {
            const auto fmt = report::parse_format(hist_c.format);
            HistStatistic which;
            if (stat == "raw") {
                which = HistStatistic::spms_raw;
            } else if (stat == "z") {
                which = HistStatistic::spms_z;
            } else {
                throw Error(ErrorCode::invalid_config, "unknown --stat '" + stat + "'");
            }
            std::optional<std::pair<double, double>> r;
            if (range.size() == 2) r = std::pair{range[0], range[1]};
            const auto h = null_histogram(which, hist_n, hist_reps, bins, hist_c.seed, run_options(hist_c), r);
            with_output(hist_c.out, out, [&](std::ostream& os) {
                report::write_histogram(os, fmt, seed_comment("hist", hist_c) + " stat=" + stat, h);
            });
            err << "hist: " << bins << " bins, " << h.out_of_range << " out of range -> " << where(hist_c.out)
                << " (seed=" << hist_c.seed << ")\n";
            return ok;
        }

        if (*mom) {
            const auto fmt = report::parse_format(mom_c.format);
            std::vector<MomentReport> rows;
            for (std::size_t n : mom_n) rows.push_back(moment_validation(n, mom_reps, mom_c.seed, run_options(mom_c)));
            with_output(mom_c.out, out, [&](std::ostream& os) {
                report::write_moments(os, fmt, seed_comment("moments", mom_c), rows);
            });
            err << "moments: " << rows.size() << " sample sizes -> " << where(mom_c.out) << " (seed=" << mom_c.seed
                << ")\n";
            return ok;
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        switch (e.code()) {
            case ErrorCode::io_error: return io_failure;
            case ErrorCode::zero_variance:
            case ErrorCode::non_finite:
            case ErrorCode::sample_too_small:
            case ErrorCode::sample_too_large:
            case ErrorCode::degenerate_denominator:
            case ErrorCode::degenerate_correlation: return degenerate_data;
            default: return bad_config;
        }
    }
    return bad_config;
}

}  // namespace spms::cli
