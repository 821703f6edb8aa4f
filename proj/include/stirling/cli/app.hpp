#ifndef STIRLING_CLI_APP_HPP
#define STIRLING_CLI_APP_HPP

// Command-line front end. run() takes the arguments after the program name and
// writes to the given streams, so the whole surface is testable in-process.

#include <stirling/stirling.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace stirling::cli
{

enum exit_code : int { ok = 0, check_failed = 1, exhausted = 2, usage_error = 3, io_failure = 4 };

enum class output_format { text, json, csv };

inline output_format parse_format(const std::string &s)
{
    if (s == "json") {
        return output_format::json;
    }
    if (s == "csv") {
        return output_format::csv;
    }
    return output_format::text;
}

/// RFC 4180 field: quoted when it contains a comma, quote or line break.
inline std::string csv_field(const std::string &s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c;
        if (c == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

inline std::string csv_line(const std::vector<std::string> &fields)
{
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        line += (i == 0 ? "" : ",") + csv_field(fields[i]);
    }
    return line + "\r\n";
}

inline std::string to_cell(outcome o)
{
    switch (o) {
        case outcome::holds:
            return "true";
        case outcome::fails:
            return "false";
        case outcome::undecided:
            break;
    }
    return "undecided";
}

// ---------------------------------------------------------------- theta

inline rational radius_target(int digits)
{
    integer scale = 1;
    for (int i = 0; i < digits + 2; ++i) {
        scale *= 10;
    }
    return make_rational(integer(1), scale);
}

inline std::string render_theta(unsigned long n, int digits, output_format fmt, const precision_policy &policy)
{
    const ball t = theta(n, policy, radius_target(digits));
    const decimal_enclosure e = enclose_decimal(t, digits);
    std::ostringstream os;
    switch (fmt) {
        case output_format::text:
            os << e.midpoint << " ± " << e.radius << '\n';
            break;
        case output_format::json: {
            const json j{{"n", n},
                         {"digits", digits},
                         {"midpoint", e.midpoint},
                         {"radius", e.radius},
                         {"lower", rational_to_json(t.lower())},
                         {"upper", rational_to_json(t.upper())},
                         {"bits", static_cast<long>(t.precision())}};
            os << j.dump(2) << '\n';
            break;
        }
        case output_format::csv:
            os << csv_line({"n", "midpoint", "radius"}) << csv_line({std::to_string(n), e.midpoint, e.radius});
            break;
    }
    return os.str();
}

// ---------------------------------------------------------------- table

struct table_row {
    theta_record record;
    std::string theta_mid;
    std::string theta_rad;
    outcome sandwich = outcome::undecided;
    outcome monotone = outcome::undecided;
};

inline const std::vector<std::string> &table_columns()
{
    static const std::vector<std::string> cols{"n",    "theta_mid",  "theta_rad",  "alpha",
                                               "beta", "weak_lower", "sandwich_ok", "monotone_ok"};
    return cols;
}

inline std::vector<std::string> row_cells(const table_row &r)
{
    return {std::to_string(r.record.n), r.theta_mid,         r.theta_rad,         to_string(r.record.alpha),
            to_string(r.record.beta),   to_string(r.record.weak_lower), to_cell(r.sandwich), to_cell(r.monotone)};
}

inline table_row make_row(unsigned long n, int digits, const precision_policy &policy)
{
    table_row r;
    r.record = make_theta_record(n, policy, radius_target(digits));
    const decimal_enclosure e = enclose_decimal(r.record.theta, digits);
    r.theta_mid = e.midpoint;
    r.theta_rad = e.radius;
    r.sandwich = sandwich_check(n, policy);
    r.monotone = monotone_check(n, policy);
    return r;
}

/// Rows for from..to, computed on worker threads; the result is in n order.
inline std::vector<table_row> compute_table(unsigned long from, unsigned long to, int digits,
                                            const precision_policy &policy)
{
    const std::size_t count = to - from + 1;
    std::vector<table_row> rows(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                rows[i] = make_row(from + i, digits, policy);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min<std::size_t>(count, std::max(1U, std::thread::hardware_concurrency()));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return rows;
}

inline std::string render_table(const std::vector<table_row> &rows, output_format fmt)
{
    const auto &cols = table_columns();
    std::ostringstream os;
    switch (fmt) {
        case output_format::csv:
            os << csv_line(cols);
            for (const auto &r : rows) {
                os << csv_line(row_cells(r));
            }
            break;
        case output_format::json: {
            json arr = json::array();
            for (const auto &r : rows) {
                const auto cells = row_cells(r);
                json obj = json::object();
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    obj[cols[i]] = cells[i];
                }
                arr.push_back(std::move(obj));
            }
            os << json{{"columns", cols}, {"rows", std::move(arr)}}.dump(2) << '\n';
            break;
        }
        case output_format::text: {
            std::vector<std::vector<std::string>> grid{cols};
            for (const auto &r : rows) {
                grid.push_back(row_cells(r));
            }
            std::vector<std::size_t> width(cols.size(), 0);
            for (const auto &line : grid) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    width[i] = std::max(width[i], line[i].size());
                }
            }
            for (const auto &line : grid) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    os << line[i];
                    if (i + 1 < line.size()) {
                        os << std::string(width[i] - line[i].size() + 2, ' ');
                    }
                }
                os << '\n';
            }
            break;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- verify

inline std::string render_summary(const proof_report &r)
{
    std::ostringstream os;
    for (const auto &s : r.steps) {
        os << '[' << to_string(s.status) << "] " << s.id << (s.gating ? "" : " (informational)") << '\n';
    }
    for (const auto &[k, v] : r.derived_constants) {
        os << k << " = " << v.get_str() << '\n';
    }
    os << "overall: " << (r.verified() ? "verified" : "failed") << '\n';
    return os.str();
}

inline int verdict_code(const proof_report &r)
{
    if (r.verified()) {
        return ok;
    }
    for (const auto &s : r.steps) {
        if (s.gating && s.status == step_status::failed) {
            return check_failed;
        }
    }
    return r.any_undecided() ? exhausted : check_failed;
}

inline bool write_file(const std::string &path, const std::string &content)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        return false;
    }
    f << content;
    f.close();
    return static_cast<bool>(f);
}

// ---------------------------------------------------------------- driver

inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Certified enclosures of Ramanujan's theta_n and verification of its monotonicity", "stirling"};
    app.set_version_flag("--version", std::string(STIRLING_VERSION));
    app.require_subcommand(1);

    unsigned long theta_n = 0;
    int digits = 20;
    std::string format = "text";
    auto *theta_cmd = app.add_subcommand("theta", "Enclosure of theta_n");
    theta_cmd->add_option("n", theta_n, "Index n >= 1")->required();
    theta_cmd->add_option("--digits", digits, "Decimal digits after the point (1..1000)")->capture_default_str();
    theta_cmd->add_option("--format", format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    unsigned long from = 1;
    unsigned long to = 10;
    int table_digits = 12;
    std::string table_format = "csv";
    std::string table_out;
    auto *table_cmd = app.add_subcommand("table", "Tabulate theta_n with its rational envelopes");
    table_cmd->add_option("--from", from, "First n (>= 1)")->capture_default_str();
    table_cmd->add_option("--to", to, "Last n (>= from)")->capture_default_str();
    table_cmd->add_option("--digits", table_digits, "Decimal digits of theta_mid (1..1000)")->capture_default_str();
    table_cmd->add_option("--format", table_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    table_cmd->add_option("--out", table_out, "Output file (default: standard output)");

    std::string target;
    std::string report_path;
    unsigned long sandwich_max = proof_options{}.sandwich_max;
    auto *verify_cmd = app.add_subcommand("verify", "Run a verification target");
    std::vector<std::string> names(verify_target_names.begin(), verify_target_names.end());
    verify_cmd->add_option("target", target, "prop2, prop3, corollary3, prop4, prop5, theorem1-first, theorem1-second or all")
        ->required()
        ->check(CLI::IsMember(names));
    verify_cmd->add_option("--report", report_path, "Write the JSON proof report here");
    verify_cmd->add_option("--sandwich-max", sandwich_max, "Last n of the certified envelope range")
        ->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    precision_policy policy;
    try {
        policy = precision_policy::from_environment();
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (*theta_cmd) {
            if (theta_n < 1) {
                err << "error: n must be >= 1\n";
                return usage_error;
            }
            if (digits < 1 || digits > 1000) {
                err << "error: --digits must be in 1..1000\n";
                return usage_error;
            }
            out << render_theta(theta_n, digits, parse_format(format), policy);
            return ok;
        }
        if (*table_cmd) {
            if (from < 1 || to < from) {
                err << "error: need 1 <= --from <= --to\n";
                return usage_error;
            }
            if (table_digits < 1 || table_digits > 1000) {
                err << "error: --digits must be in 1..1000\n";
                return usage_error;
            }
            const auto rows = compute_table(from, to, table_digits, policy);
            const std::string text = render_table(rows, parse_format(table_format));
            if (table_out.empty()) {
                out << text;
            } else if (!write_file(table_out, text)) {
                err << "error: cannot write " << table_out << '\n';
                return io_failure;
            }
            const bool undecided = std::any_of(rows.begin(), rows.end(), [](const table_row &r) {
                return r.sandwich == outcome::undecided || r.monotone == outcome::undecided;
            });
            return undecided ? exhausted : ok;
        }
        if (*verify_cmd) {
            proof_options opts;
            opts.policy = policy;
            opts.sandwich_max = sandwich_max;
            const proof_report report = verify(*parse_verify_target(target), opts);
            out << render_summary(report);
            if (!report_path.empty() && !write_file(report_path, report_to_json(report).dump(2) + "\n")) {
                err << "error: cannot write " << report_path << '\n';
                return io_failure;
            }
            return verdict_code(report);
        }
    } catch (const precision_exhausted &e) {
        err << "error: " << e.what() << '\n';
        return exhausted;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return check_failed;
    }
    return usage_error;
}

} // namespace stirling::cli

#endif
