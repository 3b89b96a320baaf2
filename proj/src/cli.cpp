#include "bellwig/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include "bellwig/analytic.hpp"
#include "bellwig/data_csv.hpp"
#include "bellwig/data_inequality.hpp"
#include "bellwig/rng.hpp"
#include "bellwig/sampler.hpp"

namespace bellwig::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string angles;
    std::string convention = "spin";
    std::string mode = "paper";
    std::string kind = "wigner";
    std::size_t n = 0;
    std::uint64_t seed = kDefaultSeed;
    std::size_t resolution = 60;
    std::string n_list = "100,10000,1000000";
    std::string input_path;
    std::string output_path;
    std::string format;
    bool degrees = false;
};

json report_json(const InequalityReport& r) {
    return {{"kind", to_string(r.kind())}, {"mode", to_string(r.mode())}, {"lhs", r.lhs()},
            {"rhs", r.rhs()},              {"margin", r.margin()},        {"satisfied", r.satisfied()},
            {"tolerance", r.tolerance()}};
}

json config_json(const AngleConfig& cfg) {
    return {{"a", cfg.a()}, {"b", cfg.b()}, {"bp", cfg.bp()}, {"convention", to_string(cfg.convention())}};
}

json joint_json(const JointProbabilities& p) {
    return {{"pp", p.pp()}, {"pm", p.pm()}, {"mp", p.mp()}, {"mm", p.mm()}};
}

void write_report_csv(std::ostream& out, const InequalityReport& r) {
    out << "kind,mode,lhs,rhs,margin,satisfied,tolerance\n"
        << to_string(r.kind()) << ',' << to_string(r.mode()) << ',' << format_double(r.lhs()) << ','
        << format_double(r.rhs()) << ',' << format_double(r.margin()) << ',' << (r.satisfied() ? "true" : "false")
        << ',' << format_double(r.tolerance()) << '\n';
}

std::ofstream open_output(const std::string& path) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    return f;
}

void finish_output(std::ofstream& f, const std::string& path) {
    f.flush();
    if (!f) throw IoError("write to '" + path + "' failed");
}

int cmd_check_data(const RunConfig& rc, std::ostream& out) {
    const auto data = read_trials(std::filesystem::path(rc.input_path));
    const auto report = std::visit(
        [](const auto& d) {
            if constexpr (std::is_same_v<std::decay_t<decltype(d)>, DataSetTriple>) {
                return data_bell_margin_3(d);
            } else {
                return data_bell_margin_4(d);
            }
        },
        data);
    if (rc.format == "csv") {
        write_report_csv(out, report);
    } else {
        const auto& sides = *report.exact_sides();
        json j = {{"command", "check-data"}, {"input", rc.input_path}, {"n", sides.n}, {"report", report_json(report)},
                  {"exact", {{"lhs_scaled", sides.lhs_scaled}, {"rhs_scaled", sides.rhs_scaled}, {"n", sides.n}}}};
        out << j.dump(2) << '\n';
    }
    return report.satisfied() ? kExitOk : kExitViolation;
}

int cmd_simulate(const RunConfig& rc, std::ostream& out) {
    const auto cfg = parse_angles(rc.angles, parse_convention(rc.convention), rc.degrees);
    if (rc.n == 0) throw InvalidValue("--n must be at least 1");
    Rng rng(rc.seed);
    const auto data = sample_data_set(cfg, rc.n, rng);
    write_triples(std::filesystem::path(rc.output_path), data);

    const auto emp = empirical_correlations(data);
    const auto conv = cfg.convention();
    auto corr = [&](double estimate, double analytic_value) {
        return json{{"estimate", estimate},
                    {"analytic", analytic_value},
                    {"abs_error", std::abs(estimate - analytic_value)},
                    {"std_error", correlation_std_error(estimate, rc.n)}};
    };
    json bbp = corr(emp.bbp, analytic::third_correlation(cfg));
    bbp["naive_analytic"] = analytic::bell_correlation(cfg.b(), cfg.bp(), conv);
    json j = {{"command", "simulate"},
              {"n", rc.n},
              {"seed", rc.seed},
              {"config", config_json(cfg)},
              {"output", rc.output_path},
              {"correlations",
               {{"ab", corr(emp.ab, analytic::bell_correlation(cfg.a(), cfg.b(), conv))},
                {"abp", corr(emp.abp, analytic::bell_correlation(cfg.a(), cfg.bp(), conv))},
                {"bbp", bbp}}},
              {"data_report", report_json(data_bell_margin_3(data))}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_analytic(const RunConfig& rc, std::ostream& out) {
    const auto cfg = parse_angles(rc.angles, parse_convention(rc.convention), rc.degrees);
    const auto mode = parse_mode(rc.mode);
    const auto conv = cfg.convention();
    const auto p_ab = analytic::joint_probability(cfg.a(), cfg.b(), conv);
    const auto p_abp = analytic::joint_probability(cfg.a(), cfg.bp(), conv);
    const auto third = analytic::third_pair_probabilities(cfg);
    const double c_ab = analytic::bell_correlation(cfg.a(), cfg.b(), conv);
    const double c_abp = analytic::bell_correlation(cfg.a(), cfg.bp(), conv);
    const double c_bbp = analytic::third_correlation(cfg);
    const double c_bbp_naive = analytic::bell_correlation(cfg.b(), cfg.bp(), conv);
    const auto bell = analytic::bell_margin(cfg, mode);
    const auto wigner = analytic::wigner_margin(cfg, mode);
    const double slack = analytic::wigner_slack(cfg);

    if (rc.format == "csv") {
        out << "quantity,value\n";
        auto row = [&](std::string_view name, double v) { out << name << ',' << format_double(v) << '\n'; };
        row("P_ab_pp", p_ab.pp());
        row("P_ab_pm", p_ab.pm());
        row("P_abp_pp", p_abp.pp());
        row("P_abp_pm", p_abp.pm());
        row("P_bbp_pp", third.ppp);
        row("P_bbp_pm", third.ppm);
        row("C_ab", c_ab);
        row("C_abp", c_abp);
        row("C_bbp", c_bbp);
        row("C_bbp_naive", c_bbp_naive);
        row("bell_lhs", bell.lhs());
        row("bell_rhs", bell.rhs());
        row("bell_margin", bell.margin());
        row("wigner_lhs", wigner.lhs());
        row("wigner_rhs", wigner.rhs());
        row("wigner_margin", wigner.margin());
        row("wigner_slack", slack);
        return kExitOk;
    }
    json j = {{"command", "analytic"},
              {"config", config_json(cfg)},
              {"mode", to_string(mode)},
              {"joint_probabilities", {{"ab", joint_json(p_ab)}, {"abp", joint_json(p_abp)}}},
              {"third_pair_probabilities", {{"pp", third.ppp}, {"pm", third.ppm}}},
              {"correlations", {{"ab", c_ab}, {"abp", c_abp}, {"bbp", c_bbp}, {"bbp_naive", c_bbp_naive}}},
              {"bell", report_json(bell)},
              {"wigner", report_json(wigner)},
              {"wigner_slack", slack}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

int cmd_sweep(const RunConfig& rc, std::ostream& out) {
    SweepOptions opt;
    opt.resolution = rc.resolution;
    opt.convention = parse_convention(rc.convention);
    opt.kind = parse_kind(rc.kind);
    opt.mode = parse_mode(rc.mode);
    opt.workers = workers_from_env();

    std::optional<SweepResult> result;
    if (!rc.output_path.empty()) {
        auto f = open_output(rc.output_path);
        f << kSweepCsvHeader << '\n';
        result = grid_sweep(opt, [&f](const SweepRecord& rec) { write_sweep_row(f, rec); });
        finish_output(f, rc.output_path);
    } else {
        result = grid_sweep(opt);
    }
    const auto& r = *result;
    if (rc.format == "json") {
        json j = {{"command", "sweep"},
                  {"kind", to_string(opt.kind)},
                  {"mode", to_string(opt.mode)},
                  {"convention", to_string(opt.convention)},
                  {"resolution", opt.resolution},
                  {"points", r.points},
                  {"min_margin", r.min_margin},
                  {"argmin", config_json(r.argmin)},
                  {"violations", r.violations},
                  {"violation_threshold", kViolationThreshold}};
        out << j.dump(2) << '\n';
    } else {
        out << "kind: " << to_string(opt.kind) << " mode: " << to_string(opt.mode)
            << " points: " << r.points << " min_margin: " << format_double(r.min_margin)
            << " argmin: " << format_double(r.argmin.a()) << ',' << format_double(r.argmin.b()) << ','
            << format_double(r.argmin.bp()) << " violations: " << r.violations << '\n';
    }
    return r.violations > 0 ? kExitViolation : kExitOk;
}

int cmd_convergence(const RunConfig& rc, std::ostream& out) {
    const auto cfg = parse_angles(rc.angles, parse_convention(rc.convention), rc.degrees);
    const auto n_list = parse_count_list(rc.n_list);
    const auto records = convergence_study(cfg, n_list, rc.seed);

    auto emit = [&](std::ostream& os) {
        if (rc.format == "json") {
            json arr = json::array();
            for (const auto& r : records) {
                arr.push_back({{"n_samples", r.n_samples},
                               {"estimate", r.estimate},
                               {"analytic", r.analytic},
                               {"abs_error", r.abs_error},
                               {"std_error", r.std_error},
                               {"seed", r.seed}});
            }
            os << arr.dump(2) << '\n';
        } else {
            write_convergence_csv(os, records);
        }
    };
    if (rc.output_path.empty()) {
        emit(out);
    } else {
        auto f = open_output(rc.output_path);
        emit(f);
        finish_output(f, rc.output_path);
    }
    return kExitOk;
}

void add_angle_options(CLI::App* sub, RunConfig& rc) {
    sub->add_option("--angles", rc.angles, "Detector settings a,b,bp (radians unless --degrees)")->required();
    sub->add_flag("--degrees", rc.degrees, "Interpret --angles in degrees");
    sub->add_option("--convention", rc.convention, "Angle convention")
        ->check(CLI::IsMember({"spin", "optical"}, CLI::ignore_case));
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

AngleConfig parse_angles(std::string_view text, AngleConvention convention, bool degrees) {
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        auto cell = text.substr(start, comma - start);
        while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
        while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size()) {
            throw InvalidValue("--angles: cannot parse '" + std::string(cell) + "' as a number");
        }
        values.push_back(degrees ? v * std::numbers::pi / 180.0 : v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (values.size() != 3) {
        throw InvalidValue("--angles needs exactly three values a,b,bp, got " + std::to_string(values.size()));
    }
    return AngleConfig(values[0], values[1], values[2], convention);
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto cell = text.substr(start, comma - start);
        std::size_t v = 0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
        if (cell.empty() || ec != std::errc{} || ptr != cell.data() + cell.size() || v == 0) {
            throw InvalidValue("cannot parse '" + std::string(cell) + "' as a positive count");
        }
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

void write_sweep_row(std::ostream& out, const SweepRecord& rec) {
    out << format_double(rec.a) << ',' << format_double(rec.b) << ',' << format_double(rec.bp) << ','
        << to_string(rec.kind) << ',' << to_string(rec.mode) << ',' << format_double(rec.lhs) << ','
        << format_double(rec.rhs) << ',' << format_double(rec.margin) << '\n';
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRecord>& records) {
    out << kConvergenceCsvHeader << '\n';
    for (const auto& r : records) {
        out << r.n_samples << ',' << format_double(r.estimate) << ',' << format_double(r.analytic) << ','
            << format_double(r.abs_error) << ',' << format_double(r.std_error) << ',' << r.seed << '\n';
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig rc;
    CLI::App app{"Bell and Wigner inequality verification tool", "bellwig"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check-data", "Evaluate the exact data inequality for a CSV of trials");
    check->add_option("input", rc.input_path, "CSV file with a,b,bp or a,ap,b,bp rows")->required();
    check->add_option("--format", rc.format, "Report format")->check(CLI::IsMember({"json", "csv"}));

    auto* sim = app.add_subcommand("simulate", "Sample entangled-pair triples and write them as CSV");
    add_angle_options(sim, rc);
    sim->add_option("--n", rc.n, "Number of triples")->required()->check(CLI::PositiveNumber);
    sim->add_option("--seed", rc.seed, "Generator seed");
    sim->add_option("--out", rc.output_path, "Output CSV path")->required();

    auto* ana = app.add_subcommand("analytic", "Closed-form probabilities, correlations and margins");
    add_angle_options(ana, rc);
    ana->add_option("--mode", rc.mode, "paper or naive")->check(CLI::IsMember({"paper", "naive"}, CLI::ignore_case));
    ana->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto* swp = app.add_subcommand("sweep", "Evaluate a margin over a uniform angle grid");
    swp->add_option("--resolution", rc.resolution, "Grid points per axis")->check(CLI::Range(std::size_t{2}, std::size_t{2000}));
    swp->add_option("--convention", rc.convention, "Angle convention")
        ->check(CLI::IsMember({"spin", "optical"}, CLI::ignore_case));
    swp->add_option("--kind", rc.kind, "bell or wigner")
        ->check(CLI::IsMember({"bell", "corr_bell", "wigner"}, CLI::ignore_case));
    swp->add_option("--mode", rc.mode, "paper or naive")->check(CLI::IsMember({"paper", "naive"}, CLI::ignore_case));
    swp->add_option("--out", rc.output_path, "Write every grid record as CSV to this path");
    swp->add_option("--format", rc.format, "Summary format")->check(CLI::IsMember({"text", "json"}));

    auto* conv = app.add_subcommand("convergence", "Monte Carlo convergence of the (b,b') correlation");
    add_angle_options(conv, rc);
    conv->add_option("--n-list", rc.n_list, "Ascending sample counts, comma separated");
    conv->add_option("--seed", rc.seed, "Generator seed");
    conv->add_option("--out", rc.output_path, "Output path (stdout when omitted)");
    conv->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check_data(rc, out);
        if (sim->parsed()) return cmd_simulate(rc, out);
        if (ana->parsed()) return cmd_analytic(rc, out);
        if (swp->parsed()) return cmd_sweep(rc, out);
        if (conv->parsed()) return cmd_convergence(rc, out);
    } catch (const ParseError& e) {
        err << "parse error: " << (rc.input_path.empty() ? "" : rc.input_path + ": ") << e.what() << '\n';
        return kExitInputError;
    } catch (const LengthError& e) {
        err << "length error: " << (rc.input_path.empty() ? "" : rc.input_path + ": ") << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    err << "error: no command given\n";
    return kExitInputError;
}

}  // namespace bellwig::cli
