#include "boxline/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "boxline/analysis.hpp"
#include "boxline/oracle.hpp"
#include "boxline/seeding.hpp"
#include "boxline/slicer.hpp"

namespace boxline {

namespace {

using njson = nlohmann::ordered_json;

struct CommonArgs {
    std::string input;
    std::string csv_style = "bounds";
    std::string kind = "united";
    std::string format = "text";
    double eps = 1e-6;
    double omega = 1e40;
    int sigfigs = 5;
};

void add_common(CLI::App* sub, CommonArgs& c) {
    sub->add_option("--input", c.input, "dataset file (CSV, or JSON starting with '[')")
        ->required();
    sub->add_option("--csv-style", c.csv_style, "CSV column convention")
        ->check(CLI::IsMember({"bounds", "center-radius"}))
        ->capture_default_str();
    sub->add_option("--eps", c.eps, "slicing give-up fraction")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--omega", c.omega, "fallback seed half-width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--sigfigs", c.sigfigs, "digits shown after the leading digit")
        ->check(CLI::Range(0, 15))
        ->capture_default_str();
    sub->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
}

Dataset load(const CommonArgs& c) {
    CsvStyle style = c.csv_style == "bounds" ? CsvStyle::bounds : CsvStyle::center_radius;
    return load_dataset_file(c.input, style);
}

SliceOptions slice_options(const CommonArgs& c) {
    SliceOptions opts;
    opts.eps = c.eps;
    return opts;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

double parse_double(const std::string& s) {
    std::string t = s;
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw std::runtime_error("cannot parse number '" + s + "'");
    return v;
}

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> xs;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            xs.push_back(parse_double(cur));
            cur.clear();
        }
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            cur += ch;
    }
    flush();
    return xs;
}

std::string interval_text(const Interval& iv, int sigfigs) {
    Interval r = round_out(iv, sigfigs);
    return "[" + format_rounded(r.lo(), sigfigs) + ", " + format_rounded(r.hi(), sigfigs) + "]";
}

std::string hull_text(const ParamBox& hull, int sigfigs) {
    if (hull.is_empty()) return "a = empty  b = empty";
    return "a = " + interval_text(hull.a, sigfigs) + "  b = " + interval_text(hull.b, sigfigs);
}

njson hull_json(const ParamBox& hull) {
    if (hull.is_empty()) return nullptr;
    njson h;
    h["a"] = {hull.a.lo(), hull.a.hi()};
    h["b"] = {hull.b.lo(), hull.b.hi()};
    return h;
}

std::string join_indices(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

int cmd_fit(const CommonArgs& c, std::ostream& out) {
    Dataset d = load(c);
    SolutionKind kind = solution_kind_from_string(c.kind);
    FitReport r = solve(kind, d, slice_options(c), c.omega, 0);

    if (c.format == "json") {
        njson j;
        j["kind"] = to_string(r.kind);
        j["status"] = to_string(r.status);
        j["hull"] = hull_json(r.hull);
        j["iterations"] = r.outer_iterations;
        j["eps"] = r.eps_used;
        out << j.dump() << "\n";
    } else if (c.format == "csv") {
        out << "param,lo,hi\n";
        if (!r.hull.is_empty()) {
            out << "a," << shortest(r.hull.a.lo()) << "," << shortest(r.hull.a.hi()) << "\n";
            out << "b," << shortest(r.hull.b.lo()) << "," << shortest(r.hull.b.hi()) << "\n";
        }
    } else {
        out << hull_text(r.hull, c.sigfigs) << "  status=" << to_string(r.status) << "\n";
        out << "iterations=" << r.outer_iterations << "  eps=" << r.eps_used << "\n";
    }
    return r.status == FitStatus::solved ? 0 : 1;
}

int cmd_outliers(const CommonArgs& c, int max_k, std::ostream& out) {
    Dataset d = load(c);
    int budget = max_k >= 0 ? max_k : static_cast<int>(d.size()) - 2;
    OutlierReport rep = detect_outliers(d, slice_options(c), budget);

    if (c.format == "json") {
        njson j;
        j["kind"] = "crude";
        j["k_found"] = rep.k_found;
        j["outlier_indices"] = rep.outlier_indices;
        j["hull"] = hull_json(rep.hull);
        out << j.dump() << "\n";
    } else if (c.format == "csv") {
        out << "outlier_index\n";
        for (int idx : rep.outlier_indices) out << idx << "\n";
    } else {
        out << "k_found=" << rep.k_found << "  outliers=" << join_indices(rep.outlier_indices)
            << "\n";
        out << hull_text(rep.hull, c.sigfigs) << "\n";
    }
    return rep.k_found > 0 ? 1 : 0;
}

int cmd_asymptote(const CommonArgs& c, const std::string& direction, std::ostream& out) {
    Dataset d = load(c);
    SortDirection dir =
        direction == "desc" ? SortDirection::descending : SortDirection::ascending;
    AsymptoteReport rep = fit_asymptote(d, dir, slice_options(c));
    const char* stop = rep.stop_reason == StopReason::not_nested ? "not_nested"
                       : rep.stop_reason == StopReason::empty    ? "empty"
                                                                 : "exhausted";
    if (c.format == "json") {
        njson j;
        j["n_used"] = rep.n_used;
        j["stop"] = stop;
        j["hull"] = hull_json(rep.hull);
        out << j.dump() << "\n";
    } else if (c.format == "csv") {
        out << "n_used,stop,a_lo,a_hi,b_lo,b_hi\n";
        out << rep.n_used << "," << stop;
        if (!rep.hull.is_empty())
            out << "," << shortest(rep.hull.a.lo()) << "," << shortest(rep.hull.a.hi()) << ","
                << shortest(rep.hull.b.lo()) << "," << shortest(rep.hull.b.hi());
        out << "\n";
    } else {
        out << "n_used=" << rep.n_used << "  stop=" << stop << "\n";
        out << hull_text(rep.hull, c.sigfigs) << "\n";
    }
    return 0;
}

int cmd_corridor(const CommonArgs& c, const std::string& xs_text, const std::string& xs_file,
                 const std::string& lsq_text, std::ostream& out, std::ostream& err) {
    Dataset d = load(c);

    std::vector<double> xs;
    if (!xs_file.empty()) {
        std::ifstream in(xs_file);
        if (!in) throw std::runtime_error("cannot open xs file '" + xs_file + "'");
        std::ostringstream all;
        all << in.rdbuf();
        xs = parse_number_list(all.str());
    }
    std::vector<double> inline_xs = parse_number_list(xs_text);
    xs.insert(xs.end(), inline_xs.begin(), inline_xs.end());
    if (xs.empty()) throw std::runtime_error("no evaluation points: pass --xs or --xs-file");

    std::optional<LsqConstants> lsq;
    if (!lsq_text.empty()) {
        std::vector<double> v = parse_number_list(lsq_text);
        if (v.size() != 4)
            throw std::runtime_error("--lsq expects four numbers: a,b,sigma_a,sigma_b");
        lsq = LsqConstants{v[0], v[1], v[2], v[3]};
    }

    SolutionKind kind = solution_kind_from_string(c.kind);
    FitReport fit = solve(kind, d, slice_options(c), c.omega, 0);
    if (fit.status != FitStatus::solved || fit.hull.is_empty()) {
        err << "error: corridor needs a solved fit (status=" << to_string(fit.status) << ")\n";
        return 1;
    }

    std::vector<CorridorRow> rows = corridor_table(fit.hull, xs, lsq);

    if (c.format == "json") {
        njson arr = njson::array();
        for (const CorridorRow& row : rows) {
            njson j;
            j["x"] = row.x;
            j["y_fit"] = {row.y_fit.lo(), row.y_fit.hi()};
            if (row.lsq_corridor)
                j["corridor"] = {row.lsq_corridor->lo(), row.lsq_corridor->hi()};
            if (row.width_ratio) j["width_ratio"] = *row.width_ratio;
            arr.push_back(j);
        }
        out << arr.dump() << "\n";
    } else if (c.format == "csv") {
        out << "x,y_fit_lo,y_fit_hi";
        if (lsq) out << ",corridor_lo,corridor_hi,width_ratio";
        out << "\n";
        for (const CorridorRow& row : rows) {
            out << shortest(row.x) << "," << shortest(row.y_fit.lo()) << ","
                << shortest(row.y_fit.hi());
            if (row.lsq_corridor) {
                out << "," << shortest(row.lsq_corridor->lo()) << ","
                    << shortest(row.lsq_corridor->hi()) << ","
                    << (row.width_ratio ? shortest(*row.width_ratio) : "");
            }
            out << "\n";
        }
    } else {
        // Fitted bounds are widened to the printed grid; corridor columns
        // are plain rounded display values.
        out << "x  y_fit_lo  y_fit_hi";
        if (lsq) out << "  corridor_lo  corridor_hi  width_ratio";
        out << "\n";
        for (const CorridorRow& row : rows) {
            Interval yr = round_out_decimals(row.y_fit, 2);
            out << format_decimals(row.x, 2) << "  " << format_decimals(yr.lo(), 2) << "  "
                << format_decimals(yr.hi(), 2);
            if (row.lsq_corridor) {
                out << "  " << format_decimals(row.lsq_corridor->lo(), 3) << "  "
                    << format_decimals(row.lsq_corridor->hi(), 3) << "  "
                    << (row.width_ratio ? format_decimals(*row.width_ratio, 3) : "-");
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_verify(const CommonArgs& c, int resolution, std::ostream& out) {
    Dataset d = load(c);
    SolutionKind kind = solution_kind_from_string(c.kind);
    if (kind == SolutionKind::crude)
        throw std::invalid_argument("verify supports united/tolerable/controllable");

    FitReport fit = solve(kind, d, slice_options(c), c.omega, 0);
    ParamBox seed = initial_union_box(d, c.omega);
    GridResult grid = grid_hull(kind, d, seed, resolution);

    out << "solver: " << hull_text(fit.hull, c.sigfigs) << "  status=" << to_string(fit.status)
        << "\n";
    out << "grid: accepted=" << grid.accepted;
    if (!grid.hull.is_empty()) out << "  " << hull_text(grid.hull, c.sigfigs);
    out << "\n";

    bool clean;
    if (fit.hull.is_empty()) {
        clean = grid.accepted == 0;
    } else {
        clean = box_subset(grid.hull, fit.hull);
        if (clean && !grid.hull.is_empty()) {
            double step_a = width(seed.a) / resolution;
            double step_b = width(seed.b) / resolution;
            double gap = 0.0;
            gap = std::max(gap, (grid.hull.a.lo() - fit.hull.a.lo()) / step_a);
            gap = std::max(gap, (fit.hull.a.hi() - grid.hull.a.hi()) / step_a);
            gap = std::max(gap, (grid.hull.b.lo() - fit.hull.b.lo()) / step_b);
            gap = std::max(gap, (fit.hull.b.hi() - grid.hull.b.hi()) / step_b);
            out << "max_gap_steps=" << format_decimals(gap, 3) << "\n";
        }
    }
    out << (clean ? "verify: clean" : "verify: MISMATCH") << "\n";
    return clean ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"guaranteed straight-line fits through interval-valued data"};
    app.name("boxline");
    app.require_subcommand(1);

    CommonArgs fit_args, out_args, asy_args, cor_args, ver_args;

    CLI::App* fit = app.add_subcommand("fit", "interval hull of the chosen solution set");
    add_common(fit, fit_args);
    fit->add_option("--kind", fit_args.kind, "solution set")
        ->check(CLI::IsMember({"united", "tolerable", "controllable"}))
        ->capture_default_str();

    CLI::App* outliers =
        app.add_subcommand("outliers", "smallest discard budget with a consistent fit");
    add_common(outliers, out_args);
    int max_k = -1;
    outliers->add_option("--max-k", max_k, "largest discard budget to try (default n-2)");

    CLI::App* asymptote =
        app.add_subcommand("asymptote", "line bracketing the data's linear tail");
    add_common(asymptote, asy_args);
    std::string direction = "asc";
    asymptote->add_option("--direction", direction, "prefix order by x midpoint")
        ->check(CLI::IsMember({"asc", "desc"}))
        ->capture_default_str();

    CLI::App* corridor = app.add_subcommand("corridor", "fitted bounds at chosen x values");
    add_common(corridor, cor_args);
    corridor->add_option("--kind", cor_args.kind, "solution set to fit first")
        ->check(CLI::IsMember({"united", "tolerable", "controllable"}))
        ->capture_default_str();
    std::string xs_text, xs_file, lsq_text;
    corridor->add_option("--xs", xs_text, "evaluation points, comma-separated");
    corridor->add_option("--xs-file", xs_file, "file of evaluation points");
    corridor->add_option("--lsq", lsq_text, "a,b,sigma_a,sigma_b for a three-sigma corridor");

    CLI::App* verify = app.add_subcommand("verify", "cross-check the hull against a grid scan");
    add_common(verify, ver_args);
    verify->add_option("--kind", ver_args.kind, "solution set")
        ->check(CLI::IsMember({"united", "tolerable", "controllable"}))
        ->capture_default_str();
    int resolution = 400;
    verify->add_option("--resolution", resolution, "grid cells per parameter axis")
        ->check(CLI::Range(2, 20000))
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (fit->parsed()) return cmd_fit(fit_args, out);
        if (outliers->parsed()) return cmd_outliers(out_args, max_k, out);
        if (asymptote->parsed()) return cmd_asymptote(asy_args, direction, out);
        if (corridor->parsed()) return cmd_corridor(cor_args, xs_text, xs_file, lsq_text, out, err);
        if (verify->parsed()) return cmd_verify(ver_args, resolution, out);
    } catch (const SeedIndeterminateError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const MaxKExhaustedError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace boxline
