#include "boxline/data.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace boxline {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

double parse_number(const std::string& field, std::size_t line_no) {
    std::string t = trim(field);
    if (!t.empty() && t[0] == '+') t = t.substr(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size())
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": cannot parse number '" + field + "'");
    if (!std::isfinite(v))
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": non-finite value '" + field + "'");
    return v;
}

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

Measurement measurement_from_parts(double x0, double x1, double y0, double y1,
                                   CsvStyle style, std::size_t line_no, int index) {
    Interval x = Interval::empty(), y = Interval::empty();
    try {
        if (style == CsvStyle::bounds) {
            x = Interval::make(x0, x1);
            y = Interval::make(y0, y1);
        } else {
            if (x1 < 0.0 || y1 < 0.0)
                throw std::invalid_argument("negative radius");
            x = Interval::make(x0 - x1, x0 + x1);
            y = Interval::make(y0 - y1, y0 + y1);
        }
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
    }
    return Measurement{x, y, index};
}

}  // namespace

Dataset::Dataset(std::vector<Measurement> ms) : ms_(std::move(ms)) {
    for (const Measurement& m : ms_) {
        if (m.x.is_empty() || m.y.is_empty())
            throw std::invalid_argument("measurement with empty box");
    }
}

Dataset Dataset::from_boxes(const std::vector<std::pair<Interval, Interval>>& boxes) {
    std::vector<Measurement> ms;
    ms.reserve(boxes.size());
    int idx = 1;
    for (const auto& [x, y] : boxes) ms.push_back(Measurement{x, y, idx++});
    return Dataset(std::move(ms));
}

Dataset Dataset::prefix(std::size_t count) const {
    if (count > ms_.size()) throw std::out_of_range("prefix longer than dataset");
    return Dataset(std::vector<Measurement>(ms_.begin(), ms_.begin() + count));
}

Dataset sort_by_x(const Dataset& d, SortDirection dir) {
    std::vector<Measurement> ms(d.begin(), d.end());
    std::stable_sort(ms.begin(), ms.end(), [dir](const Measurement& p, const Measurement& q) {
        double mp = midpoint(p.x), mq = midpoint(q.x);
        return dir == SortDirection::ascending ? mp < mq : mp > mq;
    });
    return Dataset(std::move(ms));
}

ParamBox intersect(const ParamBox& p, const ParamBox& q) noexcept {
    if (p.is_empty() || q.is_empty()) return ParamBox::empty();
    return ParamBox{intersect(p.a, q.a), intersect(p.b, q.b)};
}

ParamBox box_hull(const ParamBox& p, const ParamBox& q) noexcept {
    if (p.is_empty()) return q;
    if (q.is_empty()) return p;
    return ParamBox{interval_hull(p.a, q.a), interval_hull(p.b, q.b)};
}

bool box_subset(const ParamBox& inner, const ParamBox& outer) noexcept {
    if (inner.is_empty()) return true;
    if (outer.is_empty()) return false;
    return is_subset(inner.a, outer.a) && is_subset(inner.b, outer.b);
}

bool operator==(const ParamBox& p, const ParamBox& q) noexcept {
    if (p.is_empty() || q.is_empty()) return p.is_empty() && q.is_empty();
    return p.a == q.a && p.b == q.b;
}

bool operator!=(const ParamBox& p, const ParamBox& q) noexcept { return !(p == q); }

std::string to_string(SolutionKind k) {
    switch (k) {
        case SolutionKind::united: return "united";
        case SolutionKind::tolerable: return "tolerable";
        case SolutionKind::controllable: return "controllable";
        case SolutionKind::crude: return "crude";
    }
    return "?";
}

std::string to_string(FitStatus s) {
    switch (s) {
        case FitStatus::solved: return "solved";
        case FitStatus::proven_empty: return "proven_empty";
        case FitStatus::seed_empty: return "seed_empty";
    }
    return "?";
}

SolutionKind solution_kind_from_string(const std::string& name) {
    if (name == "united") return SolutionKind::united;
    if (name == "tolerable") return SolutionKind::tolerable;
    if (name == "controllable") return SolutionKind::controllable;
    if (name == "crude") return SolutionKind::crude;
    throw std::invalid_argument("unknown solution kind '" + name + "'");
}

bool operator==(const FitReport& p, const FitReport& q) noexcept {
    return p.kind == q.kind && p.hull == q.hull && p.status == q.status &&
           p.outer_iterations == q.outer_iterations && p.eps_used == q.eps_used &&
           p.k_allowed == q.k_allowed && p.idempotent == q.idempotent;
}

Dataset load_dataset(std::istream& in, CsvStyle style) {
    std::string line;
    std::size_t line_no = 0;

    // Header row is mandatory; columns are located by name.
    if (!std::getline(in, line))
        throw std::runtime_error("empty input: missing CSV header");
    ++line_no;
    std::vector<std::string> header = split_csv_line(line);
    const char* wanted_bounds[4] = {"x_lo", "x_hi", "y_lo", "y_hi"};
    const char* wanted_cr[4] = {"x_center", "x_radius", "y_center", "y_radius"};
    const char** wanted = style == CsvStyle::bounds ? wanted_bounds : wanted_cr;
    int col[4] = {-1, -1, -1, -1};
    for (int w = 0; w < 4; ++w) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == wanted[w]) { col[w] = static_cast<int>(c); break; }
        }
        if (col[w] < 0)
            throw std::runtime_error(std::string("CSV header missing column '") +
                                     wanted[w] + "'");
    }

    std::vector<Measurement> ms;
    int index = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_csv_line(line);
        double v[4];
        for (int w = 0; w < 4; ++w) {
            if (static_cast<std::size_t>(col[w]) >= fields.size())
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": too few fields");
            v[w] = parse_number(fields[col[w]], line_no);
        }
        ms.push_back(measurement_from_parts(v[0], v[1], v[2], v[3], style, line_no, index++));
    }
    if (ms.size() < 2)
        throw std::runtime_error("dataset has fewer than 2 rows");
    return Dataset(std::move(ms));
}

Dataset load_dataset_file(const std::string& path, CsvStyle style) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    // A leading '[' marks the JSON mirror format.
    char c;
    while (in.get(c)) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        in.unget();
        break;
    }
    if (in && in.peek() == '[') {
        std::ostringstream all;
        all << in.rdbuf();
        return dataset_from_json(all.str());
    }
    in.clear();
    in.seekg(0);
    return load_dataset(in, style);
}

std::string dataset_to_csv(const Dataset& d) {
    std::string out = "x_lo,x_hi,y_lo,y_hi\n";
    for (const Measurement& m : d) {
        out += shortest(m.x.lo()) + "," + shortest(m.x.hi()) + "," +
               shortest(m.y.lo()) + "," + shortest(m.y.hi()) + "\n";
    }
    return out;
}

Dataset dataset_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("invalid JSON dataset: ") + e.what());
    }
    if (!j.is_array()) throw std::runtime_error("JSON dataset must be an array");
    std::vector<Measurement> ms;
    int index = 1;
    for (const auto& row : j) {
        if (!row.is_object() || !row.contains("x") || !row.contains("y") ||
            !row["x"].is_array() || row["x"].size() != 2 ||
            !row["y"].is_array() || row["y"].size() != 2)
            throw std::runtime_error("JSON dataset rows must be {\"x\":[lo,hi],\"y\":[lo,hi]}");
        double xl = row["x"][0].get<double>(), xh = row["x"][1].get<double>();
        double yl = row["y"][0].get<double>(), yh = row["y"][1].get<double>();
        if (!std::isfinite(xl) || !std::isfinite(xh) || !std::isfinite(yl) || !std::isfinite(yh))
            throw std::runtime_error("JSON dataset contains non-finite value");
        try {
            ms.push_back(Measurement{Interval::make(xl, xh), Interval::make(yl, yh), index++});
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string("JSON dataset row ") +
                                     std::to_string(index) + ": " + e.what());
        }
    }
    if (ms.size() < 2) throw std::runtime_error("dataset has fewer than 2 rows");
    return Dataset(std::move(ms));
}

std::string dataset_to_json(const Dataset& d) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Measurement& m : d) {
        nlohmann::ordered_json row;
        row["x"] = {m.x.lo(), m.x.hi()};
        row["y"] = {m.y.lo(), m.y.hi()};
        arr.push_back(row);
    }
    return arr.dump();
}

}  // namespace boxline
