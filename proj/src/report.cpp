#include "cchain/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "cchain/counting.hpp"
#include "cchain/error.hpp"

namespace cchain {

std::string format_fixed(const Rational& r, int digits) {
  if (r < 0) throw Error(Errc::InvalidArgument, "format_fixed needs a nonnegative value");
  const Count num = boost::multiprecision::numerator(r);
  const Count den = boost::multiprecision::denominator(r);
  std::string out = Count(num / den).str();
  Count rem = num % den;
  if (digits > 0) out += '.';
  for (int i = 0; i < digits; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(Count(rem / den)));
    rem %= den;
  }
  return out;
}

void fill_ratios(TableRow& row) {
  if (row.gamma) {
    row.ratio_gamma = format_fixed(gamma_ratio(row.n, *row.gamma));
    if (row.t) row.ratio_gamma_t = format_fixed(gamma_ratio(row.n, *row.gamma + *row.t));
  }
  if (row.t && row.delta && *row.delta > 0 && *row.t >= 0) {
    row.t_over_delta = format_fixed(Rational(Count(*row.t), *row.delta));
  }
}

std::optional<std::size_t> CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) return std::nullopt;
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable to_csv(const std::vector<TableRow>& rows) {
  CsvTable t;
  t.header = {"n", "gamma", "t", "delta", "ratio_gamma", "ratio_gamma_t", "t_over_delta"};
  auto opt = [](const auto& v) -> std::string {
    if (!v) return "";
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, std::string>) {
      return *v;
    } else if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, Count>) {
      return v->str();
    } else {
      return std::to_string(*v);
    }
  };
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.n), opt(r.gamma), opt(r.t), opt(r.delta), opt(r.ratio_gamma),
                      opt(r.ratio_gamma_t), opt(r.t_over_delta)});
  }
  return t;
}

CsvTable to_csv(const std::vector<CensusReport>& reports, TAccounting accounting) {
  CsvTable t;
  t.header = {"n",          "predicate",  "official", "non_official", "incidental", "unresolved",
              "descended",  "evens",      "t",        "accounting",   "partitions"};
  for (const auto& r : reports) {
    t.rows.push_back({std::to_string(r.n), to_token(r.predicate), std::to_string(r.counts.official),
                      std::to_string(r.counts.non_official), std::to_string(r.counts.incidental),
                      std::to_string(r.counts.unresolved), std::to_string(r.counts.descended),
                      std::to_string(r.evens), std::to_string(r.t(accounting)), std::string(to_string(accounting)),
                      std::to_string(r.partition_count)});
  }
  return t;
}

namespace {

void write_field(std::ostream& os, const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) {
    os << f;
    return;
  }
  os << '"';
  for (char c : f) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else {
      out.back() += c;
    }
  }
  if (quoted) throw Error(Errc::InvalidArgument, "unterminated quote in CSV line: " + line);
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const CsvTable& table) {
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) os << ',';
      write_field(os, fields[i]);
    }
    os << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

CsvTable read_csv(std::istream& is) {
  CsvTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_line(line);
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size()) {
      throw Error(Errc::InvalidArgument, "CSV line " + std::to_string(line_no) + " has " +
                                             std::to_string(fields.size()) + " fields, header has " +
                                             std::to_string(t.header.size()));
    }
    t.rows.push_back(std::move(fields));
  }
  if (t.header.empty()) throw Error(Errc::InvalidArgument, "empty CSV input");
  if (!t.column("n")) throw Error(Errc::InvalidArgument, "CSV has no 'n' column");
  return t;
}

void write_pretty(std::ostream& os, const CsvTable& table) {
  std::vector<std::size_t> width(table.header.size());
  for (std::size_t c = 0; c < width.size(); ++c) {
    width[c] = table.header[c].size();
    for (const auto& r : table.rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << fields[c];
    }
    os << '\n';
  };
  line(table.header);
  std::size_t total = 0;
  for (auto w : width) total += w + 2;
  os << std::string(total > 2 ? total - 2 : total, '-') << '\n';
  for (const auto& r : table.rows) line(r);
}

std::vector<Series> extract_series(const CsvTable& table, const std::vector<std::string>& columns) {
  const auto n_col = table.column("n");
  if (!n_col) throw Error(Errc::InvalidArgument, "CSV has no 'n' column");
  std::vector<Series> out;
  for (const auto& name : columns) {
    const auto col = table.column(name);
    if (!col) throw Error(Errc::InvalidArgument, "CSV has no column '" + name + "'");
    Series s{name, {}};
    for (const auto& row : table.rows) {
      if (row[*col].empty()) continue;
      try {
        std::size_t used = 0;
        const double x = std::stod(row[*n_col], &used);
        if (used != row[*n_col].size()) throw std::invalid_argument("trailing");
        const double y = std::stod(row[*col], &used);
        if (used != row[*col].size()) throw std::invalid_argument("trailing");
        s.points.emplace_back(x, y);
      } catch (const std::logic_error&) {
        throw Error(Errc::InvalidArgument, "non-numeric value in column '" + name + "'");
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

// 1, 2 or 5 times a power of ten, giving roughly `target` intervals over span.
double nice_step(double span, int target) {
  if (span <= 0) return 1;
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10 * mag;
}

std::string fmt(double v) {
  std::ostringstream os;
  if (std::fabs(v - std::round(v)) < 1e-9) {
    os << static_cast<long long>(std::llround(v));
  } else {
    os << std::setprecision(4) << v;
  }
  return os.str();
}

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr std::array<const char*, 6> kPalette{"#1f4e9c", "#c0392b", "#2e8b57", "#8e44ad", "#d68910", "#555555"};

}  // namespace

std::string render_svg(const std::vector<Series>& input, const ChartOptions& options) {
  std::vector<Series> series = input;
  std::size_t points = 0;
  for (const auto& s : series) points += s.points.size();
  if (series.empty() || points == 0) throw Error(Errc::InvalidArgument, "no data to plot");

  if (options.normalize) {
    for (auto& s : series) {
      double peak = 0;
      for (const auto& p : s.points) peak = std::max(peak, std::fabs(p.second));
      if (peak > 0) {
        for (auto& p : s.points) p.second /= peak;
      }
    }
  }

  double x_min = INFINITY, x_max = -INFINITY, y_min = 0, y_max = -INFINITY;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      x_min = std::min(x_min, x);
      x_max = std::max(x_max, x);
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (x_max == x_min) {
    x_min -= 1;
    x_max += 1;
  }
  if (y_max <= y_min) y_max = y_min + 1;
  const double y_step = nice_step(y_max - y_min, 5);
  y_max = std::ceil(y_max / y_step) * y_step;
  const double x_step = std::max(1.0, nice_step(x_max - x_min, 12));

  constexpr double kWidth = 800, kHeight = 500;
  constexpr double kLeft = 90, kRight = 30, kTop = 50, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - y_min) / (y_max - y_min) * plot_h; };

  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" width=\"800\" height=\"500\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    os << "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
       << escape_xml(options.title) << "</text>\n";
  }
  // Grid and ticks.
  for (double y = y_min; y <= y_max + y_step * 1e-9; y += y_step) {
    os << "<line x1=\"" << kLeft << "\" y1=\"" << py(y) << "\" x2=\"" << kLeft + plot_w << "\" y2=\"" << py(y)
       << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(y) + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(y) << "</text>\n";
  }
  for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9; x += x_step) {
    os << "<line x1=\"" << px(x) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << px(x) << "\" y2=\""
       << kTop + plot_h + 5 << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << px(x) << "\" y=\"" << kTop + plot_h + 20
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << fmt(x) << "</text>\n";
  }
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
     << kTop + plot_h << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape_xml(options.x_label)
     << "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % kPalette.size()];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < s.points.size(); ++k) {
      if (k) os << ' ';
      os << px(s.points[k].first) << ',' << py(s.points[k].second);
    }
    os << "\"/>\n";
    for (const auto& [x, y] : s.points) {
      os << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = kTop + 14 + 18 * static_cast<double>(i);
    os << "<rect x=\"" << kLeft + 12 << "\" y=\"" << ly - 9 << "\" width=\"12\" height=\"12\" fill=\"" << color
       << "\"/>\n";
    os << "<text x=\"" << kLeft + 30 << "\" y=\"" << ly + 1 << "\" font-family=\"sans-serif\" font-size=\"12\">"
       << escape_xml(s.name) << (options.normalize ? " (scaled to max)" : "") << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cchain
