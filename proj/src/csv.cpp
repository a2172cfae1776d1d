#include "prhr/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <vector>

#include "prhr/errors.hpp"

namespace prhr {

namespace {

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(trimmed(line.substr(start)));
      break;
    }
    cells.push_back(trimmed(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name) {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw SchemaError("column '" + name + "' not found in header");
  }
  return static_cast<std::size_t>(it - header.begin());
}

double parse_cell(const std::string& cell, std::size_t line_no, const std::string& col) {
  if (cell.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ", column '" + col +
                     "': missing value");
  }
  double value = 0.0;
  const char* first = cell.data();
  const char* last = first + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ", column '" + col +
                     "': cannot parse '" + cell + "' as a number");
  }
  return value;
}

Sample make_sample(std::vector<double>&& values, const std::string& label) {
  if (values.size() < 2) {
    throw InsufficientDataError("group '" + label + "' has " +
                                std::to_string(values.size()) +
                                " observation(s); at least 2 are required");
  }
  return Sample::from_values(std::move(values), label);
}

void format_full(std::ostream& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

std::pair<Sample, Sample> parse_two_samples(std::istream& in, const ColumnSpec& spec) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty input: a header row is required");
  }
  const auto header = split_row(line);

  std::vector<double> xs, ys;
  std::size_t line_no = 1;

  if (const auto* two = std::get_if<TwoColumnSpec>(&spec)) {
    const auto xi = column_index(header, two->x_col);
    const auto yi = column_index(header, two->y_col);
    while (std::getline(in, line)) {
      ++line_no;
      if (trimmed(line).empty()) continue;
      const auto cells = split_row(line);
      if (xi >= cells.size() || yi >= cells.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(header.size()) + " cells, found " +
                         std::to_string(cells.size()));
      }
      xs.push_back(parse_cell(cells[xi], line_no, two->x_col));
      ys.push_back(parse_cell(cells[yi], line_no, two->y_col));
    }
    return {make_sample(std::move(xs), two->x_col), make_sample(std::move(ys), two->y_col)};
  }

  const auto& grp = std::get<GroupColumnSpec>(spec);
  const auto gi = column_index(header, grp.group_col);
  const auto vi = column_index(header, grp.value_col);
  std::string other_label;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    const auto cells = split_row(line);
    if (gi >= cells.size() || vi >= cells.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " cells, found " +
                       std::to_string(cells.size()));
    }
    const double value = parse_cell(cells[vi], line_no, grp.value_col);
    const std::string& label = cells[gi];
    if (label == grp.baseline) {
      xs.push_back(value);
    } else if (other_label.empty() || label == other_label) {
      other_label = label;
      ys.push_back(value);
    } else {
      throw SchemaError("line " + std::to_string(line_no) + ": unknown group label '" +
                        label + "' (expected '" + grp.baseline + "' or '" + other_label +
                        "')");
    }
  }
  if (xs.empty()) {
    throw SchemaError("baseline group '" + grp.baseline + "' has no rows");
  }
  return {make_sample(std::move(xs), grp.baseline),
          make_sample(std::move(ys), other_label.empty() ? "other" : other_label)};
}

void write_group_csv(std::ostream& out, const Sample& x, const Sample& y) {
  out << "group,value\n";
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out << x.label() << ',';
    format_full(out, x.values()(i));
    out << '\n';
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    out << y.label() << ',';
    format_full(out, y.values()(i));
    out << '\n';
  }
}

void write_loglog_csv(std::ostream& out, const LogLogSeries& x, const LogLogSeries& y) {
  out << "label,t,loglog\n";
  for (const auto* series : {&x, &y}) {
    for (const auto& p : series->points) {
      out << series->label << ',';
      format_full(out, p.t);
      out << ',';
      format_full(out, p.v);
      out << '\n';
    }
  }
}

}  // namespace prhr
