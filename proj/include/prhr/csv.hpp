#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>

#include "prhr/sample.hpp"

namespace prhr {

// Two value columns, one per group; rows must cover both columns.
struct TwoColumnSpec {
  std::string x_col;
  std::string y_col;
};

// One (group, value) column pair; `baseline` names the group mapped to
// the first (baseline) sample, the single remaining label to the second.
struct GroupColumnSpec {
  std::string group_col;
  std::string value_col;
  std::string baseline;
};

using ColumnSpec = std::variant<TwoColumnSpec, GroupColumnSpec>;

// Reads UTF-8 CSV with a mandatory header row and returns the two
// validated samples in canonical sorted order. Input row order is
// irrelevant to the result. Missing or non-numeric cells are hard
// errors reported with their file line and column name; each group
// must contain at least two observations.
std::pair<Sample, Sample> parse_two_samples(std::istream& in, const ColumnSpec& spec);

// Writes the pair in (group,value) layout; parse_two_samples on the
// output reproduces the samples exactly.
void write_group_csv(std::ostream& out, const Sample& x, const Sample& y);

// Plot-ready series of both samples: columns label,t,loglog at full
// decimal precision.
void write_loglog_csv(std::ostream& out, const LogLogSeries& x, const LogLogSeries& y);

}  // namespace prhr
