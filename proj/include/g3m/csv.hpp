#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace g3m {

// Shortest decimal representation that round-trips to the same double;
// locale-independent.
std::string format_double(double value);

// Parses a full CSV document into rows of cells. No quoting rules: the
// emitters never produce cells containing commas.
std::vector<std::vector<std::string>> parse_csv(std::istream& in);

// Strict double parse of a CSV cell; throws std::invalid_argument on
// trailing garbage or empty input.
double parse_double(const std::string& cell);

void write_csv_row(std::ostream& out, std::span<const std::string> cells);

}  // namespace g3m
