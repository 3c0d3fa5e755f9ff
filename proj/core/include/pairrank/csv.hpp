#ifndef PAIRRANK_CSV_HPP
#define PAIRRANK_CSV_HPP

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

namespace pairrank::csv {

/// One data row of a CSV source together with its 1-based line number.
struct Row {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/// Reads the comma-separated dialect used by all pairrank files: UTF-8,
/// no quoting (ids and names carry no commas), '#'-prefixed comment lines
/// and blank lines skipped, fields trimmed of surrounding whitespace.
/// The first returned row is the header.
std::vector<Row> read(std::istream& in);

/// Splits a single line; exposed for the writers' round-trip tests.
std::vector<std::string> split_fields(const std::string& line);

std::string join(const std::vector<std::string>& fields);

} // namespace pairrank::csv

#endif
