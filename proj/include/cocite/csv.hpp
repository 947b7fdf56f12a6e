#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cocite::csv {

// Splits one CSV line into fields. Double-quoted fields may contain commas
// and doubled quotes (""). Throws ParseError on an unterminated quote or on
// stray characters after a closing quote.
std::vector<std::string> split_line(const std::string &line, std::size_t line_no = 0);

// Quotes a field if it contains a comma, quote, or newline.
std::string quote(const std::string &field);

// Reads all lines, stripping trailing '\r' and a UTF-8 BOM on the first line.
// A trailing newline does not produce an empty last line.
std::vector<std::string> read_lines(std::istream &in);

// Shortest decimal string that round-trips to the same double.
std::string format_full(double v);

// 6 significant digits, for report tables.
std::string format_sig6(double v);

} // namespace cocite::csv
