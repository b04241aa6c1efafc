#ifndef FEATURECLOUDS_CSV_H_
#define FEATURECLOUDS_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace featureclouds::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader: quoted fields, doubled quotes, embedded line breaks,
// LF or CRLF record separators. A trailing line break does not produce an
// empty record. Throws ParseError on an unterminated quote.
std::vector<Row> parse(std::string_view text);

// Quotes a field only when it contains a comma, quote, or line break.
std::string escape_field(std::string_view field);

std::string format_row(const Row& row);

}  // namespace featureclouds::csv

#endif  // FEATURECLOUDS_CSV_H_
