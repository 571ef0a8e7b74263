#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "dsq/structures.hpp"

namespace dsq {

// Error in a textual input; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(int line_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ": " + message), line(line_) {}
  int line;
};

using ParsedStructure = std::variant<DisingquandleTable, GFamily>;

// Parses either structure format; the leading keyword selects which.
ParsedStructure parse_structure_text(const std::string& text);
ParsedStructure load_structure_file(const std::string& path);

DisingquandleTable parse_disingquandle_text(const std::string& text);

std::string serialize(const DisingquandleTable& d);
std::string serialize(const GFamily& f);

}  // namespace dsq
