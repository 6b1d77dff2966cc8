#include "mmk/fol/derivation.hpp"

#include <cctype>

namespace mmk::fol {

Derivation parse_derivation_text(std::string_view text, SymbolTable& table) {
  Derivation d;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    // '#' opens a comment unless it is a numeral abbreviation like #12
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '#') continue;
      if (i + 1 < line.size() && std::isdigit(static_cast<unsigned char>(line[i + 1]))) continue;
      line = line.substr(0, i);
      break;
    }
    std::size_t a = 0, b = line.size();
    while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
    if (b > a) d.steps.push_back(parse_formula(line.substr(a, b - a), table));
    if (end == text.size()) break;
    start = end + 1;
  }
  if (d.steps.empty()) throw ParseError("derivation has no formulas", 0);
  return d;
}

}  // namespace mmk::fol
