#include "polydecomp/text_format.hpp"

#include <cctype>
#include <string>

#include "polydecomp/errors.hpp"

namespace polydecomp {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<std::string_view> split_fields(std::string_view text) {
  std::vector<std::string_view> fields;
  if (trim(text).empty()) throw ParseError("empty polynomial text");
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view field = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (field.empty()) throw ParseError("empty coefficient field in '" + std::string(text) + "'");
    fields.push_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace polydecomp
