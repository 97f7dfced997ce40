#pragma once

#include <map>
#include <string>
#include <string_view>

namespace skewtilt::detail {

// Parses an integer linear combination such as "x1 - x2 + 3*x3 - 2*c".
// Symbols outside `allowed` raise ParseError; the literal "0" is the empty sum.
std::map<std::string, long long> parse_linear(std::string_view text, std::string_view allowed_csv);

// Renders coefficients in the given symbol order, "0" when all vanish.
std::string format_linear(const std::map<std::string, long long>& terms,
                          std::initializer_list<std::string_view> order,
                          bool spaced);

std::string trim(std::string_view s);

} // namespace skewtilt::detail
