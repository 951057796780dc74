#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "wfree/classical.hpp"
#include "wfree/freefield.hpp"
#include "wfree/wbasis.hpp"

namespace wfree {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Free-field tokens b<i>[k], g<i>[k], f[k], f<i>[k]; abstract tokens W<m>[k],
// Om<a>,<b>[k]. A pure constant parses as a VPoly.
std::variant<VPoly, WPoly> parse_expr(std::string_view text);
VPoly parse_vpoly(std::string_view text);
WPoly parse_wpoly(std::string_view text);
QPoly parse_qpoly(std::string_view text);

}  // namespace wfree
