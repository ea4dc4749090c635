#ifndef SPRECON_EDGE_LIST_HPP
#define SPRECON_EDGE_LIST_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sprecon/graph.hpp"

namespace sprecon {

// Raised for malformed edge-list text. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(what + " at line " + std::to_string(line)),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Format: header "n m", then m lines "u v" (0-based, whitespace separated).
// Blank lines and lines whose first non-blank character is '#' are ignored.
Graph read_edge_list(std::string_view text);

// Canonical form: header, then edges with u < v in ascending order.
std::string write_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace sprecon

#endif  // SPRECON_EDGE_LIST_HPP
