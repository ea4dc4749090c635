#include "sprecon/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

namespace sprecon {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_uint(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

}  // namespace

Graph read_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0, seen = 0;
  std::vector<Edge> edges;
  std::unique_ptr<GraphBuilder> builder;

  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (toks.size() != 2) throw ParseError("malformed line", line_no);
    std::uint64_t a = 0, b = 0;
    if (!parse_uint(toks[0], a) || !parse_uint(toks[1], b)) {
      throw ParseError("malformed line", line_no);
    }
    if (!have_header) {
      n = a;
      m = b;
      if (n > kNoVertex) throw ParseError("vertex count too large", line_no);
      builder = std::make_unique<GraphBuilder>(n);
      have_header = true;
    } else {
      if (a >= n || b >= n) throw ParseError("vertex index out of range", line_no);
      if (a == b) throw ParseError("self-loop", line_no);
      if (seen == m) throw ParseError("more edges than declared", line_no);
      if (!builder->add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b))) {
        throw ParseError("duplicate edge", line_no);
      }
      ++seen;
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError("missing header", line_no);
  if (seen != m) throw ParseError("fewer edges than declared", line_no);
  return builder->build();
}

std::string write_edge_list(const Graph& g) {
  std::string out;
  out += std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_edge_list(ss.str());
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_edge_list(g);
}

}  // namespace sprecon
