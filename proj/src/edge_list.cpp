#include "arbormid/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "arbormid/error.hpp"

namespace arbormid {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::uint64_t parse_number(const std::string& tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": '" + tok + "' is not a decimal integer");
  }
  return value;
}

}  // namespace

Tree read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!n) {
      if (toks.size() != 1) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected vertex count");
      n = parse_number(toks[0], line_no);
      continue;
    }
    if (toks.size() != 2) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 'u v'");
    const auto u = parse_number(toks[0], line_no);
    const auto v = parse_number(toks[1], line_no);
    if (u > 0xFFFFFFFFu || v > 0xFFFFFFFFu) {
      throw Error(ErrorKind::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex id too large");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!n) throw Error(ErrorKind::Parse, "empty input: missing vertex count");
  return Tree::from_edge_list(*n, edges);
}

Tree read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Tree& t) {
  out << t.order() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Tree& t) {
  std::ostringstream out;
  write_edge_list(out, t);
  return out.str();
}

}  // namespace arbormid
