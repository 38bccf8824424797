#include "vtcrit/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vtcrit {

std::string to_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(const std::string& line) {
  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw std::invalid_argument("graph6: truncated");
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: bad character");
    return c - 63;
  };
  int n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    n = (next() << 12) | (next() << 6) | next();
  }
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6: order outside [1, 64]");
  std::vector<std::pair<int, int>> edges;
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (nbits == 0) {
        acc = next();
        nbits = 6;
      }
      if (acc & (1 << (nbits - 1))) edges.emplace_back(i, j);
      --nbits;
    }
  return Graph::from_edge_list(n, edges);
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.back() == '\r') line.pop_back();
    out.push_back(from_graph6(line));
  }
  return out;
}

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header line");
  std::vector<std::pair<int, int>> edges(m);
  for (auto& [u, v] : edges)
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
  return Graph::from_edge_list(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace vtcrit
