#include "prodwidth/codec.hpp"

#include <fstream>
#include <sstream>

#include "prodwidth/errors.hpp"

namespace prodwidth {

namespace {

void append_bits(std::string& out, std::vector<bool>& bits) {
  while (bits.size() % 6 != 0) bits.push_back(false);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int v = 0;
    for (int j = 0; j < 6; j++) v = (v << 1) | (bits[i + j] ? 1 : 0);
    out.push_back(char(v + 63));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(char(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(char(((n >> 12) & 63) + 63));
    out.push_back(char(((n >> 6) & 63) + 63));
    out.push_back(char((n & 63) + 63));
  } else {
    throw std::invalid_argument("graph6_encode: order too large");
  }
  std::vector<bool> bits;
  bits.reserve(size_t(n) * (n - 1) / 2);
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++) bits.push_back(g.has_edge(i, j));
  append_bits(out, bits);
  return out;
}

Graph graph6_decode(const std::string& s) {
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > s.size()) throw parse_error("graph6: truncated input");
  };
  need(1);
  int n;
  if (static_cast<unsigned char>(s[pos]) == 126) {
    pos++;
    need(3);
    n = 0;
    for (int i = 0; i < 3; i++) {
      int c = s[pos++] - 63;
      if (c < 0 || c > 63) throw parse_error("graph6: bad order byte");
      n = (n << 6) | c;
    }
  } else {
    n = s[pos++] - 63;
    if (n < 0 || n > 62) throw parse_error("graph6: bad order byte");
  }
  long long nbits = (long long)n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  need(size_t(nbytes));
  if (pos + size_t(nbytes) != s.size())
    throw parse_error("graph6: trailing bytes after adjacency data");
  Graph g(n);
  long long bit = 0;
  for (int j = 1; j < n; j++)
    for (int i = 0; i < j; i++, bit++) {
      int c = s[pos + size_t(bit / 6)] - 63;
      if (c < 0 || c > 63) throw parse_error("graph6: byte out of range");
      if ((c >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  return g;
}

std::string edgelist_encode(const Graph& g) {
  std::ostringstream out;
  out << "# n " << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph edgelist_decode(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int declared_n = -1;
  std::vector<std::pair<int, int>> edges;
  int max_id = -1;
  while (std::getline(in, line)) {
    lineno++;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') {
      std::istringstream hs(line.substr(start + 1));
      std::string key;
      long long val;
      if (hs >> key >> val && key == "n") declared_n = int(val);
      continue;
    }
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u >> v)) throw parse_error("edgelist: line " + std::to_string(lineno) + ": expected two vertex ids");
    std::string rest;
    if (ls >> rest && rest[0] != '#')
      throw parse_error("edgelist: line " + std::to_string(lineno) + ": trailing tokens");
    if (u < 0 || v < 0)
      throw parse_error("edgelist: line " + std::to_string(lineno) + ": negative vertex id");
    if (u == v)
      throw parse_error("edgelist: line " + std::to_string(lineno) + ": loop edge");
    edges.emplace_back(int(u), int(v));
    max_id = std::max({max_id, int(u), int(v)});
  }
  int n = std::max(declared_n, max_id + 1);
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph decode(const std::string& data, GraphFormat fmt) {
  return fmt == GraphFormat::Graph6 ? graph6_decode(data) : edgelist_decode(data);
}

std::string encode(const Graph& g, GraphFormat fmt) {
  return fmt == GraphFormat::Graph6 ? graph6_encode(g) : edgelist_encode(g);
}

Graph read_graph_file(const std::string& path, GraphFormat fmt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();
  if (fmt == GraphFormat::Graph6) {
    while (!data.empty() && (data.back() == '\n' || data.back() == '\r')) data.pop_back();
  }
  return decode(data, fmt);
}

Graph read_graph_file(const std::string& path) {
  GraphFormat fmt = GraphFormat::EdgeList;
  if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") fmt = GraphFormat::Graph6;
  return read_graph_file(path, fmt);
}

}  // namespace prodwidth
