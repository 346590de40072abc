#include "oddtree/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "oddtree/error.hpp"

namespace oddtree {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::InvalidParity: return "InvalidParity";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::SizeGuard: return "SizeGuard";
  }
  return "Unknown";
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph new_graph(std::size_t n, std::span<const LabeledEdge> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 1 || b < 1 || static_cast<unsigned long long>(a) > n ||
        static_cast<unsigned long long>(b) > n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") has an endpoint outside 1.." + std::to_string(n));
    }
    if (a == b) {
      throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(a));
    }
    Vertex u = static_cast<Vertex>(std::min(a, b) - 1);
    Vertex v = static_cast<Vertex>(std::max(a, b) - 1);
    g.edges_.push_back({u, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorKind::DuplicateEdge, "duplicate edge (" + std::to_string(dup->u + 1) +
                                              "," + std::to_string(dup->v + 1) + ")");
  }
  g.adjacency_.assign(n, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

namespace {

// Splits a line into whitespace-separated unsigned integers.
bool parse_numbers(std::string_view line, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{}) return false;
    std::size_t next = static_cast<std::size_t>(ptr - line.data());
    if (next < line.size() && line[next] != ' ' && line[next] != '\t') return false;
    out.push_back(value);
    i = next;
  }
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<long long> nums;
  std::vector<LabeledEdge> edges;
  long long n = -1;
  long long m = -1;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    last_line = line_no;

    if (!parse_numbers(line, nums) || nums.size() != 2) {
      throw ParseError(line_no, "expected two integers");
    }
    if (n < 0) {
      if (nums[0] < 0 || nums[1] < 0) throw ParseError(line_no, "negative header value");
      n = nums[0];
      m = nums[1];
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(line_no, "more edges than the declared " + std::to_string(m));
    }
    edges.emplace_back(nums[0], nums[1]);
  }

  if (n < 0) throw ParseError(line_no + 1, "missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(last_line, "declared " + std::to_string(m) + " edges, found " +
                                    std::to_string(edges.size()));
  }
  return new_graph(static_cast<std::size_t>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace oddtree
