#include "indpoly/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace indpoly {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) fail("vertex count must be nonnegative");
  n_ = n;
  adj_.assign(n, {});
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) fail("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) fail("edge endpoint out of range");
    if (u == v) fail("self-loops are not allowed");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj_) twice += nbrs.size();
  return twice / 2;
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) fail("vertex out of range");
  return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = neighbors(u);
  if (v < 0 || v >= n_) fail("vertex out of range");
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream is{std::string(line)};
    if (n < 0) {
      std::string tag;
      long long count = -1;
      if (!(is >> tag >> count) || tag != "n" || count < 0 || !(is >> std::ws).eof()) {
        fail("edge list line " + std::to_string(line_no) + ": expected header \"n <count>\"");
      }
      if (count > 1'000'000) fail("edge list header: vertex count too large");
      n = static_cast<int>(count);
    } else {
      long long u, v;
      if (!(is >> u >> v) || !(is >> std::ws).eof()) {
        fail("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
      }
      if (u < 0 || u >= n || v < 0 || v >= n) {
        fail("edge list line " + std::to_string(line_no) + ": endpoint out of range");
      }
      if (u == v) fail("edge list line " + std::to_string(line_no) + ": self-loop");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  if (n < 0) fail("edge list: missing \"n <count>\" header");
  return Graph::from_edges(n, edges);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

namespace {

constexpr int kG6Bias = 63;
constexpr int kG6MaxShort = 62;
constexpr int kG6MaxLong = 258047;

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::string_view s = trim(line);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) fail("graph6: empty input");

  std::size_t at = 0;
  auto take = [&]() -> int {
    if (at >= s.size()) fail("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s[at++]);
    if (c < kG6Bias || c > 126) fail("graph6: byte out of printable range");
    return c - kG6Bias;
  };

  long long n;
  if (s[0] == '~') {
    ++at;
    if (at < s.size() && s[at] == '~') fail("graph6: eight-byte size form is not supported");
    long long a = take(), b = take(), c = take();
    n = (a << 12) | (b << 6) | c;
    if (n <= kG6MaxShort) fail("graph6: long size form used for a small graph");
    if (n > kG6MaxLong) fail("graph6: vertex count out of range");
  } else {
    n = take();
  }

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() - at != nbytes) fail("graph6: body length does not match vertex count");

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    int val = take();
    for (int shift = 5; shift >= 0; --shift, ++bit) {
      bool set = (val >> shift) & 1;
      if (bit >= nbits) {
        if (set) fail("graph6: nonzero padding bits");
        continue;
      }
      if (set) {
        // Bit order: columns j = 1..n-1, rows i = 0..j-1 within each column.
        long long j = 1;
        while (j * (j - 1) / 2 + j <= bit) ++j;
        long long i = bit - j * (j - 1) / 2;
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string format_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  if (n > kG6MaxLong) fail("graph6: vertex count out of range");
  std::string out;
  if (n <= kG6MaxShort) {
    out.push_back(static_cast<char>(kG6Bias + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kG6Bias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kG6Bias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kG6Bias + (n & 63)));
  }
  int acc = 0, filled = 0;
  auto push_bit = [&](bool b) {
    acc = (acc << 1) | (b ? 1 : 0);
    if (++filled == 6) {
      out.push_back(static_cast<char>(kG6Bias + acc));
      acc = 0;
      filled = 0;
    }
  };
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) push_bit(g.has_edge(i, j));
  }
  if (filled) out.push_back(static_cast<char>(kG6Bias + (acc << (6 - filled))));
  return out;
}

std::vector<Component> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Component> out;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    std::vector<int> members;
    std::queue<int> q;
    label[start] = static_cast<int>(out.size());
    q.push(start);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      members.push_back(u);
      for (int w : g.neighbors(u)) {
        if (label[w] < 0) {
          label[w] = label[start];
          q.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<int> local(n, -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : members) {
      for (int w : g.neighbors(u)) {
        if (u < w) edges.emplace_back(local[u], local[w]);
      }
    }
    out.push_back({Graph::from_edges(static_cast<int>(members.size()), edges), std::move(members)});
  }
  return out;
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  std::vector<int> out = g.neighbors(v);
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

Graph delete_vertices(const Graph& g, const std::vector<int>& removed) {
  const int n = g.vertex_count();
  std::vector<char> gone(n, 0);
  for (int v : removed) {
    if (v < 0 || v >= n) fail("delete_vertices: vertex out of range");
    gone[v] = 1;
  }
  std::vector<int> remap(n, -1);
  int kept = 0;
  for (int v = 0; v < n; ++v) {
    if (!gone[v]) remap[v] = kept++;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    if (gone[u]) continue;
    for (int w : g.neighbors(u)) {
      if (u < w && !gone[w]) edges.emplace_back(remap[u], remap[w]);
    }
  }
  return Graph::from_edges(kept, edges);
}

bool is_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (g.edge_count() != static_cast<std::size_t>(n) - 1) return false;
  return connected_components(g).size() == 1;
}

Tree::Tree(int root, std::vector<int> parent) : root_(root), parent_(std::move(parent)) {
  const int n = vertex_count();
  if (n == 0) fail("tree must have at least one vertex");
  if (root_ < 0 || root_ >= n) fail("tree root out of range");
  if (parent_[root_] != -1) fail("tree root must have parent -1");
  for (int v = 0; v < n; ++v) {
    if (v == root_) continue;
    if (parent_[v] < 0 || parent_[v] >= n) fail("tree parent out of range");
  }
  // Walking up from every vertex must reach the root without revisiting.
  std::vector<char> state(n, 0);  // 0 unknown, 1 in progress, 2 reaches root
  state[root_] = 2;
  for (int v = 0; v < n; ++v) {
    int u = v;
    std::vector<int> path;
    while (state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = parent_[u];
    }
    if (state[u] == 1) fail("tree parent pointers contain a cycle");
    for (int w : path) state[w] = 2;
  }
}

std::vector<std::vector<int>> Tree::children() const {
  std::vector<std::vector<int>> out(parent_.size());
  for (int v = 0; v < vertex_count(); ++v) {
    if (v != root_) out[parent_[v]].push_back(v);
  }
  return out;
}

Graph Tree::to_graph() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(parent_.size() - 1);
  for (int v = 0; v < vertex_count(); ++v) {
    if (v != root_) edges.emplace_back(v, parent_[v]);
  }
  return Graph::from_edges(vertex_count(), edges);
}

Tree Tree::from_graph(const Graph& g, int root) {
  if (!is_tree(g)) fail("from_graph requires a tree");
  if (root < 0 || root >= g.vertex_count()) fail("tree root out of range");
  std::vector<int> parent(g.vertex_count(), -2);
  std::queue<int> q;
  parent[root] = -1;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if (parent[w] == -2) {
        parent[w] = u;
        q.push(w);
      }
    }
  }
  return Tree(root, std::move(parent));
}

}  // namespace indpoly
