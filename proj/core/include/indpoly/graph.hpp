#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace indpoly {

/**
 * Undirected simple graph on dense 0-based vertex ids.
 *
 * Adjacency lists are sorted ascending and deduplicated; self-loops are
 * rejected at construction. Instances are immutable: every operation that
 * "modifies" a graph returns a new one.
 */
class Graph {
 public:
  Graph() = default;

  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Builds from an explicit vertex count and edge list. Throws
  // std::invalid_argument on out-of-range endpoints or self-loops.
  // Duplicate edges collapse to one.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const;
  const std::vector<int>& neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Text edge-list format: '#' starts a comment, blank lines are skipped,
// the first significant line must be "n <count>", every following line is
// "u v". Throws std::invalid_argument with a line number on malformed input.
Graph parse_edge_list(std::string_view text);

// Inverse of parse_edge_list (header line plus one line per edge).
std::string format_edge_list(const Graph& g);

// graph6 line format. Supports the short form (n <= 62) and the long
// three-byte form (n <= 258047); the eight-byte extension is rejected.
// Strict: length must match exactly and padding bits must be zero.
Graph parse_graph6(std::string_view line);
std::string format_graph6(const Graph& g);

// One connected piece of a graph together with the original ids of its
// vertices: vertices[i] is the original id of the piece's vertex i.
// The relabeling is order-preserving.
struct Component {
  Graph graph;
  std::vector<int> vertices;
};

// Connected components, ordered by their smallest original vertex id.
std::vector<Component> connected_components(const Graph& g);

// v together with its neighbors, sorted ascending.
std::vector<int> closed_neighborhood(const Graph& g, int v);

// Graph induced on the complement of `removed` (duplicates allowed).
// Kept vertices are relabeled compactly in increasing order of original id.
Graph delete_vertices(const Graph& g, const std::vector<int>& removed);

// Connected and acyclic; the empty graph (n = 0) does not count.
bool is_tree(const Graph& g);

/**
 * Rooted tree on dense 0-based ids, stored as a parent array with
 * parent[root] == -1. Construction validates that the parent pointers
 * form a single tree reaching every vertex.
 */
class Tree {
 public:
  Tree(int root, std::vector<int> parent);

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int root() const { return root_; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parents() const { return parent_; }

  // Children lists, each sorted ascending.
  std::vector<std::vector<int>> children() const;

  Graph to_graph() const;

  // Roots a tree-shaped graph at the given vertex, keeping vertex ids.
  // Throws std::invalid_argument if g is not a tree or root is out of range.
  static Tree from_graph(const Graph& g, int root);

 private:
  int root_ = 0;
  std::vector<int> parent_;
};

}  // namespace indpoly
