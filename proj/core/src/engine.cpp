#include "indpoly/engine.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace indpoly {

namespace {

constexpr int kMaxExpansionDepth = 10000;

// Connected graph only. Expands on a maximum-degree vertex; once the piece
// decomposes, each part recurses through the component split again.
Polynomial connected_general(const Graph& g, int depth);

Polynomial general_impl(const Graph& g, int depth) {
  if (depth > kMaxExpansionDepth) {
    throw std::runtime_error("independence polynomial expansion exceeded depth limit");
  }
  if (g.vertex_count() == 0) return Polynomial::one();
  Polynomial acc = Polynomial::one();
  for (const Component& comp : connected_components(g)) {
    acc *= connected_general(comp.graph, depth);
  }
  return acc;
}

Polynomial connected_general(const Graph& g, int depth) {
  const int n = g.vertex_count();
  if (n == 1) return Polynomial({mpz_class(1), mpz_class(1)});
  int pivot = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) > g.degree(pivot)) pivot = v;
  }
  Polynomial without = general_impl(delete_vertices(g, {pivot}), depth + 1);
  Polynomial with = general_impl(delete_vertices(g, closed_neighborhood(g, pivot)), depth + 1);
  return without + with.shifted();
}

}  // namespace

Polynomial independence_polynomial_general(const Graph& g) { return general_impl(g, 0); }

Polynomial independence_polynomial_tree(const Tree& t) {
  const int n = t.vertex_count();
  // For each vertex: the polynomial of its subtree restricted to the vertex
  // being excluded from, or included in, the independent set. Processing in
  // reverse preorder sees every child before its parent.
  std::vector<Polynomial> excluded(n, Polynomial::one());
  std::vector<Polynomial> included(n, Polynomial::one());

  std::vector<int> preorder;
  preorder.reserve(n);
  const auto children = t.children();
  std::vector<int> stack = {t.root()};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    preorder.push_back(v);
    for (int c : children[v]) stack.push_back(c);
  }

  for (std::size_t i = preorder.size(); i-- > 0;) {
    int v = preorder[i];
    included[v] = included[v].shifted();
    if (v != t.root()) {
      int p = t.parent(v);
      excluded[p] *= excluded[v] + included[v];
      included[p] *= excluded[v];
    }
  }
  return excluded[t.root()] + included[t.root()];
}

Polynomial independence_polynomial_bruteforce(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw std::invalid_argument("brute force supports at most 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << w;
  }
  std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint32_t limit = n == 0 ? 1 : (std::uint32_t{1} << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool ok = true;
    for (std::uint32_t rest = mask; rest;) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      if (nbr[v] & mask) {
        ok = false;
        break;
      }
    }
    if (ok) ++counts[__builtin_popcount(mask)];
  }
  return Polynomial(std::move(counts));
}

Polynomial independence_polynomial(const Graph& g) {
  if (is_tree(g)) return independence_polynomial_tree(Tree::from_graph(g, 0));
  return independence_polynomial_general(g);
}

int independence_number(const Graph& g) { return independence_polynomial(g).degree(); }

}  // namespace indpoly
