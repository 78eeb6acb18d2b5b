#include <benchmark/benchmark.h>

#include <vector>

#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/families.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/search.hpp"

using namespace indpoly;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

void BM_tree_dp_26(benchmark::State& state) {
  Tree t = build_named_tree(NamedTree::T1);
  for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial_tree(t));
}
BENCHMARK(BM_tree_dp_26);

void BM_tree_dp_35(benchmark::State& state) {
  Tree t = build_named_tree(NamedTree::Ex35);
  for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial_tree(t));
}
BENCHMARK(BM_tree_dp_35);

void BM_general_engine_26(benchmark::State& state) {
  Graph g = build_named_tree(NamedTree::T1).to_graph();
  for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial_general(g));
}
BENCHMARK(BM_general_engine_26);

void BM_tree_dp_path_500(benchmark::State& state) {
  Tree t = Tree::from_graph(path_graph(500), 0);
  for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial_tree(t));
}
BENCHMARK(BM_tree_dp_path_500);

void BM_brute_force_20(benchmark::State& state) {
  Graph g = build_family_tree({HubStyle::ThreeK2, 1}, 2).to_graph();  // 20 vertices
  for (auto _ : state) benchmark::DoNotOptimize(independence_polynomial_bruteforce(g));
}
BENCHMARK(BM_brute_force_20);

void BM_enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for (FreeTreeEnumerator e(n); !e.done(); e.advance()) ++count;
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count_free_trees(n)));
}
BENCHMARK(BM_enumerate)->Arg(12)->Arg(15)->Arg(17);

void BM_scan_order(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t scanned = 0;
    for (FreeTreeEnumerator e(n); !e.done(); e.advance()) {
      Polynomial p = independence_polynomial_tree(e.tree());
      scanned += check_log_concave(p).log_concave ? 1 : 0;
    }
    benchmark::DoNotOptimize(scanned);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count_free_trees(n)));
}
BENCHMARK(BM_scan_order)->Arg(13)->Arg(15);

void BM_poly_multiply(benchmark::State& state) {
  Polynomial a = independence_polynomial_tree(build_named_tree(NamedTree::T1));
  Polynomial b = independence_polynomial_tree(build_named_tree(NamedTree::Ex35));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_multiply);

}  // namespace

BENCHMARK_MAIN();
