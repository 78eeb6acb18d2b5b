#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/search.hpp"
#include "indpoly/verify.hpp"

using indpoly::CounterexampleRecord;
using indpoly::PredicateKind;
using indpoly::run_search;
using indpoly::SearchJob;
using indpoly::SearchPredicate;
using indpoly::SearchSummary;

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("indpoly-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int value = 0;
    return value;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  REQUIRE(is);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

SearchPredicate always{PredicateKind::AlwaysMatch, 0};
SearchPredicate non_log_concave{PredicateKind::NonLogConcave, 0};

}  // namespace

TEST_CASE("predicate parsing") {
  auto p = SearchPredicate::parse("non-log-concave");
  REQUIRE(p.has_value());
  CHECK(p->kind == PredicateKind::NonLogConcave);
  CHECK(SearchPredicate::parse("non-unimodal")->kind == PredicateKind::NonUnimodal);
  auto offset = SearchPredicate::parse("offset-at-least:2");
  REQUIRE(offset.has_value());
  CHECK(offset->kind == PredicateKind::OffsetAtLeast);
  CHECK(offset->min_offset == 2);
  CHECK(offset->name() == "offset-at-least:2");

  CHECK_FALSE(SearchPredicate::parse("").has_value());
  CHECK_FALSE(SearchPredicate::parse("bogus").has_value());
  CHECK_FALSE(SearchPredicate::parse("offset-at-least:").has_value());
  CHECK_FALSE(SearchPredicate::parse("offset-at-least:xyz").has_value());
  CHECK_FALSE(SearchPredicate::parse("offset-at-least:2q").has_value());
  CHECK_FALSE(SearchPredicate::parse("offset-at-least:-1").has_value());
}

TEST_CASE("predicates recognize the reference polynomials") {
  using indpoly::NamedTree;
  indpoly::Polynomial t1 = indpoly::reference_polynomial(NamedTree::T1);
  indpoly::Polynomial ex35 = indpoly::reference_polynomial(NamedTree::Ex35);

  CHECK(non_log_concave.matches(t1));
  CHECK(SearchPredicate{PredicateKind::OffsetAtLeast, 1}.matches(t1));
  CHECK_FALSE(SearchPredicate{PredicateKind::OffsetAtLeast, 2}.matches(t1));
  CHECK(SearchPredicate{PredicateKind::OffsetAtLeast, 2}.matches(ex35));
  CHECK_FALSE(SearchPredicate{PredicateKind::OffsetAtLeast, 3}.matches(ex35));
  // The counterexamples are all unimodal.
  CHECK_FALSE(SearchPredicate{PredicateKind::NonUnimodal, 0}.matches(t1));
  CHECK_FALSE(SearchPredicate{PredicateKind::NonUnimodal, 0}.matches(ex35));
}

TEST_CASE("record rendering escapes graph6 payloads") {
  CounterexampleRecord rec;
  rec.n = 2;
  rec.graph6 = "A\\\"";
  rec.alpha = 1;
  rec.coeffs = {"1", "2"};
  CHECK(rec.to_json_line() ==
        "{\"n\": 2, \"graph6\": \"A\\\\\\\"\", \"alpha\": 1, "
        "\"coeffs\": [\"1\", \"2\"], \"violations\": []}");
}

TEST_CASE("small orders have no counterexamples") {
  SearchJob job;
  job.min_n = 1;
  job.max_n = 10;
  job.predicate = non_log_concave;
  SearchSummary summary = run_search(job);
  CHECK(summary.complete);
  CHECK(summary.records_written == 0);
  REQUIRE(summary.per_order.size() == 10);
  for (const auto& tally : summary.per_order) {
    CHECK(tally.counterexamples == 0);
    CHECK(tally.trees_scanned == indpoly::count_free_trees(tally.n));
  }
}

TEST_CASE("always-match output is deterministic across worker counts") {
  std::vector<std::string> outputs;
  for (int workers : {1, 3, 7}) {
    TempDir dir;
    SearchJob job;
    job.min_n = 8;
    job.max_n = 11;
    job.workers = workers;
    job.predicate = always;
    job.output_path = dir.file("out.jsonl");
    SearchSummary summary = run_search(job);
    CHECK(summary.complete);
    CHECK(summary.records_written == 23 + 47 + 106 + 235);
    outputs.push_back(slurp(job.output_path));
  }
  CHECK(outputs[0] == outputs[1]);
  CHECK(outputs[0] == outputs[2]);
}

TEST_CASE("records are valid json lines with faithful content") {
  TempDir dir;
  SearchJob job;
  job.min_n = 7;
  job.max_n = 8;
  job.predicate = always;
  job.output_path = dir.file("out.jsonl");
  run_search(job);

  std::ifstream is(job.output_path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(is, line)) {
    ++lines;
    nlohmann::json doc = nlohmann::json::parse(line);
    REQUIRE(doc.is_object());
    CHECK(doc.size() == 5);
    int n = doc.at("n").get<int>();
    CHECK((n == 7 || n == 8));
    indpoly::Graph g = indpoly::parse_graph6(doc.at("graph6").get<std::string>());
    CHECK(g.vertex_count() == n);
    CHECK(indpoly::is_tree(g));
    indpoly::Polynomial p = indpoly::independence_polynomial_general(g);
    CHECK(p.degree() == doc.at("alpha").get<int>());
    const auto& coeffs = doc.at("coeffs");
    REQUIRE(coeffs.size() == static_cast<std::size_t>(p.degree()) + 1);
    for (int k = 0; k <= p.degree(); ++k) {
      CHECK(p.coeff(k).get_str() == coeffs[k].get<std::string>());
    }
    CHECK(doc.at("violations").empty());
  }
  CHECK(lines == 11 + 23);
}

TEST_CASE("full verification fraction recomputes every tree") {
  SearchJob job;
  job.min_n = 1;
  job.max_n = 9;
  job.predicate = non_log_concave;
  job.verify_fraction = 1.0;
  CHECK_NOTHROW(run_search(job));
}

TEST_CASE("resumed runs reproduce uninterrupted output") {
  TempDir dir;
  SearchJob base;
  base.min_n = 8;
  base.max_n = 12;
  base.predicate = always;

  SearchJob uninterrupted = base;
  uninterrupted.output_path = dir.file("full.jsonl");
  SearchSummary full = run_search(uninterrupted);
  std::string full_bytes = slurp(uninterrupted.output_path);

  SearchJob stopped = base;
  stopped.output_path = dir.file("resumed.jsonl");
  stopped.checkpoint_path = dir.file("ckpt.json");
  stopped.stop_after_chunks = 3;
  SearchSummary first = run_search(stopped);
  CHECK_FALSE(first.complete);
  CHECK(first.chunks_flushed == 3);

  // Second leg stops again mid-flight, third leg finishes.
  SearchJob middle = stopped;
  middle.resume = true;
  middle.stop_after_chunks = 2;
  SearchSummary second = run_search(middle);
  CHECK_FALSE(second.complete);
  CHECK(second.chunks_flushed == 5);

  SearchJob final_leg = stopped;
  final_leg.resume = true;
  final_leg.stop_after_chunks = 0;
  SearchSummary finished = run_search(final_leg);
  CHECK(finished.complete);
  CHECK(slurp(stopped.output_path) == full_bytes);
  CHECK(finished.records_written == full.records_written);
  REQUIRE(finished.per_order.size() == full.per_order.size());
  for (std::size_t i = 0; i < full.per_order.size(); ++i) {
    CHECK(finished.per_order[i].n == full.per_order[i].n);
    CHECK(finished.per_order[i].trees_scanned == full.per_order[i].trees_scanned);
    CHECK(finished.per_order[i].counterexamples == full.per_order[i].counterexamples);
  }

  // Resuming a finished run is a no-op.
  SearchSummary again = run_search(final_leg);
  CHECK(again.complete);
  CHECK(slurp(stopped.output_path) == full_bytes);
}

TEST_CASE("resume with a missing checkpoint starts fresh") {
  TempDir dir;
  SearchJob job;
  job.min_n = 6;
  job.max_n = 8;
  job.predicate = always;
  job.output_path = dir.file("out.jsonl");
  job.checkpoint_path = dir.file("never-written.json");
  job.resume = true;
  SearchSummary summary = run_search(job);
  CHECK(summary.complete);
  CHECK(summary.records_written == 6 + 11 + 23);
}

TEST_CASE("checkpoints from other configurations are rejected") {
  TempDir dir;
  SearchJob job;
  job.min_n = 5;
  job.max_n = 9;
  job.predicate = always;
  job.output_path = dir.file("out.jsonl");
  job.checkpoint_path = dir.file("ckpt.json");
  job.stop_after_chunks = 1;
  run_search(job);

  SearchJob other = job;
  other.resume = true;
  other.max_n = 10;
  CHECK_THROWS_AS(run_search(other), std::runtime_error);
  other.max_n = 9;
  other.predicate = non_log_concave;
  CHECK_THROWS_AS(run_search(other), std::runtime_error);
}

TEST_CASE("corrupt checkpoints are rejected") {
  TempDir dir;
  SearchJob job;
  job.min_n = 5;
  job.max_n = 6;
  job.predicate = always;
  job.output_path = dir.file("out.jsonl");
  job.checkpoint_path = dir.file("ckpt.json");
  job.resume = true;
  {
    std::ofstream os(job.output_path);
    std::ofstream ck(job.checkpoint_path);
    ck << "{not json";
  }
  CHECK_THROWS_AS(run_search(job), std::runtime_error);
}

TEST_CASE("job validation") {
  SearchJob job;
  job.predicate = always;

  job.min_n = 0;
  CHECK_THROWS_AS(run_search(job), std::invalid_argument);
  job.min_n = 5;
  job.max_n = 4;
  CHECK_THROWS_AS(run_search(job), std::invalid_argument);
  job.max_n = 33;
  CHECK_THROWS_AS(run_search(job), std::invalid_argument);
  job.max_n = 6;
  job.workers = 0;
  CHECK_THROWS_AS(run_search(job), std::invalid_argument);
  job.workers = 1;
  job.verify_fraction = 1.5;
  CHECK_THROWS_AS(run_search(job), std::invalid_argument);
  job.verify_fraction = 0.01;
  job.checkpoint_path = "somewhere.json";
  CHECK_THROWS_AS(run_search(job), std::invalid_argument);  // checkpoint without output
  job.checkpoint_path.clear();
  job.resume = true;
  CHECK_THROWS_AS(run_search(job), std::invalid_argument);  // resume without checkpoint
}
