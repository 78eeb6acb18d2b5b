#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indpoly/checks.hpp"
#include "indpoly/polynomial.hpp"

namespace indpoly {

// What a scan flags. AlwaysMatch is a test hook that flags every tree, so
// the reporting pipeline can be exercised on orders where the real
// predicates match nothing.
enum class PredicateKind { NonLogConcave, NonUnimodal, OffsetAtLeast, AlwaysMatch };

struct SearchPredicate {
  PredicateKind kind = PredicateKind::NonLogConcave;
  int min_offset = 0;  // OffsetAtLeast only

  bool matches(const Polynomial& poly) const;

  // "non-log-concave", "non-unimodal" or "offset-at-least:<D>".
  static std::optional<SearchPredicate> parse(std::string_view text);
  std::string name() const;
};

struct SearchJob {
  int min_n = 1;
  int max_n = 1;
  int workers = 1;
  SearchPredicate predicate;

  // Flagged trees go to this file as JSON lines; empty means stdout.
  std::string output_path;
  // When set, progress is committed here after every flushed chunk; resume
  // picks up after the last committed chunk, truncating the output file
  // back to the committed byte count. Requires output_path.
  std::string checkpoint_path;
  bool resume = false;

  // Fraction of scanned trees re-checked through an independent pipeline
  // (graph6 round trip plus the general-graph engine). 0 disables.
  double verify_fraction = 0.01;

  // Test hook: stop (reporting complete = false) once this many chunks
  // have been flushed in this run. 0 means run to the end.
  std::uint64_t stop_after_chunks = 0;
};

struct CounterexampleRecord {
  int n = 0;
  std::string graph6;
  int alpha = 0;
  std::vector<std::string> coeffs;  // decimal strings, ascending exponent
  std::vector<ConcavityViolation> violations;

  // One JSON object with keys n, graph6, alpha, coeffs, violations.
  std::string to_json_line() const;
};

struct OrderTally {
  int n = 0;
  std::uint64_t trees_scanned = 0;
  std::uint64_t counterexamples = 0;
  double seconds = 0;
};

struct SearchSummary {
  std::vector<OrderTally> per_order;  // ascending n, one entry per order
  std::uint64_t records_written = 0;
  std::uint64_t chunks_flushed = 0;  // lifetime count, including resumed-over chunks
  bool complete = true;
};

// Scans every free tree with min_n <= n <= max_n for the predicate. The
// output and checkpoint behavior is byte-deterministic: it depends only on
// the job parameters, never on the worker count or scheduling.
SearchSummary run_search(const SearchJob& job);

}  // namespace indpoly
