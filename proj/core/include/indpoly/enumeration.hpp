#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "indpoly/graph.hpp"

namespace indpoly {

// Depth sequence of a rooted tree in preorder: entry 0 is 0 (the root),
// every later entry is at least 1 and at most its predecessor plus one.
using LevelSequence = std::vector<int>;

// Decodes a level sequence: vertex ids are preorder positions, rooted at 0.
// Throws std::invalid_argument on malformed input.
Tree tree_from_level_sequence(const LevelSequence& seq);

// Isomorphism-invariant encoding of a tree as nested parentheses rooted at
// the centroid (for a centroid pair, the smaller of the two rooted
// encodings). Equal strings <=> isomorphic trees.
std::string canonical_form(const Graph& tree);

/**
 * Streams every isomorphism class of free trees on n vertices exactly once,
 * as level sequences.
 *
 * Classes with a unique centroid come first (phase 0), encoded rooted at
 * the centroid; for even n the centroid-pair classes follow (phase 1),
 * encoded as one rooted half followed by the other half shifted one level
 * down, larger half first. Within a phase the emitted sequences strictly
 * decrease lexicographically, so (phase, sequence) orders the whole stream.
 */
class FreeTreeEnumerator {
 public:
  // 1 <= n <= 32.
  explicit FreeTreeEnumerator(int n);
  FreeTreeEnumerator(FreeTreeEnumerator&&) noexcept;
  FreeTreeEnumerator& operator=(FreeTreeEnumerator&&) noexcept;
  ~FreeTreeEnumerator();

  // Fresh enumerator positioned at the first tree of `phase` whose sequence
  // starts with `prefix`. The prefix must be a slice of some emitted
  // sequence of that phase; for phase 1 it must not reach past the first
  // half (length <= n/2).
  static FreeTreeEnumerator at(int n, int phase, const LevelSequence& prefix);

  bool done() const;
  // 0 or 1 while trees remain, 2 once exhausted.
  int phase() const;
  const LevelSequence& levels() const;
  Tree tree() const;

  void advance();

  // Skips every remaining tree of the current phase whose sequence shares
  // the current one's first `len` entries (1 <= len <= n; phase 1 requires
  // len <= n/2). Continues into the next phase when this drains the
  // current one.
  void skip_prefix(std::size_t len);

 private:
  struct Impl;
  FreeTreeEnumerator();
  std::unique_ptr<Impl> impl_;
};

std::uint64_t count_free_trees(int n);

namespace detail {
// Number of rooted tree classes on n vertices (cross-check hook for the
// sequence cursor underlying FreeTreeEnumerator).
std::uint64_t count_rooted_trees(int n);
}  // namespace detail

}  // namespace indpoly
