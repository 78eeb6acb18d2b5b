#include "indpoly/enumeration.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace indpoly {

Tree tree_from_level_sequence(const LevelSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("level sequence must be nonempty");
  if (seq[0] != 0) throw std::invalid_argument("level sequence must start at depth 0");
  const int n = static_cast<int>(seq.size());
  std::vector<int> parent(n, -1);
  std::vector<int> latest(n + 1, -1);  // most recent vertex seen at each depth
  latest[0] = 0;
  for (int i = 1; i < n; ++i) {
    int d = seq[i];
    if (d < 1 || d > seq[i - 1] + 1) {
      throw std::invalid_argument("level sequence depth out of range");
    }
    parent[i] = latest[d - 1];
    latest[d] = i;
  }
  return Tree(0, std::move(parent));
}

namespace {

std::string ahu_encode(const Graph& g, int root) {
  const int n = g.vertex_count();
  std::vector<int> parent(n, -2), order;
  order.reserve(n);
  std::vector<int> stack = {root};
  parent[root] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> kid_codes(n);
  std::string root_code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    auto& ks = kid_codes[v];
    std::sort(ks.begin(), ks.end());
    std::string code = "(";
    for (const auto& k : ks) code += k;
    code += ")";
    if (parent[v] >= 0) {
      kid_codes[parent[v]].push_back(std::move(code));
    } else {
      root_code = std::move(code);
    }
  }
  return root_code;
}

std::vector<int> tree_centroids(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> parent(n, -2), order, size(n, 1);
  order.reserve(n);
  std::vector<int> stack = {0};
  parent[0] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  }
  std::vector<int> out;
  int best = n + 1;
  for (int v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (int w : g.neighbors(v)) {
      if (parent[w] == v) heaviest = std::max(heaviest, size[w]);
    }
    if (heaviest < best) {
      best = heaviest;
      out = {v};
    } else if (heaviest == best) {
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

std::string canonical_form(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("canonical form requires a tree");
  std::vector<int> cs = tree_centroids(tree);
  std::string code = ahu_encode(tree, cs[0]);
  if (cs.size() == 2) code = std::min(code, ahu_encode(tree, cs[1]));
  return code;
}

namespace {

/**
 * Canonical level sequences of rooted trees on m vertices, visited in
 * decreasing lexicographic order, with a ceiling `cap` on the size of every
 * depth-one subtree ("root block"). cap >= m - 1 disables the ceiling.
 *
 * Canonical means lexicographically greatest over all preorder depth
 * sequences of the tree; equivalently, every vertex lists its child
 * subtrees in non-increasing sequence order. While extending a prefix, the
 * one binding constraint is the outermost child block still running equal
 * to its left sibling; the cursor tracks it as a window [win_q, win_p)
 * into the sequence: position i may go at most as deep as the sibling
 * entry at win_q + (i - win_p) mod (win_p - win_q). A maximal fill simply
 * cycles through the window, which closes each block at the sibling's size
 * and opens the next one.
 */
class SequenceCursor {
 public:
  SequenceCursor(int m, int cap) : m_(m), cap_(cap), level_(m), rbsize_(m) {
    level_[0] = 0;
    rbsize_[0] = 0;
    settle();
  }

  bool done() const { return done_; }

  // Complete current sequence; meaningful only while !done().
  const std::vector<int>& levels() const { return level_; }

  // Advances to the next sequence.
  void step() {
    if (!done_) {
      jump(len_ - 1);
      settle();
    }
  }

  // Skips every remaining sequence that shares the current first `len`
  // entries (including the current one).
  void skip(int len) {
    if (len < 1 || len > len_) throw std::invalid_argument("bad skip length");
    if (!done_) {
      jump(len - 1);
      settle();
    }
  }

  // Restarts at the greatest valid sequence extending `prefix`. The prefix
  // must itself be canonical and within the cap.
  void seek(const std::vector<int>& prefix) {
    if (prefix.empty() || prefix[0] != 0 || static_cast<int>(prefix.size()) > m_) {
      throw std::invalid_argument("bad level sequence prefix");
    }
    len_ = 1;
    win_active_ = false;
    done_ = false;
    for (std::size_t i = 1; i < prefix.size(); ++i) place_checked(prefix[i]);
    settle();
  }

 private:
  int m_, cap_;
  std::vector<int> level_, rbsize_;  // rbsize_[i]: root block size up to i
  int len_ = 1;
  bool win_active_ = false;
  int win_q_ = 0, win_p_ = 0;
  bool done_ = false;

  // Deepest allowed entry at position len_.
  int bound() const {
    if (!win_active_) return level_[len_ - 1] + 1;
    int span = win_p_ - win_q_;
    return level_[win_q_ + (len_ - win_p_) % span];
  }

  // The vertex about to sit at position len_ goes shallower than the
  // running match allows, so the binding constraint becomes its own fresh
  // block against its previous sibling block, when one exists.
  void rewindow(int d) {
    int j = len_ - 1;
    while (level_[j] > d) --j;
    if (level_[j] == d) {
      win_active_ = true;
      win_q_ = j;
      win_p_ = len_;
    } else {
      win_active_ = false;  // first child of its parent: unconstrained
    }
  }

  void write(int d) {
    level_[len_] = d;
    rbsize_[len_] = d == 1 ? 1 : rbsize_[len_ - 1] + 1;
    ++len_;
  }

  // Greedy maximal extension. Returns the index that overflowed the cap,
  // or -1 once the sequence is complete.
  int fill() {
    while (len_ < m_) {
      write(bound());
      if (rbsize_[len_ - 1] > cap_) return len_ - 1;
    }
    return -1;
  }

  // Skips every sequence sharing the prefix through index i: lowers the
  // rightmost entry at or before i that can still go shallower, regrowing
  // maximally afterwards. Loops because the lowered entry may extend the
  // same overfull root block.
  void jump(int i) {
    for (;;) {
      int p = i;
      while (p >= 1 && level_[p] < 2) --p;
      if (p < 1) {
        done_ = true;
        return;
      }
      int d = level_[p] - 1;
      len_ = p;
      rewindow(d);  // always a strict deviation, so the window resets
      write(d);
      if (rbsize_[len_ - 1] <= cap_) return;
      i = p;
    }
  }

  // Completes the current prefix into the greatest valid sequence,
  // pruning whole prefixes as their root blocks overflow.
  void settle() {
    while (!done_) {
      int viol = fill();
      if (viol < 0) return;
      jump(viol);
    }
  }

  // Validating replay of one externally supplied entry.
  void place_checked(int d) {
    int b = bound();
    if (d < 1 || d > b) throw std::invalid_argument("prefix is not canonical");
    if (win_active_ ? d < b : d <= level_[len_ - 1]) rewindow(d);
    write(d);
    if (rbsize_[len_ - 1] > cap_) throw std::invalid_argument("prefix breaks the block cap");
  }
};

bool starts_with(const LevelSequence& seq, const LevelSequence& prefix) {
  return seq.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), seq.begin());
}

}  // namespace

struct FreeTreeEnumerator::Impl {
  int n = 0;
  int phase = 2;
  std::optional<SequenceCursor> uni;   // phase 0: unique-centroid trees
  std::optional<SequenceCursor> a, b;  // phase 1: centroid-pair halves
  LevelSequence buffer;

  void refresh() {
    if (phase == 0) {
      buffer = uni->levels();
    } else if (phase == 1) {
      buffer = a->levels();
      for (int d : b->levels()) buffer.push_back(d + 1);
    }
  }

  void enter_pair_phase() {
    if (n % 2 != 0) {
      phase = 2;
      return;
    }
    phase = 1;
    a.emplace(n / 2, n);
    b = a;
    refresh();
  }

  void advance() {
    if (phase == 0) {
      uni->step();
      if (uni->done()) {
        enter_pair_phase();
      } else {
        refresh();
      }
    } else if (phase == 1) {
      b->step();
      if (b->done()) {
        a->step();
        if (a->done()) {
          phase = 2;
          return;
        }
        b = a;
      }
      refresh();
    }
  }

  void skip(std::size_t len) {
    if (phase == 0) {
      uni->skip(static_cast<int>(len));
      if (uni->done()) {
        enter_pair_phase();
      } else {
        refresh();
      }
    } else if (phase == 1) {
      if (len > static_cast<std::size_t>(n) / 2) {
        throw std::invalid_argument("phase 1 skip must stay within the first half");
      }
      a->skip(static_cast<int>(len));
      if (a->done()) {
        phase = 2;
        return;
      }
      b = a;
      refresh();
    }
  }
};

namespace {

void check_order(int n) {
  if (n < 1 || n > 32) throw std::invalid_argument("tree order must be between 1 and 32");
}

}  // namespace

FreeTreeEnumerator::FreeTreeEnumerator() : impl_(std::make_unique<Impl>()) {}

FreeTreeEnumerator::FreeTreeEnumerator(int n) : impl_(std::make_unique<Impl>()) {
  check_order(n);
  impl_->n = n;
  impl_->phase = 0;
  impl_->uni.emplace(n, (n - 1) / 2);
  if (impl_->uni->done()) {
    impl_->enter_pair_phase();
  } else {
    impl_->refresh();
  }
}

FreeTreeEnumerator::FreeTreeEnumerator(FreeTreeEnumerator&&) noexcept = default;
FreeTreeEnumerator& FreeTreeEnumerator::operator=(FreeTreeEnumerator&&) noexcept = default;
FreeTreeEnumerator::~FreeTreeEnumerator() = default;

FreeTreeEnumerator FreeTreeEnumerator::at(int n, int phase, const LevelSequence& prefix) {
  check_order(n);
  if (phase != 0 && phase != 1) throw std::invalid_argument("phase must be 0 or 1");
  FreeTreeEnumerator e;
  e.impl_->n = n;
  e.impl_->phase = phase;
  if (phase == 0) {
    e.impl_->uni.emplace(n, (n - 1) / 2);
    e.impl_->uni->seek(prefix);
    if (e.impl_->uni->done() || !starts_with(e.impl_->uni->levels(), prefix)) {
      e.impl_->phase = 2;  // no tree of this phase extends the prefix
      return e;
    }
  } else {
    if (n % 2 != 0) throw std::invalid_argument("phase 1 needs an even order");
    if (prefix.size() > static_cast<std::size_t>(n) / 2) {
      throw std::invalid_argument("phase 1 prefix must stay within the first half");
    }
    e.impl_->a.emplace(n / 2, n);
    e.impl_->a->seek(prefix);
    if (e.impl_->a->done() || !starts_with(e.impl_->a->levels(), prefix)) {
      e.impl_->phase = 2;
      return e;
    }
    e.impl_->b = e.impl_->a;
  }
  e.impl_->refresh();
  return e;
}

bool FreeTreeEnumerator::done() const { return impl_->phase == 2; }

int FreeTreeEnumerator::phase() const { return impl_->phase; }

const LevelSequence& FreeTreeEnumerator::levels() const {
  if (done()) throw std::logic_error("enumerator is exhausted");
  return impl_->buffer;
}

Tree FreeTreeEnumerator::tree() const { return tree_from_level_sequence(levels()); }

void FreeTreeEnumerator::advance() {
  if (done()) throw std::logic_error("enumerator is exhausted");
  impl_->advance();
}

void FreeTreeEnumerator::skip_prefix(std::size_t len) {
  if (done()) throw std::logic_error("enumerator is exhausted");
  if (len < 1 || len > impl_->buffer.size()) throw std::invalid_argument("bad prefix length");
  impl_->skip(len);
}

std::uint64_t count_free_trees(int n) {
  std::uint64_t count = 0;
  for (FreeTreeEnumerator e(n); !e.done(); e.advance()) ++count;
  return count;
}

namespace detail {

std::uint64_t count_rooted_trees(int n) {
  check_order(n);
  std::uint64_t count = 0;
  for (SequenceCursor c(n, n); !c.done(); c.step()) ++count;
  return count;
}

}  // namespace detail

}  // namespace indpoly
