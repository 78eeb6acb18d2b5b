#include "indpoly/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

#include "indpoly/engine.hpp"
#include "indpoly/enumeration.hpp"
#include "indpoly/graph.hpp"

namespace indpoly {

bool SearchPredicate::matches(const Polynomial& poly) const {
  switch (kind) {
    case PredicateKind::NonLogConcave:
      return !check_log_concave(poly).log_concave;
    case PredicateKind::NonUnimodal:
      return !check_unimodal(poly).unimodal;
    case PredicateKind::OffsetAtLeast: {
      for (const auto& v : check_log_concave(poly).violations) {
        if (v.offset >= min_offset) return true;
      }
      return false;
    }
    case PredicateKind::AlwaysMatch:
      return true;
  }
  return false;
}

std::optional<SearchPredicate> SearchPredicate::parse(std::string_view text) {
  if (text == "non-log-concave") return SearchPredicate{PredicateKind::NonLogConcave, 0};
  if (text == "non-unimodal") return SearchPredicate{PredicateKind::NonUnimodal, 0};
  constexpr std::string_view kOffset = "offset-at-least:";
  if (text.substr(0, kOffset.size()) == kOffset) {
    std::string rest(text.substr(kOffset.size()));
    std::size_t used = 0;
    int d;
    try {
      d = std::stoi(rest, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != rest.size() || d < 0) return std::nullopt;
    return SearchPredicate{PredicateKind::OffsetAtLeast, d};
  }
  return std::nullopt;
}

std::string SearchPredicate::name() const {
  switch (kind) {
    case PredicateKind::NonLogConcave:
      return "non-log-concave";
    case PredicateKind::NonUnimodal:
      return "non-unimodal";
    case PredicateKind::OffsetAtLeast:
      return "offset-at-least:" + std::to_string(min_offset);
    case PredicateKind::AlwaysMatch:
      return "always-match";
  }
  return "?";
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string CounterexampleRecord::to_json_line() const {
  std::ostringstream os;
  os << "{\"n\": " << n << ", \"graph6\": \"" << json_escape(graph6) << "\", \"alpha\": " << alpha
     << ", \"coeffs\": [";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ", ";
    os << '"' << coeffs[i] << '"';
  }
  os << "], \"violations\": [";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << ", ";
    os << "{\"k\": " << v.k << ", \"offset\": " << v.offset << ", \"lhs\": \"" << v.lhs.get_str()
       << "\", \"rhs\": \"" << v.rhs.get_str() << "\"}";
  }
  os << "]}";
  return os.str();
}

namespace {

struct Chunk {
  int n = 0;
  int phase = 0;
  LevelSequence prefix;
};

// Chunk granularity: full phases for small orders, prefix classes of this
// length for larger ones. Grows with n so chunks stay a useful size for
// work stealing and checkpointing.
std::size_t chunk_prefix_len(int n, int phase) {
  int d = std::clamp(n - 9, 1, 12);
  if (phase == 1) d = std::min(d, n / 2);
  return static_cast<std::size_t>(d);
}

std::vector<Chunk> build_chunk_plan(int min_n, int max_n) {
  std::vector<Chunk> plan;
  for (int n = min_n; n <= max_n; ++n) {
    FreeTreeEnumerator e(n);
    while (!e.done()) {
      std::size_t len = chunk_prefix_len(n, e.phase());
      const LevelSequence& cur = e.levels();
      plan.push_back({n, e.phase(), LevelSequence(cur.begin(), cur.begin() + len)});
      e.skip_prefix(len);
    }
  }
  return plan;
}

bool starts_with(const LevelSequence& seq, const LevelSequence& prefix) {
  return seq.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), seq.begin());
}

struct ChunkOutput {
  std::uint64_t scanned = 0;
  std::vector<CounterexampleRecord> records;
};

// Re-derives one scanned tree through an independent pipeline.
void self_check(const Tree& t, const Polynomial& claimed) {
  Graph g = t.to_graph();
  Graph back = parse_graph6(format_graph6(g));
  if (!(back == g)) throw std::runtime_error("self-check failed: graph6 round trip changed the graph");
  if (!(independence_polynomial_general(back) == claimed)) {
    throw std::runtime_error("self-check failed: engines disagree on a scanned tree");
  }
}

CounterexampleRecord make_record(int n, const Tree& t, const Polynomial& p) {
  CounterexampleRecord rec;
  rec.n = n;
  rec.graph6 = format_graph6(t.to_graph());
  rec.alpha = p.degree();
  rec.coeffs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rec.coeffs.push_back(c.get_str());
  rec.violations = check_log_concave(p).violations;
  return rec;
}

ChunkOutput process_chunk(const Chunk& chunk, const SearchPredicate& predicate,
                          std::uint64_t verify_stride) {
  ChunkOutput out;
  FreeTreeEnumerator e = FreeTreeEnumerator::at(chunk.n, chunk.phase, chunk.prefix);
  while (!e.done() && e.phase() == chunk.phase && starts_with(e.levels(), chunk.prefix)) {
    Tree t = e.tree();
    Polynomial p = independence_polynomial_tree(t);
    if (predicate.matches(p)) out.records.push_back(make_record(chunk.n, t, p));
    if (verify_stride != 0 && out.scanned % verify_stride == 0) self_check(t, p);
    ++out.scanned;
    e.advance();
  }
  return out;
}

std::string job_fingerprint(const SearchJob& job) {
  return "indpoly-search-v1;min=" + std::to_string(job.min_n) + ";max=" + std::to_string(job.max_n) +
         ";predicate=" + job.predicate.name();
}

struct CheckpointState {
  std::uint64_t last_chunk = 0;  // chunks flushed so far (plan index of next = last_chunk)
  std::uint64_t output_bytes = 0;
  std::uint64_t records_written = 0;
  std::uint64_t chunks_flushed = 0;
  std::vector<OrderTally> tallies;
};

void write_checkpoint(const std::string& path, const std::string& fingerprint,
                      const CheckpointState& state) {
  nlohmann::json tallies = nlohmann::json::array();
  for (const auto& t : state.tallies) {
    tallies.push_back({{"n", t.n},
                       {"trees_scanned", t.trees_scanned},
                       {"counterexamples", t.counterexamples},
                       {"seconds", t.seconds}});
  }
  nlohmann::json doc = {{"fingerprint", fingerprint},
                        {"chunks_done", state.last_chunk},
                        {"output_bytes", state.output_bytes},
                        {"records_written", state.records_written},
                        {"chunks_flushed", state.chunks_flushed},
                        {"tallies", tallies}};
  std::string tmp = path + ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write checkpoint file: " + tmp);
    os << doc.dump() << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot move checkpoint into place: " + path);
  }
}

std::optional<CheckpointState> read_checkpoint(const std::string& path,
                                               const std::string& fingerprint) {
  std::ifstream is(path);
  if (!is) return std::nullopt;  // nothing to resume from: start fresh
  nlohmann::json doc;
  try {
    is >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("checkpoint file is not valid JSON: " + std::string(e.what()));
  }
  if (doc.value("fingerprint", std::string()) != fingerprint) {
    throw std::runtime_error("checkpoint belongs to a different search configuration");
  }
  CheckpointState state;
  state.last_chunk = doc.at("chunks_done").get<std::uint64_t>();
  state.output_bytes = doc.at("output_bytes").get<std::uint64_t>();
  state.records_written = doc.at("records_written").get<std::uint64_t>();
  state.chunks_flushed = doc.at("chunks_flushed").get<std::uint64_t>();
  for (const auto& t : doc.at("tallies")) {
    state.tallies.push_back({t.at("n").get<int>(), t.at("trees_scanned").get<std::uint64_t>(),
                             t.at("counterexamples").get<std::uint64_t>(),
                             t.at("seconds").get<double>()});
  }
  return state;
}

}  // namespace

SearchSummary run_search(const SearchJob& job) {
  if (job.min_n < 1 || job.max_n > 32 || job.min_n > job.max_n) {
    throw std::invalid_argument("search orders must satisfy 1 <= min_n <= max_n <= 32");
  }
  if (job.workers < 1) throw std::invalid_argument("worker count must be positive");
  if (job.verify_fraction < 0 || job.verify_fraction > 1) {
    throw std::invalid_argument("verify fraction must lie in [0, 1]");
  }
  if (!job.checkpoint_path.empty() && job.output_path.empty()) {
    throw std::invalid_argument("checkpointing requires an output file");
  }
  if (job.resume && job.checkpoint_path.empty()) {
    throw std::invalid_argument("resume requires a checkpoint file");
  }

  const std::string fingerprint = job_fingerprint(job);
  const std::vector<Chunk> plan = build_chunk_plan(job.min_n, job.max_n);

  CheckpointState state;
  for (int n = job.min_n; n <= job.max_n; ++n) state.tallies.push_back({n, 0, 0, 0.0});

  if (job.resume) {
    if (auto loaded = read_checkpoint(job.checkpoint_path, fingerprint)) {
      state = std::move(*loaded);
      namespace fs = std::filesystem;
      std::error_code ec;
      auto size = fs::file_size(job.output_path, ec);
      if (ec) throw std::runtime_error("resume: cannot stat output file " + job.output_path);
      if (size < state.output_bytes) {
        throw std::runtime_error("resume: output file is shorter than the checkpoint recorded");
      }
      fs::resize_file(job.output_path, state.output_bytes, ec);
      if (ec) throw std::runtime_error("resume: cannot truncate output file " + job.output_path);
    }
  }
  const std::uint64_t first_chunk = job.resume ? state.last_chunk : 0;

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!job.output_path.empty()) {
    file_out.open(job.output_path,
                  first_chunk > 0 ? std::ios::app : std::ios::trunc);
    if (!file_out) throw std::runtime_error("cannot open output file: " + job.output_path);
    out = &file_out;
  }

  const std::uint64_t verify_stride =
      job.verify_fraction <= 0
          ? 0
          : std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(1.0 / job.verify_fraction)));

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, ChunkOutput> ready;
  std::exception_ptr failure;
  std::atomic<std::uint64_t> next_chunk{first_chunk};
  std::atomic<bool> stop{false};

  auto worker = [&] {
    for (;;) {
      if (stop.load()) return;
      std::uint64_t idx = next_chunk.fetch_add(1);
      if (idx >= plan.size()) return;
      ChunkOutput result;
      try {
        result = process_chunk(plan[idx], job.predicate, verify_stride);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        stop.store(true);
        cv.notify_all();
        return;
      }
      std::lock_guard<std::mutex> lock(mu);
      ready.emplace(idx, std::move(result));
      cv.notify_all();
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(job.workers);
  for (int i = 0; i < job.workers; ++i) threads.emplace_back(worker);

  SearchSummary summary;
  bool stopped_early = false;
  std::uint64_t flushed_this_run = 0;
  auto order_started = std::chrono::steady_clock::now();

  auto tally_for = [&state](int n) -> OrderTally& {
    for (auto& t : state.tallies) {
      if (t.n == n) return t;
    }
    throw std::logic_error("tally for an order outside the scanned range");
  };

  try {
    for (std::uint64_t idx = first_chunk; idx < plan.size(); ++idx) {
      if (job.stop_after_chunks != 0 && flushed_this_run >= job.stop_after_chunks) {
        stopped_early = true;
        break;
      }
      ChunkOutput output;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return failure || ready.count(idx) > 0; });
        if (failure) std::rethrow_exception(failure);
        output = std::move(ready.at(idx));
        ready.erase(idx);
      }
      for (const auto& rec : output.records) {
        std::string line = rec.to_json_line();
        line.push_back('\n');
        out->write(line.data(), static_cast<std::streamsize>(line.size()));
        state.output_bytes += line.size();
        ++state.records_written;
      }
      out->flush();
      if (!*out) throw std::runtime_error("writing search output failed");

      OrderTally& tally = tally_for(plan[idx].n);
      tally.trees_scanned += output.scanned;
      tally.counterexamples += output.records.size();
      bool order_ends = idx + 1 == plan.size() || plan[idx + 1].n != plan[idx].n;
      if (order_ends) {
        auto now = std::chrono::steady_clock::now();
        tally.seconds += std::chrono::duration<double>(now - order_started).count();
        order_started = now;
      }

      state.last_chunk = idx + 1;
      ++state.chunks_flushed;
      ++flushed_this_run;
      if (!job.checkpoint_path.empty()) {
        write_checkpoint(job.checkpoint_path, fingerprint, state);
      }
    }
  } catch (...) {
    stop.store(true);
    cv.notify_all();
    for (auto& t : threads) t.join();
    throw;
  }

  stop.store(true);
  cv.notify_all();
  for (auto& t : threads) t.join();
  {
    // A failure in any claimed chunk is an integrity problem even when the
    // writer stopped before needing that chunk.
    std::lock_guard<std::mutex> lock(mu);
    if (failure) std::rethrow_exception(failure);
  }

  summary.per_order = state.tallies;
  summary.records_written = state.records_written;
  summary.chunks_flushed = state.chunks_flushed;
  summary.complete = !stopped_early && state.last_chunk == plan.size();
  return summary;
}

}  // namespace indpoly
