#include "betti/betti_table.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "betti/subsets.hpp"

namespace betti {

namespace {

bool has_isolated_in(const Graph& g, std::uint32_t w) {
  for (int v : VertexSet(w).elements())
    if ((g.neighbors(v).bits & w) == 0) return true;
  return false;
}

using Acc = std::map<std::pair<int, int>, long long>;

struct SweepJob {
  const Graph* g = nullptr;
  FieldChar field{2};
  bool prune = true;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::atomic<bool>* stop = nullptr;
};

// One contiguous colex-rank range of fixed-size subsets.
void sweep_range(const SweepJob& job, int size, std::uint64_t lo, std::uint64_t hi, Acc& acc) {
  std::uint32_t mask = subset_at_colex_rank(size, lo);
  for (std::uint64_t r = lo; r < hi; ++r) {
    if ((r & 1023) == 0) {
      if (job.stop && job.stop->load(std::memory_order_relaxed))
        throw BudgetError("betti_table: stopped");
      if (job.deadline && std::chrono::steady_clock::now() > *job.deadline)
        throw BudgetError("betti_table: time budget exceeded");
    }
    if (!(job.prune && has_isolated_in(*job.g, mask))) {
      ReducedBettiVector rb =
          reduced_betti_vector(induced_subgraph(*job.g, VertexSet(mask)), job.field);
      for (int d = 0; d <= rb.max_dim(); ++d) {
        long long b = rb.at(d);
        if (b != 0) acc[{size - d - 1, size}] += b;
      }
    }
    if (r + 1 < hi) mask = next_same_popcount(mask);
  }
}

}  // namespace

BettiTable betti_table(const Graph& g, FieldChar field, const TableOptions& opts) {
  const int n = g.vertex_count();
  if (n > kMaxTableVertices)
    throw SizeError("betti_table: n = " + std::to_string(n) + " exceeds the 2^n sweep cap 22");
  const int threads = std::max(1, opts.threads);

  BettiTable out;
  out.n = n;
  out.field = field;
  out.entries[{0, 0}] = 1;  // the free rank-one start of every resolution

  std::atomic<bool> stop{false};
  SweepJob job{&g, field, opts.prune, opts.deadline, &stop};

  if (threads == 1) {
    for (int s = 1; s <= n; ++s) sweep_range(job, s, 0, binomial(n, s), out.entries);
  } else {
    std::vector<Acc> parts(threads);
    std::vector<std::exception_ptr> errs(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          // every thread takes the t-th slice of each size class, so the
          // partition is independent of scheduling
          for (int s = 1; s <= n; ++s) {
            std::uint64_t total = binomial(n, s);
            std::uint64_t chunk = (total + threads - 1) / threads;
            std::uint64_t lo = std::min<std::uint64_t>(total, (std::uint64_t)t * chunk);
            std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
            if (lo < hi) sweep_range(job, s, lo, hi, parts[t]);
          }
        } catch (...) {
          errs[t] = std::current_exception();
          stop.store(true, std::memory_order_relaxed);
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (auto& part : parts)
      for (auto& [key, val] : part) out.entries[key] += val;  // sums commute
  }

  out.pd = 0;
  for (auto& [key, val] : out.entries) out.pd = std::max(out.pd, key.first);
  return out;
}

ShiftVector max_shifts(const BettiTable& t) {
  ShiftVector s;
  s.t.assign(t.pd + 1, -1);
  for (auto& [key, val] : t.entries) {
    auto [i, j] = key;
    if (i >= 0 && i <= t.pd) s.t[i] = std::max(s.t[i], j);
  }
  for (int i = 0; i <= t.pd; ++i)
    if (s.t[i] < 0) throw std::logic_error("max_shifts: empty row below pd");
  return s;
}

std::vector<Witness> witnesses(const Graph& g, int i, FieldChar field) {
  BettiTable table = betti_table(g, field);
  if (i < 1 || i > table.pd)
    throw std::out_of_range("witnesses: index " + std::to_string(i) + " outside [1, pd = " +
                            std::to_string(table.pd) + "]");
  ShiftVector s = max_shifts(table);
  const int j = s.t[i];
  const int d = j - i - 1;
  std::vector<Witness> out;
  std::uint64_t total = binomial(g.vertex_count(), j);
  std::uint32_t mask = subset_at_colex_rank(j, 0);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (!has_isolated_in(g, mask)) {
      ReducedBettiVector rb = reduced_betti_vector(induced_subgraph(g, VertexSet(mask)), field);
      if (rb.at(d) != 0) out.push_back(Witness{i, j, VertexSet(mask), d});
    }
    if (r + 1 < total) mask = next_same_popcount(mask);
  }
  return out;
}

std::set<int> strand(const BettiTable& t, int j_off) {
  assert(j_off >= 1);
  std::set<int> out;
  for (auto& [key, val] : t.entries)
    if (key.second == key.first + j_off) out.insert(key.first);
  return out;
}

void validate(const BettiTable& t) {
  if (t.at(0, 0) != 1) throw std::logic_error("table: beta_{0,0} != 1");
  if (t.pd > t.n) throw std::logic_error("table: pd exceeds vertex count");
  std::vector<char> row_seen(t.pd + 1, 0);
  for (auto& [key, val] : t.entries) {
    auto [i, j] = key;
    if (val <= 0) throw std::logic_error("table: nonpositive entry stored");
    if (i < 0 || i > t.pd) throw std::logic_error("table: row outside [0, pd]");
    row_seen[i] = 1;
    if (i == 0) {
      if (j != 0) throw std::logic_error("table: row 0 must be exactly beta_{0,0}");
    } else if (j < i + 1 || j > 2 * i) {
      throw std::logic_error("table: entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") outside the column window [i+1, 2i]");
    }
  }
  for (int i = 0; i <= t.pd; ++i)
    if (!row_seen[i]) throw std::logic_error("table: empty row at or below pd");
}

std::string to_text(const BettiTable& t) {
  std::ostringstream out;
  out << "n " << t.n << "\n" << "p " << t.field.p() << "\n" << "pd " << t.pd << "\n";
  for (auto& [key, val] : t.entries)
    out << key.first << " " << key.second << " " << val << "\n";
  return out.str();
}

BettiTable table_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  long long n = -1, p = -1, pd = -1;
  if (!(in >> tag) || tag != "n" || !(in >> n))
    throw FormatError("table: expected 'n <count>'", 0);
  if (!(in >> tag) || tag != "p" || !(in >> p))
    throw FormatError("table: expected 'p <prime>'", 0);
  if (!(in >> tag) || tag != "pd" || !(in >> pd))
    throw FormatError("table: expected 'pd <length>'", 0);
  BettiTable t;
  t.n = (int)n;
  t.field = FieldChar((std::uint32_t)p);
  t.pd = (int)pd;
  long long i, j, v;
  while (in >> i) {
    if (!(in >> j >> v)) throw FormatError("table: truncated entry line", 0);
    t.entries[{(int)i, (int)j}] = v;
  }
  if (!in.eof()) throw FormatError("table: unreadable token", 0);
  return t;
}

}  // namespace betti
