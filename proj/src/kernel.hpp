#pragma once

// Solver-internal dense constraint tables and the pivot/voting kernels that
// run on them. Not part of the public interface.

#include <algorithm>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "ugsolve/instance.hpp"
#include "ugsolve/types.hpp"

namespace ugsolve::detail {

/// Full n x n table of shifts: the (u, v) constraint maps x_u to x_u + s_uv.
class CyclicTable {
 public:
  static constexpr bool kCyclic = true;

  explicit CyclicTable(const LinEqInstance& g) : n_(g.n()), q_(g.q()), shift_(n_ * n_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        shift_[u * n_ + v] = g.offset(v, u);
        shift_[v * n_ + u] = g.offset(u, v);
      }
    }
  }

  std::uint32_t n() const { return n_; }
  Label q() const { return q_; }

  Label map(Vertex u, Vertex v, Label x_u) const {
    const Label r = x_u + shift_[std::size_t{u} * n_ + v];
    return r >= q_ ? r - q_ : r;
  }

  /// Plurality tie key for label x at v: the offset x_lo - x_hi (mod q) of
  /// the edge between v and the pivot, lo < hi.
  Label tie_key(Vertex v, Vertex pivot, Label pivot_label, Label x) const {
    const Label d = v < pivot ? x + q_ - pivot_label : pivot_label + q_ - x;
    return d >= q_ ? d - q_ : d;
  }

 private:
  std::uint32_t n_;
  Label q_;
  std::vector<Label> shift_;
};

/// Full n x n x q table of permutations, both orientations materialized.
class PermTable {
 public:
  static constexpr bool kCyclic = false;

  explicit PermTable(const UgInstance& g)
      : n_(g.n()), q_(g.q()), perm_(std::size_t{n_} * n_ * q_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        auto f = g.forward(u, v);
        Label* fwd = &perm_[(std::size_t{u} * n_ + v) * q_];
        Label* inv = &perm_[(std::size_t{v} * n_ + u) * q_];
        for (Label x = 0; x < q_; ++x) {
          fwd[x] = f[x];
          inv[f[x]] = x;
        }
      }
    }
  }

  std::uint32_t n() const { return n_; }
  Label q() const { return q_; }

  Label map(Vertex u, Vertex v, Label x_u) const {
    return perm_[(std::size_t{u} * n_ + v) * q_ + x_u];
  }

  Label tie_key(Vertex, Vertex, Label, Label x) const { return x; }

 private:
  std::uint32_t n_;
  Label q_;
  std::vector<Label> perm_;
};

/// Vote counter with O(votes) reset.
class Tally {
 public:
  explicit Tally(Label q) : counts_(q, 0) { touched_.reserve(64); }

  void add(Label x) {
    if (counts_[x]++ == 0) touched_.push_back(x);
  }

  bool empty() const { return touched_.empty(); }

  /// Most frequent label, ties to the smallest key(x); clears the tally.
  template <class Key>
  Label take_winner(Key&& key) {
    Label best = 0;
    std::uint32_t best_count = 0;
    Label best_key = 0;
    for (Label x : touched_) {
      const std::uint32_t c = counts_[x];
      if (c > best_count) {
        best = x;
        best_count = c;
        best_key = key(x);
      } else if (c == best_count) {
        const Label k = key(x);
        if (k < best_key) {
          best = x;
          best_key = k;
        }
      }
      counts_[x] = 0;
    }
    touched_.clear();
    return best;
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::vector<Label> touched_;
};

template <class Table>
void propagate(const Table& t, Vertex pivot, Label pivot_label, std::span<Label> out) {
  for (Vertex v = 0; v < t.n(); ++v) {
    out[v] = v == pivot ? pivot_label : t.map(pivot, v, pivot_label);
  }
}

template <class Table>
std::uint64_t count_violated(const Table& t, std::span<const Label> x) {
  std::uint64_t bad = 0;
  const std::uint32_t n = t.n();
  for (Vertex u = 0; u < n; ++u) {
    const Label xu = x[u];
    for (Vertex v = u + 1; v < n; ++v) bad += t.map(u, v, xu) != x[v];
  }
  return bad;
}

/// Complete-graph voting round: the pivot neither votes nor receives votes.
template <class Table>
void vote_round(const Table& t, Vertex pivot, Label pivot_label, std::span<const Label> temp,
                std::span<Label> out, Tally& tally) {
  const std::uint32_t n = t.n();
  for (Vertex v = 0; v < n; ++v) {
    if (v == pivot) {
      out[v] = pivot_label;
      continue;
    }
    for (Vertex u = 0; u < n; ++u) {
      if (u == pivot || u == v) continue;
      tally.add(t.map(u, v, temp[u]));
    }
    out[v] = tally.take_winner([&](Label x) { return t.tie_key(v, pivot, pivot_label, x); });
  }
}

/// Adjacency lists of a dense instance.
struct Adjacency {
  explicit Adjacency(const DenseInstance& g) : lists(g.n()) {
    for (Vertex u = 0; u < g.n(); ++u) {
      for (Vertex v = u + 1; v < g.n(); ++v) {
        if (g.has_edge(u, v)) {
          lists[u].push_back(v);
          lists[v].push_back(u);
        }
      }
    }
  }
  std::vector<std::vector<Vertex>> lists;
};

template <class Table>
void propagate_dense(const Table& t, const Adjacency& adj, Vertex pivot, Label pivot_label,
                     std::span<Label> out) {
  std::fill(out.begin(), out.end(), kUnlabeled);
  out[pivot] = pivot_label;
  for (Vertex v : adj.lists[pivot]) out[v] = t.map(pivot, v, pivot_label);
}

template <class Table>
std::uint64_t count_violated_dense(const Table& t, const Adjacency& adj,
                                   std::span<const Label> x) {
  std::uint64_t bad = 0;
  for (Vertex u = 0; u < t.n(); ++u) {
    for (Vertex v : adj.lists[u]) {
      if (u < v) bad += t.map(u, v, x[u]) != x[v];
    }
  }
  return bad;
}

/// Dense voting round: every labelled vertex, the pivot included, votes.
template <class Table>
void vote_round_dense(const Table& t, const Adjacency& adj, Vertex pivot, Label pivot_label,
                      std::span<const Label> temp, std::span<Label> out, Tally& tally) {
  for (Vertex v = 0; v < t.n(); ++v) {
    for (Vertex u : adj.lists[v]) {
      if (temp[u] != kUnlabeled) tally.add(t.map(u, v, temp[u]));
    }
    if (tally.empty()) {
      out[v] = temp[v] == kUnlabeled ? 0 : temp[v];
    } else {
      out[v] = tally.take_winner([&](Label x) { return t.tie_key(v, pivot, pivot_label, x); });
    }
  }
}

struct Candidate {
  std::uint64_t violated = UINT64_MAX;
  std::size_t index = SIZE_MAX;
  std::vector<Label> labels;

  bool better_than(const Candidate& o) const {
    return violated < o.violated || (violated == o.violated && index < o.index);
  }
};

inline unsigned resolve_threads(unsigned requested, std::size_t work) {
  unsigned t = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
  return static_cast<unsigned>(std::min<std::size_t>(t, std::max<std::size_t>(work, 1)));
}

/// Evaluates candidates 0..count-1 and keeps the one with the fewest
/// violations, ties to the smallest index. `make_worker()` returns a callable
/// `(index, labels_out) -> violated` holding per-thread scratch. The result
/// does not depend on the thread count.
template <class MakeWorker>
Candidate best_candidate(std::size_t count, std::uint32_t n, unsigned threads,
                         MakeWorker&& make_worker) {
  const unsigned workers = resolve_threads(threads, count);
  std::vector<Candidate> best(workers);
  auto run = [&](unsigned tid) {
    auto eval = make_worker();
    std::vector<Label> scratch(n);
    Candidate& mine = best[tid];
    for (std::size_t i = tid; i < count; i += workers) {
      const std::uint64_t bad = eval(i, std::span<Label>(scratch));
      if (bad < mine.violated) {
        mine.violated = bad;
        mine.index = i;
        mine.labels = scratch;
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned tid = 0; tid < workers; ++tid) pool.emplace_back(run, tid);
  }
  Candidate out;
  for (auto& c : best) {
    if (c.index != SIZE_MAX && c.better_than(out)) out = std::move(c);
  }
  return out;
}

}  // namespace ugsolve::detail
