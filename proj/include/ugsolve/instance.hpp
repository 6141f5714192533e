#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "ugsolve/permutation.hpp"
#include "ugsolve/types.hpp"

namespace ugsolve {

/// Complete-graph instance with cyclic constraints x_u - x_v = c_uv (mod q).
///
/// Only the offsets for u < v are stored; the reverse orientation is derived
/// as (q - c_uv) mod q. Immutable after construction.
class LinEqInstance {
 public:
  /// `offsets` lists c_uv for every u < v in pair_index() order.
  LinEqInstance(std::uint32_t n, Label q, std::vector<Label> offsets);

  static LinEqInstance zeros(std::uint32_t n, Label q);

  /// Builds the instance from f(u, v) for u < v; values are reduced mod q.
  template <class F>
  static LinEqInstance from_function(std::uint32_t n, Label q, F&& f) {
    std::vector<Label> offsets;
    offsets.reserve(num_pairs(n));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        offsets.push_back(static_cast<Label>(f(u, v) % q));
      }
    }
    return LinEqInstance(n, q, std::move(offsets));
  }

  std::uint32_t n() const { return n_; }
  Label q() const { return q_; }
  std::uint64_t num_edges() const { return offsets_.size(); }

  /// c_uv for either orientation (u != v).
  Label offset(Vertex u, Vertex v) const {
    if (u < v) return offsets_[pair_index(n_, u, v)];
    const Label c = offsets_[pair_index(n_, v, u)];
    return c == 0 ? 0 : q_ - c;
  }

  /// The label of v forced by x_u through the (u, v) constraint.
  Label apply(Vertex u, Vertex v, Label x_u) const {
    const Label s = offset(v, u);
    const Label r = x_u + s;
    return r >= q_ ? r - q_ : r;
  }

  bool satisfied(Vertex u, Vertex v, Label x_u, Label x_v) const {
    return apply(u, v, x_u) == x_v;
  }

  std::span<const Label> offsets() const { return offsets_; }

  friend bool operator==(const LinEqInstance&, const LinEqInstance&) = default;

 private:
  std::uint32_t n_;
  Label q_;
  std::vector<Label> offsets_;
};

/// Complete-graph instance with permutation constraints x_v = pi_uv(x_u).
///
/// Stores pi_uv for u < v as q consecutive labels per pair; pi_vu is the
/// inverse and is computed on demand. Memory is O(q n^2).
class UgInstance {
 public:
  /// `perms` holds pi_uv for every u < v in pair_index() order, q labels each.
  UgInstance(std::uint32_t n, Label q, std::vector<Label> perms);

  /// The permutation-constraint view of a cyclic instance.
  static UgInstance from_lineq(const LinEqInstance& g);

  std::uint32_t n() const { return n_; }
  Label q() const { return q_; }
  std::uint64_t num_edges() const { return num_pairs(n_); }

  /// Stored pi_uv, u < v.
  std::span<const Label> forward(Vertex u, Vertex v) const {
    return {perms_.data() + pair_index(n_, u, v) * q_, q_};
  }

  /// pi_uv in either orientation.
  Permutation perm(Vertex u, Vertex v) const;

  Label apply(Vertex u, Vertex v, Label x_u) const;

  bool satisfied(Vertex u, Vertex v, Label x_u, Label x_v) const {
    return u < v ? forward(u, v)[x_u] == x_v : forward(v, u)[x_v] == x_u;
  }

  std::span<const Label> perms() const { return perms_; }

  friend bool operator==(const UgInstance&, const UgInstance&) = default;

 private:
  std::uint32_t n_;
  Label q_;
  std::vector<Label> perms_;
};

/// Either complete instance kind together with a symmetric edge mask whose
/// every vertex keeps degree >= ceil((1 - delta)(n - 1)).
class DenseInstance {
 public:
  using Base = std::variant<LinEqInstance, UgInstance>;

  /// `present` has one flag per pair in pair_index() order. Constraints on
  /// absent pairs are replaced by offset 0 or the identity.
  DenseInstance(Base base, std::vector<std::uint8_t> present, double delta);

  /// Every edge present, delta = 0.
  static DenseInstance complete(Base base);

  const Base& base() const { return base_; }
  bool is_cyclic() const { return std::holds_alternative<LinEqInstance>(base_); }

  std::uint32_t n() const { return n_; }
  Label q() const { return q_; }
  double delta() const { return delta_; }
  std::uint64_t num_edges() const { return num_edges_; }

  bool has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    return u < v ? present_[pair_index(n_, u, v)] != 0
                 : present_[pair_index(n_, v, u)] != 0;
  }

  std::uint32_t degree(Vertex v) const { return degree_[v]; }
  std::uint32_t min_degree() const;
  std::span<const std::uint8_t> present() const { return present_; }

  /// Constraint check on the underlying complete instance; ignores the mask.
  bool satisfied(Vertex u, Vertex v, Label x_u, Label x_v) const {
    return std::visit([&](const auto& g) { return g.satisfied(u, v, x_u, x_v); },
                      base_);
  }

  Label apply(Vertex u, Vertex v, Label x_u) const {
    return std::visit([&](const auto& g) { return g.apply(u, v, x_u); }, base_);
  }

  friend bool operator==(const DenseInstance&, const DenseInstance&) = default;

 private:
  Base base_;
  std::vector<std::uint8_t> present_;
  std::vector<std::uint32_t> degree_;
  std::uint32_t n_;
  Label q_;
  double delta_;
  std::uint64_t num_edges_ = 0;
};

/// Smallest degree allowed by the density slack delta.
std::uint32_t required_degree(std::uint32_t n, double delta);

using AnyInstance = std::variant<LinEqInstance, UgInstance, DenseInstance>;

}  // namespace ugsolve
