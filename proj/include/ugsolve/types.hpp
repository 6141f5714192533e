#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace ugsolve {

using Vertex = std::uint32_t;
using Label = std::uint32_t;

/// Marks a vertex that received no label (dense pivot propagation).
inline constexpr Label kUnlabeled = std::numeric_limits<Label>::max();

/// Unordered edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::uint64_t num_pairs(std::uint64_t n) { return n * (n - 1) / 2; }

/// Row-major index of the pair (u, v), u < v, in the strict upper triangle.
inline std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

/// A label per vertex.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Label> labels) : labels_(std::move(labels)) {}
  Assignment(std::size_t n, Label fill) : labels_(n, fill) {}

  std::size_t size() const { return labels_.size(); }
  Label operator[](std::size_t v) const { return labels_[v]; }
  Label& operator[](std::size_t v) { return labels_[v]; }

  std::span<const Label> labels() const { return labels_; }
  std::vector<Label>& mutable_labels() { return labels_; }

  /// Throws InvalidArgument unless size() == n and every label is below q.
  void check(std::size_t n, Label q) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Label> labels_;
};

}  // namespace ugsolve
