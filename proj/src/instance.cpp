#include "ugsolve/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ugsolve/error.hpp"

namespace ugsolve {

void Assignment::check(std::size_t n, Label q) const {
  if (labels_.size() != n) {
    throw InvalidArgument("assignment has " + std::to_string(labels_.size()) +
                          " labels, instance has " + std::to_string(n) + " vertices");
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (labels_[v] >= q) {
      throw InvalidArgument("label " + std::to_string(labels_[v]) + " of vertex " +
                            std::to_string(v) + " is outside [0, " + std::to_string(q) +
                            ")");
    }
  }
}

LinEqInstance::LinEqInstance(std::uint32_t n, Label q, std::vector<Label> offsets)
    : n_(n), q_(q), offsets_(std::move(offsets)) {
  if (n < 2) throw InvalidArgument("instance needs at least 2 vertices");
  if (q < 1) throw InvalidArgument("alphabet size must be positive");
  if (offsets_.size() != num_pairs(n)) {
    throw InvalidArgument("expected " + std::to_string(num_pairs(n)) + " offsets, got " +
                          std::to_string(offsets_.size()));
  }
  for (Label c : offsets_) {
    if (c >= q) throw InvalidArgument("offset " + std::to_string(c) + " is not below q");
  }
}

LinEqInstance LinEqInstance::zeros(std::uint32_t n, Label q) {
  return LinEqInstance(n, q, std::vector<Label>(num_pairs(n), 0));
}

UgInstance::UgInstance(std::uint32_t n, Label q, std::vector<Label> perms)
    : n_(n), q_(q), perms_(std::move(perms)) {
  if (n < 2) throw InvalidArgument("instance needs at least 2 vertices");
  if (q < 1) throw InvalidArgument("alphabet size must be positive");
  if (perms_.size() != num_pairs(n) * q) {
    throw InvalidArgument("expected " + std::to_string(num_pairs(n) * q) +
                          " permutation entries, got " + std::to_string(perms_.size()));
  }
  std::vector<std::uint32_t> seen(q, 0);
  const std::uint64_t m = num_pairs(n);
  for (std::uint64_t e = 0; e < m; ++e) {
    for (Label x = 0; x < q; ++x) {
      const Label y = perms_[e * q + x];
      if (y >= q || seen[y] == e + 1) {
        throw InvalidArgument("constraint " + std::to_string(e) + " is not a bijection");
      }
      seen[y] = static_cast<std::uint32_t>(e + 1);
    }
  }
}

UgInstance UgInstance::from_lineq(const LinEqInstance& g) {
  const Label q = g.q();
  std::vector<Label> perms;
  perms.reserve(g.num_edges() * q);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      for (Label x = 0; x < q; ++x) perms.push_back(g.apply(u, v, x));
    }
  }
  return UgInstance(g.n(), q, std::move(perms));
}

Permutation UgInstance::perm(Vertex u, Vertex v) const {
  if (u < v) {
    auto f = forward(u, v);
    return Permutation(f.begin(), f.end());
  }
  return perm_invert(forward(v, u));
}

Label UgInstance::apply(Vertex u, Vertex v, Label x_u) const {
  if (u < v) return forward(u, v)[x_u];
  auto f = forward(v, u);
  return static_cast<Label>(std::find(f.begin(), f.end(), x_u) - f.begin());
}

std::uint32_t required_degree(std::uint32_t n, double delta) {
  const double need = (1.0 - delta) * static_cast<double>(n - 1);
  return static_cast<std::uint32_t>(std::ceil(need - 1e-9));
}

namespace {

/// Absent pairs get offset 0 or the identity, so equal masks and equal
/// present constraints mean equal instances.
DenseInstance::Base neutral_on_absent(const DenseInstance::Base& base,
                                      std::span<const std::uint8_t> present) {
  if (const auto* g = std::get_if<LinEqInstance>(&base)) {
    std::vector<Label> offsets(g->offsets().begin(), g->offsets().end());
    for (std::size_t e = 0; e < offsets.size(); ++e) {
      if (present[e] == 0) offsets[e] = 0;
    }
    return LinEqInstance(g->n(), g->q(), std::move(offsets));
  }
  const auto& g = std::get<UgInstance>(base);
  const Label q = g.q();
  std::vector<Label> perms(g.perms().begin(), g.perms().end());
  for (std::size_t e = 0; e < present.size(); ++e) {
    if (present[e] == 0) {
      for (Label x = 0; x < q; ++x) perms[e * q + x] = x;
    }
  }
  return UgInstance(g.n(), q, std::move(perms));
}

}  // namespace

DenseInstance::DenseInstance(Base base, std::vector<std::uint8_t> present, double delta)
    : base_(std::move(base)), present_(std::move(present)), delta_(delta) {
  std::visit(
      [&](const auto& g) {
        n_ = g.n();
        q_ = g.q();
      },
      base_);
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in [0, 1)");
  if (present_.size() != num_pairs(n_)) {
    throw InvalidArgument("edge mask has wrong size");
  }
  for (auto& f : present_) f = f != 0 ? 1 : 0;
  if (std::find(present_.begin(), present_.end(), 0) != present_.end()) {
    base_ = neutral_on_absent(base_, present_);
  }
  degree_.assign(n_, 0);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (present_[pair_index(n_, u, v)] != 0) {
        ++degree_[u];
        ++degree_[v];
        ++num_edges_;
      }
    }
  }
  const std::uint32_t need = required_degree(n_, delta);
  for (Vertex v = 0; v < n_; ++v) {
    if (degree_[v] < need) {
      throw InvalidArgument("vertex " + std::to_string(v) + " has degree " +
                            std::to_string(degree_[v]) + " below the required " +
                            std::to_string(need));
    }
  }
}

DenseInstance DenseInstance::complete(Base base) {
  const std::uint32_t n = std::visit([](const auto& g) { return g.n(); }, base);
  return DenseInstance(std::move(base), std::vector<std::uint8_t>(num_pairs(n), 1), 0.0);
}

std::uint32_t DenseInstance::min_degree() const {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

}  // namespace ugsolve
