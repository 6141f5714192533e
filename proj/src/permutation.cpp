#include "ugsolve/permutation.hpp"

#include <numeric>

#include "ugsolve/error.hpp"

namespace ugsolve {

bool is_bijection(std::span<const Label> p) {
  std::vector<bool> seen(p.size(), false);
  for (Label x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation perm_compose(std::span<const Label> p1, std::span<const Label> p2) {
  if (p1.size() != p2.size() || !is_bijection(p1) || !is_bijection(p2)) {
    throw InvalidArgument("perm_compose: inputs must be bijections of equal size");
  }
  Permutation out(p1.size());
  for (std::size_t x = 0; x < p2.size(); ++x) out[x] = p1[p2[x]];
  return out;
}

Permutation perm_invert(std::span<const Label> p) {
  if (!is_bijection(p)) throw InvalidArgument("perm_invert: input is not a bijection");
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<Label>(x);
  return out;
}

Permutation perm_identity(Label q) {
  Permutation out(q);
  std::iota(out.begin(), out.end(), Label{0});
  return out;
}

Permutation perm_shift(Label q, Label s) {
  Permutation out(q);
  for (Label x = 0; x < q; ++x) out[x] = static_cast<Label>((x + s) % q);
  return out;
}

}  // namespace ugsolve
