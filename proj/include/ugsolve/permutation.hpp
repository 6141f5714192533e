#pragma once

#include <span>
#include <vector>

#include "ugsolve/types.hpp"

namespace ugsolve {

using Permutation = std::vector<Label>;

bool is_bijection(std::span<const Label> p);

/// Returns p1 after p2, i.e. x -> p1(p2(x)).
Permutation perm_compose(std::span<const Label> p1, std::span<const Label> p2);
Permutation perm_invert(std::span<const Label> p);

Permutation perm_identity(Label q);
/// The cyclic shift x -> x + s (mod q).
Permutation perm_shift(Label q, Label s);

}  // namespace ugsolve
