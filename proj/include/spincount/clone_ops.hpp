#pragma once

#include <vector>

#include "spincount/function.hpp"

namespace spincount {

// Coordinates are 0-based throughout.

PBFunction bit_flip(const PBFunction& f);

/// g(x_0..x_{k-1}) = f(x_{perm[0]}, ..., x_{perm[k-1]}).
PBFunction permute(const PBFunction& f, const std::vector<int>& perm);

PBFunction product(const PBFunction& f, const PBFunction& g);
PBFunction sum_out(const PBFunction& f, int i);
PBFunction add_fictitious(const PBFunction& f);
PBFunction pin(const PBFunction& f, int i, int b);

/// Merges each block into one argument; the result's argument j is blocks[j].
PBFunction identify(const PBFunction& f, const std::vector<std::vector<int>>& blocks);

// Signed variants used by the holant machinery.
SignedTable bit_flip(const SignedTable& f);
SignedTable permute(const SignedTable& f, const std::vector<int>& perm);

}  // namespace spincount
