#pragma once

#include <vector>

#include "hexprob/rational.hpp"

namespace hexprob {

// Basis of the right nullspace of a rectangular rational matrix, via exact
// Gauss-Jordan elimination.  `rows` must be nonempty and rectangular; the
// result holds one vector per free column (empty when the kernel is trivial),
// each satisfying rows * v = 0 exactly.
std::vector<std::vector<Rat>> nullspace_basis(std::vector<std::vector<Rat>> rows);

} // namespace hexprob
