#pragma once
// Canonical form for small multigraphs, used as a memo key by the
// deletion-contraction engine.  Two graphs get the same key iff they are
// isomorphic (as multigraphs with loops).

#include <string>

#include "tuttekit/multigraph.hpp"

namespace tk {

// Guarded: n <= 16 and a cap on the refinement search; either limit throws
// guard_error, and the caller is expected to fall back to memo-free recursion.
std::string canonical_key(const Multigraph& g);

}  // namespace tk
