#pragma once

#include "ramseykit/structure.hpp"

namespace ramseykit {

// Deterministic canonical labeling: canonical_form(A) == canonical_form(B)
// bit-exactly iff A and B are isomorphic. Individualize-refine search over
// an equitable partition, keeping the least relabeled encoding; discovered
// automorphisms prune sibling branches at the root cell.
Structure canonical_form(const Structure& a);

} // namespace ramseykit
