#pragma once

#include <cstdint>

#include "segalkit/bridge.hpp"
#include "segalkit/opcat.hpp"

namespace segal {

/// The linear poset 0 <= 1 <= ... <= n as a category; n = 0 is terminal.
FinCat chain_poset(int n);

/// n objects with exactly one arrow in every direction.
FinCat indiscrete_groupoid(int n);

/// Seed-deterministic random partial order on `size` objects (size <= 6).
FinCat random_poset(std::uint64_t seed, int size);

/// Seed-deterministic random finite category (size <= 6 objects): the free
/// category on a sparse acyclic graph, sometimes joined with a small groupoid
/// component so isomorphisms show up.
FinCat random_category(std::uint64_t seed, int size);

/// A two-component operadic category whose unit fiber points into a groupoid
/// component: unary axioms hold, the opfibration property does not.  The
/// standard counterexample input for the failing sides.
UnaryOpCat opcat_without_blowup();

/// Extend a 2-truncated simplicial set coskeletally: level n > 2 holds all
/// face-compatible tuples, faces are projections, degeneracies are solved
/// from the mixed identities.
TruncSSet coskeletal_extend(const TruncSSet& base, int N);

/// nerve(C, 2) with one non-degenerate 2-simplex doubled, then filled
/// coskeletally to level N: a valid simplicial set with two fillers for one
/// spine, so the Segal and exactness checks must fail.
TruncSSet doubled_filler(const FinCat& C, int N);

}  // namespace segal
