#pragma once

#include <string>
#include <vector>

#include "segalkit/util.hpp"

namespace segal {

/// A weakly monotone map [source_dim] -> [target_dim] between finite ordinals,
/// stored by its value list.  These index every structural operator on a
/// truncated simplicial set.
struct MonotoneMap {
  int source_dim = 0;
  int target_dim = 0;
  std::vector<int> values;  // size source_dim + 1

  static MonotoneMap identity(int n);
  /// δ_i : [n-1] -> [n], the injection missing i.
  static MonotoneMap coface(int n, int i);
  /// σ_j : [n+1] -> [n], the surjection repeating j.
  static MonotoneMap codegeneracy(int n, int j);

  void validate() const;  // throws ValidationError
  bool is_identity() const;

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.source_dim == b.source_dim && a.target_dim == b.target_dim &&
           a.values == b.values;
  }
  std::string str() const;
};

/// g ∘ f for f : [n] -> [m], g : [m] -> [p].
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

/// The endofunctors of the simplex category that drive the constructions here:
/// cone-off-the-bottom (lower décalage indexer), cone-off-the-top (upper
/// décalage indexer), the doubling functor behind edgewise subdivision, and
/// order reversal.
enum class DeltaFunctor { LowerDec, UpperDec, Subdivision, Reversal };

/// Image of `f` under the chosen functor.  Reversal keeps dimensions, the
/// décalage indexers add one, subdivision doubles (n -> 2n+1).
MonotoneMap delta_map_image(DeltaFunctor kind, const MonotoneMap& f);

}  // namespace segal
