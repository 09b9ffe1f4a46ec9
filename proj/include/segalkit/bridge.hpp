#pragma once

#include "segalkit/fincat.hpp"
#include "segalkit/sset.hpp"

namespace segal {

/// Thrown when a construction needs a Segal set but the check fails; carries
/// the failing report.
struct SegalFailure : std::runtime_error {
  CheckReport report;
  SegalFailure(const std::string& what, CheckReport r)
      : std::runtime_error(what), report(std::move(r)) {}
};

/// Chains of n composable arrows, truncated at level N.  Level-0 ids are the
/// object ids; higher ids encode the arrow list.
TruncSSet nerve(const FinCat& C, int N);

/// Rebuild the category presented by a Segal set: objects = level 0, arrows =
/// level 1, composition read off level 2.  Requires truncation >= 3 so the
/// Segal check certifies associativity.
FinCat category_from_segal(const TruncSSet& S);

/// Objects are the arrows of C; a morphism g -> k is a pair (f, h) with
/// k = h∘g∘f.  Ids encode the triple (f, g, h).
FinCat twisted_arrow_category(const FinCat& C);

/// The canonical comparison nerve(category_from_segal(S), N) <- S given by
/// sending a simplex to its spine chain; bijective iff S is Segal.
SimplicialMap nerve_comparison(const TruncSSet& S, const FinCat& C);

}  // namespace segal
