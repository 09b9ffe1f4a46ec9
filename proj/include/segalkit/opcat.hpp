#pragma once

#include "segalkit/fincat.hpp"
#include "segalkit/sset.hpp"

namespace segal {

/// A finite category with one chosen local terminal per component and a fiber
/// assignment: phi0 sends an arrow to its fiber object, phi1 sends a triangle
/// (top g : a -> b over base f : b -> x) to the induced arrow between fibers
/// phi0(f∘g) -> phi0(f).
struct UnaryOpCat {
  FinCat cat;
  std::set<std::string> chosen;
  std::map<std::string, std::string> phi0;  // arrow -> object
  std::map<std::pair<std::string, std::string>, std::string> phi1;

  const std::string& fiber(const std::string& arrow) const;
  const std::string& fiber_map(const std::string& top, const std::string& base) const;

  /// Shape only: tables total, keys composable, values in range.  Axiom
  /// content lives in check_unary_operadic so that deliberately broken
  /// fixtures can still be probed.
  void validate_structure() const;
};

/// The unique arrow from x to the chosen local terminal of its component.
/// Requires the chosen-terminal structure to be sound for x's component.
std::string canonical_to_terminal(const UnaryOpCat& O, const std::string& x);

/// Chosen-terminal soundness, slice functoriality of phi, the unit/terminal
/// axioms, and the iterated-fiber coherence on chains of length <= 4.
CheckReport check_unary_operadic(const UnaryOpCat& O);

/// phi is a discrete opfibration: for every arrow h and every p out of
/// phi0(h) there is exactly one decomposition h = f∘g with phi1(g, f) = p.
CheckReport check_blow_up(const UnaryOpCat& O);

/// All decompositions (g, f) of h with fiber map p; blow-up says exactly one.
std::vector<std::pair<std::string, std::string>> blow_up_lifts(
    const UnaryOpCat& O, const std::string& h, const std::string& p);

struct FiberRecord {
  std::string fiber;
  bool fiber_is_local_terminal = false;
  bool fiber_is_chosen = false;
  bool arrow_is_iso = false;
  bool arrow_is_identity = false;
};

/// Per-arrow fiber data plus the two classification laws (fiber local
/// terminal <=> iso, fiber chosen <=> identity), which hold under blow-up.
struct FiberClassification {
  std::map<std::string, FiberRecord> records;
  CheckReport report;
};

FiberClassification classify_fibers(const UnaryOpCat& O);

/// Build the operadic structure presented by an upper 2-Segal set: category
/// from the upper décalage, chosen terminals from the bottom degeneracy,
/// fibers read off the top faces of levels 2 and 3.
UnaryOpCat operadic_from_upper_two_segal(const TruncSSet& Z);

/// Every arrow into a local terminal whose fiber equals its domain forces
/// that terminal to be the chosen one.
CheckReport check_unique_fiber_condition(const UnaryOpCat& O);

/// phi applied to a composable chain of arrows: the chain of fiber maps over
/// the last object.  chain has >= 1 arrows; result has one fewer.
std::vector<std::string> fiber_chain(const UnaryOpCat& O,
                                     const std::vector<std::string>& chain);

}  // namespace segal
