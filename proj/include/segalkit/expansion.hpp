#pragma once

#include "segalkit/undecking.hpp"

namespace segal {

/// The category of fiber inclusions: objects are the objects of O.cat, and
/// every arrow g of O.cat contributes one arrow [g] : phi0(g) -> dom(g).
/// Composition resolves through the unique blow-up decomposition.
FinCat fiber_category(const UnaryOpCat& O);

/// Right-invertibility of [g] <=> g factors through a chosen local terminal;
/// invertibility of [g] <=> cod(g) is local terminal.  Under the unique fiber
/// condition the invertible part is checked to be a preorder.
CheckReport classify_fiber_isos(const UnaryOpCat& O);

/// An arrow of the expanded category: a fiber inclusion recorded by its label
/// `left` followed by a plain arrow `right` out of the fiber.
struct ExpandedArrow {
  std::string left;   // arrow of O.cat; contributes phi0(left) -> dom(left)
  std::string right;  // arrow of O.cat with dom(right) = phi0(left)
};

struct ExpandedCategory {
  FinCat cat;
  std::map<std::string, ExpandedArrow> parts;  // arrow id -> its two halves
};

/// The expanded category built directly from the distributive law: arrows are
/// (left, right) pairs, composition swaps the middle via the fiber map.
ExpandedCategory expanded_category(const UnaryOpCat& O);

enum class FactorOrder { LR, RL };

/// Factor a level-1 simplex of the subdivision through the canonical 2-cell
/// (bottom-bottom degeneracies for LR, the shifted pair for RL); returns the
/// two edges (first, second) with second ∘ first = m in the subdivision
/// category.
std::pair<std::string, std::string> factorize_subdivision(const TruncSSet& S,
                                                          const std::string& m,
                                                          FactorOrder order);

/// L and R are wide subcategories, every arrow factors as r∘l with l in L and
/// r in R in exactly one way, and L ∩ R is exactly the identities.
CheckReport check_strict_factorization(const FinCat& C,
                                       const std::set<std::string>& L,
                                       const std::set<std::string>& R);

/// All invertible arrows of the expanded category; asserts the component-wise
/// characterization (left half invertible among fiber inclusions, right half
/// invertible in O.cat) agrees with the search.
std::set<std::string> iso_core(const UnaryOpCat& O, const ExpandedCategory& E);

}  // namespace segal
