#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "segalkit/check.hpp"

namespace segal {

/// A finite category given by explicit tables.  `comp` is keyed (g, f) and
/// holds g∘f, defined exactly when cod f = dom g.
struct FinCat {
  std::vector<std::string> objects;  // sorted
  std::vector<std::string> arrows;   // sorted
  std::map<std::string, std::string> dom, cod;    // arrow -> object
  std::map<std::string, std::string> ident;       // object -> identity arrow
  std::map<std::pair<std::string, std::string>, std::string> comp;

  const std::string& compose(const std::string& g, const std::string& f) const;
  bool is_identity(const std::string& a) const;
  bool has_object(const std::string& x) const;
  bool has_arrow(const std::string& a) const;
  std::vector<std::string> hom(const std::string& x, const std::string& y) const;
  std::vector<std::string> out_of(const std::string& x) const;
  std::vector<std::string> into(const std::string& x) const;

  void canonicalize();
  /// Table shape, totality on composable pairs, unit and associativity laws.
  /// Throws ValidationError on the first failure.
  void validate() const;
};

/// Same objects and arrow ids with dom/cod swapped and composition reversed.
FinCat opposite_cat(const FinCat& C);

/// Object -> component representative, via union-find on symmetrized arrows.
std::map<std::string, std::string> components(const FinCat& C);

/// Objects t receiving exactly one arrow from every object of t's component.
std::set<std::string> local_terminals(const FinCat& C);

std::optional<std::string> inverse_of(const FinCat& C, const std::string& a);
bool is_iso(const FinCat& C, const std::string& a);
std::set<std::string> iso_arrows(const FinCat& C);

/// An explicit functor between finite categories.
struct Functor {
  std::map<std::string, std::string> on_objects;
  std::map<std::string, std::string> on_arrows;
};

/// Totality, dom/cod/ident/comp preservation.
CheckReport validate_functor(const FinCat& C, const FinCat& D, const Functor& F);
bool functor_bijective(const FinCat& C, const FinCat& D, const Functor& F);

/// Exhaustive isomorphism search, pruned by per-object degree profiles.
std::optional<Functor> find_isomorphism(const FinCat& C, const FinCat& D);

/// The wide subcategory on `arrow_ids` (must be closed; validated).
FinCat wide_subcategory(const FinCat& C, const std::set<std::string>& arrow_ids);

/// All composable arrow chains of exactly `len` arrows (len >= 1).
std::vector<std::vector<std::string>> composable_chains(const FinCat& C, int len);

}  // namespace segal
