#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "segalkit/check.hpp"
#include "segalkit/monotone.hpp"

namespace segal {

using Table = std::map<std::string, std::string>;

/// A simplicial set truncated at level `trunc_level`: finite simplex sets per
/// level plus total face/degeneracy tables.  Simplex ids are opaque strings,
/// unique within their level.
struct TruncSSet {
  int trunc_level = 0;
  std::vector<std::vector<std::string>> levels;        // levels[n], sorted
  std::map<std::pair<int, int>, Table> face;           // (n,i): X_n -> X_{n-1}
  std::map<std::pair<int, int>, Table> degen;          // (n,j): X_n -> X_{n+1}

  const std::string& apply_face(int n, int i, const std::string& id) const;
  const std::string& apply_degen(int n, int j, const std::string& id) const;
  bool has_simplex(int n, const std::string& id) const;
  long long size(int n) const { return static_cast<long long>(levels.at(n).size()); }

  /// Sort level lists; every constructor path calls this.
  void canonicalize();
  /// Shape validation: level ids unique, tables present and total with values
  /// in the right level.  Throws ValidationError.  Does not check the
  /// simplicial identities; that is check_simplicial_identities.
  void validate_structure() const;

  friend bool operator==(const TruncSSet&, const TruncSSet&) = default;
};

/// X(f) : X_m -> X_n for a monotone f : [n] -> [m], computed by peeling
/// cofaces (largest missing value first) then codegeneracies off `f`.
std::string apply_operator(const TruncSSet& S, const MonotoneMap& f,
                           const std::string& x);

/// All face/face, degeneracy/degeneracy and mixed identities that fit inside
/// the truncation, checked on every simplex.
CheckReport check_simplicial_identities(const TruncSSet& S);

/// Same levels, operator indices reversed (i -> n-i).
TruncSSet opposite(const TruncSSet& S);

/// A level-wise map between two truncated simplicial sets, defined up to
/// `level_count` (the common truncation of interest).
struct SimplicialMap {
  TruncSSet source;
  TruncSSet target;
  int level_count = 0;                 // maps defined for 0..level_count
  std::vector<Table> maps;             // maps[n]: source level n -> target level n

  /// Totality plus commutation with every face/degeneracy up to level_count.
  CheckReport verify() const;
  bool injective(int n) const;
  std::set<std::string> image(int n) const;
};

/// A décalage: the shifted body plus the discarded face maps, which assemble
/// into a level-wise map back to the set we started from.
struct AugmentedTruncSSet {
  TruncSSet body;
  TruncSSet reference;
  std::vector<Table> augmentation;     // body level n -> reference level n

  /// The augmentation commutes with all retained operators.
  CheckReport verify_augmentation() const;
};

/// Shift down one level forgetting the top face/degeneracy.
AugmentedTruncSSet upper_decalage(const TruncSSet& S);
/// Shift down one level forgetting the bottom face/degeneracy (indices drop).
AugmentedTruncSSet lower_decalage(const TruncSSet& S);

/// Edgewise subdivision: level n is S level 2n+1, operators restricted along
/// the doubling functor.  Result truncation is floor((N-1)/2).
TruncSSet edgewise_subdivision(const TruncSSet& S);

enum class DecSide { Bottom, Top };

/// The canonical level-wise embedding of a décalage into the subdivision:
/// n-fold bottom degeneracies on the bottom side, n-fold top degeneracies on
/// the top side (whose source carries the opposite orientation).
SimplicialMap embed_decalage_into_subdivision(const TruncSSet& S, DecSide side);

/// Spine maps X_n -> X_1 x_{X_0} ... x_{X_0} X_1 are bijections for n >= 2.
CheckReport check_segal(const TruncSSet& S);

enum class TwoSegalVariant { Upper, Lower, Both };

/// Exhaustive pullback checks for the upper/lower square families.
CheckReport check_two_segal(const TruncSSet& S, TwoSegalVariant variant);

/// The i-th spine edge (1-based) of an n-simplex: outer faces only.
std::string spine_edge(const TruncSSet& S, int n, int i, const std::string& id);

}  // namespace segal
