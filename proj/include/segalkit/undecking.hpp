#pragma once

#include "segalkit/opcat.hpp"

namespace segal {

/// A composable chain whose last arrow lands on a chosen local terminal.
/// Length 0 chains are bare chosen terminals.  The terminal object is stored
/// explicitly and cross-validated against the arrows.
struct Chain {
  std::vector<std::string> arrows;  // last one is the canonical arrow to `terminal`
  std::string terminal;             // cod of the last arrow / the object itself

  int length() const { return static_cast<int>(arrows.size()); }
  std::string id() const;

  friend bool operator==(const Chain&, const Chain&) = default;
  friend bool operator<(const Chain& a, const Chain& b) {
    return std::tie(a.arrows, a.terminal) < std::tie(b.arrows, b.terminal);
  }
};

/// All level-n elements of the undecking: terminal-capped chains of length n.
std::vector<Chain> chains_of_length(const UnaryOpCat& O, int n);

/// The extra top face: drop the terminal cap, pad with an identity, take
/// fibers.  Sends a length-n chain to a length-(n-1) chain; at length 1 the
/// result is the bare fiber of the identity.
Chain top_face(const UnaryOpCat& O, const Chain& c);

/// The inherited face d_i (0 <= i < length): drop the first arrow or compose
/// at position i.  Stays terminal-capped.
Chain inner_face(const UnaryOpCat& O, const Chain& c, int i);

/// Insert the identity of vertex j (0 <= j <= length).
Chain degeneracy(const UnaryOpCat& O, const Chain& c, int j);

/// The undecking as a truncated simplicial set: level n = chains of length n,
/// inherited operators plus the fiber-built top face.
TruncSSet undeck(const UnaryOpCat& O, int N);

struct UndeckData {
  TruncSSet body;
  std::vector<std::map<std::string, Chain>> chains;  // per level, id -> chain
};
UndeckData undeck_with_chains(const UnaryOpCat& O, int N);

/// The tower of rows obtained by repeatedly taking the top face, with the
/// spine read off the row ends: alternating chosen terminals and chain tails.
struct FiberGrid {
  std::vector<Chain> rows;          // rows[0] = input, lengths n, n-1, ..., 1
  std::string apex;                 // chosen terminal closing the tower
  std::vector<std::string> spine;   // u^n, x^{n-1}, u^{n-1}, ..., x^0, u^0
  CheckReport coherence;            // taking fibers twice = fiber of truncation
};

FiberGrid simplex_grid(const UnaryOpCat& O, const Chain& c);

/// Round trip from a simplicial set: rebuild the operadic structure, undeck
/// it, and exhibit a level-wise isomorphism back to Z (up to `level`).
CheckReport verify_round_trips(const TruncSSet& Z, int level);

/// Round trip from an operadic category: undeck, shift down, and exhibit an
/// isomorphism of operadic structures back to O.
CheckReport verify_round_trips(const UnaryOpCat& O, int level);

}  // namespace segal
