#pragma once

#include "segalkit/expansion.hpp"

namespace segal {

/// The ambient category for the moment-style analysis: the opposite of the
/// expanded category, together with the active/inert arrow classes.  Active
/// arrows have an invertible fiber half, inert arrows an invertible plain
/// half.
struct ActiveInert {
  FinCat ambient;                   // opposite of the expanded category
  ExpandedCategory expanded;        // kept for part lookups
  std::set<std::string> active;
  std::set<std::string> inert;
  bool ofs_active_inert = false;
  bool ofs_inert_active = false;
  CheckReport report;               // OFS verification, both orders
};

ActiveInert active_inert(const UnaryOpCat& O);

/// (L, R) is an orthogonal factorization system: both classes are wide and
/// hold all isos, every arrow factors as R∘L, uniquely up to a unique
/// connecting iso (enumerated).
CheckReport check_ofs(const FinCat& C, const std::set<std::string>& L,
                      const std::set<std::string>& R, const std::string& tag);

/// Objects whose every incoming active arrow has exactly one inert section.
/// Hard-fails (logic_error) if this disagrees with the direct description
/// "every arrow of O.cat out of the object is invertible".
std::set<std::string> units(const UnaryOpCat& O);

struct HypermomentReport {
  std::set<std::string> active, inert, units;
  bool ofs_active_inert = false;
  bool ofs_inert_active = false;
  bool cond_isos_are_automorphisms = false;
  bool cond_terminal_domains_identities = false;
  bool strict_classes_exact = false;   // active/inert coincide with the strict halves
  bool is_hypermoment = false;
  bool is_unital = false;
  bool is_rigid = false;
  bool roundtrip_ok = false;           // dual of the active part matches O.cat
  bool passed = false;                 // internal consistency gate
  std::vector<Witness> witnesses;

  json to_json() const;
};

/// Full gate: classes and OFS checks, unit set, the hypermoment / unital /
/// rigid clauses, the two sufficient conditions, and—when they hold—the
/// reconstruction of O.cat from the active part.
HypermomentReport check_hypermoment(const UnaryOpCat& O);

}  // namespace segal
