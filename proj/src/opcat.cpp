#include "segalkit/opcat.hpp"

#include <algorithm>

#include "segalkit/bridge.hpp"
#include "segalkit/util.hpp"

namespace segal {

const std::string& UnaryOpCat::fiber(const std::string& arrow) const {
  auto it = phi0.find(arrow);
  if (it == phi0.end()) throw ValidationError("no fiber assigned to " + arrow);
  return it->second;
}

const std::string& UnaryOpCat::fiber_map(const std::string& top,
                                         const std::string& base) const {
  auto it = phi1.find({top, base});
  if (it == phi1.end())
    throw ValidationError("no fiber map assigned to (" + top + ", " + base + ")");
  return it->second;
}

void UnaryOpCat::validate_structure() const {
  cat.validate();
  for (const auto& x : chosen)
    if (!cat.has_object(x))
      throw ValidationError("chosen terminal is not an object: " + x);
  for (const auto& a : cat.arrows) {
    if (!phi0.count(a)) throw ValidationError("no fiber assigned to " + a);
    if (!cat.has_object(phi0.at(a)))
      throw ValidationError("fiber of " + a + " is not an object");
  }
  if (phi0.size() != cat.arrows.size())
    throw ValidationError("fiber table keyed by unknown arrows");
  for (const auto& [k, v] : phi1) {
    if (!cat.has_arrow(k.first) || !cat.has_arrow(k.second))
      throw ValidationError("fiber map keyed by unknown arrow");
    if (!cat.has_arrow(v)) throw ValidationError("fiber map value is not an arrow");
    if (cat.cod.at(k.first) != cat.dom.at(k.second))
      throw ValidationError("fiber map keyed by non-composable pair (" + k.first +
                            ", " + k.second + ")");
  }
  for (const auto& g : cat.arrows)
    for (const auto& f : cat.arrows)
      if (cat.cod.at(g) == cat.dom.at(f) && !phi1.count({g, f}))
        throw ValidationError("missing fiber map for (" + g + ", " + f + ")");
}

std::string canonical_to_terminal(const UnaryOpCat& O, const std::string& x) {
  auto comps = components(O.cat);
  if (!comps.count(x)) throw ValidationError("unknown object " + x);
  std::vector<std::string> mine;
  for (const auto& t : O.chosen)
    if (comps.at(t) == comps.at(x)) mine.push_back(t);
  if (mine.size() != 1)
    throw PreconditionError("component of " + x + " has " +
                            std::to_string(mine.size()) +
                            " chosen terminals, need exactly 1");
  auto arrows = O.cat.hom(x, mine[0]);
  if (arrows.size() != 1)
    throw PreconditionError("object " + x + " has " +
                            std::to_string(arrows.size()) +
                            " arrows to the chosen terminal, need exactly 1");
  return arrows[0];
}

CheckReport check_unary_operadic(const UnaryOpCat& O) {
  O.validate_structure();
  CheckReport rep;
  const FinCat& C = O.cat;

  auto lt = local_terminals(C);
  auto comps = components(C);
  for (const auto& t : O.chosen)
    if (!lt.count(t))
      rep.add("chosen-terminal", {t}, "chosen object is not a local terminal");
  {
    std::map<std::string, int> per_comp;
    for (const auto& [x, r] : comps) {
      (void)x;
      per_comp.emplace(r, 0);
    }
    for (const auto& t : O.chosen) ++per_comp[comps.at(t)];
    for (const auto& [r, k] : per_comp)
      if (k != 1)
        rep.add("chosen-terminal", {r},
                "component has " + std::to_string(k) +
                    " chosen terminals, need exactly 1");
  }
  for (const auto& x : C.objects)
    if (!O.chosen.count(O.fiber(C.ident.at(x))))
      rep.add("identity-fiber-chosen", {x},
              "fiber of the identity is not a chosen terminal");
  if (!rep.witnesses.empty()) {
    rep.finalize();
    return rep;
  }

  std::map<std::string, std::string> tau;
  for (const auto& x : C.objects) tau[x] = canonical_to_terminal(O, x);

  for (const auto& x : C.objects)
    if (O.fiber(tau.at(x)) != x)
      rep.add("terminal-arrow-fiber", {x},
              "fiber of the canonical arrow to the terminal is not the source");
  for (const auto& h : C.arrows)
    if (O.fiber_map(h, tau.at(C.cod.at(h))) != h)
      rep.add("terminal-fiber-map", {h},
              "fiber map over the canonical terminal arrow is not the arrow itself");

  for (const auto& [k, p] : O.phi1) {
    const auto& [g, f] = k;
    rep.bump("pairs");
    if (C.dom.at(p) != O.fiber(C.compose(f, g)) || C.cod.at(p) != O.fiber(f))
      rep.add("fiber-map-endpoints", {g, f},
              "fiber map does not run from the fiber of the composite to the "
              "fiber of the base");
    if (O.fiber(p) != O.fiber(g))
      rep.add("fiber-map-base", {g, f},
              "fiber of the fiber map differs from the fiber of the top arrow");
  }

  for (const auto& tr : composable_chains(C, 3)) {
    rep.bump("triples");
    const auto& h = tr[0];
    const auto& g = tr[1];
    const auto& f = tr[2];
    const auto& q = O.fiber_map(h, C.compose(f, g));
    const auto& p = O.fiber_map(g, f);
    if (C.cod.at(q) != C.dom.at(p)) {
      rep.add("fiber-map-coherence", {h, g, f},
              "induced fiber maps are not composable");
      continue;
    }
    if (O.fiber_map(h, g) != O.fiber_map(q, p))
      rep.add("fiber-map-coherence", {h, g, f},
              "fiber map of the inner pair differs from the fiber map of the "
              "induced pair");
    if (O.fiber_map(C.compose(g, h), f) != C.compose(p, q))
      rep.add("slice-composition", {h, g, f},
              "fiber map of a composite is not the composite of fiber maps");
  }
  for (const auto& f : C.arrows)
    if (O.fiber_map(C.ident.at(C.dom.at(f)), f) != C.ident.at(O.fiber(f)))
      rep.add("slice-identity", {f},
              "fiber map over an identity is not the identity of the fiber");

  for (int len = 2; len <= 4; ++len)
    for (const auto& ch : composable_chains(C, len)) {
      rep.bump("iterated-chains");
      std::vector<std::string> once;
      try {
        once = fiber_chain(O, ch);
      } catch (const ValidationError&) {
        rep.add("iterated-fiber", {encode_list(ch)},
                "fiber chain is not composable");
        continue;
      }
      std::vector<std::string> head(ch.begin(), ch.end() - 1);
      std::vector<std::string> lhs, rhs;
      try {
        lhs = fiber_chain(O, once);
        rhs = fiber_chain(O, head);
      } catch (const ValidationError&) {
        rep.add("iterated-fiber", {encode_list(ch)},
                "iterated fiber chain is not composable");
        continue;
      }
      if (lhs != rhs)
        rep.add("iterated-fiber", {encode_list(ch)},
                "dropping the last arrow and iterating the fiber chain disagree");
    }

  rep.stats["objects"] = static_cast<long long>(C.objects.size());
  rep.stats["arrows"] = static_cast<long long>(C.arrows.size());
  rep.finalize();
  return rep;
}

std::vector<std::pair<std::string, std::string>> blow_up_lifts(
    const UnaryOpCat& O, const std::string& h, const std::string& p) {
  const FinCat& C = O.cat;
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& g : C.arrows) {
    if (C.dom.at(g) != C.dom.at(h)) continue;
    for (const auto& f : C.arrows) {
      if (C.dom.at(f) != C.cod.at(g) || C.cod.at(f) != C.cod.at(h)) continue;
      if (C.compose(f, g) != h) continue;
      if (O.fiber_map(g, f) == p) out.emplace_back(g, f);
    }
  }
  return out;
}

CheckReport check_blow_up(const UnaryOpCat& O) {
  O.validate_structure();
  CheckReport rep;
  const FinCat& C = O.cat;
  for (const auto& h : C.arrows) {
    const auto& fib = O.fiber(h);
    for (const auto& p : C.arrows) {
      if (C.dom.at(p) != fib) continue;
      rep.bump("pairs-checked");
      auto lifts = blow_up_lifts(O, h, p);
      if (lifts.size() != 1)
        rep.add("blow-up", {h, p},
                "found " + std::to_string(lifts.size()) +
                    " decompositions with this fiber map, need exactly 1");
    }
  }
  rep.finalize();
  return rep;
}

FiberClassification classify_fibers(const UnaryOpCat& O) {
  O.validate_structure();
  FiberClassification out;
  auto lt = local_terminals(O.cat);
  for (const auto& a : O.cat.arrows) {
    FiberRecord r;
    r.fiber = O.fiber(a);
    r.fiber_is_local_terminal = lt.count(r.fiber) > 0;
    r.fiber_is_chosen = O.chosen.count(r.fiber) > 0;
    r.arrow_is_iso = is_iso(O.cat, a);
    r.arrow_is_identity = O.cat.is_identity(a);
    if (r.fiber_is_local_terminal != r.arrow_is_iso)
      out.report.add("fiber-iso-law", {a},
                     r.fiber_is_local_terminal
                         ? "fiber is a local terminal but the arrow is not invertible"
                         : "arrow is invertible but the fiber is not a local terminal");
    if (r.fiber_is_chosen != r.arrow_is_identity)
      out.report.add("fiber-identity-law", {a},
                     r.fiber_is_chosen
                         ? "fiber is chosen but the arrow is not an identity"
                         : "arrow is an identity but the fiber is not chosen");
    if (r.arrow_is_iso) out.report.bump("isos");
    if (r.arrow_is_identity) out.report.bump("identities");
    out.records[a] = std::move(r);
  }
  out.report.stats["arrows"] = static_cast<long long>(O.cat.arrows.size());
  out.report.finalize();
  return out;
}

UnaryOpCat operadic_from_upper_two_segal(const TruncSSet& Z) {
  Z.validate_structure();
  if (Z.trunc_level < 4)
    throw PreconditionError(
        "extracting the operadic structure needs truncation at least 4");
  CheckReport two = check_two_segal(Z, TwoSegalVariant::Upper);
  if (!two.passed)
    throw SegalFailure("the upper exactness squares fail; no operadic structure",
                       std::move(two));

  UnaryOpCat O;
  O.cat = category_from_segal(upper_decalage(Z).body);
  for (const auto& z : Z.levels[0]) O.chosen.insert(Z.apply_degen(0, 0, z));
  for (const auto& s : Z.levels[2]) O.phi0[s] = Z.apply_face(2, 2, s);

  std::map<std::pair<std::string, std::string>, std::vector<std::string>> fillers;
  for (const auto& z : Z.levels[3])
    fillers[{Z.apply_face(3, 0, z), Z.apply_face(3, 2, z)}].push_back(z);
  for (const auto& g : O.cat.arrows)
    for (const auto& f : O.cat.arrows) {
      if (O.cat.cod.at(g) != O.cat.dom.at(f)) continue;
      auto it = fillers.find({f, g});
      if (it == fillers.end() || it->second.size() != 1)
        throw ValidationError("filler for the fiber map of (" + g + ", " + f +
                              ") is not unique");
      O.phi1[{g, f}] = Z.apply_face(3, 3, it->second.front());
    }
  O.validate_structure();
  return O;
}

CheckReport check_unique_fiber_condition(const UnaryOpCat& O) {
  O.validate_structure();
  CheckReport rep;
  auto lt = local_terminals(O.cat);
  for (const auto& w : O.cat.arrows) {
    if (!lt.count(O.cat.cod.at(w))) continue;
    if (O.fiber(w) != O.cat.dom.at(w)) continue;
    rep.bump("candidates");
    if (!O.chosen.count(O.cat.cod.at(w)))
      rep.add("unique-fiber", {w},
              "fiber equals the source but the target terminal is not chosen");
  }
  rep.finalize();
  return rep;
}

std::vector<std::string> fiber_chain(const UnaryOpCat& O,
                                     const std::vector<std::string>& chain) {
  if (chain.empty()) throw PreconditionError("fiber chain of an empty chain");
  const size_t m = chain.size();
  for (size_t i = 0; i + 1 < m; ++i)
    if (O.cat.cod.at(chain[i]) != O.cat.dom.at(chain[i + 1]))
      throw ValidationError("chain not composable at position " + std::to_string(i));
  std::vector<std::string> out;
  for (size_t i = 0; i + 1 < m; ++i) {
    std::string tail = chain[i + 1];
    for (size_t k = i + 2; k < m; ++k) tail = O.cat.compose(chain[k], tail);
    out.push_back(O.fiber_map(chain[i], tail));
  }
  return out;
}

}  // namespace segal
