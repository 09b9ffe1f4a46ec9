#include "segalkit/expansion.hpp"

#include <algorithm>
#include <stdexcept>

#include "segalkit/util.hpp"

namespace segal {

FinCat fiber_category(const UnaryOpCat& O) {
  O.validate_structure();
  FinCat F;
  F.objects = O.cat.objects;
  F.arrows = O.cat.arrows;  // the inclusion labelled g runs phi0(g) -> dom(g)
  for (const auto& g : O.cat.arrows) {
    F.dom[g] = O.fiber(g);
    F.cod[g] = O.cat.dom.at(g);
  }
  for (const auto& x : O.cat.objects) F.ident[x] = canonical_to_terminal(O, x);
  for (const auto& g : O.cat.arrows)
    for (const auto& f : O.cat.arrows) {
      if (O.cat.dom.at(f) != O.fiber(g)) continue;
      auto lifts = blow_up_lifts(O, g, f);
      if (lifts.size() != 1)
        throw PreconditionError(
            "composite of fiber inclusions needs a unique decomposition of " + g +
            " with fiber map " + f + ", found " + std::to_string(lifts.size()));
      F.comp[{g, f}] = lifts.front().first;
    }
  F.canonicalize();
  F.validate();
  return F;
}

CheckReport classify_fiber_isos(const UnaryOpCat& O) {
  FinCat F = fiber_category(O);
  CheckReport rep;
  auto lt = local_terminals(O.cat);

  for (const auto& g : O.cat.arrows) {
    bool right_inv = false;
    for (const auto& s : F.arrows) {
      auto it = F.comp.find({g, s});
      if (it != F.comp.end() && it->second == F.ident.at(F.cod.at(g))) {
        right_inv = true;
        break;
      }
    }
    bool factors = false;
    const std::string tau = canonical_to_terminal(O, O.cat.dom.at(g));
    for (const auto& k : O.cat.arrows) {
      auto it = O.cat.comp.find({k, tau});
      if (it != O.cat.comp.end() && it->second == g) {
        factors = true;
        break;
      }
    }
    if (right_inv != factors)
      rep.add("fiber-right-inverse", {g},
              right_inv ? "inclusion has a right inverse but the arrow does not "
                          "factor through the chosen terminal"
                        : "arrow factors through the chosen terminal but the "
                          "inclusion has no right inverse");

    bool inv = is_iso(F, g);
    bool target_terminal = lt.count(O.cat.cod.at(g)) > 0;
    if (inv != target_terminal)
      rep.add("fiber-iso", {g},
              inv ? "inclusion is invertible but the target is not a local "
                    "terminal"
                  : "target is a local terminal but the inclusion is not "
                    "invertible");
    if (inv) rep.bump("invertible-inclusions");
  }

  if (check_unique_fiber_condition(O).passed) {
    auto isos = iso_arrows(F);
    std::map<std::pair<std::string, std::string>, int> per_pair;
    for (const auto& a : isos) ++per_pair[{F.dom.at(a), F.cod.at(a)}];
    for (const auto& [k, n] : per_pair)
      if (n > 1)
        rep.add("fiber-iso-preorder", {k.first, k.second},
                std::to_string(n) + " parallel invertible inclusions");
    rep.stats["preorder-checked"] = 1;
  }

  rep.stats["arrows"] = static_cast<long long>(O.cat.arrows.size());
  rep.finalize();
  return rep;
}

ExpandedCategory expanded_category(const UnaryOpCat& O) {
  FinCat fib = fiber_category(O);
  ExpandedCategory E;
  E.cat.objects = O.cat.objects;
  for (const auto& left : O.cat.arrows)
    for (const auto& right : O.cat.arrows) {
      if (O.cat.dom.at(right) != O.fiber(left)) continue;
      std::string id = encode_list({left, right});
      E.cat.arrows.push_back(id);
      E.cat.dom[id] = O.cat.dom.at(left);
      E.cat.cod[id] = O.cat.cod.at(right);
      E.parts[id] = {left, right};
    }
  for (const auto& x : O.cat.objects)
    E.cat.ident[x] =
        encode_list({canonical_to_terminal(O, x), O.cat.ident.at(x)});

  for (const auto& e2 : E.cat.arrows)
    for (const auto& e1 : E.cat.arrows) {
      if (E.cat.cod.at(e1) != E.cat.dom.at(e2)) continue;
      const auto& [f1, g1] = E.parts.at(e1);
      const auto& [f2, g2] = E.parts.at(e2);
      const auto& swapped = O.fiber_map(g1, f2);
      const auto& mid = O.cat.compose(f2, g1);
      const auto& k = fib.compose(f1, mid);
      E.cat.comp[{e2, e1}] =
          encode_list({k, O.cat.compose(g2, swapped)});
    }
  E.cat.canonicalize();
  E.cat.validate();
  return E;
}

std::pair<std::string, std::string> factorize_subdivision(const TruncSSet& S,
                                                          const std::string& m,
                                                          FactorOrder order) {
  if (S.trunc_level < 5)
    throw PreconditionError("factorization needs truncation at least 5");
  if (!S.has_simplex(3, m))
    throw ValidationError("no level-3 simplex " + m + " to factor");

  std::string cell;
  if (order == FactorOrder::LR)
    cell = S.apply_degen(4, 0, S.apply_degen(3, 2, m));
  else
    cell = S.apply_degen(4, 1, S.apply_degen(3, 3, m));

  auto sub_face = [&](int i) {
    return apply_operator(
        S, delta_map_image(DeltaFunctor::Subdivision, MonotoneMap::coface(2, i)),
        cell);
  };
  std::string first = sub_face(2);
  std::string second = sub_face(0);
  if (sub_face(1) != m)
    throw std::logic_error("factorization cell does not compose to the input");

  if (order == FactorOrder::LR) {
    if (first != S.apply_degen(2, 2, S.apply_face(3, 3, m)) ||
        second != S.apply_degen(2, 0, S.apply_face(3, 1, m)))
      throw std::logic_error("factorization does not match its closed form");
  } else {
    if (first != S.apply_degen(2, 0, S.apply_face(3, 0, m)) ||
        second != S.apply_degen(2, 2, S.apply_face(3, 2, m)))
      throw std::logic_error("factorization does not match its closed form");
  }
  return {first, second};
}

CheckReport check_strict_factorization(const FinCat& C,
                                       const std::set<std::string>& L,
                                       const std::set<std::string>& R) {
  C.validate();
  CheckReport rep;
  for (const auto& a : L)
    if (!C.has_arrow(a)) rep.add("class-unknown", {a}, "not an arrow");
  for (const auto& a : R)
    if (!C.has_arrow(a)) rep.add("class-unknown", {a}, "not an arrow");
  if (!rep.witnesses.empty()) {
    rep.finalize();
    return rep;
  }

  for (const auto& x : C.objects) {
    if (!L.count(C.ident.at(x)))
      rep.add("class-not-wide", {"first", x}, "identity missing");
    if (!R.count(C.ident.at(x)))
      rep.add("class-not-wide", {"second", x}, "identity missing");
  }
  auto closed = [&](const std::set<std::string>& K, const char* tag) {
    for (const auto& g : K)
      for (const auto& f : K) {
        if (C.cod.at(f) != C.dom.at(g)) continue;
        if (!K.count(C.compose(g, f)))
          rep.add("class-not-closed", {tag, g, f},
                  "composite leaves the class");
      }
  };
  closed(L, "first");
  closed(R, "second");

  for (const auto& m : C.arrows) {
    long long count = 0;
    for (const auto& l : L) {
      if (C.dom.at(l) != C.dom.at(m)) continue;
      for (const auto& r : R) {
        if (C.dom.at(r) != C.cod.at(l) || C.cod.at(r) != C.cod.at(m)) continue;
        if (C.compose(r, l) == m) ++count;
      }
    }
    rep.bump("factorizations", count);
    if (count != 1)
      rep.add("factor-count", {m},
              "found " + std::to_string(count) + " factorizations, need exactly 1");
  }

  for (const auto& a : C.arrows)
    if (L.count(a) && R.count(a) && !C.is_identity(a))
      rep.add("class-overlap", {a}, "non-identity arrow lies in both classes");

  rep.stats["arrows"] = static_cast<long long>(C.arrows.size());
  rep.finalize();
  return rep;
}

std::set<std::string> iso_core(const UnaryOpCat& O, const ExpandedCategory& E) {
  FinCat fib = fiber_category(O);
  std::set<std::string> searched = iso_arrows(E.cat);
  std::set<std::string> componentwise;
  for (const auto& [id, pr] : E.parts)
    if (is_iso(fib, pr.left) && is_iso(O.cat, pr.right)) componentwise.insert(id);
  if (searched != componentwise)
    throw std::logic_error(
        "invertible expanded arrows do not match the component-wise description");
  return searched;
}

}  // namespace segal
