#include "segalkit/hypermoment.hpp"

#include <algorithm>
#include <stdexcept>

#include "segalkit/util.hpp"

namespace segal {

CheckReport check_ofs(const FinCat& C, const std::set<std::string>& L,
                      const std::set<std::string>& R, const std::string& tag) {
  CheckReport rep;
  auto isos = iso_arrows(C);
  for (const auto& a : isos) {
    if (!L.count(a)) rep.add(tag + "/iso-missing", {"first", a}, "");
    if (!R.count(a)) rep.add(tag + "/iso-missing", {"second", a}, "");
  }
  auto closed = [&](const std::set<std::string>& K, const char* side) {
    for (const auto& g : K)
      for (const auto& f : K) {
        if (C.cod.at(f) != C.dom.at(g)) continue;
        if (!K.count(C.compose(g, f)))
          rep.add(tag + "/not-closed", {side, g, f}, "composite leaves the class");
      }
  };
  closed(L, "first");
  closed(R, "second");

  for (const auto& m : C.arrows) {
    std::vector<std::pair<std::string, std::string>> facs;
    for (const auto& l : L) {
      if (C.dom.at(l) != C.dom.at(m)) continue;
      for (const auto& r : R) {
        if (C.dom.at(r) != C.cod.at(l) || C.cod.at(r) != C.cod.at(m)) continue;
        if (C.compose(r, l) == m) facs.emplace_back(l, r);
      }
    }
    rep.bump(tag + "/factorizations", static_cast<long long>(facs.size()));
    if (facs.empty()) {
      rep.add(tag + "/no-factorization", {m}, "");
      continue;
    }
    for (const auto& [l1, r1] : facs)
      for (const auto& [l2, r2] : facs) {
        long long connectors = 0;
        for (const auto& j : isos) {
          if (C.dom.at(j) != C.cod.at(l1) || C.cod.at(j) != C.cod.at(l2)) continue;
          if (C.compose(j, l1) == l2 && C.compose(r2, j) == r1) ++connectors;
        }
        if (connectors != 1)
          rep.add(tag + "/connector", {m, l1, l2},
                  "found " + std::to_string(connectors) +
                      " connecting invertibles, need exactly 1");
      }
  }
  rep.stats[tag + "/arrows"] = static_cast<long long>(C.arrows.size());
  rep.finalize();
  return rep;
}

ActiveInert active_inert(const UnaryOpCat& O) {
  ActiveInert AI;
  AI.expanded = expanded_category(O);
  AI.ambient = opposite_cat(AI.expanded.cat);
  FinCat fib = fiber_category(O);
  for (const auto& [id, pr] : AI.expanded.parts) {
    if (is_iso(fib, pr.left)) AI.active.insert(id);
    if (is_iso(O.cat, pr.right)) AI.inert.insert(id);
  }
  CheckReport a = check_ofs(AI.ambient, AI.active, AI.inert, "active-inert");
  CheckReport b = check_ofs(AI.ambient, AI.inert, AI.active, "inert-active");
  AI.ofs_active_inert = a.passed;
  AI.ofs_inert_active = b.passed;
  for (const auto& w : a.witnesses) AI.report.witnesses.push_back(w);
  for (const auto& w : b.witnesses) AI.report.witnesses.push_back(w);
  for (const auto& [k, v] : a.stats) AI.report.stats[k] += v;
  for (const auto& [k, v] : b.stats) AI.report.stats[k] += v;
  AI.report.finalize();
  return AI;
}

namespace {

std::set<std::string> units_impl(const UnaryOpCat& O, const ActiveInert& AI) {
  const FinCat& A = AI.ambient;
  std::set<std::string> out;
  for (const auto& x : A.objects) {
    bool unit = true;
    for (const auto& m : AI.active) {
      if (A.cod.at(m) != x) continue;
      long long sections = 0;
      for (const auto& s : AI.inert) {
        if (A.dom.at(s) != x || A.cod.at(s) != A.dom.at(m)) continue;
        if (A.compose(m, s) == A.ident.at(x)) ++sections;
      }
      if (sections != 1) {
        unit = false;
        break;
      }
    }
    if (unit) out.insert(x);
  }

  std::set<std::string> direct;
  for (const auto& x : O.cat.objects) {
    bool all_iso = true;
    for (const auto& a : O.cat.out_of(x))
      if (!is_iso(O.cat, a)) {
        all_iso = false;
        break;
      }
    if (all_iso) direct.insert(x);
  }
  if (out != direct)
    throw std::logic_error(
        "unit objects do not match the objects all of whose outgoing arrows are "
        "invertible");
  auto lt = local_terminals(O.cat);
  for (const auto& u : out)
    if (!lt.count(u))
      throw std::logic_error("unit object " + u + " is not a local terminal");
  return out;
}

}  // namespace

std::set<std::string> units(const UnaryOpCat& O) {
  return units_impl(O, active_inert(O));
}

json HypermomentReport::to_json() const {
  json j;
  j["active"] = active;
  j["inert"] = inert;
  j["units"] = units;
  j["ofs_active_inert"] = ofs_active_inert;
  j["ofs_inert_active"] = ofs_inert_active;
  j["cond_isos_are_automorphisms"] = cond_isos_are_automorphisms;
  j["cond_terminal_domains_identities"] = cond_terminal_domains_identities;
  j["strict_classes_exact"] = strict_classes_exact;
  j["is_hypermoment"] = is_hypermoment;
  j["is_unital"] = is_unital;
  j["is_rigid"] = is_rigid;
  j["roundtrip_ok"] = roundtrip_ok;
  j["passed"] = passed;
  json ws = json::array();
  for (const auto& w : witnesses)
    ws.push_back({{"kind", w.kind}, {"subject", w.subject}, {"detail", w.detail}});
  j["witnesses"] = ws;
  return j;
}

HypermomentReport check_hypermoment(const UnaryOpCat& O) {
  HypermomentReport H;
  ActiveInert AI = active_inert(O);
  H.active = AI.active;
  H.inert = AI.inert;
  H.ofs_active_inert = AI.ofs_active_inert;
  H.ofs_inert_active = AI.ofs_inert_active;
  for (const auto& w : AI.report.witnesses) H.witnesses.push_back(w);

  H.units = units_impl(O, AI);
  const FinCat& A = AI.ambient;
  auto ambient_isos = iso_arrows(A);
  auto cat_isos = iso_arrows(O.cat);

  H.cond_isos_are_automorphisms = true;
  for (const auto& a : cat_isos)
    if (O.cat.dom.at(a) != O.cat.cod.at(a)) {
      H.cond_isos_are_automorphisms = false;
      break;
    }
  H.cond_terminal_domains_identities = true;
  for (const auto& a : O.cat.arrows)
    if (O.chosen.count(O.cat.dom.at(a)) && !O.cat.is_identity(a)) {
      H.cond_terminal_domains_identities = false;
      break;
    }

  std::set<std::string> strict_active, strict_inert;
  for (const auto& [id, pr] : AI.expanded.parts) {
    if (pr.left == canonical_to_terminal(O, AI.expanded.cat.dom.at(id)))
      strict_active.insert(id);
    if (O.cat.is_identity(pr.right)) strict_inert.insert(id);
  }
  H.strict_classes_exact = strict_active == H.active && strict_inert == H.inert;

  auto from_units = [&](const std::set<std::string>& cls,
                        const std::string& kind) -> bool {
    bool ok = true;
    for (const auto& x : A.objects) {
      std::vector<std::string> in;
      for (const auto& m : cls)
        if (A.cod.at(m) == x && H.units.count(A.dom.at(m))) in.push_back(m);
      if (in.empty()) {
        H.witnesses.push_back({kind, {x}, "no arrow from a unit object"});
        ok = false;
        continue;
      }
      for (const auto& s1 : in)
        for (const auto& s2 : in) {
          bool connected = false;
          for (const auto& j : ambient_isos) {
            if (A.dom.at(j) != A.dom.at(s1) || A.cod.at(j) != A.dom.at(s2))
              continue;
            if (A.compose(s2, j) == s1) {
              connected = true;
              break;
            }
          }
          if (!connected) {
            H.witnesses.push_back(
                {kind, {x, s1, s2}, "no connecting invertible between unit arrows"});
            ok = false;
          }
        }
    }
    return ok;
  };
  H.is_hypermoment = from_units(H.inert, "essentially-unique-inert");
  H.is_unital = from_units(H.active, "essentially-unique-active");

  H.is_rigid = true;
  for (const auto& j : ambient_isos)
    if (A.dom.at(j) != A.cod.at(j)) {
      H.is_rigid = false;
      H.witnesses.push_back({"rigid", {j}, "invertible arrow is not an endo"});
    }
  for (const auto& j : ambient_isos) {
    if (A.dom.at(j) != A.cod.at(j)) continue;
    for (const auto& m : H.active) {
      if (A.cod.at(m) != A.dom.at(j) || !H.units.count(A.dom.at(m))) continue;
      if (A.compose(j, m) != m) {
        H.is_rigid = false;
        H.witnesses.push_back(
            {"rigid", {j, m}, "automorphism moves an arrow from a unit"});
      }
    }
  }

  try {
    FinCat W = wide_subcategory(A, H.active);
    H.roundtrip_ok = find_isomorphism(opposite_cat(W), O.cat).has_value();
  } catch (const ValidationError&) {
    H.roundtrip_ok = false;
    H.witnesses.push_back(
        {"roundtrip", {}, "the class of arrows with invertible fiber half is not "
                          "a wide subcategory"});
  }

  bool gated_ok = true;
  if (H.cond_isos_are_automorphisms && H.cond_terminal_domains_identities) {
    gated_ok = H.is_hypermoment && H.is_unital && H.is_rigid &&
               H.strict_classes_exact && H.roundtrip_ok;
    if (!H.strict_classes_exact)
      H.witnesses.push_back({"strict-classes", {},
                             "classes do not match their closed forms"});
    if (!H.roundtrip_ok)
      H.witnesses.push_back(
          {"roundtrip", {}, "dual of the arrows with invertible fiber half does "
                            "not reproduce the category"});
    for (const auto& a : cat_isos)
      if (!O.cat.is_identity(a)) {
        gated_ok = false;
        H.witnesses.push_back({"plain-iso", {a}, "invertible but not an identity"});
      }
    FinCat fib = fiber_category(O);
    for (const auto& a : iso_arrows(fib))
      if (!fib.is_identity(a)) {
        gated_ok = false;
        H.witnesses.push_back(
            {"inclusion-iso", {a}, "invertible inclusion is not an identity"});
      }
  }
  H.passed = H.ofs_active_inert && H.ofs_inert_active && gated_ok;
  return H;
}

}  // namespace segal
