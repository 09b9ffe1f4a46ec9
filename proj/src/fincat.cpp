#include "segalkit/fincat.hpp"

#include <algorithm>
#include <functional>

#include "segalkit/util.hpp"

namespace segal {

const std::string& FinCat::compose(const std::string& g, const std::string& f) const {
  auto it = comp.find({g, f});
  if (it == comp.end())
    throw ValidationError("composite not defined for (" + g + ", " + f + ")");
  return it->second;
}

bool FinCat::is_identity(const std::string& a) const {
  auto d = dom.find(a);
  if (d == dom.end()) return false;
  auto i = ident.find(d->second);
  return i != ident.end() && i->second == a;
}

bool FinCat::has_object(const std::string& x) const {
  return std::binary_search(objects.begin(), objects.end(), x);
}

bool FinCat::has_arrow(const std::string& a) const {
  return std::binary_search(arrows.begin(), arrows.end(), a);
}

std::vector<std::string> FinCat::hom(const std::string& x,
                                     const std::string& y) const {
  std::vector<std::string> out;
  for (const auto& a : arrows)
    if (dom.at(a) == x && cod.at(a) == y) out.push_back(a);
  return out;
}

std::vector<std::string> FinCat::out_of(const std::string& x) const {
  std::vector<std::string> out;
  for (const auto& a : arrows)
    if (dom.at(a) == x) out.push_back(a);
  return out;
}

std::vector<std::string> FinCat::into(const std::string& x) const {
  std::vector<std::string> out;
  for (const auto& a : arrows)
    if (cod.at(a) == x) out.push_back(a);
  return out;
}

void FinCat::canonicalize() {
  std::sort(objects.begin(), objects.end());
  std::sort(arrows.begin(), arrows.end());
}

void FinCat::validate() const {
  {
    std::set<std::string> seen(objects.begin(), objects.end());
    if (seen.size() != objects.size()) throw ValidationError("duplicate object id");
    std::set<std::string> aseen(arrows.begin(), arrows.end());
    if (aseen.size() != arrows.size()) throw ValidationError("duplicate arrow id");
  }
  for (const auto& a : arrows) {
    if (!dom.count(a) || !cod.count(a))
      throw ValidationError("arrow without endpoints: " + a);
    if (!has_object(dom.at(a)) || !has_object(cod.at(a)))
      throw ValidationError("arrow with unknown endpoint: " + a);
  }
  if (dom.size() != arrows.size() || cod.size() != arrows.size())
    throw ValidationError("endpoint tables keyed by unknown arrows");
  for (const auto& x : objects) {
    if (!ident.count(x)) throw ValidationError("object without identity: " + x);
    const auto& e = ident.at(x);
    if (!has_arrow(e) || dom.at(e) != x || cod.at(e) != x)
      throw ValidationError("bad identity arrow on " + x);
  }
  if (ident.size() != objects.size())
    throw ValidationError("identity table keyed by unknown objects");

  for (const auto& [k, gf] : comp) {
    const auto& [g, f] = k;
    if (!has_arrow(g) || !has_arrow(f) || !has_arrow(gf))
      throw ValidationError("composite table mentions unknown arrow");
    if (cod.at(f) != dom.at(g))
      throw ValidationError("composite of non-composable pair (" + g + ", " + f + ")");
    if (dom.at(gf) != dom.at(f) || cod.at(gf) != cod.at(g))
      throw ValidationError("composite with wrong endpoints for (" + g + ", " + f +
                            ")");
  }
  for (const auto& g : arrows)
    for (const auto& f : arrows)
      if (cod.at(f) == dom.at(g) && !comp.count({g, f}))
        throw ValidationError("missing composite for (" + g + ", " + f + ")");

  for (const auto& f : arrows) {
    if (compose(f, ident.at(dom.at(f))) != f)
      throw ValidationError("right unit law fails at " + f);
    if (compose(ident.at(cod.at(f)), f) != f)
      throw ValidationError("left unit law fails at " + f);
  }
  for (const auto& h : arrows)
    for (const auto& g : arrows) {
      if (cod.at(g) != dom.at(h)) continue;
      const auto& hg = compose(h, g);
      for (const auto& f : arrows) {
        if (cod.at(f) != dom.at(g)) continue;
        if (compose(hg, f) != compose(h, compose(g, f)))
          throw ValidationError("associativity fails at (" + h + ", " + g + ", " + f +
                                ")");
      }
    }
}

FinCat opposite_cat(const FinCat& C) {
  FinCat R;
  R.objects = C.objects;
  R.arrows = C.arrows;
  R.dom = C.cod;
  R.cod = C.dom;
  R.ident = C.ident;
  for (const auto& [k, gf] : C.comp) R.comp[{k.second, k.first}] = gf;
  return R;
}

std::map<std::string, std::string> components(const FinCat& C) {
  std::map<std::string, std::string> parent;
  for (const auto& x : C.objects) parent[x] = x;
  std::function<std::string(const std::string&)> find =
      [&](const std::string& x) -> std::string {
    if (parent[x] == x) return x;
    return parent[x] = find(parent[x]);
  };
  for (const auto& a : C.arrows) {
    auto ra = find(C.dom.at(a)), rb = find(C.cod.at(a));
    if (ra != rb) parent[std::min(ra, rb)] = std::max(ra, rb);
  }
  std::map<std::string, std::string> out;
  for (const auto& x : C.objects) out[x] = find(x);
  return out;
}

std::set<std::string> local_terminals(const FinCat& C) {
  auto comps = components(C);
  std::map<std::string, long long> in_count;
  for (const auto& a : C.arrows) ++in_count[C.cod.at(a)];
  std::map<std::string, long long> comp_size;
  for (const auto& [x, r] : comps) {
    (void)x;
    ++comp_size[r];
  }
  std::set<std::string> out;
  for (const auto& t : C.objects) {
    if (in_count[t] != comp_size[comps.at(t)]) continue;
    // Right count; now each source in the component must appear exactly once.
    std::set<std::string> sources;
    bool ok = true;
    for (const auto& a : C.arrows)
      if (C.cod.at(a) == t && !sources.insert(C.dom.at(a)).second) ok = false;
    if (ok) out.insert(t);
  }
  return out;
}

std::optional<std::string> inverse_of(const FinCat& C, const std::string& a) {
  const auto& x = C.dom.at(a);
  const auto& y = C.cod.at(a);
  for (const auto& b : C.hom(y, x))
    if (C.compose(b, a) == C.ident.at(x) && C.compose(a, b) == C.ident.at(y))
      return b;
  return std::nullopt;
}

bool is_iso(const FinCat& C, const std::string& a) {
  return inverse_of(C, a).has_value();
}

std::set<std::string> iso_arrows(const FinCat& C) {
  std::set<std::string> out;
  for (const auto& a : C.arrows)
    if (is_iso(C, a)) out.insert(a);
  return out;
}

CheckReport validate_functor(const FinCat& C, const FinCat& D, const Functor& F) {
  CheckReport rep;
  for (const auto& x : C.objects)
    if (!F.on_objects.count(x) || !D.has_object(F.on_objects.at(x)))
      rep.add("functor-object", {x}, "no image object");
  for (const auto& a : C.arrows)
    if (!F.on_arrows.count(a) || !D.has_arrow(F.on_arrows.at(a)))
      rep.add("functor-arrow", {a}, "no image arrow");
  if (!rep.witnesses.empty()) {
    rep.finalize();
    return rep;
  }
  for (const auto& a : C.arrows) {
    const auto& fa = F.on_arrows.at(a);
    if (D.dom.at(fa) != F.on_objects.at(C.dom.at(a)))
      rep.add("functor-dom", {a}, "does not respect sources");
    if (D.cod.at(fa) != F.on_objects.at(C.cod.at(a)))
      rep.add("functor-cod", {a}, "does not respect targets");
  }
  for (const auto& x : C.objects)
    if (F.on_arrows.at(C.ident.at(x)) != D.ident.at(F.on_objects.at(x)))
      rep.add("functor-ident", {x}, "does not respect identities");
  for (const auto& [k, gf] : C.comp) {
    const auto& dg = F.on_arrows.at(k.first);
    const auto& df = F.on_arrows.at(k.second);
    if (D.compose(dg, df) != F.on_arrows.at(gf))
      rep.add("functor-comp", {k.first, k.second}, "does not respect composition");
  }
  rep.stats["objects"] = static_cast<long long>(C.objects.size());
  rep.stats["arrows"] = static_cast<long long>(C.arrows.size());
  rep.finalize();
  return rep;
}

bool functor_bijective(const FinCat& C, const FinCat& D, const Functor& F) {
  std::set<std::string> oimg, aimg;
  for (const auto& x : C.objects) oimg.insert(F.on_objects.at(x));
  for (const auto& a : C.arrows) aimg.insert(F.on_arrows.at(a));
  return oimg.size() == C.objects.size() && oimg.size() == D.objects.size() &&
         aimg.size() == C.arrows.size() && aimg.size() == D.arrows.size();
}

namespace {

/// (out-degree, in-degree, endo-count) per object; isomorphisms preserve it.
std::map<std::string, std::vector<long long>> degree_profile(const FinCat& C) {
  std::map<std::string, std::vector<long long>> out;
  for (const auto& x : C.objects) out[x] = {0, 0, 0};
  for (const auto& a : C.arrows) {
    ++out[C.dom.at(a)][0];
    ++out[C.cod.at(a)][1];
    if (C.dom.at(a) == C.cod.at(a)) ++out[C.dom.at(a)][2];
  }
  return out;
}

}  // namespace

std::optional<Functor> find_isomorphism(const FinCat& C, const FinCat& D) {
  if (C.objects.size() != D.objects.size() || C.arrows.size() != D.arrows.size())
    return std::nullopt;
  auto pc = degree_profile(C), pd = degree_profile(D);

  std::map<std::string, std::string> assign;  // C object -> D object
  std::set<std::string> used;

  // With the object part fixed, extend over hom-sets one pair at a time.
  std::function<bool(Functor&)> extend_arrows = [&](Functor& F) -> bool {
    std::map<std::string, std::string> amap;
    std::set<std::string> aused;
    std::vector<std::pair<std::string, std::vector<std::string>>> slots;
    for (const auto& x : C.objects)
      for (const auto& y : C.objects) {
        auto ch = C.hom(x, y);
        auto dh = D.hom(F.on_objects.at(x), F.on_objects.at(y));
        if (ch.size() != dh.size()) return false;
        for (const auto& a : ch) slots.emplace_back(a, dh);
      }
    std::function<bool(size_t)> fill = [&](size_t i) -> bool {
      if (i == slots.size()) {
        Functor cand{F.on_objects, amap};
        auto rep = validate_functor(C, D, cand);
        if (!rep.passed) return false;
        F.on_arrows = amap;
        return true;
      }
      const auto& [a, choices] = slots[i];
      for (const auto& b : choices) {
        if (aused.count(b)) continue;
        if (C.is_identity(a) != D.is_identity(b)) continue;
        amap[a] = b;
        aused.insert(b);
        // Early composite screening against already-assigned arrows.
        bool ok = true;
        for (const auto& [ca, db] : amap) {
          if (ok && C.comp.count({a, ca})) {
            auto img = amap.find(C.comp.at({a, ca}));
            if (img != amap.end() && D.compose(b, db) != img->second) ok = false;
          }
          if (ok && C.comp.count({ca, a})) {
            auto img = amap.find(C.comp.at({ca, a}));
            if (img != amap.end() && D.compose(db, b) != img->second) ok = false;
          }
        }
        if (ok && fill(i + 1)) return true;
        amap.erase(a);
        aused.erase(b);
      }
      return false;
    };
    return fill(0);
  };

  std::function<bool(size_t, Functor&)> search = [&](size_t idx, Functor& F) -> bool {
    if (idx == C.objects.size()) {
      F.on_objects = assign;
      return extend_arrows(F);
    }
    const auto& x = C.objects[idx];
    for (const auto& y : D.objects) {
      if (used.count(y) || pc.at(x) != pd.at(y)) continue;
      bool ok = true;
      for (const auto& [cx, dy] : assign)
        if (C.hom(x, cx).size() != D.hom(y, dy).size() ||
            C.hom(cx, x).size() != D.hom(dy, y).size()) {
          ok = false;
          break;
        }
      if (!ok) continue;
      assign[x] = y;
      used.insert(y);
      if (search(idx + 1, F)) return true;
      assign.erase(x);
      used.erase(y);
    }
    return false;
  };

  Functor F;
  if (search(0, F)) return F;
  return std::nullopt;
}

std::vector<std::vector<std::string>> composable_chains(const FinCat& C, int len) {
  if (len < 1) throw ValidationError("chain length must be at least 1");
  std::vector<std::vector<std::string>> cur;
  for (const auto& a : C.arrows) cur.push_back({a});
  for (int k = 2; k <= len; ++k) {
    std::vector<std::vector<std::string>> next;
    for (const auto& ch : cur)
      for (const auto& a : C.arrows)
        if (C.dom.at(a) == C.cod.at(ch.back())) {
          auto longer = ch;
          longer.push_back(a);
          next.push_back(std::move(longer));
        }
    cur = std::move(next);
  }
  return cur;
}

FinCat wide_subcategory(const FinCat& C, const std::set<std::string>& arrow_ids) {
  FinCat R;
  R.objects = C.objects;
  for (const auto& a : arrow_ids) {
    if (!C.has_arrow(a))
      throw ValidationError("wide subcategory over unknown arrow " + a);
    R.arrows.push_back(a);
    R.dom[a] = C.dom.at(a);
    R.cod[a] = C.cod.at(a);
  }
  R.ident = C.ident;
  for (const auto& x : C.objects)
    if (!arrow_ids.count(C.ident.at(x)))
      throw ValidationError("wide subcategory missing the identity of " + x);
  for (const auto& g : arrow_ids)
    for (const auto& f : arrow_ids) {
      if (C.cod.at(f) != C.dom.at(g)) continue;
      const auto& gf = C.compose(g, f);
      if (!arrow_ids.count(gf))
        throw ValidationError("arrow class not closed under composition: (" + g +
                              ", " + f + ")");
      R.comp[{g, f}] = gf;
    }
  R.canonicalize();
  R.validate();
  return R;
}

}  // namespace segal
