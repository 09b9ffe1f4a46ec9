#include "segalkit/undecking.hpp"

#include <algorithm>

#include "segalkit/util.hpp"

namespace segal {

std::string Chain::id() const {
  return arrows.empty() ? terminal : encode_list(arrows);
}

std::vector<Chain> chains_of_length(const UnaryOpCat& O, int n) {
  if (n < 0) throw PreconditionError("negative chain length");
  std::vector<Chain> out;
  if (n == 0) {
    for (const auto& u : O.chosen) out.push_back({{}, u});
    return out;
  }
  if (n == 1) {
    for (const auto& x : O.cat.objects) {
      Chain c;
      c.arrows = {canonical_to_terminal(O, x)};
      c.terminal = O.cat.cod.at(c.arrows[0]);
      out.push_back(std::move(c));
    }
    return out;
  }
  for (auto& body : composable_chains(O.cat, n - 1)) {
    Chain c;
    c.arrows = std::move(body);
    c.arrows.push_back(canonical_to_terminal(O, O.cat.cod.at(c.arrows.back())));
    c.terminal = O.cat.cod.at(c.arrows.back());
    out.push_back(std::move(c));
  }
  return out;
}

Chain top_face(const UnaryOpCat& O, const Chain& c) {
  if (c.length() == 0) throw PreconditionError("no top face of a bare terminal");
  std::vector<std::string> body(c.arrows.begin(), c.arrows.end() - 1);
  const std::string& x =
      body.empty() ? O.cat.dom.at(c.arrows[0]) : O.cat.cod.at(body.back());
  body.push_back(O.cat.ident.at(x));
  Chain out;
  out.arrows = fiber_chain(O, body);
  out.terminal = O.fiber(O.cat.ident.at(x));
  return out;
}

Chain inner_face(const UnaryOpCat& O, const Chain& c, int i) {
  if (i < 0 || i >= c.length())
    throw PreconditionError("inner face index out of range");
  Chain out = c;
  if (i == 0) {
    out.arrows.erase(out.arrows.begin());
  } else {
    out.arrows[i - 1] = O.cat.compose(c.arrows[i], c.arrows[i - 1]);
    out.arrows.erase(out.arrows.begin() + i);
  }
  return out;
}

Chain degeneracy(const UnaryOpCat& O, const Chain& c, int j) {
  if (j < 0 || j > c.length())
    throw PreconditionError("degeneracy index out of range");
  std::string v;
  if (j == 0)
    v = c.length() == 0 ? c.terminal : O.cat.dom.at(c.arrows[0]);
  else
    v = O.cat.cod.at(c.arrows[j - 1]);
  Chain out = c;
  out.arrows.insert(out.arrows.begin() + j, O.cat.ident.at(v));
  return out;
}

UndeckData undeck_with_chains(const UnaryOpCat& O, int N) {
  if (N < 1) throw PreconditionError("undecking needs truncation at least 1");
  UndeckData out;
  out.body.trunc_level = N;
  out.body.levels.resize(N + 1);
  out.chains.resize(N + 1);
  for (int n = 0; n <= N; ++n)
    for (auto& c : chains_of_length(O, n)) {
      out.body.levels[n].push_back(c.id());
      out.chains[n].emplace(c.id(), std::move(c));
    }
  for (int n = 1; n <= N; ++n) {
    for (int i = 0; i <= n; ++i) {
      Table t;
      for (const auto& [id, c] : out.chains[n])
        t[id] = (i == n ? top_face(O, c) : inner_face(O, c, i)).id();
      out.body.face[{n, i}] = std::move(t);
    }
  }
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j) {
      Table t;
      for (const auto& [id, c] : out.chains[n])
        t[id] = degeneracy(O, c, j).id();
      out.body.degen[{n, j}] = std::move(t);
    }
  out.body.canonicalize();
  out.body.validate_structure();
  return out;
}

TruncSSet undeck(const UnaryOpCat& O, int N) {
  return undeck_with_chains(O, N).body;
}

FiberGrid simplex_grid(const UnaryOpCat& O, const Chain& c) {
  if (c.length() == 0) throw PreconditionError("grid of a bare terminal");
  FiberGrid out;
  out.rows.push_back(c);
  while (out.rows.back().length() > 1) out.rows.push_back(top_face(O, out.rows.back()));
  out.apex = top_face(O, out.rows.back()).terminal;

  out.spine.push_back(out.apex);
  for (auto it = out.rows.rbegin(); it != out.rows.rend(); ++it) {
    out.spine.push_back(O.cat.dom.at(it->arrows.back()));
    out.spine.push_back(it->terminal);
  }

  for (const auto& row : out.rows) {
    if (row.length() < 2) continue;
    out.coherence.bump("rows-checked");
    if (top_face(O, top_face(O, row)) !=
        top_face(O, inner_face(O, row, row.length() - 1)))
      out.coherence.add("grid-coherence", {row.id()},
                        "iterated top face differs from top face after merging "
                        "the last arrow");
  }
  out.coherence.finalize();
  return out;
}

namespace {

TruncSSet truncate_to(const TruncSSet& S, int N) {
  if (N > S.trunc_level) throw PreconditionError("cannot extend a truncation");
  TruncSSet R;
  R.trunc_level = N;
  R.levels.assign(S.levels.begin(), S.levels.begin() + N + 1);
  for (const auto& [k, t] : S.face)
    if (k.first <= N) R.face[k] = t;
  for (const auto& [k, t] : S.degen)
    if (k.first < N) R.degen[k] = t;
  return R;
}

}  // namespace

CheckReport verify_round_trips(const TruncSSet& Z, int level) {
  if (level < 1 || level > Z.trunc_level)
    throw PreconditionError("round-trip level out of range");
  UnaryOpCat O = operadic_from_upper_two_segal(Z);
  UndeckData X = undeck_with_chains(O, level);

  SimplicialMap L;
  L.source = truncate_to(Z, level);
  L.target = X.body;
  L.level_count = level;
  L.maps.resize(level + 1);
  for (const auto& z : Z.levels[0]) L.maps[0][z] = Z.apply_degen(0, 0, z);
  for (const auto& x : Z.levels[1])
    L.maps[1][x] = Chain{{canonical_to_terminal(O, x)}, ""}.id();
  for (int n = 2; n <= level; ++n)
    for (const auto& s : Z.levels[n]) {
      // Spine of s in the decked-down body: d_0 repeatedly, then top faces.
      std::vector<std::string> edges;
      for (int i = 1; i < n; ++i) {
        std::string cur = s;
        int lvl = n;
        for (int k = 0; k < i - 1; ++k) {
          cur = Z.apply_face(lvl, 0, cur);
          --lvl;
        }
        while (lvl > 2) {
          cur = Z.apply_face(lvl, lvl - 1, cur);
          --lvl;
        }
        edges.push_back(cur);
      }
      edges.push_back(canonical_to_terminal(O, O.cat.cod.at(edges.back())));
      L.maps[n][s] = encode_list(edges);
    }

  CheckReport rep = L.verify();
  for (int n = 0; n <= level; ++n) {
    if (!L.injective(n))
      rep.add("round-trip-injective", {std::to_string(n)},
              "comparison map collapses simplices");
    auto img = L.image(n);
    for (const auto& id : X.body.levels[n])
      if (!img.count(id))
        rep.add("round-trip-surjective", {std::to_string(n), id},
                "chain not hit by the comparison map");
    rep.stats["level-" + std::to_string(n)] =
        static_cast<long long>(X.body.levels[n].size());
  }
  rep.finalize();
  return rep;
}

CheckReport verify_round_trips(const UnaryOpCat& O, int level) {
  if (level < 4)
    throw PreconditionError("round-trip level must be at least 4");
  UndeckData X = undeck_with_chains(O, level);
  UnaryOpCat P = operadic_from_upper_two_segal(X.body);

  Functor F;
  for (const auto& xid : P.cat.objects) {
    const Chain& c = X.chains[1].at(xid);
    F.on_objects[xid] = O.cat.dom.at(c.arrows[0]);
  }
  for (const auto& aid : P.cat.arrows) {
    const Chain& c = X.chains[2].at(aid);
    F.on_arrows[aid] = c.arrows[0];
  }

  CheckReport rep = validate_functor(P.cat, O.cat, F);
  if (!functor_bijective(P.cat, O.cat, F))
    rep.add("round-trip-bijective", {}, "decoding functor is not an isomorphism");

  std::set<std::string> chosen_image;
  for (const auto& u : P.chosen) chosen_image.insert(F.on_objects.at(u));
  if (chosen_image != O.chosen)
    rep.add("round-trip-chosen", {},
            "decoded chosen terminals differ from the original ones");
  for (const auto& a : P.cat.arrows)
    if (F.on_objects.at(P.fiber(a)) != O.fiber(F.on_arrows.at(a)))
      rep.add("round-trip-fiber", {a}, "decoded fiber differs");
  for (const auto& [k, p] : P.phi1) {
    const auto& [g, f] = k;
    if (F.on_arrows.at(p) !=
        O.fiber_map(F.on_arrows.at(g), F.on_arrows.at(f)))
      rep.add("round-trip-fiber-map", {g, f}, "decoded fiber map differs");
  }
  rep.stats["objects"] = static_cast<long long>(P.cat.objects.size());
  rep.stats["arrows"] = static_cast<long long>(P.cat.arrows.size());
  rep.finalize();
  return rep;
}

}  // namespace segal
