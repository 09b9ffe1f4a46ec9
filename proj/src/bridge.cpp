#include "segalkit/bridge.hpp"

#include <algorithm>

#include "segalkit/util.hpp"

namespace segal {

TruncSSet nerve(const FinCat& C, int N) {
  C.validate();
  if (N < 1) throw PreconditionError("nerve needs truncation at least 1");
  TruncSSet S;
  S.trunc_level = N;
  S.levels.resize(N + 1);
  S.levels[0] = C.objects;

  // Chains of composable arrows; a level-n id encodes the arrow list.
  std::vector<std::vector<std::vector<std::string>>> chains(N + 1);
  for (const auto& a : C.arrows) chains[1].push_back({a});
  for (int n = 2; n <= N; ++n)
    for (const auto& ch : chains[n - 1])
      for (const auto& a : C.arrows)
        if (C.dom.at(a) == C.cod.at(ch.back())) {
          auto longer = ch;
          longer.push_back(a);
          chains[n].push_back(std::move(longer));
        }
  for (int n = 1; n <= N; ++n)
    for (const auto& ch : chains[n]) S.levels[n].push_back(encode_list(ch));

  auto vertex = [&](const std::vector<std::string>& ch, int k) -> std::string {
    return k == 0 ? C.dom.at(ch[0]) : C.cod.at(ch[k - 1]);
  };

  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i) {
      Table t;
      for (const auto& ch : chains[n]) {
        std::string id = encode_list(ch);
        if (n == 1) {
          t[id] = i == 0 ? C.cod.at(ch[0]) : C.dom.at(ch[0]);
          continue;
        }
        std::vector<std::string> shorter;
        if (i == 0)
          shorter.assign(ch.begin() + 1, ch.end());
        else if (i == n)
          shorter.assign(ch.begin(), ch.end() - 1);
        else {
          shorter.assign(ch.begin(), ch.begin() + (i - 1));
          shorter.push_back(C.compose(ch[i], ch[i - 1]));
          shorter.insert(shorter.end(), ch.begin() + (i + 1), ch.end());
        }
        t[id] = encode_list(shorter);
      }
      S.face[{n, i}] = std::move(t);
    }

  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j) {
      Table t;
      if (n == 0) {
        for (const auto& x : C.objects)
          t[x] = encode_list({C.ident.at(x)});
      } else {
        for (const auto& ch : chains[n]) {
          auto longer = ch;
          longer.insert(longer.begin() + j, C.ident.at(vertex(ch, j)));
          t[encode_list(ch)] = encode_list(longer);
        }
      }
      S.degen[{n, j}] = std::move(t);
    }
  S.canonicalize();
  return S;
}

FinCat category_from_segal(const TruncSSet& S) {
  if (S.trunc_level < 3)
    throw PreconditionError(
        "rebuilding a category needs truncation at least 3 so the spine "
        "comparison certifies associativity");
  CheckReport seg = check_segal(S);
  if (!seg.passed)
    throw SegalFailure("the spine comparison fails; no category to extract",
                       std::move(seg));
  FinCat C;
  C.objects = S.levels[0];
  C.arrows = S.levels[1];
  for (const auto& a : C.arrows) {
    C.dom[a] = S.apply_face(1, 1, a);
    C.cod[a] = S.apply_face(1, 0, a);
  }
  for (const auto& x : C.objects) C.ident[x] = S.apply_degen(0, 0, x);
  for (const auto& t : S.levels[2]) {
    const auto& g = S.apply_face(2, 0, t);
    const auto& f = S.apply_face(2, 2, t);
    const auto& gf = S.apply_face(2, 1, t);
    auto it = C.comp.find({g, f});
    if (it != C.comp.end() && it->second != gf)
      throw ValidationError("conflicting composites read off level 2");
    C.comp[{g, f}] = gf;
  }
  C.canonicalize();
  C.validate();
  return C;
}

FinCat twisted_arrow_category(const FinCat& C) {
  C.validate();
  FinCat T;
  T.objects = C.arrows;

  // A morphism g -> h∘g∘f is recorded as the triple (f, g, h).
  for (const auto& g : C.arrows)
    for (const auto& f : C.into(C.dom.at(g)))
      for (const auto& h : C.out_of(C.cod.at(g))) {
        std::string id = encode_list({f, g, h});
        T.arrows.push_back(id);
        T.dom[id] = g;
        T.cod[id] = C.compose(h, C.compose(g, f));
      }
  for (const auto& g : C.arrows)
    T.ident[g] = encode_list({C.ident.at(C.dom.at(g)), g, C.ident.at(C.cod.at(g))});

  for (const auto& bid : T.arrows) {
    auto b = decode_list(bid);  // (f2, k, h2) : k -> h2 k f2
    for (const auto& aid : T.arrows) {
      auto a = decode_list(aid);  // (f1, g, h1) : g -> h1 g f1
      if (T.cod.at(aid) != b[1]) continue;
      T.comp[{bid, aid}] =
          encode_list({C.compose(a[0], b[0]), a[1], C.compose(b[2], a[2])});
    }
  }
  T.canonicalize();
  T.validate();
  return T;
}

SimplicialMap nerve_comparison(const TruncSSet& S, const FinCat& C) {
  SimplicialMap out;
  out.source = S;
  out.target = nerve(C, S.trunc_level);
  out.level_count = S.trunc_level;
  out.maps.resize(S.trunc_level + 1);
  for (const auto& x : S.levels[0]) out.maps[0][x] = x;
  for (int n = 1; n <= S.trunc_level; ++n)
    for (const auto& x : S.levels[n]) {
      std::vector<std::string> sp;
      for (int i = 1; i <= n; ++i) sp.push_back(spine_edge(S, n, i, x));
      out.maps[n][x] = encode_list(sp);
    }
  return out;
}

}  // namespace segal
