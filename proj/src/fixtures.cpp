#include "segalkit/fixtures.hpp"

#include <algorithm>
#include <functional>

#include "segalkit/util.hpp"

namespace segal {

namespace {

std::string obj_name(const char* prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

std::string arrow_name(const std::string& from, const std::string& to) {
  return from + ">" + to;
}

/// A category with at most one arrow between any ordered pair of objects,
/// given by the relation `related` (must be reflexive and transitive).
FinCat thin_category(const std::vector<std::string>& objects,
                     const std::function<bool(int, int)>& related) {
  FinCat C;
  C.objects = objects;
  const int n = static_cast<int>(objects.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (related(i, j)) {
        std::string id = arrow_name(objects[i], objects[j]);
        C.arrows.push_back(id);
        C.dom[id] = objects[i];
        C.cod[id] = objects[j];
        if (i == j) C.ident[objects[i]] = id;
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (related(i, j) && related(j, k))
          C.comp[{arrow_name(objects[j], objects[k]),
                  arrow_name(objects[i], objects[j])}] =
              arrow_name(objects[i], objects[k]);
  C.canonicalize();
  C.validate();
  return C;
}

}  // namespace

FinCat chain_poset(int n) {
  if (n < 0) throw ValidationError("chain length must be non-negative");
  std::vector<std::string> objects;
  for (int i = 0; i <= n; ++i) objects.push_back(obj_name("p", i));
  return thin_category(objects, [](int i, int j) { return i <= j; });
}

FinCat indiscrete_groupoid(int n) {
  if (n < 1) throw ValidationError("groupoid needs at least one object");
  std::vector<std::string> objects;
  for (int i = 0; i < n; ++i) objects.push_back(obj_name("g", i));
  return thin_category(objects, [](int, int) { return true; });
}

FinCat random_poset(std::uint64_t seed, int size) {
  if (size < 1 || size > 6) throw ValidationError("poset size must be 1..6");
  SplitMix64 rng(seed);
  std::vector<std::vector<bool>> edge(size, std::vector<bool>(size, false));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) edge[i][j] = rng.coin();
  // reflexive-transitive closure; edges only go up, so one sweep suffices
  std::vector<std::vector<bool>> reach(size, std::vector<bool>(size, false));
  for (int i = 0; i < size; ++i) reach[i][i] = true;
  for (int j = 0; j < size; ++j)
    for (int i = j - 1; i >= 0; --i)
      for (int k = i + 1; k <= j; ++k)
        if (edge[i][k] && reach[k][j]) reach[i][j] = true;
  std::vector<std::string> objects;
  for (int i = 0; i < size; ++i) objects.push_back(obj_name("p", i));
  return thin_category(objects,
                       [&reach](int i, int j) { return reach[i][j]; });
}

FinCat random_category(std::uint64_t seed, int size) {
  if (size < 1 || size > 6) throw ValidationError("category size must be 1..6");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) {
      bool take = rng.below(3) == 0;
      if (take && edges.size() < 7) edges.emplace_back(i, j);
    }
  bool with_groupoid = rng.below(3) == 0;

  FinCat C;
  for (int i = 0; i < size; ++i) C.objects.push_back(obj_name("c", i));

  // Free category on the graph: arrows are directed paths, recorded by their
  // vertex sequence.
  std::vector<std::vector<int>> paths;
  std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& path) {
    paths.push_back(path);
    for (const auto& [a, b] : edges)
      if (a == path.back()) {
        path.push_back(b);
        grow(path);
        path.pop_back();
      }
  };
  for (int i = 0; i < size; ++i) {
    std::vector<int> start{i};
    grow(start);
  }
  auto path_id = [&](const std::vector<int>& p) {
    std::string id = obj_name("c", p[0]);
    for (size_t t = 1; t < p.size(); ++t) id += "-" + std::to_string(p[t]);
    return id;
  };
  for (const auto& p : paths) {
    std::string id = path_id(p);
    C.arrows.push_back(id);
    C.dom[id] = obj_name("c", p.front());
    C.cod[id] = obj_name("c", p.back());
    if (p.size() == 1) C.ident[obj_name("c", p.front())] = id;
  }
  for (const auto& p : paths)
    for (const auto& q : paths) {
      if (q.front() != p.back()) continue;
      std::vector<int> joined = p;
      joined.insert(joined.end(), q.begin() + 1, q.end());
      C.comp[{path_id(q), path_id(p)}] = path_id(joined);
    }

  if (with_groupoid) {
    FinCat G = indiscrete_groupoid(2);
    for (const auto& x : G.objects) C.objects.push_back("x" + x);
    for (const auto& a : G.arrows) {
      std::string id = "x" + a;
      C.arrows.push_back(id);
      C.dom[id] = "x" + G.dom.at(a);
      C.cod[id] = "x" + G.cod.at(a);
    }
    for (const auto& [x, e] : G.ident) C.ident["x" + x] = "x" + e;
    for (const auto& [k, gf] : G.comp)
      C.comp[{"x" + k.first, "x" + k.second}] = "x" + gf;
  }
  C.canonicalize();
  C.validate();
  return C;
}

UnaryOpCat opcat_without_blowup() {
  UnaryOpCat O;
  FinCat& C = O.cat;
  C.objects = {"a", "b", "u", "v"};
  auto add = [&](const std::string& id, const std::string& d, const std::string& c) {
    C.arrows.push_back(id);
    C.dom[id] = d;
    C.cod[id] = c;
  };
  add("1u", "u", "u");
  add("1v", "v", "v");
  add("al", "u", "v");
  add("be", "v", "u");
  add("1a", "a", "a");
  add("1b", "b", "b");
  add("f", "a", "b");
  C.ident = {{"u", "1u"}, {"v", "1v"}, {"a", "1a"}, {"b", "1b"}};
  // indiscrete component {u, v}: composites are forced by endpoints
  for (const auto& g : {"1u", "1v", "al", "be"})
    for (const auto& f : {"1u", "1v", "al", "be"}) {
      if (C.cod.at(f) != C.dom.at(g)) continue;
      const std::string& d = C.dom.at(f);
      const std::string& c = C.cod.at(g);
      C.comp[{g, f}] = d == c ? (d == "u" ? "1u" : "1v") : (d == "u" ? "al" : "be");
    }
  // poset component a -> b
  C.comp[{"1a", "1a"}] = "1a";
  C.comp[{"f", "1a"}] = "f";
  C.comp[{"1b", "f"}] = "f";
  C.comp[{"1b", "1b"}] = "1b";
  C.canonicalize();
  C.validate();

  O.chosen = {"u", "b"};
  O.phi0 = {{"1u", "u"}, {"be", "v"}, {"1v", "u"}, {"al", "v"},
            {"1b", "b"}, {"f", "a"},  {"1a", "u"}};
  O.phi1 = {{{"1u", "1u"}, "1u"}, {{"1u", "al"}, "1v"}, {{"1v", "1v"}, "1u"},
            {{"1v", "be"}, "1v"}, {{"al", "be"}, "al"},  {{"al", "1v"}, "be"},
            {{"be", "1u"}, "be"}, {{"be", "al"}, "al"},  {{"1a", "1a"}, "1u"},
            {{"1a", "f"}, "1a"},  {{"f", "1b"}, "f"},    {{"1b", "1b"}, "1b"}};
  O.validate_structure();
  return O;
}

TruncSSet coskeletal_extend(const TruncSSet& base, int N) {
  base.validate_structure();
  if (N < base.trunc_level)
    throw PreconditionError("cannot extend downwards");
  TruncSSet S = base;
  S.trunc_level = N;
  S.levels.resize(N + 1);

  for (int n = base.trunc_level + 1; n <= N; ++n) {
    // All face-compatible tuples (t_0, ..., t_n) of level-(n-1) simplices.
    const auto& below = S.levels[n - 1];
    std::vector<Table> faces(n + 1);
    std::vector<std::string> tuple;
    std::function<void()> extend = [&]() {
      const int j = static_cast<int>(tuple.size());
      if (j == n + 1) {
        std::string id = encode_list(tuple);
        S.levels[n].push_back(id);
        for (int i = 0; i <= n; ++i) faces[i][id] = tuple[i];
        return;
      }
      for (const auto& cand : below) {
        bool ok = true;
        for (int i = 0; i < j && ok; ++i)
          if (S.apply_face(n - 1, i, cand) !=
              S.apply_face(n - 1, j - 1, tuple[i]))
            ok = false;
        if (!ok) continue;
        tuple.push_back(cand);
        extend();
        tuple.pop_back();
      }
    };
    extend();
    std::sort(S.levels[n].begin(), S.levels[n].end());
    for (int i = 0; i <= n; ++i) S.face[{n, i}] = std::move(faces[i]);

    // Degeneracies into the new level, solved facewise.
    for (int j = 0; j <= n - 1; ++j) {
      Table t;
      for (const auto& x : S.levels[n - 1]) {
        std::vector<std::string> solved;
        for (int i = 0; i <= n; ++i) {
          if (i == j || i == j + 1)
            solved.push_back(x);
          else if (i < j)
            solved.push_back(
                S.apply_degen(n - 2, j - 1, S.apply_face(n - 1, i, x)));
          else
            solved.push_back(
                S.apply_degen(n - 2, j, S.apply_face(n - 1, i - 1, x)));
        }
        std::string id = encode_list(solved);
        if (!std::binary_search(S.levels[n].begin(), S.levels[n].end(), id))
          throw ValidationError("degenerate tuple is not face-compatible");
        t[x] = id;
      }
      S.degen[{n - 1, j}] = std::move(t);
    }
  }
  S.canonicalize();
  S.validate_structure();
  return S;
}

TruncSSet doubled_filler(const FinCat& C, int N) {
  if (N < 2) throw PreconditionError("doubled filler needs truncation at least 2");
  TruncSSet B = nerve(C, 2);
  std::set<std::string> degenerate;
  for (int j = 0; j <= 1; ++j)
    for (const auto& [from, to] : B.degen.at({1, j})) {
      (void)from;
      degenerate.insert(to);
    }
  std::string target;
  for (const auto& s : B.levels[2])
    if (!degenerate.count(s)) {
      target = s;
      break;
    }
  if (target.empty())
    throw PreconditionError(
        "no non-degenerate triangle to double; the category is too small");

  std::string copy = target + "#copy";
  B.levels[2].push_back(copy);
  for (int i = 0; i <= 2; ++i) {
    Table& t = B.face.at({2, i});
    t[copy] = t.at(target);
  }
  B.canonicalize();
  B.validate_structure();
  return coskeletal_extend(B, N);
}

}  // namespace segal
