#include "segalkit/sset.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace segal {

namespace {

std::string key_str(int n, int i) {
  return std::to_string(n) + "," + std::to_string(i);
}

}  // namespace

const std::string& TruncSSet::apply_face(int n, int i, const std::string& id) const {
  auto t = face.find({n, i});
  if (t == face.end())
    throw ValidationError("missing face table " + key_str(n, i));
  auto v = t->second.find(id);
  if (v == t->second.end())
    throw ValidationError("face table " + key_str(n, i) + " undefined on " + id);
  return v->second;
}

const std::string& TruncSSet::apply_degen(int n, int j, const std::string& id) const {
  auto t = degen.find({n, j});
  if (t == degen.end())
    throw ValidationError("missing degeneracy table " + key_str(n, j));
  auto v = t->second.find(id);
  if (v == t->second.end())
    throw ValidationError("degeneracy table " + key_str(n, j) + " undefined on " + id);
  return v->second;
}

bool TruncSSet::has_simplex(int n, const std::string& id) const {
  if (n < 0 || n > trunc_level) return false;
  const auto& lv = levels[n];
  return std::binary_search(lv.begin(), lv.end(), id);
}

void TruncSSet::canonicalize() {
  for (auto& lv : levels) std::sort(lv.begin(), lv.end());
}

void TruncSSet::validate_structure() const {
  if (trunc_level < 0) throw ValidationError("negative truncation level");
  if (static_cast<int>(levels.size()) != trunc_level + 1)
    throw ValidationError("level list length does not match truncation level");
  for (int n = 0; n <= trunc_level; ++n) {
    std::set<std::string> seen;
    for (const auto& id : levels[n])
      if (!seen.insert(id).second)
        throw ValidationError("duplicate simplex id at level " + std::to_string(n) +
                              ": " + id);
  }
  auto check_table = [&](const std::map<std::pair<int, int>, Table>& tables, int n,
                         int i, int target, const char* what) {
    auto it = tables.find({n, i});
    if (it == tables.end())
      throw ValidationError(std::string("missing ") + what + " table " + key_str(n, i));
    if (it->second.size() != levels[n].size())
      throw ValidationError(std::string(what) + " table " + key_str(n, i) +
                            " is not total");
    for (const auto& [from, to] : it->second) {
      if (!has_simplex(n, from))
        throw ValidationError(std::string(what) + " table " + key_str(n, i) +
                              " keyed by unknown simplex " + from);
      if (!has_simplex(target, to))
        throw ValidationError(std::string(what) + " table " + key_str(n, i) +
                              " maps " + from + " outside level " +
                              std::to_string(target));
    }
  };
  for (int n = 1; n <= trunc_level; ++n)
    for (int i = 0; i <= n; ++i) check_table(face, n, i, n - 1, "face");
  for (int n = 0; n < trunc_level; ++n)
    for (int j = 0; j <= n; ++j) check_table(degen, n, j, n + 1, "degeneracy");
  for (const auto& [k, t] : face) {
    (void)t;
    if (k.first < 1 || k.first > trunc_level || k.second < 0 || k.second > k.first)
      throw ValidationError("face table with out-of-range key " +
                            key_str(k.first, k.second));
  }
  for (const auto& [k, t] : degen) {
    (void)t;
    if (k.first < 0 || k.first >= trunc_level || k.second < 0 || k.second > k.first)
      throw ValidationError("degeneracy table with out-of-range key " +
                            key_str(k.first, k.second));
  }
}

std::string apply_operator(const TruncSSet& S, const MonotoneMap& f,
                           const std::string& x) {
  f.validate();
  if (f.target_dim > S.trunc_level || f.source_dim > S.trunc_level)
    throw PreconditionError("truncation too small to apply operator " + f.str());
  if (!S.has_simplex(f.target_dim, x))
    throw ValidationError("no simplex " + x + " at level " +
                          std::to_string(f.target_dim));

  int m = f.target_dim;
  std::vector<int> vals = f.values;
  std::string cur = x;

  // Peel off cofaces: strike the largest value missing from the image.
  for (;;) {
    std::vector<char> present(m + 1, 0);
    for (int v : vals) present[v] = 1;
    int miss = -1;
    for (int v = m; v >= 0; --v)
      if (!present[v]) { miss = v; break; }
    if (miss < 0) break;
    cur = S.apply_face(m, miss, cur);
    --m;
    for (int& v : vals)
      if (v > miss) --v;
  }

  // Now surjective: peel codegeneracies recursively from the inside out.
  std::function<std::string(std::vector<int>&)> strip =
      [&](std::vector<int>& v) -> std::string {
    for (size_t j = 0; j + 1 < v.size(); ++j) {
      if (v[j] == v[j + 1]) {
        std::vector<int> shorter(v);
        shorter.erase(shorter.begin() + static_cast<long>(j));
        std::string inner = strip(shorter);
        return S.apply_degen(static_cast<int>(shorter.size()) - 1,
                             static_cast<int>(j), inner);
      }
    }
    return cur;
  };
  std::vector<int> v = vals;
  return strip(v);
}

CheckReport check_simplicial_identities(const TruncSSet& S) {
  S.validate_structure();
  CheckReport rep;
  const int N = S.trunc_level;

  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (const auto& x : S.levels[n]) {
          rep.bump("face-face-checks");
          const auto& lhs = S.apply_face(n - 1, i, S.apply_face(n, j, x));
          const auto& rhs = S.apply_face(n - 1, j - 1, S.apply_face(n, i, x));
          if (lhs != rhs)
            rep.add("face-face", {std::to_string(n), x},
                    "d" + std::to_string(i) + " d" + std::to_string(j) +
                        " != d" + std::to_string(j - 1) + " d" + std::to_string(i));
        }

  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        for (const auto& x : S.levels[n]) {
          rep.bump("degen-degen-checks");
          const auto& lhs = S.apply_degen(n + 1, i, S.apply_degen(n, j, x));
          const auto& rhs = S.apply_degen(n + 1, j + 1, S.apply_degen(n, i, x));
          if (lhs != rhs)
            rep.add("degen-degen", {std::to_string(n), x},
                    "s" + std::to_string(i) + " s" + std::to_string(j) +
                        " != s" + std::to_string(j + 1) + " s" + std::to_string(i));
        }

  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i)
        for (const auto& x : S.levels[n]) {
          rep.bump("mixed-checks");
          const auto& sx = S.apply_degen(n, j, x);
          const auto& got = S.apply_face(n + 1, i, sx);
          std::string want;
          std::string law;
          if (i == j || i == j + 1) {
            want = x;
            law = "d" + std::to_string(i) + " s" + std::to_string(j) + " != id";
          } else if (i < j) {
            want = S.apply_degen(n - 1, j - 1, S.apply_face(n, i, x));
            law = "d" + std::to_string(i) + " s" + std::to_string(j) + " != s" +
                  std::to_string(j - 1) + " d" + std::to_string(i);
          } else {
            want = S.apply_degen(n - 1, j, S.apply_face(n, i - 1, x));
            law = "d" + std::to_string(i) + " s" + std::to_string(j) + " != s" +
                  std::to_string(j) + " d" + std::to_string(i - 1);
          }
          if (got != want) rep.add("mixed", {std::to_string(n), x}, law);
        }

  for (int n = 0; n <= N; ++n)
    rep.stats["level-" + std::to_string(n)] = S.size(n);
  rep.finalize();
  return rep;
}

TruncSSet opposite(const TruncSSet& S) {
  S.validate_structure();
  TruncSSet R;
  R.trunc_level = S.trunc_level;
  R.levels = S.levels;
  for (const auto& [k, t] : S.face) R.face[{k.first, k.first - k.second}] = t;
  for (const auto& [k, t] : S.degen) R.degen[{k.first, k.first - k.second}] = t;
  R.canonicalize();
  return R;
}

CheckReport SimplicialMap::verify() const {
  CheckReport rep;
  for (int n = 0; n <= level_count; ++n) {
    const Table& mp = maps.at(n);
    for (const auto& x : source.levels[n]) {
      if (!mp.count(x)) {
        rep.add("map-not-total", {std::to_string(n), x}, "no image assigned");
        continue;
      }
      if (!target.has_simplex(n, mp.at(x)))
        rep.add("map-out-of-range", {std::to_string(n), x},
                "image " + mp.at(x) + " not a level-" + std::to_string(n) +
                    " simplex of the target");
    }
    rep.bump("level-" + std::to_string(n), static_cast<long long>(mp.size()));
  }
  if (!rep.witnesses.empty()) {
    rep.finalize();
    return rep;
  }
  for (int n = 1; n <= level_count; ++n)
    for (int i = 0; i <= n; ++i)
      for (const auto& x : source.levels[n]) {
        const auto& lhs = maps[n - 1].at(source.apply_face(n, i, x));
        const auto& rhs = target.apply_face(n, i, maps[n].at(x));
        if (lhs != rhs)
          rep.add("face-not-respected", {std::to_string(n), x},
                  "d" + std::to_string(i) + " does not commute");
      }
  for (int n = 0; n < level_count; ++n)
    for (int j = 0; j <= n; ++j)
      for (const auto& x : source.levels[n]) {
        const auto& lhs = maps[n + 1].at(source.apply_degen(n, j, x));
        const auto& rhs = target.apply_degen(n, j, maps[n].at(x));
        if (lhs != rhs)
          rep.add("degen-not-respected", {std::to_string(n), x},
                  "s" + std::to_string(j) + " does not commute");
      }
  rep.finalize();
  return rep;
}

bool SimplicialMap::injective(int n) const {
  std::set<std::string> seen;
  for (const auto& [from, to] : maps.at(n)) {
    (void)from;
    if (!seen.insert(to).second) return false;
  }
  return true;
}

std::set<std::string> SimplicialMap::image(int n) const {
  std::set<std::string> out;
  for (const auto& [from, to] : maps.at(n)) {
    (void)from;
    out.insert(to);
  }
  return out;
}

CheckReport AugmentedTruncSSet::verify_augmentation() const {
  CheckReport rep;
  const int N = body.trunc_level;
  for (int n = 0; n <= N; ++n) {
    const Table& mp = augmentation.at(n);
    for (const auto& x : body.levels[n])
      if (!mp.count(x) || !reference.has_simplex(n, mp.at(x)))
        rep.add("augmentation-not-total", {std::to_string(n), x}, "");
  }
  if (!rep.witnesses.empty()) {
    rep.finalize();
    return rep;
  }
  for (int n = 1; n <= N; ++n)
    for (int i = 0; i <= n; ++i)
      for (const auto& x : body.levels[n]) {
        const auto& lhs = augmentation[n - 1].at(body.apply_face(n, i, x));
        const auto& rhs = reference.apply_face(n, i, augmentation[n].at(x));
        if (lhs != rhs)
          rep.add("augmentation-face", {std::to_string(n), x},
                  "d" + std::to_string(i) + " does not commute with the augmentation");
      }
  for (int n = 0; n < N; ++n)
    for (int j = 0; j <= n; ++j)
      for (const auto& x : body.levels[n]) {
        const auto& lhs = augmentation[n + 1].at(body.apply_degen(n, j, x));
        const auto& rhs = reference.apply_degen(n, j, augmentation[n].at(x));
        if (lhs != rhs)
          rep.add("augmentation-degen", {std::to_string(n), x},
                  "s" + std::to_string(j) + " does not commute with the augmentation");
      }
  rep.finalize();
  return rep;
}

AugmentedTruncSSet upper_decalage(const TruncSSet& S) {
  S.validate_structure();
  if (S.trunc_level < 1)
    throw PreconditionError("cannot decalage a 0-truncated set");
  AugmentedTruncSSet out;
  out.reference = S;
  out.body.trunc_level = S.trunc_level - 1;
  out.body.levels.assign(S.levels.begin() + 1, S.levels.end());
  for (int n = 1; n < S.trunc_level; ++n)
    for (int i = 0; i <= n; ++i) out.body.face[{n, i}] = S.face.at({n + 1, i});
  for (int n = 0; n + 1 < S.trunc_level; ++n)
    for (int j = 0; j <= n; ++j) out.body.degen[{n, j}] = S.degen.at({n + 1, j});
  for (int n = 0; n < S.trunc_level; ++n)
    out.augmentation.push_back(S.face.at({n + 1, n + 1}));
  out.body.canonicalize();
  return out;
}

AugmentedTruncSSet lower_decalage(const TruncSSet& S) {
  S.validate_structure();
  if (S.trunc_level < 1)
    throw PreconditionError("cannot decalage a 0-truncated set");
  AugmentedTruncSSet out;
  out.reference = S;
  out.body.trunc_level = S.trunc_level - 1;
  out.body.levels.assign(S.levels.begin() + 1, S.levels.end());
  for (int n = 1; n < S.trunc_level; ++n)
    for (int i = 0; i <= n; ++i) out.body.face[{n, i}] = S.face.at({n + 1, i + 1});
  for (int n = 0; n + 1 < S.trunc_level; ++n)
    for (int j = 0; j <= n; ++j) out.body.degen[{n, j}] = S.degen.at({n + 1, j + 1});
  for (int n = 0; n < S.trunc_level; ++n)
    out.augmentation.push_back(S.face.at({n + 1, 0}));
  out.body.canonicalize();
  return out;
}

TruncSSet edgewise_subdivision(const TruncSSet& S) {
  S.validate_structure();
  if (S.trunc_level < 1)
    throw PreconditionError("cannot subdivide a 0-truncated set");
  TruncSSet R;
  R.trunc_level = (S.trunc_level - 1) / 2;
  for (int n = 0; n <= R.trunc_level; ++n) R.levels.push_back(S.levels[2 * n + 1]);
  for (int n = 1; n <= R.trunc_level; ++n)
    for (int i = 0; i <= n; ++i) {
      MonotoneMap q = delta_map_image(DeltaFunctor::Subdivision,
                                      MonotoneMap::coface(n, i));
      Table t;
      for (const auto& x : R.levels[n]) t[x] = apply_operator(S, q, x);
      R.face[{n, i}] = std::move(t);
    }
  for (int n = 0; n < R.trunc_level; ++n)
    for (int j = 0; j <= n; ++j) {
      MonotoneMap q = delta_map_image(DeltaFunctor::Subdivision,
                                      MonotoneMap::codegeneracy(n, j));
      Table t;
      for (const auto& x : R.levels[n]) t[x] = apply_operator(S, q, x);
      R.degen[{n, j}] = std::move(t);
    }
  R.canonicalize();
  return R;
}

SimplicialMap embed_decalage_into_subdivision(const TruncSSet& S, DecSide side) {
  TruncSSet sub = edgewise_subdivision(S);
  SimplicialMap out;
  out.level_count = sub.trunc_level;
  out.target = sub;
  if (side == DecSide::Bottom)
    out.source = lower_decalage(S).body;
  else
    out.source = opposite(upper_decalage(S).body);
  // Truncate the source to the common range.
  out.source.trunc_level = out.level_count;
  out.source.levels.resize(out.level_count + 1);
  for (auto it = out.source.face.begin(); it != out.source.face.end();)
    it = it->first.first > out.level_count ? out.source.face.erase(it) : std::next(it);
  for (auto it = out.source.degen.begin(); it != out.source.degen.end();)
    it = it->first.first >= out.level_count ? out.source.degen.erase(it) : std::next(it);

  for (int n = 0; n <= out.level_count; ++n) {
    Table mp;
    for (const auto& x : out.source.levels[n]) {
      std::string y = x;  // lives in S level n+1
      if (side == DecSide::Bottom) {
        for (int k = n + 1; k <= 2 * n; ++k) y = S.apply_degen(k, 0, y);
      } else {
        for (int k = n + 1; k <= 2 * n; ++k) y = S.apply_degen(k, k, y);
      }
      mp[x] = y;
    }
    out.maps.push_back(std::move(mp));
  }
  return out;
}

std::string spine_edge(const TruncSSet& S, int n, int i, const std::string& id) {
  std::string cur = id;
  int level = n;
  for (int k = 0; k < i - 1; ++k) {
    cur = S.apply_face(level, 0, cur);
    --level;
  }
  while (level > 1) {
    cur = S.apply_face(level, level, cur);
    --level;
  }
  return cur;
}

CheckReport check_segal(const TruncSSet& S) {
  S.validate_structure();
  if (S.trunc_level < 2)
    throw PreconditionError("truncation too small: the spine comparison needs level 2");
  CheckReport rep;
  const auto& edges = S.levels[1];
  // target of edge e, source of edge e
  auto tgt = [&](const std::string& e) { return S.apply_face(1, 0, e); };
  auto src = [&](const std::string& e) { return S.apply_face(1, 1, e); };

  for (int n = 2; n <= S.trunc_level; ++n) {
    std::map<std::vector<std::string>, std::vector<std::string>> fibers;
    for (const auto& x : S.levels[n]) {
      std::vector<std::string> sp;
      for (int i = 1; i <= n; ++i) sp.push_back(spine_edge(S, n, i, x));
      fibers[sp].push_back(x);
    }
    long long tuples = 0;
    // Depth-first walk over compatible edge tuples.
    std::vector<std::string> tuple;
    std::function<void()> extend = [&]() {
      if (static_cast<int>(tuple.size()) == n) {
        ++tuples;
        auto it = fibers.find(tuple);
        size_t hits = it == fibers.end() ? 0 : it->second.size();
        if (hits == 0)
          rep.add("spine-not-surjective", {std::to_string(n), encode_list(tuple)},
                  "no simplex has this spine");
        else if (hits > 1)
          rep.add("spine-not-injective",
                  {std::to_string(n), encode_list(it->second)},
                  "several simplices share the spine " + encode_list(tuple));
        return;
      }
      for (const auto& e : edges) {
        if (!tuple.empty() && tgt(tuple.back()) != src(e)) continue;
        tuple.push_back(e);
        extend();
        tuple.pop_back();
      }
    };
    extend();
    rep.stats["tuples-level-" + std::to_string(n)] = tuples;
    rep.stats["simplices-level-" + std::to_string(n)] = S.size(n);
  }
  rep.finalize();
  return rep;
}

namespace {

/// One exhaustive pullback test:  A --right--> B,  A --down--> C,
/// B --b_edge--> D,  C --c_edge--> D, where all four are face maps.
void pullback_square(const TruncSSet& S, int lvl, int right_i, int down_i,
                     int b_edge_i, int c_edge_i, const std::string& name,
                     CheckReport& rep) {
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> hits;
  for (const auto& a : S.levels[lvl]) {
    const auto& b = S.apply_face(lvl, right_i, a);
    const auto& c = S.apply_face(lvl, down_i, a);
    if (S.apply_face(lvl - 1, b_edge_i, b) != S.apply_face(lvl - 1, c_edge_i, c))
      rep.add("square-not-commuting", {name, a}, "outer composites disagree");
    hits[{b, c}].push_back(a);
  }
  for (auto& [k, v] : hits)
    if (v.size() > 1)
      rep.add("pullback-not-injective", {name, encode_list(v)},
              "several simplices map to (" + k.first + ", " + k.second + ")");
  for (const auto& b : S.levels[lvl - 1]) {
    const auto& bd = S.apply_face(lvl - 1, b_edge_i, b);
    for (const auto& c : S.levels[lvl - 1]) {
      if (bd != S.apply_face(lvl - 1, c_edge_i, c)) continue;
      if (!hits.count({b, c}))
        rep.add("pullback-not-surjective", {name, b, c},
                "no simplex maps to this corner");
    }
  }
  rep.bump("squares-checked");
}

}  // namespace

CheckReport check_two_segal(const TruncSSet& S, TwoSegalVariant variant) {
  S.validate_structure();
  if (S.trunc_level < 3)
    throw PreconditionError("truncation too small: the exactness squares need level 3");
  CheckReport rep;
  rep.stats["squares-checked"] = 0;
  for (int n = 2; n + 1 <= S.trunc_level; ++n)
    for (int i = 1; i < n; ++i) {
      if (variant == TwoSegalVariant::Upper || variant == TwoSegalVariant::Both)
        pullback_square(S, n + 1, /*right=*/0, /*down=*/i + 1, /*b_edge=*/i,
                        /*c_edge=*/0,
                        "upper(" + std::to_string(n) + "," + std::to_string(i) + ")",
                        rep);
      if (variant == TwoSegalVariant::Lower || variant == TwoSegalVariant::Both)
        pullback_square(S, n + 1, /*right=*/n + 1, /*down=*/i, /*b_edge=*/i,
                        /*c_edge=*/n,
                        "lower(" + std::to_string(n) + "," + std::to_string(i) + ")",
                        rep);
    }
  rep.finalize();
  return rep;
}

}  // namespace segal
