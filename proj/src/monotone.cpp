#include "segalkit/monotone.hpp"

#include <sstream>

namespace segal {

MonotoneMap MonotoneMap::identity(int n) {
  MonotoneMap f{n, n, {}};
  f.values.resize(n + 1);
  for (int t = 0; t <= n; ++t) f.values[t] = t;
  return f;
}

MonotoneMap MonotoneMap::coface(int n, int i) {
  if (n < 1 || i < 0 || i > n)
    throw ValidationError("coface index out of range");
  MonotoneMap f{n - 1, n, {}};
  for (int t = 0; t < n; ++t) f.values.push_back(t < i ? t : t + 1);
  return f;
}

MonotoneMap MonotoneMap::codegeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n)
    throw ValidationError("codegeneracy index out of range");
  MonotoneMap f{n + 1, n, {}};
  for (int t = 0; t <= n + 1; ++t) f.values.push_back(t <= j ? t : t - 1);
  return f;
}

void MonotoneMap::validate() const {
  if (source_dim < 0 || target_dim < 0)
    throw ValidationError("monotone map has negative dimension");
  if (static_cast<int>(values.size()) != source_dim + 1)
    throw ValidationError("monotone map value list has wrong length");
  int prev = 0;
  for (int t = 0; t <= source_dim; ++t) {
    int v = values[t];
    if (v < 0 || v > target_dim)
      throw ValidationError("monotone map value out of range");
    if (t > 0 && v < prev)
      throw ValidationError("map values are not weakly increasing");
    prev = v;
  }
}

bool MonotoneMap::is_identity() const {
  if (source_dim != target_dim) return false;
  for (int t = 0; t <= source_dim; ++t)
    if (values[t] != t) return false;
  return true;
}

std::string MonotoneMap::str() const {
  std::ostringstream os;
  os << "[" << source_dim << "]->[" << target_dim << "]:";
  for (int v : values) os << " " << v;
  return os.str();
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  f.validate();
  g.validate();
  if (f.target_dim != g.source_dim)
    throw ValidationError("monotone maps are not composable");
  MonotoneMap h{f.source_dim, g.target_dim, {}};
  for (int v : f.values) h.values.push_back(g.values[v]);
  return h;
}

MonotoneMap delta_map_image(DeltaFunctor kind, const MonotoneMap& f) {
  f.validate();
  const int n = f.source_dim, m = f.target_dim;
  auto rev = [&](int t) { return m - f.values[n - t]; };
  MonotoneMap out;
  switch (kind) {
    case DeltaFunctor::Reversal: {
      out = {n, m, {}};
      for (int t = 0; t <= n; ++t) out.values.push_back(rev(t));
      break;
    }
    case DeltaFunctor::LowerDec: {
      out = {n + 1, m + 1, {}};
      out.values.push_back(0);
      for (int t = 0; t <= n; ++t) out.values.push_back(f.values[t] + 1);
      break;
    }
    case DeltaFunctor::UpperDec: {
      out = {n + 1, m + 1, {}};
      for (int t = 0; t <= n; ++t) out.values.push_back(rev(t));
      out.values.push_back(m + 1);
      break;
    }
    case DeltaFunctor::Subdivision: {
      out = {2 * n + 1, 2 * m + 1, {}};
      for (int t = 0; t <= n; ++t) out.values.push_back(rev(t));
      for (int t = n + 1; t <= 2 * n + 1; ++t)
        out.values.push_back(m + 1 + f.values[t - n - 1]);
      break;
    }
  }
  out.validate();
  return out;
}

}  // namespace segal
