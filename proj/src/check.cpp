#include "segalkit/check.hpp"

#include <algorithm>

namespace segal {

void CheckReport::absorb(const CheckReport& other, const std::string& prefix) {
  for (const auto& w : other.witnesses) {
    Witness copy = w;
    copy.kind = prefix.empty() ? copy.kind : prefix + "/" + copy.kind;
    add(std::move(copy));
  }
  for (const auto& [k, v] : other.stats)
    stats[prefix.empty() ? k : prefix + "/" + k] += v;
}

void CheckReport::finalize() {
  std::sort(witnesses.begin(), witnesses.end());
  witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
  passed = witnesses.empty();
}

json CheckReport::to_json() const {
  json out;
  out["passed"] = passed;
  json ws = json::array();
  for (const auto& w : witnesses) {
    json jw;
    jw["kind"] = w.kind;
    jw["subject"] = w.subject;
    jw["detail"] = w.detail;
    ws.push_back(jw);
  }
  out["witnesses"] = ws;
  json st = json::object();
  for (const auto& [k, v] : stats) st[k] = v;
  out["stats"] = st;
  return out;
}

}  // namespace segal
