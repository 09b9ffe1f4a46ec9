#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace segal {

using json = nlohmann::json;

/// Malformed input data (tables not total, ids unknown, JSON shape wrong).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An operation was invoked outside its stated domain (truncation too small,
/// required check not passed, parameter out of bounds).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Canonical id for an element assembled from a list of ids (chains, pairs).
/// JSON-array encoding keeps arbitrary member ids unambiguous.
std::string encode_list(const std::vector<std::string>& parts);
std::vector<std::string> decode_list(const std::string& id);

/// Deterministic RNG for seeded fixture generators.  Distribution quality is
/// irrelevant here; cross-platform reproducibility is the requirement.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace segal
