#pragma once

#include <cstdint>
#include <string>

#include "homtest/bias.hpp"
#include "homtest/matfun.hpp"

namespace homtest {

struct BLRMode {
  bool exact = true;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static BLRMode exact_mode() { return {}; }
  static BLRMode sampled(std::uint64_t trials, std::uint64_t seed) { return {false, trials, seed}; }
  /// "exact" or "sampled:<trials>".
  std::string to_string() const;
  /// Inverse of to_string; the seed is supplied separately.
  static BLRMode parse(const std::string& text, std::uint64_t seed);
};

struct BLRReport {
  double gamma = 0;
  BLRMode mode;
  std::uint64_t count = 0;
  std::uint64_t total = 0;
  double delta = 0;  // count / total
  int t = 0;
  bool unitary_certified = false;
  std::string fn_digest;
  std::string set_digest;

  json to_json() const;
};

/// Sampled trials are drawn in fixed chunks of this size, chunk c seeded by
/// derive_seed(seed, c), so the outcome is independent of the thread count.
inline constexpr std::uint64_t kBlrChunk = 4096;

/// ||f(xy) - f(x) f(y)||_HS^2.
double blr_defect(const MatFn& f, int x, int y);

/// A pair passes iff its defect is at most gamma*t + 1e-9*t. Exact mode
/// enumerates x in G and every occurrence s in the multiset.
BLRReport blr_pass_probability(const MatFn& f, const BiasedSet& set, double gamma, const BLRMode& mode,
                               int threads = 1);

std::string function_digest(const MatFn& f);
std::string set_digest(const BiasedSet& set);

}  // namespace homtest
