#pragma once

// Process-wide caches so the suites decompose each group once.

#include <map>
#include <mutex>
#include <string>

#include "homtest/bias.hpp"
#include "homtest/rep_theory.hpp"

namespace fixture {

inline const homtest::IrrepSet& irreps(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, homtest::IrrepSet> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, homtest::compute_irreps(homtest::group_from_name(name), homtest::IrrepMethod::automatic))
             .first;
  return it->second;
}

inline homtest::GroupPtr group(const std::string& name) { return irreps(name).group; }

/// Certified Alon-Roichman set; fails the calling test if sampling missed.
inline homtest::BiasedSet biased_set(const std::string& name, double eps, std::uint64_t seed) {
  auto r = homtest::alon_roichman_sample(irreps(name), eps, seed);
  return r.set;
}

}  // namespace fixture
