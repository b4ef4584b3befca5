#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homtest/group.hpp"
#include "homtest/matfun.hpp"
#include "homtest/rep_theory.hpp"

namespace homtest {

/// A multiset of group elements, stored as a sorted index list with
/// repetition. Every occurrence carries equal weight.
struct BiasedSet {
  GroupPtr group;
  std::vector<int> elements;
  std::optional<double> certified_epsilon;
  /// ||E_{s in S} rho(s)||_op for every irrep in IrrepSet order (the trivial
  /// entry is 1). Empty until certified.
  std::vector<double> per_irrep;

  std::size_t size() const { return elements.size(); }
};

/// Sorts and range-checks; the result is uncertified.
BiasedSet make_set(GroupPtr g, std::vector<int> elements);
/// Every element once.
BiasedSet full_set(GroupPtr g);

/// Exact certification: operator norms by dense SVD of each average. Stores
/// per_irrep and certified_epsilon (max over nontrivial irreps) in `set`.
double bias_of(BiasedSet& set, const IrrepSet& s, int threads = 1);

inline constexpr double kDefaultSamplingConstant = 8.0;

/// Multiset size used by alon_roichman_sample: ceil(C ln n / eps^2).
std::size_t alon_roichman_size(int n, double eps, double c = kDefaultSamplingConstant);

struct SampleResult {
  BiasedSet set;   // best certified set seen
  bool success = false;
  int attempts = 0;
};

/// Draws multisets of alon_roichman_size elements uniformly with repetition
/// until one certifies at eps_target. Attempt i uses derive_seed(seed, i).
SampleResult alon_roichman_sample(const IrrepSet& s, double eps_target, std::uint64_t seed, int max_retries = 5,
                                  double c = kDefaultSamplingConstant, int threads = 1);

struct ImproveResult {
  BiasedSet set;
  std::vector<double> trace;  // best epsilon after each certification
  int certifications = 0;
  int accepted = 0;
};

/// Hill climbing over single-element replacements; a swap is kept iff the
/// certified epsilon strictly decreases. At most `budget` certifications.
ImproveResult greedy_improve(const BiasedSet& set, const IrrepSet& s, int budget, std::uint64_t seed,
                             int threads = 1);

struct EmlReport {
  double lhs = 0;    // ||E_S (f*g) - E_G (f*g)||_HS
  double bound = 0;  // eps ||f|| ||g||
  double tolerance = 0;
  bool mean_zero = false;
  bool pass = false;
};

/// Degree-1 mixing: E over S of f*g against its average over G.
EmlReport eml_gap(const BiasedSet& set, const MatFn& f, const MatFn& g, int threads = 1);

/// Average of h over the multiset.
Mat set_average(const BiasedSet& set, const MatFn& h);

json set_to_json(const BiasedSet& set);
BiasedSet set_from_json(const json& j, GroupPtr group = nullptr);
BiasedSet load_set(const std::string& path, GroupPtr group = nullptr);

}  // namespace homtest
