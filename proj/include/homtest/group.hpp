#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "homtest/json_io.hpp"

namespace homtest {

inline constexpr int kDefaultOrderCap = 5040;

/// A finite group as an explicit multiplication table over element indices
/// 0..n-1. Immutable once built; shared between everything defined over it.
struct GroupTable {
  std::string name;
  int n = 0;
  int id = 0;
  std::vector<int> mul;  // n*n, row-major: mul[x*n + y] = xy
  std::vector<int> inv;
  std::vector<std::string> labels;  // optional

  int order() const { return n; }
  int operator()(int x, int y) const { return mul[static_cast<std::size_t>(x) * n + y]; }
  int inverse(int x) const { return inv[x]; }
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Catalog description of a group. Its textual form doubles as the group's
/// name, e.g. "direct_product(cyclic(2),symmetric(3))", so that any artifact
/// naming a catalog group can rebuild the table.
struct GroupSpec {
  enum class Kind {
    cyclic,
    elementary_abelian,
    dihedral,
    symmetric,
    alternating,
    quaternion8,
    direct_product,
    from_generators,
    from_table,
  };

  Kind kind = Kind::cyclic;
  std::vector<int> params;
  std::vector<GroupSpec> factors;               // direct_product
  std::vector<std::vector<int>> generators;     // from_generators
  std::string path;                             // from_table

  static GroupSpec cyclic(int n);
  static GroupSpec elementary_abelian(int p, int k);
  static GroupSpec dihedral(int n);
  static GroupSpec symmetric(int n);
  static GroupSpec alternating(int n);
  static GroupSpec quaternion8();
  static GroupSpec direct_product(GroupSpec a, GroupSpec b);
  static GroupSpec from_generators(std::vector<std::vector<int>> gens);
  static GroupSpec from_table(std::string path);

  /// Parses the textual form; throws Error(parse) on malformed input.
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  /// Group order without building the table (0 for from_generators and
  /// from_table, where it is only known after construction).
  std::uint64_t predicted_order() const;
};

GroupPtr build_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

/// Checks the table invariants and returns the table; used for tables that
/// did not come from the catalog.
GroupPtr make_group(GroupTable table);

struct InvariantCheck {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
};

struct GroupVerification {
  std::string mode;
  std::vector<InvariantCheck> checks;
  bool all_pass() const;
  json to_json() const;
};

struct VerifyMode {
  bool exhaustive = true;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;

  static VerifyMode exhaustive_mode() { return {}; }
  static VerifyMode sampled(std::uint64_t trials, std::uint64_t seed) { return {false, trials, seed}; }
};

GroupVerification verify_group(const GroupTable& g, VerifyMode mode);

json group_to_json(const GroupTable& g);
GroupPtr group_from_json(const json& j);
GroupPtr load_group(const std::string& path);

/// Builds the group named by `name` when it is a catalog expression.
GroupPtr group_from_name(const std::string& name, int order_cap = kDefaultOrderCap);

/// Fixed list of catalog expressions used as the demo suite, every entry of
/// order <= max_order. Covers each family at least once.
std::vector<std::string> demo_catalog(int max_order = 200);

}  // namespace homtest
