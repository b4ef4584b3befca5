#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "fixtures.hpp"
#include "homtest/bias.hpp"
#include "homtest/error.hpp"
#include "homtest/json_io.hpp"
#include "oracles.hpp"

using namespace homtest;

namespace {

// max over nontrivial irreps of ||E_{s in S} rho(s)||_op, by Jacobi SVD.
double oracle_bias(const std::vector<int>& elements, const IrrepSet& s) {
  double worst = 0;
  for (const auto& r : s.irreps) {
    if (r.is_trivial) continue;
    oracle::Mat acc = oracle::Mat::Zero(r.d, r.d);
    for (int e : elements) acc += r.mats[e];
    worst = std::max(worst, oracle::jacobi_op_norm(acc / static_cast<double>(elements.size())));
  }
  return worst;
}

}  // namespace

TEST_SUITE("bias") {

TEST_CASE("bias of trivial sets") {
  const auto& s = fixture::irreps("alternating(4)");
  auto full = full_set(s.group);
  CHECK(bias_of(full, s) < 1e-12);
  auto single = make_set(s.group, {s.group->id});
  CHECK(bias_of(single, s) == doctest::Approx(1.0));
  CHECK(single.certified_epsilon.has_value());
}

TEST_CASE("bias agrees with a Jacobi-SVD oracle on random multisets") {
  for (const std::string name : {"symmetric(4)", "dihedral(5)", "cyclic(27)", "quaternion8"}) {
    CAPTURE(name);
    const auto& s = fixture::irreps(name);
    oracle::Gen gen(17);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> el(3 + gen.index(12));
      for (int& e : el) e = gen.index(s.group->n);
      auto set = make_set(s.group, el);
      CHECK(bias_of(set, s) == doctest::Approx(oracle_bias(el, s)).epsilon(1e-10));
      REQUIRE(set.per_irrep.size() == s.size());
      CHECK(set.per_irrep[s.trivial_index()] == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("Alon-Roichman size and sampling") {
  CHECK(alon_roichman_size(60, 0.3) == static_cast<std::size_t>(std::ceil(8 * std::log(60.0) / 0.09)));
  const auto& s = fixture::irreps("alternating(5)");
  const auto r = alon_roichman_sample(s, 0.3, 1);
  CHECK(r.success);
  REQUIRE(r.set.certified_epsilon.has_value());
  CHECK(*r.set.certified_epsilon <= 0.3);
  CHECK(r.set.size() == alon_roichman_size(60, 0.3));
  CHECK(*r.set.certified_epsilon == doctest::Approx(oracle_bias(r.set.elements, s)).epsilon(1e-10));
  const auto again = alon_roichman_sample(s, 0.3, 1);
  CHECK(again.set.elements == r.set.elements);
}

TEST_CASE("sampling reports failure honestly on an impossible target") {
  const auto& s = fixture::irreps("cyclic(9)");
  // 0.001 * ln 9 / 1e-4 rounds up to 22 samples, far too few for eps = 0.01
  const auto r = alon_roichman_sample(s, 0.01, 3, 2, 0.001);
  CHECK_FALSE(r.success);
  CHECK(r.attempts == 2);
  CHECK(r.set.size() == 22);
  REQUIRE(r.set.certified_epsilon.has_value());
  CHECK(*r.set.certified_epsilon > 0.01);
  CHECK_THROWS_AS(alon_roichman_sample(s, 1e-6, 3), Error);
}

TEST_CASE("greedy improvement never increases the certified bias") {
  const auto& s = fixture::irreps("symmetric(4)");
  auto start = make_set(s.group, {0, 1, 2, 3, 4, 5, 6, 7});
  const double before = bias_of(start, s);
  const auto r = greedy_improve(start, s, 40, 5);
  REQUIRE_FALSE(r.trace.empty());
  for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] <= r.trace[i - 1] + 1e-15);
  REQUIRE(r.set.certified_epsilon.has_value());
  CHECK(*r.set.certified_epsilon <= before + 1e-15);
  CHECK(r.set.size() == start.size());
  CHECK(*r.set.certified_epsilon == doctest::Approx(oracle_bias(r.set.elements, s)).epsilon(1e-10));
}

TEST_CASE("expander mixing gap is bounded by eps times the norms") {
  for (const std::string name : {"symmetric(4)", "dihedral(5)", "alternating(5)"}) {
    CAPTURE(name);
    const auto& s = fixture::irreps(name);
    const auto set = fixture::biased_set(name, 0.3, 2);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto f = oracle::random_fn(s.group, 2, 31 + seed);
      const auto g = oracle::random_fn(s.group, 2, 61 + seed);
      const auto r = eml_gap(set, f, g);
      CHECK(r.pass);
      CHECK(r.lhs <= r.bound + r.tolerance);
    }
  }
}

TEST_CASE("uncertified sets are refused by the mixing check") {
  const auto g = fixture::group("cyclic(9)");
  const auto set = make_set(g, {1, 2});
  const auto f = oracle::random_fn(g, 1, 1);
  CHECK_THROWS_AS(eml_gap(set, f, f), Error);
}

TEST_CASE("set_average is a plain average over the multiset") {
  const auto g = fixture::group("quaternion8");
  const auto f = oracle::random_fn(g, 2, 8);
  const auto set = make_set(g, {1, 1, 5});
  CHECK((set_average(set, f) - (2.0 * f(1) + f(5)) / 3.0).norm() < 1e-12);
}

TEST_CASE("set JSON is re-certified on load") {
  const auto& s = fixture::irreps("dihedral(4)");
  auto set = make_set(s.group, {1, 2, 3, 5});
  bias_of(set, s);
  json j = set_to_json(set);
  j["epsilon"] = 0.0;  // a stored value is not trusted
  const auto back = set_from_json(j, s.group);
  CHECK(back.elements == set.elements);
  CHECK_FALSE(back.certified_epsilon.has_value());
  CHECK_THROWS_AS(make_set(s.group, {0, 99}), Error);
  CHECK_THROWS_AS(make_set(s.group, {}), Error);
}

}  // TEST_SUITE
