#include <doctest.h>

#include "fixtures.hpp"
#include "homtest/blr.hpp"
#include "homtest/error.hpp"
#include "homtest/matfun.hpp"
#include "oracles.hpp"

using namespace homtest;

namespace {

std::uint64_t direct_count(const MatFn& f, const BiasedSet& set, double gamma) {
  const auto& G = *f.group;
  std::uint64_t c = 0;
  for (int x = 0; x < G.n; ++x)
    for (int s : set.elements) {
      const oracle::Mat d = f(G(x, s)) - f(x) * f(s);
      c += d.squaredNorm() <= gamma * f.t + 1e-9 * f.t;
    }
  return c;
}

}  // namespace

TEST_SUITE("blr") {

TEST_CASE("homomorphisms pass with probability one") {
  const auto& s = fixture::irreps("symmetric(4)");
  const auto f = homomorphism_fn(s, {2, 3}, 0);
  const auto set = fixture::biased_set("symmetric(4)", 0.3, 1);
  const auto r = blr_pass_probability(f, set, 0.0, BLRMode::exact_mode());
  CHECK(r.count == r.total);
  CHECK(r.delta == 1.0);
  CHECK(r.total == 24 * set.size());
}

TEST_CASE("exact counts agree with a direct loop") {
  const auto& s = fixture::irreps("dihedral(5)");
  const auto base = homomorphism_fn(s, {3}, 0);
  const auto set = fixture::biased_set("dihedral(5)", 0.5, 2);
  for (double theta : {0.05, 0.2, 0.6}) {
    const auto f = perturbed_fn(base, theta, 3);
    for (double gamma : {0.0, 0.01, 0.1, 0.5}) {
      CAPTURE(theta);
      CAPTURE(gamma);
      CHECK(blr_pass_probability(f, set, gamma, BLRMode::exact_mode()).count == direct_count(f, set, gamma));
    }
  }
}

TEST_CASE("coppersmith pass counts match integer arithmetic") {
  for (int k = 2; k <= 4; ++k) {
    CAPTURE(k);
    const auto f = coppersmith_fn(k);
    const auto set = make_set(f.group, [&] {
      std::vector<int> all(f.n());
      for (int i = 0; i < f.n(); ++i) all[i] = i;
      return all;
    }());
    const auto r = blr_pass_probability(f, set, 0.0, BLRMode::exact_mode());
    CHECK(static_cast<long>(r.count) == oracle::coppersmith_pass_count(k));
  }
  CHECK(oracle::coppersmith_pass_count(2) == 63);
  CHECK(oracle::coppersmith_pass_count(3) == 567);
}

TEST_CASE("sampled mode is thread-count independent and close to exact") {
  const auto& s = fixture::irreps("symmetric(4)");
  const auto f = perturbed_fn(homomorphism_fn(s, {3}, 0), 0.3, 5);
  const auto set = fixture::biased_set("symmetric(4)", 0.3, 1);
  const auto exact = blr_pass_probability(f, set, 0.05, BLRMode::exact_mode());
  const auto a = blr_pass_probability(f, set, 0.05, BLRMode::sampled(20000, 9), 1);
  const auto b = blr_pass_probability(f, set, 0.05, BLRMode::sampled(20000, 9), 4);
  CHECK(a.count == b.count);
  CHECK(a.total == 20000);
  // 5 sigma for a Bernoulli mean over 20000 draws
  CHECK(std::abs(a.delta - exact.delta) < 5 * 0.5 / std::sqrt(20000.0));
  const auto c = blr_pass_probability(f, set, 0.05, BLRMode::sampled(20000, 10), 1);
  CHECK(c.count != a.count);
}

TEST_CASE("mode strings") {
  CHECK(BLRMode::parse("exact", 1).exact);
  const auto m = BLRMode::parse("sampled:5000", 7);
  CHECK_FALSE(m.exact);
  CHECK(m.trials == 5000);
  CHECK(m.seed == 7);
  CHECK(m.to_string() == "sampled:5000");
  CHECK_THROWS_AS(BLRMode::parse("sampled:", 1), Error);
  CHECK_THROWS_AS(BLRMode::parse("fast", 1), Error);
}

TEST_CASE("report JSON carries digests and leaves the seed out in exact mode") {
  const auto f = coppersmith_fn(2);
  const auto set = make_set(f.group, {0, 1, 2});
  const auto j = blr_pass_probability(f, set, 0.0, BLRMode::exact_mode()).to_json();
  CHECK(j.at("seed").is_null());
  CHECK(j.at("fn").get<std::string>().size() == 16);
  CHECK(j.at("set").get<std::string>() == set_digest(set));
}

TEST_CASE("invalid inputs") {
  const auto f = coppersmith_fn(2);
  const auto set = make_set(f.group, {0});
  CHECK_THROWS_AS(blr_pass_probability(f, set, -1.0, BLRMode::exact_mode()), Error);
  const auto other = make_set(fixture::group("cyclic(9)"), {0});
  CHECK_THROWS_AS(blr_pass_probability(coppersmith_fn(3), other, 0.0, BLRMode::exact_mode()), Error);
}

}  // TEST_SUITE
