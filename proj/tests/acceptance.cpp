// Acceptance run: prints one PASS/FAIL line per criterion (1-9) and exits
// nonzero if any criterion fails. Every tolerance lives in the constants
// below; nothing is tuned per instance.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "homtest/algebra_norm.hpp"
#include "homtest/bias.hpp"
#include "homtest/blr.hpp"
#include "homtest/linalg.hpp"
#include "homtest/matfun.hpp"
#include "homtest/rep_theory.hpp"
#include "homtest/verify.hpp"
#include "oracles.hpp"

#ifndef HOMTEST_CLI_PATH
#error "HOMTEST_CLI_PATH must name the CLI executable"
#endif

using namespace homtest;

namespace {

constexpr double kSchurTol = 1e-8;
constexpr double kDecomposeSeconds = 60.0;
constexpr double kIdentityTol = 1e-8;  // relative, Fourier identities
constexpr int kInstances = 20;
constexpr double kCoppersmithSeconds = 1.0;
constexpr double kLemmaSuiteSeconds = 300.0;
constexpr double kClaimTol = 1e-8;     // VerifyOptions::tol for every check
constexpr double kGhExactTol = 1e-8;
constexpr double kTheta = 0.1;
constexpr double kMainEps = 0.2;
constexpr double kQuasiEps = 0.3;
constexpr int kSuiteMaxOrder = 60;
constexpr int kRepMaxOrder = 200;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("criterion %d: %s  %s: %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// One decomposition per group, shared by the criteria.
std::map<std::string, IrrepSet>& numeric_cache() {
  static std::map<std::string, IrrepSet> cache;
  return cache;
}

const IrrepSet& numeric_irreps(const std::string& name) {
  auto& c = numeric_cache();
  auto it = c.find(name);
  if (it == c.end()) it = c.emplace(name, decompose_regular(group_from_name(name))).first;
  return it->second;
}

std::vector<int> sorted_dims(const IrrepSet& s) {
  auto d = s.dims();
  std::sort(d.begin(), d.end());
  return d;
}

// ---------------------------------------------------------------- 1

Outcome representation_soundness() {
  Outcome o;
  double worst_schur = 0, slowest = 0;
  std::string slowest_name;
  int groups = 0;
  for (const auto& name : demo_catalog(kRepMaxOrder)) {
    const auto t0 = Clock::now();
    const IrrepSet& s = numeric_irreps(name);
    const double secs = seconds_since(t0);
    const auto v = verify_irrep_set(*s.group, s, kSchurTol);
    long sq = 0;
    for (int d : s.dims()) sq += static_cast<long>(d) * d;
    const bool ok = s.complete && v.pass && sq == s.group->n && v.schur < kSchurTol && secs < kDecomposeSeconds;
    if (!ok) {
      o.pass = false;
      o.detail += name + " failed; ";
    }
    worst_schur = std::max(worst_schur, v.schur);
    if (secs > slowest) {
      slowest = secs;
      slowest_name = name;
    }
    ++groups;
  }
  const bool s3 = sorted_dims(numeric_irreps("symmetric(3)")) == std::vector<int>{1, 1, 2};
  const bool q8 = sorted_dims(numeric_irreps("quaternion8")) == std::vector<int>{1, 1, 1, 1, 2};
  const bool a5 = sorted_dims(numeric_irreps("alternating(5)")) == std::vector<int>{1, 3, 3, 4, 5};
  o.pass = o.pass && s3 && q8 && a5;
  o.detail += std::to_string(groups) + " groups, max Schur violation " + fmt(worst_schur) + ", slowest " +
              slowest_name + " " + fmt(slowest) + " s, S3/Q8/A5 dims " + (s3 && q8 && a5 ? "match" : "MISMATCH");
  return o;
}

// ---------------------------------------------------------------- 2

Outcome fourier_identities() {
  Outcome o;
  double worst = 0;
  int count = 0;
  for (const auto& name : demo_catalog(kRepMaxOrder)) {
    const IrrepSet& s = numeric_irreps(name);
    for (int t : {1, 2, 4}) {
      for (int i = 0; i < kInstances; ++i) {
        const std::uint64_t seed = 100000ULL * t + i;
        const MatFn f = oracle::random_fn(s.group, t, seed);
        const MatFn g = oracle::random_fn(s.group, t, seed + 50000);
        const auto fh = fourier(f, s), gh = fourier(g, s);
        const auto ch = fourier(convolve(f, g), s), ah = fourier(adjoint(f), s);
        const double n2 = norm2(f);
        double err = std::abs(fourier_mass(fh) - n2) / std::max(1.0, n2);
        double conv_scale = 0, conv_err = 0, adj_err = 0, adj_scale = 0;
        for (std::size_t r = 0; r < s.size(); ++r) {
          conv_err += s[r].d * hs_norm2(ch.coeff[r] - fh.coeff[r] * gh.coeff[r]);
          conv_scale += s[r].d * hs_norm2(fh.coeff[r] * gh.coeff[r]);
          adj_err += s[r].d * hs_norm2(ah.coeff[r] - fh.coeff[r].adjoint());
          adj_scale += s[r].d * hs_norm2(fh.coeff[r]);
        }
        err = std::max(err, std::sqrt(conv_err) / std::max(1.0, std::sqrt(conv_scale)));
        err = std::max(err, std::sqrt(adj_err) / std::max(1.0, std::sqrt(adj_scale)));
        const double ut = u2_norm4_time(f), uf = u2_norm4_fourier(fh);
        err = std::max(err, std::abs(ut - uf) / std::max(1.0, std::abs(ut)));
        worst = std::max(worst, err);
        if (err >= kIdentityTol && o.pass) {
          o.pass = false;
          o.detail += "violation on " + name + " t=" + std::to_string(t) + "; ";
        }
        ++count;
      }
    }
  }
  o.detail += std::to_string(count) + " random functions, worst relative error " + fmt(worst);
  return o;
}

// ---------------------------------------------------------------- 3

Outcome coppersmith_constant() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string line;
  for (int k : {2, 3}) {
    const MatFn f = coppersmith_fn(k);
    auto full = full_set(f.group);
    const BLRReport r = blr_pass_probability(f, full, 0.0, BLRMode::exact_mode());
    const bool exact_match = r.count * 9 == 2 * r.total;  // delta == 2/9 exactly, integer test
    const long oracle_count = oracle::coppersmith_pass_count(k);
    o.pass = o.pass && exact_match;
    line += "k=" + std::to_string(k) + " delta=" + std::to_string(r.count) + "/" + std::to_string(r.total) +
            " (integer oracle " + std::to_string(oracle_count) + ", rejection " + std::to_string(r.total - r.count) +
            "/" + std::to_string(r.total) + "); ";
  }
  const double secs = seconds_since(t0);
  o.pass = o.pass && secs < kCoppersmithSeconds;
  o.detail = line + "expected pass probability 2/9, runtime " + fmt(secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 4

Outcome kernel_counterexample() {
  Outcome o;
  const auto a = GroupSpec::elementary_abelian(2, 2);
  const auto b = GroupSpec::symmetric(3);
  GroupPtr g = build_group(GroupSpec::direct_product(a, b));
  const GroupTable& s3 = *numeric_irreps("symmetric(3)").group;
  const IrrepSet prod = product_irreps(g, closed_form_irreps(a), numeric_irreps("symmetric(3)"));
  // psi = trivial (x) two-dimensional: the only 2-dim irrep trivial on the Z2^2 factor
  int pick = -1;
  for (std::size_t r = 0; r < prod.size(); ++r) {
    if (prod[r].d != 2) continue;
    bool trivial_on_kernel = true;
    for (int k = 0; k < 4; ++k)
      trivial_on_kernel = trivial_on_kernel && std::abs(prod[r].character[k * s3.n + s3.id] - 2.0) < 1e-9;
    if (trivial_on_kernel) pick = static_cast<int>(r);
  }
  if (pick < 0) return {false, "no 2-dim irrep trivial on the Z2^2 factor"};
  const MatFn f = clipped_entry_fn(prod, pick, 0, 0);
  auto full = full_set(g);
  const BLRReport r = blr_pass_probability(f, full, 0.0, BLRMode::exact_mode());
  o.pass = r.count * 6 >= r.total;  // delta >= 1/6, integer test
  o.detail = "exact BLR_0 pass probability " + std::to_string(r.count) + "/" + std::to_string(r.total) + " = " +
             fmt(r.delta) + " (bound 1/6 = " + fmt(1.0 / 6) + ")";
  return o;
}

// ---------------------------------------------------------------- 5

Outcome lemma_suite() {
  Outcome o;
  const auto t0 = Clock::now();
  VerifyOptions opt;
  opt.tol = kClaimTol;
  int checks = 0, failed = 0, sets = 0;
  double min_slack_ratio = 1e300;
  std::string first_failure;
  auto record = [&](const CheckReport& r, const std::string& where) {
    ++checks;
    if (r.status != CheckStatus::pass) {
      ++failed;
      if (first_failure.empty()) first_failure = claim_name(r.claim) + " on " + where;
    }
    min_slack_ratio = std::min(min_slack_ratio, (r.slack + r.tolerance) / std::max(1.0, std::abs(r.rhs)));
  };
  for (const auto& name : demo_catalog(kSuiteMaxOrder)) {
    const IrrepSet& s = numeric_irreps(name);
    const int D = quasirandomness(s);
    for (double eps : {0.2, 0.3, 0.5}) {
      const SampleResult sr = alon_roichman_sample(s, eps, 1);
      if (!sr.success) {
        o.pass = false;
        o.detail += "sampling missed eps=" + fmt(eps) + " on " + name + "; ";
        continue;
      }
      ++sets;
      const BiasedSet& set = sr.set;
      for (int i = 0; i < kInstances; ++i) {
        const std::uint64_t seed = 7000 + 97 * i + static_cast<std::uint64_t>(eps * 10);
        const std::string where = name + " eps=" + fmt(eps) + " #" + std::to_string(i);
        const MatFn scalar = oracle::random_fn(s.group, 1, seed);
        const MatFn scalar2 = oracle::random_fn(s.group, 1, seed + 1);
        const MatFn mat = oracle::random_fn(s.group, 2, seed + 2);
        const MatFn u = oracle::random_unitary_fn(s.group, 2, seed + 3);
        const MatFn v = oracle::random_unitary_fn(s.group, 2, seed + 4);
        record(check_pd_fooled(scalar, set, opt), where);
        record(check_psi_pd(i % 2 ? mat : u, opt), where);
        record(check_psi_algnorm(adjoint(u), v, opt), where);
        record(check_psi_algnorm(mat, oracle::random_fn(s.group, 2, seed + 5), opt), where);
        record(check_u2_approx(u, set, opt), where);
        record(check_mxbnp(subtract_mean(scalar), subtract_mean(scalar2), s, D, opt), where);
        record(check_mxbnp(mat, u, s, 1, opt), where);
        record(check_bnp_derand(scalar, scalar2, set, s, std::nullopt, opt), where);
        record(check_eml_deg1(mat, u, set, opt), where);
      }
    }
  }
  const double secs = seconds_since(t0);
  if (failed) o.pass = false;
  if (secs >= kLemmaSuiteSeconds) o.pass = false;
  o.detail += std::to_string(checks) + " checks on " + std::to_string(sets) + " certified sets, " +
              std::to_string(failed) + " not passing" + (first_failure.empty() ? "" : " (first: " + first_failure + ")") +
              ", min relative slack " + fmt(min_slack_ratio) + ", " + fmt(secs) + " s";
  return o;
}

// ---------------------------------------------------------------- 6 and 8 share inputs

std::vector<int> nontrivial(const IrrepSet& s, int count) {
  std::vector<int> out;
  for (std::size_t i = 0; i < s.size() && static_cast<int>(out.size()) < count; ++i)
    if (!s[i].is_trivial) out.push_back(static_cast<int>(i));
  return out;
}

struct MainInputs {
  std::string label;
  MatFn f;
  double gamma;
  const IrrepSet* s;
  BiasedSet set;
};

std::vector<MainInputs> main_inputs() {
  std::vector<MainInputs> out;
  const char* groups[] = {"symmetric(3)", "quaternion8", "dihedral(5)", "symmetric(4)", "alternating(5)",
                          "direct_product(elementary_abelian(2,2),symmetric(3))"};
  for (const char* name : groups) {
    const IrrepSet& s = numeric_irreps(name);
    const SampleResult sr = alon_roichman_sample(s, kMainEps, 11);
    for (int count : {1, 2}) {
      const MatFn hom = homomorphism_fn(s, nontrivial(s, count), 0);
      out.push_back({std::string(name) + " hom" + std::to_string(count), hom, 0.0, &s, sr.set});
      for (std::uint64_t seed : {1, 2}) {
        // Delta <= 9 theta^2 t pointwise, so the BLR_{2 gamma} test passes everywhere.
        out.push_back({std::string(name) + " perturbed" + std::to_string(count) + "/" + std::to_string(seed),
                       perturbed_fn(hom, kTheta, seed), 4.5 * kTheta * kTheta, &s, sr.set});
      }
    }
  }
  return out;
}

Outcome theorem_main() {
  Outcome o;
  VerifyOptions opt;
  opt.tol = kClaimTol;
  int cases = 0;
  double min_eta = 1e300, min_witness_margin = 1e300;
  for (const auto& in : main_inputs()) {
    if (!in.set.certified_epsilon || *in.set.certified_epsilon > kMainEps) {
      o.pass = false;
      o.detail += "uncertified set for " + in.label + "; ";
      continue;
    }
    const auto tp = check_test_passing(in.f, in.set, in.gamma, opt);
    const auto mp = check_main_part2(in.f, in.set, in.gamma, *in.s, std::nullopt, opt);
    const double eta = mp.details.at("eta").get<double>();
    const auto& w = mp.details.at("witness");
    bool ok = tp.status == CheckStatus::pass && mp.status == CheckStatus::pass && eta > 0 && !w.is_null();
    if (ok) {
      const double d = w.at("d").get<int>();
      const double mass = w.at("mass").get<double>();
      ok = d < 2.0 * in.f.t / eta && mass >= eta / 2 - kClaimTol;
      min_witness_margin = std::min(min_witness_margin, mass - eta / 2);
    }
    min_eta = std::min(min_eta, eta);
    if (!ok) {
      o.pass = false;
      o.detail += in.label + " failed; ";
    }
    ++cases;
  }
  // Random unitary inputs: eta <= 0 must come out inconclusive, never failed.
  int random_cases = 0, random_inconclusive = 0;
  for (const char* name : {"symmetric(4)", "alternating(5)", "dihedral(5)"}) {
    const IrrepSet& s = numeric_irreps(name);
    const SampleResult sr = alon_roichman_sample(s, kMainEps, 11);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const MatFn f = oracle::random_unitary_fn(s.group, 2, 900 + seed);
      for (const auto& r : {check_test_passing(f, sr.set, 0.0, opt),
                            check_main_part2(f, sr.set, 0.0, s, std::nullopt, opt)}) {
        ++random_cases;
        const bool vacuous = r.details.at("eta").get<double>() <= 0;
        random_inconclusive += vacuous && r.status == CheckStatus::inconclusive;
        if (r.status == CheckStatus::fail || (vacuous && r.status != CheckStatus::inconclusive)) {
          o.pass = false;
          o.detail += std::string("random input on ") + name + " mishandled; ";
        }
      }
    }
  }
  o.detail += std::to_string(cases) + " structured inputs (theta=" + fmt(kTheta) + ", gamma=4.5 theta^2), min eta " +
              fmt(min_eta) + ", min witness mass margin " + fmt(min_witness_margin) + "; " +
              std::to_string(random_inconclusive) + "/" + std::to_string(random_cases) +
              " random checks inconclusive, none failed";
  return o;
}

// ---------------------------------------------------------------- 7

Outcome quasirandom_regime() {
  Outcome o;
  const IrrepSet& s = numeric_irreps("alternating(5)");
  const int D = quasirandomness(s);
  const std::size_t cap = static_cast<std::size_t>(std::ceil(8 * std::log(60.0) / (kQuasiEps * kQuasiEps)));
  const SampleResult sr = alon_roichman_sample(s, kQuasiEps, 3);
  if (!sr.success || sr.set.size() > cap) return {false, "no certified set within the size cap"};
  VerifyOptions opt;
  opt.tol = kClaimTol;
  int passed = 0, below = 0;
  double best_gap = 0;
  for (int i = 0; i < kInstances; ++i) {
    const MatFn f = oracle::random_fn(s.group, 1, 4000 + i);
    const MatFn g = oracle::random_fn(s.group, 1, 5000 + i);
    const auto r = check_bnp_derand(f, g, sr.set, s, std::nullopt, opt);
    passed += r.status == CheckStatus::pass;
    const double cs = r.details.at("cauchy_schwarz_bound").get<double>();
    if (r.status == CheckStatus::pass && r.rhs < cs) {
      ++below;
      best_gap = std::max(best_gap, cs - r.rhs);
    }
  }
  o.pass = D == 3 && passed == kInstances && below >= 1;
  o.detail = "D=" + std::to_string(D) + ", |S|=" + std::to_string(sr.set.size()) + " <= " + std::to_string(cap) +
             ", eps=" + fmt(*sr.set.certified_epsilon) + ", " + std::to_string(passed) + "/" +
             std::to_string(kInstances) + " pass, " + std::to_string(below) +
             " strictly below Cauchy-Schwarz, largest gap " + fmt(best_gap);
  return o;
}

// ---------------------------------------------------------------- 8

Outcome gowers_hatami() {
  Outcome o;
  double worst_exact = 0, min_ratio = 1e300;
  int exact = 0, perturbed = 0;
  for (const auto& in : main_inputs()) {
    if (in.gamma == 0) {
      const GhResult r = gh_search(in.f, 1.0, *in.s);
      const double err = std::abs(r.correlation - in.f.t);
      worst_exact = std::max(worst_exact, err);
      if (!(err <= kGhExactTol && r.window_ok)) {
        o.pass = false;
        o.detail += in.label + " exact search missed; ";
      }
      ++exact;
    } else {
      const EtaInfo e = compute_eta(in.f, in.set, in.gamma);
      if (e.eta <= 0) {
        o.pass = false;
        o.detail += in.label + " eta <= 0; ";
        continue;
      }
      const GhResult r = gh_search(in.f, std::min(1.0, e.eta), *in.s);
      const double target = e.eta * e.eta * in.f.t / 4;
      min_ratio = std::min(min_ratio, r.correlation / target);
      if (r.correlation < target) {
        o.pass = false;
        o.detail += in.label + " below eta^2 t/4; ";
      }
      ++perturbed;
    }
  }
  o.detail += std::to_string(exact) + " exact inputs, max |corr - t| " + fmt(worst_exact) + "; " +
              std::to_string(perturbed) + " perturbed inputs, min corr/(eta^2 t/4) " + fmt(min_ratio);
  return o;
}

// ---------------------------------------------------------------- 9

struct Captured {
  int code = -1;
  std::string out;
};

Captured run(const std::string& cmd) {
  Captured c;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), got);
  const int status = pclose(p);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome reproducibility() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "homtest_acceptance_repro";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = HOMTEST_CLI_PATH;
  const std::string d = dir.string();
  const std::string grp = "'direct_product(elementary_abelian(2,2),symmetric(3))'";
  std::vector<std::string> setup = {
      cli + " --seed 5 irreps compute --group " + grp + " --cache " + d + "/irreps.json",
      cli + " --seed 5 fn make --kind hom --group " + grp + " --irreps " + d + "/irreps.json --irrep-list 2,5 --out " +
          d + "/hom.json",
      cli + " --seed 5 fn make --kind perturbed --base " + d + "/hom.json --theta 0.1 --out " + d + "/pert.json",
      cli + " --seed 5 bias find --group " + grp + " --eps 0.3 --irreps " + d + "/irreps.json --out " + d +
          "/set.json",
  };
  for (const auto& c : setup) {
    const Captured r = run(c + " > /dev/null");
    if (r.code != 0) return {false, "setup command failed (" + std::to_string(r.code) + "): " + c};
  }
  const std::string base = cli + " --seed 5 verify --claim all --fn " + d + "/pert.json --set " + d +
                           "/set.json --irreps " + d + "/irreps.json --gamma 0.045";
  const Captured a = run(base + " --threads 1 --out " + d + "/a.json");
  const Captured b = run(base + " --threads 4 --out " + d + "/b.json");
  const Captured c = run(base + " --threads auto --out " + d + "/c.json");
  const std::string fa = slurp(dir / "a.json"), fb = slurp(dir / "b.json"), fc = slurp(dir / "c.json");
  Outcome o;
  o.pass = a.code == b.code && a.code == c.code && (a.code == 0 || a.code == 3) && !a.out.empty() &&
           a.out == b.out && a.out == c.out && !fa.empty() && fa == fb && fa == fc;
  o.detail = "threads 1/4/auto: exit " + std::to_string(a.code) + "/" + std::to_string(b.code) + "/" +
             std::to_string(c.code) + ", stdout " + (a.out == b.out && a.out == c.out ? "identical" : "DIFFERENT") +
             " (" + std::to_string(a.out.size()) + " bytes), --out files " +
             (fa == fb && fa == fc ? "identical" : "DIFFERENT");
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  auto guarded = [](int id, const std::string& title, const std::function<Outcome()>& fn) {
    try {
      report(id, title, fn());
    } catch (const std::exception& e) {
      report(id, title, {false, std::string("exception: ") + e.what()});
    }
  };
  guarded(1, "representation soundness", representation_soundness);
  guarded(2, "Fourier identities", fourier_identities);
  guarded(3, "Coppersmith constant 2/9", coppersmith_constant);
  guarded(4, "kernel counterexample", kernel_counterexample);
  guarded(5, "lemma suite", lemma_suite);
  guarded(6, "main theorem checks", theorem_main);
  guarded(7, "quasirandom regime", quasirandom_regime);
  guarded(8, "Gowers-Hatami witness", gowers_hatami);
  guarded(9, "reproducibility across thread counts", reproducibility);
  std::printf("acceptance: %d of 9 criteria failed, %.1f s\n", failures, seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
