#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homtest/bias.hpp"
#include "homtest/blr.hpp"
#include "homtest/matfun.hpp"
#include "homtest/rep_theory.hpp"

namespace homtest {

enum class ClaimId {
  pd_fooled,
  psi_pd,
  psi_algnorm,
  u2_approx,
  test_passing,
  mxbnp,
  bnp_derand,
  main_part2,
  gh_corr,
  eml_deg1,
};

std::string claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(const std::string& name);
const std::vector<ClaimId>& all_claims();

enum class CheckStatus { pass, fail, inconclusive };
std::string status_name(CheckStatus s);

/// One inequality instance lhs <= rhs. `pass` records whether the inequality
/// holds within `tolerance`; `status` additionally marks vacuous instances
/// (and heuristic misses) as inconclusive.
struct CheckReport {
  ClaimId claim = ClaimId::pd_fooled;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  double tolerance = 0;
  bool pass = false;
  CheckStatus status = CheckStatus::fail;
  std::string note;
  json inputs = json::object();
  json details = json::object();

  json to_json() const;
};

struct VerifyOptions {
  double tol = 1e-8;  // relative: the absolute tolerance is tol * max(1, |rhs|)
  int threads = 1;
};

CheckReport check_pd_fooled(const MatFn& f, const BiasedSet& set, const VerifyOptions& o = {});
CheckReport check_psi_pd(const MatFn& f, const VerifyOptions& o = {});
CheckReport check_psi_algnorm(const MatFn& h, const MatFn& f, const VerifyOptions& o = {});
CheckReport check_u2_approx(const MatFn& f, const BiasedSet& set, const VerifyOptions& o = {});
CheckReport check_test_passing(const MatFn& f, const BiasedSet& set, double gamma, const VerifyOptions& o = {});
CheckReport check_mxbnp(const MatFn& f, const MatFn& g, const IrrepSet& s, int D, const VerifyOptions& o = {});
/// Subtracts the means of f and g first. D defaults to quasirandomness(s).
/// The report also carries the two-sided degree-2 mixing gap, which must
/// hold for the check to pass.
CheckReport check_bnp_derand(const MatFn& f, const MatFn& g, const BiasedSet& set, const IrrepSet& s,
                             std::optional<int> D = std::nullopt, const VerifyOptions& o = {});
/// D defaults to ceil(2t/eta) (at least 2).
CheckReport check_main_part2(const MatFn& f, const BiasedSet& set, double gamma, const IrrepSet& s,
                             std::optional<int> D = std::nullopt, const VerifyOptions& o = {});
CheckReport check_eml_deg1(const MatFn& f, const MatFn& g, const BiasedSet& set, const VerifyOptions& o = {});

/// Heuristic construction of g(x) = V pi(x) U* correlated with f.
struct GhResult {
  int t_prime = 0;
  double correlation = 0;   // Re E_x tr(g(x)* f(x))
  double target = 0;        // eta^2 t / 4
  double window_lo = 0;     // eta t
  double window_hi = 0;     // 2t / eta
  bool window_ok = false;
  bool meets_target = false;
  std::vector<int> components;  // irrep indices sigma; pi carries conj(sigma)
  int iterations = 0;

  json to_json() const;
};
GhResult gh_search(const MatFn& f, double eta, const IrrepSet& s);
/// eta from the exact BLR_{2 gamma} pass rate. Inconclusive (never failed)
/// when eta <= 0 or the heuristic misses.
CheckReport check_gh_corr(const MatFn& f, const BiasedSet& set, double gamma, const IrrepSet& s,
                          const VerifyOptions& o = {});

/// eta = (delta - gamma)^2 - eps with delta the exact BLR_{2 gamma} pass rate.
struct EtaInfo {
  BLRReport blr;
  double delta = 0;
  double eps = 0;
  double eta = 0;
};
EtaInfo compute_eta(const MatFn& f, const BiasedSet& set, double gamma, int threads = 1);

struct ClaimInputs {
  const MatFn* f = nullptr;
  const MatFn* g = nullptr;  // optional second function
  const BiasedSet* set = nullptr;
  const IrrepSet* irreps = nullptr;
  double gamma = 0;
  std::optional<int> D;
};

/// Runs one claim with the conventions of a batch run: claims on a single
/// function use g = f (or f~ for the psi claims) when g is absent, and the
/// scalar-only claim runs on psi(f~, f) when t > 1.
CheckReport run_claim(ClaimId id, const ClaimInputs& in, const VerifyOptions& o = {});

struct BatchSummary {
  int total = 0, passed = 0, inconclusive = 0, failed = 0;
};
BatchSummary summarize(const std::vector<CheckReport>& reports);
/// Claims run in order; the output does not depend on o.threads.
std::vector<CheckReport> run_claims(const std::vector<ClaimId>& ids, const ClaimInputs& in, const VerifyOptions& o = {});
json batch_to_json(const std::vector<CheckReport>& reports);

/// 0 all pass, 1 any failure, 3 only passes and inconclusive with at least
/// one inconclusive.
int exit_code_for(const BatchSummary& s);

}  // namespace homtest
