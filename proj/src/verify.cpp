#include "homtest/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "homtest/algebra_norm.hpp"
#include "homtest/error.hpp"
#include "homtest/parallel.hpp"

namespace homtest {

namespace {

constexpr std::pair<ClaimId, const char*> kClaimNames[] = {
    {ClaimId::pd_fooled, "pd_fooled"},     {ClaimId::psi_pd, "psi_pd"},
    {ClaimId::psi_algnorm, "psi_algnorm"}, {ClaimId::u2_approx, "u2_approx"},
    {ClaimId::test_passing, "test_passing"}, {ClaimId::mxbnp, "mxbnp"},
    {ClaimId::bnp_derand, "bnp_derand"},   {ClaimId::main_part2, "main_part2"},
    {ClaimId::gh_corr, "gh_corr"},         {ClaimId::eml_deg1, "eml_deg1"},
};

CheckReport make_report(ClaimId id, double lhs, double rhs, const VerifyOptions& o) {
  CheckReport r;
  r.claim = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tolerance = o.tol * std::max(1.0, std::abs(rhs));
  r.pass = lhs <= rhs + r.tolerance;
  r.status = r.pass ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckReport inconclusive(CheckReport r, std::string note) {
  r.status = CheckStatus::inconclusive;
  r.note = std::move(note);
  return r;
}

double certified_eps(const BiasedSet& set) {
  if (!set.certified_epsilon) throw Error(Errc::invalid_argument, "check needs a certified biased set");
  return *set.certified_epsilon;
}

cplx scalar_average(const BiasedSet& set, const MatFn& f) { return set_average(set, f)(0, 0); }

double scalar_mean(const MatFn& f) { return mean(f)(0, 0).real(); }

}  // namespace

std::string claim_name(ClaimId id) {
  for (const auto& [c, name] : kClaimNames)
    if (c == id) return name;
  return "unknown";
}

std::optional<ClaimId> parse_claim(const std::string& name) {
  for (const auto& [c, n] : kClaimNames)
    if (name == n) return c;
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& [c, name] : kClaimNames) v.push_back(c);
    return v;
  }();
  return ids;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "fail";
}

json CheckReport::to_json() const {
  json j = {{"claim", claim_name(claim)}, {"lhs", lhs},     {"rhs", rhs},
            {"slack", slack},             {"tolerance", tolerance}, {"pass", pass},
            {"status", status_name(status)}, {"inputs", inputs}, {"details", details}};
  if (!note.empty()) j["note"] = note;
  return j;
}

// ---------------------------------------------------------------- scalar-function lemmas

CheckReport check_pd_fooled(const MatFn& f, const BiasedSet& set, const VerifyOptions& o) {
  const double eps = certified_eps(set);
  const double anorm = algebra_norm(f);
  CheckReport r = make_report(ClaimId::pd_fooled, fooling_gap(f, set), eps * anorm, o);
  r.inputs = {{"f", function_digest(f)}, {"set", set_digest(set)}};
  r.details = {{"eps", eps}, {"algebra_norm", anorm}};
  return r;
}

CheckReport check_psi_pd(const MatFn& f, const VerifyOptions& o) {
  const MatFn p = psi(adjoint(f), f, o.threads);
  const MinEig me = min_eig(p);
  const double at_id = p(p.group->id)(0, 0).real();
  CheckReport r = make_report(ClaimId::psi_pd, -me.value, 0.0, o);
  // Scale-relative PSD tolerance.
  r.tolerance = o.tol * std::max(1.0, at_id);
  r.pass = r.lhs <= r.tolerance;
  r.status = r.pass ? CheckStatus::pass : CheckStatus::fail;
  r.inputs = {{"f", function_digest(f)}};
  r.details = {{"min_eig", me.value}, {"hermitian_drift", me.hermitian_drift}, {"psi_at_identity", at_id}};
  return r;
}

CheckReport check_psi_algnorm(const MatFn& h, const MatFn& f, const VerifyOptions& o) {
  const MatFn p = psi(h, f, o.threads);
  const bool unitary = h.unitary_certified && f.unitary_certified;
  const double nf = norm2(f), nh = norm2(h);
  const double rhs = unitary ? static_cast<double>(f.t) : nf * nh;
  CheckReport r = make_report(ClaimId::psi_algnorm, algebra_norm(p), rhs, o);
  r.inputs = {{"h", function_digest(h)}, {"f", function_digest(f)}};
  r.details = {{"bound", unitary ? "t" : "norm_f2*norm_h2"}, {"norm_f2", nf}, {"norm_h2", nh}};
  return r;
}

CheckReport check_u2_approx(const MatFn& f, const BiasedSet& set, const VerifyOptions& o) {
  const double eps = certified_eps(set);
  const MatFn p = psi(adjoint(f), f, o.threads);
  const double u2 = scalar_mean(p);  // E_G ||(f~*f)(y)||^2 = ||f||_U2^4
  const double on_set = scalar_average(set, p).real();
  const double nf = norm2(f);
  const double rhs = f.unitary_certified ? eps * f.t : eps * nf * nf;
  CheckReport r = make_report(ClaimId::u2_approx, std::abs(on_set - u2), rhs, o);
  if (!f.unitary_certified) r.note = "f is not unitary-valued; bound eps*||f||^4 used";
  r.inputs = {{"f", function_digest(f)}, {"set", set_digest(set)}};
  r.details = {{"eps", eps}, {"u2_norm4", u2}, {"set_average", on_set}};
  return r;
}

// ---------------------------------------------------------------- test soundness

EtaInfo compute_eta(const MatFn& f, const BiasedSet& set, double gamma, int threads) {
  EtaInfo e;
  e.eps = certified_eps(set);
  e.blr = blr_pass_probability(f, set, 2 * gamma, BLRMode::exact_mode(), threads);
  e.delta = e.blr.delta;
  e.eta = (e.delta - gamma) * (e.delta - gamma) - e.eps;
  return e;
}

namespace {

json eta_json(const EtaInfo& e, double gamma) {
  return {{"gamma", gamma},     {"delta", e.delta}, {"count", e.blr.count}, {"total", e.blr.total},
          {"eps", e.eps},       {"eta", e.eta}};
}

bool eta_usable(const EtaInfo& e, double gamma) { return e.eta > 0 && e.delta >= gamma; }

}  // namespace

CheckReport check_test_passing(const MatFn& f, const BiasedSet& set, double gamma, const VerifyOptions& o) {
  const EtaInfo e = compute_eta(f, set, gamma, o.threads);
  const double u2 = u2_norm4_time(f, o.threads);
  CheckReport r = make_report(ClaimId::test_passing, e.eta * f.t, u2, o);
  r.inputs = {{"f", function_digest(f)}, {"set", set_digest(set)}, {"gamma", gamma}};
  r.details = eta_json(e, gamma);
  r.details["u2_norm4"] = u2;
  if (!f.unitary_certified) return inconclusive(r, "requires unitary-valued f");
  if (!eta_usable(e, gamma)) return inconclusive(r, "eta <= 0: the bound is vacuous");
  return r;
}

CheckReport check_mxbnp(const MatFn& f, const MatFn& g, const IrrepSet& s, int D, const VerifyOptions& o) {
  if (D < 1) throw Error(Errc::invalid_argument, "D must be a positive integer");
  const FourierCoeffs c = fourier(convolve(f, g, o.threads), s, o.threads);
  double lhs = 0;
  int counted = 0;
  for (std::size_t k = 0; k < c.coeff.size(); ++k)
    if (c.dims[k] >= D) {
      lhs += c.dims[k] * hs_norm2(c.coeff[k]);
      ++counted;
    }
  const double nf = norm2(f), ng = norm2(g);
  CheckReport r = make_report(ClaimId::mxbnp, lhs, nf * ng / D, o);
  r.inputs = {{"f", function_digest(f)}, {"g", function_digest(g)}, {"D", D}};
  r.details = {{"irreps_counted", counted}, {"norm_f2", nf}, {"norm_g2", ng}};
  return r;
}

CheckReport check_bnp_derand(const MatFn& f, const MatFn& g, const BiasedSet& set, const IrrepSet& s,
                             std::optional<int> D, const VerifyOptions& o) {
  const double eps = certified_eps(set);
  const int d = D.value_or(quasirandomness(s));
  if (d < 1) throw Error(Errc::invalid_argument, "D must be a positive integer");
  const MatFn f0 = subtract_mean(f), g0 = subtract_mean(g);
  const MatFn p = psi(f0, g0, o.threads);
  const double on_set = scalar_average(set, p).real();
  const double on_group = scalar_mean(p);
  const double nf = norm2(f0), ng = norm2(g0);
  const double product = nf * ng;
  CheckReport r = make_report(ClaimId::bnp_derand, on_set, (1.0 / d + eps) * product, o);

  // Two-sided degree-2 mixing: |E_S psi - E_G psi| <= eps ||f||^2 ||g||^2.
  const double gap2 = std::abs(on_set - on_group);
  const double bound2 = eps * product;
  const bool deg2 = gap2 <= bound2 + o.tol * std::max(1.0, bound2);
  r.inputs = {{"f", function_digest(f)}, {"g", function_digest(g)}, {"set", set_digest(set)}, {"D", d}};
  r.details = {{"eps", eps},
               {"D", d},
               {"mean_subtracted", true},
               {"norm_f2", nf},
               {"norm_g2", ng},
               {"group_average", on_group},
               {"degree2_gap", gap2},
               {"degree2_bound", bound2},
               {"degree2_pass", deg2},
               {"cauchy_schwarz_bound", product},
               {"improvement_over_cauchy_schwarz", product - r.rhs}};
  if (!deg2) {
    r.pass = false;
    r.status = CheckStatus::fail;
    r.note = "two-sided degree-2 mixing bound violated";
  }
  return r;
}

CheckReport check_main_part2(const MatFn& f, const BiasedSet& set, double gamma, const IrrepSet& s,
                             std::optional<int> D, const VerifyOptions& o) {
  const EtaInfo e = compute_eta(f, set, gamma, o.threads);
  const FourierCoeffs c = fourier(f, s, o.threads);
  const double t = f.t;
  int d = 2;
  if (D && *D > 1) {
    d = *D;
  } else if (e.eta > 0) {
    d = std::max(2, static_cast<int>(std::ceil(2 * t / e.eta - 1e-12)));
  }

  double best = 0;
  int best_index = -1;
  for (std::size_t k = 0; k < c.coeff.size(); ++k)
    if (c.dims[k] < d) {
      const double m = hs_norm2(c.coeff[k]);
      if (best_index < 0 || m > best) {
        best = m;
        best_index = static_cast<int>(k);
      }
    }

  // Witness: an irrep with d < 2t/eta and mass >= eta/2.
  int witness = -1;
  double witness_mass = 0;
  if (e.eta > 0) {
    for (std::size_t k = 0; k < c.coeff.size(); ++k) {
      const double m = hs_norm2(c.coeff[k]);
      if (c.dims[k] < 2 * t / e.eta && m >= e.eta / 2 - o.tol && (witness < 0 || m > witness_mass)) {
        witness = static_cast<int>(k);
        witness_mass = m;
      }
    }
  }

  CheckReport r = make_report(ClaimId::main_part2, e.eta - t / d, best, o);
  r.inputs = {{"f", function_digest(f)}, {"set", set_digest(set)}, {"gamma", gamma}, {"D", d}};
  r.details = eta_json(e, gamma);
  r.details["D"] = d;
  r.details["max_irrep"] = best_index;
  r.details["witness"] = witness >= 0 ? json{{"irrep", witness}, {"d", c.dims[witness]}, {"mass", witness_mass},
                                             {"dim_bound", 2 * t / e.eta}, {"mass_bound", e.eta / 2}}
                                      : json(nullptr);
  if (!f.unitary_certified) return inconclusive(r, "requires unitary-valued f");
  if (!eta_usable(e, gamma)) return inconclusive(r, "eta <= 0: the bound is vacuous");
  if (witness < 0) {
    r.pass = false;
    r.status = CheckStatus::fail;
    r.note = "no irrep with d < 2t/eta carries mass >= eta/2";
  }
  return r;
}

CheckReport check_eml_deg1(const MatFn& f, const MatFn& g, const BiasedSet& set, const VerifyOptions& o) {
  const MatFn f0 = subtract_mean(f), g0 = subtract_mean(g);
  const EmlReport e = eml_gap(set, f0, g0, o.threads);
  CheckReport r = make_report(ClaimId::eml_deg1, e.lhs, e.bound, o);
  r.inputs = {{"f", function_digest(f)}, {"g", function_digest(g)}, {"set", set_digest(set)}};
  r.details = {{"eps", certified_eps(set)}, {"mean_subtracted", true}, {"mean_zero", e.mean_zero}};
  return r;
}

// ---------------------------------------------------------------- structure witness

json GhResult::to_json() const {
  return {{"t_prime", t_prime},     {"correlation", correlation}, {"target", target},
          {"window", {window_lo, window_hi}}, {"window_ok", window_ok}, {"meets_target", meets_target},
          {"components", components}, {"iterations", iterations}, {"heuristic", true}};
}

GhResult gh_search(const MatFn& f, double eta, const IrrepSet& s) {
  if (!(eta > 0 && eta <= 1)) throw Error(Errc::invalid_argument, "eta must lie in (0, 1]");
  const int t = f.t;
  const int n = f.n();
  GhResult out;
  out.window_lo = eta * t;
  out.window_hi = 2.0 * t / eta;
  out.target = eta * eta * t / 4.0;

  const FourierCoeffs c = fourier(f, s);
  std::vector<double> weight(c.coeff.size());
  for (std::size_t k = 0; k < c.coeff.size(); ++k)
    weight[k] = c.dims[k] * (c.coeff[k] * c.coeff[k].adjoint()).norm();
  std::vector<int> order(c.coeff.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight[a] > weight[b]; });

  int dim = 0;
  auto fits = [&](int k) { return dim + c.dims[k] <= out.window_hi + 1e-12; };
  for (int k : order) {
    if (weight[k] <= 1e-12) break;
    const Eigen::VectorXd sv = singular_values(c.coeff[k]);
    const int copies = static_cast<int>((sv.array() >= 0.5).count());
    for (int i = 0; i < copies && fits(k); ++i) {
      out.components.push_back(k);
      dim += c.dims[k];
    }
  }
  for (int k : order) {
    if (dim >= out.window_lo - 1e-12 || weight[k] <= 1e-12) break;
    if (fits(k)) {
      out.components.push_back(k);
      dim += c.dims[k];
    }
  }
  out.t_prime = dim;
  out.window_ok = dim > 0 && dim >= out.window_lo - 1e-12 && dim <= out.window_hi + 1e-12;
  if (dim == 0) return out;

  // pi(x) = direct sum of conj(sigma(x)) over the chosen components.
  std::vector<Mat> pi(n, Mat::Zero(dim, dim));
  for (int x = 0; x < n; ++x) {
    int off = 0;
    for (int k : out.components) {
      pi[x].block(off, off, c.dims[k], c.dims[k]) = s[k].mats[x].conjugate();
      off += c.dims[k];
    }
  }

  // Per block k: E tr(U_k sigma_k^T V_k* f) = vec(V_k)* K_k vec(U_k) with
  // K_k = E f(x) (x) sigma_k(x). The j-th copy of an irrep takes the j-th
  // singular pair of its K_k; on exact inputs that pair is the block
  // embedding up to phase, so the start is already optimal.
  Mat U = Mat::Zero(t, dim), V = Mat::Zero(t, dim);
  {
    std::map<int, int> copy_of;
    int off = 0;
    for (int k : out.components) {
      const int d = c.dims[k];
      const int j = copy_of[k]++;
      Mat Kk = Mat::Zero(t * d, t * d);
      for (int x = 0; x < n; ++x) Kk += kron(f(x), s[k].mats[x]);
      Kk /= static_cast<double>(n);
      Eigen::BDCSVD<Mat> svd(Kk, Eigen::ComputeFullU | Eigen::ComputeFullV);
      const int col = std::min(j, static_cast<int>(svd.singularValues().size()) - 1);
      const double scale = std::sqrt(static_cast<double>(d));
      for (int i = 0; i < t; ++i)
        for (int a = 0; a < d; ++a) {
          V(i, off + a) = scale * svd.matrixU()(i * d + a, col);
          U(i, off + a) = scale * svd.matrixV()(i * d + a, col);
        }
      off += d;
    }
  }
  U = polar_factor(U);
  V = polar_factor(V);

  auto correlation = [&] {
    double acc = 0;
    for (int x = 0; x < n; ++x) acc += ((V * pi[x] * U.adjoint()).adjoint() * f(x)).trace().real();
    return acc / n;
  };
  double value = correlation();
  for (int it = 0; it < 500; ++it) {
    Mat M = Mat::Zero(t, dim);
    for (int x = 0; x < n; ++x) M += f(x) * U * pi[x].adjoint();
    V = polar_factor(M);
    Mat N = Mat::Zero(dim, t);
    for (int x = 0; x < n; ++x) N += pi[x].adjoint() * V.adjoint() * f(x);
    U = polar_factor(N).adjoint();
    const double next = correlation();
    out.iterations = it + 1;
    const bool done = next - value <= 1e-14 * std::max(1.0, std::abs(value));
    value = std::max(value, next);
    if (done) break;
  }
  out.correlation = value;
  out.meets_target = value >= out.target;
  return out;
}

CheckReport check_gh_corr(const MatFn& f, const BiasedSet& set, double gamma, const IrrepSet& s,
                          const VerifyOptions& o) {
  const EtaInfo e = compute_eta(f, set, gamma, o.threads);
  CheckReport r;
  r.claim = ClaimId::gh_corr;
  r.inputs = {{"f", function_digest(f)}, {"set", set_digest(set)}, {"gamma", gamma}};
  r.details = eta_json(e, gamma);
  r.lhs = std::max(0.0, e.eta) * std::max(0.0, e.eta) * f.t / 4.0;
  if (!f.unitary_certified) return inconclusive(r, "requires unitary-valued f");
  if (!eta_usable(e, gamma)) return inconclusive(r, "eta <= 0: the bound is vacuous");
  const GhResult gh = gh_search(f, std::min(1.0, e.eta), s);
  CheckReport m = make_report(ClaimId::gh_corr, gh.target, gh.correlation, o);
  m.inputs = std::move(r.inputs);
  m.details = std::move(r.details);
  r = std::move(m);
  r.details["search"] = gh.to_json();
  if (!gh.window_ok || !r.pass) {
    return inconclusive(r, "heuristic search found no witness; the existence statement is not refuted");
  }
  return r;
}

// ---------------------------------------------------------------- batches

CheckReport run_claim(ClaimId id, const ClaimInputs& in, const VerifyOptions& o) {
  if (!in.f) throw Error(Errc::invalid_argument, "claim needs a function");
  const MatFn& f = *in.f;
  const MatFn& g = in.g ? *in.g : f;
  auto need_set = [&]() -> const BiasedSet& {
    if (!in.set) throw Error(Errc::invalid_argument, claim_name(id) + " needs a biased set");
    return *in.set;
  };
  auto need_irreps = [&]() -> const IrrepSet& {
    if (!in.irreps) throw Error(Errc::invalid_argument, claim_name(id) + " needs irreps");
    return *in.irreps;
  };
  switch (id) {
    case ClaimId::pd_fooled: {
      if (f.t == 1) return check_pd_fooled(f, need_set(), o);
      CheckReport r = check_pd_fooled(psi(adjoint(f), f, o.threads), need_set(), o);
      r.note = "t > 1: run on the scalar psi(y) = ||(f~*f)(y)||^2";
      return r;
    }
    case ClaimId::psi_pd: return check_psi_pd(f, o);
    case ClaimId::psi_algnorm: return in.g ? check_psi_algnorm(f, g, o) : check_psi_algnorm(adjoint(f), f, o);
    case ClaimId::u2_approx: return check_u2_approx(f, need_set(), o);
    case ClaimId::test_passing: return check_test_passing(f, need_set(), in.gamma, o);
    case ClaimId::mxbnp: return check_mxbnp(f, g, need_irreps(), in.D.value_or(quasirandomness(need_irreps())), o);
    case ClaimId::bnp_derand: return check_bnp_derand(f, g, need_set(), need_irreps(), std::nullopt, o);
    case ClaimId::main_part2: return check_main_part2(f, need_set(), in.gamma, need_irreps(), in.D, o);
    case ClaimId::gh_corr: return check_gh_corr(f, need_set(), in.gamma, need_irreps(), o);
    case ClaimId::eml_deg1: return check_eml_deg1(f, g, need_set(), o);
  }
  throw Error(Errc::invalid_argument, "unknown claim");
}

std::vector<CheckReport> run_claims(const std::vector<ClaimId>& ids, const ClaimInputs& in, const VerifyOptions& o) {
  std::vector<CheckReport> out(ids.size());
  VerifyOptions inner = o;
  inner.threads = 1;
  parallel_for(ids.size(), o.threads, [&](std::size_t i) { out[i] = run_claim(ids[i], in, inner); });
  return out;
}

BatchSummary summarize(const std::vector<CheckReport>& reports) {
  BatchSummary s;
  for (const auto& r : reports) {
    ++s.total;
    switch (r.status) {
      case CheckStatus::pass: ++s.passed; break;
      case CheckStatus::fail: ++s.failed; break;
      case CheckStatus::inconclusive: ++s.inconclusive; break;
    }
  }
  return s;
}

json batch_to_json(const std::vector<CheckReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  const BatchSummary s = summarize(reports);
  return {{"reports", std::move(arr)},
          {"summary", {{"total", s.total}, {"passed", s.passed}, {"inconclusive", s.inconclusive}, {"failed", s.failed}}}};
}

int exit_code_for(const BatchSummary& s) {
  if (s.failed > 0) return 1;
  if (s.inconclusive > 0) return 3;
  return 0;
}

}  // namespace homtest
