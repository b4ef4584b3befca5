// homtest: command-line driver for group construction, irreps, biased sets,
// test functions, BLR runs and inequality checks. Uses only the C API.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homtest/homtest.h"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CliError {
  int code;
  std::string message;
};

void check(ht_status st, const std::string& context) {
  if (st != HT_OK) throw CliError{kExitUsage, context + ": " + ht_last_error()};
}

struct Deleter {
  void operator()(ht_group* p) const { ht_group_free(p); }
  void operator()(ht_irreps* p) const { ht_irreps_free(p); }
  void operator()(ht_fn* p) const { ht_fn_free(p); }
  void operator()(ht_set* p) const { ht_set_free(p); }
};
using Group = std::unique_ptr<ht_group, Deleter>;
using Irreps = std::unique_ptr<ht_irreps, Deleter>;
using Fn = std::unique_ptr<ht_fn, Deleter>;
using Set = std::unique_ptr<ht_set, Deleter>;

json take_json(char* raw) {
  std::unique_ptr<char, decltype(&ht_string_free)> guard(raw, &ht_string_free);
  return json::parse(raw);
}

std::string take_string(char* raw) {
  std::unique_ptr<char, decltype(&ht_string_free)> guard(raw, &ht_string_free);
  return raw;
}

// ---------------------------------------------------------------- global options

struct Global {
  std::uint64_t seed = 1;
  double tol = 1e-8;
  std::string threads = "auto";
  std::string out;
  std::string format = "json";
  std::string config_digest;

  int thread_count() const {
    if (threads == "auto") return 0;
    try {
      const int n = std::stoi(threads);
      if (n >= 1) return n;
    } catch (const std::exception&) {
    }
    throw CliError{kExitUsage, "--threads must be a positive integer or 'auto'"};
  }
};

/// Digest of the invocation minus options that cannot change results.
std::string config_digest(int argc, char** argv) {
  static const std::vector<std::string> excluded = {"--threads", "--out", "--format"};
  json args = json::array();
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    bool skip = false;
    for (const auto& e : excluded) {
      if (a == e) {
        skip = true;
        ++i;  // its value
      } else if (a.rfind(e + "=", 0) == 0) {
        skip = true;
      }
    }
    if (!skip) args.push_back(a);
  }
  char* raw = nullptr;
  check(ht_digest_json(args.dump().c_str(), &raw), "config digest");
  return take_string(raw);
}

// ---------------------------------------------------------------- loading helpers

Group resolve_group(const std::string& what) {
  ht_group* g = nullptr;
  if (std::filesystem::is_regular_file(what)) {
    check(ht_group_load(what.c_str(), &g), "loading group " + what);
  } else {
    check(ht_group_build(what.c_str(), 0, &g), "building group '" + what + "'");
  }
  return Group(g);
}

Irreps resolve_irreps(const ht_group* g, const std::string& cache, const Global& gl) {
  ht_irreps* s = nullptr;
  if (!cache.empty() && std::filesystem::exists(cache)) {
    check(ht_irreps_load(g, cache.c_str(), &s), "loading irreps " + cache);
  } else {
    check(ht_irreps_compute(g, HT_IRREPS_AUTO, gl.seed, gl.tol, &s), "computing irreps");
  }
  return Irreps(s);
}

Fn load_fn(const std::string& path, const ht_group* g) {
  ht_fn* f = nullptr;
  check(ht_fn_load(path.c_str(), g, &f), "loading function " + path);
  return Fn(f);
}

Set load_set_file(const std::string& path, const ht_group* g) {
  ht_set* s = nullptr;
  check(ht_set_load(path.c_str(), g, &s), "loading set " + path);
  return Set(s);
}

Group group_of_fn(const ht_fn* f) {
  ht_group* g = nullptr;
  check(ht_fn_group(f, &g), "function group");
  return Group(g);
}

// ---------------------------------------------------------------- output

std::string cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

/// Rows for the lossy csv/table views.
std::vector<std::vector<std::string>> tabulate(const json& report) {
  std::vector<std::vector<std::string>> rows;
  const json* list = nullptr;
  if (report.contains("reports")) list = &report["reports"];
  if (report.contains("rows")) list = &report["rows"];
  if (list && list->is_array() && !list->empty()) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : (*list)[0].items())
      if (!v.is_object() && !(v.is_array() && v.size() > 8)) keys.push_back(k);
    if (report.contains("reports")) keys = {"claim", "status", "lhs", "rhs", "slack", "tolerance"};
    rows.push_back(keys);
    for (const auto& item : *list) {
      std::vector<std::string> r;
      for (const auto& k : keys) r.push_back(item.contains(k) ? cell(item[k]) : "");
      rows.push_back(std::move(r));
    }
    return rows;
  }
  rows.push_back({"key", "value"});
  for (const auto& [k, v] : report.items())
    if (!v.is_object() && !(v.is_array() && v.size() > 16)) rows.push_back({k, cell(v)});
  return rows;
}

void print_report(const json& report, const Global& gl) {
  if (gl.format == "json") {
    std::cout << report.dump(1) << "\n";
    return;
  }
  const auto rows = tabulate(report);
  if (gl.format == "csv") {
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i];
      std::cout << "\n";
    }
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    for (std::size_t i = 0; i < rows[ri].size(); ++i)
      std::cout << (i ? "  " : "") << std::left << std::setw(static_cast<int>(width[i])) << rows[ri][i];
    std::cout << "\n";
    if (ri == 0) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      std::cout << std::string(total > 2 ? total - 2 : total, '-') << "\n";
    }
  }
}

void write_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{kExitUsage, "cannot write " + path};
  out << j.dump(1) << "\n";
  if (!out) throw CliError{kExitUsage, "write failed: " + path};
}

/// stdout gets the report; --out gets the artifact when there is one,
/// otherwise the report. Both carry the config digest.
void finish(json report, json artifact, const Global& gl) {
  report["config"] = gl.config_digest;
  if (!gl.out.empty()) {
    if (artifact.is_null()) {
      write_file(gl.out, report);
    } else {
      artifact["config"] = gl.config_digest;
      write_file(gl.out, artifact);
    }
  }
  print_report(report, gl);
}

// ---------------------------------------------------------------- commands

int cmd_group_build(const std::string& spec, const std::string& verify, const Global& gl) {
  Group g = resolve_group(spec);
  json artifact = take_json([&] {
    char* s = nullptr;
    check(ht_group_to_json(g.get(), &s), "serializing group");
    return s;
  }());
  json report = {{"name", artifact["name"]}, {"n", artifact["n"]}};
  int code = kExitOk;
  if (!verify.empty()) {
    int pass = 0;
    char* rep = nullptr;
    if (verify == "exhaustive") {
      check(ht_group_verify(g.get(), 1, 0, gl.seed, &pass, &rep), "verifying group");
    } else if (verify.rfind("sampled", 0) == 0) {
      std::uint64_t trials = 100000;
      if (verify.size() > 8 && verify[7] == ':') trials = std::stoull(verify.substr(8));
      check(ht_group_verify(g.get(), 0, trials, gl.seed, &pass, &rep), "verifying group");
    } else {
      throw CliError{kExitUsage, "--verify must be 'exhaustive' or 'sampled[:trials]'"};
    }
    report["verification"] = take_json(rep);
    report["pass"] = pass != 0;
    if (!pass) code = kExitFailed;
  }
  finish(report, artifact, gl);
  return code;
}

int cmd_irreps(const std::string& group, const std::string& method, const std::string& cache, bool blob,
               const Global& gl) {
  Group g = resolve_group(group);
  ht_irrep_method m = HT_IRREPS_AUTO;
  if (method == "closed") m = HT_IRREPS_CLOSED;
  else if (method == "numeric") m = HT_IRREPS_NUMERIC;
  else if (method != "auto") throw CliError{kExitUsage, "--method must be auto, closed or numeric"};
  ht_irreps* raw = nullptr;
  check(ht_irreps_compute(g.get(), m, gl.seed, gl.tol, &raw), "computing irreps");
  Irreps s(raw);
  if (!cache.empty()) check(ht_irreps_save(s.get(), cache.c_str(), blob ? 1 : 0), "saving irreps");
  int pass = 0;
  char* rep = nullptr;
  check(ht_irreps_verify(s.get(), gl.tol, &pass, &rep), "verifying irreps");
  json report = take_json(rep);
  int D = 0;
  if (ht_irreps_quasirandomness(s.get(), &D) == HT_OK) report["D"] = D;
  int n = 0;
  ht_group_order(g.get(), &n);
  report["n"] = n;
  if (!cache.empty()) report["cache"] = cache;
  finish(report, nullptr, gl);
  return pass ? kExitOk : kExitFailed;
}

json set_json(const ht_set* s) {
  char* raw = nullptr;
  check(ht_set_to_json(s, &raw), "serializing set");
  return take_json(raw);
}

int cmd_bias_find(const std::string& group, double eps, int improve, double c, int retries, const std::string& cache,
                  const Global& gl) {
  Group g = resolve_group(group);
  Irreps s = resolve_irreps(g.get(), cache, gl);
  ht_set* raw = nullptr;
  int success = 0;
  check(ht_set_sample(s.get(), eps, gl.seed, retries, c, gl.thread_count(), &raw, &success), "sampling set");
  Set set(raw);
  json report;
  if (improve > 0) {
    char* trace = nullptr;
    check(ht_set_improve(set.get(), s.get(), improve, gl.seed + 1, gl.thread_count(), &trace), "improving set");
    report["improve"] = take_json(trace);
  }
  double achieved = -1;
  ht_set_epsilon(set.get(), &achieved);
  const bool ok = achieved >= 0 && achieved <= eps;
  json artifact = set_json(set.get());
  report["group"] = artifact["group"];
  report["size"] = artifact["elements"].size();
  report["epsilon"] = achieved;
  report["target"] = eps;
  report["success"] = ok;
  finish(report, artifact, gl);
  return ok ? kExitOk : kExitFailed;
}

int cmd_bias_certify(const std::string& path, const std::string& group, const std::string& cache, const Global& gl) {
  Group hint = group.empty() ? nullptr : resolve_group(group);
  Set set = load_set_file(path, hint.get());
  json stored = set_json(set.get());
  Group g = hint ? std::move(hint) : resolve_group(stored["group"].get<std::string>());
  Irreps s = resolve_irreps(g.get(), cache, gl);
  double eps = 0;
  check(ht_set_certify(set.get(), s.get(), gl.thread_count(), &eps), "certifying set");
  json artifact = set_json(set.get());
  json report = {{"group", artifact["group"]},
                 {"size", artifact["elements"].size()},
                 {"epsilon", eps},
                 {"per_irrep", artifact["per_irrep"]}};
  finish(report, artifact, gl);
  return kExitOk;
}

struct FnMakeArgs {
  std::string kind;
  std::string group;
  int t = 0;  // 0: sum of the chosen irrep dimensions (hom), otherwise 1
  std::vector<int> irreps;
  double theta = 0.1;
  std::string base;
  int irrep = 0, i = 0, j = 0, k = 2;
  std::string value;
  std::string cache;
};

int cmd_fn_make(const FnMakeArgs& a, const Global& gl) {
  ht_fn* raw = nullptr;
  if (a.kind == "perturbed") {
    if (a.base.empty()) throw CliError{kExitUsage, "perturbed needs --base <function file>"};
    Group hint = a.group.empty() ? nullptr : resolve_group(a.group);
    Fn base = load_fn(a.base, hint.get());
    check(ht_fn_perturb(base.get(), a.theta, gl.seed, &raw), "perturbing function");
  } else if (a.kind == "coppersmith") {
    check(ht_fn_make(nullptr, nullptr, json{{"kind", "coppersmith"}, {"k", a.k}}.dump().c_str(), &raw),
          "building function");
  } else {
    if (a.group.empty()) throw CliError{kExitUsage, "--group is required for kind '" + a.kind + "'"};
    Group g = resolve_group(a.group);
    const int t = a.t > 0 ? a.t : (a.kind == "hom" ? 0 : 1);
    json p = {{"kind", a.kind}, {"seed", gl.seed}, {"t", t}};
    Irreps s;
    if (a.kind == "hom" || a.kind == "clipped") {
      s = resolve_irreps(g.get(), a.cache, gl);
      p["irreps"] = a.irreps;
      p["irrep"] = a.irrep;
      p["i"] = a.i;
      p["j"] = a.j;
    } else if (a.kind == "constant") {
      if (a.value.empty()) {
        json eye = json::array();
        for (int r = 0; r < t; ++r) {
          json row = json::array();
          for (int c = 0; c < t; ++c) row.push_back(json::array({r == c ? 1.0 : 0.0, 0.0}));
          eye.push_back(row);
        }
        p["value"] = eye;
      } else {
        p["value"] = json::parse(a.value);
      }
    } else if (a.kind != "random" && a.kind != "random_matrix") {
      throw CliError{kExitUsage, "unknown --kind '" + a.kind + "'"};
    }
    check(ht_fn_make(g.get(), s.get(), p.dump().c_str(), &raw), "building function");
  }
  Fn f(raw);
  char* text = nullptr;
  check(ht_fn_to_json(f.get(), &text), "serializing function");
  json artifact = take_json(text);
  char* dg = nullptr;
  check(ht_fn_digest(f.get(), &dg), "digest");
  json report = {{"kind", a.kind},
                 {"group", artifact["group"]},
                 {"t", artifact["t"]},
                 {"unitary", artifact["unitary"]},
                 {"fn", take_string(dg)}};
  finish(report, artifact, gl);
  return kExitOk;
}

int cmd_blr(const std::string& fn, const std::string& setp, const std::string& group, double gamma,
            const std::string& mode, const Global& gl) {
  Group hint = group.empty() ? nullptr : resolve_group(group);
  Fn f = load_fn(fn, hint.get());
  Set set = load_set_file(setp, hint.get());
  char* rep = nullptr;
  check(ht_blr_run(f.get(), set.get(), gamma, mode.c_str(), gl.seed, gl.thread_count(), &rep), "running BLR test");
  json report = take_json(rep);
  finish(report, nullptr, gl);
  return kExitOk;
}

constexpr double kDefaultVerifyEps = 0.3;

int cmd_verify(const std::string& claim, const std::string& fn, const std::string& gfn, const std::string& setp,
               const std::string& group, const std::string& cache, double gamma, int D, const Global& gl) {
  Group hint = group.empty() ? nullptr : resolve_group(group);
  Fn f = load_fn(fn, hint.get());
  Fn g = gfn.empty() ? nullptr : load_fn(gfn, hint.get());
  Group grp = hint ? std::move(hint) : group_of_fn(f.get());
  Irreps s = resolve_irreps(grp.get(), cache, gl);
  Set set;
  if (setp.empty()) {
    // Without --set the set-based claims run on a freshly sampled, certified set.
    ht_set* raw = nullptr;
    int success = 0;
    check(ht_set_sample(s.get(), kDefaultVerifyEps, gl.seed, 5, 0.0, gl.thread_count(), &raw, &success),
          "sampling set");
    set = Set(raw);
  } else {
    set = load_set_file(setp, grp.get());
    check(ht_set_certify(set.get(), s.get(), gl.thread_count(), nullptr), "certifying set");
  }
  char* rep = nullptr;
  int code = 0;
  check(ht_verify(claim.c_str(), f.get(), g.get(), set.get(), s.get(), gamma, D, gl.tol, gl.thread_count(), &rep,
                  &code),
        "verifying");
  json report = take_json(rep);
  double eps = -1;
  ht_set_epsilon(set.get(), &eps);
  report["set"] = setp.empty() ? json{{"source", "sampled"}, {"target_eps", kDefaultVerifyEps}, {"eps", eps}}
                               : json{{"source", setp}, {"eps", eps}};
  finish(report, nullptr, gl);
  return code;
}

int cmd_spectrum(const std::string& fn, const std::string& group, const std::string& cache, const Global& gl) {
  Group hint = group.empty() ? nullptr : resolve_group(group);
  Fn f = load_fn(fn, hint.get());
  Group grp = hint ? std::move(hint) : group_of_fn(f.get());
  Irreps s = resolve_irreps(grp.get(), cache, gl);
  char* rep = nullptr;
  check(ht_fn_spectrum(f.get(), s.get(), &rep), "computing spectrum");
  finish(take_json(rep), nullptr, gl);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derandomized homomorphism testing over finite groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Global gl;
  app.add_option("--seed", gl.seed, "Random seed (fixed default for reproducibility)");
  app.add_option("--tol", gl.tol, "Relative tolerance for checks and certification");
  app.add_option("--threads", gl.threads, "Worker threads: a positive integer or 'auto'");
  app.add_option("--out", gl.out, "Write the artifact (or report) JSON to this file");
  app.add_option("--format", gl.format, "Report format on stdout")->check(CLI::IsMember({"json", "csv", "table"}));

  std::string group, spec, verify_mode, method = "auto", cache, set_path, fn_path, g_path, claim = "all",
                                        mode = "exact";
  bool blob = false;
  double eps = 0.3, c = 8.0, gamma = 0.0;
  int improve = 0, retries = 5, D = 0;
  FnMakeArgs fa;

  auto* grp = app.add_subcommand("group", "Finite groups");
  grp->require_subcommand(1);
  auto* gb = grp->add_subcommand("build", "Build a catalog group and emit its table");
  gb->add_option("--spec", spec, "Group expression, e.g. direct_product(cyclic(2),symmetric(3))")->required();
  gb->add_option("--verify", verify_mode, "exhaustive | sampled[:trials]");

  auto* irr = app.add_subcommand("irreps", "Irreducible representations");
  irr->require_subcommand(1);
  auto* ic = irr->add_subcommand("compute", "Compute and certify a complete irrep set");
  ic->add_option("--group", group, "Group file or expression")->required();
  ic->add_option("--method", method, "auto | closed | numeric");
  ic->add_option("--cache", cache, "Write the irreps to this cache file");
  ic->add_flag("--blob", blob, "Store matrices in a binary side file");

  auto* bias = app.add_subcommand("bias", "Small-bias sets");
  bias->require_subcommand(1);
  auto* bf = bias->add_subcommand("find", "Sample and certify an eps-biased multiset");
  bf->add_option("--group", group, "Group file or expression")->required();
  bf->add_option("--eps", eps, "Target bias")->required();
  bf->add_option("--improve", improve, "Greedy improvement budget (certifications)");
  bf->add_option("--C", c, "Sampling constant: size = ceil(C ln n / eps^2)");
  bf->add_option("--retries", retries, "Sampling attempts");
  bf->add_option("--irreps", cache, "Irrep cache file");
  auto* bc = bias->add_subcommand("certify", "Certify the bias of a stored set");
  bc->add_option("--set", set_path, "Set file")->required();
  bc->add_option("--group", group, "Group file or expression (default: from the set file)");
  bc->add_option("--irreps", cache, "Irrep cache file");

  auto* fn = app.add_subcommand("fn", "Matrix-valued test functions");
  fn->require_subcommand(1);
  auto* fm = fn->add_subcommand("make", "Construct a function");
  fm->add_option("--kind", fa.kind, "hom | random | random_matrix | perturbed | clipped | coppersmith | constant")
      ->required();
  fm->add_option("--group", fa.group, "Group file or expression");
  fm->add_option("--t", fa.t, "Output dimension (hom default: sum of irrep dims; otherwise 1)");
  fm->add_option("--irrep-list", fa.irreps, "hom: irrep indices for the direct sum")->delimiter(',');
  fm->add_option("--theta", fa.theta, "perturbed: maximal rotation angle");
  fm->add_option("--base", fa.base, "perturbed: base function file");
  fm->add_option("--irrep", fa.irrep, "clipped: irrep index");
  fm->add_option("--i", fa.i, "clipped: row (0-based)");
  fm->add_option("--j", fa.j, "clipped: column (0-based)");
  fm->add_option("--k", fa.k, "coppersmith: group is cyclic(3^k)");
  fm->add_option("--value", fa.value, "constant: JSON matrix of [re, im] entries (default identity)");
  fm->add_option("--irreps", fa.cache, "Irrep cache file");

  auto* blr = app.add_subcommand("blr", "BLR test");
  blr->require_subcommand(1);
  auto* br = blr->add_subcommand("run", "Pass probability of the BLR_gamma test");
  br->add_option("--fn", fn_path, "Function file")->required();
  br->add_option("--set", set_path, "Set file")->required();
  br->add_option("--gamma", gamma, "Threshold gamma");
  br->add_option("--mode", mode, "exact | sampled:<trials>");
  br->add_option("--group", group, "Group file or expression (default: from the function file)");

  auto* ver = app.add_subcommand("verify", "Check inequalities on concrete inputs");
  ver->add_option("--claim", claim, "Claim id or 'all'");
  ver->add_option("--fn", fn_path, "Function file")->required();
  ver->add_option("--g", g_path, "Second function file");
  ver->add_option("--set", set_path, "Set file");
  ver->add_option("--gamma", gamma, "Threshold gamma");
  ver->add_option("--D", D, "Dimension threshold D");
  ver->add_option("--group", group, "Group file or expression (default: from the function file)");
  ver->add_option("--irreps", cache, "Irrep cache file");

  auto* spc = app.add_subcommand("spectrum", "Per-irrep Fourier mass of a function");
  spc->add_option("--fn", fn_path, "Function file")->required();
  spc->add_option("--group", group, "Group file or expression (default: from the function file)");
  spc->add_option("--irreps", cache, "Irrep cache file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  gl.config_digest = config_digest(argc, argv);
  try {
    gl.thread_count();
    if (*gb) return cmd_group_build(spec, verify_mode, gl);
    if (*ic) return cmd_irreps(group, method, cache, blob, gl);
    if (*bf) return cmd_bias_find(group, eps, improve, c, retries, cache, gl);
    if (*bc) return cmd_bias_certify(set_path, group, cache, gl);
    if (*fm) return cmd_fn_make(fa, gl);
    if (*br) return cmd_blr(fn_path, set_path, group, gamma, mode, gl);
    if (*ver) return cmd_verify(claim, fn_path, g_path, set_path, group, cache, gamma, D, gl);
    if (*spc) return cmd_spectrum(fn_path, group, cache, gl);
  } catch (const CliError& e) {
    std::cerr << "homtest: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "homtest: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
