#include "homtest/homtest.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "homtest/bias.hpp"
#include "homtest/blr.hpp"
#include "homtest/error.hpp"
#include "homtest/group.hpp"
#include "homtest/matfun.hpp"
#include "homtest/rep_theory.hpp"
#include "homtest/verify.hpp"

using namespace homtest;

struct ht_group {
  GroupPtr g;
};
struct ht_irreps {
  IrrepSet s;
};
struct ht_fn {
  MatFn f;
};
struct ht_set {
  BiasedSet set;
};

namespace {

thread_local std::string last_error;

ht_status to_status(Errc c) {
  switch (c) {
    case Errc::invalid_argument: return HT_ERR_INVALID_ARGUMENT;
    case Errc::io: return HT_ERR_IO;
    case Errc::parse: return HT_ERR_PARSE;
    case Errc::limit: return HT_ERR_LIMIT;
    case Errc::numeric: return HT_ERR_NUMERIC;
    case Errc::mismatch: return HT_ERR_MISMATCH;
  }
  return HT_ERR_INTERNAL;
}

template <class F>
ht_status guard(F&& body) {
  try {
    body();
    return HT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const json::exception& e) {
    last_error = e.what();
    return HT_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return HT_ERR_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return HT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return HT_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* what) {
  if (!p) throw Error(Errc::invalid_argument, std::string("null argument: ") + what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) {
  if (out) *out = dup_string(j.dump());
}

GroupPtr group_of(const ht_group* g, const ht_irreps* s) {
  if (g) return g->g;
  if (s) return s->s.group;
  throw Error(Errc::invalid_argument, "function kind needs a group or an irrep set");
}

const IrrepSet& irreps_of(const ht_irreps* s, const std::string& kind) {
  if (!s) throw Error(Errc::invalid_argument, "function kind '" + kind + "' needs an irrep set");
  return s->s;
}

MatFn make_from_params(const ht_group* g, const ht_irreps* s, const json& p) {
  const std::string kind = p.at("kind").get<std::string>();
  const std::uint64_t seed = p.value("seed", std::uint64_t{1});
  if (kind == "hom" || kind == "homomorphism")
    return homomorphism_fn(irreps_of(s, kind), p.at("irreps").get<std::vector<int>>(), p.value("t", 0));
  if (kind == "random" || kind == "random_unitary") return random_unitary_fn(group_of(g, s), p.at("t").get<int>(), seed);
  if (kind == "random_matrix") return random_matrix_fn(group_of(g, s), p.at("t").get<int>(), seed);
  if (kind == "perturbed")
    return perturbed_fn(make_from_params(g, s, p.at("base")), p.at("theta").get<double>(), seed);
  if (kind == "clipped" || kind == "clipped_entry")
    return clipped_entry_fn(irreps_of(s, kind), p.at("irrep").get<int>(), p.value("i", 0), p.value("j", 0));
  if (kind == "coppersmith") return coppersmith_fn(p.at("k").get<int>());
  if (kind == "constant") return constant_fn(group_of(g, s), matrix_from_json(p.at("value")));
  throw Error(Errc::invalid_argument, "unknown function kind '" + kind + "'");
}

std::vector<ClaimId> parse_claims(const std::string& text) {
  if (text == "all") return all_claims();
  std::vector<ClaimId> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto id = parse_claim(item);
    if (!id) throw Error(Errc::invalid_argument, "unknown claim '" + item + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw Error(Errc::invalid_argument, "no claims selected");
  return ids;
}

}  // namespace

extern "C" {

const char* ht_version(void) { return "0.1.0"; }
const char* ht_last_error(void) { return last_error.c_str(); }
void ht_string_free(char* s) { std::free(s); }

ht_status ht_digest_json(const char* text, char** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = dup_string(digest(json::parse(text)));
  });
}

// ---------------------------------------------------------------- groups

ht_status ht_group_build(const char* spec, int order_cap, ht_group** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new ht_group{build_group(GroupSpec::parse(spec), order_cap > 0 ? order_cap : kDefaultOrderCap)};
  });
}

ht_status ht_group_load(const char* path, ht_group** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new ht_group{load_group(path)};
  });
}

ht_status ht_group_from_json(const char* text, ht_group** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ht_group{group_from_json(json::parse(text))};
  });
}

ht_status ht_group_order(const ht_group* g, int* n) {
  return guard([&] {
    need(g, "group");
    need(n, "n");
    *n = g->g->n;
  });
}

ht_status ht_group_to_json(const ht_group* g, char** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    emit(out, group_to_json(*g->g));
  });
}

ht_status ht_group_verify(const ht_group* g, int exhaustive, uint64_t trials, uint64_t seed, int* all_pass,
                          char** report) {
  return guard([&] {
    need(g, "group");
    const auto v = verify_group(*g->g, exhaustive ? VerifyMode::exhaustive_mode() : VerifyMode::sampled(trials, seed));
    if (all_pass) *all_pass = v.all_pass();
    emit(report, v.to_json());
  });
}

void ht_group_free(ht_group* g) { delete g; }

// ---------------------------------------------------------------- irreps

ht_status ht_irreps_compute(const ht_group* g, ht_irrep_method method, uint64_t seed, double tol, ht_irreps** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    DecomposeOptions o;
    o.seed = seed;
    if (tol > 0) o.tol = tol;
    IrrepMethod m = IrrepMethod::automatic;
    if (method == HT_IRREPS_CLOSED) m = IrrepMethod::closed;
    if (method == HT_IRREPS_NUMERIC) m = IrrepMethod::numeric;
    *out = new ht_irreps{compute_irreps(g->g, m, o)};
  });
}

ht_status ht_irreps_load(const ht_group* g, const char* path, ht_irreps** out) {
  return guard([&] {
    need(g, "group");
    need(path, "path");
    need(out, "out");
    *out = new ht_irreps{load_irreps(path, g->g)};
  });
}

ht_status ht_irreps_save(const ht_irreps* s, const char* path, int binary_blob) {
  return guard([&] {
    need(s, "irreps");
    need(path, "path");
    save_irreps(s->s, path, binary_blob != 0);
  });
}

ht_status ht_irreps_count(const ht_irreps* s, int* count) {
  return guard([&] {
    need(s, "irreps");
    need(count, "count");
    *count = static_cast<int>(s->s.size());
  });
}

ht_status ht_irreps_dims(const ht_irreps* s, int* dims, size_t capacity) {
  return guard([&] {
    need(s, "irreps");
    need(dims, "dims");
    const auto d = s->s.dims();
    for (std::size_t i = 0; i < d.size() && i < capacity; ++i) dims[i] = d[i];
  });
}

ht_status ht_irreps_quasirandomness(const ht_irreps* s, int* D) {
  return guard([&] {
    need(s, "irreps");
    need(D, "D");
    *D = quasirandomness(s->s);
  });
}

ht_status ht_irreps_verify(const ht_irreps* s, double tol, int* pass, char** report) {
  return guard([&] {
    need(s, "irreps");
    const auto v = verify_irrep_set(*s->s.group, s->s, tol > 0 ? tol : 1e-8);
    if (pass) *pass = v.pass;
    json j = v.to_json();
    j["dims"] = s->s.dims();
    j["method"] = s->s.method;
    emit(report, j);
  });
}

void ht_irreps_free(ht_irreps* s) { delete s; }

// ---------------------------------------------------------------- functions

ht_status ht_fn_make(const ht_group* g, const ht_irreps* s, const char* params, ht_fn** out) {
  return guard([&] {
    need(params, "params");
    need(out, "out");
    *out = new ht_fn{make_from_params(g, s, json::parse(params))};
  });
}

ht_status ht_fn_perturb(const ht_fn* base, double theta, uint64_t seed, ht_fn** out) {
  return guard([&] {
    need(base, "base");
    need(out, "out");
    *out = new ht_fn{perturbed_fn(base->f, theta, seed)};
  });
}

ht_status ht_fn_load(const char* path, const ht_group* g, ht_fn** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new ht_fn{load_function(path, g ? g->g : nullptr)};
  });
}

ht_status ht_fn_from_json(const char* text, const ht_group* g, ht_fn** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new ht_fn{function_from_json(json::parse(text), g ? g->g : nullptr)};
  });
}

ht_status ht_fn_to_json(const ht_fn* f, char** out) {
  return guard([&] {
    need(f, "fn");
    need(out, "out");
    emit(out, function_to_json(f->f));
  });
}

ht_status ht_fn_info(const ht_fn* f, int* n, int* t, int* unitary) {
  return guard([&] {
    need(f, "fn");
    if (n) *n = f->f.n();
    if (t) *t = f->f.t;
    if (unitary) *unitary = f->f.unitary_certified;
  });
}

ht_status ht_fn_digest(const ht_fn* f, char** out) {
  return guard([&] {
    need(f, "fn");
    need(out, "out");
    *out = dup_string(function_digest(f->f));
  });
}

ht_status ht_fn_group(const ht_fn* f, ht_group** out) {
  return guard([&] {
    need(f, "fn");
    need(out, "out");
    *out = new ht_group{f->f.group};
  });
}

ht_status ht_fn_spectrum(const ht_fn* f, const ht_irreps* s, char** out) {
  return guard([&] {
    need(f, "fn");
    need(s, "irreps");
    need(out, "out");
    const FourierCoeffs c = fourier(f->f, s->s);
    json rows = json::array();
    double total = 0;
    for (std::size_t k = 0; k < c.coeff.size(); ++k) {
      const double mass = hs_norm2(c.coeff[k]);
      total += c.dims[k] * mass;
      rows.push_back({{"irrep", k}, {"d", c.dims[k]}, {"mass", mass}, {"weighted", c.dims[k] * mass}});
    }
    emit(out, json{{"group", f->f.group->name},
                   {"t", f->f.t},
                   {"fn", function_digest(f->f)},
                   {"rows", std::move(rows)},
                   {"total", total},
                   {"norm2", norm2(f->f)}});
  });
}

void ht_fn_free(ht_fn* f) { delete f; }

// ---------------------------------------------------------------- sets

ht_status ht_set_from_elements(const ht_group* g, const int* elements, size_t count, ht_set** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    if (count && !elements) throw Error(Errc::invalid_argument, "null element array");
    *out = new ht_set{make_set(g->g, std::vector<int>(elements, elements + count))};
  });
}

ht_status ht_set_full(const ht_group* g, ht_set** out) {
  return guard([&] {
    need(g, "group");
    need(out, "out");
    *out = new ht_set{full_set(g->g)};
  });
}

ht_status ht_set_load(const char* path, const ht_group* g, ht_set** out) {
  return guard([&] {
    need(path, "path");
    need(out, "out");
    *out = new ht_set{load_set(path, g ? g->g : nullptr)};
  });
}

ht_status ht_set_certify(ht_set* set, const ht_irreps* s, int threads, double* eps) {
  return guard([&] {
    need(set, "set");
    need(s, "irreps");
    const double e = bias_of(set->set, s->s, threads);
    if (eps) *eps = e;
  });
}

ht_status ht_set_sample(const ht_irreps* s, double eps_target, uint64_t seed, int max_retries, double c, int threads,
                        ht_set** out, int* success) {
  return guard([&] {
    need(s, "irreps");
    need(out, "out");
    SampleResult r = alon_roichman_sample(s->s, eps_target, seed, max_retries > 0 ? max_retries : 5,
                                          c > 0 ? c : kDefaultSamplingConstant, threads);
    if (success) *success = r.success;
    *out = new ht_set{std::move(r.set)};
  });
}

ht_status ht_set_improve(ht_set* set, const ht_irreps* s, int budget, uint64_t seed, int threads, char** trace) {
  return guard([&] {
    need(set, "set");
    need(s, "irreps");
    ImproveResult r = greedy_improve(set->set, s->s, budget, seed, threads);
    set->set = std::move(r.set);
    emit(trace, json{{"trace", r.trace}, {"certifications", r.certifications}, {"accepted", r.accepted}});
  });
}

ht_status ht_set_size(const ht_set* set, size_t* size) {
  return guard([&] {
    need(set, "set");
    need(size, "size");
    *size = set->set.size();
  });
}

ht_status ht_set_epsilon(const ht_set* set, double* eps) {
  return guard([&] {
    need(set, "set");
    need(eps, "eps");
    *eps = set->set.certified_epsilon ? *set->set.certified_epsilon : -1.0;
  });
}

ht_status ht_set_to_json(const ht_set* set, char** out) {
  return guard([&] {
    need(set, "set");
    need(out, "out");
    emit(out, set_to_json(set->set));
  });
}

void ht_set_free(ht_set* set) { delete set; }

// ---------------------------------------------------------------- tests and checks

ht_status ht_blr_run(const ht_fn* f, const ht_set* set, double gamma, const char* mode, uint64_t seed, int threads,
                     char** report) {
  return guard([&] {
    need(f, "fn");
    need(set, "set");
    need(report, "report");
    const BLRMode m = BLRMode::parse(mode ? mode : "exact", seed);
    emit(report, blr_pass_probability(f->f, set->set, gamma, m, threads).to_json());
  });
}

ht_status ht_verify(const char* claims, const ht_fn* f, const ht_fn* g, const ht_set* set, const ht_irreps* s,
                    double gamma, int D, double tol, int threads, char** report, int* exit_code) {
  return guard([&] {
    need(f, "fn");
    need(report, "report");
    ClaimInputs in;
    in.f = &f->f;
    in.g = g ? &g->f : nullptr;
    in.set = set ? &set->set : nullptr;
    in.irreps = s ? &s->s : nullptr;
    in.gamma = gamma;
    if (D > 0) in.D = D;
    VerifyOptions o;
    if (tol > 0) o.tol = tol;
    o.threads = threads;
    const auto reports = run_claims(parse_claims(claims ? claims : "all"), in, o);
    if (exit_code) *exit_code = exit_code_for(summarize(reports));
    emit(report, batch_to_json(reports));
  });
}

ht_status ht_gh_search(const ht_fn* f, const ht_irreps* s, double eta, char** report) {
  return guard([&] {
    need(f, "fn");
    need(s, "irreps");
    need(report, "report");
    emit(report, gh_search(f->f, eta, s->s).to_json());
  });
}

}  // extern "C"
