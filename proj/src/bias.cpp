#include "homtest/bias.hpp"

#include <algorithm>
#include <cmath>

#include "homtest/error.hpp"
#include "homtest/parallel.hpp"
#include "homtest/random.hpp"

namespace homtest {

BiasedSet make_set(GroupPtr g, std::vector<int> elements) {
  if (!g) throw Error(Errc::invalid_argument, "set needs a group");
  if (elements.empty()) throw Error(Errc::invalid_argument, "set must be nonempty");
  for (int x : elements)
    if (x < 0 || x >= g->n) throw Error(Errc::invalid_argument, "set element out of range");
  std::sort(elements.begin(), elements.end());
  BiasedSet s;
  s.group = std::move(g);
  s.elements = std::move(elements);
  return s;
}

BiasedSet full_set(GroupPtr g) {
  std::vector<int> all(g->n);
  for (int x = 0; x < g->n; ++x) all[x] = x;
  return make_set(std::move(g), std::move(all));
}

double bias_of(BiasedSet& set, const IrrepSet& s, int threads) {
  if (set.elements.empty()) throw Error(Errc::invalid_argument, "bias of an empty set");
  if (!s.complete) throw Error(Errc::invalid_argument, "bias certification needs a complete irrep set");
  if (s.group->n != set.group->n || s.group->mul != set.group->mul)
    throw Error(Errc::mismatch, "set and irreps belong to different groups");
  std::vector<double> norms(s.size());
  const double inv_m = 1.0 / static_cast<double>(set.size());
  parallel_for(s.size(), threads, [&](std::size_t r) {
    if (s[r].is_trivial) {
      norms[r] = 1.0;
      return;
    }
    Mat acc = Mat::Zero(s[r].d, s[r].d);
    for (int x : set.elements) acc += s[r].mats[x];
    norms[r] = op_norm(acc * inv_m);
  });
  double eps = 0;
  for (std::size_t r = 0; r < s.size(); ++r)
    if (!s[r].is_trivial) eps = std::max(eps, norms[r]);
  set.per_irrep = std::move(norms);
  set.certified_epsilon = eps;
  return eps;
}

namespace {
constexpr double kMaxSampleSize = 1e8;
}  // namespace

std::size_t alon_roichman_size(int n, double eps, double c) {
  if (!(eps > 0 && eps <= 1)) throw Error(Errc::invalid_argument, "target epsilon must lie in (0, 1]");
  if (!(c > 0)) throw Error(Errc::invalid_argument, "sampling constant must be positive");
  const double m = std::ceil(c * std::log(static_cast<double>(n)) / (eps * eps));
  if (m > kMaxSampleSize) throw Error(Errc::limit, "requested set size exceeds the sampling limit");
  return std::max<std::size_t>(1, static_cast<std::size_t>(m));
}

SampleResult alon_roichman_sample(const IrrepSet& s, double eps_target, std::uint64_t seed, int max_retries, double c,
                                  int threads) {
  const GroupPtr g = s.group;
  const std::size_t m = alon_roichman_size(g->n, eps_target, c);
  SampleResult best;
  for (int attempt = 0; attempt < std::max(1, max_retries); ++attempt) {
    Rng rng(derive_seed(seed, attempt));
    std::vector<int> elems(m);
    for (auto& x : elems) x = static_cast<int>(rng.index(g->n));
    BiasedSet cand = make_set(g, std::move(elems));
    const double eps = bias_of(cand, s, threads);
    best.attempts = attempt + 1;
    if (!best.set.certified_epsilon || eps < *best.set.certified_epsilon) best.set = std::move(cand);
    if (eps <= eps_target) {
      best.success = true;
      break;
    }
  }
  return best;
}

ImproveResult greedy_improve(const BiasedSet& set, const IrrepSet& s, int budget, std::uint64_t seed, int threads) {
  ImproveResult out;
  out.set = set;
  if (budget <= 0) return out;
  if (!out.set.certified_epsilon) bias_of(out.set, s, threads);
  Rng rng(seed);
  for (int step = 0; step < budget; ++step) {
    BiasedSet cand = out.set;
    const std::size_t pos = rng.index(cand.size());
    cand.elements[pos] = static_cast<int>(rng.index(cand.group->n));
    std::sort(cand.elements.begin(), cand.elements.end());
    const double eps = bias_of(cand, s, threads);
    ++out.certifications;
    if (eps < *out.set.certified_epsilon) {
      out.set = std::move(cand);
      ++out.accepted;
    }
    out.trace.push_back(*out.set.certified_epsilon);
  }
  return out;
}

Mat set_average(const BiasedSet& set, const MatFn& h) {
  if (set.elements.empty()) throw Error(Errc::invalid_argument, "average over an empty set");
  Mat acc = Mat::Zero(h.t, h.t);
  for (int x : set.elements) acc += h(x);
  return acc / static_cast<double>(set.size());
}

EmlReport eml_gap(const BiasedSet& set, const MatFn& f, const MatFn& g, int threads) {
  if (!set.certified_epsilon) throw Error(Errc::invalid_argument, "mixing bound needs a certified set");
  const MatFn h = convolve(f, g, threads);
  EmlReport r;
  r.lhs = (set_average(set, h) - mean(h)).norm();
  r.bound = *set.certified_epsilon * std::sqrt(norm2(f) * norm2(g));
  r.tolerance = 1e-8 * std::max(1.0, r.bound);
  const double scale = std::max(1.0, std::sqrt(std::max(norm2(f), norm2(g))));
  r.mean_zero = mean(f).norm() <= 1e-10 * scale && mean(g).norm() <= 1e-10 * scale;
  r.pass = r.lhs <= r.bound + r.tolerance;
  return r;
}

json set_to_json(const BiasedSet& set) {
  json j = {{"group", set.group->name}, {"elements", set.elements}, {"per_irrep", set.per_irrep}};
  j["epsilon"] = set.certified_epsilon ? json(*set.certified_epsilon) : json(nullptr);
  return j;
}

BiasedSet set_from_json(const json& j, GroupPtr group) {
  try {
    const std::string name = j.at("group").get<std::string>();
    if (group) {
      if (group->name != name) throw Error(Errc::mismatch, "set is defined on '" + name + "', not '" + group->name + "'");
    } else {
      group = group_from_name(name);
    }
    BiasedSet s = make_set(group, j.at("elements").get<std::vector<int>>());
    // Stored certificates are not trusted; callers re-run bias_of.
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("set file: ") + e.what());
  }
}

BiasedSet load_set(const std::string& path, GroupPtr group) { return set_from_json(read_json_file(path), group); }

}  // namespace homtest
