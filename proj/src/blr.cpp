#include "homtest/blr.hpp"

#include <vector>

#include "homtest/error.hpp"
#include "homtest/parallel.hpp"
#include "homtest/random.hpp"

namespace homtest {

std::string BLRMode::to_string() const { return exact ? "exact" : "sampled:" + std::to_string(trials); }

BLRMode BLRMode::parse(const std::string& text, std::uint64_t seed) {
  if (text == "exact") return exact_mode();
  const std::string prefix = "sampled:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const auto trials = std::stoull(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size() && trials > 0) return sampled(trials, seed);
    } catch (const std::exception&) {
    }
  }
  throw Error(Errc::invalid_argument, "mode must be 'exact' or 'sampled:<trials>', got '" + text + "'");
}

json BLRReport::to_json() const {
  json j = {{"gamma", gamma}, {"mode", mode.to_string()}, {"delta", delta},
            {"count", count}, {"total", total},             {"fn", fn_digest},
            {"set", set_digest}, {"t", t},                  {"unitary", unitary_certified}};
  j["seed"] = mode.exact ? json(nullptr) : json(mode.seed);
  return j;
}

double blr_defect(const MatFn& f, int x, int y) {
  return hs_norm2(f(f.group->operator()(x, y)) - f(x) * f(y));
}

std::string function_digest(const MatFn& f) { return digest(function_to_json(f)); }

std::string set_digest(const BiasedSet& set) {
  return digest(json{{"group", set.group->name}, {"elements", set.elements}});
}

BLRReport blr_pass_probability(const MatFn& f, const BiasedSet& set, double gamma, const BLRMode& mode, int threads) {
  if (set.elements.empty()) throw Error(Errc::invalid_argument, "BLR test needs a nonempty set");
  if (set.group != f.group && set.group->mul != f.group->mul)
    throw Error(Errc::mismatch, "function and set belong to different groups");
  if (!(gamma >= 0)) throw Error(Errc::invalid_argument, "gamma must be nonnegative");

  const double threshold = gamma * f.t + 1e-9 * f.t;
  const int n = f.n();
  BLRReport r;
  r.gamma = gamma;
  r.mode = mode;
  r.t = f.t;
  r.unitary_certified = f.unitary_certified;
  r.fn_digest = function_digest(f);
  r.set_digest = set_digest(set);

  if (mode.exact) {
    std::vector<std::uint64_t> counts(n, 0);
    parallel_for(n, threads, [&](std::size_t xi) {
      const int x = static_cast<int>(xi);
      std::uint64_t c = 0;
      for (int s : set.elements) c += blr_defect(f, x, s) <= threshold;
      counts[x] = c;
    });
    for (auto c : counts) r.count += c;
    r.total = static_cast<std::uint64_t>(n) * set.size();
  } else {
    if (mode.trials == 0) throw Error(Errc::invalid_argument, "sampled mode needs at least one trial");
    const std::uint64_t chunks = (mode.trials + kBlrChunk - 1) / kBlrChunk;
    std::vector<std::uint64_t> counts(chunks, 0);
    parallel_for(chunks, threads, [&](std::size_t ci) {
      Rng rng(derive_seed(mode.seed, ci));
      const std::uint64_t begin = ci * kBlrChunk;
      const std::uint64_t end = std::min(mode.trials, begin + kBlrChunk);
      std::uint64_t c = 0;
      for (std::uint64_t k = begin; k < end; ++k) {
        const int x = static_cast<int>(rng.index(n));
        const int s = set.elements[rng.index(set.size())];
        c += blr_defect(f, x, s) <= threshold;
      }
      counts[ci] = c;
    });
    for (auto c : counts) r.count += c;
    r.total = mode.trials;
  }
  r.delta = static_cast<double>(r.count) / static_cast<double>(r.total);
  return r;
}

}  // namespace homtest
