#include "homtest/algebra_norm.hpp"

#include "homtest/error.hpp"

namespace homtest {

namespace {

void require_scalar(const MatFn& f) {
  if (f.t != 1) throw Error(Errc::invalid_argument, "operation is defined for scalar functions only");
}

}  // namespace

Mat conv_operator(const MatFn& f) {
  require_scalar(f);
  const GroupTable& g = *f.group;
  const double inv_n = 1.0 / g.n;
  Mat t(g.n, g.n);
  for (int x = 0; x < g.n; ++x)
    for (int y = 0; y < g.n; ++y) t(x, y) = f(g(g.inv[x], y))(0, 0) * inv_n;
  return t;
}

double algebra_norm(const MatFn& f) { return trace_norm(conv_operator(f)); }

MinEig min_eig(const MatFn& f) {
  const Mat t = conv_operator(f);
  MinEig out;
  out.hermitian_drift = 0.5 * (t - t.adjoint()).norm();
  const HermitianEig e = eig_hermitian(0.5 * (t + t.adjoint()));
  out.value = e.values.size() ? e.values(0) : 0.0;
  return out;
}

MatFn psi(const MatFn& h, const MatFn& f, int threads) {
  const MatFn c = convolve(h, f, threads);
  std::vector<Mat> values(c.n());
  for (int y = 0; y < c.n(); ++y) values[y] = Mat::Constant(1, 1, hs_norm2(c(y)));
  return make_function(c.group, 1, std::move(values));
}

double fooling_gap(const MatFn& f, const BiasedSet& set) {
  require_scalar(f);
  if (!set.certified_epsilon) throw Error(Errc::invalid_argument, "fooling gap needs a certified set");
  return std::abs(set_average(set, f)(0, 0) - mean(f)(0, 0));
}

}  // namespace homtest
