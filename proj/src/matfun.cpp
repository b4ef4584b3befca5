#include "homtest/matfun.hpp"

#include <cmath>
#include <numbers>

#include "homtest/error.hpp"
#include "homtest/parallel.hpp"
#include "homtest/random.hpp"

namespace homtest {

namespace {

void require_same(const MatFn& f, const MatFn& g) {
  if (f.group != g.group && f.group->mul != g.group->mul) throw Error(Errc::mismatch, "functions live on different groups");
  if (f.t != g.t) throw Error(Errc::mismatch, "functions have different output dimensions");
}

MatFn like(const MatFn& f) {
  MatFn out;
  out.group = f.group;
  out.t = f.t;
  out.values.resize(f.values.size());
  return out;
}

}  // namespace

MatFn make_function(GroupPtr g, int t, std::vector<Mat> values) {
  if (!g) throw Error(Errc::invalid_argument, "function needs a group");
  if (t <= 0) throw Error(Errc::invalid_argument, "output dimension must be positive");
  if (static_cast<int>(values.size()) != g->n)
    throw Error(Errc::mismatch, "function must have one value per group element");
  for (const auto& v : values)
    if (v.rows() != t || v.cols() != t) throw Error(Errc::mismatch, "function value has wrong shape");
  MatFn f;
  f.group = std::move(g);
  f.t = t;
  f.values = std::move(values);
  return f;
}

double unitarity_defect(const MatFn& f) {
  const Mat eye = Mat::Identity(f.t, f.t);
  double worst = 0;
  for (const auto& v : f.values) worst = std::max(worst, (v * v.adjoint() - eye).norm());
  return worst;
}

bool certify_unitary(MatFn& f, double tol) {
  f.unitary_certified = unitarity_defect(f) <= tol;
  return f.unitary_certified;
}

FourierCoeffs fourier(const MatFn& f, const IrrepSet& s, int threads) {
  if (!s.group || s.group->n != f.n() || s.group->mul != f.group->mul)
    throw Error(Errc::mismatch, "irrep set belongs to a different group");
  if (!s.complete) throw Error(Errc::invalid_argument, "fourier needs a complete irrep set");
  FourierCoeffs c;
  c.t = f.t;
  c.dims = s.dims();
  c.coeff.resize(s.size());
  const double inv_n = 1.0 / f.n();
  parallel_for(s.size(), threads, [&](std::size_t r) {
    const Irrep& rho = s[r];
    const int d = rho.d;
    Mat acc = Mat::Zero(f.t * d, f.t * d);
    for (int x = 0; x < f.n(); ++x) {
      const Mat& fx = f(x);
      const Mat& rx = rho.mats[x];
      for (int i = 0; i < f.t; ++i)
        for (int j = 0; j < f.t; ++j)
          if (fx(i, j) != cplx(0)) acc.block(i * d, j * d, d, d) += fx(i, j) * rx;
    }
    c.coeff[r] = acc * inv_n;
  });
  return c;
}

double fourier_mass(const FourierCoeffs& c) {
  double s = 0;
  for (std::size_t r = 0; r < c.coeff.size(); ++r) s += c.dims[r] * hs_norm2(c.coeff[r]);
  return s;
}

Mat mean(const MatFn& f) {
  Mat acc = Mat::Zero(f.t, f.t);
  for (const auto& v : f.values) acc += v;
  return acc / static_cast<double>(f.n());
}

MatFn convolve(const MatFn& f, const MatFn& g, int threads) {
  require_same(f, g);
  MatFn out = like(f);
  const GroupTable& G = *f.group;
  const double inv_n = 1.0 / G.n;
  parallel_for(G.n, threads, [&](std::size_t xi) {
    const int x = static_cast<int>(xi);
    Mat acc = Mat::Zero(f.t, f.t);
    for (int y = 0; y < G.n; ++y) acc.noalias() += f(G(x, G.inv[y])) * g(y);
    out.values[x] = acc * inv_n;
  });
  return out;
}

MatFn adjoint(const MatFn& f) {
  MatFn out = like(f);
  for (int x = 0; x < f.n(); ++x) out.values[x] = f(f.group->inv[x]).adjoint();
  out.unitary_certified = f.unitary_certified;
  return out;
}

MatFn subtract_mean(const MatFn& f) {
  const Mat mu = mean(f);
  MatFn out = like(f);
  for (int x = 0; x < f.n(); ++x) out.values[x] = f(x) - mu;
  return out;
}

double norm2(const MatFn& f) {
  double s = 0;
  for (const auto& v : f.values) s += hs_norm2(v);
  return s / f.n();
}

cplx inner(const MatFn& f, const MatFn& g) {
  require_same(f, g);
  cplx s = 0;
  for (int x = 0; x < f.n(); ++x) s += (g(x).adjoint() * f(x)).trace();
  return s / static_cast<double>(f.n());
}

MatFn scaled(const MatFn& f, cplx a) {
  MatFn out = like(f);
  for (int x = 0; x < f.n(); ++x) out.values[x] = a * f(x);
  return out;
}

double u2_norm4_time(const MatFn& f, int threads) { return norm2(convolve(adjoint(f), f, threads)); }

double u2_norm4_fourier(const FourierCoeffs& c) {
  double s = 0;
  for (std::size_t r = 0; r < c.coeff.size(); ++r) s += c.dims[r] * hs_norm2(c.coeff[r] * c.coeff[r].adjoint());
  return s;
}

// ---------------------------------------------------------------- constructors

MatFn homomorphism_fn(const IrrepSet& s, const std::vector<int>& irreps, int t) {
  int used = 0;
  for (int r : irreps) {
    if (r < 0 || r >= static_cast<int>(s.size())) throw Error(Errc::invalid_argument, "irrep index out of range");
    used += s[r].d;
  }
  if (t <= 0) t = used;
  if (used > t || t == 0) throw Error(Errc::invalid_argument, "irreps do not fit into dimension t");
  std::vector<Mat> values(s.group->n);
  for (int x = 0; x < s.group->n; ++x) {
    Mat m = Mat::Identity(t, t);
    int off = 0;
    for (int r : irreps) {
      m.block(off, off, s[r].d, s[r].d) = s[r].mats[x];
      off += s[r].d;
    }
    values[x] = std::move(m);
  }
  MatFn f = make_function(s.group, t, std::move(values));
  certify_unitary(f);
  return f;
}

MatFn perturbed_fn(const MatFn& base, double theta, std::uint64_t seed) {
  if (theta < 0) throw Error(Errc::invalid_argument, "perturbation angle must be nonnegative");
  MatFn out = base;
  if (theta == 0) return out;
  for (int x = 0; x < base.n(); ++x) {
    Rng rng(derive_seed(seed, x));
    Mat h = random_hermitian(rng, base.t);
    const double norm = op_norm(h);
    const double radius = theta * rng.uniform();
    if (norm > 0) h *= radius / norm;
    out.values[x] = expi_hermitian(h) * base(x);
  }
  if (base.unitary_certified) certify_unitary(out);
  return out;
}

MatFn random_unitary_fn(GroupPtr g, int t, std::uint64_t seed) {
  std::vector<Mat> values(g->n);
  for (int x = 0; x < g->n; ++x) {
    Rng rng(derive_seed(seed, x));
    values[x] = random_unitary(rng, t);
  }
  MatFn f = make_function(std::move(g), t, std::move(values));
  certify_unitary(f);
  return f;
}

MatFn random_matrix_fn(GroupPtr g, int t, std::uint64_t seed) {
  std::vector<Mat> values(g->n);
  for (int x = 0; x < g->n; ++x) {
    Rng rng(derive_seed(seed, x));
    values[x] = random_gaussian(rng, t, t);
  }
  return make_function(std::move(g), t, std::move(values));
}

MatFn clipped_entry_fn(const IrrepSet& s, int irrep, int i, int j) {
  if (irrep < 0 || irrep >= static_cast<int>(s.size())) throw Error(Errc::invalid_argument, "irrep index out of range");
  const Irrep& rho = s[irrep];
  if (i < 0 || j < 0 || i >= rho.d || j >= rho.d) throw Error(Errc::invalid_argument, "matrix entry out of range");
  std::vector<Mat> values(s.group->n);
  for (int x = 0; x < s.group->n; ++x) values[x] = Mat::Constant(1, 1, rho.mats[x](i, j));
  MatFn f = make_function(s.group, 1, std::move(values));
  certify_unitary(f);
  return f;
}

MatFn coppersmith_fn(int k) {
  if (k < 1 || k > 7) throw Error(Errc::invalid_argument, "coppersmith needs 1 <= k <= 7");
  GroupPtr g = build_group(GroupSpec::cyclic(static_cast<int>(std::lround(std::pow(3.0, k)))));
  const long modulus = std::lround(std::pow(3.0, k - 1));
  std::vector<Mat> values(g->n);
  for (int x = 0; x < g->n; ++x) {
    const long m = ((x + 1) / 3) % modulus;  // x = 3m + r, r in {-1, 0, 1}
    cplx v;
    if (m == 0) {
      v = 1.0;
    } else {
      v = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(modulus));
    }
    values[x] = Mat::Constant(1, 1, v);
  }
  MatFn f = make_function(std::move(g), 1, std::move(values));
  certify_unitary(f);
  return f;
}

MatFn constant_fn(GroupPtr g, const Mat& m) {
  if (m.rows() != m.cols()) throw Error(Errc::invalid_argument, "constant value must be square");
  const int t = static_cast<int>(m.rows());
  std::vector<Mat> values(g->n, m);
  MatFn f = make_function(std::move(g), t, std::move(values));
  certify_unitary(f);
  return f;
}

// ---------------------------------------------------------------- files

json function_to_json(const MatFn& f) {
  json values = json::array();
  for (const auto& v : f.values) values.push_back(matrix_to_json(v));
  return {{"group", f.group->name}, {"t", f.t}, {"unitary", f.unitary_certified}, {"values", std::move(values)}};
}

MatFn function_from_json(const json& j, GroupPtr group) {
  try {
    const std::string name = j.at("group").get<std::string>();
    if (group) {
      if (group->name != name) throw Error(Errc::mismatch, "function is defined on '" + name + "', not '" + group->name + "'");
    } else {
      group = group_from_name(name);
    }
    const int t = j.at("t").get<int>();
    std::vector<Mat> values;
    for (const auto& v : j.at("values")) values.push_back(matrix_from_json(v));
    MatFn f = make_function(group, t, std::move(values));
    // The stored flag is a claim; it is re-established from the data.
    if (j.value("unitary", false)) certify_unitary(f);
    return f;
  } catch (const json::exception& e) {
    throw Error(Errc::parse, std::string("function file: ") + e.what());
  }
}

MatFn load_function(const std::string& path, GroupPtr group) { return function_from_json(read_json_file(path), group); }

}  // namespace homtest
