#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the code under test except for plain data access
// (group tables, function values).

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "homtest/group.hpp"
#include "homtest/matfun.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

/// Number of conjugacy classes, i.e. the number of irreducible characters.
inline int conjugacy_class_count(const homtest::GroupTable& g) {
  std::vector<int> cls(g.n, -1);
  int count = 0;
  for (int x = 0; x < g.n; ++x) {
    if (cls[x] >= 0) continue;
    for (int h = 0; h < g.n; ++h) cls[g(g(h, x), g.inv[h])] = count;
    ++count;
  }
  return count;
}

/// Scalar DFT on Z_n: fhat(j) = (1/n) sum_k f(k) exp(2 pi i jk / n).
inline std::vector<cplx> dft(const std::vector<cplx>& f) {
  const int n = static_cast<int>(f.size());
  std::vector<cplx> out(n);
  for (int j = 0; j < n; ++j) {
    cplx s = 0;
    for (int k = 0; k < n; ++k) s += f[k] * std::polar(1.0, 2 * std::numbers::pi * j * k / n);
    out[j] = s / static_cast<double>(n);
  }
  return out;
}

/// (f*g)(x) via the second form E_y f~(y)* g(yx).
inline std::vector<Mat> convolution_alt(const homtest::MatFn& f, const homtest::MatFn& g) {
  const auto& G = *f.group;
  std::vector<Mat> out(G.n, Mat::Zero(f.t, f.t));
  for (int x = 0; x < G.n; ++x) {
    for (int y = 0; y < G.n; ++y) {
      const Mat ftilde_y = f(G.inv[y]).adjoint();
      out[x] += ftilde_y.adjoint() * g(G(y, x));
    }
    out[x] /= static_cast<double>(G.n);
  }
  return out;
}

/// Operator norm by a Jacobi SVD (a different algorithm from the library's).
inline double jacobi_op_norm(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

inline double jacobi_trace_norm(const Mat& a) {
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues().sum();
}

/// Integer form of the folklore map Z_{3^k} -> Z_{3^(k-1)}: x = 3m + r with
/// r in {-1, 0, 1} maps to m. Returns the number of pairs (x, y) with
/// F(x + y) = F(x) + F(y), counted with exact integer arithmetic.
inline long coppersmith_pass_count(int k) {
  long n = 1;
  for (int i = 0; i < k; ++i) n *= 3;
  const long mod = n / 3;
  auto F = [&](long x) { return ((x + 1) / 3) % mod; };
  long pass = 0;
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y) pass += F((x + y) % n) == (F(x) + F(y)) % mod;
  return pass;
}

/// Seeded generator of complex Gaussian matrices, independent of homtest::Rng.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  double real() { return nd_(eng_); }
  cplx complex() { return {nd_(eng_), nd_(eng_)}; }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(eng_); }
  Mat matrix(int r, int c) {
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = complex();
    return m;
  }
  Mat unitary(int d) {
    Eigen::HouseholderQR<Mat> qr(matrix(d, d));
    return qr.householderQ();
  }

 private:
  std::mt19937_64 eng_;
  std::normal_distribution<double> nd_{0.0, 1.0};
};

inline homtest::MatFn random_fn(homtest::GroupPtr g, int t, std::uint64_t seed) {
  Gen gen(seed);
  std::vector<Mat> v(g->n);
  for (auto& m : v) m = gen.matrix(t, t);
  return homtest::make_function(std::move(g), t, std::move(v));
}

inline homtest::MatFn random_unitary_fn(homtest::GroupPtr g, int t, std::uint64_t seed) {
  Gen gen(seed);
  std::vector<Mat> v(g->n);
  for (auto& m : v) m = gen.unitary(t);
  homtest::MatFn f = homtest::make_function(std::move(g), t, std::move(v));
  homtest::certify_unitary(f);
  return f;
}

/// E_x f(x) by a plain loop.
inline Mat average(const homtest::MatFn& f) {
  Mat s = Mat::Zero(f.t, f.t);
  for (int x = 0; x < f.n(); ++x) s += f(x);
  return s / static_cast<double>(f.n());
}

/// Fourier coefficient E_x f(x) (x) rho(x) using Eigen's Kronecker-free
/// index formula, for one irrep given by its matrices.
inline Mat fourier_coefficient(const homtest::MatFn& f, const std::vector<Mat>& rho) {
  const int d = static_cast<int>(rho[0].rows());
  Mat out = Mat::Zero(f.t * d, f.t * d);
  for (int x = 0; x < f.n(); ++x)
    for (int i = 0; i < f.t; ++i)
      for (int a = 0; a < d; ++a)
        for (int j = 0; j < f.t; ++j)
          for (int b = 0; b < d; ++b) out(i * d + a, j * d + b) += f(x)(i, j) * rho[x](a, b);
  return out / static_cast<double>(f.n());
}

}  // namespace oracle
