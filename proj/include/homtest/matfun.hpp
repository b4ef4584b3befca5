#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homtest/group.hpp"
#include "homtest/linalg.hpp"
#include "homtest/rep_theory.hpp"

namespace homtest {

/// f : G -> M_t(C), one t x t matrix per group element.
struct MatFn {
  GroupPtr group;
  int t = 0;
  std::vector<Mat> values;
  bool unitary_certified = false;

  int n() const { return group->n; }
  const Mat& operator()(int x) const { return values[x]; }
};

/// Validates shapes; the unitary flag is left false (see certify_unitary).
MatFn make_function(GroupPtr g, int t, std::vector<Mat> values);

/// max_x ||f(x) f(x)* - I||_HS.
double unitarity_defect(const MatFn& f);
/// Sets unitary_certified iff the defect is within tol. Returns the flag.
bool certify_unitary(MatFn& f, double tol = 1e-8);

/// Per irrep rho (same order as the IrrepSet): E_x f(x) (x) rho(x), of size
/// t*d_rho. The row index is i*d + a for f-index i and rho-index a.
struct FourierCoeffs {
  int t = 0;
  std::vector<int> dims;
  std::vector<Mat> coeff;
};

FourierCoeffs fourier(const MatFn& f, const IrrepSet& s, int threads = 1);
/// Sum over irreps of d_rho ||f^(rho)||_HS^2; equals norm2(f) by Parseval.
double fourier_mass(const FourierCoeffs& c);

/// E_x f(x).
Mat mean(const MatFn& f);
/// (f*g)(x) = E_y f(x y^-1) g(y).
MatFn convolve(const MatFn& f, const MatFn& g, int threads = 1);
/// f~(x) = f(x^-1)*.
MatFn adjoint(const MatFn& f);
MatFn subtract_mean(const MatFn& f);
/// ||f||^2 = E_x ||f(x)||_HS^2.
double norm2(const MatFn& f);
/// <f, g> = E_x tr(g(x)* f(x)).
cplx inner(const MatFn& f, const MatFn& g);
/// Pointwise scalar multiple and difference, used by tests and reports.
MatFn scaled(const MatFn& f, cplx a);

enum class U2Method { time, fourier };
/// ||f||_U2^4 = ||f~ * f||^2.
double u2_norm4_time(const MatFn& f, int threads = 1);
/// Sum over irreps of d_rho ||f^(rho) f^(rho)*||_HS^2.
double u2_norm4_fourier(const FourierCoeffs& c);

// ---------------------------------------------------------------- constructors

/// Block-diagonal direct sum of the listed irreps, padded with trivial
/// (identity) blocks up to dimension t. A genuine representation.
MatFn homomorphism_fn(const IrrepSet& s, const std::vector<int>& irreps, int t);

/// x -> exp(i H_x) f(x), H_x Hermitian with ||H_x||_op = theta * r_x and r_x
/// uniform in [0, 1). theta = 0 returns an exact copy.
MatFn perturbed_fn(const MatFn& base, double theta, std::uint64_t seed);

/// Independent Haar unitaries per element.
MatFn random_unitary_fn(GroupPtr g, int t, std::uint64_t seed);
/// Independent complex Gaussian matrices per element (entries N(0,1/2)+iN(0,1/2)).
MatFn random_matrix_fn(GroupPtr g, int t, std::uint64_t seed);

/// Scalar x -> rho(x)_{ij} (0-based indices). Not unit-modulus in general.
MatFn clipped_entry_fn(const IrrepSet& s, int irrep, int i, int j);

/// Scalar function on cyclic(3^k): writing x = 3m + r with r in {-1, 0, 1},
/// f(x) = exp(2 pi i m / 3^(k-1)). Values lie in the 3^(k-1)-th roots of unity.
MatFn coppersmith_fn(int k);

MatFn constant_fn(GroupPtr g, const Mat& m);

// ---------------------------------------------------------------- files

json function_to_json(const MatFn& f);
/// The group is rebuilt from the stored name unless `group` is given, in
/// which case the names must agree.
MatFn function_from_json(const json& j, GroupPtr group = nullptr);
MatFn load_function(const std::string& path, GroupPtr group = nullptr);

}  // namespace homtest
