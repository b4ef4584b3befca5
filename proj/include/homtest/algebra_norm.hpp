#pragma once

#include "homtest/bias.hpp"
#include "homtest/matfun.hpp"

namespace homtest {

/// T_f(x, y) = f(x^-1 y) / n for scalar f. Satisfies T_f g = f * g.
Mat conv_operator(const MatFn& f);

/// Trace norm of T_f.
double algebra_norm(const MatFn& f);

struct MinEig {
  double value = 0;            // smallest eigenvalue of (T + T*)/2
  double hermitian_drift = 0;  // ||T - T*||_HS / 2, pure rounding for real PD inputs
};
MinEig min_eig(const MatFn& f);

/// psi(y) = ||(h*f)(y)||_HS^2, a scalar function.
MatFn psi(const MatFn& h, const MatFn& f, int threads = 1);

/// |E_S f - E_G f| for scalar f.
double fooling_gap(const MatFn& f, const BiasedSet& set);

}  // namespace homtest
