#pragma once

#include <functional>
#include <span>

#include "quench/types.hpp"

namespace quench {

// Adaptive Simpson on [a, b] to absolute tolerance. Throws QuadratureError
// (carrying the achieved error estimate) if the recursion depth is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 48);

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by Newton
// iteration on the Legendre recurrence and cached.
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};
const GaussRule& gauss_legendre(int n);

// Fixed-rule integral of f over [a, b] with an n-point Gauss rule.
double integrate_gauss(const std::function<double(double)>& f, double a,
                       double b, int n);

}  // namespace quench
