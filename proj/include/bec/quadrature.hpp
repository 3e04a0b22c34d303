#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace bec::quad {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  long evals = 0;
  bool converged = false;
};

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b]. Stops when the summed
/// error estimate drops under max(abs_tol, rel_tol * |value|).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-10, double rel_tol = 1e-10,
                     int max_intervals = 4000);

/// Same, but throws QuadratureError instead of returning converged = false.
double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10, double rel_tol = 1e-10,
                          int max_intervals = 4000);

/// Nested adaptive 2D integral over [ax,bx] x [ay,by]; the inner (x) pass runs
/// at a tighter tolerance than the outer.
QuadResult integrate2d(const std::function<double(double, double)>& f, double ax,
                       double bx, double ay, double by, double abs_tol = 1e-9,
                       double rel_tol = 1e-9, int max_intervals = 4000);

/// Natural cubic spline through (x, y); x strictly increasing.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double xq) const;
  double derivative(double xq) const;
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::vector<double> x_, y_, m_;  // m_: second derivatives at the knots
};

}  // namespace bec::quad
