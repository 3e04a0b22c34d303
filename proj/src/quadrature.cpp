#include "bec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace bec::quad {

namespace {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1] (symmetric; positive half listed).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fpair[8];
  for (int j = 0; j < 7; ++j) fpair[j] = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
  fpair[7] = f(c);
  double resk = 0.0;
  for (int j = 0; j < 8; ++j) resk += kWgk[j] * fpair[j];
  // the embedded 7-point Gauss rule uses the odd-index pairs plus the center
  double resg = kWg[3] * fpair[7];
  for (int j = 1; j < 7; j += 2) resg += kWg[j / 2] * fpair[j];
  double value = resk * h;
  double err = std::abs((resk - resg) * h);
  return Panel{a, b, value, err};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_intervals) {
  QuadResult res;
  if (a == b) {
    res.converged = true;
    return res;
  }
  std::priority_queue<Panel> heap;
  Panel p0 = gk15(f, a, b);
  res.evals += 23;
  heap.push(p0);
  double total = p0.value;
  double toterr = p0.error;
  int splits = 0;
  while (splits < max_intervals) {
    double tol = std::max(abs_tol, rel_tol * std::abs(total));
    if (toterr <= tol) break;
    Panel worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // interval exhausted at double precision
      heap.push(Panel{worst.a, worst.b, worst.value, 0.0});
      toterr -= worst.error;
      continue;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    res.evals += 46;
    total += left.value + right.value - worst.value;
    toterr += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  res.value = total;
  res.error = toterr;
  res.converged = toterr <= std::max(abs_tol, rel_tol * std::abs(total));
  return res;
}

double integrate_or_throw(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, double rel_tol, int max_intervals) {
  QuadResult r = integrate(f, a, b, abs_tol, rel_tol, max_intervals);
  if (!r.converged)
    throw QuadratureError("adaptive quadrature did not reach the requested tolerance");
  return r.value;
}

QuadResult integrate2d(const std::function<double(double, double)>& f, double ax,
                       double bx, double ay, double by, double abs_tol, double rel_tol,
                       int max_intervals) {
  long inner_evals = 0;
  auto outer = [&](double y) {
    QuadResult inner = integrate([&](double x) { return f(x, y); }, ax, bx,
                                 abs_tol / std::max(1.0, by - ay) * 0.1, rel_tol * 0.05,
                                 max_intervals);
    inner_evals += inner.evals;
    if (!inner.converged)
      throw QuadratureError("inner pass of 2d quadrature did not converge");
    return inner.value;
  };
  QuadResult r = integrate(outer, ay, by, abs_tol, rel_tol, max_intervals);
  r.evals += inner_evals;
  return r;
}

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const int n = static_cast<int>(x_.size());
  if (n < 3 || y_.size() != x_.size())
    throw std::invalid_argument("cubic spline needs at least 3 matched points");
  for (int i = 1; i < n; ++i)
    if (x_[i] <= x_[i - 1])
      throw std::invalid_argument("cubic spline abscissae must increase");
  // Thomas solve for natural boundary conditions
  m_.assign(n, 0.0);
  std::vector<double> diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
  for (int i = 1; i < n - 1; ++i) {
    double h0 = x_[i] - x_[i - 1];
    double h1 = x_[i + 1] - x_[i];
    sub[i] = h0;
    diag[i] = 2.0 * (h0 + h1);
    sup[i] = h1;
    rhs[i] = 6.0 * ((y_[i + 1] - y_[i]) / h1 - (y_[i] - y_[i - 1]) / h0);
  }
  for (int i = 2; i < n - 1; ++i) {
    double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (int i = n - 2; i >= 1; --i) {
    m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
  }
}

double CubicSpline::operator()(double xq) const {
  const int n = static_cast<int>(x_.size());
  if (xq <= x_.front()) xq = x_.front();
  if (xq >= x_.back()) xq = x_.back();
  int i = static_cast<int>(std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin()) - 1;
  i = std::clamp(i, 0, n - 2);
  double h = x_[i + 1] - x_[i];
  double t = (x_[i + 1] - xq) / h;
  double u = (xq - x_[i]) / h;
  return t * y_[i] + u * y_[i + 1] +
         ((t * t * t - t) * m_[i] + (u * u * u - u) * m_[i + 1]) * h * h / 6.0;
}

double CubicSpline::derivative(double xq) const {
  const int n = static_cast<int>(x_.size());
  if (xq <= x_.front()) xq = x_.front();
  if (xq >= x_.back()) xq = x_.back();
  int i = static_cast<int>(std::upper_bound(x_.begin(), x_.end(), xq) - x_.begin()) - 1;
  i = std::clamp(i, 0, n - 2);
  double h = x_[i + 1] - x_[i];
  double t = (x_[i + 1] - xq) / h;
  double u = (xq - x_[i]) / h;
  return (y_[i + 1] - y_[i]) / h +
         h / 6.0 * ((3.0 * u * u - 1.0) * m_[i + 1] - (3.0 * t * t - 1.0) * m_[i]);
}

}  // namespace bec::quad
