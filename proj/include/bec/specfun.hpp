#pragma once

namespace bec::specfun {

/// Dawson integral F(x) = exp(-x^2) * Integral_0^x exp(t^2) dt.
/// Odd in x; relative accuracy around 1e-14 for |x| <= 50.
double dawson(double x);

/// Truncated large-x expansion (1/2x) * (1 + sum_{k=1}^{kmax} (2k-1)!!/(2x^2)^k).
double dawson_asymptotic(double x, int kmax);

/// The real combination exp(-x^2) * i * erf(i x) = -(2/sqrt(pi)) * dawson(x).
/// Negative for x > 0.
double erf_i_combo(double x);

}  // namespace bec::specfun
