// Hurwitz zeta continuation and the zeta-regularized eta function.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "fchd/core.hpp"

namespace fchd {

template <typename Real>
struct ZetaEval {
  Real s;
  Real a;
  Real value;
  /// Magnitude of the first omitted Euler-Maclaurin correction.
  Real est_error;
};

namespace detail {

inline constexpr int kZetaDirectTerms = 50;

// B_2, B_4, ..., B_14 divided by (2j)!; the last entry only feeds the error estimate.
template <typename Real>
constexpr std::array<Real, 7> bernoulli_over_factorial() {
  return {Real(1) / Real(6) / Real(2),
          Real(-1) / Real(30) / Real(24),
          Real(1) / Real(42) / Real(720),
          Real(-1) / Real(30) / Real(40320),
          Real(5) / Real(66) / Real(3628800),
          Real(-691) / Real(2730) / Real(479001600),
          Real(7) / Real(6) / Real(87178291200.0L)};
}

}  // namespace detail

/// zeta(s, a) = sum_{m>=0} (m + a)^{-s}, analytically continued to s != 1.
///
/// Euler-Maclaurin: 50 direct terms, the integral and midpoint tail terms,
/// then Bernoulli corrections through B_12. Throws std::domain_error for
/// a <= 0 or |s - 1| < 1e-9.
template <typename Real>
ZetaEval<Real> hurwitz_zeta(Real s, Real a) {
  using std::abs;
  using std::pow;
  if (!(a > Real(0))) throw std::domain_error("hurwitz_zeta: a must be positive");
  if (!std::isfinite(static_cast<double>(s))) throw std::domain_error("hurwitz_zeta: s must be finite");
  if (abs(s - Real(1)) < Real(1e-9)) throw std::domain_error("hurwitz_zeta: s is at the pole s = 1");

  constexpr int N = detail::kZetaDirectTerms;
  Real sum = 0;
  for (int m = N - 1; m >= 0; --m) sum += pow(Real(m) + a, -s);

  const Real x = Real(N) + a;
  const Real x_pow = pow(x, -s);
  sum += x * x_pow / (s - Real(1));
  sum += x_pow / Real(2);

  // rising = s (s+1) ... (s+2j-2), xp = x^{-s-2j+1}
  const auto coeff = detail::bernoulli_over_factorial<Real>();
  Real rising = s;
  Real xp = x_pow / x;
  Real omitted = 0;
  for (int j = 1; j <= 7; ++j) {
    const Real term = coeff[j - 1] * rising * xp;
    if (j < 7)
      sum += term;
    else
      omitted = abs(term);
    rising *= (s + Real(2 * j - 1)) * (s + Real(2 * j));
    xp /= x * x;
  }
  return {s, a, sum, omitted};
}

/// eta(s) of the asymmetric spectral part, assembled from Hurwitz zeta values:
///   Plus:  (2 pi n)^{-s} sum_{r=1}^{n-1} A_r [zeta(s, r/n) - zeta(s, 1 - r/n)]
///   Minus: (2 pi n)^{-s} sum_{r=0}^{n-1} A_r [zeta(s, (2r+1)/2n) - zeta(s, 1 - (2r+1)/2n)]
/// Requires odd k and s in [0, 2]; s = 1 propagates the pole error.
double eta_numeric(const FchdManifold& m, double s, SpinStructure structure);

}  // namespace fchd
