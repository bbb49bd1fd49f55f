#include "fchd/zeta.hpp"

#include <numbers>

#include "fchd/combinatorics.hpp"

namespace fchd {

double eta_numeric(const FchdManifold& m, double s, SpinStructure structure) {
  if (m.k % 2 == 0) throw std::domain_error("eta_numeric: k must be odd");
  if (!(s >= 0.0 && s <= 2.0)) throw std::domain_error("eta_numeric: s must lie in [0, 2]");

  const auto table = multiplicity_table(m, structure);
  const double n = m.n;
  double sum = 0.0;
  for (int r = 0; r < m.n; ++r) {
    if (table.counts[r] == 0) continue;
    double abscissa;
    if (structure == SpinStructure::Plus) {
      if (r == 0) continue;
      abscissa = r / n;
    } else {
      abscissa = (2.0 * r + 1.0) / (2.0 * n);
    }
    const double bracket = hurwitz_zeta(s, abscissa).value - hurwitz_zeta(s, 1.0 - abscissa).value;
    sum += static_cast<double>(table.counts[r]) * bracket;
  }
  return std::pow(2.0 * std::numbers::pi * n, -s) * sum;
}

}  // namespace fchd
