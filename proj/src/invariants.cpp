#include "fchd/invariants.hpp"

#include <stdexcept>

namespace fchd {

ExactRational eta_from_table(const MultiplicityTable& table) {
  const int n = table.n;
  ExactRational sum = 0;
  if (table.structure == SpinStructure::Plus) {
    // r = 0 is dropped: its +-lambda pairs cancel.
    for (int r = 1; r < n; ++r) sum += ExactRational(BigInt(table.counts[r]) * (n - 2 * r), BigInt(n));
  } else {
    for (int r = 0; r < n; ++r) sum += ExactRational(BigInt(table.counts[r]) * (n - 2 * r - 1), BigInt(n));
  }
  return sum;
}

EtaResult eta(const FchdManifold& m, SpinStructure s) {
  EtaResult result{m, s, ExactRational(0), multiplicity_table(m, s), EtaBranch::EvenKVanishes};
  if (m.k % 2 == 1) {
    result.value = eta_from_table(result.table);
    result.branch = EtaBranch::OddK;
  }
  return result;
}

std::int64_t harmonic_dim(const FchdManifold& m, SpinStructure s) {
  if (s == SpinStructure::Minus) return 0;
  return multiplicity_table(m, s).counts[0];
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_integer(const ExactRational& q) { return boost::multiprecision::denominator(q) == 1; }

Corollary1Verdict check_corollary1(const FchdManifold& m, SpinStructure s) {
  if (!is_prime(m.n) || m.n <= 3 || (m.n + 1) % 4 != 0) return Corollary1Verdict::NotApplicable;
  return is_integer(eta(m, s).value) ? Corollary1Verdict::ApplicableIntegral : Corollary1Verdict::ApplicableNonIntegral;
}

Corollary2Report check_corollary2(const FchdManifold& m) {
  const ExactRational d = eta(m, SpinStructure::Plus).value - eta(m, SpinStructure::Minus).value;
  const ExactRational half = d / 2;
  return {is_integer(half) ? Corollary2Verdict::InTwoZ : Corollary2Verdict::Violation, d};
}

std::vector<Proposition1aRow> check_proposition1a(int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  std::vector<Proposition1aRow> rows;
  rows.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    const auto m = make_manifold(k);
    const auto h = harmonic_dim(m, SpinStructure::Plus);
    rows.push_back({k, m.n, h, h > 0, m.n >= 5});
  }
  return rows;
}

std::string_view to_string(EtaBranch b) { return b == EtaBranch::OddK ? "odd_k" : "even_k_vanishes"; }

std::string_view to_string(Corollary1Verdict v) {
  switch (v) {
    case Corollary1Verdict::ApplicableIntegral: return "applicable_integral";
    case Corollary1Verdict::ApplicableNonIntegral: return "applicable_non_integral";
    case Corollary1Verdict::NotApplicable: return "not_applicable";
  }
  return "?";
}

std::string_view to_string(Corollary2Verdict v) { return v == Corollary2Verdict::InTwoZ ? "in_2z" : "violation"; }

std::string format_rational(const ExactRational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  const BigInt& num = boost::multiprecision::numerator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

double to_double(const ExactRational& q) { return q.convert_to<double>(); }

}  // namespace fchd
