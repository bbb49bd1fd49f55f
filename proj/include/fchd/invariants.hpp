// Exact eta invariants, harmonic-spinor dimensions and the integrality checks.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string_view>
#include <vector>

#include "fchd/combinatorics.hpp"
#include "fchd/core.hpp"

namespace fchd {

using BigInt = boost::multiprecision::cpp_int;
/// Always in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

/// Which closed form produced an eta value.
enum class EtaBranch {
  OddK,          ///< residue-weighted sum over the multiplicity table
  EvenKVanishes  ///< k even: eta(0) = 0
};

struct EtaResult {
  FchdManifold manifold;
  SpinStructure structure;
  ExactRational value;
  MultiplicityTable table;
  EtaBranch branch;
};

/// Plus:  sum_{r=1}^{n-1} A_r (1 - 2r/n)
/// Minus: sum_{r=0}^{n-1} A_r (1 - (2r+1)/n)
/// For even k the value is 0; the table is attached either way.
EtaResult eta(const FchdManifold& m, SpinStructure s);

/// The odd-k sum evaluated on an arbitrary table (no even-k short-cut).
ExactRational eta_from_table(const MultiplicityTable& table);

/// Plus: A_0^+ = 2 #{eps in D_+ : mu_eps/2 + c(k)n = 0 mod n}.  Minus: 0.
std::int64_t harmonic_dim(const FchdManifold& m, SpinStructure s);

bool is_prime(int n);
bool is_integer(const ExactRational& q);

enum class Corollary1Verdict { ApplicableIntegral, ApplicableNonIntegral, NotApplicable };

/// Applicable when n is prime, n > 3 and 4 | n + 1; then tests eta for integrality.
Corollary1Verdict check_corollary1(const FchdManifold& m, SpinStructure s);

enum class Corollary2Verdict { InTwoZ, Violation };

struct Corollary2Report {
  Corollary2Verdict verdict;
  /// eta(Plus) - eta(Minus); exactly 0 for even k.
  ExactRational difference;
};

Corollary2Report check_corollary2(const FchdManifold& m);

/// Harmonic dimension for the Plus structure next to the "positive iff n >= 5"
/// threshold. Disagreements are reported, not reconciled.
struct Proposition1aRow {
  int k;
  int n;
  std::int64_t harmonic_dim_plus;
  bool positive;
  bool claimed_positive;
  bool agrees() const { return positive == claimed_positive; }
};

std::vector<Proposition1aRow> check_proposition1a(int k_max);

std::string_view to_string(EtaBranch b);
std::string_view to_string(Corollary1Verdict v);
std::string_view to_string(Corollary2Verdict v);

/// "num/den", or "num" when the denominator is 1.
std::string format_rational(const ExactRational& q);
double to_double(const ExactRational& q);

}  // namespace fchd
