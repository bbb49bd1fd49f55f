// Sign vectors eps in {-1,1}^k and the residue counts built from them.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fchd/core.hpp"

namespace fchd {

/// Largest k accepted by the enumeration routines (2^k patterns are scanned).
inline constexpr int kMaxEnumerationK = 30;

/// eps = (eps_1, ..., eps_k); bit j-1 set means eps_j = +1, clear means -1.
class SignVector {
 public:
  SignVector(std::uint32_t bits, int k);

  /// From explicit entries, each +1 or -1.
  static SignVector from_signs(std::span<const int> signs);

  std::uint32_t bits() const { return bits_; }
  int size() const { return k_; }

  /// eps_j for 1 <= j <= k.
  int operator[](int j) const { return (bits_ >> (j - 1)) & 1u ? 1 : -1; }

  SignVector operator-() const { return SignVector(~bits_ & mask(k_), k_); }

  std::vector<int> signs() const;
  /// "(1,-1,-1)"
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

  static std::uint32_t mask(int k) { return k >= 32 ? ~0u : (1u << k) - 1u; }

 private:
  std::uint32_t bits_;
  int k_;
};

/// mu_eps = sum_j eps_j * j
std::int64_t mu(const SignVector& eps);

/// nu(eps) = eps_1 * ... * eps_k
int nu(const SignVector& eps);

/// Calls f(eps) for every eps in D_+ = {nu = +1}, ascending bit pattern.
template <typename F>
void for_each_dplus(int k, F&& f) {
  const std::uint64_t count = std::uint64_t{1} << k;
  const std::uint32_t m = SignVector::mask(k);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const auto b = static_cast<std::uint32_t>(bits);
    // nu = +1 iff the number of -1 entries (clear bits) is even
    if ((__builtin_popcount(~b & m) & 1) == 0) f(SignVector(b, k));
  }
}

/// Materialized D_+ in ascending bit order; throws for k outside [1, kMaxEnumerationK].
std::vector<SignVector> enumerate_dplus(int k);

/// (mu_eps/2 + c(k) n + shift) mod n in [0, n); shift is 0 for Plus and k for Minus.
int residue(const SignVector& eps, const FchdManifold& m, SpinStructure s);

/// The integer mu_eps/2 + c(k) n + shift before reduction (may be negative).
std::int64_t shifted_half_mu(const SignVector& eps, const FchdManifold& m, SpinStructure s);

/// A_r = 2 #{eps in D_+ : residue(eps) = r}, r = 0..n-1.
struct MultiplicityTable {
  int n = 0;
  SpinStructure structure = SpinStructure::Plus;
  std::vector<std::int64_t> counts;

  std::int64_t operator[](int r) const { return counts.at(r); }
  std::int64_t total() const;
};

MultiplicityTable multiplicity_table(const FchdManifold& m, SpinStructure s);

}  // namespace fchd
