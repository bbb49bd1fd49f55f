#include "fchd/combinatorics.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace fchd {

namespace {

void require_enumerable(int k) {
  if (k < 1 || k > kMaxEnumerationK)
    throw std::invalid_argument("k out of enumeration range [1, " + std::to_string(kMaxEnumerationK) +
                                "]: " + std::to_string(k));
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

SignVector::SignVector(std::uint32_t bits, int k) : bits_(bits), k_(k) {
  if (k < 1 || k > 32) throw std::invalid_argument("sign vector length must be in [1, 32]");
  if ((bits & ~mask(k)) != 0) throw std::invalid_argument("sign vector has bits beyond its length");
}

SignVector SignVector::from_signs(std::span<const int> signs) {
  if (signs.empty() || signs.size() > 32) throw std::invalid_argument("sign vector length must be in [1, 32]");
  std::uint32_t bits = 0;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j] == 1)
      bits |= 1u << j;
    else if (signs[j] != -1)
      throw std::invalid_argument("sign vector entries must be +1 or -1");
  }
  return SignVector(bits, static_cast<int>(signs.size()));
}

std::vector<int> SignVector::signs() const {
  std::vector<int> out(k_);
  for (int j = 1; j <= k_; ++j) out[j - 1] = (*this)[j];
  return out;
}

std::string SignVector::to_string() const {
  std::string out = "(";
  for (int j = 1; j <= k_; ++j) {
    if (j > 1) out += ',';
    out += (*this)[j] > 0 ? "1" : "-1";
  }
  return out + ")";
}

std::int64_t mu(const SignVector& eps) {
  std::int64_t plus_sum = 0;
  for (int j = 1; j <= eps.size(); ++j)
    if (eps[j] > 0) plus_sum += j;
  const std::int64_t k = eps.size();
  return 2 * plus_sum - k * (k + 1) / 2;
}

int nu(const SignVector& eps) {
  const std::uint32_t minus = ~eps.bits() & SignVector::mask(eps.size());
  return __builtin_popcount(minus) % 2 == 0 ? 1 : -1;
}

std::vector<SignVector> enumerate_dplus(int k) {
  require_enumerable(k);
  std::vector<SignVector> out;
  out.reserve(std::size_t{1} << (k - 1));
  for_each_dplus(k, [&](const SignVector& eps) { out.push_back(eps); });
  return out;
}

std::int64_t shifted_half_mu(const SignVector& eps, const FchdManifold& m, SpinStructure s) {
  if (eps.size() != m.k) throw std::invalid_argument("sign vector length does not match k");
  const std::int64_t twice = mu(eps) + std::int64_t{m.delta} * m.n;
  // mu_eps and k(k+1)/2 share parity, and delta n fixes the remaining odd case.
  assert(twice % 2 == 0);
  if (twice % 2 != 0) throw std::logic_error("mu_eps + 2c(k)n is odd");
  return twice / 2 + (s == SpinStructure::Minus ? m.k : 0);
}

int residue(const SignVector& eps, const FchdManifold& m, SpinStructure s) {
  return static_cast<int>(floor_mod(shifted_half_mu(eps, m, s), m.n));
}

std::int64_t MultiplicityTable::total() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

MultiplicityTable multiplicity_table(const FchdManifold& m, SpinStructure s) {
  require_enumerable(m.k);
  MultiplicityTable table{m.n, s, std::vector<std::int64_t>(m.n, 0)};

  // Inline form of residue(): mu = 2*plus_sum - k(k+1)/2, tracked incrementally.
  const std::int64_t tri = m.triangular();
  const std::int64_t offset = (-tri + std::int64_t{m.delta} * m.n) / 2 + (s == SpinStructure::Minus ? m.k : 0);
  for_each_dplus(m.k, [&](const SignVector& eps) {
    std::int64_t plus_sum = 0;
    for (std::uint32_t b = eps.bits(); b != 0; b &= b - 1) plus_sum += __builtin_ctz(b) + 1;
    table.counts[floor_mod(plus_sum + offset, m.n)] += 2;
  });
  return table;
}

}  // namespace fchd
