#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "fchd/combinatorics.hpp"

using namespace fchd;

namespace {

SignVector sv(std::vector<int> s) { return SignVector::from_signs(s); }

// All of {-1,1}^k as plain vectors, built by recursion rather than bit patterns.
void all_signs(int k, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (int s : {1, -1}) {
    prefix.push_back(s);
    all_signs(k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> all_signs(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  all_signs(k, prefix, out);
  return out;
}

long long plain_mu(const std::vector<int>& e) {
  long long s = 0;
  for (std::size_t j = 0; j < e.size(); ++j) s += e[j] * static_cast<long long>(j + 1);
  return s;
}

int plain_nu(const std::vector<int>& e) {
  int p = 1;
  for (int x : e) p *= x;
  return p;
}

// Brute-force table: residues via doubled congruence 2r = mu + 2c(k)n + 2 shift (mod 2n).
std::vector<std::int64_t> brute_table(int k, SpinStructure s) {
  const int n = 2 * k + 1;
  const int twice_c_n = ((k * (k + 1) / 2) % 2) * n;
  std::vector<std::int64_t> counts(n, 0);
  for (const auto& e : all_signs(k)) {
    if (plain_nu(e) != 1) continue;
    const long long twice = plain_mu(e) + twice_c_n + (s == SpinStructure::Minus ? 2 * k : 0);
    for (int r = 0; r < n; ++r)
      if (((twice - 2 * r) % (2 * n) + 2 * n) % (2 * n) == 0) counts[r] += 2;
  }
  return counts;
}

}  // namespace

TEST_CASE("mu examples") {
  CHECK(mu(sv({1, 1, 1})) == 6);
  CHECK(mu(sv({-1, -1, 1})) == 0);
  for (int k = 1; k <= 12; ++k) CHECK(mu(SignVector(0, k)) == -k * (k + 1) / 2);
}

TEST_CASE("nu examples") {
  CHECK(nu(sv({1, 1, 1})) == 1);
  CHECK(nu(sv({1, -1, -1})) == 1);
  CHECK(nu(sv({-1, 1, 1})) == -1);
}

TEST_CASE("sign vector construction") {
  const auto eps = sv({1, -1, -1});
  CHECK(eps.bits() == 1u);
  CHECK(eps[1] == 1);
  CHECK(eps[3] == -1);
  CHECK(eps.to_string() == "(1,-1,-1)");
  CHECK((-eps).to_string() == "(-1,1,1)");
  CHECK_THROWS_AS(sv({1, 0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(sv({}), std::invalid_argument);
  CHECK_THROWS_AS(SignVector(8u, 3), std::invalid_argument);
}

TEST_CASE("mu and nu match plain evaluation") {
  for (int k = 1; k <= 10; ++k)
    for (const auto& e : all_signs(k)) {
      const auto eps = SignVector::from_signs(e);
      CHECK(mu(eps) == plain_mu(e));
      CHECK(nu(eps) == plain_nu(e));
      CHECK(eps.signs() == e);
    }
}

TEST_CASE("enumerate_dplus") {
  SUBCASE("k = 3") {
    const auto got = enumerate_dplus(3);
    std::set<std::vector<int>> seen;
    for (const auto& e : got) seen.insert(e.signs());
    const std::set<std::vector<int>> expected{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    CHECK(seen == expected);
    CHECK(got.size() == 4);
  }
  SUBCASE("k = 1") {
    const auto got = enumerate_dplus(1);
    REQUIRE(got.size() == 1);
    CHECK(got[0].signs() == std::vector<int>{1});
  }
  SUBCASE("k = 5 against a filtered full scan") {
    std::set<std::vector<int>> expected;
    for (const auto& e : all_signs(5))
      if (plain_nu(e) == 1) expected.insert(e);
    const auto got = enumerate_dplus(5);
    CHECK(got.size() == 16);
    std::set<std::vector<int>> seen;
    for (const auto& e : got) {
      seen.insert(e.signs());
      CHECK(std::ranges::count(e.signs(), -1) % 2 == 0);
    }
    CHECK(seen == expected);
  }
  SUBCASE("ascending bit order") {
    const auto got = enumerate_dplus(9);
    CHECK(got.size() == 256);
    CHECK(std::ranges::is_sorted(got, {}, &SignVector::bits));
  }
  CHECK_THROWS_AS(enumerate_dplus(0), std::invalid_argument);
}

TEST_CASE("residue examples") {
  const auto m3 = make_manifold(3);
  CHECK(shifted_half_mu(sv({1, -1, -1}), m3, SpinStructure::Plus) == -2);
  CHECK(residue(sv({1, -1, -1}), m3, SpinStructure::Plus) == 5);
  CHECK(residue(sv({-1, 1, -1}), m3, SpinStructure::Plus) == 6);
  const auto m1 = make_manifold(1);
  CHECK(residue(sv({1}), m1, SpinStructure::Plus) == 2);
  CHECK(residue(sv({1}), m1, SpinStructure::Minus) == 0);
  CHECK_THROWS_AS(residue(sv({1, 1}), m3, SpinStructure::Plus), std::invalid_argument);
}

TEST_CASE("multiplicity table examples") {
  const auto t7 = multiplicity_table(make_manifold(3), SpinStructure::Plus);
  CHECK(t7.counts == std::vector<std::int64_t>{2, 0, 0, 2, 0, 2, 2});
  CHECK(multiplicity_table(make_manifold(1), SpinStructure::Plus).counts == std::vector<std::int64_t>{0, 0, 2});
  CHECK(multiplicity_table(make_manifold(1), SpinStructure::Minus).counts == std::vector<std::int64_t>{2, 0, 0});
}

TEST_CASE("multiplicity table matches brute force over plain sign vectors") {
  for (int k = 1; k <= 12; ++k)
    for (SpinStructure s : kSpinStructures) {
      INFO("k = " << k);
      CHECK(multiplicity_table(make_manifold(k), s).counts == brute_table(k, s));
    }
}

TEST_CASE("negation laws") {
  for (int k = 1; k <= 10; ++k) {
    const auto m = make_manifold(k);
    for (std::uint32_t b = 0; b < (1u << k); ++b) {
      const SignVector eps(b, k);
      CHECK(mu(-eps) == -mu(eps));
      CHECK(nu(-eps) == ((k % 2 == 0) ? nu(eps) : -nu(eps)));
      // eps -> -eps: r -> -r (Plus), r -> -r - 1 (Minus), mod n
      CHECK(residue(-eps, m, SpinStructure::Plus) == (m.n - residue(eps, m, SpinStructure::Plus)) % m.n);
      CHECK(residue(-eps, m, SpinStructure::Minus) ==
            ((-residue(eps, m, SpinStructure::Minus) - 1) % m.n + m.n) % m.n);
    }
  }
}

TEST_CASE("tables are even and sum to 2^k") {
  for (int k = 1; k <= 20; ++k)
    for (SpinStructure s : kSpinStructures) {
      const auto t = multiplicity_table(make_manifold(k), s);
      CHECK(t.total() == (std::int64_t{1} << k));
      CHECK(std::ranges::all_of(t.counts, [](std::int64_t c) { return c >= 0 && c % 2 == 0; }));
    }
}

TEST_CASE("fixed-point congruence mod 2n is residue zero mod n") {
  for (int k = 1; k <= 14; ++k) {
    const auto m = make_manifold(k);
    for (std::uint32_t b = 0; b < (1u << k); ++b) {
      const SignVector eps(b, k);
      const std::int64_t diff = mu(eps) - std::int64_t{m.delta} * m.n;
      const bool mod_2n = ((diff % (2 * m.n)) + 2 * m.n) % (2 * m.n) == 0;
      CHECK(mod_2n == (residue(eps, m, SpinStructure::Plus) == 0));
    }
  }
}
