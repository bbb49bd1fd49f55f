#include "doctest.h"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fchd/core.hpp"

using namespace fchd;

namespace {

// Fraction-free Gaussian elimination (Bareiss); exact for small integer matrices.
__int128 bareiss_det(IntMatrix m) {
  const auto n = m.rows();
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);
  __int128 sign = 1, prev = 1;
  for (Eigen::Index p = 0; p < n; ++p) {
    if (a[p][p] == 0) {
      Eigen::Index swap = p + 1;
      while (swap < n && a[swap][p] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[p], a[swap]);
      sign = -sign;
    }
    for (Eigen::Index i = p + 1; i < n; ++i)
      for (Eigen::Index j = p + 1; j < n; ++j) a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
    prev = a[p][p];
  }
  return sign * a[n - 1][n - 1];
}

__int128 eval_poly(const std::vector<std::int64_t>& c, std::int64_t z) {
  __int128 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

TEST_CASE("make_manifold") {
  auto m3 = make_manifold(3);
  CHECK(m3.n == 7);
  CHECK(m3.delta == 0);
  auto m1 = make_manifold(1);
  CHECK(m1.n == 3);
  CHECK(m1.delta == 1);
  auto m4 = make_manifold(4);
  CHECK(m4.n == 9);
  CHECK(m4.delta == 0);

  CHECK_THROWS_AS(make_manifold(0), std::invalid_argument);
  CHECK_THROWS_AS(make_manifold(-2), std::invalid_argument);
}

TEST_CASE("delta follows the parity of k(k+1)/2") {
  for (int k = 1; k <= 60; ++k) {
    const auto m = make_manifold(k);
    CHECK(m.n == 2 * k + 1);
    CHECK(m.delta == (k * (k + 1) / 2) % 2);
  }
}

TEST_CASE("manifold_from_dim") {
  CHECK(manifold_from_dim(7).k == 3);
  CHECK_THROWS_AS(manifold_from_dim(4), std::invalid_argument);
  CHECK_THROWS_AS(manifold_from_dim(1), std::invalid_argument);
  CHECK_THROWS_AS(manifold_from_dim(-3), std::invalid_argument);
}

TEST_CASE("spin structure names") {
  CHECK(parse_spin_structure("plus") == SpinStructure::Plus);
  CHECK(parse_spin_structure("minus") == SpinStructure::Minus);
  CHECK(to_string(SpinStructure::Minus) == "minus");
  CHECK_THROWS_AS(parse_spin_structure("Plus"), std::invalid_argument);
}

TEST_CASE("holonomy matrix for n = 3") {
  IntMatrix expected(3, 3);
  expected << 0, -1, 0,  //
      1, -1, 0,          //
      0, 0, 1;
  CHECK(holonomy_matrix(make_manifold(1)).entries == expected);
}

TEST_CASE("holonomy matrix columns follow the defining relations") {
  for (int k = 1; k <= 12; ++k) {
    const auto m = make_manifold(k);
    const IntMatrix a = holonomy_matrix(m).entries;
    for (int j = 0; j + 2 < m.n; ++j) CHECK(a.col(j) == IntMatrix::Identity(m.n, m.n).col(j + 1));
    for (int i = 0; i + 1 < m.n; ++i) CHECK(a(i, m.n - 2) == -1);
    CHECK(a(m.n - 1, m.n - 2) == 0);
    CHECK(a.col(m.n - 1) == IntMatrix::Identity(m.n, m.n).col(m.n - 1));
  }
}

TEST_CASE("A has order exactly n") {
  for (int k = 1; k <= 12; ++k) {
    const auto m = make_manifold(k);
    const IntMatrix a = holonomy_matrix(m).entries;
    const IntMatrix id = IntMatrix::Identity(m.n, m.n);
    CHECK(integer_power(a, m.n) == id);
    for (int j = 1; j < m.n; ++j) CHECK(integer_power(a, j) != id);
  }
}

TEST_CASE("char_poly small cases") {
  const std::vector<std::int64_t> n3{1, 0, 0, -1};
  CHECK(char_poly(holonomy_matrix(make_manifold(1)).entries) == n3);

  IntMatrix one(1, 1);
  one << 1;
  CHECK(char_poly(one) == std::vector<std::int64_t>{1, -1});

  // hand-expanded: det(M - zI) = -z^3 + 9z^2 - 24z + 18
  IntMatrix sym(3, 3);
  sym << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  CHECK(char_poly(sym) == std::vector<std::int64_t>{18, -24, 9, -1});
}

TEST_CASE("char_poly of the holonomy is 1 - z^n") {
  for (int k = 1; k <= 12; ++k) {
    const auto m = make_manifold(k);
    std::vector<std::int64_t> expected(m.n + 1, 0);
    expected[0] = 1;
    expected[m.n] = -1;
    CHECK(char_poly(holonomy_matrix(m).entries) == expected);
  }
}

TEST_CASE("char_poly agrees with Bareiss determinants of A - zI") {
  for (int k = 1; k <= 8; ++k) {
    const auto m = make_manifold(k);
    const IntMatrix a = holonomy_matrix(m).entries;
    const auto poly = char_poly(a);
    for (std::int64_t z = -3; z <= 3; ++z) {
      const IntMatrix shifted = a - z * IntMatrix::Identity(m.n, m.n);
      CHECK(bareiss_det(shifted) == eval_poly(poly, z));
    }
  }
}

TEST_CASE("char_poly rejects non-square and overflowing input") {
  CHECK_THROWS_AS(char_poly(IntMatrix::Zero(2, 3)), std::invalid_argument);
  IntMatrix big = IntMatrix::Constant(4, 4, std::int64_t{1} << 40);
  CHECK_THROWS_AS(char_poly(big), std::overflow_error);
}

TEST_CASE("rotation frame and lattice matrix share the spectrum of n-th roots of unity") {
  for (int k = 1; k <= 6; ++k) {
    const auto m = make_manifold(k);
    const Eigen::MatrixXd rot = holonomy_rotation(m);
    CHECK((rot.transpose() * rot - Eigen::MatrixXd::Identity(m.n, m.n)).cwiseAbs().maxCoeff() < 1e-12);

    const Eigen::MatrixXd lattice = holonomy_matrix(m).entries.cast<double>();
    for (const Eigen::MatrixXd& mat : {rot, lattice}) {
      Eigen::EigenSolver<Eigen::MatrixXd> solver(mat);
      std::vector<bool> hit(m.n, false);
      for (const auto& ev : solver.eigenvalues()) {
        const double angle = std::arg(ev);
        const long j = std::lround(angle * m.n / (2.0 * std::numbers::pi));
        const int idx = static_cast<int>(((j % m.n) + m.n) % m.n);
        CHECK(std::abs(ev - std::polar(1.0, 2.0 * std::numbers::pi * j / m.n)) < 1e-8);
        CHECK_FALSE(hit[idx]);
        hit[idx] = true;
      }
    }
  }
}
