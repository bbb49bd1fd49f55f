#include "fchd/core.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fchd {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in integer matrix arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in integer matrix arithmetic");
  return out;
}

IntMatrix checked_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out = IntMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index l = 0; l < a.cols(); ++l) {
      if (a(i, l) == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(a(i, l), b(l, j)));
    }
  return out;
}

}  // namespace

FchdManifold make_manifold(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
  FchdManifold m;
  m.k = k;
  m.n = 2 * k + 1;
  m.delta = static_cast<int>(m.triangular() % 2);
  return m;
}

FchdManifold manifold_from_dim(int dim) {
  if (dim < 3 || dim % 2 == 0)
    throw std::invalid_argument("dimension must be odd and >= 3, got " + std::to_string(dim));
  return make_manifold((dim - 1) / 2);
}

std::string_view to_string(SpinStructure s) { return s == SpinStructure::Plus ? "plus" : "minus"; }

SpinStructure parse_spin_structure(std::string_view text) {
  if (text == "plus") return SpinStructure::Plus;
  if (text == "minus") return SpinStructure::Minus;
  throw std::invalid_argument("unknown spin structure '" + std::string(text) + "'");
}

HolonomyMatrix holonomy_matrix(const FchdManifold& m) {
  const int n = m.n;
  IntMatrix a = IntMatrix::Zero(n, n);
  // A(a_j) = a_{j+1} for j < n-1
  for (int j = 0; j + 2 < n; ++j) a(j + 1, j) = 1;
  // A(a_{n-1}) = -(a_1 + ... + a_{n-1})
  a.col(n - 2).head(n - 1).setConstant(-1);
  // A(a_n) = a_n
  a(n - 1, n - 1) = 1;
  return {a};
}

std::vector<std::int64_t> char_poly(const IntMatrix& matrix) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("char_poly needs a square matrix");
  const auto n = static_cast<int>(matrix.rows());

  // Faddeev-LeVerrier for p(z) = det(zI - M) = sum c_i z^i, c_n = 1.
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  IntMatrix aux = IntMatrix::Zero(n, n);
  for (int step = 1; step <= n; ++step) {
    IntMatrix next = checked_product(matrix, aux);
    for (int i = 0; i < n; ++i) next(i, i) = checked_add(next(i, i), c[n - step + 1]);
    aux = std::move(next);
    const IntMatrix ma = checked_product(matrix, aux);
    std::int64_t trace = 0;
    for (int i = 0; i < n; ++i) trace = checked_add(trace, ma(i, i));
    if (trace % step != 0) throw std::logic_error("Faddeev-LeVerrier division is not exact");
    c[n - step] = -trace / step;
  }

  // det(M - zI) = (-1)^n det(zI - M)
  if (n % 2 == 1)
    for (auto& v : c) v = -v;
  return c;
}

IntMatrix integer_power(const IntMatrix& matrix, int exponent) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("integer_power needs a square matrix");
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  IntMatrix result = IntMatrix::Identity(matrix.rows(), matrix.cols());
  for (int i = 0; i < exponent; ++i) result = checked_product(result, matrix);
  return result;
}

Eigen::MatrixXd holonomy_rotation(const FchdManifold& m) {
  Eigen::MatrixXd rot = Eigen::MatrixXd::Zero(m.n, m.n);
  for (int j = 1; j <= m.k; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / m.n;
    const int c = 2 * j - 2;
    rot(c, c) = std::cos(angle);
    rot(c + 1, c) = std::sin(angle);
    rot(c, c + 1) = -std::sin(angle);
    rot(c + 1, c + 1) = std::cos(angle);
  }
  rot(m.n - 1, m.n - 1) = 1.0;
  return rot;
}

}  // namespace fchd
