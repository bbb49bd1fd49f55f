// Brute-force spectral oracle: the explicit 2^k-dimensional spinor module,
// the lifts alpha_+-, and equivariance / kernel checks on Fourier modes along e_n.
//
// Tensor-slot convention (slot 1 is the leftmost Kronecker factor):
//
//   e_{2j-1} = T x ... x T x g1 x I x ... x I     (j-1 copies of T, g1 in slot j)
//   e_{2j}   = T x ... x T x g2 x I x ... x I
//   e_n      = (-1)^{k+1} i (T x ... x T)
//
// With T^2 = I this makes e_{2j-1} e_{2j} act as g1 g2 on slot j alone, so
// r_j rotates slot j by rho_1^j and alpha = r_1 ... r_k acts slotwise.
// T w_{+-1} = -+w_{+-1} gives i T^{(x)k} v_eps = i (-1)^k nu(eps) v_eps; the sign on
// e_n selects the Clifford module in which e_n v_eps = -i nu(eps) v_eps for every k.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fchd/combinatorics.hpp"
#include "fchd/core.hpp"

namespace fchd {

template <typename Real = double>
class SpinorRep {
 public:
  using Complex = std::complex<Real>;
  using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
  using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
  using SparseMatrix = Eigen::SparseMatrix<Complex>;

  /// Dense alpha is 2^k x 2^k; k = 12 gives dimension 4096.
  static constexpr int kMaxK = 12;

  explicit SpinorRep(int k);

  int k() const { return k_; }
  int n() const { return 2 * k_ + 1; }
  Eigen::Index dim() const { return Eigen::Index{1} << k_; }
  Real beta() const { return std::numbers::pi_v<Real> / Real(n()); }

  /// Clifford generator e_j, 1 <= j <= n.
  const SparseMatrix& e(int j) const { return e_.at(j - 1); }
  /// r_j = cos(j beta) + e_{2j-1} e_{2j} sin(j beta), 1 <= j <= k.
  const SparseMatrix& r(int j) const { return r_.at(j - 1); }
  /// alpha = r_1 ... r_k
  const Matrix& alpha() const { return alpha_; }

  /// alpha_+ = (-1)^{k(k+1)/2} alpha and alpha_- = -alpha_+.
  Real lift_sign(SpinStructure s) const {
    const Real plus = (k_ * (k_ + 1) / 2) % 2 == 0 ? Real(1) : Real(-1);
    return s == SpinStructure::Plus ? plus : -plus;
  }
  auto alpha_plus() const { return alpha_ * Complex(lift_sign(SpinStructure::Plus)); }
  auto alpha_minus() const { return alpha_ * Complex(lift_sign(SpinStructure::Minus)); }

  /// alpha * x through the sparse chain r_1 (r_2 (... (r_k x))).
  template <typename Derived>
  Matrix apply_alpha(const Eigen::MatrixBase<Derived>& x) const {
    Matrix y = x;
    for (int j = k_; j >= 1; --j) y = r(j) * y;
    return y;
  }

  /// v_eps = w_{eps_1} x ... x w_{eps_k} with w_{+1} = (1, -i), w_{-1} = (1, i).
  Vector spinor(const SignVector& eps) const;

  static Matrix2 g1() { return (Matrix2() << Complex(0, 1), 0, 0, Complex(0, -1)).finished(); }
  static Matrix2 g2() { return (Matrix2() << 0, Complex(0, 1), Complex(0, 1), 0).finished(); }
  static Matrix2 tee() { return (Matrix2() << 0, Complex(0, -1), Complex(0, 1), 0).finished(); }
  /// rho_1 = cos(beta) I + sin(beta) g1 g2
  Matrix2 rho1() const { return std::cos(beta()) * Matrix2::Identity() + std::sin(beta()) * g1() * g2(); }

 private:
  SparseMatrix slot_product(const std::vector<Matrix2>& factors) const;

  int k_;
  std::vector<SparseMatrix> e_;
  std::vector<SparseMatrix> r_;
  Matrix alpha_;
};

template <typename Real>
SpinorRep<Real>::SpinorRep(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("spinor representation needs k >= 1");
  if (k > kMaxK) throw std::invalid_argument("spinor representation capped at k = 12 (dimension 4096)");

  const Matrix2 id = Matrix2::Identity();
  e_.reserve(n());
  for (int j = 1; j <= k_; ++j) {
    for (const Matrix2& g : {g1(), g2()}) {
      std::vector<Matrix2> factors(k_, id);
      for (int s = 0; s < j - 1; ++s) factors[s] = tee();
      factors[j - 1] = g;
      e_.push_back(slot_product(factors));
    }
  }
  e_.push_back(Complex(0, k_ % 2 == 1 ? 1 : -1) * slot_product(std::vector<Matrix2>(k_, tee())));

  SparseMatrix identity(dim(), dim());
  identity.setIdentity();
  r_.reserve(k_);
  for (int j = 1; j <= k_; ++j) {
    const Real angle = Real(j) * beta();
    SparseMatrix pair = e(2 * j - 1) * e(2 * j);
    SparseMatrix rj = Complex(std::cos(angle)) * identity + Complex(std::sin(angle)) * pair;
    rj.prune(Complex(0));
    r_.push_back(std::move(rj));
  }

  alpha_ = apply_alpha(Matrix::Identity(dim(), dim()));
}

template <typename Real>
typename SpinorRep<Real>::SparseMatrix SpinorRep<Real>::slot_product(const std::vector<Matrix2>& factors) const {
  SparseMatrix acc = factors.back().sparseView();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) {
    SparseMatrix left = it->sparseView();
    SparseMatrix next = Eigen::kroneckerProduct(left, acc);
    acc = std::move(next);
  }
  return acc;
}

template <typename Real>
typename SpinorRep<Real>::Vector SpinorRep<Real>::spinor(const SignVector& eps) const {
  if (eps.size() != k_) throw std::invalid_argument("sign vector length does not match k");
  Vector v(1);
  v(0) = Complex(1);
  for (int j = 1; j <= k_; ++j) {
    Eigen::Matrix<Complex, 2, 1> w(Complex(1), Complex(0, eps[j] > 0 ? -1 : 1));
    Vector next(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) next.template segment<2>(2 * i) = v(i) * w;
    v = std::move(next);
  }
  return v;
}

template <typename Real = double>
SpinorRep<Real> build_rep(int k) {
  return SpinorRep<Real>(k);
}

namespace detail {

template <typename Derived>
auto max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? typename Derived::RealScalar(0) : m.cwiseAbs().maxCoeff();
}

template <typename Scalar>
auto max_abs(const Eigen::SparseMatrix<Scalar>& m) {
  typename Eigen::NumTraits<Scalar>::Real out(0);
  for (int c = 0; c < m.outerSize(); ++c)
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(m, c); it; ++it) out = std::max(out, std::abs(it.value()));
  return out;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Representation integrity

/// max |e_i e_j + e_j e_i + 2 delta_ij I| over all pairs.
template <typename Real>
Real clifford_residual(const SpinorRep<Real>& rep) {
  using Sparse = typename SpinorRep<Real>::SparseMatrix;
  Sparse identity(rep.dim(), rep.dim());
  identity.setIdentity();
  Real worst = 0;
  for (int i = 1; i <= rep.n(); ++i)
    for (int j = i; j <= rep.n(); ++j) {
      Sparse anti = rep.e(i) * rep.e(j) + rep.e(j) * rep.e(i);
      if (i == j) anti += typename SpinorRep<Real>::Complex(2) * identity;
      worst = std::max(worst, detail::max_abs(anti));
    }
  return worst;
}

/// max |r_i r_j - r_j r_i|
template <typename Real>
Real commutation_residual(const SpinorRep<Real>& rep) {
  using Sparse = typename SpinorRep<Real>::SparseMatrix;
  Real worst = 0;
  for (int i = 1; i <= rep.k(); ++i)
    for (int j = i + 1; j <= rep.k(); ++j) {
      Sparse comm = rep.r(i) * rep.r(j) - rep.r(j) * rep.r(i);
      worst = std::max(worst, detail::max_abs(comm));
    }
  return worst;
}

template <typename Real>
struct PowerResiduals {
  Real alpha;        ///< |alpha^n - (-1)^{k(k+1)/2} I|
  Real alpha_plus;   ///< |alpha_+^n - I|
  Real alpha_minus;  ///< |alpha_-^n + I|
  bool exact_power;  ///< false when probed on random vectors instead of the full power
};

/// Dense power for dim <= 256; larger dimensions use four seeded random
/// probe vectors (a Freivalds-style check of alpha^n x = +-x).
template <typename Real>
PowerResiduals<Real> alpha_power_residual(const SpinorRep<Real>& rep) {
  using Matrix = typename SpinorRep<Real>::Matrix;
  using Complex = typename SpinorRep<Real>::Complex;
  const Real alpha_sign = (rep.k() * (rep.k() + 1) / 2) % 2 == 0 ? Real(1) : Real(-1);

  Matrix probe;
  const bool exact = rep.dim() <= 256;
  if (exact) {
    probe = Matrix::Identity(rep.dim(), rep.dim());
  } else {
    std::mt19937_64 rng(0x5eed);
    std::normal_distribution<double> gauss;
    probe.resize(rep.dim(), 4);
    for (Eigen::Index i = 0; i < probe.size(); ++i) probe.data()[i] = Complex(Real(gauss(rng)), Real(gauss(rng)));
    probe.colwise().normalize();
  }
  Matrix power = probe;
  for (int i = 0; i < rep.n(); ++i) power = (rep.alpha() * power).eval();

  const Real sp = rep.lift_sign(SpinStructure::Plus);
  const Real sm = rep.lift_sign(SpinStructure::Minus);
  // n is odd, so (c alpha)^n = c alpha^n for c = +-1.
  return {detail::max_abs(power - Complex(alpha_sign) * probe), detail::max_abs(Complex(sp) * power - probe),
          detail::max_abs(Complex(sm) * power + probe), exact};
}

/// max_l |alpha e_l - (sum_m R_{ml} e_m) alpha| with R the block rotation of
/// the holonomy in the frame e_1..e_n. Equivalent to alpha e_l alpha^{-1} = sum_m R_{ml} e_m.
template <typename Real>
Real conjugation_residual(const SpinorRep<Real>& rep) {
  using Sparse = typename SpinorRep<Real>::SparseMatrix;
  using Matrix = typename SpinorRep<Real>::Matrix;
  using Complex = typename SpinorRep<Real>::Complex;
  const Eigen::MatrixXd rot = holonomy_rotation(make_manifold(rep.k()));
  Real worst = 0;
  for (int l = 1; l <= rep.n(); ++l) {
    Sparse image(rep.dim(), rep.dim());
    for (int m = 1; m <= rep.n(); ++m) {
      const double coeff = rot(m - 1, l - 1);
      if (coeff != 0.0) image += Complex(Real(coeff)) * rep.e(m);
    }
    const Matrix lhs = rep.alpha() * rep.e(l);
    const Matrix rhs = image * rep.alpha();
    worst = std::max(worst, detail::max_abs(lhs - rhs));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Eigenbasis relations

template <typename Real>
struct EigenbasisReport {
  Real alpha_eigen_residual = 0;  ///< max_eps |alpha v - e^{i beta mu} v|
  Real en_eigen_residual = 0;     ///< max_eps |e_n v + i nu v|
  Real rho_residual = 0;          ///< |rho_1 w_{+-1} - e^{+-i beta} w_{+-1}|
  Real alpha_en_commutator = 0;   ///< |alpha e_n - e_n alpha|
  /// det of the Gram matrix of {v_eps} scaled by 2^{-k}; 1 for an orthogonal basis.
  std::optional<Real> normalized_gram_det;
  std::optional<std::string> first_failure;
  bool ok() const { return !first_failure.has_value(); }
};

template <typename Real>
EigenbasisReport<Real> eigenbasis_check(const SpinorRep<Real>& rep, Real tol = Real(1e-10)) {
  using Complex = typename SpinorRep<Real>::Complex;
  using Vector = typename SpinorRep<Real>::Vector;
  using Matrix = typename SpinorRep<Real>::Matrix;
  EigenbasisReport<Real> report;
  auto fail = [&](std::string what) {
    if (!report.first_failure) report.first_failure = std::move(what);
  };

  const Complex phase_plus = std::polar(Real(1), rep.beta());
  Eigen::Matrix<Complex, 2, 1> w_plus(Complex(1), Complex(0, -1));
  Eigen::Matrix<Complex, 2, 1> w_minus(Complex(1), Complex(0, 1));
  report.rho_residual = std::max(detail::max_abs(rep.rho1() * w_plus - phase_plus * w_plus),
                                 detail::max_abs(rep.rho1() * w_minus - std::conj(phase_plus) * w_minus));
  if (report.rho_residual > tol) fail("rho_1 w_{+-1} = e^{+-i beta} w_{+-1}");

  report.alpha_en_commutator = detail::max_abs(Matrix(rep.alpha() * rep.e(rep.n()) - rep.e(rep.n()) * rep.alpha()));
  if (report.alpha_en_commutator > tol) fail("alpha e_n = e_n alpha");

  const bool gram = rep.dim() <= 256;
  Matrix basis;
  if (gram) basis.resize(rep.dim(), rep.dim());

  const std::uint32_t count = std::uint32_t{1} << rep.k();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const SignVector eps(bits, rep.k());
    const Vector v = rep.spinor(eps);
    const Vector av = rep.apply_alpha(v);
    const Complex expected_phase = std::polar(Real(1), rep.beta() * Real(mu(eps)));
    const Real alpha_res = detail::max_abs(av - expected_phase * v);
    const Vector env = rep.e(rep.n()) * v;
    const Real en_res = detail::max_abs(env + Complex(0, Real(nu(eps))) * v);
    report.alpha_eigen_residual = std::max(report.alpha_eigen_residual, alpha_res);
    report.en_eigen_residual = std::max(report.en_eigen_residual, en_res);
    if (alpha_res > tol) fail("alpha v_eps = e^{i beta mu} v_eps at eps = " + eps.to_string());
    if (en_res > tol) fail("e_n v_eps = -i nu v_eps at eps = " + eps.to_string());
    if (gram) basis.col(bits) = v;
  }

  if (gram) {
    const Matrix g = (basis.adjoint() * basis) / Complex(Real(rep.dim()));
    const Real det = std::abs(g.determinant());
    report.normalized_gram_det = det;
    if (!(det > tol)) fail("v_eps are linearly independent");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Spectral oracle

/// Dirac eigenvalues (units of 2 pi) carried by equivariant sections f_b v_eps,
/// b = t e_n with t = l (Plus) or l + 1/2 (Minus), |l| <= window.
/// Keys are twice the eigenvalue so both structures stay integral.
struct WindowedSpectrum {
  int n = 0;
  SpinStructure structure = SpinStructure::Plus;
  int window = 0;
  std::map<std::int64_t, std::int64_t> multiplicity;

  std::int64_t at_twice(std::int64_t twice_eigenvalue) const {
    const auto it = multiplicity.find(twice_eigenvalue);
    return it == multiplicity.end() ? 0 : it->second;
  }
};

/// Tests g-invariance alpha_s v_eps = e^{2 pi i t / n} v_eps for every eps in
/// {-1,1}^k and every l; nu(eps) is read off from e_n v_eps = -i nu v_eps.
template <typename Real>
WindowedSpectrum windowed_spectrum(const SpinorRep<Real>& rep, const FchdManifold& m, SpinStructure s, int window,
                                   Real tol = Real(1e-9)) {
  using Complex = typename SpinorRep<Real>::Complex;
  using Vector = typename SpinorRep<Real>::Vector;
  if (m.k != rep.k()) throw std::invalid_argument("representation and manifold disagree on k");
  if (window < m.n) throw std::invalid_argument("window must be at least n");

  WindowedSpectrum out{m.n, s, window, {}};
  const Complex lift(rep.lift_sign(s));
  const int half_shift = s == SpinStructure::Plus ? 0 : 1;
  const std::uint32_t count = std::uint32_t{1} << rep.k();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const SignVector eps(bits, rep.k());
    const Vector v = rep.spinor(eps);
    const Vector gv = lift * rep.apply_alpha(v);

    const Vector iv = Complex(0, 1) * (rep.e(rep.n()) * v);
    int sign;
    if (detail::max_abs(iv - v) <= tol)
      sign = 1;
    else if (detail::max_abs(iv + v) <= tol)
      sign = -1;
    else
      throw std::runtime_error("v_eps is not an eigenvector of e_n at eps = " + eps.to_string());

    const Real scale = detail::max_abs(v);
    for (int l = -window; l <= window; ++l) {
      const std::int64_t twice_t = 2 * std::int64_t{l} + half_shift;
      const Complex phase = std::polar(Real(1), std::numbers::pi_v<Real> * Real(twice_t) / Real(m.n));
      if (detail::max_abs(gv - phase * v) <= tol * scale) ++out.multiplicity[sign * twice_t];
    }
  }
  return out;
}

/// Multiplicity per residue class mod n, over eigenvalues fully covered by the window.
struct FoldedSpectrum {
  std::vector<std::int64_t> per_class;
  /// false if two covered eigenvalues of one class carry different multiplicities
  bool consistent = true;
};

inline FoldedSpectrum fold_spectrum(const WindowedSpectrum& spectrum) {
  FoldedSpectrum out{std::vector<std::int64_t>(spectrum.n, -1), true};
  const bool plus = spectrum.structure == SpinStructure::Plus;
  // Plus: eigenvalue m, |m| <= W.  Minus: eigenvalue m + 1/2, -W <= m <= W - 1.
  const int hi = plus ? spectrum.window : spectrum.window - 1;
  for (int m = -spectrum.window; m <= hi; ++m) {
    const std::int64_t twice = 2 * std::int64_t{m} + (plus ? 0 : 1);
    const std::int64_t mult = spectrum.at_twice(twice);
    auto& slot = out.per_class[detail::floor_mod(m, spectrum.n)];
    if (slot < 0)
      slot = mult;
    else if (slot != mult)
      out.consistent = false;
  }
  for (auto& v : out.per_class)
    if (v < 0) v = 0;
  return out;
}

/// Eigenvalues 2 pi m (Plus) with m = 0 mod n and their negatives have equal multiplicity.
inline bool residue_zero_symmetric(const WindowedSpectrum& spectrum) {
  if (spectrum.structure != SpinStructure::Plus) throw std::invalid_argument("residue-zero symmetry is a Plus property");
  for (int m = spectrum.n; m <= spectrum.window; m += spectrum.n)
    if (spectrum.at_twice(2 * m) != spectrum.at_twice(-2 * m)) return false;
  return true;
}

/// Number of eps in {-1,1}^k (all of them, not only D_+) with alpha_s v_eps = v_eps.
template <typename Real>
std::int64_t kernel_dim_oracle(const SpinorRep<Real>& rep, const FchdManifold& m, SpinStructure s,
                               Real tol = Real(1e-9)) {
  using Complex = typename SpinorRep<Real>::Complex;
  using Vector = typename SpinorRep<Real>::Vector;
  if (m.k != rep.k()) throw std::invalid_argument("representation and manifold disagree on k");
  const Complex lift(rep.lift_sign(s));
  std::int64_t fixed = 0;
  const std::uint32_t count = std::uint32_t{1} << rep.k();
  for (std::uint32_t bits = 0; bits < count; ++bits) {
    const Vector v = rep.spinor(SignVector(bits, rep.k()));
    const Vector gv = lift * rep.apply_alpha(v);
    if (detail::max_abs(gv - v) <= tol * detail::max_abs(v)) ++fixed;
  }
  return fixed;
}

}  // namespace fchd
