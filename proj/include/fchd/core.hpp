// Manifold family with cyclic holonomy of odd order n = 2k + 1 = dim.
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace fchd {

/// One member of the family: k >= 1, n = 2k + 1.
///
/// `delta` stores 2 c(k), i.e. 0 when k(k+1)/2 is even and 1 when it is odd,
/// so every residue computation stays in integers.
struct FchdManifold {
  int k = 1;
  int n = 3;
  int delta = 1;

  /// k(k+1)/2, the parity source of delta and of the sign of alpha^n.
  std::int64_t triangular() const { return std::int64_t{k} * (k + 1) / 2; }

  friend bool operator==(const FchdManifold&, const FchdManifold&) = default;
};

/// Throws std::invalid_argument for k < 1.
FchdManifold make_manifold(int k);

/// Inverse of n = 2k + 1; throws std::invalid_argument unless dim is odd and >= 3.
FchdManifold manifold_from_dim(int dim);

/// The two lifts of the holonomy generator to Spin(n): alpha_+^n = 1, alpha_-^n = -1.
enum class SpinStructure { Plus, Minus };

inline constexpr SpinStructure kSpinStructures[] = {SpinStructure::Plus, SpinStructure::Minus};

std::string_view to_string(SpinStructure s);
/// Accepts "plus" / "minus"; throws std::invalid_argument otherwise.
SpinStructure parse_spin_structure(std::string_view text);

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer matrix of the holonomy generator in the lattice basis a_1..a_n.
struct HolonomyMatrix {
  IntMatrix entries;
};

HolonomyMatrix holonomy_matrix(const FchdManifold& m);

/// Coefficients c_0..c_n of det(M - zI), lowest degree first.
///
/// Exact (Faddeev-LeVerrier with checked int64 arithmetic); throws
/// std::overflow_error if an intermediate value leaves the int64 range.
std::vector<std::int64_t> char_poly(const IntMatrix& matrix);

/// Exact integer matrix power, overflow-checked.
IntMatrix integer_power(const IntMatrix& matrix, int exponent);

/// The holonomy generator in the orthonormal frame e_1..e_n: 2x2 rotation
/// blocks by 2 pi j / n on (e_{2j-1}, e_{2j}) for j = 1..k, and e_n fixed.
Eigen::MatrixXd holonomy_rotation(const FchdManifold& m);

}  // namespace fchd
