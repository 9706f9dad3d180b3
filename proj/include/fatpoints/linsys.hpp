#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fatpoints/exactmath.hpp"
#include "fatpoints/geometry.hpp"

namespace fatpoints {

struct BiDegree {
  int d1 = 0;  // degree in (x0, x1)
  int d2 = 0;  // degree in (y0, y1)

  /// Throws std::invalid_argument for a negative component.
  static BiDegree make(int d1, int d2);

  Index dimension() const { return Index{d1 + 1} * Index{d2 + 1}; }
  friend bool operator==(const BiDegree&, const BiDegree&) = default;
};

/// Nonzero bi-homogeneous form. Entry (i, j) of coeffs multiplies
/// x0^(d1-i) x1^i y0^(d2-j) y1^j.
class BiForm {
 public:
  /// Throws std::invalid_argument for an empty or all-zero grid.
  explicit BiForm(RationalMatrix coeffs);

  const RationalMatrix& coeffs() const { return coeffs_; }
  BiDegree degree() const {
    return {static_cast<int>(coeffs_.rows()) - 1, static_cast<int>(coeffs_.cols()) - 1};
  }

  /// Scaled so the first nonzero coefficient (row-major) is 1.
  BiForm normalized() const;

  friend BiForm operator*(const BiForm& f, const BiForm& g);
  friend bool operator==(const BiForm& f, const BiForm& g) { return f.coeffs_ == g.coeffs_; }

 private:
  RationalMatrix coeffs_;
};

/// Coefficient transform for binary forms of degree d under the
/// substitution x = sub * x'. Column i is the image of x0^(d-i) x1^i.
RationalMatrix binary_substitution(const Mat2& sub, int degree);

struct ConditionLabel {
  std::size_t point = 0;
  int u = 0;  // order in the first factor
  int v = 0;  // order in the second factor
};

struct ConditionsMatrix {
  RationalMatrix matrix;
  std::vector<ConditionLabel> row_labels;
  std::vector<std::pair<int, int>> col_labels;
};

/// One row per (point, u, v) with u + v < m_i. Each row extracts the
/// coefficient of x1'^u y1'^v after moving the point to ([1:0],[1:0]);
/// rows whose monomial does not exist in degree d are zero.
ConditionsMatrix conditions_matrix(const FatPointConfig& z, BiDegree d);

/// Sum of m_i (m_i + 1) / 2.
Index condition_count(const FatPointConfig& z);

/// Dimension of forms of bi-degree d vanishing to the prescribed orders.
Index h0(const FatPointConfig& z, BiDegree d);

/// Same count with the rank taken over F_p. Never below h0(z, d).
Index h0_modp(const FatPointConfig& z, BiDegree d, std::uint64_t p);

/// First kernel basis vector as a form, or nothing when h0 = 0.
std::optional<BiForm> witness_form(const FatPointConfig& z, BiDegree d);

/// Order of vanishing of f at p. Every BiForm is nonzero, so this is finite.
int mult_at(const BiForm& f, const ProductPoint& p);

/// The normalized linear form cutting out the fiber.
BiForm fiber_form(const Fiber& fiber);

/// f / fiber_form(fiber) when the division is exact.
std::optional<BiForm> divide_by_fiber(const BiForm& f, const Fiber& fiber);

}  // namespace fatpoints
