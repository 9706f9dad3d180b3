#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "fatpoints/scalar.hpp"

namespace fatpoints {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using ModMatrix = Matrix<ModInt>;
using ModVector = Vector<ModInt>;

/// Row echelon form of an integer matrix produced by fraction-free
/// elimination. Row k is zero left of pivot_cols[k]; only the rank many
/// nonzero rows are kept.
struct IntegerEchelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<Index> pivot_cols;
  Index cols = 0;

  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

/// Fraction-free (Bareiss) elimination. Each row is first cleared of
/// denominators and divided by its content; pivots are the largest entries
/// in magnitude within the column.
IntegerEchelon bareiss_echelon(const RationalMatrix& m);

Index rank(const RationalMatrix& m);
Index rank(const ModMatrix& m);

/// cols - rank independent vectors spanning the right kernel, one per free
/// column in ascending order, each scaled so its first nonzero entry is 1.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
std::vector<ModVector> kernel_basis(const ModMatrix& m);

/// The modulus shared by every entry. Entries built from literals (modulus 0)
/// are ignored; an all-literal matrix reports 0. Mixed moduli throw
/// std::invalid_argument.
std::uint64_t common_modulus(const ModMatrix& m);

/// Entrywise reduction. p must be a prime <= kMaxModulus; a denominator
/// divisible by p throws std::domain_error naming the entry.
ModMatrix reduce_mod(const RationalMatrix& m, std::uint64_t p);

/// Rank over F_p of the reduction of m. Never exceeds rank(m).
Index rank_modp(const RationalMatrix& m, std::uint64_t p);

/// Expression-friendly overloads: evaluate and dispatch on the scalar type.
template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rank(Matrix<typename Derived::Scalar>(m));
}

template <typename Derived>
auto kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return kernel_basis(Matrix<typename Derived::Scalar>(m));
}

}  // namespace fatpoints
