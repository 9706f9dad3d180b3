#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fatpoints/scalar.hpp"

namespace fatpoints {

/// A point [u:v] of P^1 in canonical form: the first nonzero entry is 1.
class ProjCoord {
 public:
  /// Throws std::invalid_argument("not a projective point") for (0,0).
  ProjCoord(const Rational& u, const Rational& v);

  /// The affine point [1:t].
  static ProjCoord affine(const Rational& t) { return ProjCoord(Rational(1), t); }
  /// [0:1].
  static ProjCoord infinity() { return ProjCoord(Rational(0), Rational(1)); }

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  bool is_infinity() const { return u_ == 0; }

  friend bool operator==(const ProjCoord&, const ProjCoord&) = default;
  friend std::strong_ordering operator<=>(const ProjCoord& a, const ProjCoord& b);

 private:
  Rational u_, v_;
};

struct ProductPoint {
  ProjCoord x;  // first factor
  ProjCoord y;  // second factor

  static ProductPoint affine(const Rational& x, const Rational& y) {
    return {ProjCoord::affine(x), ProjCoord::affine(y)};
  }

  friend bool operator==(const ProductPoint&, const ProductPoint&) = default;
  friend std::strong_ordering operator<=>(const ProductPoint& a, const ProductPoint& b);
};

using RawPair = std::pair<Rational, Rational>;

ProductPoint normalize_point(const RawPair& rawx, const RawPair& rawy);

/// Distinct points with positive multiplicities, sorted lexicographically.
class FatPointConfig {
 public:
  FatPointConfig() = default;

  const std::vector<ProductPoint>& points() const { return points_; }
  const std::vector<int>& mults() const { return mults_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  int max_mult() const;

  /// Every multiplicity multiplied by factor (factor >= 1).
  FatPointConfig scaled(int factor) const;
  /// Same points, every multiplicity set to m (m >= 1).
  FatPointConfig with_uniform(int m) const;
  /// Same points, all multiplicities 1.
  FatPointConfig support() const { return with_uniform(1); }

  friend bool operator==(const FatPointConfig&, const FatPointConfig&) = default;
  friend std::strong_ordering operator<=>(const FatPointConfig& a, const FatPointConfig& b);

 private:
  friend FatPointConfig make_config(std::vector<ProductPoint>, std::vector<int>);
  std::vector<ProductPoint> points_;
  std::vector<int> mults_;
};

/// Drops zero multiplicities, rejects negative ones and duplicates, sorts.
FatPointConfig make_config(std::vector<ProductPoint> points, std::vector<int> mults);
/// All multiplicities 1.
FatPointConfig make_config(std::vector<ProductPoint> points);

struct GridInfo {
  bool is_grid = false;
  std::vector<ProjCoord> vertical;    // distinct x-coordinates
  std::vector<ProjCoord> horizontal;  // distinct y-coordinates
  std::optional<ProductPoint> missing;  // a product pair absent from Z
};

GridInfo is_grid(const FatPointConfig& z);

enum class FiberDirection { vertical, horizontal };

/// Vertical fiber {x = base} or horizontal fiber {y = base}.
struct Fiber {
  FiberDirection direction;
  ProjCoord base;

  bool contains(const ProductPoint& p) const {
    return (direction == FiberDirection::vertical ? p.x : p.y) == base;
  }
  friend bool operator==(const Fiber&, const Fiber&) = default;
};

/// A fiber through every point, vertical preferred. Throws on empty input.
std::optional<Fiber> on_single_fiber(const FatPointConfig& z);

using Mat2 = Eigen::Matrix<Rational, 2, 2>;

/// Invertible A, B with A * (x.u, x.v)^T proportional to (1,0)^T and
/// likewise B for the y coordinate.
std::pair<Mat2, Mat2> chart_transform(const ProductPoint& p);

/// The 2x2 matrix sending [u:v] to [1:0].
Mat2 chart_matrix(const ProjCoord& c);

/// Canonical form of M * (c.u, c.v)^T.
ProjCoord apply(const Mat2& m, const ProjCoord& c);

}  // namespace fatpoints
