#include "fatpoints/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace fatpoints {

namespace {

std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

ProjCoord::ProjCoord(const Rational& u, const Rational& v) {
  if (u == 0 && v == 0) throw std::invalid_argument("not a projective point");
  if (u != 0) {
    u_ = 1;
    v_ = v / u;
  } else {
    u_ = 0;
    v_ = 1;
  }
}

std::strong_ordering operator<=>(const ProjCoord& a, const ProjCoord& b) {
  if (auto c = compare(a.u_, b.u_); c != 0) return c;
  return compare(a.v_, b.v_);
}

std::strong_ordering operator<=>(const ProductPoint& a, const ProductPoint& b) {
  if (auto c = a.x <=> b.x; c != 0) return c;
  return a.y <=> b.y;
}

ProductPoint normalize_point(const RawPair& rawx, const RawPair& rawy) {
  return {ProjCoord(rawx.first, rawx.second), ProjCoord(rawy.first, rawy.second)};
}

int FatPointConfig::max_mult() const {
  return mults_.empty() ? 0 : *std::max_element(mults_.begin(), mults_.end());
}

FatPointConfig FatPointConfig::scaled(int factor) const {
  if (factor < 1) throw std::invalid_argument("scale factor must be positive");
  FatPointConfig out = *this;
  for (int& m : out.mults_) m *= factor;
  return out;
}

FatPointConfig FatPointConfig::with_uniform(int m) const {
  if (m < 1) throw std::invalid_argument("multiplicity must be positive");
  FatPointConfig out = *this;
  std::fill(out.mults_.begin(), out.mults_.end(), m);
  return out;
}

std::strong_ordering operator<=>(const FatPointConfig& a, const FatPointConfig& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.points_[i] <=> b.points_[i]; c != 0) return c;
    if (auto c = a.mults_[i] <=> b.mults_[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

FatPointConfig make_config(std::vector<ProductPoint> points, std::vector<int> mults) {
  if (points.size() != mults.size()) {
    throw std::invalid_argument("points and multiplicities differ in length");
  }
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i : order) {
    if (mults[i] < 0) {
      throw std::invalid_argument("negative multiplicity at index " + std::to_string(i));
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw std::invalid_argument("duplicate point at indices " + std::to_string(order[k - 1]) +
                                  " and " + std::to_string(order[k]));
    }
  }
  FatPointConfig z;
  for (std::size_t i : order) {
    if (mults[i] == 0) continue;
    z.points_.push_back(points[i]);
    z.mults_.push_back(mults[i]);
  }
  return z;
}

FatPointConfig make_config(std::vector<ProductPoint> points) {
  std::vector<int> ones(points.size(), 1);
  return make_config(std::move(points), std::move(ones));
}

GridInfo is_grid(const FatPointConfig& z) {
  std::set<ProjCoord> xs, ys;
  for (const auto& p : z.points()) {
    xs.insert(p.x);
    ys.insert(p.y);
  }
  GridInfo info;
  info.vertical.assign(xs.begin(), xs.end());
  info.horizontal.assign(ys.begin(), ys.end());
  const std::set<ProductPoint> present(z.points().begin(), z.points().end());
  for (const auto& x : info.vertical) {
    for (const auto& y : info.horizontal) {
      if (!present.contains(ProductPoint{x, y})) {
        info.missing = ProductPoint{x, y};
        return info;
      }
    }
  }
  info.is_grid = true;
  return info;
}

std::optional<Fiber> on_single_fiber(const FatPointConfig& z) {
  if (z.empty()) throw std::invalid_argument("empty configuration has no fiber");
  const auto& pts = z.points();
  const auto all = [&](const Fiber& f) {
    return std::all_of(pts.begin(), pts.end(), [&](const ProductPoint& p) { return f.contains(p); });
  };
  if (Fiber v{FiberDirection::vertical, pts.front().x}; all(v)) return v;
  if (Fiber h{FiberDirection::horizontal, pts.front().y}; all(h)) return h;
  return std::nullopt;
}

Mat2 chart_matrix(const ProjCoord& c) {
  Mat2 a;
  if (c.is_infinity()) {
    a << Rational(0), Rational(1), Rational(1), Rational(0);
  } else {
    a << Rational(1), Rational(0), -c.v(), Rational(1);
  }
  return a;
}

std::pair<Mat2, Mat2> chart_transform(const ProductPoint& p) {
  return {chart_matrix(p.x), chart_matrix(p.y)};
}

ProjCoord apply(const Mat2& m, const ProjCoord& c) {
  Eigen::Matrix<Rational, 2, 1> w;
  w << c.u(), c.v();
  const Eigen::Matrix<Rational, 2, 1> r = m * w;
  return ProjCoord(r(0), r(1));
}

}  // namespace fatpoints
