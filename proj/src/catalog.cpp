#include "fatpoints/catalog.hpp"

#include <stdexcept>

namespace fatpoints::catalog {

FatPointConfig single_point() { return make_config({ProductPoint::affine(0, 0)}); }

FatPointConfig five_jumps_sharp() {
  return make_config({
      ProductPoint::affine(0, 0),
      ProductPoint::affine(0, 1),
      ProductPoint::affine(1, 0),
      ProductPoint{ProjCoord::infinity(), ProjCoord::affine(1)},
  });
}

FatPointConfig plus_jump_two() {
  return make_config({
      ProductPoint::affine(0, 0),
      ProductPoint::affine(1, 1),
      ProductPoint::affine(1, 2),
      ProductPoint::affine(2, 2),
      ProductPoint::affine(3, 0),
      ProductPoint::affine(3, 3),
  });
}

FatPointConfig grid(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("grid sides must be positive");
  std::vector<ProductPoint> pts;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < b; ++y) pts.push_back(ProductPoint::affine(x, y));
  }
  return make_config(std::move(pts));
}

FatPointConfig grid_minus_point(int a) {
  if (a < 1) throw std::invalid_argument("grid side must be positive");
  std::vector<ProductPoint> pts;
  for (int x = 0; x < a; ++x) {
    for (int y = 0; y < a; ++y) {
      if (x != 0 || y != 0) pts.push_back(ProductPoint::affine(x, y));
    }
  }
  return make_config(std::move(pts));
}

}  // namespace fatpoints::catalog
