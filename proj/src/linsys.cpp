#include "fatpoints/linsys.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace fatpoints {

namespace {

using Poly = std::vector<Rational>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly power(const Poly& base, int e) {
  Poly out{Rational(1)};
  for (int k = 0; k < e; ++k) out = multiply(out, base);
  return out;
}

Mat2 inverse(const Mat2& a) {
  const Rational det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  Mat2 inv;
  inv << a(1, 1) / det, -a(0, 1) / det, -a(1, 0) / det, a(0, 0) / det;
  return inv;
}

// (d+1)-coefficient divisor of a binary form by l0*x0 + l1*x1, column-wise.
std::optional<RationalMatrix> divide_rows(const RationalMatrix& c, const Rational& l0,
                                          const Rational& l1) {
  const Index deg = c.rows() - 1;
  if (deg < 1) return std::nullopt;
  RationalMatrix q(deg, c.cols());
  for (Index j = 0; j < c.cols(); ++j) {
    if (l0 != 0) {
      Rational carry(0);
      for (Index i = 0; i < deg; ++i) {
        q(i, j) = (c(i, j) - l1 * carry) / l0;
        carry = q(i, j);
      }
    } else {
      for (Index i = 0; i < deg; ++i) q(i, j) = c(i + 1, j) / l1;
    }
  }
  // Exactness check: multiply back.
  for (Index j = 0; j < c.cols(); ++j) {
    for (Index i = 0; i <= deg; ++i) {
      Rational e(0);
      if (i < deg) e += l0 * q(i, j);
      if (i > 0) e += l1 * q(i - 1, j);
      if (e != c(i, j)) return std::nullopt;
    }
  }
  return q;
}

}  // namespace

BiDegree BiDegree::make(int d1, int d2) {
  if (d1 < 0 || d2 < 0) {
    throw std::invalid_argument("invalid bi-degree (" + std::to_string(d1) + "," +
                                std::to_string(d2) + ")");
  }
  return {d1, d2};
}

BiForm::BiForm(RationalMatrix coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) throw std::invalid_argument("form without coefficients");
  for (Index i = 0; i < coeffs_.rows(); ++i) {
    for (Index j = 0; j < coeffs_.cols(); ++j) {
      if (coeffs_(i, j) != 0) return;
    }
  }
  throw std::invalid_argument("zero form");
}

BiForm BiForm::normalized() const {
  for (Index i = 0; i < coeffs_.rows(); ++i) {
    for (Index j = 0; j < coeffs_.cols(); ++j) {
      if (coeffs_(i, j) != 0) {
        const Rational lead = coeffs_(i, j);
        return BiForm(RationalMatrix(coeffs_ / lead));
      }
    }
  }
  return *this;  // unreachable: forms are nonzero
}

BiForm operator*(const BiForm& f, const BiForm& g) {
  const auto& a = f.coeffs_;
  const auto& b = g.coeffs_;
  RationalMatrix c = RationalMatrix::Constant(a.rows() + b.rows() - 1, a.cols() + b.cols() - 1,
                                              Rational(0));
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      c.block(i, j, b.rows(), b.cols()) += a(i, j) * b;
    }
  }
  return BiForm(std::move(c));
}

RationalMatrix binary_substitution(const Mat2& sub, int degree) {
  // x0 -> sub(0,0) + sub(0,1) t and x1 -> sub(1,0) + sub(1,1) t in the
  // affine chart x0' = 1, x1' = t.
  const Poly x0{sub(0, 0), sub(0, 1)};
  const Poly x1{sub(1, 0), sub(1, 1)};
  RationalMatrix t = RationalMatrix::Constant(degree + 1, degree + 1, Rational(0));
  for (int i = 0; i <= degree; ++i) {
    const Poly image = multiply(power(x0, degree - i), power(x1, i));
    for (int u = 0; u <= degree; ++u) t(u, i) = image[static_cast<std::size_t>(u)];
  }
  return t;
}

Index condition_count(const FatPointConfig& z) {
  Index n = 0;
  for (int m : z.mults()) n += Index{m} * (m + 1) / 2;
  return n;
}

ConditionsMatrix conditions_matrix(const FatPointConfig& z, BiDegree d) {
  d = BiDegree::make(d.d1, d.d2);
  ConditionsMatrix out;
  out.matrix = RationalMatrix::Constant(condition_count(z), d.dimension(), Rational(0));
  for (int i = 0; i <= d.d1; ++i) {
    for (int j = 0; j <= d.d2; ++j) out.col_labels.emplace_back(i, j);
  }
  Index row = 0;
  for (std::size_t k = 0; k < z.size(); ++k) {
    const auto [a, b] = chart_transform(z.points()[k]);
    const RationalMatrix tx = binary_substitution(inverse(a), d.d1);
    const RationalMatrix ty = binary_substitution(inverse(b), d.d2);
    const int m = z.mults()[k];
    for (int order = 0; order < m; ++order) {
      for (int u = order; u >= 0; --u) {
        const int v = order - u;
        out.row_labels.push_back({k, u, v});
        if (u <= d.d1 && v <= d.d2) {
          for (int i = 0; i <= d.d1; ++i) {
            if (tx(u, i) == 0) continue;
            for (int j = 0; j <= d.d2; ++j) {
              out.matrix(row, Index{i} * (d.d2 + 1) + j) = tx(u, i) * ty(v, j);
            }
          }
        }
        ++row;
      }
    }
  }
  return out;
}

Index h0(const FatPointConfig& z, BiDegree d) {
  return d.dimension() - rank(conditions_matrix(z, d).matrix);
}

Index h0_modp(const FatPointConfig& z, BiDegree d, std::uint64_t p) {
  return d.dimension() - rank_modp(conditions_matrix(z, d).matrix, p);
}

std::optional<BiForm> witness_form(const FatPointConfig& z, BiDegree d) {
  const auto basis = kernel_basis(conditions_matrix(z, d).matrix);
  if (basis.empty()) return std::nullopt;
  const RationalVector& v = basis.front();
  RationalMatrix coeffs(d.d1 + 1, d.d2 + 1);
  for (int i = 0; i <= d.d1; ++i) {
    for (int j = 0; j <= d.d2; ++j) coeffs(i, j) = v(Index{i} * (d.d2 + 1) + j);
  }
  return BiForm(std::move(coeffs));
}

int mult_at(const BiForm& f, const ProductPoint& p) {
  const auto [a, b] = chart_transform(p);
  const BiDegree d = f.degree();
  const RationalMatrix moved = binary_substitution(inverse(a), d.d1) * f.coeffs() *
                               binary_substitution(inverse(b), d.d2).transpose();
  int best = std::numeric_limits<int>::max();
  for (Index u = 0; u < moved.rows(); ++u) {
    for (Index v = 0; v < moved.cols(); ++v) {
      if (moved(u, v) != 0) best = std::min(best, static_cast<int>(u + v));
    }
  }
  return best;
}

BiForm fiber_form(const Fiber& fiber) {
  // [a:b] is cut out by b*z0 - a*z1.
  const Rational& a = fiber.base.u();
  const Rational& b = fiber.base.v();
  RationalMatrix c = fiber.direction == FiberDirection::vertical ? RationalMatrix(2, 1)
                                                                 : RationalMatrix(1, 2);
  c(0) = b;
  c(1) = -a;
  return BiForm(std::move(c)).normalized();
}

std::optional<BiForm> divide_by_fiber(const BiForm& f, const Fiber& fiber) {
  const RationalMatrix l = fiber_form(fiber).coeffs();
  if (fiber.direction == FiberDirection::vertical) {
    auto q = divide_rows(f.coeffs(), l(0), l(1));
    if (!q) return std::nullopt;
    return BiForm(std::move(*q));
  }
  auto q = divide_rows(f.coeffs().transpose(), l(0), l(1));
  if (!q) return std::nullopt;
  return BiForm(RationalMatrix(q->transpose()));
}

}  // namespace fatpoints
