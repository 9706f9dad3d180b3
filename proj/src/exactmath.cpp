#include "fatpoints/exactmath.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include <gmp.h>

namespace fatpoints {

namespace {

mpz_ptr raw(Integer& x) { return x.backend().data(); }
mpz_srcptr raw(const Integer& x) { return x.backend().data(); }

std::vector<Integer> integral_row(const RationalMatrix& m, Index i) {
  Integer scale(1);
  for (Index j = 0; j < m.cols(); ++j) {
    mpz_lcm(raw(scale), raw(scale), mpq_denref(m(i, j).backend().data()));
  }
  std::vector<Integer> row(static_cast<std::size_t>(m.cols()));
  Integer content(0);
  for (Index j = 0; j < m.cols(); ++j) {
    const auto* q = m(i, j).backend().data();
    Integer& e = row[static_cast<std::size_t>(j)];
    mpz_divexact(raw(e), raw(scale), mpq_denref(q));
    mpz_mul(raw(e), raw(e), mpq_numref(q));
    mpz_gcd(raw(content), raw(content), raw(e));
  }
  if (content > 1) {
    for (auto& e : row) mpz_divexact(raw(e), raw(e), raw(content));
  }
  return row;
}

struct ModEchelon {
  std::vector<std::vector<std::uint64_t>> rows;  // reduced: pivot 1, zero above
  std::vector<Index> pivot_cols;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  return ModInt::trusted(a, p).inverse().residue();
}

// Gauss-Jordan over F_p on plain residues.
ModEchelon mod_rref(std::vector<std::vector<std::uint64_t>> a, Index cols,
                    std::uint64_t p) {
  ModEchelon out;
  std::size_t r = 0;
  for (Index c = 0; c < cols && r < a.size(); ++c) {
    const auto col = static_cast<std::size_t>(c);
    std::size_t piv = r;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const std::uint64_t inv = inverse_mod(a[r][col], p);
    for (std::size_t j = col; j < a[r].size(); ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][col] == 0) continue;
      const std::uint64_t f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j) {
        a[i][j] = (a[i][j] + p * p - f * a[r][j]) % p;
      }
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

std::vector<std::vector<std::uint64_t>> residues(const ModMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(static_cast<std::size_t>(m.rows()),
                                            std::vector<std::uint64_t>(m.cols()));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      a[i][j] = p == 0 ? m(i, j).residue() : m(i, j).residue() % p;
    }
  }
  return a;
}

std::uint64_t required_modulus(const ModMatrix& m) {
  const std::uint64_t p = common_modulus(m);
  if (p == 0) {
    for (Index i = 0; i < m.rows(); ++i) {
      for (Index j = 0; j < m.cols(); ++j) {
        if (!m(i, j).is_zero()) {
          throw std::invalid_argument("modular matrix carries no modulus");
        }
      }
    }
  }
  return p;
}

}  // namespace

IntegerEchelon bareiss_echelon(const RationalMatrix& m) {
  IntegerEchelon out;
  out.cols = m.cols();
  std::vector<std::vector<Integer>> a;
  a.reserve(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) a.push_back(integral_row(m, i));

  const std::size_t n = a.size();
  const auto cols = static_cast<std::size_t>(m.cols());
  Integer prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t best = n;
    for (std::size_t i = r; i < n; ++i) {
      if (mpz_sgn(raw(a[i][c])) == 0) continue;
      if (best == n || mpz_cmpabs(raw(a[i][c]), raw(a[best][c])) > 0) best = i;
    }
    if (best == n) continue;
    std::swap(a[r], a[best]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < n; ++i) {
      auto& row = a[i];
      const Integer factor = row[c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_ptr e = raw(row[j]);
        mpz_mul(e, e, raw(pivot));
        mpz_submul(e, raw(factor), raw(a[r][j]));
        mpz_divexact(e, e, raw(prev));
      }
      row[c] = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(static_cast<Index>(c));
    ++r;
  }
  a.resize(r);
  out.rows = std::move(a);
  return out;
}

Index rank(const RationalMatrix& m) { return bareiss_echelon(m).rank(); }

Index rank(const ModMatrix& m) {
  const std::uint64_t p = required_modulus(m);
  if (p == 0) return 0;
  return static_cast<Index>(mod_rref(residues(m, p), m.cols(), p).pivot_cols.size());
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const IntegerEchelon ech = bareiss_echelon(m);
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (Index c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // Integral back substitution: x stays an integer vector up to a common
    // scale that is divided out at the end.
    std::vector<Integer> x(cols, Integer(0));
    x[f] = 1;
    Integer s, g, scale;
    for (auto k = static_cast<std::ptrdiff_t>(ech.rows.size()) - 1; k >= 0; --k) {
      const auto& row = ech.rows[static_cast<std::size_t>(k)];
      const auto pc = static_cast<std::size_t>(ech.pivot_cols[static_cast<std::size_t>(k)]);
      s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (mpz_sgn(raw(x[j])) != 0) mpz_addmul(raw(s), raw(row[j]), raw(x[j]));
      }
      if (mpz_sgn(raw(s)) == 0) continue;
      mpz_gcd(raw(g), raw(s), raw(row[pc]));
      mpz_divexact(raw(scale), raw(row[pc]), raw(g));
      if (scale != 1) {
        for (auto& e : x) mpz_mul(raw(e), raw(e), raw(scale));
      }
      mpz_divexact(raw(x[pc]), raw(s), raw(g));
      mpz_neg(raw(x[pc]), raw(x[pc]));
    }
    const auto lead = std::find_if(x.begin(), x.end(), [](const Integer& e) { return e != 0; });
    const Integer leading = *lead;
    RationalVector v(m.cols());
    for (std::size_t j = 0; j < cols; ++j) v(static_cast<Index>(j)) = Rational(x[j], leading);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<ModVector> kernel_basis(const ModMatrix& m) {
  const std::uint64_t p = required_modulus(m);
  std::vector<ModVector> basis;
  if (p == 0) {
    // All-zero matrix without a modulus: the kernel is the whole space, but
    // there is no field to express it in.
    if (m.cols() > 0) throw std::invalid_argument("modular matrix carries no modulus");
    return basis;
  }
  const ModEchelon ech = mod_rref(residues(m, p), m.cols(), p);
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (Index c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    ModVector v = ModVector::Constant(m.cols(), ModInt::trusted(0, p));
    v(static_cast<Index>(f)) = ModInt::trusted(1, p);
    for (std::size_t k = 0; k < ech.rows.size(); ++k) {
      const auto pc = ech.pivot_cols[k];
      v(pc) = ModInt::trusted((p - ech.rows[k][f]) % p, p);
    }
    // The first nonzero entry is either a pivot position left of f or f itself.
    Index lead = 0;
    while (v(lead).is_zero()) ++lead;
    const ModInt inv = v(lead).inverse();
    for (Index j = 0; j < v.size(); ++j) v(j) *= inv;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::uint64_t common_modulus(const ModMatrix& m) {
  std::uint64_t p = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const std::uint64_t q = m(i, j).modulus();
      if (q == 0) continue;
      if (p == 0) {
        p = q;
      } else if (q != p) {
        throw std::invalid_argument("mixed-modulus matrix: entry (" + std::to_string(i) +
                                    "," + std::to_string(j) + ") has modulus " +
                                    std::to_string(q) + ", expected " + std::to_string(p));
      }
    }
  }
  return p;
}

ModMatrix reduce_mod(const RationalMatrix& m, std::uint64_t p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not a prime <= 2^32-1");
  }
  ModMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) % p == 0) {
        throw std::domain_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") = " + m(i, j).str() + " has a denominator divisible by " +
                                std::to_string(p));
      }
      out(i, j) = detail::reduce_mod_trusted(m(i, j), p);
    }
  }
  return out;
}

Index rank_modp(const RationalMatrix& m, std::uint64_t p) { return rank(reduce_mod(m, p)); }

}  // namespace fatpoints
