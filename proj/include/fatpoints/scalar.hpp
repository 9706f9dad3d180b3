#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace fatpoints {

// Expression templates are switched off so the types compose cleanly with
// Eigen's own expression machinery.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "n", "-n" or "p/q" (q > 0) into a canonical rational.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// "n" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Largest modulus accepted by the prime-field code (products fit in 64 bits).
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 32) - 1;
/// Default accelerator prime.
inline constexpr std::uint64_t kDefaultPrime = 1'000'003;

bool is_prime(std::uint64_t n);

/// Residue class modulo a prime p.
///
/// A residue built from a plain integer literal (Eigen does this for zeros
/// and ones) carries modulus 0 and adopts the modulus of whatever it is
/// combined with. Combining two residues with different non-zero moduli
/// throws std::domain_error.
class ModInt {
 public:
  ModInt() = default;
  ModInt(int literal);  // NOLINT(google-explicit-constructor): Eigen needs it
  ModInt(std::uint64_t residue, std::uint64_t modulus);

  /// Skips the primality check; the caller has validated the modulus.
  static ModInt trusted(std::uint64_t residue, std::uint64_t modulus) {
    ModInt r;
    r.residue_ = residue % modulus;
    r.modulus_ = modulus;
    return r;
  }

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  ModInt inverse() const;

  ModInt& operator+=(const ModInt& o);
  ModInt& operator-=(const ModInt& o);
  ModInt& operator*=(const ModInt& o);
  ModInt& operator/=(const ModInt& o) { return *this *= o.inverse(); }

  friend ModInt operator+(ModInt a, const ModInt& b) { return a += b; }
  friend ModInt operator-(ModInt a, const ModInt& b) { return a -= b; }
  friend ModInt operator*(ModInt a, const ModInt& b) { return a *= b; }
  friend ModInt operator/(ModInt a, const ModInt& b) { return a /= b; }
  ModInt operator-() const { return ModInt{} - *this; }

  friend bool operator==(const ModInt& a, const ModInt& b) {
    return a.residue_ == b.residue_;
  }

 private:
  std::uint64_t join(const ModInt& o) const;

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Reduces a rational modulo p. Throws std::domain_error when p divides the
/// denominator.
ModInt reduce_mod(const Rational& value, std::uint64_t p);

namespace detail {
ModInt reduce_mod_trusted(const Rational& value, std::uint64_t p);
}

}  // namespace fatpoints

namespace Eigen {

template <>
struct NumTraits<fatpoints::Rational> : GenericNumTraits<fatpoints::Rational> {
  using Real = fatpoints::Rational;
  using NonInteger = fatpoints::Rational;
  using Nested = fatpoints::Rational;
  using Literal = fatpoints::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<fatpoints::Integer> : GenericNumTraits<fatpoints::Integer> {
  using Real = fatpoints::Integer;
  using NonInteger = fatpoints::Rational;
  using Nested = fatpoints::Integer;
  using Literal = fatpoints::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<fatpoints::ModInt> : GenericNumTraits<fatpoints::ModInt> {
  using Real = fatpoints::ModInt;
  using NonInteger = fatpoints::ModInt;
  using Nested = fatpoints::ModInt;
  using Literal = fatpoints::ModInt;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
