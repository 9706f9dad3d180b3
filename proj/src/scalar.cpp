#include "fatpoints/scalar.hpp"

#include <regex>

namespace fatpoints {

Rational parse_rational(std::string_view text) {
  static const std::regex pattern(R"(([+-]?[0-9]+)(/([0-9]+))?)");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_match(text.begin(), text.end(), match, pattern)) {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "'");
  }
  std::string num = match[1].str();
  if (num.front() == '+') num.erase(0, 1);
  Integer numerator(num);
  Integer denominator(1);
  if (match[3].matched) {
    denominator = Integer(match[3].str());
    if (denominator == 0) {
      throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
  }
  return Rational(numerator, denominator);
}

std::string to_string(const Rational& value) { return value.str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

ModInt::ModInt(int literal) {
  if (literal < 0) {
    throw std::domain_error("negative literal residue without a modulus");
  }
  residue_ = static_cast<std::uint64_t>(literal);
}

ModInt::ModInt(std::uint64_t residue, std::uint64_t modulus)
    : residue_(residue % modulus), modulus_(modulus) {
  if (modulus > kMaxModulus || !is_prime(modulus)) {
    throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                " is not a prime <= 2^32-1");
  }
}

std::uint64_t ModInt::join(const ModInt& o) const {
  if (modulus_ == 0) return o.modulus_;
  if (o.modulus_ != 0 && o.modulus_ != modulus_) {
    throw std::domain_error("mixed moduli " + std::to_string(modulus_) + " and " +
                            std::to_string(o.modulus_));
  }
  return modulus_;
}

ModInt& ModInt::operator+=(const ModInt& o) {
  modulus_ = join(o);
  residue_ += o.residue_;
  if (modulus_ != 0) residue_ %= modulus_;
  return *this;
}

ModInt& ModInt::operator-=(const ModInt& o) {
  modulus_ = join(o);
  if (modulus_ == 0) {
    if (o.residue_ > residue_) {
      throw std::domain_error("negative literal residue without a modulus");
    }
    residue_ -= o.residue_;
    return *this;
  }
  residue_ = (residue_ + modulus_ - o.residue_ % modulus_) % modulus_;
  return *this;
}

ModInt& ModInt::operator*=(const ModInt& o) {
  modulus_ = join(o);
  residue_ *= o.residue_;
  if (modulus_ != 0) residue_ %= modulus_;
  return *this;
}

ModInt ModInt::inverse() const {
  if (modulus_ == 0) {
    if (residue_ == 1) return *this;
    throw std::domain_error("inverse of a literal residue without a modulus");
  }
  if (residue_ == 0) throw std::domain_error("division by zero residue");
  std::uint64_t result = 1;
  std::uint64_t base = residue_;
  for (std::uint64_t e = modulus_ - 2; e != 0; e >>= 1) {
    if (e & 1) result = result * base % modulus_;
    base = base * base % modulus_;
  }
  return trusted(result, modulus_);
}

ModInt reduce_mod(const Rational& value, std::uint64_t p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not a prime <= 2^32-1");
  }
  return detail::reduce_mod_trusted(value, p);
}

namespace detail {

ModInt reduce_mod_trusted(const Rational& value, std::uint64_t p) {
  const Integer num = numerator(value);
  const Integer den = denominator(value);
  if (den % p == 0) {
    throw std::domain_error("denominator of " + value.str() + " is divisible by " +
                            std::to_string(p));
  }
  Integer n = num % p;
  if (n < 0) n += p;
  const auto d = ModInt::trusted(static_cast<std::uint64_t>(den % p), p);
  return ModInt::trusted(static_cast<std::uint64_t>(n), p) / d;
}

}  // namespace detail

}  // namespace fatpoints
