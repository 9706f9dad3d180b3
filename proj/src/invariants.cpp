#include "fatpoints/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace fatpoints {

namespace {

// Answers "is there a section in bi-degree d?" for one scan. In modular
// mode a zero modular h0 is final (the modular rank never exceeds the
// rational one), a positive one is confirmed over the rationals, and after
// the first failed confirmation the rest of the scan runs rationally.
class SectionProbe {
 public:
  SectionProbe(const FatPointConfig& z, const AlphaOptions& opts) : z_(z), modp_(opts.modp) {
    conditions_ = condition_count(z);
  }

  bool operator()(BiDegree d) {
    if (d.dimension() > conditions_) return true;
    if (modp_ && !rational_only_) {
      if (h0_modp(z_, d, *modp_) == 0) return false;
      if (h0(z_, d) > 0) return true;
      rational_only_ = true;
      return false;
    }
    return h0(z_, d) > 0;
  }

 private:
  const FatPointConfig& z_;
  std::optional<std::uint64_t> modp_;
  Index conditions_ = 0;
  bool rational_only_ = false;
};

// A union of fibers through all points, each taken max_mult times.
int degree_bound(const FatPointConfig& z) {
  std::set<ProjCoord> xs, ys;
  for (const auto& p : z.points()) {
    xs.insert(p.x);
    ys.insert(p.y);
  }
  return z.max_mult() * static_cast<int>(std::min(xs.size(), ys.size()));
}

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::star ? "star" : "plus"; }

Variant parse_variant(std::string_view text) {
  if (text == "star") return Variant::star;
  if (text == "plus") return Variant::plus;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "'");
}

AlphaResult compute_alpha(const FatPointConfig& z, Variant variant, const AlphaOptions& opts) {
  if (z.empty()) return {0, {0, 0}};
  SectionProbe has_section(z, opts);
  const int bound = degree_bound(z);
  for (int k = 0; k <= bound; ++k) {
    if (variant == Variant::star) {
      if (has_section({k, k})) return {k, {k, k}};
      continue;
    }
    for (int k1 = 0; k1 <= k; ++k1) {
      if (has_section({k1, k - k1})) return {k, {k1, k - k1}};
    }
  }
  throw std::logic_error("no section found below the fiber-union bound " +
                         std::to_string(bound));
}

int alpha_weighted(const FatPointConfig& z, Variant variant, const AlphaOptions& opts) {
  return compute_alpha(z, variant, opts).alpha;
}

int alpha(const FatPointConfig& z, Variant variant, int m, const AlphaOptions& opts) {
  if (m < 1) throw std::invalid_argument("symbolic power index must be positive");
  return alpha_weighted(z.scaled(m), variant, opts);
}

int alpha_star(const FatPointConfig& z, int m, const AlphaOptions& opts) {
  return alpha(z, Variant::star, m, opts);
}

int alpha_plus(const FatPointConfig& z, int m, const AlphaOptions& opts) {
  return alpha(z, Variant::plus, m, opts);
}

std::vector<int> alpha_sequence(const FatPointConfig& z, Variant variant, int count,
                                const AlphaOptions& opts) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int m = 1; m <= count; ++m) out.push_back(alpha(z, variant, m, opts));
  return out;
}

JumpVector jumps_from_alphas(const std::vector<int>& alphas, Variant variant) {
  JumpVector j{variant, {}};
  int prev = 0;
  for (int a : alphas) {
    j.values.push_back(a - prev);
    prev = a;
  }
  return j;
}

JumpVector jump_vector(const FatPointConfig& z, int count, Variant variant,
                       const AlphaOptions& opts) {
  if (count < 1) throw std::invalid_argument("jump vector length must be positive");
  return jumps_from_alphas(alpha_sequence(z, variant, count, opts), variant);
}

GridSequenceState grid_sequence(int a, int b, int m) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("grid recursion needs a, b >= 1 (got " + std::to_string(a) +
                                "," + std::to_string(b) + ")");
  }
  if (m < 0) throw std::invalid_argument("negative step index");
  GridSequenceState s;
  for (int k = 1; k <= m; ++k) {
    if (s.a_m + a <= s.b_m + b) {
      s.a_m += a;
    } else {
      s.b_m += b;
    }
  }
  s.m = m;
  return s;
}

long long grid_alpha_star(int a, int b, int m) {
  if (m < 1) throw std::invalid_argument("symbolic power index must be positive");
  const auto s = grid_sequence(a, b, m);
  return std::max(s.a_m, s.b_m);
}

std::pair<int, int> recover_grid(const JumpVector& jumps) {
  if (jumps.variant != Variant::star) {
    throw std::invalid_argument("grid recovery needs a star jump vector");
  }
  if (jumps.values.empty()) throw std::invalid_argument("jump vector too short");
  const int a = jumps.values.front();
  int b = 0;
  for (int f : jumps.values) {
    b += f;
    if (f < a) return {a, b};
  }
  throw std::invalid_argument("jump vector too short");
}

long long grid_minus_point_alpha(int a, int m) {
  if (a < 5) throw std::invalid_argument("closed form holds only for a >= 5");
  if (m < 1) throw std::invalid_argument("symbolic power index must be positive");
  const long long k = (m + 1) / 2;
  return m % 2 == 1 ? k * a - 1 : k * a;
}

WaldschmidtBounds waldschmidt_bounds(const FatPointConfig& z, Variant variant, int count,
                                     const AlphaOptions& opts) {
  if (z.empty()) throw std::invalid_argument("Waldschmidt bounds need a nonempty configuration");
  if (count < 1) throw std::invalid_argument("need at least one symbolic power");
  const auto alphas = alpha_sequence(z, variant, count, opts);
  WaldschmidtBounds w;
  w.variant = variant;
  w.m_used = count;
  w.upper = Rational(alphas.front());
  for (int m = 1; m <= count; ++m) {
    w.upper = std::min(w.upper, Rational(alphas[static_cast<std::size_t>(m - 1)], m));
  }
  const bool reduced =
      std::all_of(z.mults().begin(), z.mults().end(), [](int m) { return m == 1; });
  if (variant == Variant::star && reduced) w.lower = Rational(alphas.front(), 2);
  return w;
}

}  // namespace fatpoints
