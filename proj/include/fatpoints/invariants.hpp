#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fatpoints/linsys.hpp"

namespace fatpoints {

/// star: least k with a section in bi-degree (k,k).
/// plus: least k1 + k2 with a section in bi-degree (k1,k2).
enum class Variant { star, plus };

std::string_view to_string(Variant v);
/// "star" or "plus"; throws std::invalid_argument otherwise.
Variant parse_variant(std::string_view text);

struct AlphaOptions {
  /// When set, degrees are scanned with ranks over F_p and the candidate is
  /// confirmed over the rationals before it is reported.
  std::optional<std::uint64_t> modp;
};

struct AlphaResult {
  int alpha = 0;
  BiDegree degree;  // first bi-degree found with a section
};

/// Initial degree on the stored multiplicity vector. Zero for an empty
/// configuration.
AlphaResult compute_alpha(const FatPointConfig& z, Variant variant, const AlphaOptions& opts = {});

int alpha_weighted(const FatPointConfig& z, Variant variant, const AlphaOptions& opts = {});

/// Initial degree of the m-th symbolic power: multiplicities scaled by m.
int alpha_star(const FatPointConfig& z, int m, const AlphaOptions& opts = {});
int alpha_plus(const FatPointConfig& z, int m, const AlphaOptions& opts = {});
int alpha(const FatPointConfig& z, Variant variant, int m, const AlphaOptions& opts = {});

/// alpha of the m-th power for m = 1..count, index 0 holding m = 1.
std::vector<int> alpha_sequence(const FatPointConfig& z, Variant variant, int count,
                                const AlphaOptions& opts = {});

struct JumpVector {
  Variant variant = Variant::star;
  std::vector<int> values;  // values[k] = alpha(m = k+1) - alpha(m = k)
};

JumpVector jump_vector(const FatPointConfig& z, int count, Variant variant,
                       const AlphaOptions& opts = {});
/// Jumps of an already computed alpha sequence (alpha(0) = 0).
JumpVector jumps_from_alphas(const std::vector<int>& alphas, Variant variant);

struct GridSequenceState {
  long long a_m = 0;
  long long b_m = 0;
  int m = 0;

  friend bool operator==(const GridSequenceState&, const GridSequenceState&) = default;
};

/// Unrolls the two-sided grid recursion. Requires a, b >= 1 and m >= 0.
/// Ties advance the a-side.
GridSequenceState grid_sequence(int a, int b, int m);

/// max(a_m, b_m): alpha* of the m-th symbolic power of an a-by-b grid.
long long grid_alpha_star(int a, int b, int m);

/// Recovers (a, b) with a <= b from the star jump vector of a grid.
/// Throws std::invalid_argument("jump vector too short") when no jump
/// below the first one is present.
std::pair<int, int> recover_grid(const JumpVector& jumps);

/// Closed form for an (a,a) grid minus one point, a >= 5.
long long grid_minus_point_alpha(int a, int m);

struct WaldschmidtBounds {
  Variant variant = Variant::star;
  std::optional<Rational> lower;  // alpha*(I)/2 for star, absent for plus
  Rational upper;                 // min over m <= m_used of alpha(m)/m
  int m_used = 0;
};

WaldschmidtBounds waldschmidt_bounds(const FatPointConfig& z, Variant variant, int count,
                                     const AlphaOptions& opts = {});

}  // namespace fatpoints
