#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fatpoints/invariants.hpp"

namespace fatpoints {

/// Subsets of an affine coordinate box {([1:x],[1:y])}.
struct EnumSpec {
  struct Sample {
    std::size_t count = 0;
    std::uint64_t seed = 0;
  };

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  int s_min = 1;
  int s_max = 0;  // s_min > s_max is the empty range
  std::optional<Sample> sample;
  /// Keep one representative per orbit of coordinate permutations that are
  /// induced by automorphisms of each factor.
  bool symmetry_reduction = false;

  /// Box {0..nx-1} x {0..ny-1}.
  static EnumSpec box(int nx, int ny, int s_min, int s_max);

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

/// All subsets with size in [s_min, s_max], by size then lexicographically,
/// every multiplicity 1. A sample keeps a seeded subset in the same order.
std::vector<FatPointConfig> enumerate_configs(const EnumSpec& spec);
std::vector<FatPointConfig> enumerate_configs(const std::vector<EnumSpec>& specs);

/// 3x3 box exhaustively for 1..4 points plus 200 seeded samples of 5..6.
std::vector<EnumSpec> default_corpus(std::uint64_t seed = 1);

struct Violation {
  FatPointConfig config;
  int m = 0;
  std::string details;
};

struct VerifyReport {
  std::string check_name;
  std::size_t configs_tested = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{};

  bool passed() const { return violations.empty(); }
};

using AlphaOracle = std::function<int(const FatPointConfig&, Variant, int m)>;

struct VerifyOptions {
  unsigned jobs = 1;
  AlphaOptions alpha{kDefaultPrime};
  /// Replaces the linear-algebra alpha; used to exercise the checks
  /// themselves.
  AlphaOracle oracle;

  int evaluate(const FatPointConfig& z, Variant v, int m) const;
};

namespace check {
inline constexpr const char* kStagnation = "stagnation_implies_grid";
inline constexpr const char* kDoubleStagnation = "no_double_stagnation";
inline constexpr const char* kChudnovsky = "chudnovsky_bound";
inline constexpr const char* kPlusJump = "alpha_plus_jump1";
inline constexpr const char* kFiveJumps = "five_jumps";
inline constexpr const char* kGridFormula = "grid_formula";
}  // namespace check

/// Wherever alpha*(m) = alpha*(m+1) for 1 <= m < m_max, Z must be a grid.
VerifyReport check_stagnation_implies_grid(const std::vector<FatPointConfig>& corpus, int m_max,
                                           const VerifyOptions& opts = {});
VerifyReport check_stagnation_implies_grid(const EnumSpec& spec, int m_max,
                                           const VerifyOptions& opts = {});

/// alpha* never takes the same value three times in a row.
VerifyReport check_no_double_stagnation(const std::vector<FatPointConfig>& corpus, int m_max,
                                        const VerifyOptions& opts = {});
VerifyReport check_no_double_stagnation(const EnumSpec& spec, int m_max,
                                        const VerifyOptions& opts = {});

/// alpha*(m)/m >= alpha*(1)/2 as exact rationals.
VerifyReport check_chudnovsky(const std::vector<FatPointConfig>& corpus, int m_max,
                              const VerifyOptions& opts = {});
VerifyReport check_chudnovsky(const EnumSpec& spec, int m_max, const VerifyOptions& opts = {});

/// alpha+ strictly increases, and a jump of exactly 1 forces all points
/// onto one fiber.
VerifyReport check_alpha_plus_jump1(const std::vector<FatPointConfig>& corpus, int m_max,
                                    const VerifyOptions& opts = {});
VerifyReport check_alpha_plus_jump1(const EnumSpec& spec, int m_max,
                                    const VerifyOptions& opts = {});

/// Five consecutive jumps by 1 (m = 1..6) force alpha*(1) = 1.
VerifyReport check_five_jumps(const FatPointConfig& config, const VerifyOptions& opts = {});

/// Grid recursion against linear algebra on {0..a-1} x {0..b-1}.
VerifyReport check_grid_formula(int a_max, int b_max, int m_max, const VerifyOptions& opts = {});

/// Fixed-value regressions for the named built-in configurations.
std::vector<VerifyReport> check_regressions(const VerifyOptions& opts = {});

struct SuiteOptions {
  int grid_a_max = 3;
  int grid_b_max = 3;
  int grid_m_max = 6;
  bool regressions = true;
};

/// Every check above. Errors inside a check become violations of that check.
std::vector<VerifyReport> run_suite(const std::vector<EnumSpec>& specs, int m_max,
                                    const VerifyOptions& opts = {},
                                    const SuiteOptions& suite = {});

/// Re-evaluates one recorded violation from scratch; true if it reproduces.
bool replay(const std::string& check_name, const Violation& v, const VerifyOptions& opts = {});

}  // namespace fatpoints
