#include "fatpoints/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "fatpoints/catalog.hpp"

namespace fatpoints {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(i) for i in [0, n) on `jobs` threads. Results land by index, so the
// merged output does not depend on the schedule.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<Result> out(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Cross-ratio of four distinct affine values.
Rational cross_ratio(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return ((c - a) * (d - b)) / ((c - b) * (d - a));
}

// Permutations of the sorted values induced by a Moebius transformation
// preserving the set. Any permutation of at most three values qualifies.
std::vector<std::vector<std::size_t>> moebius_permutations(const std::vector<Rational>& values) {
  std::vector<std::size_t> perm(values.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t k = 3; k < values.size() && ok; ++k) {
      ok = cross_ratio(values[0], values[1], values[2], values[k]) ==
           cross_ratio(values[perm[0]], values[perm[1]], values[perm[2]], values[perm[k]]);
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Subsets as sorted index lists into the box (index = ix * ny + iy).
std::vector<std::vector<std::size_t>> subsets(const EnumSpec& spec) {
  const std::size_t nx = spec.xs.size();
  const std::size_t ny = spec.ys.size();
  const std::size_t total = nx * ny;
  std::vector<std::vector<std::size_t>> out;
  for (int s = spec.s_min; s <= spec.s_max; ++s) {
    std::vector<std::size_t> comb(static_cast<std::size_t>(s));
    std::iota(comb.begin(), comb.end(), std::size_t{0});
    while (true) {
      out.push_back(comb);
      int k = s - 1;
      while (k >= 0 && comb[static_cast<std::size_t>(k)] == total - static_cast<std::size_t>(s - k)) --k;
      if (k < 0) break;
      ++comb[static_cast<std::size_t>(k)];
      for (auto j = static_cast<std::size_t>(k) + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  if (!spec.symmetry_reduction) return out;

  const auto px = moebius_permutations(spec.xs);
  const auto py = moebius_permutations(spec.ys);
  std::vector<std::vector<std::size_t>> reps;
  for (const auto& sub : out) {
    bool canonical = true;
    std::vector<std::size_t> image(sub.size());
    for (const auto& gx : px) {
      for (const auto& gy : py) {
        for (std::size_t i = 0; i < sub.size(); ++i) {
          image[i] = gx[sub[i] / ny] * ny + gy[sub[i] % ny];
        }
        std::sort(image.begin(), image.end());
        if (image < sub) {
          canonical = false;
          break;
        }
      }
      if (!canonical) break;
    }
    if (canonical) reps.push_back(sub);
  }
  return reps;
}

// Selection sampling: keeps `count` of the items, preserving their order.
template <typename T>
std::vector<T> sample_ordered(const std::vector<T>& items, std::size_t count, std::uint64_t seed) {
  if (count >= items.size()) return items;
  std::mt19937_64 rng(seed);
  std::vector<T> out;
  std::size_t needed = count;
  for (std::size_t t = 0; t < items.size() && needed > 0; ++t) {
    const std::size_t remaining = items.size() - t;
    if (rng() % remaining < needed) {
      out.push_back(items[t]);
      --needed;
    }
  }
  return out;
}

template <typename Fn>
VerifyReport timed(std::string name, Fn body) {
  const auto start = Clock::now();
  VerifyReport r;
  r.check_name = std::move(name);
  try {
    body(r);
  } catch (const std::exception& e) {
    r.violations.push_back({FatPointConfig{}, 0, std::string("error: ") + e.what()});
  }
  r.elapsed = Clock::now() - start;
  return r;
}

using Sequences = std::vector<std::vector<int>>;

Sequences sequences(const std::vector<FatPointConfig>& corpus, Variant v, int count,
                    const VerifyOptions& opts) {
  return parallel_map<std::vector<int>>(corpus.size(), opts.jobs, [&](std::size_t i) {
    std::vector<int> seq;
    for (int m = 1; m <= count; ++m) seq.push_back(opts.evaluate(corpus[i], v, m));
    return seq;
  });
}

std::vector<int> sequence_of(const FatPointConfig& z, Variant v, int count,
                             const VerifyOptions& opts) {
  return sequences({z}, v, count, opts).front();
}

// Predicates shared by sweeps and replay. seq[k] holds alpha at m = k+1.

std::optional<std::string> stagnation_violation(const FatPointConfig& z,
                                                const std::vector<int>& star, int m) {
  if (star[m - 1] != star[m]) return std::nullopt;
  const GridInfo g = is_grid(z);
  if (g.is_grid) return std::nullopt;
  std::ostringstream os;
  os << "alpha* stagnates at " << star[m - 1] << " from m=" << m << " to m=" << m + 1
     << " but the points are not a grid";
  return os.str();
}

std::optional<std::string> double_stagnation_violation(const std::vector<int>& star, int m) {
  if (star[m - 1] != star[m] || star[m] != star[m + 1]) return std::nullopt;
  std::ostringstream os;
  os << "alpha* equals " << star[m - 1] << " for m=" << m << ".." << m + 2;
  return os.str();
}

std::optional<std::string> chudnovsky_violation(const std::vector<int>& star, int m) {
  const Rational lhs(star[m - 1], m);
  const Rational rhs(star[0], 2);
  if (lhs >= rhs) return std::nullopt;
  return "alpha*(m)/m = " + to_string(lhs) + " < alpha*(1)/2 = " + to_string(rhs);
}

std::optional<std::string> plus_violation(const FatPointConfig& z, const std::vector<int>& plus,
                                          int m) {
  const int jump = plus[m] - plus[m - 1];
  if (jump <= 0) {
    return "alpha+ not strictly increasing: " + std::to_string(plus[m - 1]) + " -> " +
           std::to_string(plus[m]);
  }
  if (jump == 1 && !on_single_fiber(z)) {
    return "alpha+ jumps by 1 (" + std::to_string(plus[m - 1]) + " -> " +
           std::to_string(plus[m]) + ") but the points do not share a fiber";
  }
  return std::nullopt;
}

// Returns the m where the five-jumps hypothesis first fails, or 0 if it holds.
int five_jumps_break(const std::vector<int>& star) {
  for (int m = 2; m <= 6; ++m) {
    if (star[m - 1] != star[0] + (m - 1)) return m;
  }
  return 0;
}

std::optional<std::string> five_jumps_violation(const std::vector<int>& star) {
  if (five_jumps_break(star) != 0 || star[0] == 1) return std::nullopt;
  return "alpha* = " + join(star) + " grows by 1 five times but alpha*(1) != 1";
}

std::optional<std::string> grid_formula_violation(const FatPointConfig& z,
                                                  const std::vector<int>& star, int m) {
  const GridInfo g = is_grid(z);
  if (!g.is_grid) return "configuration is not a grid";
  const auto a = static_cast<int>(g.vertical.size());
  const auto b = static_cast<int>(g.horizontal.size());
  const long long expected = grid_alpha_star(a, b, m);
  if (expected == star[m - 1]) return std::nullopt;
  return "recursion gives " + std::to_string(expected) + ", linear algebra gives " +
         std::to_string(star[m - 1]) + " for the " + std::to_string(a) + "x" +
         std::to_string(b) + " grid";
}

void require_m_max(int m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be at least 1");
}

VerifyReport stagnation_report(const std::vector<FatPointConfig>& corpus, const Sequences& star,
                               int m_max) {
  return timed(check::kStagnation, [&](VerifyReport& r) {
    r.configs_tested = corpus.size();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (int m = 1; m < m_max; ++m) {
        if (auto d = stagnation_violation(corpus[i], star[i], m)) {
          r.violations.push_back({corpus[i], m, *d});
        }
      }
    }
  });
}

VerifyReport double_report(const std::vector<FatPointConfig>& corpus, const Sequences& star,
                           int m_max) {
  return timed(check::kDoubleStagnation, [&](VerifyReport& r) {
    r.configs_tested = corpus.size();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (int m = 1; m + 2 <= m_max; ++m) {
        if (auto d = double_stagnation_violation(star[i], m)) {
          r.violations.push_back({corpus[i], m, *d});
        }
      }
    }
  });
}

VerifyReport chudnovsky_report(const std::vector<FatPointConfig>& corpus, const Sequences& star,
                               int m_max) {
  return timed(check::kChudnovsky, [&](VerifyReport& r) {
    r.configs_tested = corpus.size();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (int m = 1; m <= m_max; ++m) {
        if (auto d = chudnovsky_violation(star[i], m)) r.violations.push_back({corpus[i], m, *d});
      }
    }
  });
}

VerifyReport plus_report(const std::vector<FatPointConfig>& corpus, const Sequences& plus,
                         int m_max) {
  return timed(check::kPlusJump, [&](VerifyReport& r) {
    r.configs_tested = corpus.size();
    std::size_t jumps_of_one = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      for (int m = 1; m < m_max; ++m) {
        if (plus[i][m] - plus[i][m - 1] == 1) ++jumps_of_one;
        if (auto d = plus_violation(corpus[i], plus[i], m)) r.violations.push_back({corpus[i], m, *d});
      }
    }
    r.notes.push_back(std::to_string(jumps_of_one) + " jumps of 1 examined");
  });
}

// Times the sequence computation into the first report that uses it.
template <typename Fn>
VerifyReport with_sequences(const char* name, const std::vector<FatPointConfig>& corpus,
                            Variant v, int m_max, const VerifyOptions& opts, Fn report) {
  const auto start = Clock::now();
  Sequences seq;
  try {
    require_m_max(m_max);
    seq = sequences(corpus, v, m_max, opts);
  } catch (const std::exception& e) {
    VerifyReport r;
    r.check_name = name;
    r.violations.push_back({FatPointConfig{}, 0, std::string("error: ") + e.what()});
    r.elapsed = Clock::now() - start;
    return r;
  }
  VerifyReport r = report(corpus, seq, m_max);
  r.elapsed += Clock::now() - start;
  return r;
}

}  // namespace

EnumSpec EnumSpec::box(int nx, int ny, int s_min, int s_max) {
  EnumSpec spec;
  for (int x = 0; x < nx; ++x) spec.xs.emplace_back(x);
  for (int y = 0; y < ny; ++y) spec.ys.emplace_back(y);
  spec.s_min = s_min;
  spec.s_max = s_max;
  return spec;
}

void EnumSpec::validate() const {
  if (xs.empty() || ys.empty()) throw std::invalid_argument("coordinate lists must be nonempty");
  if (std::set<Rational>(xs.begin(), xs.end()).size() != xs.size()) {
    throw std::invalid_argument("duplicate x coordinate");
  }
  if (std::set<Rational>(ys.begin(), ys.end()).size() != ys.size()) {
    throw std::invalid_argument("duplicate y coordinate");
  }
  if (s_min < 1) throw std::invalid_argument("s_min must be at least 1");
  if (s_min <= s_max && static_cast<std::size_t>(s_max) > xs.size() * ys.size()) {
    throw std::invalid_argument("s_max exceeds the number of box points");
  }
  if (symmetry_reduction && (xs.size() > 8 || ys.size() > 8)) {
    throw std::invalid_argument("symmetry reduction supports at most 8 values per factor");
  }
}

std::vector<FatPointConfig> enumerate_configs(const EnumSpec& input) {
  input.validate();
  EnumSpec spec = input;
  std::sort(spec.xs.begin(), spec.xs.end());
  std::sort(spec.ys.begin(), spec.ys.end());
  auto subs = subsets(spec);
  if (spec.sample) subs = sample_ordered(subs, spec.sample->count, spec.sample->seed);
  std::vector<FatPointConfig> out;
  out.reserve(subs.size());
  const std::size_t ny = spec.ys.size();
  for (const auto& sub : subs) {
    std::vector<ProductPoint> pts;
    for (std::size_t idx : sub) pts.push_back(ProductPoint::affine(spec.xs[idx / ny], spec.ys[idx % ny]));
    out.push_back(make_config(std::move(pts)));
  }
  return out;
}

std::vector<FatPointConfig> enumerate_configs(const std::vector<EnumSpec>& specs) {
  std::vector<FatPointConfig> out;
  for (const auto& s : specs) {
    auto part = enumerate_configs(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<EnumSpec> default_corpus(std::uint64_t seed) {
  EnumSpec small = EnumSpec::box(3, 3, 1, 4);
  EnumSpec large = EnumSpec::box(3, 3, 5, 6);
  large.sample = EnumSpec::Sample{200, seed};
  return {small, large};
}

int VerifyOptions::evaluate(const FatPointConfig& z, Variant v, int m) const {
  if (oracle) return oracle(z, v, m);
  return fatpoints::alpha(z, v, m, alpha);
}

VerifyReport check_stagnation_implies_grid(const std::vector<FatPointConfig>& corpus, int m_max,
                                           const VerifyOptions& opts) {
  return with_sequences(check::kStagnation, corpus, Variant::star, m_max, opts, stagnation_report);
}

VerifyReport check_stagnation_implies_grid(const EnumSpec& spec, int m_max,
                                           const VerifyOptions& opts) {
  return check_stagnation_implies_grid(enumerate_configs(spec), m_max, opts);
}

VerifyReport check_no_double_stagnation(const std::vector<FatPointConfig>& corpus, int m_max,
                                        const VerifyOptions& opts) {
  return with_sequences(check::kDoubleStagnation, corpus, Variant::star, m_max, opts,
                        double_report);
}

VerifyReport check_no_double_stagnation(const EnumSpec& spec, int m_max,
                                        const VerifyOptions& opts) {
  return check_no_double_stagnation(enumerate_configs(spec), m_max, opts);
}

VerifyReport check_chudnovsky(const std::vector<FatPointConfig>& corpus, int m_max,
                              const VerifyOptions& opts) {
  return with_sequences(check::kChudnovsky, corpus, Variant::star, m_max, opts, chudnovsky_report);
}

VerifyReport check_chudnovsky(const EnumSpec& spec, int m_max, const VerifyOptions& opts) {
  return check_chudnovsky(enumerate_configs(spec), m_max, opts);
}

VerifyReport check_alpha_plus_jump1(const std::vector<FatPointConfig>& corpus, int m_max,
                                    const VerifyOptions& opts) {
  return with_sequences(check::kPlusJump, corpus, Variant::plus, m_max, opts, plus_report);
}

VerifyReport check_alpha_plus_jump1(const EnumSpec& spec, int m_max, const VerifyOptions& opts) {
  return check_alpha_plus_jump1(enumerate_configs(spec), m_max, opts);
}

VerifyReport check_five_jumps(const FatPointConfig& config, const VerifyOptions& opts) {
  return timed(check::kFiveJumps, [&](VerifyReport& r) {
    if (config.empty()) throw std::invalid_argument("five-jumps check needs points");
    r.configs_tested = 1;
    const auto star = sequence_of(config, Variant::star, 6, opts);
    if (auto d = five_jumps_violation(star)) {
      r.violations.push_back({config, 6, *d});
      return;
    }
    const int broken = five_jumps_break(star);
    r.notes.push_back("alpha* for m=1..6: " + join(star));
    r.notes.push_back(broken == 0 ? "hypothesis holds and alpha*(1) = 1"
                                  : "hypothesis fails at m=" + std::to_string(broken));
  });
}

VerifyReport check_grid_formula(int a_max, int b_max, int m_max, const VerifyOptions& opts) {
  return timed(check::kGridFormula, [&](VerifyReport& r) {
    require_m_max(m_max);
    std::vector<FatPointConfig> grids;
    for (int a = 1; a <= a_max; ++a) {
      for (int b = 1; b <= b_max; ++b) grids.push_back(catalog::grid(a, b));
    }
    const Sequences star = sequences(grids, Variant::star, m_max, opts);
    r.configs_tested = grids.size();
    for (std::size_t i = 0; i < grids.size(); ++i) {
      for (int m = 1; m <= m_max; ++m) {
        if (auto d = grid_formula_violation(grids[i], star[i], m)) {
          r.violations.push_back({grids[i], m, *d});
        }
      }
    }
  });
}

std::vector<VerifyReport> check_regressions(const VerifyOptions& opts) {
  std::vector<VerifyReport> out;
  auto expect_sequence = [&](VerifyReport& r, const FatPointConfig& z, Variant v,
                             const std::vector<int>& expected) {
    const auto got = sequence_of(z, v, static_cast<int>(expected.size()), opts);
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (got[k] != expected[k]) {
        r.violations.push_back({z, static_cast<int>(k + 1),
                                std::string("alpha") + (v == Variant::star ? "*" : "+") +
                                    " expected " + std::to_string(expected[k]) + ", got " +
                                    std::to_string(got[k])});
      }
    }
  };

  out.push_back(timed("regression_single_point", [&](VerifyReport& r) {
    const auto z = catalog::single_point();
    r.configs_tested = 1;
    expect_sequence(r, z, Variant::star, {1, 1, 2, 2});
    expect_sequence(r, z, Variant::plus, {1, 2, 3, 4});
    const auto star = waldschmidt_bounds(z, Variant::star, 2, opts.alpha);
    if (!star.lower || *star.lower != Rational(1, 2) || star.upper != Rational(1, 2)) {
      r.violations.push_back({z, 2, "star Waldschmidt bounds differ from 1/2"});
    }
    const auto plus = waldschmidt_bounds(z, Variant::plus, 3, opts.alpha);
    if (plus.lower || plus.upper != Rational(1)) {
      r.violations.push_back({z, 3, "plus Waldschmidt upper bound differs from 1"});
    }
  }));

  out.push_back(timed("regression_five_jumps_sharp", [&](VerifyReport& r) {
    const auto z = catalog::five_jumps_sharp();
    r.configs_tested = 1;
    expect_sequence(r, z, Variant::star, {2, 3, 4, 5, 6});
    const int sixth = opts.evaluate(z, Variant::star, 6);
    r.notes.push_back("alpha*(m=6) = " + std::to_string(sixth));
    if (sixth == 7) r.violations.push_back({z, 6, "alpha*(m=6) = 7 would force alpha*(1) = 1"});
  }));

  out.push_back(timed("regression_plus_jump_two", [&](VerifyReport& r) {
    const auto z = catalog::plus_jump_two();
    r.configs_tested = 1;
    expect_sequence(r, z, Variant::plus, {4, 6});
  }));

  out.push_back(timed("regression_grid_minus_point", [&](VerifyReport& r) {
    const int a = 5;
    const auto z = catalog::grid_minus_point(a);
    r.configs_tested = 1;
    std::vector<int> expected;
    for (int m = 1; m <= 4; ++m) expected.push_back(static_cast<int>(grid_minus_point_alpha(a, m)));
    expect_sequence(r, z, Variant::star, expected);
  }));
  return out;
}

std::vector<VerifyReport> run_suite(const std::vector<EnumSpec>& specs, int m_max,
                                    const VerifyOptions& opts, const SuiteOptions& suite) {
  std::vector<VerifyReport> out;
  std::vector<FatPointConfig> corpus;
  try {
    corpus = enumerate_configs(specs);
  } catch (const std::exception& e) {
    VerifyReport r;
    r.check_name = "enumeration";
    r.violations.push_back({FatPointConfig{}, 0, std::string("error: ") + e.what()});
    out.push_back(std::move(r));
    return out;
  }

  // The three star checks share one set of sequences.
  const auto start = Clock::now();
  std::optional<Sequences> star;
  std::string star_error;
  try {
    require_m_max(m_max);
    star = sequences(corpus, Variant::star, m_max, opts);
  } catch (const std::exception& e) {
    star_error = std::string("error: ") + e.what();
  }
  const auto star_time = Clock::now() - start;
  for (auto [name, fn] : {std::pair{check::kStagnation, &stagnation_report},
                          std::pair{check::kDoubleStagnation, &double_report},
                          std::pair{check::kChudnovsky, &chudnovsky_report}}) {
    if (star) {
      out.push_back(fn(corpus, *star, m_max));
    } else {
      VerifyReport r;
      r.check_name = name;
      r.violations.push_back({FatPointConfig{}, 0, star_error});
      out.push_back(std::move(r));
    }
  }
  out.front().elapsed += star_time;

  out.push_back(check_alpha_plus_jump1(corpus, m_max, opts));
  if (suite.regressions) {
    out.push_back(check_five_jumps(catalog::five_jumps_sharp(), opts));
    out.push_back(check_grid_formula(suite.grid_a_max, suite.grid_b_max, suite.grid_m_max, opts));
    for (auto& r : check_regressions(opts)) out.push_back(std::move(r));
  }
  return out;
}

bool replay(const std::string& name, const Violation& v, const VerifyOptions& opts) {
  const auto& z = v.config;
  const int m = v.m;
  if (z.empty() || m < 1) return false;
  if (name == check::kStagnation) {
    return stagnation_violation(z, sequence_of(z, Variant::star, m + 1, opts), m).has_value();
  }
  if (name == check::kDoubleStagnation) {
    return double_stagnation_violation(sequence_of(z, Variant::star, m + 2, opts), m).has_value();
  }
  if (name == check::kChudnovsky) {
    return chudnovsky_violation(sequence_of(z, Variant::star, m, opts), m).has_value();
  }
  if (name == check::kPlusJump) {
    return plus_violation(z, sequence_of(z, Variant::plus, m + 1, opts), m).has_value();
  }
  if (name == check::kFiveJumps) {
    return five_jumps_violation(sequence_of(z, Variant::star, 6, opts)).has_value();
  }
  if (name == check::kGridFormula) {
    return grid_formula_violation(z, sequence_of(z, Variant::star, m, opts), m).has_value();
  }
  throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace fatpoints
