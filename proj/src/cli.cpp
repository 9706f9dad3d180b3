#include "fatpoints/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fatpoints/config_io.hpp"
#include "fatpoints/invariants.hpp"
#include "fatpoints/verifier.hpp"

namespace fatpoints {

namespace {

using nlohmann::json;

enum class Format { json, table };

struct Common {
  std::string variant = "star";
  std::string format = "json";
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "json or table")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
}

void add_variant(CLI::App* sub, Common& c) {
  sub->add_option("--variant", c.variant, "star or plus")
      ->check(CLI::IsMember({"star", "plus"}))
      ->capture_default_str();
}

json coefficients_json(const BiForm& f) {
  json rows = json::array();
  for (Index i = 0; i < f.coeffs().rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < f.coeffs().cols(); ++j) row.push_back(to_string(f.coeffs()(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string config_summary(const FatPointConfig& z) {
  std::ostringstream os;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto& p = z.points()[i];
    os << (i ? " " : "") << "([" << to_string(p.x.u()) << ":" << to_string(p.x.v()) << "],["
       << to_string(p.y.u()) << ":" << to_string(p.y.v()) << "])";
    if (z.mults()[i] != 1) os << "^" << z.mults()[i];
  }
  return os.str();
}

void emit(std::ostream& out, const json& doc, bool table,
          const std::function<void(std::ostream&)>& render_table) {
  if (table) {
    render_table(out);
  } else {
    out << doc.dump() << "\n";
  }
}

json report_json(const VerifyReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"config", config_to_json(v.config)}, {"m", v.m}, {"details", v.details}});
  }
  return {{"check", r.check_name},
          {"configs_tested", r.configs_tested},
          {"passed", r.passed()},
          {"violations", violations},
          {"notes", r.notes}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Initial degrees of fat point schemes on P1 x P1"};
  app.require_subcommand(1);
  Common common;

  // h0
  std::string source;
  int d1 = 0, d2 = 0;
  auto* h0_cmd = app.add_subcommand("h0", "dimension of forms of a bi-degree through the scheme");
  h0_cmd->add_option("config", source, "configuration file or built-in name")->required();
  h0_cmd->add_option("d1", d1, "first degree")->required();
  h0_cmd->add_option("d2", d2, "second degree")->required();
  add_format(h0_cmd, common);

  // alpha
  int m = 0;
  bool witness = false, verbose = false;
  std::uint64_t modp = 0;
  auto* alpha_cmd = app.add_subcommand("alpha", "initial degree of a symbolic power");
  alpha_cmd->add_option("config", source, "configuration file or built-in name")->required();
  add_variant(alpha_cmd, common);
  alpha_cmd->add_option("--m", m, "symbolic power; omitted uses the stored multiplicities")
      ->check(CLI::PositiveNumber);
  alpha_cmd->add_flag("--witness", witness, "include a witness form");
  alpha_cmd->add_flag("--verbose", verbose, "include the witnessing bi-degree");
  auto* modp_opt = alpha_cmd
                       ->add_option("--modp", modp, "scan ranks modulo this prime first")
                       ->expected(0, 1)
                       ->default_str(std::to_string(kDefaultPrime));
  add_format(alpha_cmd, common);

  // jumps / wald
  int max_m = 4;
  auto* jumps_cmd = app.add_subcommand("jumps", "successive differences of alpha");
  auto* wald_cmd = app.add_subcommand("wald", "bounds on the Waldschmidt constant");
  std::uint64_t modp_jw = 0;
  std::vector<CLI::Option*> modp_jw_opts;
  for (auto* sub : {jumps_cmd, wald_cmd}) {
    sub->add_option("config", source, "configuration file or built-in name")->required();
    add_variant(sub, common);
    sub->add_option("--max-m", max_m, "largest symbolic power")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    modp_jw_opts.push_back(sub->add_option("--modp", modp_jw, "scan ranks modulo this prime first")
                               ->expected(0, 1)
                               ->default_str(std::to_string(kDefaultPrime)));
    add_format(sub, common);
  }

  // gridseq
  int a = 1, b = 1, steps = 1;
  auto* gridseq_cmd = app.add_subcommand("gridseq", "unroll the grid recursion");
  gridseq_cmd->add_option("a", a, "number of vertical fibers")->required()->check(CLI::PositiveNumber);
  gridseq_cmd->add_option("b", b, "number of horizontal fibers")->required()->check(CLI::PositiveNumber);
  gridseq_cmd->add_option("M", steps, "number of steps")->required()->check(CLI::NonNegativeNumber);
  add_format(gridseq_cmd, common);

  // verify
  int verify_max_m = 3, box = 3, s_max = 4, grid_max = 3, grid_m = 6;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool symmetry = false, no_regressions = false;
  std::uint64_t verify_modp = kDefaultPrime;
  auto* verify_cmd = app.add_subcommand("verify", "run the theorem checks over a corpus");
  verify_cmd->add_option("--max-m", verify_max_m, "largest symbolic power in sweeps")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_option("--box", box, "side of the affine coordinate box")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  verify_cmd->add_option("--s-max", s_max, "largest exhaustively enumerated point count")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--samples", samples, "seeded samples with s_max+1..s_max+2 points")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "sampling seed")->capture_default_str();
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--grid-max", grid_max, "largest grid side for the recursion check")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify_cmd->add_option("--grid-m", grid_m, "largest power for the recursion check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_cmd->add_flag("--symmetry", symmetry, "one configuration per coordinate-permutation orbit");
  verify_cmd->add_flag("--no-regressions", no_regressions, "skip fixed regressions and grid checks");
  verify_cmd->add_option("--modp", verify_modp, "accelerator prime (ranks confirmed rationally)")
      ->capture_default_str();
  add_format(verify_cmd, common);

  // config
  auto* config_cmd = app.add_subcommand("config", "print a configuration in file form");
  config_cmd->add_option("config", source, "configuration file or built-in name")->required();

  std::vector<std::string> argv_storage{"fatpoints"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const bool table = common.format == "table";
  try {
    const Variant variant = parse_variant(common.variant);
    auto accel = [](CLI::Option* opt, std::uint64_t p) {
      AlphaOptions o;
      if (opt->count() > 0) {
        if (p > kMaxModulus || !is_prime(p)) {
          throw std::invalid_argument("--modp: " + std::to_string(p) + " is not a prime <= 2^32-1");
        }
        o.modp = p;
      }
      return o;
    };

    if (h0_cmd->parsed()) {
      const BiDegree d = BiDegree::make(d1, d2);
      const FatPointConfig z = load_config(source);
      const ConditionsMatrix cm = conditions_matrix(z, d);
      const Index h = d.dimension() - rank(cm.matrix);
      const json doc{{"h0", h}, {"rows", cm.matrix.rows()}, {"cols", cm.matrix.cols()},
                     {"bidegree", {d1, d2}}};
      emit(out, doc, table, [&](std::ostream& os) {
        os << "bi-degree (" << d1 << "," << d2 << "): h0 = " << h << "  (" << cm.matrix.rows()
           << " conditions, " << cm.matrix.cols() << " monomials)\n";
      });
      return kExitOk;
    }

    if (alpha_cmd->parsed()) {
      const FatPointConfig base = load_config(source);
      const AlphaOptions opts = accel(modp_opt, modp);
      const FatPointConfig z = m > 0 ? base.scaled(m) : base;
      const AlphaResult res = compute_alpha(z, variant, opts);
      json doc{{"alpha", res.alpha}, {"variant", to_string(variant)}};
      doc["m"] = m > 0 ? json(m) : json(nullptr);
      if (verbose) doc["bidegree"] = {res.degree.d1, res.degree.d2};
      std::optional<BiForm> w;
      if (witness) {
        w = witness_form(z, res.degree);
        doc["witness"] = w ? json{{"bidegree", {res.degree.d1, res.degree.d2}},
                                  {"coefficients", coefficients_json(*w)}}
                           : json(nullptr);
      }
      emit(out, doc, table, [&](std::ostream& os) {
        os << "alpha" << (variant == Variant::star ? "*" : "+") << " = " << res.alpha;
        if (verbose || witness) os << "  at bi-degree (" << res.degree.d1 << "," << res.degree.d2 << ")";
        os << "\n";
        if (w) {
          for (Index i = 0; i < w->coeffs().rows(); ++i) {
            for (Index j = 0; j < w->coeffs().cols(); ++j) {
              os << std::setw(8) << to_string(w->coeffs()(i, j));
            }
            os << "\n";
          }
        }
      });
      return kExitOk;
    }

    if (jumps_cmd->parsed()) {
      const FatPointConfig z = load_config(source);
      const auto alphas = alpha_sequence(z, variant, max_m, accel(modp_jw_opts[0], modp_jw));
      const JumpVector j = jumps_from_alphas(alphas, variant);
      json doc{{"variant", to_string(variant)}, {"max_m", max_m}, {"alphas", alphas},
               {"jumps", j.values}};
      if (variant == Variant::plus) {
        doc["note"] = "plus-variant jumps extend the star jump function";
      }
      emit(out, doc, table, [&](std::ostream& os) {
        os << std::setw(4) << "m" << std::setw(8) << "alpha" << std::setw(8) << "jump\n";
        for (std::size_t k = 0; k < alphas.size(); ++k) {
          os << std::setw(4) << k + 1 << std::setw(8) << alphas[k] << std::setw(7) << j.values[k]
             << "\n";
        }
      });
      return kExitOk;
    }

    if (wald_cmd->parsed()) {
      const FatPointConfig z = load_config(source);
      const auto w = waldschmidt_bounds(z, variant, max_m, accel(modp_jw_opts[1], modp_jw));
      json doc{{"variant", to_string(variant)}, {"upper", to_string(w.upper)}, {"m_used", w.m_used}};
      doc["lower"] = w.lower ? json(to_string(*w.lower)) : json(nullptr);
      emit(out, doc, table, [&](std::ostream& os) {
        os << (w.lower ? to_string(*w.lower) : std::string("?")) << " <= gamma"
           << (variant == Variant::star ? "*" : "+") << " <= " << to_string(w.upper)
           << "  (m <= " << w.m_used << ")\n";
      });
      return kExitOk;
    }

    if (gridseq_cmd->parsed()) {
      json rows = json::array();
      json alphas = json::array();
      for (int k = 1; k <= steps; ++k) {
        const auto s = grid_sequence(a, b, k);
        rows.push_back({s.a_m, s.b_m});
        alphas.push_back(std::max(s.a_m, s.b_m));
      }
      const json doc{{"a", a}, {"b", b}, {"rows", rows}, {"alpha", alphas}};
      emit(out, doc, table, [&](std::ostream& os) {
        os << std::setw(4) << "m" << std::setw(8) << "a_m" << std::setw(8) << "b_m" << "\n";
        for (int k = 0; k < steps; ++k) {
          os << std::setw(4) << k + 1 << std::setw(8) << rows[k][0].get<long long>()
             << std::setw(8) << rows[k][1].get<long long>() << "\n";
        }
      });
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (verify_modp > kMaxModulus || !is_prime(verify_modp)) {
        throw std::invalid_argument("--modp: " + std::to_string(verify_modp) +
                                    " is not a prime <= 2^32-1");
      }
      std::vector<EnumSpec> specs;
      EnumSpec exhaustive = EnumSpec::box(box, box, 1, s_max);
      exhaustive.symmetry_reduction = symmetry;
      specs.push_back(exhaustive);
      if (samples > 0 && s_max + 1 <= box * box) {
        EnumSpec sampled = EnumSpec::box(box, box, s_max + 1, std::min(s_max + 2, box * box));
        sampled.symmetry_reduction = symmetry;
        sampled.sample = EnumSpec::Sample{samples, seed};
        specs.push_back(sampled);
      }
      for (const auto& spec : specs) spec.validate();
      VerifyOptions opts;
      opts.jobs = jobs;
      opts.alpha.modp = verify_modp;
      SuiteOptions suite;
      suite.grid_a_max = suite.grid_b_max = grid_max;
      suite.grid_m_max = grid_m;
      suite.regressions = !no_regressions;
      const auto reports = run_suite(specs, verify_max_m, opts, suite);
      bool all = true;
      json list = json::array();
      for (const auto& r : reports) {
        all = all && r.passed();
        list.push_back(report_json(r));
      }
      const json doc{{"passed", all}, {"reports", list}};
      emit(out, doc, table, [&](std::ostream& os) {
        for (const auto& r : reports) {
          os << (r.passed() ? "PASS " : "FAIL ") << std::left << std::setw(30) << r.check_name
             << std::right << std::setw(6) << r.configs_tested << " configs  " << std::fixed
             << std::setprecision(2) << r.elapsed.count() << " s\n";
          for (const auto& v : r.violations) {
            os << "     m=" << v.m << " " << config_summary(v.config) << ": " << v.details << "\n";
          }
          for (const auto& n : r.notes) os << "     " << n << "\n";
        }
      });
      return all ? kExitOk : kExitViolation;
    }

    if (config_cmd->parsed()) {
      out << config_to_json(load_config(source)).dump(2) << "\n";
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fatpoints
