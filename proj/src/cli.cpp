#include "numsg/cli.hpp"

#include <charconv>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "numsg/cone.hpp"
#include "numsg/gluing.hpp"

namespace numsg::cli {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_integer(std::string_view token) {
  token = trim(token);
  Int value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorCode::InvalidArgument, "not a nonnegative integer: '" + std::string(token) + "'");
  }
  return value;
}

std::string join(const std::vector<Int>& values, std::string_view sep = ", ") {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

std::string join_sizes(const std::vector<std::size_t>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? ", " : "") << values[i];
  return out.str();
}

std::string name(const NumericalSemigroup& s) {
  return s.is_naturals() ? std::string("N") : "<" + join(s.generators()) + ">";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

CommandResult ok(std::string out) { return {kExitOk, std::move(out), {}}; }
CommandResult ok(const json& payload) { return {kExitOk, payload.dump(2) + "\n", {}}; }

CommandResult invalid(const SemigroupError& e, std::string_view context = {}) {
  std::string msg = "error";
  if (!context.empty()) msg += " (" + std::string(context) + ")";
  msg += ": " + std::string(to_string(e.code())) + ": " + e.what() + "\n";
  return {kExitInvalidInput, {}, msg};
}

NumericalSemigroup semigroup_from(std::string_view gens) {
  return NumericalSemigroup::from_generators(parse_generators(gens));
}

json hilbert_summary(const NumericalSemigroup& s) { return to_json(hilbert_function(s)); }

std::string hilbert_line(const HilbertFunction& h) {
  std::string line = join_sizes(h.values) + " (then " + std::to_string(h.stable_value) + " forever), ";
  if (h.nondecreasing) return line + "nondecreasing";
  return line + "decreasing at n = " + std::to_string(*h.first_decrease);
}

json analysis(const NumericalSemigroup& s) {
  return {{"generators", s.generators()},
          {"symmetric", is_symmetric(s)},
          {"cm_tangent_cone", is_cm_tangent_cone(s)},
          {"gorenstein_tangent_cone", is_gorenstein_tangent_cone(s)},
          {"hilbert", hilbert_summary(s)}};
}

// Which sampled theorems have their hypotheses met by this gluing.
std::vector<std::string> applicable_theorems(const GluingSpec& g) {
  std::vector<std::string> out{"T6", "T7"};
  if (g.flags.specific) {
    out.push_back("T1");
    out.push_back("T8");
    if (is_symmetric(g.s2) && relative_m_pure_symmetric(g.s2, g.q)) out.push_back("T2");
    if (hilbert_function(g.s1).nondecreasing) out.push_back("T3");
  }
  if (g.flags.extension && g.p < g.q) out.push_back("T4");
  if (g.flags.extension && hilbert_function(g.s1).nondecreasing) out.push_back("T5");
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return std::stoi(a.substr(1)) < std::stoi(b.substr(1));
  });
  return out;
}

}  // namespace

std::vector<Int> parse_generators(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::EmptyInput, "no generators given");
  std::vector<Int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const Int value = parse_integer(token);
    if (value == 0) fail(ErrorCode::InvalidArgument, "generators must be positive");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::pair<Int, Int>> parse_steps(std::string_view text) {
  std::vector<std::pair<Int, Int>> out;
  std::size_t start = 0;
  text = trim(text);
  if (text.empty()) return out;
  while (start <= text.size()) {
    const std::size_t semi = text.find(';', start);
    std::string_view step = trim(text.substr(start, semi == std::string_view::npos ? text.npos : semi - start));
    if (step.size() < 5 || step.front() != '(' || step.back() != ')') {
      fail(ErrorCode::InvalidArgument, "step " + std::to_string(out.size() + 1) + " is not of the form (q,p)");
    }
    step = step.substr(1, step.size() - 2);
    const std::size_t comma = step.find(',');
    if (comma == std::string_view::npos) {
      fail(ErrorCode::InvalidArgument, "step " + std::to_string(out.size() + 1) + " is not of the form (q,p)");
    }
    out.emplace_back(parse_integer(step.substr(0, comma)), parse_integer(step.substr(comma + 1)));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

CommandResult cmd_info(std::string_view gens, bool as_json) {
  try {
    const NumericalSemigroup s = semigroup_from(gens);
    const HilbertFunction h = hilbert_function(s);
    const std::size_t r = reduction_number(s);
    const bool sym = is_symmetric(s), cm = is_cm_tangent_cone(s), gor = is_gorenstein_tangent_cone(s);
    const std::size_t gap_count = s.gaps().size();
    if (as_json) {
      return ok(json{{"semigroup", to_json(s)},
                     {"gaps", gap_count},
                     {"reduction_number", r},
                     {"symmetric", sym},
                     {"cm_tangent_cone", cm},
                     {"gorenstein_tangent_cone", gor},
                     {"hilbert", to_json(h)}});
    }
    std::ostringstream out;
    out << "semigroup: " << name(s) << '\n'
        << "minimal generators: " << join(s.generators()) << '\n'
        << "multiplicity: " << s.multiplicity() << '\n'
        << "embedding dimension: " << s.embedding_dimension() << '\n'
        << "frobenius: " << s.frobenius() << '\n'
        << "conductor: " << s.conductor() << '\n'
        << "gaps: " << gap_count << '\n'
        << "reduction number: " << r << '\n'
        << "symmetric: " << yes_no(sym) << '\n'
        << "CM tangent cone: " << yes_no(cm) << '\n'
        << "Gorenstein tangent cone: " << yes_no(gor) << '\n'
        << "Hilbert function: " << hilbert_line(h) << '\n';
    return ok(out.str());
  } catch (const SemigroupError& e) {
    return invalid(e);
  }
}

CommandResult cmd_apery(std::string_view gens, std::optional<Int> base, bool as_json) {
  try {
    const NumericalSemigroup s = semigroup_from(gens);
    const Int x = base.value_or(s.multiplicity());
    const AperySet ap = apery_set(s, x);
    const BetaProfile beta = beta_profile(s, x);
    const std::vector<Int> plain = max_apery(s, x), m_max = max_m_apery(s, x);
    const Purity pure = purity(s, x);
    if (as_json) {
      return ok(json{{"base", x},
                     {"elements", ap.elements},
                     {"sorted", ap.sorted()},
                     {"beta", to_json(beta)},
                     {"max", plain},
                     {"max_m", m_max},
                     {"pure", pure.pure},
                     {"m_pure", pure.m_pure}});
    }
    std::ostringstream out;
    out << "AP(" << name(s) << ", " << x << ") by residue: " << join(ap.elements) << '\n'
        << "sorted: " << join(ap.sorted()) << '\n'
        << "beta: " << join_sizes(beta.beta) << " (d = " << beta.d << ")\n"
        << "Max: " << join(plain) << '\n'
        << "Max_M: " << join(m_max) << '\n'
        << "pure: " << yes_no(pure.pure) << ", M-pure: " << yes_no(pure.m_pure) << '\n';
    return ok(out.str());
  } catch (const SemigroupError& e) {
    return invalid(e);
  }
}

CommandResult cmd_table(std::string_view gens, bool as_json) {
  try {
    const NumericalSemigroup s = semigroup_from(gens);
    const AperyTable table = apery_table(s);
    if (as_json) return ok(to_json(table));
    std::ostringstream out;
    out << "Apery table of " << name(s) << " with respect to e = " << table.base << '\n'
        << render_table(table) << "reduction number: " << table.reduction_number << '\n';
    std::size_t true_landings = 0;
    for (const Landing& l : table.landings) {
      if (!l.after_rise) continue;
      ++true_landings;
      out << "landing: column " << l.column << " from row " << l.first_row << ", length " << l.length << '\n';
    }
    if (true_landings == 0) out << "no landings after a rise\n";
    return ok(out.str());
  } catch (const SemigroupError& e) {
    return invalid(e);
  }
}

CommandResult cmd_hilbert(std::string_view gens, bool as_json) {
  try {
    const NumericalSemigroup s = semigroup_from(gens);
    const HilbertFunction h = hilbert_function(s);
    if (as_json) return ok(json{{"generators", s.generators()}, {"hilbert", to_json(h)}});
    return ok("H(" + name(s) + "): " + hilbert_line(h) + "\n");
  } catch (const SemigroupError& e) {
    return invalid(e);
  }
}

CommandResult cmd_glue(std::string_view s1_text, std::string_view s2_text, Int p, Int q, bool analyze,
                       bool as_json) {
  try {
    const NumericalSemigroup s1 = semigroup_from(s1_text);
    const NumericalSemigroup s2 = semigroup_from(s2_text);
    GluingSpec g = [&] {
      try {
        return make_gluing(s1, s2, p, q);
      } catch (const SemigroupError& e) {
        throw SemigroupError(e.code(), std::string("not a gluing: ") + e.what());
      }
    }();
    if (as_json) {
      json payload = to_json(g);
      if (analyze) {
        payload["analysis"] = {{"s1", analysis(g.s1)},
                               {"s2", analysis(g.s2)},
                               {"glued", analysis(g.glued)},
                               {"applicable_theorems", applicable_theorems(g)}};
      }
      return ok(payload);
    }
    std::ostringstream out;
    out << "S1 = " << name(s1) << ", S2 = " << name(s2) << ", p = " << p << ", q = " << q << '\n'
        << "glued: " << name(g.glued) << '\n'
        << "multiplicity: " << g.glued.multiplicity() << '\n'
        << "extension: " << yes_no(g.flags.extension) << '\n'
        << "nice: " << yes_no(g.flags.nice) << '\n'
        << "specific: " << yes_no(g.flags.specific) << '\n';
    if (analyze) {
      const std::pair<const char*, const NumericalSemigroup*> parts[] = {
          {"S1", &g.s1}, {"S2", &g.s2}, {"S", &g.glued}};
      for (const auto& [label, s] : parts) {
        out << label << ": symmetric " << yes_no(is_symmetric(*s)) << ", G CM " << yes_no(is_cm_tangent_cone(*s))
            << ", G Gorenstein " << yes_no(is_gorenstein_tangent_cone(*s)) << ", H " << hilbert_line(hilbert_function(*s))
            << '\n';
      }
      std::vector<std::string> theorems = applicable_theorems(g);
      out << "applicable theorems:";
      for (const auto& t : theorems) out << ' ' << t;
      out << '\n';
    }
    return ok(out.str());
  } catch (const SemigroupError& e) {
    return invalid(e);
  }
}

CommandResult cmd_verify(std::string_view theorem, const verify::SamplerConfig& config, std::uint64_t seed,
                         bool as_json) {
  try {
    const verify::TheoremId id = verify::parse_theorem(theorem);
    const verify::TheoremReport report = verify::verify_theorem(id, config, seed);
    const int code = report.violations.empty() ? kExitOk : kExitViolation;
    if (as_json) return {code, verify::to_json(report).dump(2) + "\n", {}};
    std::ostringstream out;
    out << verify::to_string(id) << ": " << verify::describe(id) << '\n'
        << "seed " << seed << ", tried " << report.samples_tried << ", hypothesis hits " << report.hypothesis_hits
        << ", violations " << report.violations.size() << '\n';
    if (!report.violations.empty()) {
      const verify::Violation& v = report.violations.front();
      out << "first witness: " << json{{"instance", v.instance}, {"expected", v.expected}, {"got", v.got}}.dump()
          << '\n';
    }
    return {code, out.str(), {}};
  } catch (const SemigroupError& e) {
    return invalid(e);
  }
}

CommandResult cmd_free(std::string_view steps_text, bool as_json) {
  try {
    const FreeBuild built = build_free(parse_steps(steps_text));
    if (as_json) {
      json steps = json::array();
      for (const FreeStep& step : built.steps) {
        steps.push_back({{"q", step.q}, {"p", step.p}, {"flags", to_json(step.flags)}});
      }
      return ok(json{{"semigroup", to_json(built.semigroup)},
                     {"steps", steps},
                     {"cm_by_induction", built.cm_by_induction}});
    }
    std::ostringstream out;
    out << "free semigroup: " << name(built.semigroup) << '\n';
    for (std::size_t i = 0; i < built.steps.size(); ++i) {
      const FreeStep& step = built.steps[i];
      out << "step " << i + 1 << ": q = " << step.q << ", p = " << step.p << ", nice " << yes_no(step.flags.nice)
          << ", specific " << yes_no(step.flags.specific) << '\n';
    }
    if (built.cm_by_induction) out << "every step is a nice extension: G(S) is Cohen-Macaulay\n";
    return ok(out.str());
  } catch (const SemigroupError& e) {
    return invalid(e);
  }
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Numerical semigroups, tangent cones and gluings", "numsg"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::uint64_t seed = kDefaultSeed;
  app.add_flag("--json", as_json, "Emit JSON");
  app.add_option("--seed", seed, "Seed for randomized commands");

  std::string gens;
  auto* info = app.add_subcommand("info", "Invariants of a semigroup");
  info->add_option("generators", gens, "Comma-separated generators")->required();

  std::optional<Int> base;
  auto* apery = app.add_subcommand("apery", "Apéry set, beta profile and maximal elements");
  apery->add_option("generators", gens, "Comma-separated generators")->required();
  apery->add_option("-x,--base", base, "Apéry base (default: multiplicity)");

  auto* table = app.add_subcommand("table", "Apéry table of the powers of M");
  table->add_option("generators", gens, "Comma-separated generators")->required();

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of the tangent cone");
  hilbert->add_option("generators", gens, "Comma-separated generators")->required();

  std::string s1, s2;
  Int p = 0, q = 0;
  bool analyze = false;
  auto* glue = app.add_subcommand("glue", "Glue two semigroups");
  glue->add_option("--s1", s1, "Generators of S1")->required();
  glue->add_option("--s2", s2, "Generators of S2 (1 for N)")->required();
  glue->add_option("-p", p, "Multiplier of S2")->required();
  glue->add_option("-q", q, "Multiplier of S1")->required();
  glue->add_flag("--analyze", analyze, "Tangent-cone facts of S1, S2 and the gluing");

  std::string theorem;
  verify::SamplerConfig config;
  auto* check = app.add_subcommand("verify", "Sample a theorem and check it");
  check->add_option("--theorem", theorem, "T1..T10")->required();
  check->add_option("--samples", config.samples, "Hypothesis-satisfying samples to collect");
  check->add_option("--max-attempts", config.max_attempts, "Draw budget (0: 50 x samples)");
  check->add_option("--max-embdim", config.max_embedding_dim, "Largest embedding dimension");
  check->add_option("--max-gen", config.max_generator, "Largest generator");
  check->add_option("--max-pq", config.max_pq, "Largest p and q");
  check->add_option("--conductor-cap", config.conductor_cap, "Largest conductor of sampled semigroups");
  check->add_flag("--extensions-only", config.extensions_only, "Only glue with N");
  check->add_flag("--drop-specific", config.drop_specific, "Mutation: ignore the specific hypothesis");

  std::string steps;
  auto* free = app.add_subcommand("free", "Free semigroup by iterated extensions");
  free->add_option("--steps", steps, "Steps \"(q1,p1);(q2,p2);...\"")->required();

  std::vector<std::string> argv_storage{"numsg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return ok(app.help());
  } catch (const CLI::ParseError& e) {
    return {kExitInvalidInput, {}, "error: " + std::string(e.what()) + "\n"};
  }

  if (info->parsed()) return cmd_info(gens, as_json);
  if (apery->parsed()) return cmd_apery(gens, base, as_json);
  if (table->parsed()) return cmd_table(gens, as_json);
  if (hilbert->parsed()) return cmd_hilbert(gens, as_json);
  if (glue->parsed()) return cmd_glue(s1, s2, p, q, analyze, as_json);
  if (check->parsed()) return cmd_verify(theorem, config, seed, as_json);
  return cmd_free(steps, as_json);
}

}  // namespace numsg::cli
